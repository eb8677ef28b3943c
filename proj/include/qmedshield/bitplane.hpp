#pragma once

#include "qmedshield/image.hpp"

namespace qmedshield::bitplane {

// Splits an image into its 8 binary planes (plane k = bit k of each pixel).
BitPlanes decompose(const GrayImage& img);

// Permutes planes: output plane j is input plane perm[j].
// Throws std::invalid_argument when perm is not a bijection on {0..7}.
BitPlanes scramble(const BitPlanes& bp, const PlanePermutation& perm);

// pixel = sum_k plane_k * 2^k; exact inverse of decompose.
GrayImage reassemble(const BitPlanes& bp);

// inverse(perm)[perm[j]] == j, so scrambling with a permutation and then its
// inverse restores the input.
PlanePermutation inverse(const PlanePermutation& perm);

// compose(sigma, pi)[j] = sigma[pi[j]]: scramble(scramble(bp, sigma), pi) ==
// scramble(bp, compose(sigma, pi)).
PlanePermutation compose(const PlanePermutation& sigma, const PlanePermutation& pi);

bool is_permutation(const PlanePermutation& perm);

}  // namespace qmedshield::bitplane
