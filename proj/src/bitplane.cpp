#include "qmedshield/bitplane.hpp"

#include <array>
#include <stdexcept>

namespace qmedshield::bitplane {

bool is_permutation(const PlanePermutation& perm) {
    std::array<bool, 8> seen{};
    for (int v : perm) {
        if (v < 0 || v > 7 || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

BitPlanes decompose(const GrayImage& img) {
    BitPlanes bp;
    bp.width = img.width;
    bp.height = img.height;
    for (auto& plane : bp.planes) plane.resize(img.size());
    for (std::size_t i = 0; i < img.size(); ++i) {
        const std::uint8_t px = img.pixels[i];
        for (int k = 0; k < 8; ++k) bp.planes[k][i] = (px >> k) & 1;
    }
    return bp;
}

BitPlanes scramble(const BitPlanes& bp, const PlanePermutation& perm) {
    if (!is_permutation(perm))
        throw std::invalid_argument("plane permutation must be a bijection on {0..7}");
    BitPlanes out;
    out.width = bp.width;
    out.height = bp.height;
    for (int j = 0; j < 8; ++j) out.planes[j] = bp.planes[perm[j]];
    return out;
}

GrayImage reassemble(const BitPlanes& bp) {
    GrayImage img(bp.width, bp.height);
    for (std::size_t i = 0; i < img.size(); ++i) {
        std::uint8_t px = 0;
        for (int k = 0; k < 8; ++k) px |= static_cast<std::uint8_t>((bp.planes[k][i] & 1) << k);
        img.pixels[i] = px;
    }
    return img;
}

PlanePermutation inverse(const PlanePermutation& perm) {
    if (!is_permutation(perm))
        throw std::invalid_argument("plane permutation must be a bijection on {0..7}");
    PlanePermutation inv{};
    for (int j = 0; j < 8; ++j) inv[perm[j]] = j;
    return inv;
}

PlanePermutation compose(const PlanePermutation& sigma, const PlanePermutation& pi) {
    PlanePermutation out{};
    for (int j = 0; j < 8; ++j) out[j] = sigma[pi[j]];
    return out;
}

}  // namespace qmedshield::bitplane
