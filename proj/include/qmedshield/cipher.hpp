#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "qmedshield/chaos.hpp"
#include "qmedshield/dna.hpp"
#include "qmedshield/image.hpp"

namespace qmedshield::cipher {

// Chaotic initial conditions / control parameters that constitute secret
// material: Henon (x0, y0, alpha, beta), hybrid map (x0, r), quantum
// logistic map (x0, y0, z0, eta, gamma).
inline constexpr int kSecretChaoticParameterCount = 11;

inline constexpr std::uint64_t kDefaultEps1 = 104729;
inline constexpr std::uint64_t kDefaultEps2 = 7919;
inline constexpr int kKeyFileVersion = 1;

// The full secret input to encrypt/decrypt: 18 sub-keys, the shared seed r,
// the two primes of the key-matrix derivation, and the map control
// parameters.
//
// Sub-key roles: k1,k2 Henon seeds; k3,k4,k5 quantum logistic seeds (scaled
// into (0,1], (0,0.1], (0,0.2]); k6..k9 data DNA rules; k10 hybrid map seed;
// k11..k14 key DNA rules; k15..k18 output DNA rules.
struct KeySet {
    std::array<double, 18> k{};
    double r = 0.0;
    std::uint64_t eps1 = kDefaultEps1;
    std::uint64_t eps2 = kDefaultEps2;
    double alpha = 1.4;
    double beta = 0.3;
    double eta = 4.0;
    double gamma = 6.0;
    long burn_in = 1000;

    // Throws KeyError naming the offending field.
    void validate() const;

    // x0 = 0.5*frac(k1 + r), y0 = 0.2*k2: the shared seed folds into the
    // Henon x seed and the box (0,0.5)x(0,0.2) stays inside the attractor
    // basin for alpha = 1.4.
    chaos::HenonParams henon_params() const;
    // x0 = k3, y0 = 0.1*k4, z0 = 0.2*k5.
    chaos::QuantumLogisticParams quantum_params() const;
    // x0 = k10, control r = 0.6 + 0.6*r (the shared seed picks the point in
    // the chaotic band).
    chaos::HybridParams hybrid_params() const;

    bool operator==(const KeySet&) const = default;
};

// Everything derived from a KeySet for one image shape.
struct CipherContext {
    int width = 0;
    int height = 0;
    PlanePermutation bp_key{};
    int selector = 0;                          // picks K_X, K_Y or K_Z
    std::array<KeyMatrix, 3> key_matrices;     // K_X, K_Y, K_Z
    KeyMatrix hybrid_key;                      // K_H
    dna::RuleSet data_rules{};
    dna::RuleSet key_rules{};
    dna::RuleSet out_rules{};
};

CipherContext derive_context(const KeySet& key, int w, int h);

GrayImage encrypt(const GrayImage& img, const CipherContext& ctx);
GrayImage decrypt(const GrayImage& cimg, const CipherContext& ctx);
GrayImage encrypt(const GrayImage& img, const KeySet& key);
GrayImage decrypt(const GrayImage& cimg, const KeySet& key);

// Deterministically expands a 32-byte seed into a KeySet within all invariant
// ranges.
KeySet keygen(std::span<const std::uint8_t, 32> seed);
// Draws the seed from the operating environment's secure randomness.
KeySet keygen();

// Line-oriented `name = value` text, 17 significant digits per real;
// round-trips bit-exactly through parse_key.
std::string serialize_key(const KeySet& key);
// Throws KeyError naming the missing/malformed/out-of-range field.
KeySet parse_key(const std::string& text);

// 64-bit FNV-1a of the canonical serialization, as 16 hex digits.
std::string key_fingerprint(const KeySet& key);

}  // namespace qmedshield::cipher
