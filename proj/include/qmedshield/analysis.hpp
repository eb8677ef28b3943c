#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "qmedshield/cipher.hpp"
#include "qmedshield/image.hpp"

namespace qmedshield::analysis {

// chi^2(255, 0.05): the histogram passes the uniformity test below this.
inline constexpr double kChiSquareCritical = 293.0;

enum class Direction { Horizontal, Vertical, Diagonal };

std::array<std::uint64_t, 256> histogram(const GrayImage& img);

struct ChiSquareResult {
    double statistic = 0.0;
    bool pass = false;
    bool small_sample = false;  // W*H < 256: statistic is unreliable
};

ChiSquareResult chi_square(const GrayImage& img);

// Correlation of all adjacent pixel pairs along the direction. The default
// normalizes by sqrt(D(x)*D(y)) so the result lies in [-1,1]; the literal
// published form (divide by D(x)*D(y)) is available via
// literal_variance_form. Throws Error for constant input (zero variance).
double correlation(const GrayImage& img, Direction dir, bool literal_variance_form = false);

// Percentage of pixel positions where the images differ.
double npcr(const GrayImage& a, const GrayImage& b);

// Mean |a - b| normalized by 255, as a percentage.
double uaci(const GrayImage& a, const GrayImage& b);

// Shannon entropy (base 2) of the 256-bin histogram, in [0,8].
double entropy(const GrayImage& img);

struct ErrorMetrics {
    double mae = 0.0;
    double rmse = 0.0;
    double psnr = 0.0;  // +infinity when the images are identical
};

ErrorMetrics error_metrics(const GrayImage& plain, const GrayImage& cipher);

// Encrypts all-black and all-white 256x256 images; passes when both
// ciphertexts have entropy > 7.9 and pass the chi^2 test.
struct KpAttackResult {
    bool pass = false;
    double black_entropy = 0.0;
    double white_entropy = 0.0;
    double black_chi_square = 0.0;
    double white_chi_square = 0.0;
};

KpAttackResult kp_attack_test(const cipher::KeySet& key);

// Checks m1^m2 = c1^c2 pixel-wise; the scheme resists the chosen-plaintext
// attack when the equality fails on >= 99% of pixels. Identical inputs force
// the equality everywhere and are reported as degenerate, not as a failure.
struct CpAttackResult {
    bool pass = false;
    bool degenerate = false;
    double violation_percent = 0.0;
};

CpAttackResult cp_attack_test(const GrayImage& m1, const GrayImage& m2, const cipher::KeySet& key);

// Encrypts with key, decrypts with the quantum-map y0 perturbed by the given
// amount, and returns the NPCR between the correct and wrong decryptions.
double key_sensitivity_test(const GrayImage& img, const cipher::KeySet& key, double perturbation);

struct DirectionalCorrelation {
    double horizontal = 0.0;
    double vertical = 0.0;
    double diagonal = 0.0;
};

// All section-5 metrics for one plain/cipher pair.
struct AnalysisReport {
    int width = 0;
    int height = 0;
    std::array<std::uint64_t, 256> plain_histogram{};
    std::array<std::uint64_t, 256> cipher_histogram{};
    ChiSquareResult plain_chi_square;
    ChiSquareResult cipher_chi_square;
    DirectionalCorrelation plain_correlation;
    DirectionalCorrelation cipher_correlation;
    bool plain_correlation_defined = false;  // false for constant plaintexts
    double npcr_percent = 0.0;  // differential: one-pixel-modified re-encryption
    double uaci_percent = 0.0;
    double plain_entropy = 0.0;
    double cipher_entropy = 0.0;
    ErrorMetrics errors;
    KpAttackResult kp;
    CpAttackResult cp;
    double key_sensitivity_perturbation = 0.0;
    double key_sensitivity_npcr = 0.0;
};

// Runs the full battery. The differential NPCR/UACI re-encrypts the plaintext
// with one pixel's LSB flipped; the CP test pairs the plaintext with a
// deterministic scrambled copy; key sensitivity perturbs qlog y0 by -0.045
// scaled to the key (the published 0.05 -> 0.005 experiment).
AnalysisReport analyze(const GrayImage& plain, const GrayImage& cipher, const cipher::KeySet& key);

// JSON object with the documented fixed field names.
std::string report_to_json(const AnalysisReport& report);

}  // namespace qmedshield::analysis
