#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "qmedshield/image.hpp"

namespace qmedshield::chaos {

// 2D Henon map x' = 1 - alpha*x^2 + y, y' = beta*x.
//
// alpha is restricted to (0, 1.5]: the classical chaotic value is 1.4 and
// values much above it throw generic seeds out of the attractor basin. beta
// is restricted to (0, 0.5] for the same reason.
struct HenonParams {
    double x0 = 0.0;
    double y0 = 0.0;
    double alpha = 1.4;
    double beta = 0.3;
    long burn_in = 1000;

    void validate() const;
};

// 1D hybrid logistic-sine map x' = r*x*(1-x) + 4r*sin(pi*x/4), reduced mod 1.
// Chaotic band r in [0.6, 1.2].
struct HybridParams {
    double x0 = 0.0;
    double r = 0.9;
    long burn_in = 1000;

    void validate() const;
};

// 3D quantum logistic map (dissipative, control eta, dissipation gamma).
// Iterated in complex arithmetic; real seeds keep the trajectory real.
// The x-iterate is reduced mod 1 each step to keep the map iterable: the raw
// recurrence escapes to -inf once x_n - x_n^2 < y_n, which happens within a
// few hundred steps for eta = 4.
struct QuantumLogisticParams {
    double x0 = 0.5;
    double y0 = 0.05;
    double z0 = 0.02;
    double eta = 4.0;
    double gamma = 6.0;
    long burn_in = 1000;

    void validate() const;
};

struct QuantumTriple {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

// n (x, y) pairs emitted after discarding burn_in iterates.
// Throws DivergenceError when |x| exceeds 1e6.
std::vector<std::pair<double, double>> henon_sequence(const HenonParams& p, std::size_t n);

// Argsort permutation (stable, ascending) of the 8 x-values following burn-in.
PlanePermutation derive_bitplane_key(const HenonParams& p);

// floor(frac(|y1|) * 3) clamped to {0,1,2}, y1 the first y-value after burn-in.
int derive_selector_key(const HenonParams& p);

// n values in [0,1) emitted after burn_in; each iterate is reduced mod 1
// before reuse and emission.
std::vector<double> hybrid_sequence(const HybridParams& p, std::size_t n);

// n (x, y, z) real parts after burn_in. Throws DivergenceError on magnitude
// overflow (> 1e6) or imaginary drift (>= 1e-9).
std::vector<QuantumTriple> quantum_logistic_sequence(const QuantumLogisticParams& p, std::size_t n);

// Key matrix entry (p,q) = mod(floor(eps1*seq[q*w+p] + eps2), 256).
// eps1 and eps2 must be prime; seq must hold at least w*h values.
KeyMatrix derive_key_matrix(std::span<const double> seq, std::uint64_t eps1, std::uint64_t eps2,
                            int w, int h);

bool is_prime(std::uint64_t n);

}  // namespace qmedshield::chaos
