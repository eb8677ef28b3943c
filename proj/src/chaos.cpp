#include "qmedshield/chaos.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace qmedshield::chaos {

namespace {

constexpr double kDivergenceBound = 1e6;
constexpr double kImaginaryTolerance = 1e-9;

double frac(double v) { return v - std::floor(v); }

}  // namespace

void HenonParams::validate() const {
    if (!(alpha > 0.0 && alpha <= 1.5))
        throw std::invalid_argument("henon alpha must be in (0, 1.5]");
    if (!(beta > 0.0 && beta <= 0.5))
        throw std::invalid_argument("henon beta must be in (0, 0.5]");
    if (burn_in < 0) throw std::invalid_argument("henon burn_in must be >= 0");
    if (!std::isfinite(x0) || !std::isfinite(y0))
        throw std::invalid_argument("henon seeds must be finite");
}

void HybridParams::validate() const {
    if (!(r >= 0.6 && r <= 1.2))
        throw std::invalid_argument("hybrid r must be in [0.6, 1.2]");
    if (!(x0 > 0.0 && x0 < 1.0))
        throw std::invalid_argument("hybrid x0 must be in (0, 1)");
    if (burn_in < 0) throw std::invalid_argument("hybrid burn_in must be >= 0");
}

void QuantumLogisticParams::validate() const {
    if (!(x0 > 0.0 && x0 <= 1.0))
        throw std::invalid_argument("quantum logistic x0 must be in (0, 1]");
    if (!(y0 > 0.0 && y0 <= 0.1))
        throw std::invalid_argument("quantum logistic y0 must be in (0, 0.1]");
    if (!(z0 > 0.0 && z0 <= 0.2))
        throw std::invalid_argument("quantum logistic z0 must be in (0, 0.2]");
    if (!(eta > 0.0 && std::isfinite(eta)))
        throw std::invalid_argument("quantum logistic eta must be positive");
    if (!(gamma >= 6.0))
        throw std::invalid_argument("quantum logistic gamma must be >= 6");
    if (burn_in < 0) throw std::invalid_argument("quantum logistic burn_in must be >= 0");
}

std::vector<std::pair<double, double>> henon_sequence(const HenonParams& p, std::size_t n) {
    p.validate();
    if (n < 1) throw std::invalid_argument("henon_sequence requires n >= 1");

    std::vector<std::pair<double, double>> out;
    out.reserve(n);
    double x = p.x0;
    double y = p.y0;
    const std::size_t total = static_cast<std::size_t>(p.burn_in) + n;
    for (std::size_t i = 0; i < total; ++i) {
        const double xn = 1.0 - p.alpha * x * x + y;
        const double yn = p.beta * x;
        x = xn;
        y = yn;
        if (std::abs(x) > kDivergenceBound)
            throw DivergenceError("henon map diverged: |x| exceeds 1e6");
        if (i >= static_cast<std::size_t>(p.burn_in)) out.emplace_back(x, y);
    }
    return out;
}

PlanePermutation derive_bitplane_key(const HenonParams& p) {
    const auto pairs = henon_sequence(p, 8);
    PlanePermutation perm;
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(),
                     [&](int a, int b) { return pairs[a].first < pairs[b].first; });
    return perm;
}

int derive_selector_key(const HenonParams& p) {
    const auto pairs = henon_sequence(p, 8);
    const double y = std::abs(pairs[0].second);
    const int idx = static_cast<int>(std::floor(frac(y) * 3.0));
    return std::clamp(idx, 0, 2);
}

std::vector<double> hybrid_sequence(const HybridParams& p, std::size_t n) {
    p.validate();
    if (n < 1) throw std::invalid_argument("hybrid_sequence requires n >= 1");

    std::vector<double> out;
    out.reserve(n);
    double x = p.x0;
    const std::size_t total = static_cast<std::size_t>(p.burn_in) + n;
    for (std::size_t i = 0; i < total; ++i) {
        x = frac(p.r * x * (1.0 - x) + 4.0 * p.r * std::sin(std::numbers::pi * x / 4.0));
        if (i >= static_cast<std::size_t>(p.burn_in)) out.push_back(x);
    }
    return out;
}

std::vector<QuantumTriple> quantum_logistic_sequence(const QuantumLogisticParams& p,
                                                     std::size_t n) {
    p.validate();
    if (n < 1) throw std::invalid_argument("quantum_logistic_sequence requires n >= 1");

    using C = std::complex<double>;
    std::vector<QuantumTriple> out;
    out.reserve(n);

    C x(p.x0), y(p.y0), z(p.z0);
    const double e1 = std::exp(-p.gamma);
    const double e2 = std::exp(-2.0 * p.gamma);
    const std::size_t total = static_cast<std::size_t>(p.burn_in) + n;
    for (std::size_t i = 0; i < total; ++i) {
        const C xs = std::conj(x);
        const C zs = std::conj(z);
        C xn = p.eta * (x - std::norm(x)) - p.eta * y;
        const C yn = -y * e2 + e1 * p.eta * ((2.0 - x - xs) * y - x * zs - xs * z);
        const C zn = -z * e2 + e1 * p.eta * (2.0 * (1.0 - xs) * z - 2.0 * x * y - x);
        xn = C(xn.real() - std::floor(xn.real()), xn.imag());
        x = xn;
        y = yn;
        z = zn;

        if (std::abs(x.imag()) >= kImaginaryTolerance || std::abs(y.imag()) >= kImaginaryTolerance ||
            std::abs(z.imag()) >= kImaginaryTolerance)
            throw DivergenceError("quantum logistic map accumulated imaginary drift");
        if (std::abs(x) > kDivergenceBound || std::abs(y) > kDivergenceBound ||
            std::abs(z) > kDivergenceBound)
            throw DivergenceError("quantum logistic map diverged: magnitude exceeds 1e6");

        if (i >= static_cast<std::size_t>(p.burn_in))
            out.push_back({x.real(), y.real(), z.real()});
    }
    return out;
}

KeyMatrix derive_key_matrix(std::span<const double> seq, std::uint64_t eps1, std::uint64_t eps2,
                            int w, int h) {
    if (w < 1 || h < 1) throw std::invalid_argument("key matrix dimensions must be >= 1");
    if (!is_prime(eps1) || !is_prime(eps2))
        throw std::invalid_argument("eps1 and eps2 must be prime");
    const std::size_t needed = static_cast<std::size_t>(w) * h;
    if (seq.size() < needed)
        throw std::invalid_argument("sequence shorter than w*h");

    KeyMatrix m(w, h);
    for (std::size_t i = 0; i < needed; ++i) {
        const double v = std::floor(static_cast<double>(eps1) * seq[i] + static_cast<double>(eps2));
        if (!(std::abs(v) < 9e18))
            throw DivergenceError("key matrix derivation overflow");
        const long long f = static_cast<long long>(v);
        m.bytes[i] = static_cast<std::uint8_t>(((f % 256) + 256) % 256);
    }
    return m;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

}  // namespace qmedshield::chaos
