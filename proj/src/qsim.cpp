#include "qmedshield/qsim.hpp"

#include <cmath>
#include <stdexcept>

namespace qmedshield::qsim {

namespace {

// Bit of qubit t in basis index b, reading the ket left to right.
int qubit_bit(int basis, int qubit, int num_qubits) {
    return (basis >> (num_qubits - 1 - qubit)) & 1;
}

}  // namespace

int StateVector::num_qubits() const {
    switch (amplitudes.size()) {
        case 2: return 1;
        case 4: return 2;
        default: throw std::invalid_argument("state vector must have 2 or 4 amplitudes");
    }
}

void StateVector::validate() const {
    double norm2 = 0.0;
    for (const Complex& a : amplitudes) norm2 += std::norm(a);
    if (std::abs(norm2 - 1.0) > kUnitarityTolerance)
        throw std::invalid_argument("state vector norm differs from 1");
}

StateVector StateVector::basis(int num_qubits, int index) {
    if (num_qubits < 1 || num_qubits > 2)
        throw std::invalid_argument("supported register sizes are 1 and 2 qubits");
    const int dim = 1 << num_qubits;
    if (index < 0 || index >= dim) throw std::invalid_argument("basis index out of range");
    StateVector s;
    s.amplitudes.assign(dim, Complex(0.0, 0.0));
    s.amplitudes[index] = Complex(1.0, 0.0);
    return s;
}

void Gate::validate() const {
    if (num_qubits < 1 || num_qubits > 2)
        throw std::invalid_argument("supported gate sizes are 1 and 2 qubits");
    const int d = dim();
    if (matrix.size() != static_cast<std::size_t>(d) * d)
        throw std::invalid_argument("gate matrix size does not match qubit count");
    // G * G^dagger = I
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            Complex sum(0.0, 0.0);
            for (int k = 0; k < d; ++k) sum += at(i, k) * std::conj(at(j, k));
            const Complex expected = (i == j) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
            if (std::abs(sum - expected) > kUnitarityTolerance)
                throw std::invalid_argument("gate matrix is not unitary");
        }
    }
}

Gate Gate::hadamard() {
    const double s = 1.0 / std::sqrt(2.0);
    Gate g;
    g.num_qubits = 1;
    g.matrix = {Complex(s), Complex(s), Complex(s), Complex(-s)};
    return g;
}

Gate Gate::cnot() {
    Gate g;
    g.num_qubits = 2;
    g.matrix.assign(16, Complex(0.0, 0.0));
    g.matrix[0 * 4 + 0] = 1.0;
    g.matrix[1 * 4 + 1] = 1.0;
    g.matrix[2 * 4 + 3] = 1.0;
    g.matrix[3 * 4 + 2] = 1.0;
    return g;
}

StateVector apply_gate(const StateVector& state, const Gate& g, std::span<const int> targets) {
    const int n = state.num_qubits();
    g.validate();
    if (static_cast<int>(targets.size()) != g.num_qubits)
        throw DimensionError("target count does not match gate arity");
    if (g.num_qubits > n) throw DimensionError("gate is larger than the register");
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (targets[i] < 0 || targets[i] >= n) throw DimensionError("target qubit out of range");
        for (std::size_t j = i + 1; j < targets.size(); ++j)
            if (targets[i] == targets[j]) throw DimensionError("target qubits must be distinct");
    }

    const int dim = 1 << n;
    const int gdim = g.dim();
    StateVector out;
    out.amplitudes.assign(dim, Complex(0.0, 0.0));

    // For each basis index, the bits at the target qubits form the local
    // index into the gate; the remaining bits are untouched.
    for (int b = 0; b < dim; ++b) {
        int local = 0;
        for (std::size_t t = 0; t < targets.size(); ++t)
            local = (local << 1) | qubit_bit(b, targets[t], n);
        Complex acc(0.0, 0.0);
        for (int l = 0; l < gdim; ++l) {
            // source basis index: b with target bits replaced by l's bits
            int src = b;
            for (std::size_t t = 0; t < targets.size(); ++t) {
                const int bit = (l >> (targets.size() - 1 - t)) & 1;
                const int pos = n - 1 - targets[t];
                src = (src & ~(1 << pos)) | (bit << pos);
            }
            acc += g.at(local, l) * state.amplitudes[src];
        }
        out.amplitudes[b] = acc;
    }
    return out;
}

int measure_deterministic(const StateVector& state) {
    for (std::size_t i = 0; i < state.amplitudes.size(); ++i) {
        if (std::abs(state.amplitudes[i]) >= 1.0 - kBasisTolerance)
            return static_cast<int>(i);
    }
    throw NondeterministicStateError(
        "state is not a computational basis state; measurement would not be reproducible");
}

int quantum_xor_bit(int a, int k) {
    if ((a & ~1) || (k & ~1)) throw std::invalid_argument("quantum_xor_bit inputs must be bits");
    StateVector s = StateVector::basis(2, (k << 1) | a);  // |k, a>
    const int targets[] = {0, 1};                         // control = k qubit, target = a qubit
    s = apply_gate(s, Gate::cnot(), targets);
    const int outcome = measure_deterministic(s);
    return outcome & 1;  // the target qubit
}

GrayImage diffuse(const GrayImage& img, const KeyMatrix& key) {
    if (img.width != key.width || img.height != key.height)
        throw DimensionError("image and key matrix dimensions differ");
    GrayImage out = img;
    for (std::size_t i = 0; i < out.size(); ++i) out.pixels[i] ^= key.bytes[i];
    return out;
}

}  // namespace qmedshield::qsim
