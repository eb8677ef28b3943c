#pragma once

#include <complex>
#include <span>
#include <vector>

#include "qmedshield/image.hpp"

namespace qmedshield::qsim {

using Complex = std::complex<double>;

inline constexpr double kUnitarityTolerance = 1e-12;
inline constexpr double kBasisTolerance = 1e-9;

// Statevector over 1 or 2 qubits. Basis indices read the ket left to right,
// so for two qubits |q0 q1> has index 2*q0 + q1 (q0 is the most significant
// bit).
struct StateVector {
    std::vector<Complex> amplitudes;

    int num_qubits() const;
    // Throws std::invalid_argument unless the norm is 1 within 1e-12.
    void validate() const;

    static StateVector basis(int num_qubits, int index);
};

// Unitary gate on 1 or 2 qubits, row-major matrix.
struct Gate {
    int num_qubits = 1;
    std::vector<Complex> matrix;

    Complex at(int row, int col) const { return matrix[static_cast<std::size_t>(row) * dim() + col]; }
    int dim() const { return 1 << num_qubits; }

    // Throws std::invalid_argument unless G * G^dagger = I within 1e-12.
    void validate() const;

    static Gate hadamard();
    static Gate cnot();
};

// Applies g to the designated qubits of state. targets lists the qubits the
// gate acts on, in gate order (for CNOT: control first, target second).
StateVector apply_gate(const StateVector& state, const Gate& g, std::span<const int> targets);

// Index of the unit-amplitude basis vector. Throws NondeterministicStateError
// when no amplitude has magnitude >= 1 - 1e-9.
int measure_deterministic(const StateVector& state);

// Prepares |k, a>, applies CNOT(control = k qubit, target = a qubit), and
// measures the target. Equals a XOR k on all basis inputs.
int quantum_xor_bit(int a, int k);

// Byte-wise XOR of the image with the key matrix; self-inverse.
GrayImage diffuse(const GrayImage& img, const KeyMatrix& key);

}  // namespace qmedshield::qsim
