#pragma once

#include <complex>
#include <set>
#include <span>
#include <vector>

#include "hyperwitness/labels.hpp"

namespace hyperwitness {

using cx = std::complex<double>;

enum class BellKind { Phi, Psi };

// Pure state over a labeled register. Basis indices are big-endian in
// register order: register[0] is the most significant bit.
class StateVector {
public:
    StateVector(std::vector<QubitLabel> reg, std::vector<cx> amplitudes);

    static StateVector basis(std::vector<QubitLabel> reg, std::size_t index);

    std::size_t num_qubits() const { return register_.size(); }
    std::size_t dim() const { return amplitudes_.size(); }
    const std::vector<QubitLabel>& qubits() const { return register_; }
    const std::vector<cx>& amplitudes() const { return amplitudes_; }
    cx amplitude(std::size_t i) const { return amplitudes_[i]; }

    double norm() const;

private:
    std::vector<QubitLabel> register_;
    std::vector<cx> amplitudes_;
};

// Mixed state over a labeled register; entries are row-major.
// Hermiticity and unit trace are enforced on construction (1e-12);
// positivity is checked where it matters (entropy, validity tests).
class DensityMatrix {
public:
    DensityMatrix(std::vector<QubitLabel> reg, std::vector<cx> entries);

    static DensityMatrix maximally_mixed(std::vector<QubitLabel> reg);

    std::size_t num_qubits() const { return register_.size(); }
    std::size_t dim() const { return dim_; }
    const std::vector<QubitLabel>& qubits() const { return register_; }
    const std::vector<cx>& entries() const { return entries_; }
    cx at(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }

    // Eigenvalues in ascending order (cyclic Jacobi on the real embedding).
    std::vector<double> eigenvalues() const;

    // Hermitian, trace one, and spectrum >= -1e-10.
    bool is_valid() const;

private:
    std::vector<QubitLabel> register_;
    std::vector<cx> entries_;
    std::size_t dim_;
};

struct Bipartition {
    std::set<QubitLabel> side_a;
    std::set<QubitLabel> side_b;
};

// A|B split of the full 6-qubit register.
Bipartition party_split();

// (|00> + e^{i phase}|11>)/sqrt(2) or (|01> + e^{i phase}|10>)/sqrt(2)
// on the two qubits of one DOF.
StateVector make_bell(BellKind kind, double phase, Dof dof);

// |phi+(phase_pi)>_pi x |psi+(phase_k)>_k x |phi+(phase_c)>_c, 64-dim.
StateVector hyper_state(double phase_pi, double phase_k, double phase_c);

// Kronecker product of disjoint-register factors, reordered into canonical
// register order.
StateVector tensor(std::span<const StateVector> factors);
StateVector tensor(std::initializer_list<StateVector> factors);

DensityMatrix density(const StateVector& state);

// Reduced state over `keep`; `keep` must be a nonempty proper subset.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::set<QubitLabel>& keep);

// -tr(rho log2 rho) in bits; eigenvalues below 1e-12 are clamped to zero.
double von_neumann_entropy(const DensityMatrix& rho);

double entropy_of_entanglement(const StateVector& state, const Bipartition& split);

// (1-p) rho1 + p rho2.
DensityMatrix mix(const DensityMatrix& rho1, const DensityMatrix& rho2, double p);

}  // namespace hyperwitness
