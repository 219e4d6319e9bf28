#pragma once

#include <map>

#include "hyperwitness/pauli.hpp"
#include "hyperwitness/state.hpp"

namespace hyperwitness {

struct NoiseModel {
    double white_fraction = 0.0;
    std::map<Dof, double> dephase;     // default 0
    std::map<Dof, double> visibility;  // default 1

    double dephase_for(Dof d) const;
    double visibility_for(Dof d) const;
};

// p * I/64 + (1-p) * rho, over the full register of rho.
DensityMatrix white_noise(const DensityMatrix& rho, double p);

// Pair phase-flip channel on one DOF, (1-q) rho + q (Z_A)rho(Z_A): leaves
// the z-type stabilizer of that DOF unchanged and scales the x-type one
// by (1-2q). (A Z on both qubits at once would commute with everything.)
DensityMatrix dephase_dof(const DensityMatrix& rho, Dof dof, double q);

// Tensor product over DOFs of ((1+v)/2)|bell><bell| + ((1-v)/2) phase-
// flipped partner; x-type stabilizer expectation v, z-type 1.
DensityMatrix visibility_state(const std::map<Dof, double>& v);

// Dephasing per DOF followed by white-noise admixture.
DensityMatrix apply_noise(const DensityMatrix& rho, const NoiseModel& model);

enum class NoiseChannel { White };

// The p* in [0,1] where evaluate_witness(channel(hyper_state(0,0,0), p), w)
// crosses zero, by bisection to width `tol`. Monotonicity in p is checked
// on a coarse grid first.
double witness_noise_threshold(WitnessKind w, NoiseChannel channel, double tol = 1e-6);

}  // namespace hyperwitness
