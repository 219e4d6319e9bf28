#include "hyperwitness/state.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hyperwitness/errors.hpp"
#include "hyperwitness/linalg.hpp"

namespace hyperwitness {

namespace {

constexpr double kNormTol = 1e-12;
constexpr double kHermTol = 1e-12;
constexpr double kPositivityFloor = -1e-10;

void check_register(const std::vector<QubitLabel>& reg, std::size_t dim) {
    if (reg.empty()) throw InvalidParameter("empty register");
    auto sorted = reg;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw RegisterConflict("duplicate qubit label in register");
    }
    if (dim != (std::size_t{1} << reg.size())) {
        throw InvalidParameter("amplitude/entry count does not match register size");
    }
}

}  // namespace

StateVector::StateVector(std::vector<QubitLabel> reg, std::vector<cx> amplitudes)
    : register_(std::move(reg)), amplitudes_(std::move(amplitudes)) {
    check_register(register_, amplitudes_.size());
    double n = norm();
    if (std::abs(n - 1.0) > kNormTol) {
        throw InvalidParameter("state vector is not normalized");
    }
}

StateVector StateVector::basis(std::vector<QubitLabel> reg, std::size_t index) {
    std::vector<cx> amps(std::size_t{1} << reg.size(), cx{0.0, 0.0});
    if (index >= amps.size()) throw InvalidIndex("basis index out of range");
    amps[index] = cx{1.0, 0.0};
    return StateVector(std::move(reg), std::move(amps));
}

double StateVector::norm() const {
    double s = 0.0;
    for (const cx& a : amplitudes_) s += std::norm(a);
    return std::sqrt(s);
}

DensityMatrix::DensityMatrix(std::vector<QubitLabel> reg, std::vector<cx> entries)
    : register_(std::move(reg)), entries_(std::move(entries)) {
    dim_ = std::size_t{1} << register_.size();
    check_register(register_, dim_ == 0 ? 0 : entries_.size() / dim_);
    if (entries_.size() != dim_ * dim_) {
        throw InvalidParameter("entry count does not match register size");
    }
    cx trace{0.0, 0.0};
    for (std::size_t i = 0; i < dim_; ++i) {
        trace += at(i, i);
        for (std::size_t j = i; j < dim_; ++j) {
            if (std::abs(at(i, j) - std::conj(at(j, i))) > kHermTol) {
                throw InvalidDensityMatrix("matrix is not Hermitian");
            }
        }
    }
    if (std::abs(trace - cx{1.0, 0.0}) > kHermTol) {
        throw InvalidDensityMatrix("trace is not one");
    }
}

DensityMatrix DensityMatrix::maximally_mixed(std::vector<QubitLabel> reg) {
    std::size_t d = std::size_t{1} << reg.size();
    std::vector<cx> entries(d * d, cx{0.0, 0.0});
    for (std::size_t i = 0; i < d; ++i) entries[i * d + i] = cx{1.0 / static_cast<double>(d), 0.0};
    return DensityMatrix(std::move(reg), std::move(entries));
}

std::vector<double> DensityMatrix::eigenvalues() const {
    return linalg::hermitian_eigenvalues(entries_, dim_);
}

bool DensityMatrix::is_valid() const {
    auto eig = eigenvalues();
    return eig.front() >= kPositivityFloor;
}

Bipartition party_split() {
    Bipartition split;
    for (QubitLabel q : full_register()) {
        (q.party == Party::A ? split.side_a : split.side_b).insert(q);
    }
    return split;
}

StateVector make_bell(BellKind kind, double phase, Dof dof) {
    if (!std::isfinite(phase)) throw InvalidParameter("phase must be finite");
    const double r = 1.0 / std::numbers::sqrt2;
    cx e = std::polar(r, phase);
    std::vector<cx> amps(4, cx{0.0, 0.0});
    if (kind == BellKind::Phi) {
        amps[0b00] = cx{r, 0.0};
        amps[0b11] = e;
    } else {
        amps[0b01] = cx{r, 0.0};
        amps[0b10] = e;
    }
    return StateVector(dof_register(dof), std::move(amps));
}

StateVector hyper_state(double phase_pi, double phase_k, double phase_c) {
    return tensor({make_bell(BellKind::Phi, phase_pi, Dof::Pi),
                   make_bell(BellKind::Psi, phase_k, Dof::K),
                   make_bell(BellKind::Phi, phase_c, Dof::C)});
}

StateVector tensor(std::span<const StateVector> factors) {
    if (factors.empty()) throw InvalidParameter("tensor of zero factors");

    std::vector<QubitLabel> combined;
    std::vector<cx> amps{cx{1.0, 0.0}};
    for (const StateVector& f : factors) {
        for (QubitLabel q : f.qubits()) {
            if (std::find(combined.begin(), combined.end(), q) != combined.end()) {
                throw RegisterConflict("factor registers overlap at " + to_string(q));
            }
            combined.push_back(q);
        }
        std::vector<cx> next(amps.size() * f.dim());
        for (std::size_t i = 0; i < amps.size(); ++i) {
            for (std::size_t j = 0; j < f.dim(); ++j) {
                next[i * f.dim() + j] = amps[i] * f.amplitude(j);
            }
        }
        amps = std::move(next);
    }

    // Permute into canonical register order.
    std::vector<QubitLabel> target = combined;
    std::sort(target.begin(), target.end());
    std::size_t n = target.size();
    std::vector<std::size_t> source_pos(n);
    for (std::size_t t = 0; t < n; ++t) {
        source_pos[t] = static_cast<std::size_t>(
            std::find(combined.begin(), combined.end(), target[t]) - combined.begin());
    }
    std::vector<cx> reordered(amps.size());
    for (std::size_t idx = 0; idx < reordered.size(); ++idx) {
        std::size_t src = 0;
        for (std::size_t t = 0; t < n; ++t) {
            std::size_t bit = (idx >> (n - 1 - t)) & 1u;
            src |= bit << (n - 1 - source_pos[t]);
        }
        reordered[idx] = amps[src];
    }
    return StateVector(std::move(target), std::move(reordered));
}

StateVector tensor(std::initializer_list<StateVector> factors) {
    return tensor(std::span<const StateVector>(factors.begin(), factors.size()));
}

DensityMatrix density(const StateVector& state) {
    std::size_t d = state.dim();
    std::vector<cx> entries(d * d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            entries[i * d + j] = state.amplitude(i) * std::conj(state.amplitude(j));
        }
    }
    return DensityMatrix(state.qubits(), std::move(entries));
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::set<QubitLabel>& keep) {
    const auto& reg = rho.qubits();
    std::size_t n = reg.size();

    std::vector<std::size_t> kept, traced;
    for (std::size_t p = 0; p < n; ++p) {
        if (keep.count(reg[p])) {
            kept.push_back(p);
        } else {
            traced.push_back(p);
        }
    }
    if (kept.size() != keep.size()) {
        throw InvalidSubsystem("keep set contains labels outside the register");
    }
    if (kept.empty() || traced.empty()) {
        throw InvalidSubsystem("keep set must be a nonempty proper subset of the register");
    }

    auto compose = [&](std::size_t kept_idx, std::size_t traced_idx) {
        std::size_t full = 0;
        for (std::size_t a = 0; a < kept.size(); ++a) {
            std::size_t bit = (kept_idx >> (kept.size() - 1 - a)) & 1u;
            full |= bit << (n - 1 - kept[a]);
        }
        for (std::size_t a = 0; a < traced.size(); ++a) {
            std::size_t bit = (traced_idx >> (traced.size() - 1 - a)) & 1u;
            full |= bit << (n - 1 - traced[a]);
        }
        return full;
    };

    std::size_t dk = std::size_t{1} << kept.size();
    std::size_t dt = std::size_t{1} << traced.size();
    std::vector<cx> reduced(dk * dk, cx{0.0, 0.0});
    for (std::size_t i = 0; i < dk; ++i) {
        for (std::size_t j = 0; j < dk; ++j) {
            cx s{0.0, 0.0};
            for (std::size_t m = 0; m < dt; ++m) {
                s += rho.at(compose(i, m), compose(j, m));
            }
            reduced[i * dk + j] = s;
        }
    }

    std::vector<QubitLabel> kept_labels;
    kept_labels.reserve(kept.size());
    for (std::size_t p : kept) kept_labels.push_back(reg[p]);
    return DensityMatrix(std::move(kept_labels), std::move(reduced));
}

double von_neumann_entropy(const DensityMatrix& rho) {
    auto eig = rho.eigenvalues();
    if (eig.front() < kPositivityFloor) {
        throw InvalidDensityMatrix("matrix has a negative eigenvalue");
    }
    double s = 0.0;
    for (double lambda : eig) {
        if (lambda < 1e-12) continue;  // 0 log 0 := 0
        s -= lambda * std::log2(lambda);
    }
    return s;
}

double entropy_of_entanglement(const StateVector& state, const Bipartition& split) {
    const auto& reg = state.qubits();
    if (split.side_a.size() + split.side_b.size() != reg.size()) {
        throw InvalidSubsystem("bipartition does not cover the register");
    }
    for (QubitLabel q : reg) {
        bool in_a = split.side_a.count(q) > 0;
        bool in_b = split.side_b.count(q) > 0;
        if (in_a == in_b) {
            throw InvalidSubsystem("bipartition must assign each qubit to exactly one side");
        }
    }
    return von_neumann_entropy(partial_trace(density(state), split.side_a));
}

DensityMatrix mix(const DensityMatrix& rho1, const DensityMatrix& rho2, double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw InvalidProbability("mixing probability outside [0,1]");
    if (rho1.qubits() != rho2.qubits()) throw RegisterConflict("mix requires matching registers");
    std::vector<cx> entries(rho1.entries().size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        entries[i] = (1.0 - p) * rho1.entries()[i] + p * rho2.entries()[i];
    }
    return DensityMatrix(rho1.qubits(), std::move(entries));
}

}  // namespace hyperwitness
