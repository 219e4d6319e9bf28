#include "hyperwitness/noise.hpp"

#include <bit>
#include <cmath>
#include <numbers>

#include "hyperwitness/errors.hpp"

namespace hyperwitness {

namespace {

void check_probability(double p, const char* what) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw InvalidProbability(std::string(what) + " must lie in [0,1]");
    }
}

}  // namespace

double NoiseModel::dephase_for(Dof d) const {
    auto it = dephase.find(d);
    return it == dephase.end() ? 0.0 : it->second;
}

double NoiseModel::visibility_for(Dof d) const {
    auto it = visibility.find(d);
    return it == visibility.end() ? 1.0 : it->second;
}

DensityMatrix white_noise(const DensityMatrix& rho, double p) {
    check_probability(p, "white-noise fraction");
    return mix(rho, DensityMatrix::maximally_mixed(rho.qubits()), p);
}

DensityMatrix dephase_dof(const DensityMatrix& rho, Dof dof, double q) {
    check_probability(q, "dephasing strength");
    const auto& reg = rho.qubits();
    std::size_t n = reg.size();

    // Phase flips on the pair are equivalent to a Z on either single qubit
    // of the DOF (Z x Z commutes with every stabilizer and does nothing), so
    // the channel applies Z on the A-side qubit: the z-type stabilizer is
    // untouched and the x-type one picks up the usual (1-2q) factor.
    std::size_t dof_mask = 0, z_mask = 0;
    for (std::size_t p = 0; p < n; ++p) {
        if (reg[p].dof != dof) continue;
        dof_mask |= std::size_t{1} << (n - 1 - p);
        if (reg[p].party == Party::A) z_mask = std::size_t{1} << (n - 1 - p);
    }
    if (std::popcount(dof_mask) != 2 || z_mask == 0) {
        throw InvalidSubsystem("state register does not contain both qubits of the DOF");
    }

    std::size_t d = rho.dim();
    std::vector<cx> entries(d * d);
    for (std::size_t i = 0; i < d; ++i) {
        int si = std::popcount(i & z_mask) & 1;
        for (std::size_t j = 0; j < d; ++j) {
            int sj = std::popcount(j & z_mask) & 1;
            double flip_sign = (si ^ sj) ? -1.0 : 1.0;
            entries[i * d + j] = ((1.0 - q) + q * flip_sign) * rho.at(i, j);
        }
    }
    return DensityMatrix(reg, std::move(entries));
}

DensityMatrix visibility_state(const std::map<Dof, double>& v) {
    std::vector<cx> entries{cx{1.0, 0.0}};
    std::size_t d = 1;
    std::vector<QubitLabel> reg;

    for (Dof dof : {Dof::Pi, Dof::K, Dof::C}) {
        double vis = 1.0;
        if (auto it = v.find(dof); it != v.end()) vis = it->second;
        check_probability(vis, "visibility");

        BellKind kind = (dof == Dof::K) ? BellKind::Psi : BellKind::Phi;
        DensityMatrix pair = mix(density(make_bell(kind, 0.0, dof)),
                                 density(make_bell(kind, std::numbers::pi, dof)),
                                 (1.0 - vis) / 2.0);

        std::size_t pd = pair.dim();
        std::vector<cx> next(entries.size() * pd * pd);
        std::size_t nd = d * pd;
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) {
                for (std::size_t a = 0; a < pd; ++a) {
                    for (std::size_t b = 0; b < pd; ++b) {
                        next[(i * pd + a) * nd + (j * pd + b)] =
                            entries[i * d + j] * pair.at(a, b);
                    }
                }
            }
        }
        entries = std::move(next);
        d = nd;
        for (QubitLabel q : pair.qubits()) reg.push_back(q);
    }
    return DensityMatrix(std::move(reg), std::move(entries));
}

DensityMatrix apply_noise(const DensityMatrix& rho, const NoiseModel& model) {
    check_probability(model.white_fraction, "white-noise fraction");
    DensityMatrix out = rho;
    for (Dof dof : {Dof::Pi, Dof::K, Dof::C}) {
        double q = model.dephase_for(dof);
        if (q > 0.0) out = dephase_dof(out, dof, q);
    }
    if (model.white_fraction > 0.0) out = white_noise(out, model.white_fraction);
    return out;
}

double witness_noise_threshold(WitnessKind w, NoiseChannel channel, double tol) {
    if (!(tol > 0.0)) throw InvalidParameter("tolerance must be positive");
    if (channel != NoiseChannel::White) throw InvalidParameter("unknown noise channel");

    DensityMatrix ideal = density(hyper_state(0.0, 0.0, 0.0));
    auto value_at = [&](double p) {
        return evaluate_witness(white_noise(ideal, p), w, WitnessForm::AsEvaluated);
    };

    double prev = value_at(0.0);
    for (int i = 1; i <= 10; ++i) {
        double cur = value_at(0.1 * i);
        if (cur < prev - 1e-12) {
            throw NoThreshold("witness is not monotone in the noise fraction");
        }
        prev = cur;
    }
    double lo = 0.0, hi = 1.0;
    if (!(value_at(lo) < 0.0 && value_at(hi) > 0.0)) {
        throw NoThreshold("witness does not change sign on [0,1]");
    }
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        (value_at(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace hyperwitness
