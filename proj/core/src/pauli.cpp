#include "hyperwitness/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>

#include "hyperwitness/errors.hpp"

namespace hyperwitness {

char to_char(PauliLetter l) {
    switch (l) {
        case PauliLetter::I: return 'I';
        case PauliLetter::X: return 'X';
        case PauliLetter::Y: return 'Y';
        case PauliLetter::Z: return 'Z';
    }
    throw InvalidParameter("unknown Pauli letter");
}

PauliLetter pauli_from_char(char c) {
    switch (c) {
        case 'I': return PauliLetter::I;
        case 'X': return PauliLetter::X;
        case 'Y': return PauliLetter::Y;
        case 'Z': return PauliLetter::Z;
    }
    throw InvalidParameter(std::string("unknown Pauli letter: ") + c);
}

namespace {

// Single-qubit product: returns the resulting letter and the power k of the
// phase i^k picked up (XY = iZ, YX = -iZ, ...).
std::pair<PauliLetter, int> letter_product(PauliLetter a, PauliLetter b) {
    using P = PauliLetter;
    if (a == P::I) return {b, 0};
    if (b == P::I) return {a, 0};
    if (a == b) return {P::I, 0};
    if (a == P::X && b == P::Y) return {P::Z, 1};
    if (a == P::Y && b == P::X) return {P::Z, 3};
    if (a == P::Y && b == P::Z) return {P::X, 1};
    if (a == P::Z && b == P::Y) return {P::X, 3};
    if (a == P::Z && b == P::X) return {P::Y, 1};
    return {P::Y, 3};  // X * Z
}

}  // namespace

PauliString operator*(const PauliString& lhs, const PauliString& rhs) {
    PauliString out;
    out.coefficient = lhs.coefficient * rhs.coefficient;

    std::set<QubitLabel> support;
    for (const auto& [q, l] : lhs.letters) support.insert(q);
    for (const auto& [q, l] : rhs.letters) support.insert(q);

    int phase_power = 0;
    for (QubitLabel q : support) {
        auto [letter, k] = letter_product(lhs.letter_at(q), rhs.letter_at(q));
        phase_power = (phase_power + k) % 4;
        if (letter != PauliLetter::I) out.letters[q] = letter;
    }
    if (phase_power == 2) {
        out.coefficient = -out.coefficient;
    } else if (phase_power != 0) {
        throw NumericalInconsistency("Pauli product has an imaginary coefficient");
    }
    return out;
}

PauliString stabilizer(int index) {
    if (index < 1 || index > 6) throw InvalidIndex("stabilizer index must be in 1..6");
    Dof dof = static_cast<Dof>((index - 1) / 2);
    bool x_type = (index % 2) == 1;
    PauliString s;
    PauliLetter l = x_type ? PauliLetter::X : PauliLetter::Z;
    s.letters[{dof, Party::A}] = l;
    s.letters[{dof, Party::B}] = l;
    s.coefficient = (index == 4) ? -1.0 : 1.0;  // S4 = -zz
    return s;
}

namespace {

struct CompiledPauli {
    std::size_t flip_mask = 0;   // X and Y letters flip these bits
    std::size_t z_mask = 0;      // Z and Y letters pick up (-1)^bit
    int y_count = 0;
    double coefficient = 1.0;
    std::size_t n = 0;
};

CompiledPauli compile(const std::vector<QubitLabel>& reg, const PauliString& op) {
    CompiledPauli c;
    c.coefficient = op.coefficient;
    c.n = reg.size();
    for (const auto& [q, letter] : op.letters) {
        auto it = std::find(reg.begin(), reg.end(), q);
        if (it == reg.end()) {
            throw RegisterConflict("operator acts on " + to_string(q) +
                                   " which is not in the state register");
        }
        std::size_t shift = c.n - 1 - static_cast<std::size_t>(it - reg.begin());
        switch (letter) {
            case PauliLetter::I: break;
            case PauliLetter::X: c.flip_mask |= std::size_t{1} << shift; break;
            case PauliLetter::Z: c.z_mask |= std::size_t{1} << shift; break;
            case PauliLetter::Y:
                c.flip_mask |= std::size_t{1} << shift;
                c.z_mask |= std::size_t{1} << shift;
                ++c.y_count;
                break;
        }
    }
    return c;
}

// Amplitude factor of P|j> = factor * |j ^ flip_mask>.
cx basis_factor(const CompiledPauli& c, std::size_t j) {
    int z_parity = std::popcount(j & c.z_mask) & 1;
    double sign = z_parity ? -1.0 : 1.0;
    // Each Y contributes i, and its (-1)^bit is already counted in z_mask.
    cx y_phase{1.0, 0.0};
    switch (c.y_count % 4) {
        case 0: y_phase = {1.0, 0.0}; break;
        case 1: y_phase = {0.0, 1.0}; break;
        case 2: y_phase = {-1.0, 0.0}; break;
        case 3: y_phase = {0.0, -1.0}; break;
    }
    return c.coefficient * sign * y_phase;
}

double real_checked(cx value) {
    if (std::abs(value.imag()) > 1e-8) {
        throw NumericalInconsistency("expectation has a non-negligible imaginary part");
    }
    return value.real();
}

}  // namespace

double pauli_expectation(const StateVector& state, const PauliString& op) {
    CompiledPauli c = compile(state.qubits(), op);
    cx acc{0.0, 0.0};
    for (std::size_t j = 0; j < state.dim(); ++j) {
        cx a = state.amplitude(j);
        if (a == cx{0.0, 0.0}) continue;
        acc += std::conj(state.amplitude(j ^ c.flip_mask)) * basis_factor(c, j) * a;
    }
    return real_checked(acc);
}

double pauli_expectation(const DensityMatrix& rho, const PauliString& op) {
    CompiledPauli c = compile(rho.qubits(), op);
    cx acc{0.0, 0.0};
    for (std::size_t j = 0; j < rho.dim(); ++j) {
        acc += basis_factor(c, j) * rho.at(j, j ^ c.flip_mask);
    }
    return real_checked(acc);
}

double expectation(const StateVector& state, const ObservableSum& op) {
    double v = op.constant;
    for (const auto& term : op.terms) v += term.weight * pauli_expectation(state, term.op);
    return v;
}

double expectation(const DensityMatrix& rho, const ObservableSum& op) {
    double v = op.constant;
    for (const auto& term : op.terms) v += term.weight * pauli_expectation(rho, term.op);
    return v;
}

std::string to_string(WitnessKind w) {
    switch (w) {
        case WitnessKind::Wpi: return "Wpi";
        case WitnessKind::Wk: return "Wk";
        case WitnessKind::Wc: return "Wc";
        case WitnessKind::W2: return "W2";
        case WitnessKind::W3: return "W3";
    }
    throw InvalidParameter("unknown witness kind");
}

WitnessKind witness_from_string(const std::string& name) {
    if (name == "Wpi") return WitnessKind::Wpi;
    if (name == "Wk") return WitnessKind::Wk;
    if (name == "Wc") return WitnessKind::Wc;
    if (name == "W2") return WitnessKind::W2;
    if (name == "W3") return WitnessKind::W3;
    throw InvalidParameter("unknown witness kind: " + name);
}

namespace {

PauliString identity_string() { return PauliString{}; }

PauliString index_set_product(const std::vector<int>& indices) {
    PauliString p = identity_string();
    for (int i : indices) p = p * stabilizer(i);
    return p;
}

}  // namespace

WitnessExpansion witness_stabilizer_expansion(WitnessKind w, WitnessForm form) {
    WitnessExpansion e;
    switch (w) {
        case WitnessKind::Wpi:
        case WitnessKind::Wk:
        case WitnessKind::Wc: {
            int base = w == WitnessKind::Wpi ? 1 : (w == WitnessKind::Wk ? 3 : 5);
            double c = form == WitnessForm::AsPrinted ? 2.0 : 1.0;
            e.constant = 1.0;
            e.terms.push_back({-c, {base}});
            e.terms.push_back({-c, {base + 1}});
            return e;
        }
        case WitnessKind::W2: {
            // 3 - 2 [prod (S_even+1)/2 + prod (S_odd+1)/2], binomially expanded:
            // the two empty subsets fold into the constant.
            e.constant = 3.0 - 0.25 - 0.25;
            for (int first : {2, 1}) {
                for (int bits = 1; bits < 8; ++bits) {
                    std::vector<int> subset;
                    for (int k = 0; k < 3; ++k) {
                        if (bits & (1 << k)) subset.push_back(first + 2 * k);
                    }
                    std::sort(subset.begin(), subset.end());
                    e.terms.push_back({-0.25, std::move(subset)});
                }
            }
            return e;
        }
        case WitnessKind::W3: {
            // 2 - 3 prod (1 + S_odd + S_even)/3: 27 product terms, the
            // all-identity one folding into the constant.
            e.constant = 2.0 - 1.0 / 9.0;
            for (int choice = 1; choice < 27; ++choice) {
                int c0 = choice % 3, c1 = (choice / 3) % 3, c2 = choice / 9;
                std::vector<int> subset;
                if (c0) subset.push_back(c0 == 1 ? 1 : 2);
                if (c1) subset.push_back(c1 == 1 ? 3 : 4);
                if (c2) subset.push_back(c2 == 1 ? 5 : 6);
                e.terms.push_back({-1.0 / 9.0, std::move(subset)});
            }
            return e;
        }
    }
    throw InvalidParameter("unknown witness kind");
}

ObservableSum witness_operator(WitnessKind w, WitnessForm form) {
    WitnessExpansion e = witness_stabilizer_expansion(w, form);
    ObservableSum op;
    op.constant = e.constant;
    for (const auto& [weight, indices] : e.terms) {
        op.terms.push_back({weight, index_set_product(indices)});
    }
    return op;
}

namespace {

template <typename State>
double evaluate_witness_impl(const State& state, WitnessKind w, WitnessForm form) {
    switch (w) {
        case WitnessKind::Wpi:
        case WitnessKind::Wk:
        case WitnessKind::Wc:
            return expectation(state, witness_operator(w, form));
        case WitnessKind::W2: {
            double even = 1.0, odd = 1.0;
            for (int k = 1; k <= 3; ++k) {
                even *= (pauli_expectation(state, stabilizer(2 * k)) + 1.0) / 2.0;
                odd *= (pauli_expectation(state, stabilizer(2 * k - 1)) + 1.0) / 2.0;
            }
            return 3.0 - 2.0 * (even + odd);
        }
        case WitnessKind::W3: {
            double prod = 1.0;
            for (int k = 1; k <= 3; ++k) {
                prod *= (1.0 + pauli_expectation(state, stabilizer(2 * k - 1)) +
                         pauli_expectation(state, stabilizer(2 * k))) /
                        3.0;
            }
            return 2.0 - 3.0 * prod;
        }
    }
    throw InvalidParameter("unknown witness kind");
}

}  // namespace

double evaluate_witness(const StateVector& state, WitnessKind w, WitnessForm form) {
    return evaluate_witness_impl(state, w, form);
}

double evaluate_witness(const DensityMatrix& rho, WitnessKind w, WitnessForm form) {
    return evaluate_witness_impl(rho, w, form);
}

namespace {

int min_cover(const std::vector<std::uint32_t>& masks, std::uint32_t covered,
              std::uint32_t full, int depth, int best) {
    if (covered == full) return depth;
    if (depth + 1 >= best) return best;

    // Branch on the uncovered term with the fewest covering assignments.
    std::uint32_t remaining = full & ~covered;
    int pick = -1, pick_count = INT32_MAX;
    for (int t = 0; t < 32; ++t) {
        if (!(remaining & (1u << t))) continue;
        int count = 0;
        for (std::uint32_t m : masks) {
            if (m & (1u << t)) ++count;
        }
        if (count == 0) return best;  // uncoverable
        if (count < pick_count) {
            pick = t;
            pick_count = count;
        }
    }
    for (std::uint32_t m : masks) {
        if (!(m & (1u << pick))) continue;
        best = min_cover(masks, covered | m, full, depth + 1, best);
    }
    return best;
}

}  // namespace

int settings_required(const ObservableSum& op) {
    // Qubits touched by any non-identity letter.
    std::vector<QubitLabel> qubits;
    std::vector<std::map<QubitLabel, PauliLetter>> patterns;
    for (const auto& term : op.terms) {
        std::map<QubitLabel, PauliLetter> pat;
        for (const auto& [q, l] : term.op.letters) {
            if (l == PauliLetter::I) continue;
            if (l == PauliLetter::Y) {
                throw UnsupportedBasis("settings accounting covers X/Z terms only");
            }
            pat[q] = l;
            if (std::find(qubits.begin(), qubits.end(), q) == qubits.end()) qubits.push_back(q);
        }
        if (pat.empty()) continue;  // identity term needs no setting
        if (std::find(patterns.begin(), patterns.end(), pat) == patterns.end()) {
            patterns.push_back(pat);
        }
    }
    if (patterns.empty()) return 0;

    std::size_t m = qubits.size();
    std::uint32_t full = (patterns.size() >= 32) ? ~0u : ((1u << patterns.size()) - 1);

    // Coverage mask of each of the 2^m local X/Z assignments (bit set -> Z).
    std::vector<std::uint32_t> masks;
    for (std::size_t assign = 0; assign < (std::size_t{1} << m); ++assign) {
        std::uint32_t cover = 0;
        for (std::size_t t = 0; t < patterns.size(); ++t) {
            bool ok = true;
            for (const auto& [q, l] : patterns[t]) {
                std::size_t pos = static_cast<std::size_t>(
                    std::find(qubits.begin(), qubits.end(), q) - qubits.begin());
                bool z_assigned = (assign >> pos) & 1u;
                if ((l == PauliLetter::Z) != z_assigned) {
                    ok = false;
                    break;
                }
            }
            if (ok) cover |= 1u << t;
        }
        if (cover) masks.push_back(cover);
    }

    // Drop dominated assignments.
    std::vector<std::uint32_t> reduced;
    for (std::size_t i = 0; i < masks.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < masks.size() && !dominated; ++j) {
            if (i == j) continue;
            if ((masks[i] & masks[j]) == masks[i] && (masks[i] != masks[j] || j < i)) {
                dominated = true;
            }
        }
        if (!dominated) reduced.push_back(masks[i]);
    }

    return min_cover(reduced, 0, full, 0, static_cast<int>(patterns.size()) + 1);
}

}  // namespace hyperwitness
