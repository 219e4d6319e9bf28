#pragma once

#include <map>
#include <string>
#include <vector>

#include "hyperwitness/state.hpp"

namespace hyperwitness {

enum class PauliLetter : std::uint8_t { I, X, Y, Z };

char to_char(PauliLetter l);
PauliLetter pauli_from_char(char c);

// Signed tensor product of single-qubit Paulis. Qubits absent from
// `letters` act as identity.
struct PauliString {
    std::map<QubitLabel, PauliLetter> letters;
    double coefficient = 1.0;

    PauliLetter letter_at(QubitLabel q) const {
        auto it = letters.find(q);
        return it == letters.end() ? PauliLetter::I : it->second;
    }
};

// Pauli product with phase tracking; the combined phase must be real
// (always true for commuting strings), otherwise NumericalInconsistency.
PauliString operator*(const PauliString& lhs, const PauliString& rhs);

// Real linear combination of Pauli strings plus a constant (identity) part.
struct ObservableSum {
    struct Term {
        double weight;
        PauliString op;
    };
    std::vector<Term> terms;
    double constant = 0.0;
};

// S1..S6 of the hyperentangled state: S1=XX(pi), S2=ZZ(pi), S3=XX(k),
// S4=-ZZ(k), S5=XX(c), S6=ZZ(c).
PauliString stabilizer(int index);

double pauli_expectation(const StateVector& state, const PauliString& op);
double pauli_expectation(const DensityMatrix& rho, const PauliString& op);

double expectation(const StateVector& state, const ObservableSum& op);
double expectation(const DensityMatrix& rho, const ObservableSum& op);

enum class WitnessKind { Wpi, Wk, Wc, W2, W3 };

// The per-DOF witnesses appear in print with a factor 2 on each correlator,
// which contradicts the reported numbers; the coefficient-1 form is the
// evaluated default. W2/W3 have a single form and ignore this flag.
enum class WitnessForm { AsPrinted, AsEvaluated };

std::string to_string(WitnessKind w);
WitnessKind witness_from_string(const std::string& name);

// Witness written as a constant plus weighted products of the signed
// stabilizers, keyed by sorted index sets. This is the combination the
// measured-table evaluation consumes.
struct WitnessExpansion {
    double constant = 0.0;
    std::vector<std::pair<double, std::vector<int>>> terms;
};

WitnessExpansion witness_stabilizer_expansion(WitnessKind w,
                                              WitnessForm form = WitnessForm::AsEvaluated);

// Fully expanded operator form: per-DOF witnesses are 1 - c S_odd - c S_even;
// W2 expands into a constant plus 14 stabilizer-product terms of weight
// -1/4; W3 into a constant plus 26 terms of weight -1/9.
ObservableSum witness_operator(WitnessKind w, WitnessForm form = WitnessForm::AsEvaluated);

// Witness value on a state. Per-DOF witnesses are operator expectations.
// W2/W3 are evaluated from the six single-stabilizer expectations through
// the product forms 3 - 2(prod (<S_even>+1)/2 + prod (<S_odd>+1)/2) and
// 2 - 3 prod (1+<S_odd>+<S_even>)/3, the same combination the measured
// thresholds and noise curves are defined by.
double evaluate_witness(const StateVector& state, WitnessKind w,
                        WitnessForm form = WitnessForm::AsEvaluated);
double evaluate_witness(const DensityMatrix& rho, WitnessKind w,
                        WitnessForm form = WitnessForm::AsEvaluated);

// Minimal number of local {X,Z} basis assignments needed so that every
// Pauli term of `op` is diagonal in at least one assignment. Exact set
// cover over the <= 2^6 assignments; Y letters are rejected.
int settings_required(const ObservableSum& op);

}  // namespace hyperwitness
