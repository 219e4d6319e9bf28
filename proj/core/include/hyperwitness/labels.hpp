#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace hyperwitness {

enum class Party : std::uint8_t { A = 0, B = 1 };

// The three degrees of freedom: polarization (pi), left/right momentum mode
// (k) and internal/external emission cone (c).
enum class Dof : std::uint8_t { Pi = 0, K = 1, C = 2 };

// One qubit of the two-party register. Canonical register order is
// (pi_A, pi_B, k_A, k_B, c_A, c_B); the default comparison realizes it.
struct QubitLabel {
    Dof dof;
    Party party;

    friend constexpr auto operator<=>(const QubitLabel&, const QubitLabel&) = default;
};

constexpr int canonical_index(QubitLabel q) {
    return 2 * static_cast<int>(q.dof) + static_cast<int>(q.party);
}

// The full 6-qubit register in canonical order.
std::vector<QubitLabel> full_register();

// The two qubits (A then B) of one degree of freedom.
std::vector<QubitLabel> dof_register(Dof dof);

std::string to_string(QubitLabel q);   // e.g. "pi_A"
std::string to_string(Dof dof);        // "pi", "k", "c"
QubitLabel label_from_string(const std::string& name);
Dof dof_from_string(const std::string& name);

}  // namespace hyperwitness
