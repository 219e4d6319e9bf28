#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hyperwitness/measured_value.hpp"
#include "hyperwitness/pauli.hpp"

namespace hyperwitness {

// Measured expectation values keyed by sorted stabilizer-index sets, e.g.
// {1}, {1,3}, {2,4,6}. Keys mix no parities: products are all-odd (x-type)
// or all-even (z-type), matching what the experiment can tabulate.
struct StabilizerTable {
    std::map<std::vector<int>, MeasuredValue> entries;
};

// Parse a table from its JSON document:
//   {"entries":[{"ops":[1,3],"value":0.681,"sigma":0.007}, ...]}
StabilizerTable parse_table(const std::string& document);
StabilizerTable parse_table_file(const std::string& path);

// Witness value and 1-sigma from measured entries: the witness expansion is
// linear in the tabulated products, and sigmas combine in quadrature
// (independent entries, first order). Entries the expansion needs but the
// table lacks raise MissingEntries; W3 always does from the published table.
MeasuredValue witness_from_measurements(const StabilizerTable& table, WitnessKind w,
                                        WitnessForm form = WitnessForm::AsEvaluated);

// Coincidence counts in the four detector pairings a-b, a-b', a'-b, a'-b'.
struct CoincidenceQuad {
    std::uint64_t n_pp = 0;
    std::uint64_t n_pm = 0;
    std::uint64_t n_mp = 0;
    std::uint64_t n_mm = 0;
};

// (n_pp + n_mm - n_pm - n_mp)/total with Poisson error propagation.
MeasuredValue counts_to_expectation(const CoincidenceQuad& q);

}  // namespace hyperwitness
