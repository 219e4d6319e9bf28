#pragma once

#include <string>

#include <json.hpp>

#include "hyperwitness/noise.hpp"
#include "hyperwitness/pauli.hpp"
#include "hyperwitness/state.hpp"

namespace hyperwitness {

// States and density matrices serialize as a register label list plus
// complex entries as [re, im] pairs (row-major for matrices).
nlohmann::json to_json(const StateVector& state);
nlohmann::json to_json(const DensityMatrix& rho);
StateVector state_from_json(const nlohmann::json& j);
DensityMatrix density_from_json(const nlohmann::json& j);

// {"constant": c, "terms": [{"weight": w, "letters": {"pi_A": "X", ...}}]}
// with the string coefficient folded into the weight.
nlohmann::json to_json(const ObservableSum& op);
ObservableSum observable_from_json(const nlohmann::json& j);

// {"white_fraction": p, "dephase": {"pi": q, ...}, "visibility": {...}};
// every field optional, parameters validated into [0,1].
NoiseModel noise_model_from_json(const nlohmann::json& j);

}  // namespace hyperwitness
