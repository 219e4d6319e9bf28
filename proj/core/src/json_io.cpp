#include "hyperwitness/json_io.hpp"

#include "hyperwitness/errors.hpp"

namespace hyperwitness {

namespace {

using nlohmann::json;

json complex_pair(cx z) { return json::array({z.real(), z.imag()}); }

cx complex_from(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw ParseError(where, "complex entries must be [re, im] pairs");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

std::vector<QubitLabel> register_from(const json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) throw ParseError(where, "register must be a label array");
    std::vector<QubitLabel> reg;
    for (const auto& name : j) {
        if (!name.is_string()) throw ParseError(where, "register labels must be strings");
        reg.push_back(label_from_string(name.get<std::string>()));
    }
    return reg;
}

std::vector<cx> entries_from(const json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where, "expected an array of [re, im] pairs");
    std::vector<cx> out;
    out.reserve(j.size());
    std::size_t i = 0;
    for (const auto& e : j) {
        out.push_back(complex_from(e, where + "[" + std::to_string(i++) + "]"));
    }
    return out;
}

}  // namespace

json to_json(const StateVector& state) {
    json amps = json::array();
    for (cx a : state.amplitudes()) amps.push_back(complex_pair(a));
    json reg = json::array();
    for (QubitLabel q : state.qubits()) reg.push_back(to_string(q));
    return {{"register", reg}, {"amplitudes", amps}};
}

json to_json(const DensityMatrix& rho) {
    json entries = json::array();
    for (cx e : rho.entries()) entries.push_back(complex_pair(e));
    json reg = json::array();
    for (QubitLabel q : rho.qubits()) reg.push_back(to_string(q));
    return {{"register", reg}, {"entries", entries}};
}

StateVector state_from_json(const json& j) {
    if (!j.is_object() || !j.contains("register") || !j.contains("amplitudes")) {
        throw ParseError("state", "expected {\"register\", \"amplitudes\"}");
    }
    return StateVector(register_from(j["register"], "state.register"),
                       entries_from(j["amplitudes"], "state.amplitudes"));
}

DensityMatrix density_from_json(const json& j) {
    if (!j.is_object() || !j.contains("register") || !j.contains("entries")) {
        throw ParseError("density", "expected {\"register\", \"entries\"}");
    }
    return DensityMatrix(register_from(j["register"], "density.register"),
                         entries_from(j["entries"], "density.entries"));
}

json to_json(const ObservableSum& op) {
    json terms = json::array();
    for (const auto& term : op.terms) {
        json letters = json::object();
        for (const auto& [q, l] : term.op.letters) {
            if (l == PauliLetter::I) continue;
            letters[to_string(q)] = std::string(1, to_char(l));
        }
        terms.push_back({{"weight", term.weight * term.op.coefficient}, {"letters", letters}});
    }
    return {{"constant", op.constant}, {"terms", terms}};
}

ObservableSum observable_from_json(const json& j) {
    if (!j.is_object() || !j.contains("terms")) {
        throw ParseError("observable", "expected {\"constant\", \"terms\"}");
    }
    ObservableSum op;
    op.constant = j.value("constant", 0.0);
    std::size_t i = 0;
    for (const auto& t : j["terms"]) {
        std::string where = "observable.terms[" + std::to_string(i++) + "]";
        if (!t.is_object() || !t.contains("weight") || !t.contains("letters")) {
            throw ParseError(where, "term needs \"weight\" and \"letters\"");
        }
        ObservableSum::Term term;
        term.weight = t["weight"].get<double>();
        term.op.coefficient = 1.0;
        for (const auto& [name, letter] : t["letters"].items()) {
            if (!letter.is_string() || letter.get<std::string>().size() != 1) {
                throw ParseError(where, "letters must be single-character strings");
            }
            term.op.letters[label_from_string(name)] =
                pauli_from_char(letter.get<std::string>()[0]);
        }
        op.terms.push_back(std::move(term));
    }
    return op;
}

NoiseModel noise_model_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("noise", "expected an object");
    NoiseModel model;
    auto check = [](double p, const std::string& where) {
        if (!(p >= 0.0 && p <= 1.0)) throw ParseError(where, "parameter outside [0,1]");
        return p;
    };
    model.white_fraction = check(j.value("white_fraction", 0.0), "noise.white_fraction");
    for (const char* field : {"dephase", "visibility"}) {
        if (!j.contains(field)) continue;
        if (!j[field].is_object()) throw ParseError(std::string("noise.") + field, "expected an object");
        for (const auto& [name, value] : j[field].items()) {
            std::string where = std::string("noise.") + field + "." + name;
            double p = check(value.get<double>(), where);
            Dof dof = dof_from_string(name);
            (field == std::string("dephase") ? model.dephase : model.visibility)[dof] = p;
        }
    }
    return model;
}

}  // namespace hyperwitness
