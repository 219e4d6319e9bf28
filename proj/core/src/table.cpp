#include "hyperwitness/table.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hyperwitness/errors.hpp"

namespace hyperwitness {

namespace {

using nlohmann::json;

std::vector<int> parse_key(const json& ops, const std::string& where) {
    if (!ops.is_array() || ops.empty()) {
        throw ParseError(where, "\"ops\" must be a non-empty array of stabilizer indices");
    }
    std::vector<int> key;
    for (const auto& v : ops) {
        if (!v.is_number_integer()) throw ParseError(where, "stabilizer index must be an integer");
        int i = v.get<int>();
        if (i < 1 || i > 6) throw ParseError(where, "stabilizer index out of range 1..6");
        key.push_back(i);
    }
    std::sort(key.begin(), key.end());
    if (std::adjacent_find(key.begin(), key.end()) != key.end()) {
        throw ParseError(where, "duplicate stabilizer index");
    }
    bool all_odd = std::all_of(key.begin(), key.end(), [](int i) { return i % 2 == 1; });
    bool all_even = std::all_of(key.begin(), key.end(), [](int i) { return i % 2 == 0; });
    if (!all_odd && !all_even) {
        throw ParseError(where, "mixed-parity stabilizer product");
    }
    return key;
}

}  // namespace

StabilizerTable parse_table(const std::string& document) {
    json j;
    try {
        j = json::parse(document);
    } catch (const json::parse_error& e) {
        throw ParseError("document", e.what());
    }
    if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array()) {
        throw ParseError("document", "expected an object with an \"entries\" array");
    }

    StabilizerTable table;
    std::size_t idx = 0;
    for (const auto& entry : j["entries"]) {
        std::string where = "entries[" + std::to_string(idx++) + "]";
        if (!entry.is_object() || !entry.contains("ops") || !entry.contains("value") ||
            !entry.contains("sigma")) {
            throw ParseError(where, "entry needs \"ops\", \"value\" and \"sigma\"");
        }
        std::vector<int> key = parse_key(entry["ops"], where + ".ops");
        if (!entry["value"].is_number() || !entry["sigma"].is_number()) {
            throw ParseError(where, "\"value\" and \"sigma\" must be numbers");
        }
        MeasuredValue mv{entry["value"].get<double>(), entry["sigma"].get<double>()};
        if (mv.sigma < 0.0) throw ParseError(where + ".sigma", "sigma must be non-negative");
        if (std::abs(mv.value) > 1.0 + 3.0 * mv.sigma) {
            throw ParseError(where + ".value", "expectation value outside [-1,1] sanity bound");
        }
        if (!table.entries.emplace(std::move(key), mv).second) {
            throw ParseError(where + ".ops", "duplicate stabilizer-product key");
        }
    }
    return table;
}

StabilizerTable parse_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, "cannot open table file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_table(buf.str());
}

MeasuredValue witness_from_measurements(const StabilizerTable& table, WitnessKind w,
                                        WitnessForm form) {
    WitnessExpansion expansion = witness_stabilizer_expansion(w, form);

    std::vector<std::vector<int>> missing;
    for (const auto& [weight, key] : expansion.terms) {
        if (!table.entries.count(key)) missing.push_back(key);
    }
    if (!missing.empty()) throw MissingEntries(std::move(missing));

    double value = expansion.constant;
    double var = 0.0;
    for (const auto& [weight, key] : expansion.terms) {
        const MeasuredValue& mv = table.entries.at(key);
        value += weight * mv.value;
        var += weight * weight * mv.sigma * mv.sigma;
    }
    return {value, std::sqrt(var)};
}

MeasuredValue counts_to_expectation(const CoincidenceQuad& q) {
    double total = static_cast<double>(q.n_pp + q.n_pm + q.n_mp + q.n_mm);
    if (total <= 0.0) throw EmptyData("coincidence quad has zero total counts");

    double signed_sum = static_cast<double>(q.n_pp) + static_cast<double>(q.n_mm) -
                        static_cast<double>(q.n_pm) - static_cast<double>(q.n_mp);
    double value = signed_sum / total;

    // Poisson: var(n_i) = n_i, d(value)/d(n_i) = (s_i * total - signed_sum) / total^2.
    double var = 0.0;
    auto add = [&](std::uint64_t n, double s) {
        double d = (s * total - signed_sum) / (total * total);
        var += d * d * static_cast<double>(n);
    };
    add(q.n_pp, 1.0);
    add(q.n_mm, 1.0);
    add(q.n_pm, -1.0);
    add(q.n_mp, -1.0);
    return {value, std::sqrt(var)};
}

}  // namespace hyperwitness
