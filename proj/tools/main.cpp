// hyperwitness CLI: simulate the 6-qubit hyperentangled state, evaluate
// stabilizer witnesses under noise, reproduce witness values from measured
// stabilizer tables, and model/fit coincidence interference fringes.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperwitness/errors.hpp"
#include "hyperwitness/fringe.hpp"
#include "hyperwitness/json_io.hpp"
#include "hyperwitness/noise.hpp"
#include "hyperwitness/pauli.hpp"
#include "hyperwitness/state.hpp"
#include "hyperwitness/table.hpp"

namespace hw = hyperwitness;
using nlohmann::json;

namespace {

// All numeric output at 6 significant digits, locale-independent.
std::string fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::vector<double> parse_phases(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw CLI::ValidationError("--phases", "expected comma-separated numbers");
        }
    }
    if (out.size() != 3) {
        throw CLI::ValidationError("--phases", "expected three comma-separated phases");
    }
    return out;
}

struct Grid {
    double start = 0.0, stop = 1.0, step = 0.01;
};

Grid parse_grid(const std::string& spec) {
    Grid g;
    if (std::sscanf(spec.c_str(), "%lf:%lf:%lf", &g.start, &g.stop, &g.step) != 3 ||
        !(g.step > 0.0) || g.stop < g.start) {
        throw CLI::ValidationError("--grid", "expected start:stop:step with positive step");
    }
    return g;
}

hw::DensityMatrix parse_noise_spec(const std::string& spec, const hw::DensityMatrix& rho) {
    auto colon = spec.find(':');
    std::string kind = spec.substr(0, colon);
    if (kind == "white") {
        if (colon == std::string::npos) throw CLI::ValidationError("--noise", "expected white:p");
        return hw::white_noise(rho, std::stod(spec.substr(colon + 1)));
    }
    if (kind == "dephase") {
        // dephase:<dof>:<q>
        auto second = spec.find(':', colon + 1);
        if (colon == std::string::npos || second == std::string::npos) {
            throw CLI::ValidationError("--noise", "expected dephase:dof:q");
        }
        hw::Dof dof = hw::dof_from_string(spec.substr(colon + 1, second - colon - 1));
        return hw::dephase_dof(rho, dof, std::stod(spec.substr(second + 1)));
    }
    throw CLI::ValidationError("--noise", "unknown channel: " + kind);
}

std::string default_table_path() {
    const char* dir = std::getenv("HYPERWITNESS_TABLE_DIR");
    std::string base = dir ? dir : "tables";
    return base + "/vallone2009_table1.json";
}

std::string basis_label(std::size_t index, std::size_t n) {
    std::string s(n, '0');
    for (std::size_t p = 0; p < n; ++p) {
        if ((index >> (n - 1 - p)) & 1u) s[p] = '1';
    }
    return s;
}

void write_text(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw hw::InvalidParameter("cannot open output file: " + path);
    out << content;
}

std::vector<hw::PatternPoint> read_pattern_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw hw::ParseError(path, "cannot open pattern file");
    std::vector<hw::PatternPoint> points;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || (lineno == 1 && line.rfind("delay", 0) == 0)) continue;
        hw::PatternPoint p;
        if (std::sscanf(line.c_str(), "%lf,%lf", &p.delay_um, &p.rate) != 2) {
            throw hw::ParseError(path + ":" + std::to_string(lineno), "expected delay,rate");
        }
        points.push_back(p);
    }
    return points;
}

int run(int argc, char** argv) {
    CLI::App app{"Hyperentangled-state witness toolkit"};
    app.require_subcommand(1);

    // state
    auto* state_cmd = app.add_subcommand("state", "Print the hyperentangled state");
    std::string phases_csv = "0,0,0";
    std::string state_out;
    state_cmd->add_option("--phases", phases_csv, "phase_pi,phase_k,phase_c (radians)");
    state_cmd->add_option("--out", state_out, "write JSON here instead of stdout");

    // witness
    auto* witness_cmd = app.add_subcommand("witness", "Evaluate a witness on the model state");
    std::string witness_kind = "W2";
    std::string witness_form = "evaluated";
    std::string witness_phases = "0,0,0";
    std::vector<std::string> noise_specs;
    witness_cmd->add_option("--kind", witness_kind, "Wpi|Wk|Wc|W2|W3")->required();
    witness_cmd->add_option("--form", witness_form, "evaluated|printed");
    witness_cmd->add_option("--phases", witness_phases, "state phases");
    witness_cmd->add_option("--noise", noise_specs, "white:p or dephase:dof:q (repeatable)");

    // noise-sweep
    auto* sweep_cmd = app.add_subcommand("noise-sweep", "CSV of witness values vs white noise");
    std::string grid_spec = "0:1:0.01";
    std::string sweep_out;
    sweep_cmd->add_option("--grid", grid_spec, "start:stop:step");
    sweep_cmd->add_option("--out", sweep_out, "output CSV path (default stdout)");

    // table
    auto* table_cmd = app.add_subcommand("table", "Measured stabilizer tables");
    auto* table_eval = table_cmd->add_subcommand("eval", "Witness value from a table");
    std::string table_witness;
    std::string table_file;
    table_eval->add_option("--witness", table_witness, "Wpi|Wk|Wc|W2|W3")->required();
    table_eval->add_option("--file", table_file, "table JSON (default: bundled measured table)");

    // fringe
    auto* fringe_cmd = app.add_subcommand("fringe", "Coincidence fringe model");
    auto* fringe_sim = fringe_cmd->add_subcommand("sim", "Sample a fringe pattern to CSV");
    std::string stage = "first";
    double phase = 0.0, visibility = 0.815, baseline = 100.0;
    double span_um = 0.0;
    int npoints = 81;
    std::optional<double> integration_s;
    std::optional<std::uint64_t> seed;
    std::string fringe_out;
    fringe_sim->add_option("--stage", stage, "first|second");
    fringe_sim->add_option("--phase", phase, "fringe phase (radians)");
    fringe_sim->add_option("--visibility", visibility, "fringe visibility");
    fringe_sim->add_option("--baseline", baseline, "baseline rate (cps)");
    fringe_sim->add_option("--span", span_um, "delay span (um, default 3 FWHM)");
    fringe_sim->add_option("--points", npoints, "number of samples");
    fringe_sim->add_option("--integration", integration_s, "Poisson-sample with this time (s)");
    fringe_sim->add_option("--seed", seed, "RNG seed (required with --integration)");
    fringe_sim->add_option("--out", fringe_out, "output CSV path (default stdout)");

    auto* fringe_fit = fringe_cmd->add_subcommand("fit", "Fit visibility from a pattern CSV");
    std::string fit_in;
    std::string fit_stage = "first";
    double fit_phase = 0.0;
    fringe_fit->add_option("--in", fit_in, "pattern CSV")->required();
    fringe_fit->add_option("--stage", fit_stage, "first|second");
    fringe_fit->add_option("--phase", fit_phase, "fixed fringe phase (radians)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << e.what() << "\n";
        return 2;
    }

    if (state_cmd->parsed()) {
        auto ph = parse_phases(phases_csv);
        hw::StateVector psi = hw::hyper_state(ph[0], ph[1], ph[2]);
        std::ostringstream out;
        out << "{\"register\":[";
        const auto& reg = psi.qubits();
        for (std::size_t i = 0; i < reg.size(); ++i) {
            out << (i ? "," : "") << '"' << hw::to_string(reg[i]) << '"';
        }
        out << "],\"nonzero\":[";
        bool first = true;
        for (std::size_t i = 0; i < psi.dim(); ++i) {
            hw::cx a = psi.amplitude(i);
            if (std::abs(a) < 1e-12) continue;
            out << (first ? "" : ",") << "{\"basis\":\"" << basis_label(i, psi.num_qubits())
                << "\",\"amplitude\":[" << fmt6(a.real()) << "," << fmt6(a.imag()) << "]}";
            first = false;
        }
        out << "],\"entropy_of_entanglement\":"
            << fmt6(hw::entropy_of_entanglement(psi, hw::party_split())) << "}\n";
        write_text(state_out, out.str());
        return 0;
    }

    if (witness_cmd->parsed()) {
        hw::WitnessKind kind = hw::witness_from_string(witness_kind);
        hw::WitnessForm form = witness_form == "printed" ? hw::WitnessForm::AsPrinted
                                                         : hw::WitnessForm::AsEvaluated;
        auto ph = parse_phases(witness_phases);
        hw::DensityMatrix rho = hw::density(hw::hyper_state(ph[0], ph[1], ph[2]));
        for (const std::string& spec : noise_specs) rho = parse_noise_spec(spec, rho);
        double value = hw::evaluate_witness(rho, kind, form);
        std::cout << "{\"kind\":\"" << hw::to_string(kind) << "\",\"value\":" << fmt6(value)
                  << "}\n";
        return 0;
    }

    if (sweep_cmd->parsed()) {
        Grid grid = parse_grid(grid_spec);
        hw::DensityMatrix ideal = hw::density(hw::hyper_state(0.0, 0.0, 0.0));
        std::ostringstream out;
        out << "p,W_pi,W_k,W_c,W_2,W_3\n";
        for (double p = grid.start; p <= grid.stop + 1e-12; p += grid.step) {
            double pc = std::min(p, grid.stop);
            hw::DensityMatrix rho = hw::white_noise(ideal, pc);
            out << fmt6(pc);
            for (hw::WitnessKind k : {hw::WitnessKind::Wpi, hw::WitnessKind::Wk,
                                      hw::WitnessKind::Wc, hw::WitnessKind::W2,
                                      hw::WitnessKind::W3}) {
                out << "," << fmt6(hw::evaluate_witness(rho, k));
            }
            out << "\n";
        }
        write_text(sweep_out, out.str());
        return 0;
    }

    if (table_eval->parsed()) {
        std::string path = table_file.empty() ? default_table_path() : table_file;
        hw::StabilizerTable table = hw::parse_table_file(path);
        hw::MeasuredValue mv =
            hw::witness_from_measurements(table, hw::witness_from_string(table_witness));
        std::cout << "{\"witness\":\"" << table_witness << "\",\"value\":" << fmt6(mv.value)
                  << ",\"sigma\":" << fmt6(mv.sigma) << "}\n";
        return 0;
    }

    if (fringe_sim->parsed()) {
        hw::FringeConfig cfg;
        cfg.stage = stage == "second" ? hw::Stage::Second : hw::Stage::First;
        cfg.phase = phase;
        cfg.visibility = visibility;
        cfg.baseline = baseline;
        double span = span_um > 0.0 ? span_um : 3.0 * hw::envelope_fwhm(cfg);
        std::vector<double> delays;
        for (int i = 0; i < npoints; ++i) {
            delays.push_back(-span / 2.0 + span * i / (npoints - 1));
        }
        std::vector<hw::PatternPoint> points;
        if (integration_s) {
            if (!seed) {
                std::cerr << "--seed is required with --integration\n";
                return 2;
            }
            points = hw::pattern(cfg, delays, *integration_s, *seed);
        } else {
            points = hw::pattern(cfg, delays);
        }
        std::ostringstream out;
        out << "delay,rate\n";
        for (const auto& p : points) out << fmt6(p.delay_um) << "," << fmt6(p.rate) << "\n";
        write_text(fringe_out, out.str());
        return 0;
    }

    if (fringe_fit->parsed()) {
        hw::FringeConfig prior;
        prior.stage = fit_stage == "second" ? hw::Stage::Second : hw::Stage::First;
        prior.phase = fit_phase;
        hw::VisibilityFit fit = hw::fit_visibility(read_pattern_csv(fit_in), prior);
        std::cout << "{\"visibility\":" << fmt6(fit.visibility.value)
                  << ",\"sigma\":" << fmt6(fit.visibility.sigma)
                  << ",\"fwhm_um\":" << fmt6(fit.fwhm_um)
                  << ",\"baseline\":" << fmt6(fit.baseline) << "}\n";
        return 0;
    }

    std::cerr << "no subcommand given\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const hw::MissingEntries& e) {
        json keys = json::array();
        for (const auto& k : e.keys()) keys.push_back(k);
        std::cout << json{{"error", {{"code", e.code()}, {"message", e.what()},
                                     {"missing", keys}}}}.dump()
                  << "\n";
        return 1;
    } catch (const hw::Error& e) {
        std::cout << json{{"error", {{"code", e.code()}, {"message", e.what()}}}}.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
