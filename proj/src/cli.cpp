// Copyright 2026 The vnqca Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vnqca/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "vnqca/circuit.hpp"
#include "vnqca/clifford.hpp"
#include "vnqca/errors.hpp"
#include "vnqca/lattice.hpp"
#include "vnqca/rules.hpp"
#include "vnqca/statevector.hpp"
#include "vnqca/support_algebra.hpp"
#include "vnqca/sweeps.hpp"

namespace vnqca {

namespace {

using nlohmann::json;

struct Options {
    bool degrees = false;
    int threads = 1;
    std::uint64_t seed = 1;
    int s = 1;
    int t = 1;
    std::string phi, theta = "0,0,0", delta = "0,0,0", shift, extents, q;
    std::string rule_file, matrix_file, out_path;
    std::string mode = "phi-theta", backend, kind = "step";
    bool identity = false, resume = false, no_refine = false, refine_min = false, amplitudes = false;
    int resolution = 25, delta_samples = 50, theta_points = 13, budget = 200;
};

json options_to_json(const std::string &command, const Options &o) {
    return {{"command", command},
            {"degrees", o.degrees},
            {"threads", o.threads},
            {"seed", o.seed},
            {"s", o.s},
            {"t", o.t},
            {"phi", o.phi},
            {"theta", o.theta},
            {"delta", o.delta},
            {"shift", o.shift},
            {"extents", o.extents},
            {"q", o.q},
            {"rule", o.rule_file},
            {"matrix", o.matrix_file},
            {"out", o.out_path},
            {"mode", o.mode},
            {"backend", o.backend},
            {"kind", o.kind},
            {"identity", o.identity},
            {"resume", o.resume},
            {"no_refine", o.no_refine},
            {"refine_min", o.refine_min},
            {"resolution", o.resolution},
            {"delta_samples", o.delta_samples},
            {"theta_points", o.theta_points},
            {"budget", o.budget}};
}

// FNV-1a over the canonical (key-sorted, compact) JSON of the run config.
std::string fingerprint(const json &config) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : config.dump()) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::vector<double> parse_doubles(const std::string &text, const char *what) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stod(cell, &used));
            if (used != cell.size()) {
                throw std::invalid_argument(cell);
            }
        } catch (const std::exception &) {
            throw InputError(std::string("cannot parse ") + what + " value '" + cell + "'");
        }
    }
    return out;
}

std::vector<int> parse_ints(const std::string &text, const char *what) {
    std::vector<int> out;
    for (double v : parse_doubles(text, what)) {
        if (v != std::floor(v)) {
            throw InputError(std::string(what) + " entries must be integers");
        }
        out.push_back(static_cast<int>(v));
    }
    return out;
}

double angle_unit(const Options &o) {
    return o.degrees ? kPi / 180 : 1.0;
}

Angles3 parse_angles3(const std::string &text, const Options &o, const char *what) {
    auto v = parse_doubles(text, what);
    if (v.size() != 3) {
        throw InputError(std::string(what) + " needs three comma-separated angles");
    }
    return {v[0] * angle_unit(o), v[1] * angle_unit(o), v[2] * angle_unit(o)};
}

json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open " + path);
    }
    try {
        return json::parse(in);
    } catch (const json::exception &e) {
        throw InputError(path + ": " + e.what());
    }
}

RuleParams build_rule(const Options &o) {
    if (!o.rule_file.empty()) {
        return rule_from_json(read_json_file(o.rule_file));
    }
    if (o.identity) {
        return RuleParams::identity(o.s);
    }
    Angles3 theta = parse_angles3(o.theta, o, "--theta");
    if (!o.shift.empty()) {
        Coord y = parse_ints(o.shift, "--shift");
        if (static_cast<int>(y.size()) != o.s) {
            throw InputError("--shift needs s components");
        }
        return RuleParams::shifted(y, theta);
    }
    if (o.phi.empty()) {
        throw InputError("a controlled-phase rule needs --phi (or use --shift, --identity, --rule)");
    }
    auto phi = parse_doubles(o.phi, "--phi");
    if (phi.size() == 1) {
        phi.assign(o.s, phi[0]);
    }
    if (static_cast<int>(phi.size()) != o.s) {
        throw InputError("--phi needs one angle or s angles");
    }
    for (double &a : phi) {
        a *= angle_unit(o);
    }
    RuleParams p = RuleParams::controlled_phase(phi, theta);
    p.validate();
    return p;
}

LocalRuleMatrix build_local_rule(const Options &o) {
    if (o.matrix_file.empty()) {
        return local_rule_matrix(build_rule(o));
    }
    json j = read_json_file(o.matrix_file);
    try {
        LocalRuleMatrix rule;
        rule.s = j.at("s").get<int>();
        const auto &rows = j.at("unitary");
        const Eigen::Index n = static_cast<Eigen::Index>(rows.size());
        rule.unitary = CMatrix(n, n);
        for (Eigen::Index r = 0; r < n; r++) {
            if (static_cast<Eigen::Index>(rows[r].size()) != n) {
                throw InputError("unitary must be square");
            }
            for (Eigen::Index c = 0; c < n; c++) {
                rule.unitary(r, c) = Complex(rows[r][c].at(0).get<double>(), rows[r][c].at(1).get<double>());
            }
        }
        if (n != (Eigen::Index{1} << (2 * rule.s + 1))) {
            throw InputError("unitary must act on the 2s+1 neighborhood qubits");
        }
        return rule;
    } catch (const json::exception &e) {
        throw InputError(o.matrix_file + ": " + e.what());
    }
}

LatticeSpec build_lattice(const Options &o) {
    auto e = parse_ints(o.extents, "--extents");
    if (e.size() == 1) {
        e.assign(o.s, e[0]);
    }
    if (static_cast<int>(e.size()) != o.s) {
        throw InputError("--extents needs one value or s values");
    }
    return LatticeSpec(e);
}

void write_text(const std::string &path, const std::string &text) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw InputError("cannot write " + path);
    }
    f << text;
}

std::string read_text(const std::string &path) {
    std::ifstream f(path, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

json coord_json(const Coord &c) {
    return json(c);
}

// Adding 0.0 folds -0.0 into 0.0 so printed axes stay tidy.
json axis_json(const std::array<double, 3> &n) {
    return json::array({n[0] + 0.0, n[1] + 0.0, n[2] + 0.0});
}

// ---- subcommands ---------------------------------------------------------

int cmd_simulate(const Options &o, json &report) {
    const auto t0 = std::chrono::steady_clock::now();
    RuleParams rule = build_rule(o);
    InputStateParams delta{parse_angles3(o.delta, o, "--delta")};
    const std::string backend = o.backend.empty() ? "dense" : o.backend;
    if (o.t < 0) {
        throw InputError("--t must be non-negative");
    }
    if (!o.extents.empty()) {
        LatticeSpec spec = build_lattice(o);
        Circuit step = rule.is_shift() ? compile_shift_step(rule, spec) : compile_step(rule, spec);
        StateVector state = init_product_state(delta, spec);
        for (int k = 0; k < o.t; k++) {
            apply_circuit(state, step);
        }
        report["entropy"] = entropy(reduced_density(state, spec.index(zero_coord(o.s))));
        report["cone_sites"] = spec.site_count();
        report["depth"] = step.depth() * o.t;
        report["backend"] = "dense-lattice";
        if (o.amplitudes) {
            json amps = json::array();
            for (Eigen::Index i = 0; i < state.amplitudes().size(); i++) {
                amps.push_back({state.amplitudes()[i].real(), state.amplitudes()[i].imag()});
            }
            report["amplitudes"] = amps;
        }
    } else {
        if (rule.is_shift()) {
            throw InputError("cone simulation needs a controlled-phase rule; pass --extents for shifts");
        }
        const int sites = static_cast<int>(cone_size_formula(rule.s, o.t));
        if (backend == "dense") {
            if (sites > kMaxDenseQubits) {
                throw CapacityError("causal cone of " + std::to_string(sites) + " sites exceeds the dense cap of " +
                                    std::to_string(kMaxDenseQubits) + " qubits");
            }
            ConeCircuit cone = compile_cone(rule, o.t);
            StateVector state = init_product_state(delta, cone.sites.sites());
            apply_circuit(state, cone.circuit);
            report["entropy"] = entropy(reduced_density(state, 0));
            report["depth"] = cone.circuit.depth();
            if (o.amplitudes) {
                json amps = json::array();
                for (Eigen::Index i = 0; i < state.amplitudes().size(); i++) {
                    amps.push_back({state.amplitudes()[i].real(), state.amplitudes()[i].imag()});
                }
                report["amplitudes"] = amps;
            }
        } else if (backend == "contraction") {
            report["entropy"] = entropy_at(rule, delta, o.t, Backend::Contraction);
            report["depth"] = compile_cone(rule, o.t).circuit.depth();
        } else {
            throw InputError("unknown backend '" + backend + "'");
        }
        report["cone_sites"] = sites;
        report["backend"] = backend;
    }
    report["wall_time"] = seconds_since(t0);
    return kExitOk;
}

SweepSpec sweep_spec_from_options(const Options &o) {
    SweepSpec spec;
    spec.mode = sweep_mode_from_name(o.mode);
    spec.s = o.s;
    spec.t = o.t;
    spec.resolution = o.resolution;
    spec.delta_samples = o.delta_samples;
    spec.theta_points = o.theta_points;
    spec.refine_budget = o.budget;
    spec.refine = !o.no_refine;
    spec.refine_min = o.refine_min;
    spec.seed = o.seed;
    if (o.backend == "dense") {
        spec.backend = Backend::Dense;
    } else if (!o.backend.empty() && o.backend != "contraction") {
        throw InputError("unknown backend '" + o.backend + "'");
    }
    return spec;
}

int cmd_sweep(const Options &o, const std::string &fp, json &report) {
    const auto t0 = std::chrono::steady_clock::now();
    SweepSpec spec = sweep_spec_from_options(o);
    spec.validate();
    const std::string partial = o.out_path + ".partial";
    SweepRunOptions run;
    run.threads = o.threads;
    if (o.resume) {
        if (std::filesystem::exists(partial)) {
            run.completed = parse_csv_rows(read_text(partial), spec);
        } else if (std::filesystem::exists(o.out_path)) {
            run.completed = parse_csv_rows(read_text(o.out_path), spec);
        }
    }
    // Progress log in completion order; the final CSV is sorted.
    {
        std::ofstream log(partial, std::ios::binary | std::ios::trunc);
        if (!log) {
            throw InputError("cannot write " + partial);
        }
        log << csv_header(false) << "\n";
        for (const auto &[i, row] : run.completed) {
            log << format_row(row) << "\n";
        }
    }
    std::ofstream log(partial, std::ios::binary | std::ios::app);
    run.on_row = [&log](const SweepRow &row) { log << format_row(row) << "\n" << std::flush; };
    const size_t resumed = run.completed.size();
    SweepResult result = run_sweep(spec, run);
    log.close();
    write_text(o.out_path, to_csv(result));
    std::filesystem::remove(partial);

    json sidecar = {{"spec", sweep_spec_to_json(spec)},
                    {"fingerprint", fp},
                    {"threads", o.threads},
                    {"rows", result.rows.size()},
                    {"resumed_rows", resumed},
                    {"grid_max", result.grid_max()},
                    {"wall_time", seconds_since(t0)}};
    write_text(o.out_path + ".json", sidecar.dump(2) + "\n");
    report = sidecar;
    report["csv"] = o.out_path;
    return kExitOk;
}

int cmd_clifford_sweep(const Options &o, const std::string &fp, json &report) {
    const auto t0 = std::chrono::steady_clock::now();
    SweepResult result = clifford_sweep(sweep_mode_from_name(o.mode), o.s, o.t);
    write_text(o.out_path, to_csv(result));
    json sidecar = {{"spec", sweep_spec_to_json(result.spec)},
                    {"clifford", true},
                    {"fingerprint", fp},
                    {"rows", result.rows.size()},
                    {"grid_max", result.grid_max()},
                    {"wall_time", seconds_since(t0)}};
    write_text(o.out_path + ".json", sidecar.dump(2) + "\n");
    report = sidecar;
    report["csv"] = o.out_path;
    return kExitOk;
}

int cmd_index(const Options &o, json &report) {
    RuleParams rule = build_rule(o);
    QuadrantReport rep = quadrant_supports(rule);
    CommutationVerdict comm = check_quadrant_commutation(rep);
    json dims = json::array();
    for (const auto &q : rep.quadrants) {
        dims.push_back({{"quadrant", q.sign}, {"d", q.d}, {"n", q.n}, {"dim", q.algebra.dim()}});
    }
    report["dims"] = dims;
    report["checks"] = {{"simple", rep.all_simple},
                        {"product", rep.product_matches},
                        {"parity", rep.parity_fixed},
                        {"commutation", comm.pass},
                        {"commutation_max_norm", comm.max_norm}};
    if (!rep.usable() || !comm.pass) {
        report["failure"] = rep.usable() ? "quadrant supports do not commute" : rep.failure;
        return kExitVerificationFailed;
    }
    IndexVector iv = index_vector(rep);
    json comps = json::array();
    for (const auto &r : iv.components) {
        comps.push_back(r.to_string());
    }
    report["index"] = comps;
    report["index_string"] = iv.to_string();
    report["fdqc"] = iv.is_trivial();
    return kExitOk;
}

json verdict_json(const RuleVerdict &v) {
    json viol = json::array();
    for (const auto &x : v.violations) {
        viol.push_back({{"offset", x.offset}, {"a", x.a}, {"b", x.b}, {"norm", x.norm}});
    }
    return {{"verdict", v.pass ? "PASS" : "FAIL"}, {"violations", viol}, {"tolerance", 1e-10}};
}

int cmd_verify(const Options &o, json &report) {
    RuleVerdict v = verify_local_rule(build_local_rule(o));
    report = verdict_json(v);
    return v.pass ? kExitOk : kExitVerificationFailed;
}

int cmd_classify(const Options &o, json &report) {
    LocalRuleMatrix rule = build_local_rule(o);
    RuleVerdict v = verify_local_rule(rule);
    if (!v.pass) {
        report = verdict_json(v);
        report["case"] = "UNVERIFIED";
        return kExitVerificationFailed;
    }
    Configuration conf = classify_configuration(rule);
    report["case"] = case_name(conf.kind);
    if (conf.kind == ConfigurationCase::CaseI) {
        report["offset"] = conf.offset;
    }
    json sites = json::array();
    for (const auto &x : conf.sites) {
        json js = {{"site", x.site}, {"dim", x.dim}, {"abelian", x.abelian}};
        if (x.axis) {
            js["axis"] = axis_json(*x.axis);
        }
        sites.push_back(js);
    }
    report["sites"] = sites;
    json axes = json::array();
    for (size_t i = 0; i < conf.active_axes.size(); i++) {
        json ja = {{"axis", i + 1}, {"active", static_cast<bool>(conf.active_axes[i])}};
        const auto &plus = conf.sites[1 + 2 * i];
        if (conf.active_axes[i] && plus.axis) {
            ja["n"] = axis_json(*plus.axis);
        }
        axes.push_back(ja);
    }
    report["axes"] = axes;
    return conf.kind == ConfigurationCase::Unclassified ? kExitVerificationFailed : kExitOk;
}

int cmd_cone(const Options &o, json &report) {
    SiteSet cone = o.extents.empty() ? future_cone(o.s, o.t) : future_cone(zero_coord(o.s), o.t, build_lattice(o));
    json coords = json::array();
    for (const Coord &c : cone) {
        coords.push_back(coord_json(c));
    }
    report = {{"s", o.s}, {"t", o.t}, {"sites", cone.size()}, {"formula", cone_size_formula(o.s, o.t)},
              {"coords", coords}};
    return kExitOk;
}

int cmd_emit_circuit(const Options &o, json &report) {
    if (o.kind == "cone") {
        ConeCircuit cone = compile_cone(build_rule(o), o.t);
        report = circuit_to_json(cone.circuit, &cone.sites.sites());
        return kExitOk;
    }
    LatticeSpec spec = build_lattice(o);
    std::vector<Coord> sites;
    for (int k = 0; k < spec.site_count(); k++) {
        sites.push_back(spec.coord(k));
    }
    Circuit c(0, 1);
    if (o.kind == "step") {
        RuleParams rule = build_rule(o);
        c = rule.is_shift() ? compile_shift_step(rule, spec) : compile_step(rule, spec);
    } else if (o.kind == "shift") {
        c = compile_shift(parse_ints(o.shift, "--shift"), spec);
    } else if (o.kind == "margolus") {
        Coord q = o.q.empty() ? Coord(o.s, 1) : parse_ints(o.q, "--q");
        c = compile_margolus(build_rule(o), spec, q);
    } else {
        throw InputError("unknown circuit kind '" + o.kind + "' (step, shift, margolus, cone)");
    }
    report = circuit_to_json(c, &sites);
    return kExitOk;
}

// Expands `--config file.json` into flags; flags given on the command line
// win over the file.
std::vector<std::string> expand_config(std::vector<std::string> args) {
    std::string path;
    for (size_t i = 1; i < args.size(); i++) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            path = args[i + 1];
            args.erase(args.begin() + i, args.begin() + i + 2);
            break;
        }
        if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
            args.erase(args.begin() + i);
            break;
        }
    }
    if (path.empty()) {
        return args;
    }
    json cfg = read_json_file(path);
    if (!cfg.is_object()) {
        throw InputError(path + ": config must be a JSON object");
    }
    auto present = [&](const std::string &flag) {
        for (const auto &a : args) {
            if (a == flag || a.rfind(flag + "=", 0) == 0) {
                return true;
            }
        }
        return false;
    };
    static const std::set<std::string> commands = {"simulate", "sweep",  "clifford-sweep", "index",
                                                   "classify", "verify", "cone",           "emit-circuit"};
    const bool has_command =
        std::any_of(args.begin() + 1, args.end(), [](const std::string &a) { return commands.count(a) > 0; });
    if (cfg.contains("command") && !has_command) {
        args.insert(args.begin() + 1, cfg["command"].get<std::string>());
    }
    auto scalar = [](const json &v) -> std::string {
        if (v.is_string()) {
            return v.get<std::string>();
        }
        if (v.is_number_integer()) {
            return std::to_string(v.get<long long>());
        }
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.17g", v.get<double>());
        return buf;
    };
    for (const auto &[key, value] : cfg.items()) {
        if (key == "command") {
            continue;
        }
        std::string flag = "--" + key;
        std::replace(flag.begin(), flag.end(), '_', '-');
        if (present(flag)) {
            continue;
        }
        if (value.is_boolean()) {
            if (value.get<bool>()) {
                args.push_back(flag);
            }
        } else if (value.is_array()) {
            std::string joined;
            for (size_t k = 0; k < value.size(); k++) {
                joined += (k ? "," : "") + scalar(value[k]);
            }
            args.push_back(flag + "=" + joined);
        } else {
            args.push_back(flag + "=" + scalar(value));
        }
    }
    return args;
}

}  // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    std::vector<std::string> args(argv, argv + argc);
    try {
        args = expand_config(args);
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    Options o;
    CLI::App app{"Simulator and verification toolkit for qubit QCAs on hypercubic lattices."};
    app.name(args.empty() ? "vnqca" : args[0]);
    app.require_subcommand(1);
    std::string config_doc;
    app.add_option("--config", config_doc, "JSON file whose keys supply flag values");

    auto add_common = [&](CLI::App *sub) {
        sub->add_flag("--degrees", o.degrees, "Angles on the command line are in degrees");
        sub->add_option("--s", o.s, "Spatial dimension")->check(CLI::Range(1, 6));
    };
    auto add_rule = [&](CLI::App *sub) {
        sub->add_option("--phi", o.phi, "Controlled-phase angles, one or s values");
        sub->add_option("--theta", o.theta, "Rotation angles theta1,theta2,theta3");
        sub->add_option("--shift", o.shift, "Shift vector (integers) for a shift rule");
        sub->add_flag("--identity", o.identity, "The identity rule");
        sub->add_option("--rule", o.rule_file, "Rule JSON file");
    };

    auto *simulate = app.add_subcommand("simulate", "Entropy of the origin after t steps");
    add_common(simulate);
    add_rule(simulate);
    simulate->add_option("--t", o.t, "Number of steps");
    simulate->add_option("--delta", o.delta, "Input-state angles delta1,delta2,delta3");
    simulate->add_option("--extents", o.extents, "Simulate the full periodic lattice instead of the cone");
    simulate->add_option("--backend", o.backend, "dense (default) or contraction");
    simulate->add_flag("--emit-amplitudes", o.amplitudes, "Debug: include the final amplitudes");

    auto *sweep = app.add_subcommand("sweep", "Entropy sweeps over (phi, theta2) or (phi1, phi2)");
    add_common(sweep);
    sweep->add_option("--t", o.t, "Number of steps");
    sweep->add_option("--mode", o.mode, "phi-theta or phi-phi");
    sweep->add_option("--resolution", o.resolution, "Grid points per axis over [0, 2pi]");
    sweep->add_option("--delta-samples", o.delta_samples, "Input states per grid point");
    sweep->add_option("--theta-points", o.theta_points, "Coarse grid size per free rotation angle");
    sweep->add_option("--budget", o.budget, "Simplex evaluations per refinement");
    sweep->add_flag("--no-refine", o.no_refine, "Skip the simplex refinement of the maximum");
    sweep->add_flag("--refine-min", o.refine_min, "Refine the delta-minimized entropy as well");
    sweep->add_option("--seed", o.seed, "Seed of the input-state sequence");
    sweep->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
    sweep->add_option("--backend", o.backend, "contraction (default) or dense");
    sweep->add_option("--out", o.out_path, "Output CSV path")->required();
    sweep->add_flag("--resume", o.resume, "Reuse rows of an interrupted run");

    auto *csweep = app.add_subcommand("clifford-sweep", "Stabilizer sweep over the Clifford grid");
    add_common(csweep);
    csweep->add_option("--t", o.t, "Number of steps");
    csweep->add_option("--mode", o.mode, "phi-theta or phi-phi");
    csweep->add_option("--out", o.out_path, "Output CSV path")->required();

    auto *index = app.add_subcommand("index", "Index vector from quadrant support algebras");
    add_common(index);
    add_rule(index);

    auto *classify = app.add_subcommand("classify", "Support-algebra configuration of a local rule");
    add_common(classify);
    add_rule(classify);
    classify->add_option("--matrix", o.matrix_file, "Local rule unitary JSON file");

    auto *verify = app.add_subcommand("verify", "Check that a local rule defines a QCA");
    add_common(verify);
    add_rule(verify);
    verify->add_option("--matrix", o.matrix_file, "Local rule unitary JSON file");

    auto *cone = app.add_subcommand("cone", "Sites of the future causal cone of the origin");
    add_common(cone);
    cone->add_option("--t", o.t, "Number of steps");
    cone->add_option("--extents", o.extents, "Periodic lattice extents");

    auto *emit = app.add_subcommand("emit-circuit", "Export a compiled circuit as JSON");
    add_common(emit);
    add_rule(emit);
    emit->add_option("--kind", o.kind, "step, shift, margolus or cone");
    emit->add_option("--extents", o.extents, "Periodic lattice extents");
    emit->add_option("--q", o.q, "Quadrant sign vector for Margolus circuits");
    emit->add_option("--t", o.t, "Steps for cone circuits");

    for (auto *sub : {simulate, index, classify, verify, cone, emit}) {
        sub->add_option("--out", o.out_path, "Write the JSON report here instead of stdout");
    }

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend() - 1);
        app.parse(rev);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    CLI::App *chosen = app.get_subcommands().front();
    const std::string command = chosen->get_name();
    const std::string fp = fingerprint(options_to_json(command, o));
    json report;
    int code = kExitOk;
    try {
        if (command == "simulate") {
            code = cmd_simulate(o, report);
        } else if (command == "sweep") {
            code = cmd_sweep(o, fp, report);
        } else if (command == "clifford-sweep") {
            code = cmd_clifford_sweep(o, fp, report);
        } else if (command == "index") {
            code = cmd_index(o, report);
        } else if (command == "classify") {
            code = cmd_classify(o, report);
        } else if (command == "verify") {
            code = cmd_verify(o, report);
        } else if (command == "cone") {
            code = cmd_cone(o, report);
        } else {
            code = cmd_emit_circuit(o, report);
        }
    } catch (const CapacityError &e) {
        err << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const NumericalError &e) {
        err << "error: " << e.what() << "\n";
        return kExitVerificationFailed;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    report["fingerprint"] = fp;
    const std::string text = report.dump(2) + "\n";
    const bool file_report = !o.out_path.empty() && command != "sweep" && command != "clifford-sweep";
    if (file_report) {
        write_text(o.out_path, text);
    } else {
        out << text;
    }
    return code;
}

}  // namespace vnqca
