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

#include "vnqca/sweeps.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <memory>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "vnqca/clifford.hpp"
#include "vnqca/cone_contraction.hpp"
#include "vnqca/errors.hpp"
#include "vnqca/statevector.hpp"

namespace vnqca {

namespace {

std::shared_ptr<const ConeContraction> contraction_plan(int s, int t) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const ConeContraction>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto &slot = cache[{s, t}];
    if (!slot) {
        slot = std::make_shared<const ConeContraction>(s, t);
    }
    return slot;
}

void check_cap(int s, int t) {
    if (cone_size_formula(s, t) > kMaxDenseQubits) {
        throw CapacityError("causal cone of " + std::to_string(cone_size_formula(s, t)) + " sites for s=" +
                            std::to_string(s) + ", t=" + std::to_string(t) + " exceeds the cap of " +
                            std::to_string(kMaxDenseQubits));
    }
}

std::vector<double> periodic_grid(int points) {
    std::vector<double> out;
    for (int k = 0; k < points; k++) {
        out.push_back(kTwoPi * k / points);
    }
    return out;
}

// Nelder-Mead minimization of f from x within a strict evaluation budget.
// Returns the best value seen; x is moved to its argument.
struct SimplexContext {
    const std::function<double(const std::vector<double> &)> *f;
    int budget;
    int count = 0;
    double best = GSL_POSINF;
    std::vector<double> best_x;
};

double simplex_callback(const gsl_vector *v, void *raw) {
    auto *ctx = static_cast<SimplexContext *>(raw);
    if (ctx->count >= ctx->budget) {
        return GSL_POSINF;
    }
    ctx->count++;
    std::vector<double> x(v->size);
    for (size_t i = 0; i < v->size; i++) {
        x[i] = gsl_vector_get(v, i);
    }
    double val = (*ctx->f)(x);
    if (val < ctx->best) {
        ctx->best = val;
        ctx->best_x = x;
    }
    return val;
}

double simplex_minimize(const std::function<double(const std::vector<double> &)> &f, std::vector<double> &x,
                        double step, int budget, std::int64_t &evals) {
    // A failed contraction ends the search; the best point so far is kept.
    static const gsl_error_handler_t *previous = gsl_set_error_handler_off();
    (void)previous;
    const size_t n = x.size();
    SimplexContext ctx{&f, budget, 0, GSL_POSINF, {}};
    gsl_multimin_function fn{&simplex_callback, n, &ctx};
    gsl_vector *x0 = gsl_vector_alloc(n);
    gsl_vector *ss = gsl_vector_alloc(n);
    for (size_t i = 0; i < n; i++) {
        gsl_vector_set(x0, i, x[i]);
    }
    gsl_vector_set_all(ss, step);
    gsl_multimin_fminimizer *m = gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, n);
    gsl_multimin_fminimizer_set(m, &fn, x0, ss);
    while (ctx.count < budget) {
        if (gsl_multimin_fminimizer_iterate(m) != GSL_SUCCESS) {
            break;
        }
        if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(m), 1e-9) == GSL_SUCCESS) {
            break;
        }
    }
    gsl_multimin_fminimizer_free(m);
    gsl_vector_free(ss);
    gsl_vector_free(x0);
    evals += ctx.count;
    if (!ctx.best_x.empty()) {
        x = ctx.best_x;
    }
    return ctx.best;
}

using Evaluator = std::function<double(const RuleParams &, const InputStateParams &)>;

Evaluator make_evaluator(const SweepSpec &spec) {
    if (spec.backend == Backend::Dense) {
        const int t = spec.t;
        return [t](const RuleParams &p, const InputStateParams &d) { return dense_cone_entropy(p, d, t); };
    }
    auto plan = contraction_plan(spec.s, spec.t);
    return [plan](const RuleParams &p, const InputStateParams &d) { return plan->entropy(p, d); };
}

SweepRow evaluate_point(const SweepSpec &spec, const Evaluator &eval, const std::vector<InputStateParams> &deltas,
                        int index, double a1, double a2) {
    SweepRow row;
    row.index = index;
    row.axis1 = a1;
    row.axis2 = a2;
    const bool theta1_free = spec.theta1_free();
    const bool theta2_free = spec.mode == SweepMode::PhiPhi;
    const std::vector<double> t1s = theta1_free ? periodic_grid(spec.theta_points) : std::vector<double>{0.0};
    const std::vector<double> t2s = theta2_free ? periodic_grid(spec.theta_points) : std::vector<double>{0.0};

    auto entropy = [&](double th1, double th2, const InputStateParams &d) {
        row.evals++;
        return eval(sweep_rule(spec, a1, a2, th1, th2), d);
    };

    // Coarse grid over the free rotation angles and the delta samples.
    double best = -1, best_t1 = 0, best_t2 = 0;
    size_t best_delta = 0;
    for (double th1 : t1s) {
        for (double th2 : t2s) {
            for (size_t k = 0; k < deltas.size(); k++) {
                double v = entropy(th1, th2, deltas[k]);
                if (v > best) {
                    best = v, best_t1 = th1, best_t2 = th2, best_delta = k;
                }
            }
        }
    }

    // Simplex refinement of the maximum from the best grid point.
    if (spec.refine) {
        std::vector<double> x;
        if (theta1_free) x.push_back(best_t1);
        if (theta2_free) x.push_back(best_t2);
        x.push_back(deltas[best_delta].delta[0]);
        x.push_back(deltas[best_delta].delta[1]);
        std::function<double(const std::vector<double> &)> f = [&](const std::vector<double> &v) {
            size_t k = 0;
            double th1 = theta1_free ? v[k++] : 0.0;
            double th2 = theta2_free ? v[k++] : 0.0;
            InputStateParams d{{v[k], v[k + 1], 0.0}};
            return -eval(sweep_rule(spec, a1, a2, th1, th2), d);
        };
        double refined = -simplex_minimize(f, x, 0.25, spec.refine_budget, row.evals);
        if (refined > best) {
            best = refined;
            size_t k = 0;
            if (theta1_free) best_t1 = x[k++];
            if (theta2_free) best_t2 = x[k++];
        }
    }
    row.s_max = std::max(best, 0.0);
    row.theta1_star = theta1_free ? std::fmod(std::fmod(best_t1, kTwoPi) + kTwoPi, kTwoPi) : 0.0;

    // delta-minimum at the maximizing rotation angles.
    double worst = 2;
    size_t worst_delta = 0;
    for (size_t k = 0; k < deltas.size(); k++) {
        double v = entropy(best_t1, best_t2, deltas[k]);
        if (v < worst) {
            worst = v, worst_delta = k;
        }
    }
    if (spec.refine_min) {
        std::vector<double> x{deltas[worst_delta].delta[0], deltas[worst_delta].delta[1]};
        std::function<double(const std::vector<double> &)> f = [&](const std::vector<double> &v) {
            return eval(sweep_rule(spec, a1, a2, best_t1, best_t2), InputStateParams{{v[0], v[1], 0.0}});
        };
        worst = std::min(worst, simplex_minimize(f, x, 0.25, spec.refine_budget, row.evals));
    }
    row.s_min = std::clamp(worst, 0.0, row.s_max);
    row.delta_s = row.s_max - row.s_min;
    return row;
}

SweepResult run_grid(const SweepSpec &spec, const SweepRunOptions &options) {
    spec.validate();
    const Evaluator eval = make_evaluator(spec);
    const auto deltas = delta_samples(spec.seed, spec.delta_samples);
    const auto values = spec.axis_values();
    const int total = spec.resolution * spec.resolution;

    std::vector<std::optional<SweepRow>> rows(total);
    std::vector<int> pending;
    for (int i = 0; i < total; i++) {
        auto it = options.completed.find(i);
        if (it != options.completed.end()) {
            rows[i] = it->second;
        } else {
            pending.push_back(i);
        }
    }
    std::atomic<size_t> next{0};
    std::mutex mu;
    std::exception_ptr failure;
    auto worker = [&]() {
        while (true) {
            size_t k = next.fetch_add(1);
            if (k >= pending.size()) {
                return;
            }
            const int i = pending[k];
            try {
                SweepRow row = evaluate_point(spec, eval, deltas, i, values[i / spec.resolution],
                                              values[i % spec.resolution]);
                std::lock_guard<std::mutex> lock(mu);
                rows[i] = row;
                if (options.on_row) {
                    options.on_row(row);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!failure) {
                    failure = std::current_exception();
                }
                next = pending.size();
                return;
            }
        }
    };
    const int threads = std::max(1, options.threads);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int k = 0; k < threads; k++) {
            pool.emplace_back(worker);
        }
        for (auto &th : pool) {
            th.join();
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    SweepResult out{spec, {}};
    for (auto &r : rows) {
        out.rows.push_back(*r);
    }
    return out;
}

}  // namespace

double entropy_at(const RuleParams &params, const InputStateParams &delta, int t, Backend backend) {
    params.validate();
    check_cap(params.s, t);
    if (backend == Backend::Dense) {
        return dense_cone_entropy(params, delta, t);
    }
    return contraction_plan(params.s, t)->entropy(params, delta);
}

const char *sweep_mode_name(SweepMode mode) {
    return mode == SweepMode::PhiTheta ? "phi-theta" : "phi-phi";
}

SweepMode sweep_mode_from_name(const std::string &name) {
    if (name == "phi-theta") {
        return SweepMode::PhiTheta;
    }
    if (name == "phi-phi") {
        return SweepMode::PhiPhi;
    }
    throw InputError("unknown sweep mode '" + name + "' (expected phi-theta or phi-phi)");
}

void SweepSpec::validate() const {
    if (s < 1 || t < 1) {
        throw InputError("sweeps need s >= 1 and t >= 1");
    }
    if (mode == SweepMode::PhiPhi && s < 2) {
        throw InputError("phi-phi sweeps need s >= 2");
    }
    if (resolution < 2) {
        throw InputError("grid resolution must be at least 2");
    }
    if (delta_samples < 1 || theta_points < 1 || refine_budget < 0) {
        throw InputError("sample counts must be positive");
    }
    check_cap(s, t);
}

std::vector<double> SweepSpec::axis_values() const {
    std::vector<double> out;
    for (int k = 0; k < resolution; k++) {
        out.push_back(kTwoPi * k / (resolution - 1));
    }
    return out;
}

nlohmann::json sweep_spec_to_json(const SweepSpec &spec) {
    return {{"mode", sweep_mode_name(spec.mode)},
            {"s", spec.s},
            {"t", spec.t},
            {"resolution", spec.resolution},
            {"delta_samples", spec.delta_samples},
            {"theta_points", spec.theta_points},
            {"refine_budget", spec.refine_budget},
            {"refine", spec.refine},
            {"refine_min", spec.refine_min},
            {"seed", spec.seed},
            {"backend", spec.backend == Backend::Dense ? "dense" : "contraction"}};
}

SweepSpec sweep_spec_from_json(const nlohmann::json &j) {
    try {
        SweepSpec spec;
        spec.mode = sweep_mode_from_name(j.at("mode").get<std::string>());
        spec.s = j.at("s").get<int>();
        spec.t = j.at("t").get<int>();
        spec.resolution = j.value("resolution", spec.resolution);
        spec.delta_samples = j.value("delta_samples", spec.delta_samples);
        spec.theta_points = j.value("theta_points", spec.theta_points);
        spec.refine_budget = j.value("refine_budget", spec.refine_budget);
        spec.refine = j.value("refine", spec.refine);
        spec.refine_min = j.value("refine_min", spec.refine_min);
        spec.seed = j.value("seed", spec.seed);
        spec.backend = j.value("backend", std::string("contraction")) == "dense" ? Backend::Dense : Backend::Contraction;
        return spec;
    } catch (const nlohmann::json::exception &e) {
        throw InputError(std::string("malformed sweep spec: ") + e.what());
    }
}

double SweepResult::grid_max() const {
    double m = 0;
    for (const auto &r : rows) {
        m = std::max(m, r.s_max);
    }
    return m;
}

std::vector<InputStateParams> delta_samples(std::uint64_t seed, int count) {
    // Generalized golden ratio for two dimensions.
    const double g = 1.32471795724474602596;
    const double alpha[2] = {1 / g, 1 / (g * g)};
    std::mt19937_64 rng(seed);
    double shift[2];
    for (double &x : shift) {
        x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    }
    std::vector<InputStateParams> out;
    for (int k = 0; k < count; k++) {
        InputStateParams d;
        for (int i = 0; i < 2; i++) {
            double u = shift[i] + alpha[i] * (k + 1);
            d.delta[i] = kTwoPi * (u - std::floor(u));
        }
        d.delta[2] = 0;
        out.push_back(d);
    }
    return out;
}

RuleParams sweep_rule(const SweepSpec &spec, double a1, double a2, double theta1, double theta2_free) {
    std::vector<double> phi(spec.s, a1);
    Angles3 theta{theta1, a2, 0.0};
    if (spec.mode == SweepMode::PhiPhi) {
        for (int i = 1; i < spec.s; i++) {
            phi[i] = a2;
        }
        theta = {theta1, theta2_free, 0.0};
    }
    return RuleParams::controlled_phase(phi, theta);
}

SweepResult smax_phi_theta(SweepSpec spec, const SweepRunOptions &options) {
    spec.mode = SweepMode::PhiTheta;
    spec.refine_min = false;
    return run_grid(spec, options);
}

SweepResult delta_S(SweepSpec spec, const SweepRunOptions &options) {
    spec.mode = SweepMode::PhiTheta;
    spec.refine_min = true;
    return run_grid(spec, options);
}

SweepResult smax_phi_phi(SweepSpec spec, const SweepRunOptions &options) {
    spec.mode = SweepMode::PhiPhi;
    return run_grid(spec, options);
}

SweepResult run_sweep(const SweepSpec &spec, const SweepRunOptions &options) {
    return run_grid(spec, options);
}

SweepResult clifford_sweep(SweepMode mode, int s, int t) {
    SweepSpec spec;
    spec.mode = mode;
    spec.s = s;
    spec.t = t;
    spec.refine = false;
    spec.delta_samples = 16;
    spec.theta_points = 4;
    if (s < 1 || t < 1 || (mode == SweepMode::PhiPhi && s < 2)) {
        throw InputError("invalid Clifford sweep dimensions");
    }
    const std::vector<double> quarter = {0, kPi / 2, kPi, 3 * kPi / 2};
    const std::vector<double> half = {0, kPi};
    const std::vector<double> &axis2 = mode == SweepMode::PhiTheta ? quarter : half;
    const std::vector<double> t1s = t >= 3 ? quarter : std::vector<double>{0.0};
    const std::vector<double> t2s = mode == SweepMode::PhiPhi ? quarter : std::vector<double>{0.0};
    spec.resolution = static_cast<int>(axis2.size());

    SweepResult out{spec, {}};
    int index = 0;
    for (double a1 : half) {
        for (double a2 : axis2) {
            SweepRow row;
            row.index = index++;
            row.axis1 = a1;
            row.axis2 = a2;
            int best = -1, best_min = 2;
            double best_t1 = 0;
            for (double th1 : t1s) {
                for (double th2 : t2s) {
                    int hi = -1, lo = 2;
                    for (double d1 : quarter) {
                        for (double d2 : quarter) {
                            int v = clifford_cone_entropy(sweep_rule(spec, a1, a2, th1, th2),
                                                          InputStateParams{{d1, d2, 0.0}}, t);
                            row.evals++;
                            hi = std::max(hi, v);
                            lo = std::min(lo, v);
                        }
                    }
                    if (hi > best) {
                        best = hi, best_min = lo, best_t1 = th1;
                    }
                }
            }
            row.s_max = best;
            row.s_min = best_min;
            row.delta_s = best - best_min;
            row.theta1_star = best_t1;
            row.s_max_int = best;
            out.rows.push_back(row);
        }
    }
    return out;
}

std::string csv_header(bool with_int) {
    return std::string("axis1,axis2,s_max,s_min,delta_s,theta1_star,evals") + (with_int ? ",s_max_int" : "");
}

std::string format_row(const SweepRow &row) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%lld", row.axis1, row.axis2, row.s_max, row.s_min,
                  row.delta_s, row.theta1_star, static_cast<long long>(row.evals));
    std::string out = buf;
    if (row.s_max_int) {
        out += "," + std::to_string(*row.s_max_int);
    }
    return out;
}

std::string to_csv(const SweepResult &result) {
    const bool with_int = !result.rows.empty() && result.rows.front().s_max_int.has_value();
    std::string out = csv_header(with_int) + "\n";
    for (const auto &r : result.rows) {
        out += format_row(r) + "\n";
    }
    return out;
}

std::map<int, SweepRow> parse_csv_rows(const std::string &text, const SweepSpec &spec) {
    std::map<std::string, int> lookup;
    const auto values = spec.axis_values();
    for (int k = 0; k < static_cast<int>(values.size()); k++) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.9g", values[k]);
        lookup[buf] = k;
    }
    std::map<int, SweepRow> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line.rfind("axis1", 0) == 0) {
            continue;
        }
        std::vector<std::string> cells;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) {
            cells.push_back(cell);
        }
        if (cells.size() < 7 || !lookup.count(cells[0]) || !lookup.count(cells[1])) {
            // A partially written trailing line is dropped; anything else is an error.
            if (in.peek() == EOF) {
                break;
            }
            throw InputError("malformed sweep row: " + line);
        }
        SweepRow row;
        row.index = lookup[cells[0]] * spec.resolution + lookup[cells[1]];
        try {
            row.axis1 = std::stod(cells[0]);
            row.axis2 = std::stod(cells[1]);
            row.s_max = std::stod(cells[2]);
            row.s_min = std::stod(cells[3]);
            row.delta_s = std::stod(cells[4]);
            row.theta1_star = std::stod(cells[5]);
            row.evals = std::stoll(cells[6]);
        } catch (const std::exception &) {
            throw InputError("malformed sweep row: " + line);
        }
        out[row.index] = row;
    }
    return out;
}

}  // namespace vnqca
