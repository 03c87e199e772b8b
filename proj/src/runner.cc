// Copyright 2026 The locreal Authors
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

#include "locreal/runner.h"

#include <cmath>
#include <functional>
#include <iomanip>
#include <limits>
#include <sstream>
#include <thread>

#include "locreal/mc_sim.h"
#include "locreal/random.h"
#include "locreal/violation_search.h"

namespace locreal {
namespace {

using nlohmann::json;

double tolerance_for(const Scenario& s, const CheckSpec& c, const RunOptions& o) {
    if (o.tol) {
        return *o.tol;
    }
    return c.tol ? *c.tol : s.tolerance;
}

void tag_state(InequalityReport& r, const NamedState& state, const Scenario& s) {
    if (s.states.size() > 1) {
        r.name += "@" + state.name;
    }
}

QuantumChshSettings chsh_settings(const Scenario& s, const CheckSpec& c) {
    return {s.alice.at(c.alice[0]), s.alice.at(c.alice[1]), s.bob.at(c.bob[0]), s.bob.at(c.bob[1])};
}

QuantumBellSettings bell_settings(const Scenario& s, const CheckSpec& c) {
    return {s.alice.at(c.alice_a), s.alice.at(c.alice_b1), s.bob.at(c.bob_b1), s.bob.at(c.bob_b2)};
}

InfoBellTriple bell_triple(const Scenario& s, const CheckSpec& c) {
    return {s.observable(c.a_b1), s.observable(c.a_b2), s.observable(c.b1_b2)};
}

std::vector<InequalityReport> run_info_check(const Scenario& s, const CheckSpec& c, double tol) {
    const InformationState& theta = *s.theta;
    switch (c.type) {
        case CheckType::chsh: {
            InfoChshFamily family{s.observable({c.alice[0], c.bob[0]}), s.observable({c.alice[0], c.bob[1]}),
                                  s.observable({c.alice[1], c.bob[0]}), s.observable({c.alice[1], c.bob[1]})};
            return {check_extended_chsh(family, theta, c.coeffs, tol)};
        }
        case CheckType::bell:
            return {check_bell(bell_triple(s, c), theta, c.sign, tol)};
        case CheckType::bell_restriction: {
            const InfoBellTriple triple = bell_triple(s, c);
            const bool match = check_condition_marginal_match(triple, theta, c.sign);
            const double e = bell_b1b1_correlation(triple, theta);
            const bool restricted = check_bell_correlation_restriction(e, c.sign);
            auto r = InequalityReport::make("bell_restriction", std::abs(e - sign_value(c.sign)), 0.0, tol);
            r.sign = sign_symbol(c.sign);
            r.conditions_checked.emplace_back("marginal_match", match);
            r.conditions_checked.emplace_back("bell_correlation_restriction", restricted);
            std::ostringstream os;
            os << std::setprecision(17) << "E(b1,b1) = " << e;
            r.detail = os.str();
            return {r};
        }
        case CheckType::local_realism:
            return {check_local_realism(s.observable_map(), {theta}, tol).to_report(tol)};
        case CheckType::quantum_bell_analog:
        case CheckType::separable_bell:
            break;
    }
    throw ScenarioError(std::string(check_type_name(c.type)) + " does not apply to information-model scenarios");
}

std::map<SettingPair, JointPov> quantum_family(const Scenario& s, bool symmetrized) {
    std::map<SettingPair, JointPov> family;
    for (const auto& [a, ma] : s.alice) {
        for (const auto& [b, mb] : s.bob) {
            family.emplace(SettingPair{a, b}, make_alice_bob_pov(ma, mb, symmetrized));
        }
    }
    return family;
}

std::vector<InequalityReport> run_quantum_check(const Scenario& s, const NamedState& st, const CheckSpec& c,
                                                double tol) {
    switch (c.type) {
        case CheckType::chsh: {
            std::optional<SeparableDecomposition> dec;
            if (c.use_decomposition) {
                dec = st.decomposition;
            }
            return {check_extended_chsh(st.rho, chsh_settings(s, c), c.coeffs, dec, tol)};
        }
        case CheckType::bell:
            return {check_bell(st.rho, bell_settings(s, c), c.sign, tol)};
        case CheckType::quantum_bell_analog:
            return {check_quantum_bell_analog(st.rho, *st.decomposition, bell_settings(s, c), tol)};
        case CheckType::separable_bell:
            return check_separable_bell(st.rho, *st.decomposition, bell_settings(s, c), tol);
        case CheckType::local_realism:
            return {check_local_realism(quantum_family(s, c.symmetrized), tol).to_report(tol)};
        case CheckType::bell_restriction:
            break;
    }
    throw ScenarioError(std::string(check_type_name(c.type)) + " does not apply to quantum scenarios");
}

RunResult run_validate(const Scenario& s) {
    RunResult out;
    json& d = out.document;
    d["valid"] = true;
    d["scenario"] = s.name;
    d["kind"] = s.kind == ScenarioKind::info ? "info" : "quantum";
    d["checks"] = s.checks.size();
    if (s.kind == ScenarioKind::info) {
        d["theta_size"] = s.theta->size();
        json obs = json::array();
        for (const auto& e : s.observables) {
            obs.push_back({{"a", e.alice}, {"b", e.bob}, {"provenance", provenance_name(e.joint.provenance())}});
        }
        d["observables"] = std::move(obs);
        d["formal_lhv_model"] = shares_single_nu(s.observable_map());
    } else {
        json states = json::array();
        for (const auto& st : s.states) {
            states.push_back({{"name", st.name}, {"dim", st.rho.dim()}, {"decomposition", st.decomposition.has_value()}});
        }
        d["states"] = std::move(states);
        json alice = json::array();
        for (const auto& [label, m] : s.alice) {
            alice.push_back(label);
        }
        json bob = json::array();
        for (const auto& [label, m] : s.bob) {
            bob.push_back(label);
        }
        d["alice"] = std::move(alice);
        d["bob"] = std::move(bob);
    }
    return out;
}

RunResult run_check(const Scenario& s, const RunOptions& o) {
    RunResult out;
    for (const auto& c : s.checks) {
        const double tol = tolerance_for(s, c, o);
        if (s.kind == ScenarioKind::info) {
            for (auto& r : run_info_check(s, c, tol)) {
                out.rows.push_back({std::move(r), std::nullopt, std::nullopt});
            }
            continue;
        }
        for (const auto& st : s.states) {
            for (auto& r : run_quantum_check(s, st, c, tol)) {
                tag_state(r, st, s);
                out.rows.push_back({std::move(r), std::nullopt, std::nullopt});
            }
        }
    }
    json reports = json::array();
    for (const auto& row : out.rows) {
        reports.push_back(report_to_json(row.report));
    }
    out.document = {{"scenario", s.name}, {"command", "check"}, {"reports", std::move(reports)}};
    if (s.kind == ScenarioKind::info) {
        out.document["formal_lhv_model"] = shares_single_nu(s.observable_map());
    }
    return out;
}

json setting_to_json(const QubitSetting& q) { return {{"bloch", q.bloch}, {"visibility", q.visibility}}; }

RunResult run_search(const Scenario& s, const RunOptions& o) {
    if (s.kind != ScenarioKind::quantum) {
        throw ScenarioError("/kind: search applies to quantum scenarios");
    }
    SearchSpec spec = s.search.value_or(SearchSpec{});
    spec.budget.jobs = o.jobs;
    if (o.seed) {
        spec.seed = *o.seed;
    }
    const double tol = o.tol.value_or(s.tolerance);
    const BoundResult classical = classical_lhv_bound(spec.coeffs);
    RunResult out;
    json results = json::array();
    for (const auto& st : s.states) {
        const BoundResult found = search_settings(st.rho, spec.coeffs, spec.budget, spec.seed);
        const double reevaluated = evaluate_settings(st.rho, spec.coeffs, found.settings);
        json settings = json::array();
        for (const auto& q : found.settings) {
            settings.push_back(setting_to_json(q));
        }
        results.push_back({{"state", st.name},
                           {"value", found.value},
                           {"reevaluated", reevaluated},
                           {"method", bound_method_name(found.method)},
                           {"witness", found.witness},
                           {"settings", std::move(settings)},
                           {"history", found.history}});
        auto r = InequalityReport::make("search", found.value, classical.value, tol);
        r.detail = found.witness;
        tag_state(r, st, s);
        out.rows.push_back({std::move(r), std::nullopt, std::nullopt});
    }
    out.document = {{"scenario", s.name},
                    {"command", "search"},
                    {"seed", spec.seed},
                    {"classical_bound", classical.value},
                    {"classical_witness", classical.witness},
                    {"results", std::move(results)}};
    return out;
}

struct SampleTask {
    std::string state;
    SettingPair key;
    std::uint64_t seed = 0;
    SampleBatch batch;
};

void run_tasks(std::vector<SampleTask>& tasks, unsigned jobs, const std::function<SampleBatch(std::size_t)>& work) {
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
    if (jobs <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            tasks[i].batch = work(i);
        }
        return;
    }
    std::vector<std::exception_ptr> errors(jobs);
    {
        std::vector<std::jthread> workers;
        for (unsigned w = 0; w < jobs; ++w) {
            workers.emplace_back([&, w] {
                try {
                    for (std::size_t i = w; i < tasks.size(); i += jobs) {
                        tasks[i].batch = work(i);
                    }
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

RunResult run_simulate(const Scenario& s, const RunOptions& o) {
    SimulationSpec spec = s.simulation.value_or(SimulationSpec{});
    if (o.seed) {
        spec.seed = *o.seed;
    }
    std::vector<SampleTask> tasks;
    std::vector<const NamedState*> task_state;
    if (s.kind == ScenarioKind::info) {
        for (const auto& e : s.observables) {
            tasks.push_back({"", {e.alice, e.bob}, stream_seed(spec.seed, tasks.size()), {}});
        }
        run_tasks(tasks, o.jobs, [&](std::size_t i) {
            return sample_info_joint(s.observable(tasks[i].key), *s.theta, spec.n, tasks[i].seed);
        });
    } else {
        const auto family = quantum_family(s, spec.symmetrized);
        for (const auto& st : s.states) {
            for (const auto& [key, joint] : family) {
                tasks.push_back({st.name, key, stream_seed(spec.seed, tasks.size()), {}});
                task_state.push_back(&st);
            }
        }
        run_tasks(tasks, o.jobs, [&](std::size_t i) {
            return sample_quantum_joint(task_state[i]->rho, family.at(tasks[i].key), spec.n, tasks[i].seed);
        });
    }

    RunResult out;
    json estimates = json::array();
    std::map<std::string, EstimateMap> by_state;
    for (const auto& t : tasks) {
        by_state[t.state][t.key] = Estimate::from_batch(t.batch);
        json e{{"a", t.key.first},
               {"b", t.key.second},
               {"n", t.batch.n},
               {"seed", t.batch.seed},
               {"mean1", t.batch.mean1()},
               {"mean2", t.batch.mean2()},
               {"mean12", t.batch.mean12()},
               {"se12", t.batch.se12()}};
        if (s.kind == ScenarioKind::quantum) {
            e["state"] = t.state;
        }
        estimates.push_back(std::move(e));
    }

    auto add = [&](StatisticalReport sr, const NamedState* st) {
        if (st) {
            tag_state(sr.report, *st, s);
        }
        out.rows.push_back({std::move(sr.report), sr.se, sr.z_violation});
    };
    for (const auto& c : s.checks) {
        const double tol = tolerance_for(s, c, o);
        if (s.kind == ScenarioKind::info) {
            const EstimateMap& est = by_state[""];
            if (c.type == CheckType::chsh) {
                add(test_inequality(est, ChshTestSpec{c.coeffs, c.alice, c.bob}, tol), nullptr);
            } else if (c.type == CheckType::bell) {
                add(test_inequality(est, BellTestSpec{c.a_b1, c.a_b2, c.b1_b2, c.sign}, tol), nullptr);
            }
            continue;
        }
        for (const auto& st : s.states) {
            const EstimateMap& est = by_state[st.name];
            if (c.type == CheckType::chsh) {
                add(test_inequality(est, ChshTestSpec{c.coeffs, c.alice, c.bob}, tol), &st);
            } else if (c.type == CheckType::bell) {
                BellTestSpec b{{c.alice_a, c.bob_b1}, {c.alice_a, c.bob_b2}, {c.alice_b1, c.bob_b2}, c.sign};
                add(test_inequality(est, b, tol), &st);
            }
        }
    }

    json reports = json::array();
    for (const auto& row : out.rows) {
        json r = report_to_json(row.report);
        r["se"] = *row.se;
        r["z_violation"] = *row.z_violation;
        reports.push_back(std::move(r));
    }
    out.document = {{"scenario", s.name},
                    {"command", "simulate"},
                    {"n", spec.n},
                    {"seed", spec.seed},
                    {"estimates", std::move(estimates)},
                    {"reports", std::move(reports)}};
    return out;
}

std::string csv_number(double x) {
    if (std::isnan(x)) {
        return "";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    std::ostringstream os;
    os << std::setprecision(17) << x;
    return os.str();
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') {
            out += '"';
        }
        out += ch;
    }
    return out + "\"";
}

}  // namespace

Command parse_command(const std::string& name) {
    if (name == "validate") {
        return Command::validate;
    }
    if (name == "check") {
        return Command::check;
    }
    if (name == "search") {
        return Command::search;
    }
    if (name == "simulate") {
        return Command::simulate;
    }
    throw ScenarioError("unknown command \"" + name + "\" (validate, check, search, simulate)");
}

RunResult run(Command command, const Scenario& scenario, const RunOptions& options) {
    switch (command) {
        case Command::validate:
            return run_validate(scenario);
        case Command::check:
            return run_check(scenario, options);
        case Command::search:
            return run_search(scenario, options);
        case Command::simulate:
            return run_simulate(scenario, options);
    }
    return run_validate(scenario);
}

json report_to_json(const InequalityReport& r) {
    json conditions = json::object();
    for (const auto& [name, held] : r.conditions_checked) {
        conditions[name] = held;
    }
    auto finite_or_null = [](double x) { return std::isfinite(x) ? json(x) : json(nullptr); };
    json j{{"name", r.name},
           {"lhs", finite_or_null(r.lhs)},
           {"rhs", finite_or_null(r.rhs)},
           {"margin", finite_or_null(r.margin)},
           {"satisfied", r.satisfied},
           {"bound_asserted", r.bound_asserted},
           {"conditions", std::move(conditions)},
           {"tol", r.tol}};
    if (!r.sign.empty()) {
        j["sign"] = r.sign;
    }
    if (!r.detail.empty()) {
        j["detail"] = r.detail;
    }
    return j;
}

std::string to_csv(const std::vector<ReportRow>& rows) {
    const bool stats = !rows.empty() && rows.front().se.has_value();
    std::ostringstream os;
    os << "name,lhs,rhs,margin,satisfied,conditions" << (stats ? ",se,z_violation" : "") << "\n";
    for (const auto& row : rows) {
        const auto& r = row.report;
        std::string conditions;
        for (const auto& [name, held] : r.conditions_checked) {
            conditions += (conditions.empty() ? "" : ";") + name + "=" + (held ? "true" : "false");
        }
        os << csv_field(r.name) << "," << csv_number(r.lhs) << "," << csv_number(r.rhs) << ","
           << csv_number(r.margin) << "," << (r.satisfied ? "true" : "false") << "," << csv_field(conditions);
        if (stats) {
            os << "," << csv_number(row.se.value_or(0)) << "," << csv_number(row.z_violation.value_or(0));
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace locreal
