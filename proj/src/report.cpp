#include "mixsegre/report.hpp"

#include "mixsegre/criteria.hpp"
#include "mixsegre/equisingularity.hpp"
#include "mixsegre/error.hpp"
#include "mixsegre/groebner.hpp"
#include "mixsegre/surface.hpp"

#include <chrono>
#include <cstdio>

namespace mixsegre {

namespace {

using json = nlohmann::ordered_json;

std::string num(std::uint64_t v) { return std::to_string(v); }
std::string num(int v) { return std::to_string(v); }

json numbers(const std::vector<std::uint64_t>& v) {
    json out = json::array();
    for (auto x : v) out.push_back(num(x));
    return out;
}

json rationals(const RationalVector& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

json samples_json(const std::vector<HilbertSamuelSample>& samples) {
    json out = json::array();
    for (const auto& s : samples) out.push_back(json::array({num(static_cast<std::uint64_t>(s.N)), num(s.value)}));
    return out;
}

json profile_json(const SegreProfile& p) { return json{{"e", numbers(p.e)}, {"m", numbers(p.m)}}; }

json table_json(const MixedSegreTable& t) {
    json out = json::array();
    for (const auto& [key, v] : t.entries) {
        const auto [k, i, j] = key;
        out.push_back(json{{"k", num(k)}, {"i", num(i)}, {"j", num(j)}, {"value", num(v)}});
    }
    return out;
}

json verdict_json(const Verdict& v) {
    return json{{"criterion", v.criterion}, {"index", num(v.index)}, {"status", to_string(v.status)},
                {"evidence", v.evidence}};
}

json verdicts_json(const std::vector<Verdict>& vs) {
    json out = json::array();
    for (const auto& v : vs) out.push_back(verdict_json(v));
    return out;
}

json comparison_json(const ComparisonReport& r) {
    json out{{"holds", r.holds()}};
    const auto failure = r.first_failure();
    out["first_failure"] = failure ? verdict_json(*failure) : json(nullptr);
    out["left_profile"] = profile_json(r.left_profile);
    out["right_profile"] = profile_json(r.right_profile);
    out["mixed"] = table_json(r.mixed);
    if (!r.mixed_multiplicities.empty()) out["mixed_multiplicities"] = numbers(r.mixed_multiplicities);
    out["verdicts"] = verdicts_json(r.verdicts);
    return out;
}

json chain_json(const PolarChain& chain) {
    json seeds = json::array();
    for (auto s : chain.seeds) seeds.push_back(num(s));
    json coefficients = json::array();
    for (const auto& row : chain.tuple.coefficients) {
        json r = json::array();
        for (auto c : row) r.push_back(std::to_string(c));
        coefficients.push_back(r);
    }
    json combinations = json::array();
    for (const auto& p : chain.tuple.combinations) combinations.push_back(p.to_string());
    json stages = json::array();
    for (const auto& s : chain.stages) {
        stages.push_back(json{{"k", num(s.k)},
                              {"section", s.section.to_string()},
                              {"polar", s.polar.to_string()},
                              {"m", num(s.polar_multiplicity)},
                              {"e", num(s.segre_number)},
                              {"section_samples", samples_json(s.section_samples)},
                              {"polar_samples", samples_json(s.polar_samples)}});
    }
    return json{{"round_seeds", seeds},
                {"coefficients", coefficients},
                {"combinations", combinations},
                {"stages", stages}};
}

GermContext germ_of(const InputDocument& doc, const GenericityConfig& config) {
    if (!doc.ring) throw InvalidArgument("cli", "the document declares no ring");
    if (doc.ambient) return GermContext::from_ambient(*doc.ambient, config.multiplicity);
    return GermContext::affine_space(doc.ring);
}

void require_names(const CommandArgs& args, std::size_t count, const std::string& command) {
    if (args.names.size() != count)
        throw InvalidArgument("cli", command + " needs " + std::to_string(count) + " ideal name" +
                                         (count == 1 ? "" : "s"));
}

json inputs_json(const InputDocument& doc, const std::vector<std::string>& names) {
    json inputs = json::object();
    json ring = json::array();
    if (doc.ring)
        for (const auto& v : doc.ring->variables()) ring.push_back(v);
    inputs["ring"] = ring;
    inputs["ambient"] = doc.ambient ? json(doc.ambient->to_string()) : json(nullptr);
    json ideals = json::object();
    for (const auto& n : names) ideals[n] = doc.ideal(n).to_string();
    inputs["ideals"] = ideals;
    return inputs;
}

FunctionGerm single_germ(const Ideal& I, const std::string& name) {
    if (I.size() != 1) throw InvalidArgument("cli", "'" + name + "' must consist of a single polynomial");
    return FunctionGerm(I.generators().front());
}

json whitney_json(const WhitneyReport& w) {
    return json{{"tangent0", w.tangent0.to_string()},
                {"tangent1", w.tangent1.to_string()},
                {"battery", comparison_json(w.battery)},
                {"whitney_sufficient", w.whitney_sufficient ? "yes" : "no"}};
}

json config_json(const GenericityConfig& c) {
    return json{{"seed", num(c.seed)},
                {"bound", num(c.coefficient_bound)},
                {"rounds", num(static_cast<std::uint64_t>(c.verification_rounds))},
                {"nmax", num(static_cast<std::uint64_t>(c.multiplicity.n_max))}};
}

json statistics_json() {
    const auto& c = engine_counters();
    return json{{"groebner_runs", num(c.groebner_runs.load())},
                {"pairs_reduced", num(c.pairs_reduced.load())},
                {"zero_reductions", num(c.zero_reductions.load())}};
}

std::string comparison_word(int c) { return c < 0 ? "less" : (c == 0 ? "equal" : "greater"); }

} // namespace

const std::vector<std::string>& known_commands() {
    static const std::vector<std::string> commands{"segre",     "mixed", "compare", "rees",    "product-check",
                                                   "minkowski", "chain", "surface", "whitney", "teissier"};
    return commands;
}

GenericityConfig resolve_config(const InputDocument& doc, const RunSettings& settings) {
    GenericityConfig c;
    c.seed = settings.seed.value_or(doc.options.seed.value_or(c.seed));
    c.coefficient_bound = settings.bound.value_or(doc.options.bound.value_or(c.coefficient_bound));
    c.verification_rounds = settings.rounds.value_or(doc.options.rounds.value_or(c.verification_rounds));
    c.multiplicity.n_max = settings.nmax.value_or(doc.options.nmax.value_or(c.multiplicity.n_max));
    return c;
}

json error_report(const std::string& command, const std::string& module, const std::string& message) {
    return json{{"schema", "1"}, {"command", command}, {"error", json{{"module", module}, {"message", message}}}};
}

Report run_command(const InputDocument& doc, const std::string& command, const CommandArgs& args,
                   const RunSettings& settings) {
    const auto start = std::chrono::steady_clock::now();
    reset_engine_counters();
    const GenericityConfig config = resolve_config(doc, settings);

    Report report;
    json& out = report.json;
    out["schema"] = "1";
    out["command"] = command;
    out["inputs"] = inputs_json(doc, command == "surface" ? std::vector<std::string>{} : args.names);
    out["config"] = config_json(config);
    json results = json::object();
    bool verdict = true;

    if (command == "segre") {
        if (args.names.empty()) throw InvalidArgument("cli", "segre needs at least one ideal name");
        const GermContext germ = germ_of(doc, config);
        for (const auto& name : args.names) {
            const PolarChain chain = polar_chain(germ, doc.ideal(name), config);
            results[name] = json{{"profile", profile_json(profile_of(chain))}, {"chain", chain_json(chain)}};
        }
    } else if (command == "mixed") {
        require_names(args, 2, command);
        const GermContext germ = germ_of(doc, config);
        const auto table = mixed_segre_table(germ, doc.ideal(args.names[0]), doc.ideal(args.names[1]), config);
        results["table"] = table_json(table);
    } else if (command == "compare") {
        require_names(args, 2, command);
        const GermContext germ = germ_of(doc, config);
        const Ideal& I1 = doc.ideal(args.names[0]);
        const Ideal& I2 = doc.ideal(args.names[1]);
        ComparisonReport r;
        if (args.power) {
            results["power"] = json::array({num(static_cast<std::uint64_t>(args.power->first)),
                                            num(static_cast<std::uint64_t>(args.power->second))});
            r = power_equivalence_probe(germ, I1, I2, args.power->first, args.power->second, config);
        } else {
            r = closure_battery(germ, I1, I2, config);
            results["inequalities"] = verdicts_json(mixed_inequality_check(germ, I1, I2, config));
        }
        results["battery"] = comparison_json(r);
        results["same_integral_closure"] = r.holds();
        verdict = r.holds();
    } else if (command == "rees") {
        require_names(args, 2, command);
        const GermContext germ = germ_of(doc, config);
        const auto r = rees_test(germ, doc.ideal(args.names[0]), doc.ideal(args.names[1]), config);
        results["report"] = comparison_json(r);
        results["verdict"] = r.holds() ? "equivalent" : "not equivalent";
        verdict = r.holds();
    } else if (command == "product-check") {
        require_names(args, 2, command);
        const GermContext germ = germ_of(doc, config);
        const auto r = product_formula_check(germ, doc.ideal(args.names[0]), doc.ideal(args.names[1]),
                                             args.k.value_or(germ.n), config);
        results = json{{"k", num(r.k)},
                       {"lhs", num(r.lhs)},
                       {"terms", numbers(r.terms)},
                       {"binomial_sum", to_string(r.binomial_sum)},
                       {"plain_sum", to_string(r.plain_sum)},
                       {"binomial_matches", r.binomial_matches},
                       {"plain_matches", r.plain_matches},
                       {"hypothesis_met", r.hypothesis_met},
                       {"hypotheses", verdicts_json(r.hypotheses)},
                       {"verdict", r.verdict}};
        verdict = r.binomial_matches;
    } else if (command == "minkowski") {
        require_names(args, 2, command);
        const GermContext germ = germ_of(doc, config);
        const auto r = minkowski_check(germ, doc.ideal(args.names[0]), doc.ideal(args.names[1]),
                                       args.k.value_or(germ.n), config);
        results = json{{"k", num(r.k)},
                       {"product", num(r.product)},
                       {"left", num(r.left)},
                       {"right", num(r.right)},
                       {"comparison", comparison_word(r.comparison)},
                       {"holds", r.holds},
                       {"equality", r.equality},
                       {"hypothesis_met", r.hypothesis_met},
                       {"hypotheses", verdicts_json(r.hypotheses)}};
        verdict = r.holds;
    } else if (command == "chain") {
        require_names(args, 1, command);
        const GermContext germ = germ_of(doc, config);
        const Ideal& I = doc.ideal(args.names[0]);
        const auto c = chain_condition(germ, I, config);
        results["profile"] = profile_json(segre_profile(germ, I, config));
        results["chain_condition"] = json{{"holds", c.holds},
                                          {"failing_k", c.failing_k ? json(num(*c.failing_k)) : json(nullptr)}};
        json truncation = json::array();
        for (int k = 1; k <= germ.n; ++k)
            truncation.push_back(json{{"k", num(k)}, {"equal", truncation_check(germ, I, k, config)}});
        results["truncation"] = truncation;
        verdict = c.holds;
    } else if (command == "surface") {
        if (!doc.surface) throw InvalidArgument("cli", "the document has no [surface] section");
        const SurfaceBlock& s = *doc.surface;
        const bool negdef = negdef_check(s.matrix);
        results["negative_definite"] = negdef;
        if (negdef) {
            if (s.c) results["total_transform"] = rationals(total_transform(s.matrix, *s.c));
            const SurfaceResolutionData data{s.matrix, s.u, s.v, s.w};
            const auto e = e2_from_orders(data);
            results["e2"] = json{{"e2_I1", to_string(e.e2_I1)},
                                 {"e2_I2", to_string(e.e2_I2)},
                                 {"mixed", to_string(e.mixed)},
                                 {"inequality_holds", e.inequality_holds}};
            const auto f = form_inequality_check(s.matrix, s.u, s.v, s.w);
            results["form_inequality"] = json{{"hypothesis", f.hypothesis},
                                              {"conclusion", f.conclusion},
                                              {"lhs", to_string(f.lhs)},
                                              {"rhs", to_string(f.rhs)},
                                              {"degenerate_w", f.degenerate_w}};
            verdict = e.inequality_holds && (!f.hypothesis || f.conclusion);
        } else {
            verdict = false;
        }
    } else if (command == "whitney") {
        require_names(args, 2, command);
        if (!doc.ring) throw InvalidArgument("cli", "the document declares no ring");
        const auto w = whitney_battery(single_germ(doc.ideal(args.names[0]), args.names[0]),
                                       single_germ(doc.ideal(args.names[1]), args.names[1]), config);
        results = whitney_json(w);
        verdict = w.whitney_sufficient;
    } else if (command == "teissier") {
        require_names(args, 2, command);
        const GermContext germ = germ_of(doc, config);
        const auto r = teissier_criterion(germ, doc.ideal(args.names[0]), doc.ideal(args.names[1]), config);
        results["report"] = comparison_json(r);
        results["same_integral_closure"] = r.holds();
        verdict = r.holds();
    } else {
        throw InvalidArgument("cli", "unknown command '" + command + "'");
    }

    out["results"] = results;
    out["verdict"] = verdict;
    out["statistics"] = statistics_json();
    if (settings.timing) {
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6f", seconds);
        out["timing"] = json{{"seconds", buf}};
    }
    report.exit_code = verdict ? kExitOk : kExitVerdictFalse;
    return report;
}

Report run_whitney_files(const InputDocument& f0, const InputDocument& f1, const RunSettings& settings) {
    if (!f0.ring || !f1.ring) throw InvalidArgument("cli", "germ files must declare a ring");
    if (f0.ring->variables() != f1.ring->variables())
        throw InvalidArgument("cli", "germ files declare different rings");
    if (f0.ideals.size() != 1 || f1.ideals.size() != 1)
        throw InvalidArgument("cli", "a germ file holds exactly one ideal with one polynomial");
    InputDocument merged;
    merged.ring = f0.ring;
    merged.options = f0.options;
    merged.ideals.emplace_back("f0", f0.ideals.front().second);
    merged.ideals.emplace_back("f1", f1.ideals.front().second.in_ring(f0.ring));
    CommandArgs args;
    args.names = {"f0", "f1"};
    return run_command(merged, "whitney", args, settings);
}

} // namespace mixsegre
