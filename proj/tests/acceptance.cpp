#include "mixsegre/criteria.hpp"
#include "mixsegre/document.hpp"
#include "mixsegre/error.hpp"
#include "mixsegre/groebner.hpp"
#include "mixsegre/local_multiplicity.hpp"
#include "mixsegre/report.hpp"
#include "mixsegre/segre.hpp"
#include "mixsegre/surface.hpp"
#include "oracles.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace mixsegre;

namespace {

const std::filesystem::path kCorpus = MIXSEGRE_CORPUS_DIR;

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

InputDocument load(const std::string& name) { return parse_input(slurp(kCorpus / name)); }

GenericityConfig cfg(std::uint64_t seed = kDefaultSeed) {
    GenericityConfig c;
    c.seed = seed;
    return c;
}

Ideal make(const Ring& r, std::initializer_list<const char*> gens) {
    std::vector<Polynomial> polys;
    for (const char* g : gens) polys.push_back(parse_polynomial(g, r));
    return Ideal(r, polys);
}

std::vector<oracle::SparsePoly> sparse(const Ideal& I) {
    std::vector<oracle::SparsePoly> out;
    for (const auto& g : I.generators()) {
        oracle::SparsePoly p;
        for (const auto& t : g.terms()) {
            oracle::Exponent e(I.ring()->nvars());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = t.mono[i];
            p.emplace_back(t.coeff, e);
        }
        out.push_back(p);
    }
    return out;
}

std::vector<oracle::Exponent> exps(const Ideal& I) {
    std::vector<oracle::Exponent> out;
    for (const auto& p : sparse(I)) out.push_back(p.front().second);
    return out;
}

// Every named ideal in the corpus documents, each on its affine space.
std::vector<Ideal> corpus_ideals() {
    std::vector<Ideal> out;
    for (const auto& entry : std::filesystem::directory_iterator(kCorpus)) {
        const auto ext = entry.path().extension();
        if (ext != ".ideal" && ext != ".poly") continue;
        for (const auto& [name, I] : parse_input(slurp(entry.path())).ideals) out.push_back(I);
    }
    std::sort(out.begin(), out.end(), [](const Ideal& a, const Ideal& b) { return a.to_string() < b.to_string(); });
    return out;
}

struct Manifest {
    std::string name;
    int expected;
    std::vector<std::string> argv;
};

std::vector<Manifest> manifest() {
    std::vector<Manifest> out;
    std::istringstream in(slurp(kCorpus / "manifest.txt"));
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        Manifest m;
        ls >> m.name >> m.expected;
        for (std::string w; ls >> w;) m.argv.push_back(w);
        out.push_back(m);
    }
    return out;
}

// Runs one manifest entry in-process, as the command-line tool would.
std::string run_entry(const Manifest& m, std::optional<std::uint64_t> seed) {
    RunSettings settings;
    settings.seed = seed;
    CommandArgs args;
    std::vector<std::string> rest;
    for (std::size_t i = 1; i < m.argv.size(); ++i) {
        if (m.argv[i] == "--power") {
            const std::string v = m.argv[++i];
            args.power = std::make_pair(static_cast<unsigned>(std::stoul(v.substr(0, v.find(',')))),
                                        static_cast<unsigned>(std::stoul(v.substr(v.find(',') + 1))));
        } else {
            rest.push_back(m.argv[i]);
        }
    }
    try {
        if (m.argv[0] == "whitney" && rest.size() == 2 && rest[0].ends_with(".poly"))
            return run_whitney_files(load(rest[0]), load(rest[1]), settings).json.dump(2);
        args.names.assign(rest.begin() + 1, rest.end());
        return run_command(load(rest[0]), m.argv[0], args, settings).json.dump(2);
    } catch (const Error& e) {
        return error_report(m.argv[0], e.module(), e.what()).dump(2);
    }
}

// Drops draw provenance and counters so that only certified numbers remain.
void strip(nlohmann::ordered_json& j) {
    if (j.is_object()) {
        for (const char* key : {"config", "statistics", "chain"}) j.erase(key);
        for (auto& [k, v] : j.items()) strip(v);
    } else if (j.is_array()) {
        for (auto& v : j) strip(v);
    }
}

struct Outcome {
    bool pass;
    std::string detail;
};

Outcome c1_golden() {
    const auto start = std::chrono::steady_clock::now();
    const InputDocument doc = load("pair.ideal");
    const Ideal &I1 = doc.ideal("I1"), &I2 = doc.ideal("I2");
    const auto germ = GermContext::affine_space(doc.ring);
    const SegreProfile p1 = segre_profile(germ, I1, cfg()), p2 = segre_profile(germ, I2, cfg());
    const auto e11 = mixed_segre(germ, I1, I2, 1, 1, 1, cfg());
    const ComparisonReport battery = closure_battery(germ, I1, I2, cfg());
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = p1.segre(1) == 1 && p2.segre(1) == 1 && e11 == 1 && p1.segre(2) == 0 && p2.segre(2) == 1 &&
                    !battery.holds() && battery.first_failure() && battery.first_failure()->index == 2 && secs < 30;
    std::ostringstream d;
    d << "e1 = " << p1.segre(1) << "/" << p2.segre(1) << "/" << e11 << ", e2 = " << p1.segre(2) << "/"
      << p2.segre(2) << ", battery fails at j = "
      << (battery.first_failure() ? std::to_string(battery.first_failure()->index) : "none") << ", " << secs << " s";
    return {ok, d.str()};
}

Outcome c2_product() {
    const InputDocument doc = load("plane.ideal");
    const Ideal &I = doc.ideal("I"), &J = doc.ideal("J");
    const auto res = product_formula_check(GermContext::affine_space(doc.ring), I, J, 2, cfg());
    const auto newton = oracle::newton_multiplicity(exps(I * J));
    const auto mixed = oracle::newton_mixed(exps(I), exps(J));
    const bool ok = res.lhs == 11 && newton == 11 && res.binomial_sum == 11 && res.plain_sum == 9 &&
                    res.terms == std::vector<std::uint64_t>{6, mixed, oracle::newton_multiplicity(exps(I))} &&
                    *oracle::staircase_count(exps(J), 2) == 6;
    return {ok, "e(IJ) = " + std::to_string(res.lhs) + ", binomial " + to_string(res.binomial_sum) + ", plain " +
                    to_string(res.plain_sum) + ", covolume oracle " + std::to_string(newton)};
}

Outcome c3_minkowski() {
    const InputDocument doc = load("plane.ideal");
    const auto res = minkowski_check(GermContext::affine_space(doc.ring), doc.ideal("I"), doc.ideal("J"), 2, cfg());
    bool ok = res.holds && !res.equality && res.comparison < 0 && compare_root_sum(1, 6, 11, 2) < 0;
    int equalities = 0;
    for (const auto& I : corpus_ideals()) {
        const auto germ = GermContext::affine_space(I.ring());
        if (!is_primary_at_origin(germ, I)) continue;
        const auto e = segre_profile(germ, I, cfg()).segre(germ.n);
        const auto e2 = segre_profile(germ, I.pow(2), cfg()).segre(germ.n);
        ok = ok && compare_root_sum(e, e, e2, static_cast<unsigned>(germ.n)) == 0;
        ++equalities;
    }
    return {ok && equalities > 0,
            "11^(1/2) < 1 + 6^(1/2) strict; equality for " + std::to_string(equalities) + " m-primary ideals"};
}

Outcome c4_squaring() {
    int checked = 0;
    for (const auto& I : corpus_ideals()) {
        const auto germ = GermContext::affine_space(I.ring());
        const auto p = segre_profile(germ, I, cfg()), q = segre_profile(germ, I.pow(2), cfg());
        for (int k = 1; k <= germ.n; ++k) {
            if (q.segre(k) != (std::uint64_t{1} << k) * p.segre(k))
                return {false, I.to_string() + " at k = " + std::to_string(k)};
            ++checked;
        }
    }
    return {checked > 0, std::to_string(checked) + " (ideal, k) pairs"};
}

Outcome c5_polar_restriction() {
    int checked = 0;
    for (const auto& I : corpus_ideals()) {
        const auto germ = GermContext::affine_space(I.ring());
        const PolarChain chain = polar_chain(germ, I, cfg());
        const SegreProfile p = profile_of(chain);
        for (int j = 1; j < germ.n; ++j) {
            const Ideal& polar = chain.stages[static_cast<std::size_t>(j)].polar;
            if (is_unit_ideal(polar)) continue;
            const SegreProfile sub = segre_on_subspace(germ, I, polar, cfg());
            for (int i = 1; i + j <= germ.n; ++i) {
                if (sub.segre(i) != p.segre(i + j))
                    return {false, I.to_string() + " i = " + std::to_string(i) + ", j = " + std::to_string(j)};
                ++checked;
            }
        }
    }
    return {checked > 0, std::to_string(checked) + " (ideal, i, j) triples"};
}

Outcome c6_rees() {
    const InputDocument a = load("rees.ideal"), b = load("rees_line.ideal");
    const auto eq = rees_test(GermContext::affine_space(a.ring), a.ideal("I"), a.ideal("J"), cfg());
    const auto ne = rees_test(GermContext::affine_space(b.ring), b.ideal("I"), b.ideal("J"), cfg());
    const bool ok = eq.holds() && eq.left_profile.e == std::vector<std::uint64_t>{0, 4} &&
                    eq.right_profile.e == std::vector<std::uint64_t>{0, 4} && !ne.holds() && ne.first_failure() &&
                    ne.first_failure()->index == 1;
    return {ok, "(x^2, y^2) ~ (x^2, xy, y^2) with (0, 4); (z^2) vs (z) differ at e1"};
}

Outcome c7_teissier() {
    const InputDocument a = load("rees.ideal"), b = load("plane.ideal");
    const auto same = teissier_criterion(GermContext::affine_space(a.ring), a.ideal("I"), a.ideal("J"), cfg());
    const auto diff = teissier_criterion(GermContext::affine_space(b.ring), b.ideal("I"), b.ideal("J"), cfg());
    const bool ok = same.mixed_multiplicities == std::vector<std::uint64_t>{4, 4, 4} && same.holds() &&
                    diff.mixed_multiplicities == std::vector<std::uint64_t>{1, 2, 6} && !diff.holds();
    return {ok, "chains (4, 4, 4) and (1, 2, 6)"};
}

Outcome c8_colength() {
    std::vector<Ideal> zero_dim;
    for (const auto& I : corpus_ideals()) {
        const auto c = colength(I);
        if (c.is_finite()) zero_dim.push_back(I);
        const auto sq = I.pow(2);
        if (colength(sq).is_finite()) zero_dim.push_back(sq);
    }
    const InputDocument plane = load("plane.ideal");
    zero_dim.push_back(plane.ideal("I") * plane.ideal("J"));
    int checked = 0;
    for (const auto& I : zero_dim) {
        const auto c = colength(I);
        if (c.value() > 30) continue;
        const auto o = oracle::macaulay_colength(sparse(I), I.ring()->nvars(), 24);
        if (!o || *o != c.value()) return {false, I.to_string()};
        ++checked;
    }
    return {checked >= 5, std::to_string(checked) + " zero-dimensional ideals"};
}

Outcome c9_hilbert_samuel() {
    const Ring r3 = PolynomialRing::make({"x", "y", "z"});
    const Ideal z = make(r3, {"z"});
    for (unsigned N = 1; N <= 10; ++N)
        if (hilbert_samuel(z, N) != N * (N + 1) / 2) return {false, "N = " + std::to_string(N)};
    const Ring r2 = PolynomialRing::make({"x", "y"});
    const auto res = multiplicity_at_origin(make(r2, {"x^2 - y^3"}));
    bool settled = res.stabilized && res.local_dimension == 1 && res.samples.size() >= 3;
    for (std::size_t i = res.samples.size() - 3; settled && i + 1 < res.samples.size(); ++i)
        settled = res.samples[i + 1].value - res.samples[i].value == 2;
    return {settled && res.multiplicity == 2, "HS((z), N) = N(N+1)/2 for N <= 10; cusp multiplicity 2"};
}

Outcome c10_fuzz() {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> val(0, 30), len(1, 5), mode(0, 2);
    int tuples = 0, tuple_equal = 0;
    for (; tuples < 10000; ++tuples) {
        TupleTriple t;
        const int n = len(rng), m = mode(rng);
        for (int i = 0; i < n; ++i) {
            Integer b = val(rng), c = m == 0 ? b : Integer(val(rng)), a;
            mpz_sqrt(a.get_mpz_t(), Integer(b * c).get_mpz_t());
            if (m == 2 && a > 0) a -= 1;
            t.a.push_back(a);
            t.b.push_back(b);
            t.c.push_back(c);
        }
        const auto r = tuple_lemma(t);
        if (!r.hypothesis_ok) return {false, "generator produced an invalid instance"};
        if (r.sums_equal) ++tuple_equal;
    }
    int forms = 0;
    std::uniform_int_distribution<int> size(1, 6), self(2, 4), order(0, 6);
    while (forms < 1000) {
        const std::size_t n = static_cast<std::size_t>(size(rng));
        IntegerMatrix M(n, std::vector<Integer>(n, 0));
        for (std::size_t i = 0; i < n; ++i) M[i][i] = -self(rng);
        for (std::size_t i = 1; i < n; ++i) M[i][i - 1] = M[i - 1][i] = 1;
        RationalVector u, v, w;
        for (std::size_t i = 0; i < n; ++i) u.emplace_back(order(rng)), v.emplace_back(order(rng)), w.emplace_back(order(rng));
        const auto r = form_inequality_check(M, u, v, w);
        if (r.hypothesis) ++forms;
    }
    return {true, std::to_string(tuples) + " tuple instances (" + std::to_string(tuple_equal) +
                      " with equal sums), " + std::to_string(forms) + " form instances, no violations"};
}

Outcome c11_surface() {
    auto ints = [](std::vector<std::vector<long>> rows) {
        IntegerMatrix M;
        for (const auto& row : rows) {
            std::vector<Integer> r;
            for (long v : row) r.emplace_back(v);
            M.push_back(r);
        }
        return M;
    };
    bool ok = total_transform(ints({{-2}}), {1}) == RationalVector{Rational(1, 2)} &&
              total_transform(ints({{-2, 1}, {1, -2}}), {1, 0}) == RationalVector{Rational(2, 3), Rational(1, 3)};
    for (std::size_t n = 1; n <= 8; ++n)
        for (std::size_t j = 0; j < n; ++j) {
            RationalVector c(n, 0);
            c[j] = 1;
            for (const auto& a : total_transform(a_chain_matrix(n), c)) ok = ok && a > 0;
        }
    return {ok, "[1/2], [2/3, 1/3]; positive transforms on A_1 .. A_8"};
}

Outcome c12_determinism() {
    int runs = 0;
    for (const auto& m : manifest()) {
        const std::string a = run_entry(m, std::nullopt), b = run_entry(m, std::nullopt);
        if (a != b) return {false, m.name + " differs between identical runs"};
        auto x = nlohmann::ordered_json::parse(a), y = nlohmann::ordered_json::parse(run_entry(m, 0xABCDEF));
        strip(x);
        strip(y);
        if (x != y) return {false, m.name + " certified numbers depend on the seed"};
        ++runs;
    }
    return {runs > 0, std::to_string(runs) + " corpus runs byte-identical; seed change keeps numbers"};
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"golden example on C^3", c1_golden},
        {"product formula", c2_product},
        {"Minkowski inequality", c3_minkowski},
        {"squaring law", c4_squaring},
        {"polar restriction identity", c5_polar_restriction},
        {"Rees test", c6_rees},
        {"Teissier chains", c7_teissier},
        {"colength oracle equivalence", c8_colength},
        {"Hilbert-Samuel exactness", c9_hilbert_samuel},
        {"fuzz suites", c10_fuzz},
        {"surface solves", c11_surface},
        {"determinism", c12_determinism},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += o.pass ? 0 : 1;
        std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << ": " << o.detail
                  << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
