#include "mixsegre/criteria.hpp"

#include "mixsegre/error.hpp"
#include "mixsegre/groebner.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace mixsegre {

namespace {

constexpr const char* kModule = "criteria";

std::string segre_name(int k, int i, int j) {
    return "e_" + std::to_string(k) + "^{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

// Segre numbers of a pair, computed on demand and cached.
class PairData {
public:
    PairData(const GermContext& germ, const Ideal& I1, const Ideal& I2, const GenericityConfig& config)
        : germ_(germ), I1_(I1), I2_(I2), config_(config) {}

    const SegreProfile& left() {
        if (!left_) left_ = segre_profile(germ_, I1_, config_);
        return *left_;
    }
    const SegreProfile& right() {
        if (!right_) right_ = segre_profile(germ_, I2_, config_);
        return *right_;
    }

    std::uint64_t entry(int k, int i, int j) {
        if (i == k && j == 0) return left().segre(k);
        if (i == 0 && j == k) return right().segre(k);
        auto it = cache_.find({k, i, j});
        if (it != cache_.end()) return it->second;
        const std::uint64_t v = mixed_segre(germ_, I1_, I2_, k, i, j, config_);
        cache_[{k, i, j}] = v;
        return v;
    }

    std::string label(int k, int i, int j) {
        if (i == k && j == 0) return "e_" + std::to_string(k) + "(I1)";
        if (i == 0 && j == k) return "e_" + std::to_string(k) + "(I2)";
        return segre_name(k, i, j);
    }

    MixedSegreTable table() {
        MixedSegreTable t;
        t.n = germ_.n;
        for (int k = 1; k <= germ_.n; ++k) {
            t.entries[{k, k, 0}] = left().segre(k);
            t.entries[{k, 0, k}] = right().segre(k);
        }
        for (const auto& [key, v] : cache_) t.entries[key] = v;
        return t;
    }

    const GermContext& germ() const { return germ_; }

private:
    GermContext germ_;
    Ideal I1_, I2_;
    GenericityConfig config_;
    std::optional<SegreProfile> left_, right_;
    std::map<std::tuple<int, int, int>, std::uint64_t> cache_;
};

Verdict equality_verdict(PairData& data, const std::string& criterion, int index,
                         const std::vector<std::tuple<int, int, int>>& keys) {
    std::vector<std::uint64_t> values;
    std::ostringstream evidence;
    for (std::size_t n = 0; n < keys.size(); ++n) {
        const auto [k, i, j] = keys[n];
        values.push_back(data.entry(k, i, j));
        evidence << (n ? ", " : "") << data.label(k, i, j) << " = " << values.back();
    }
    const bool equal = std::all_of(values.begin(), values.end(), [&](auto v) { return v == values.front(); });
    return Verdict{criterion, index, equal ? VerdictStatus::holds : VerdictStatus::fails, evidence.str()};
}

std::vector<Verdict> battery_verdicts(PairData& data, int first_j, int last_j) {
    std::vector<Verdict> out;
    for (int j = std::max(first_j, 1); j <= last_j; ++j) {
        if (j == 1) {
            out.push_back(equality_verdict(data, "closure-battery", 1, {{1, 1, 0}, {1, 1, 1}, {1, 0, 1}}));
            continue;
        }
        out.push_back(
            equality_verdict(data, "closure-battery-first", j, {{j, j, 0}, {j, j - 1, 1}, {j, j - 2, 2}}));
        out.push_back(
            equality_verdict(data, "closure-battery-second", j, {{j, 2, j - 2}, {j, 1, j - 1}, {j, 0, j}}));
    }
    return out;
}

bool all_hold(const std::vector<Verdict>& v) {
    return std::all_of(v.begin(), v.end(), [](const Verdict& x) { return x.holds(); });
}

Integer binomial(int n, int k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer to_integer(std::uint64_t v) {
    Integer r;
    mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return r;
}

Integer power(const Integer& base, unsigned e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// floor(v^{1/k} * 2^p) and whether it is exact.
std::pair<Integer, bool> scaled_root(const Integer& v, unsigned k, unsigned long p) {
    Integer scaled = v;
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), p * k);
    Integer r;
    const bool exact = mpz_root(r.get_mpz_t(), scaled.get_mpz_t(), k) != 0;
    return {r, exact};
}

void require_k(const GermContext& germ, int k) {
    if (k < 1 || k > germ.n) throw InvalidArgument(kModule, "codimension k must satisfy 1 <= k <= n");
}

void require_nonnegative(const std::vector<Integer>& v) {
    for (const auto& x : v)
        if (x < 0) throw InvalidArgument(kModule, "tuple entries must be nonnegative");
}

} // namespace

std::string to_string(VerdictStatus s) {
    switch (s) {
    case VerdictStatus::holds: return "holds";
    case VerdictStatus::fails: return "fails";
    case VerdictStatus::hypothesis_not_met: return "hypothesis not met";
    }
    return "unknown";
}

bool ComparisonReport::holds() const { return all_hold(verdicts); }

std::optional<Verdict> ComparisonReport::first_failure() const {
    for (const auto& v : verdicts)
        if (!v.holds()) return v;
    return std::nullopt;
}

TupleLemmaResult tuple_lemma(const TupleTriple& t) {
    if (t.a.size() != t.b.size() || t.a.size() != t.c.size())
        throw InvalidArgument(kModule, "tuples must have equal length");
    require_nonnegative(t.a);
    require_nonnegative(t.b);
    require_nonnegative(t.c);
    TupleLemmaResult r;
    r.hypothesis_ok = true;
    r.componentwise_equal = true;
    Integer sa = 0, sb = 0, sc = 0;
    for (std::size_t i = 0; i < t.a.size(); ++i) {
        if (t.a[i] * t.a[i] > t.b[i] * t.c[i]) r.hypothesis_ok = false;
        if (t.a[i] != t.b[i] || t.a[i] != t.c[i]) r.componentwise_equal = false;
        sa += t.a[i];
        sb += t.b[i];
        sc += t.c[i];
    }
    r.sums_equal = sa == sb && sb == sc;
    if (r.hypothesis_ok && r.sums_equal != r.componentwise_equal)
        throw Error(kModule, "tuple lemma violated by an instance satisfying its hypothesis");
    return r;
}

ComparisonReport teissier_criterion(const GermContext& germ, const Ideal& I1, const Ideal& I2,
                                    const GenericityConfig& config) {
    ComparisonReport report;
    std::ostringstream evidence;
    for (int i = germ.n; i >= 0; --i) {
        report.mixed_multiplicities.push_back(mixed_multiplicity_primary(germ, I1, I2, i, config));
        evidence << (i == germ.n ? "" : ", ") << "e_{" << i << "," << germ.n - i
                 << "} = " << report.mixed_multiplicities.back();
    }
    report.left_profile = segre_profile(germ, I1, config);
    report.right_profile = segre_profile(germ, I2, config);
    report.mixed.n = germ.n;
    for (int i = 0; i <= germ.n; ++i)
        report.mixed.entries[{germ.n, i, germ.n - i}] =
            report.mixed_multiplicities[static_cast<std::size_t>(germ.n - i)];
    const auto& chain = report.mixed_multiplicities;
    const bool equal = std::all_of(chain.begin(), chain.end(), [&](auto v) { return v == chain.front(); });
    report.verdicts.push_back(
        Verdict{"teissier-chain", germ.n, equal ? VerdictStatus::holds : VerdictStatus::fails, evidence.str()});
    return report;
}

ComparisonReport closure_battery(const GermContext& germ, const Ideal& I1, const Ideal& I2,
                                 const GenericityConfig& config) {
    return closure_battery(germ, I1, I2, config, 1);
}

ComparisonReport closure_battery(const GermContext& germ, const Ideal& I1, const Ideal& I2,
                                 const GenericityConfig& config, int first_j) {
    PairData data(germ, I1, I2, config);
    ComparisonReport report;
    report.verdicts = battery_verdicts(data, first_j, germ.n);
    report.left_profile = data.left();
    report.right_profile = data.right();
    report.mixed = data.table();
    return report;
}

ComparisonReport rees_test(const GermContext& germ, const Ideal& I1, const Ideal& I2, const GenericityConfig& config) {
    if (!ideal_contains(I2 + germ.ambient, I1))
        throw PreconditionFailed(kModule, "the first ideal is not contained in the second");
    ComparisonReport report;
    report.left_profile = segre_profile(germ, I1, config);
    report.right_profile = segre_profile(germ, I2, config);
    report.mixed.n = germ.n;
    for (int k = 1; k <= germ.n; ++k) {
        const auto a = report.left_profile.segre(k), b = report.right_profile.segre(k);
        report.mixed.entries[{k, k, 0}] = a;
        report.mixed.entries[{k, 0, k}] = b;
        report.verdicts.push_back(Verdict{"segre-profile", k, a == b ? VerdictStatus::holds : VerdictStatus::fails,
                                          "e_" + std::to_string(k) + "(I1) = " + std::to_string(a) + ", e_" +
                                              std::to_string(k) + "(I2) = " + std::to_string(b)});
    }
    return report;
}

ProductFormulaResult product_formula_check(const GermContext& germ, const Ideal& I1, const Ideal& I2, int k,
                                           const GenericityConfig& config) {
    require_k(germ, k);
    PairData data(germ, I1, I2, config);
    ProductFormulaResult r;
    r.k = k;
    r.hypotheses = battery_verdicts(data, 1, k - 1);
    r.hypothesis_met = all_hold(r.hypotheses);
    r.lhs = segre_profile(germ, I1 * I2, config).segre(k);
    const bool primary = k == germ.n && is_primary_at_origin(germ, I1, config.multiplicity) &&
                         is_primary_at_origin(germ, I2, config.multiplicity);
    r.binomial_sum = 0;
    r.plain_sum = 0;
    for (int i = 0; i <= k; ++i) {
        const std::uint64_t term =
            primary ? mixed_multiplicity_primary(germ, I1, I2, i, config) : data.entry(k, i, k - i);
        r.terms.push_back(term);
        r.binomial_sum += binomial(k, i) * to_integer(term);
        r.plain_sum += to_integer(term);
    }
    const Integer lhs = to_integer(r.lhs);
    r.binomial_matches = r.binomial_sum == lhs;
    r.plain_matches = r.plain_sum == lhs;
    r.verdict = r.binomial_matches ? (r.plain_matches ? "both" : "binomial") : (r.plain_matches ? "plain" : "neither");
    return r;
}

int compare_root_sum(const Integer& x, const Integer& y, const Integer& z, unsigned k) {
    if (k == 0) throw InvalidArgument(kModule, "root order must be positive");
    if (x < 0 || y < 0 || z < 0) throw InvalidArgument(kModule, "roots of negative numbers");
    auto sign = [](const Integer& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); };
    if (k == 1) return sign(z - x - y);
    if (z == 0) return (x == 0 && y == 0) ? 0 : -1;
    if (x == 0) return sign(z - y);
    if (y == 0) return sign(z - x);

    // x^{1/k} + y^{1/k} = z^{1/k} forces both ratios (x/z)^{1/k}, (y/z)^{1/k}
    // to be rational, i.e. x z^{k-1} and y z^{k-1} are perfect k-th powers.
    const Integer zk = power(z, k - 1);
    const auto [r1, exact1] = scaled_root(x * zk, k, 0);
    const auto [r2, exact2] = scaled_root(y * zk, k, 0);
    if (exact1 && exact2 && r1 + r2 == z) return 0;

    for (unsigned long p = 16; p <= (1ul << 24); p *= 2) {
        const auto [a, ea] = scaled_root(x, k, p);
        const auto [b, eb] = scaled_root(y, k, p);
        const auto [c, ec] = scaled_root(z, k, p);
        const Integer sum_lo = a + b;
        const Integer sum_hi = a + b + (ea ? 0 : 1) + (eb ? 0 : 1);
        const Integer c_hi = c + (ec ? 0 : 1);
        if (c > sum_hi) return 1;
        if (c_hi < sum_lo) return -1;
    }
    throw ResourceLimit(kModule, "root comparison did not separate");
}

MinkowskiResult minkowski_check(const GermContext& germ, const Ideal& I1, const Ideal& I2, int k,
                                const GenericityConfig& config) {
    require_k(germ, k);
    PairData data(germ, I1, I2, config);
    MinkowskiResult r;
    r.k = k;
    r.hypotheses = battery_verdicts(data, 1, k - 1);
    r.hypothesis_met = all_hold(r.hypotheses);
    r.product = segre_profile(germ, I1 * I2, config).segre(k);
    r.left = data.left().segre(k);
    r.right = data.right().segre(k);
    r.comparison =
        compare_root_sum(to_integer(r.left), to_integer(r.right), to_integer(r.product), static_cast<unsigned>(k));
    r.holds = r.comparison <= 0;
    r.equality = r.comparison == 0;
    return r;
}

std::vector<Verdict> mixed_inequality_check(const GermContext& germ, const Ideal& I1, const Ideal& I2,
                                            const GenericityConfig& config) {
    std::vector<Verdict> out;
    const int n = germ.n;
    const bool primary =
        is_primary_at_origin(germ, I1, config.multiplicity) && is_primary_at_origin(germ, I2, config.multiplicity);
    if (primary) {
        std::vector<std::uint64_t> chain(static_cast<std::size_t>(n) + 1);
        for (int i = 0; i <= n; ++i) chain[static_cast<std::size_t>(i)] = mixed_multiplicity_primary(germ, I1, I2, i, config);
        const Integer e1 = to_integer(chain[static_cast<std::size_t>(n)]);
        const Integer e2 = to_integer(chain[0]);
        for (int i = 1; i < n; ++i) {
            const Integer mixed = to_integer(chain[static_cast<std::size_t>(i)]);
            const Integer lhs = power(mixed, static_cast<unsigned>(n));
            const Integer rhs = power(e1, static_cast<unsigned>(i)) * power(e2, static_cast<unsigned>(n - i));
            out.push_back(Verdict{"mixed-multiplicity-bound", i, lhs <= rhs ? VerdictStatus::holds : VerdictStatus::fails,
                                  "e_{" + std::to_string(i) + "," + std::to_string(n - i) + "}^" + std::to_string(n) +
                                      " = " + to_string(lhs) + ", e(I1)^" + std::to_string(i) + " e(I2)^" +
                                      std::to_string(n - i) + " = " + to_string(rhs)});
        }
    } else {
        out.push_back(Verdict{"mixed-multiplicity-bound", 0, VerdictStatus::hypothesis_not_met,
                              "ideals are not primary to the maximal ideal"});
    }

    PairData data(germ, I1, I2, config);
    auto inequality = [&](const std::string& name, int k, std::tuple<int, int, int> sq, std::tuple<int, int, int> p,
                          std::tuple<int, int, int> q, bool hypothesis, const std::string& why) {
        if (!hypothesis) {
            out.push_back(Verdict{name, k, VerdictStatus::hypothesis_not_met, why});
            return;
        }
        const auto [a1, a2, a3] = sq;
        const auto [b1, b2, b3] = p;
        const auto [c1, c2, c3] = q;
        const Integer s = to_integer(data.entry(a1, a2, a3));
        const Integer l = s * s;
        const Integer rhs = to_integer(data.entry(b1, b2, b3)) * to_integer(data.entry(c1, c2, c3));
        out.push_back(Verdict{name, k, l <= rhs ? VerdictStatus::holds : VerdictStatus::fails,
                              data.label(a1, a2, a3) + "^2 = " + to_string(l) + ", " + data.label(b1, b2, b3) + " * " +
                                  data.label(c1, c2, c3) + " = " + to_string(rhs)});
    };

    if (n == 2) {
        const auto h = battery_verdicts(data, 1, 1);
        inequality("surface-mixed-inequality", 2, {2, 1, 1}, {2, 2, 0}, {2, 0, 2}, all_hold(h),
                   "first-codimension equalities fail: " + h.front().evidence);
    }
    for (int k = 2; k <= n; ++k) {
        const auto h = battery_verdicts(data, 1, k - 1);
        std::string why;
        for (const auto& v : h)
            if (!v.holds()) {
                why = "lower-codimension equalities fail: " + v.evidence;
                break;
            }
        inequality("codimension-mixed-inequality-first", k, {k, k - 1, 1}, {k, k, 0}, {k, k - 2, 2}, all_hold(h), why);
        inequality("codimension-mixed-inequality-second", k, {k, 1, k - 1}, {k, 2, k - 2}, {k, 0, k}, all_hold(h), why);
    }
    return out;
}

ComparisonReport power_equivalence_probe(const GermContext& germ, const Ideal& I1, const Ideal& I2, unsigned a,
                                         unsigned b, const GenericityConfig& config) {
    if (a < 1 || b < 1) throw InvalidArgument(kModule, "powers must be positive");
    return closure_battery(germ, I1.pow(a), I2.pow(b), config);
}

} // namespace mixsegre
