#include "mixsegre/ring.hpp"

#include "mixsegre/error.hpp"

#include <algorithm>
#include <set>

namespace mixsegre {

namespace {

// Graded reverse lexicographic comparison restricted to [begin, end).
int grevlex_range(const Monomial& a, const Monomial& b, std::size_t begin, std::size_t end) noexcept {
    long da = 0;
    long db = 0;
    for (std::size_t i = begin; i < end; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = end; i-- > begin;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

} // namespace

MonomialOrder MonomialOrder::block(std::size_t split) {
    if (split == 0) throw InvalidArgument("algebra_kernel", "block order needs a nonempty first block");
    return MonomialOrder(Kind::block, split);
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const noexcept {
    switch (kind_) {
    case Kind::grevlex: {
        if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
        }
        return 0;
    }
    case Kind::lex:
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        }
        return 0;
    case Kind::block: {
        const std::size_t split = std::min(*split_, a.size());
        if (int c = grevlex_range(a, b, 0, split); c != 0) return c;
        return grevlex_range(a, b, split, a.size());
    }
    }
    return 0;
}

std::string MonomialOrder::name() const {
    switch (kind_) {
    case Kind::grevlex: return "grevlex";
    case Kind::lex: return "lex";
    case Kind::block: return "block(" + std::to_string(*split_) + ")";
    }
    return "?";
}

Ring PolynomialRing::make(std::vector<std::string> variables, MonomialOrder order) {
    if (variables.size() > kMaxVariables)
        throw ResourceLimit("algebra_kernel", "too many variables (limit " + std::to_string(kMaxVariables) + ")");
    std::set<std::string> seen;
    for (const auto& v : variables) {
        if (v.empty()) throw InvalidArgument("algebra_kernel", "empty variable name");
        if (!seen.insert(v).second) throw InvalidArgument("algebra_kernel", "duplicate variable '" + v + "'");
    }
    if (order.kind() == MonomialOrder::Kind::block && *order.block_split() >= variables.size() && !variables.empty())
        throw InvalidArgument("algebra_kernel", "block split must leave a nonempty second block");
    return Ring(new PolynomialRing(std::move(variables), order));
}

std::optional<std::size_t> PolynomialRing::index_of(const std::string& name) const {
    auto it = std::find(variables_.begin(), variables_.end(), name);
    if (it == variables_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - variables_.begin());
}

Ring PolynomialRing::with_order(MonomialOrder order) const { return make(variables_, order); }

Ring PolynomialRing::with_leading_variables(const std::vector<std::string>& extra) const {
    std::vector<std::string> names = extra;
    names.insert(names.end(), variables_.begin(), variables_.end());
    return make(std::move(names), MonomialOrder::block(extra.size()));
}

Ring PolynomialRing::trailing_subring(std::size_t keep) const {
    if (keep > variables_.size()) throw InvalidArgument("algebra_kernel", "subring larger than ring");
    return make(std::vector<std::string>(variables_.end() - static_cast<long>(keep), variables_.end()));
}

bool compatible(const Ring& a, const Ring& b) noexcept { return a == b || *a == *b; }

} // namespace mixsegre
