#pragma once

#include "mixsegre/monomial.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace mixsegre {

class MonomialOrder {
public:
    enum class Kind { grevlex, lex, block };

    static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, std::nullopt); }
    static MonomialOrder lex() { return MonomialOrder(Kind::lex, std::nullopt); }
    // Graded reverse lexicographic on the variables [0, split), ties broken
    // by graded reverse lexicographic on the rest. Eliminates the first block.
    static MonomialOrder block(std::size_t split);

    Kind kind() const noexcept { return kind_; }
    std::optional<std::size_t> block_split() const noexcept { return split_; }

    // Negative, zero or positive as a <, =, > b.
    int compare(const Monomial& a, const Monomial& b) const noexcept;
    bool less(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) < 0; }

    // True when every monomial of higher total degree is larger.
    bool is_degree_compatible() const noexcept { return kind_ == Kind::grevlex; }

    std::string name() const;

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

private:
    MonomialOrder(Kind kind, std::optional<std::size_t> split) : kind_(kind), split_(split) {}

    Kind kind_;
    std::optional<std::size_t> split_;
};

class PolynomialRing;
using Ring = std::shared_ptr<const PolynomialRing>;

// Variable names plus the active monomial order. Shared by pointer between
// all polynomials living in it; two rings are compatible when both the names
// and the order agree.
class PolynomialRing {
public:
    static Ring make(std::vector<std::string> variables, MonomialOrder order = MonomialOrder::grevlex());

    const std::vector<std::string>& variables() const noexcept { return variables_; }
    std::size_t nvars() const noexcept { return variables_.size(); }
    const MonomialOrder& order() const noexcept { return order_; }

    std::optional<std::size_t> index_of(const std::string& name) const;

    Ring with_order(MonomialOrder order) const;
    // Ring whose variables are `extra` followed by ours, under block order
    // eliminating the extra variables.
    Ring with_leading_variables(const std::vector<std::string>& extra) const;
    // Ring on the last `keep` variables, graded reverse lexicographic.
    Ring trailing_subring(std::size_t keep) const;

    bool same_variables(const PolynomialRing& other) const noexcept { return variables_ == other.variables_; }

    friend bool operator==(const PolynomialRing& a, const PolynomialRing& b) noexcept {
        return a.variables_ == b.variables_ && a.order_ == b.order_;
    }

private:
    PolynomialRing(std::vector<std::string> variables, MonomialOrder order)
        : variables_(std::move(variables)), order_(order) {}

    std::vector<std::string> variables_;
    MonomialOrder order_;
};

bool compatible(const Ring& a, const Ring& b) noexcept;

} // namespace mixsegre
