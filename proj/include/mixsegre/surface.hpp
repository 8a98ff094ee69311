#pragma once

#include "mixsegre/rational.hpp"

#include <vector>

namespace mixsegre {

using IntegerMatrix = std::vector<std::vector<Integer>>;
using RationalMatrix = std::vector<std::vector<Rational>>;
using RationalVector = std::vector<Rational>;

// Intersection matrix (E_i, E_j) of the exceptional curves of a resolution
// and the vanishing-order vectors u, v, w along them.
struct SurfaceResolutionData {
    IntegerMatrix intersection_matrix;
    RationalVector u, v, w;

    // Symmetric, negative definite, matching lengths, entries of u, v, w >= 0.
    void validate() const;
};

// -M is positive definite, by the signs of its leading principal minors.
bool negdef_check(const IntegerMatrix& M);
bool posdef_check(const RationalMatrix& G);

// The unique a with c_i + sum_j a_j (E_j, E_i) = 0, i.e. a = -M^{-1} c.
// Throws when some a_j is not strictly positive.
RationalVector total_transform(const IntegerMatrix& M, const RationalVector& c);

// <x, y> = -x^T M y.
Rational pairing(const IntegerMatrix& M, const RationalVector& x, const RationalVector& y);
// x^T G y for a Gram matrix G.
Rational gram_pairing(const RationalMatrix& G, const RationalVector& x, const RationalVector& y);

struct SurfaceNumbers {
    Rational e2_I1;
    Rational e2_I2;
    Rational mixed;
    // mixed^2 <= e2_I1 * e2_I2.
    bool inequality_holds = false;
};

// e2_I1 = <u+w, u>, e2_I2 = <v+w, v>, mixed = <v+w, u>.
SurfaceNumbers e2_from_orders(const SurfaceResolutionData& data);

struct FormInequalityResult {
    // <u, w> >= <v, w> >= 0.
    bool hypothesis = false;
    // <u+w, v>^2 <= <u+w, u> <v+w, v>.
    bool conclusion = false;
    Rational lhs;
    Rational rhs;
    // w = 0: allowed, flagged.
    bool degenerate_w = false;
};

// For a positive definite form, the hypothesis implies the conclusion; a
// violation throws Error.
FormInequalityResult form_inequality_check(const RationalMatrix& gram, const RationalVector& u,
                                           const RationalVector& v, const RationalVector& w);
FormInequalityResult form_inequality_check(const IntegerMatrix& M, const RationalVector& u,
                                           const RationalVector& v, const RationalVector& w);

// Intersection matrix of a chain of r (-2)-curves.
IntegerMatrix a_chain_matrix(std::size_t r);

} // namespace mixsegre
