#include "mixsegre/surface.hpp"

#include "mixsegre/error.hpp"

namespace mixsegre {

namespace {

constexpr const char* kModule = "surface_form";

RationalMatrix to_rational(const IntegerMatrix& M) {
    RationalMatrix out;
    for (const auto& row : M) out.emplace_back(row.begin(), row.end());
    return out;
}

RationalMatrix negated(const IntegerMatrix& M) {
    RationalMatrix out = to_rational(M);
    for (auto& row : out)
        for (auto& x : row) x = -x;
    return out;
}

void require_symmetric(const RationalMatrix& M) {
    for (const auto& row : M)
        if (row.size() != M.size()) throw InvalidArgument(kModule, "matrix is not square");
    for (std::size_t i = 0; i < M.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (M[i][j] != M[j][i]) throw InvalidArgument(kModule, "matrix is not symmetric");
}

void require_length(const RationalMatrix& M, const RationalVector& x) {
    if (x.size() != M.size()) throw InvalidArgument(kModule, "vector length does not match the matrix");
}

// Gaussian elimination without row swaps: all pivots positive is exactly
// positivity of the leading principal minors.
bool pivots_positive(RationalMatrix A) {
    const std::size_t n = A.size();
    for (std::size_t k = 0; k < n; ++k) {
        if (A[k][k] <= 0) return false;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (A[i][k] == 0) continue;
            const Rational f = A[i][k] / A[k][k];
            for (std::size_t j = k; j < n; ++j) A[i][j] -= f * A[k][j];
        }
    }
    return true;
}

RationalVector solve(RationalMatrix A, RationalVector b) {
    const std::size_t n = A.size();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && A[p][k] == 0) ++p;
        if (p == n) throw InvalidArgument(kModule, "singular matrix");
        std::swap(A[p], A[k]);
        std::swap(b[p], b[k]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || A[i][k] == 0) continue;
            const Rational f = A[i][k] / A[k][k];
            for (std::size_t j = k; j < n; ++j) A[i][j] -= f * A[k][j];
            b[i] -= f * b[k];
        }
    }
    for (std::size_t i = 0; i < n; ++i) b[i] /= A[i][i];
    return b;
}

RationalVector sum(const RationalVector& a, const RationalVector& b) {
    RationalVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

} // namespace

void SurfaceResolutionData::validate() const {
    const RationalMatrix M = to_rational(intersection_matrix);
    require_symmetric(M);
    if (M.empty()) throw InvalidArgument(kModule, "empty intersection matrix");
    if (!negdef_check(intersection_matrix)) throw PreconditionFailed(kModule, "intersection matrix is not negative definite");
    for (const auto* vec : {&u, &v, &w}) {
        require_length(M, *vec);
        for (const auto& x : *vec)
            if (x < 0) throw InvalidArgument(kModule, "vanishing orders must be nonnegative");
    }
}

bool negdef_check(const IntegerMatrix& M) {
    const RationalMatrix G = negated(M);
    require_symmetric(G);
    return pivots_positive(G);
}

bool posdef_check(const RationalMatrix& G) {
    require_symmetric(G);
    return pivots_positive(G);
}

RationalVector total_transform(const IntegerMatrix& M, const RationalVector& c) {
    if (!negdef_check(M)) throw PreconditionFailed(kModule, "intersection matrix is not negative definite");
    const RationalMatrix A = to_rational(M);
    require_length(A, c);
    bool nonzero = false;
    for (const auto& x : c) {
        if (x < 0) throw InvalidArgument(kModule, "strict transform intersections must be nonnegative");
        nonzero = nonzero || x != 0;
    }
    if (!nonzero) throw InvalidArgument(kModule, "strict transform meets no exceptional curve");
    RationalVector rhs = c;
    for (auto& x : rhs) x = -x;
    RationalVector a = solve(A, rhs);
    for (const auto& x : a)
        if (x <= 0) throw Error(kModule, "total transform has a nonpositive coefficient " + to_string(x));
    return a;
}

Rational gram_pairing(const RationalMatrix& G, const RationalVector& x, const RationalVector& y) {
    require_length(G, x);
    require_length(G, y);
    Rational s = 0;
    for (std::size_t i = 0; i < G.size(); ++i)
        for (std::size_t j = 0; j < G.size(); ++j) s += x[i] * G[i][j] * y[j];
    return s;
}

Rational pairing(const IntegerMatrix& M, const RationalVector& x, const RationalVector& y) {
    return gram_pairing(negated(M), x, y);
}

SurfaceNumbers e2_from_orders(const SurfaceResolutionData& data) {
    data.validate();
    const auto& M = data.intersection_matrix;
    SurfaceNumbers r;
    r.e2_I1 = pairing(M, sum(data.u, data.w), data.u);
    r.e2_I2 = pairing(M, sum(data.v, data.w), data.v);
    r.mixed = pairing(M, sum(data.v, data.w), data.u);
    r.inequality_holds = r.mixed * r.mixed <= r.e2_I1 * r.e2_I2;
    return r;
}

FormInequalityResult form_inequality_check(const RationalMatrix& gram, const RationalVector& u,
                                           const RationalVector& v, const RationalVector& w) {
    if (!posdef_check(gram)) throw PreconditionFailed(kModule, "form is not positive definite");
    FormInequalityResult r;
    const Rational uw = gram_pairing(gram, u, w);
    const Rational vw = gram_pairing(gram, v, w);
    r.hypothesis = uw >= vw && vw >= 0;
    const Rational m = gram_pairing(gram, sum(u, w), v);
    r.lhs = m * m;
    r.rhs = gram_pairing(gram, sum(u, w), u) * gram_pairing(gram, sum(v, w), v);
    r.conclusion = r.lhs <= r.rhs;
    r.degenerate_w = true;
    for (const auto& x : w) r.degenerate_w = r.degenerate_w && x == 0;
    if (r.hypothesis && !r.conclusion)
        throw Error(kModule, "form inequality violated: " + to_string(r.lhs) + " > " + to_string(r.rhs));
    return r;
}

FormInequalityResult form_inequality_check(const IntegerMatrix& M, const RationalVector& u,
                                           const RationalVector& v, const RationalVector& w) {
    return form_inequality_check(negated(M), u, v, w);
}

IntegerMatrix a_chain_matrix(std::size_t r) {
    IntegerMatrix M(r, std::vector<Integer>(r, 0));
    for (std::size_t i = 0; i < r; ++i) {
        M[i][i] = -2;
        if (i + 1 < r) M[i][i + 1] = M[i + 1][i] = 1;
    }
    return M;
}

} // namespace mixsegre
