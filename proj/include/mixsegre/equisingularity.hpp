#pragma once

#include "mixsegre/criteria.hpp"

namespace mixsegre {

// f with f(0) = 0 and f != 0. Reducedness of V(f) is the caller's obligation.
class FunctionGerm {
public:
    explicit FunctionGerm(Polynomial f);
    const Polynomial& f() const noexcept { return f_; }
    const Ring& ring() const noexcept { return f_.ring(); }

private:
    Polynomial f_;
};

// All first partial derivatives.
Ideal jacobian_ideal(const FunctionGerm& germ);

// m J(f) + (f): generators x_i * df/dx_j and f.
Ideal contact_tangent_ideal(const FunctionGerm& germ);

struct WhitneyReport {
    Ideal tangent0;
    Ideal tangent1;
    ComparisonReport battery;
    // The equalities hold; a sufficient condition only, so false means
    // "not certified", never "not Whitney regular".
    bool whitney_sufficient = false;
};

// The closure equalities for codimensions 2..N on the two contact tangent
// ideals.
WhitneyReport whitney_battery(const FunctionGerm& f0, const FunctionGerm& f1, const GenericityConfig& config);

} // namespace mixsegre
