#include "mixsegre/equisingularity.hpp"

#include "mixsegre/error.hpp"

namespace mixsegre {

namespace {
constexpr const char* kModule = "equisingularity";
}

FunctionGerm::FunctionGerm(Polynomial f) : f_(std::move(f)) {
    if (f_.is_zero()) throw InvalidArgument(kModule, "function germ is zero");
    if (f_.constant_term() != 0) throw InvalidArgument(kModule, "function germ does not vanish at the origin");
}

Ideal jacobian_ideal(const FunctionGerm& germ) {
    std::vector<Polynomial> partials;
    for (std::size_t j = 0; j < germ.ring()->nvars(); ++j) partials.push_back(germ.f().derivative(j));
    return Ideal(germ.ring(), std::move(partials));
}

Ideal contact_tangent_ideal(const FunctionGerm& germ) {
    const Ring& R = germ.ring();
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < R->nvars(); ++i)
        for (std::size_t j = 0; j < R->nvars(); ++j) gens.push_back(Polynomial::variable(R, i) * germ.f().derivative(j));
    gens.push_back(germ.f());
    return Ideal(R, std::move(gens));
}

WhitneyReport whitney_battery(const FunctionGerm& f0, const FunctionGerm& f1, const GenericityConfig& config) {
    if (!compatible(f0.ring(), f1.ring())) throw RingMismatch("function germs live in different rings");
    WhitneyReport r{contact_tangent_ideal(f0), contact_tangent_ideal(f1), {}, false};
    const GermContext germ = GermContext::affine_space(f0.ring());
    r.battery = closure_battery(germ, r.tangent0, r.tangent1, config, 2);
    r.whitney_sufficient = r.battery.holds();
    return r;
}

} // namespace mixsegre
