#include "mixsegre/criteria.hpp"
#include "mixsegre/document.hpp"
#include "mixsegre/error.hpp"
#include "mixsegre/groebner.hpp"
#include "mixsegre/local_multiplicity.hpp"
#include "mixsegre/report.hpp"
#include "mixsegre/segre.hpp"
#include "mixsegre/surface.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace mixsegre;

namespace {

Ideal make_ideal(const Ring& ring, const std::vector<std::string>& generators) {
    std::vector<Polynomial> polys;
    for (const auto& g : generators) polys.push_back(parse_polynomial(g, ring));
    return Ideal(ring, std::move(polys));
}

GenericityConfig make_config(std::uint64_t seed, std::uint64_t bound, unsigned rounds) {
    GenericityConfig c;
    c.seed = seed;
    c.coefficient_bound = bound;
    c.verification_rounds = rounds;
    return c;
}

GermContext make_germ(const Ring& ring, const std::vector<std::string>& ambient) {
    if (ambient.empty()) return GermContext::affine_space(ring);
    return GermContext::from_ambient(make_ideal(ring, ambient));
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Segre numbers, mixed multiplicities and integral-closure criteria";

    static py::handle error = py::exception<Error>(m, "EngineError").release();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(error, (e.module() + ": " + e.what()).c_str());
        }
    });

    m.attr("DEFAULT_SEED") = kDefaultSeed;

    m.def(
        "run",
        [](const std::string& text, const std::string& command, const std::vector<std::string>& names,
           std::optional<std::uint64_t> seed, std::optional<unsigned> rounds) {
            RunSettings settings;
            settings.seed = seed;
            settings.rounds = rounds;
            CommandArgs args;
            args.names = names;
            Report r;
            {
                py::gil_scoped_release release;
                r = run_command(parse_input(text), command, args, settings);
            }
            return py::make_tuple(r.json.dump(), r.exit_code);
        },
        py::arg("text"), py::arg("command"), py::arg("names"), py::arg("seed") = py::none(),
        py::arg("rounds") = py::none(), "Run a CLI command on document text; returns (json, exit code).");

    m.def(
        "normalize_document",
        [](const std::string& text) { return serialize(parse_input(text)); }, py::arg("text"),
        "Canonical text of a parsed input document.");

    m.def(
        "colength",
        [](const std::vector<std::string>& variables, const std::vector<std::string>& generators)
            -> std::optional<std::uint64_t> {
            const Ring ring = PolynomialRing::make(variables);
            const Colength c = colength(make_ideal(ring, generators));
            if (!c.is_finite()) return std::nullopt;
            return c.value();
        },
        py::arg("variables"), py::arg("generators"), "Vector-space dimension of the quotient; None if infinite.");

    m.def(
        "hilbert_samuel",
        [](const std::vector<std::string>& variables, const std::vector<std::string>& generators, unsigned N) {
            const Ring ring = PolynomialRing::make(variables);
            return hilbert_samuel(make_ideal(ring, generators), N);
        },
        py::arg("variables"), py::arg("generators"), py::arg("N"));

    m.def(
        "multiplicity",
        [](const std::vector<std::string>& variables, const std::vector<std::string>& generators) {
            const Ring ring = PolynomialRing::make(variables);
            const auto r = multiplicity_at_origin(make_ideal(ring, generators));
            return py::make_tuple(r.multiplicity, r.local_dimension);
        },
        py::arg("variables"), py::arg("generators"), "(multiplicity, local dimension) at the origin.");

    m.def(
        "segre_numbers",
        [](const std::vector<std::string>& variables, const std::vector<std::string>& generators,
           const std::vector<std::string>& ambient, std::uint64_t seed, std::uint64_t bound, unsigned rounds) {
            const Ring ring = PolynomialRing::make(variables);
            py::gil_scoped_release release;
            return segre_profile(make_germ(ring, ambient), make_ideal(ring, generators),
                                 make_config(seed, bound, rounds))
                .e;
        },
        py::arg("variables"), py::arg("generators"), py::arg("ambient") = std::vector<std::string>{},
        py::arg("seed") = kDefaultSeed, py::arg("bound") = 997, py::arg("rounds") = 2, "[e_1, ..., e_n]");

    m.def(
        "mixed_segre",
        [](const std::vector<std::string>& variables, const std::vector<std::string>& I1,
           const std::vector<std::string>& I2, int k, int i, int j, std::uint64_t seed) {
            const Ring ring = PolynomialRing::make(variables);
            py::gil_scoped_release release;
            return mixed_segre(GermContext::affine_space(ring), make_ideal(ring, I1), make_ideal(ring, I2), k, i, j,
                               make_config(seed, 997, 2));
        },
        py::arg("variables"), py::arg("I1"), py::arg("I2"), py::arg("k"), py::arg("i"), py::arg("j"),
        py::arg("seed") = kDefaultSeed);

    m.def(
        "mixed_multiplicities",
        [](const std::vector<std::string>& variables, const std::vector<std::string>& I1,
           const std::vector<std::string>& I2, std::uint64_t seed) {
            const Ring ring = PolynomialRing::make(variables);
            py::gil_scoped_release release;
            const auto r = teissier_criterion(GermContext::affine_space(ring), make_ideal(ring, I1),
                                              make_ideal(ring, I2), make_config(seed, 997, 2));
            return r.mixed_multiplicities;
        },
        py::arg("variables"), py::arg("I1"), py::arg("I2"), py::arg("seed") = kDefaultSeed,
        "Teissier chain e_{i,n-i}, i = n down to 0.");

    m.def(
        "same_integral_closure",
        [](const std::vector<std::string>& variables, const std::vector<std::string>& I1,
           const std::vector<std::string>& I2, std::uint64_t seed) {
            const Ring ring = PolynomialRing::make(variables);
            py::gil_scoped_release release;
            return closure_battery(GermContext::affine_space(ring), make_ideal(ring, I1), make_ideal(ring, I2),
                                   make_config(seed, 997, 2))
                .holds();
        },
        py::arg("variables"), py::arg("I1"), py::arg("I2"), py::arg("seed") = kDefaultSeed);

    m.def(
        "total_transform",
        [](const std::vector<std::vector<long>>& M, const std::vector<std::string>& c) {
            IntegerMatrix A;
            for (const auto& row : M) {
                std::vector<Integer> r;
                for (long v : row) r.emplace_back(v);
                A.push_back(std::move(r));
            }
            RationalVector cv;
            for (const auto& s : c) cv.push_back(parse_rational(s));
            std::vector<std::string> out;
            for (const auto& a : total_transform(A, cv)) out.push_back(to_string(a));
            return out;
        },
        py::arg("M"), py::arg("c"), "a = -M^{-1} c as rational strings.");

    m.def(
        "compare_root_sum",
        [](const std::string& x, const std::string& y, const std::string& z, unsigned k) {
            return compare_root_sum(Integer(x), Integer(y), Integer(z), k);
        },
        py::arg("x"), py::arg("y"), py::arg("z"), py::arg("k"), "Sign of z^(1/k) - (x^(1/k) + y^(1/k)).");
}
