#include "mixsegre/local_multiplicity.hpp"

#include "mixsegre/error.hpp"
#include "mixsegre/groebner.hpp"

#include <algorithm>

namespace mixsegre {

namespace {

std::uint64_t samuel_from_basis(const Ideal& basis_ideal, unsigned N) {
    GroebnerBasis gb = buchberger_truncated(basis_ideal, N);
    auto c = count_standard_monomials(gb.leading_monomials(), basis_ideal.ring()->nvars());
    if (!c) throw Error("local_multiplicity", "internal: I + m^N has infinite colength");
    return *c;
}

// Smallest d <= d_max whose d-th differences over the last window+d values
// agree. Returns -1 if none yet.
int settled_degree(const std::vector<std::int64_t>& values, int d_max, unsigned window, std::int64_t& difference) {
    for (int d = 0; d <= d_max; ++d) {
        const std::size_t needed = window + static_cast<std::size_t>(d);
        if (values.size() < needed) return -1;
        std::vector<std::int64_t> row(values.end() - static_cast<long>(needed), values.end());
        for (int k = 0; k < d; ++k) {
            for (std::size_t i = 0; i + 1 < row.size(); ++i) row[i] = row[i + 1] - row[i];
            row.pop_back();
        }
        if (std::all_of(row.begin(), row.end(), [&](std::int64_t v) { return v == row.front(); })) {
            difference = row.front();
            return d;
        }
    }
    return -1;
}

} // namespace

std::uint64_t hilbert_samuel(const Ideal& I, unsigned N) {
    if (N < 1) throw InvalidArgument("local_multiplicity", "hilbert_samuel needs N >= 1");
    return samuel_from_basis(I, N);
}

bool passes_through_origin(const Ideal& I) {
    for (const auto& g : I.generators())
        if (g.constant_term() != 0) return false;
    return true;
}

LocalMultiplicityResult multiplicity_at_origin(const Ideal& I, const MultiplicityConfig& config) {
    LocalMultiplicityResult result;
    if (!passes_through_origin(I)) {
        result.stabilized = true;
        return result;
    }
    const std::size_t n = I.ring()->nvars();
    if (I.is_zero()) {
        // Smooth ambient space: colength(m^N) = C(N + n - 1, n).
        result.multiplicity = 1;
        result.local_dimension = static_cast<int>(n);
        result.stabilized = true;
        return result;
    }
    GroebnerBasis gb = buchberger(I, MonomialOrder::grevlex());
    const Ideal basis_ideal(gb.ring(), gb.basis());
    const int d_max = dimension(I);
    long start = 1;
    for (const auto& g : gb.basis()) start = std::max(start, g.total_degree() + 1);
    start = std::max(start, I.max_degree() + 1);

    std::vector<std::int64_t> values;
    for (unsigned N = static_cast<unsigned>(start); N <= config.n_max; ++N) {
        const std::uint64_t v = samuel_from_basis(basis_ideal, N);
        result.samples.push_back({N, v});
        values.push_back(static_cast<std::int64_t>(v));
        std::int64_t diff = 0;
        const int d = settled_degree(values, d_max, config.window, diff);
        if (d < 0) continue;
        if (diff <= 0) throw Error("local_multiplicity", "non-positive leading difference in the Hilbert-Samuel function");
        result.multiplicity = static_cast<std::uint64_t>(diff);
        result.local_dimension = d;
        result.stabilized = true;
        return result;
    }
    throw ResourceLimit("local_multiplicity", "Hilbert-Samuel differences did not stabilize for N <= " +
                                                  std::to_string(config.n_max) + " (sampled from N = " +
                                                  std::to_string(start) + ")");
}

} // namespace mixsegre
