#pragma once

#include "mixsegre/ideal.hpp"

#include <cstdint>
#include <vector>

namespace mixsegre {

// Multiplicity at the origin via the Hilbert-Samuel function
//     N -> colength(I + m^N),
// which is finite for every N because V(I + m^N) is contained in {0}. Once
// N is large it agrees with a polynomial of degree d = local dimension, and
// its constant d-th difference is the multiplicity.
//
// For a scheme with several components through 0 this is the sum of the
// multiplicities of its top-dimensional components weighted by their lengths
// (associativity formula). Polar and Segre numbers are computed on saturated
// scheme ideals and rely on that identification.

struct MultiplicityConfig {
    // Consecutive equal d-th differences required before accepting d.
    unsigned window = 3;
    // Largest N sampled before giving up.
    unsigned n_max = 40;
};

struct HilbertSamuelSample {
    unsigned N;
    std::uint64_t value;
};

struct LocalMultiplicityResult {
    std::uint64_t multiplicity = 0;
    // -1 when the origin is not on V(I).
    int local_dimension = -1;
    std::vector<HilbertSamuelSample> samples;
    bool stabilized = false;
};

// colength(I + m^N); N >= 1.
std::uint64_t hilbert_samuel(const Ideal& I, unsigned N);

// Throws ResourceLimit when the differences do not settle by n_max.
LocalMultiplicityResult multiplicity_at_origin(const Ideal& I, const MultiplicityConfig& config = {});

// I is contained in m, i.e. every generator vanishes at the origin.
bool passes_through_origin(const Ideal& I);

} // namespace mixsegre
