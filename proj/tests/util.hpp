#ifndef AUTLIN_TESTS_UTIL_HPP
#define AUTLIN_TESTS_UTIL_HPP

#include <random>

#include "autlin/exactfield.hpp"

namespace autlin::testutil {

inline std::int64_t rand_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline Scalar rand_scalar(std::mt19937_64& rng, const FieldPtr& F, std::int64_t height = 3,
                          bool nonzero = false) {
    for (;;) {
        Scalar s = F->from_int(rand_int(rng, -height, height));
        if (!nonzero || !F->is_zero(s)) return s;
    }
}

inline Polynomial rand_poly(std::mt19937_64& rng, const RingPtr& ring, int max_deg, int max_terms,
                            std::int64_t height = 3) {
    Polynomial p(ring);
    int nterms = int(rand_int(rng, 1, max_terms));
    for (int t = 0; t < nterms; ++t) {
        Mono m(ring->nvars(), 0);
        int budget = int(rand_int(rng, 0, max_deg));
        for (int d = 0; d < budget; ++d) m[std::size_t(rand_int(rng, 0, long(ring->nvars()) - 1))]++;
        p.add_term(m, rand_scalar(rng, ring->field, height));
    }
    return p;
}

} // namespace autlin::testutil

#endif
