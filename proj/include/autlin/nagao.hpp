#ifndef AUTLIN_NAGAO_HPP
#define AUTLIN_NAGAO_HPP

#include "autlin/mixedword.hpp"

namespace autlin {

/// e_d = (a,b)^T (b,-a), the rank-one nilpotent with image d.
Mat2 e_delta(const Direction& d);

/// 2x2 matrix over K[z] congruent to a prescribed subgroup at z = 0.
struct CongruenceMatrix {
    PolyMatrix m;
    bool det_is_one() const;
    /// m evaluated at z = 0.
    Mat2 at_zero() const;
};

/// Aut_1 -> SL(2, zK[z]): letters (d, f) map to id + (f(z)/z) e_d.
/// Requires a trivial linear part; the image is congruent to id mod z.
CongruenceMatrix embed_aut1(const MixedWord& w);

/// Aut_U(K) -> SL_U(K)(2, K[z]): the linear part (x, y+ax) maps to id + a e_d0,
/// letters as in embed_aut1. The image at z = 0 lies in U(K).
CongruenceMatrix embed_autU(const MixedWord& w);

struct VerifyFreeReport {
    std::size_t words = 0;
    bool all_distinct = true;
    std::string collision; // first colliding pair, if any
};

/// Enumerates all reduced words of length <= max_len with letters c * t^2,
/// c in coeffs, over the given directions, and checks the images are pairwise
/// distinct matrices.
VerifyFreeReport verify_free(const FieldPtr& F, int max_len, const std::vector<Scalar>& coeffs,
                             const std::vector<Direction>& dirs);

} // namespace autlin

#endif
