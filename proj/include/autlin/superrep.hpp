#ifndef AUTLIN_SUPERREP_HPP
#define AUTLIN_SUPERREP_HPP

#include <random>

#include "autlin/mixedword.hpp"

namespace autlin {

/// Representation of origin-preserving, Jacobian-one plane automorphisms of
/// degree < n on the (2N+1)-dimensional space spanned by
///   x^i y^(N-i)        (i = 0..N)      and
///   x^i y^(N-1-i) eps  (i = 0..N-1),
/// tensored with K[z]. Linear parts act by P |-> P o g^-1 with eps invariant;
/// a triangular letter (x, y + f(x)) acts by exp(z eta f(eta)) where
/// eta = x d/deps + eps d/dy, eta^2 = x d/dy.
class SuperRep {
public:
    SuperRep(FieldPtr F, int N); // requires characteristic 0, N >= 1

    int N() const { return N_; }
    std::size_t dim() const { return std::size_t(2 * N_ + 1); }
    const FieldPtr& field() const { return F_; }
    const RingPtr& zring() const { return zring_; }

    /// Constant matrix of eta on the basis above.
    const PolyMatrix& eta() const { return eta_; }

    /// Image of g in SL(2,K); throws DomainError when det g != 1.
    PolyMatrix linear(const Mat2& g) const;

    /// exp(z eta f(eta)) for f in t^2 K[t] (or f = 0 for the identity).
    PolyMatrix elementary(const Polynomial& f) const;

    /// Canonical gamma moving (0;1) to d: [[p,a],[q,b]] with det 1.
    Mat2 gamma_for(const Direction& d) const;

    /// Image of one letter: linear(gamma) * elementary(f) * linear(gamma^-1).
    /// Checks deg f < n and (k+1) | 2N for every monomial degree k of f.
    PolyMatrix letter_matrix(const Letter& l, int n) const;

    /// Image of a full mixed word; the linear part must have det 1.
    PolyMatrix word(const MixedWord& w, int n) const;

    /// Coefficient vector of l_d^N = (b x - a y)^N in the basis (eps block zero).
    std::vector<Scalar> line_vector(const Direction& d) const;

    /// Top z-degree and its coefficient vector; degree -1 for the zero vector.
    std::pair<long, std::vector<Scalar>> hdc(const std::vector<Polynomial>& v) const;

    /// Membership of a constant vector in L_d \ {0}.
    bool in_line(const std::vector<Scalar>& vec, const Direction& d) const;

private:
    FieldPtr F_;
    int N_;
    RingPtr zring_;
    PolyMatrix eta_;
};

struct PingPongReport {
    int samples = 0;
    bool all_contained = true;
    std::vector<std::string> notes;
};

/// Spot-check of F*_d . Omega_d' <= Omega_d: for random letters at d and random
/// vectors whose hdc lies on the d' line, the image hdc lands on the d line.
PingPongReport pingpong_check(const SuperRep& rep, const Direction& d, const Direction& dprime,
                              int samples, int n, std::uint64_t seed);

} // namespace autlin

#endif
