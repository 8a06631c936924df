#ifndef AUTLIN_PLANEAUT_HPP
#define AUTLIN_PLANEAUT_HPP

#include <optional>
#include <string>
#include <vector>

#include "autlin/matrix.hpp"

namespace autlin {

/// A point of P^1_K in canonical coordinates: (1;b) when representable, else (0;1).
/// The attached linear form is l_d(x,y) = b*x - a*y and the column vector (a,b).
struct Direction {
    FieldPtr F;
    Scalar a, b;

    static Direction make(FieldPtr F, const Scalar& a, const Scalar& b);
    static Direction d0(FieldPtr F);   // (0;1)
    static Direction dinf(FieldPtr F); // (1;0)
    bool operator==(const Direction& o) const;
    bool operator!=(const Direction& o) const { return !(*this == o); }
    std::string to_string() const;
};

/// Plane polynomial map (p, q) = (image of x, image of y).
/// Invertibility is certified by factor_vdk, not assumed at construction.
class PlaneAut {
public:
    PlaneAut(Polynomial p, Polynomial q);

    static RingPtr plane_ring(const FieldPtr& F); // Q[x,y]-style ring, cached per field
    static RingPtr letter_ring(const FieldPtr& F); // K[t], cached per field
    static PlaneAut identity(const FieldPtr& F);
    static PlaneAut linear(const Mat2& m);
    static PlaneAut affine(const Mat2& m, const Scalar& tx, const Scalar& ty);
    /// (x, y + f(x)) for univariate f over the same field (variable ignored by name).
    static PlaneAut triangular(const FieldPtr& F, const Polynomial& f);
    /// The E_delta element v -> v + f(l_d(v)) * (a,b), f in t^2 K[t].
    static PlaneAut letter(const Direction& d, const Polynomial& f);

    const Polynomial& p() const { return p_; }
    const Polynomial& q() const { return q_; }
    const FieldPtr& field() const { return ring_->field; }
    const RingPtr& ring() const { return ring_; }

    PlaneAut compose(const PlaneAut& psi) const; // apply psi first
    Polynomial jacobian() const;
    std::optional<Scalar> jacobian_constant() const; // nullopt when non-constant
    long degree() const;
    bool fixes_origin() const;
    Mat2 linear_part() const;
    std::pair<Scalar, Scalar> apply(const Scalar& x, const Scalar& y) const;
    bool operator==(const PlaneAut& o) const;
    bool operator!=(const PlaneAut& o) const { return !(*this == o); }
    std::string to_string() const;

private:
    RingPtr ring_;
    Polynomial p_, q_;
};

struct VdkFactor {
    bool is_affine; // otherwise a triangular (elementary) factor of degree >= 2
    PlaneAut map;
};

struct VdkFactorization {
    std::vector<VdkFactor> factors; // outermost first; composition equals the input
    PlaneAut recompose(const FieldPtr& F) const;
};

/// Degree-reduction factorization into alternating affine/elementary factors.
/// Throws NotAnAutomorphism when the Jacobian is non-constant or reduction sticks.
VdkFactorization factor_vdk(const PlaneAut& phi);

/// Exact inverse via factor_vdk.
PlaneAut invert(const PlaneAut& phi);

} // namespace autlin

#endif
