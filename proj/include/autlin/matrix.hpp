#ifndef AUTLIN_MATRIX_HPP
#define AUTLIN_MATRIX_HPP

#include <string>
#include <vector>

#include "autlin/exactfield.hpp"

namespace autlin {

/// 2x2 matrix with field scalar entries (linear parts, subgroup elements).
struct Mat2 {
    FieldPtr F;
    Scalar a, b, c, d; // [[a,b],[c,d]]

    static Mat2 identity(FieldPtr F);
    static Mat2 of(FieldPtr F, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);
    Mat2 operator*(const Mat2& o) const;
    Mat2 operator+(const Mat2& o) const;
    Mat2 scaled(const Scalar& s) const;
    Scalar det() const;
    Mat2 inverse() const;
    bool operator==(const Mat2& o) const;
    bool is_identity() const;
    bool is_minus_identity() const;
    bool is_scalar() const;
    /// Column action on (x,y).
    std::pair<Scalar, Scalar> apply(const Scalar& x, const Scalar& y) const;
    std::string to_string() const;
};

/// Square matrix with entries in a polynomial ring, exact.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(RingPtr ring, std::size_t n);
    static PolyMatrix identity(RingPtr ring, std::size_t n);

    std::size_t dim() const { return n_; }
    const RingPtr& ring() const { return ring_; }
    Polynomial& at(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
    const Polynomial& at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix operator+(const PolyMatrix& o) const;
    PolyMatrix operator-(const PolyMatrix& o) const;
    PolyMatrix scaled(const Polynomial& p) const;
    PolyMatrix scaled(const Scalar& s) const;
    PolyMatrix pow(std::uint64_t e) const;
    bool operator==(const PolyMatrix& o) const;
    bool operator!=(const PolyMatrix& o) const { return !(*this == o); }
    bool is_zero() const;
    bool is_identity() const;

    /// Exact determinant (fraction-free elimination).
    Polynomial det() const;
    /// Substitute every ring variable by the given scalar (e.g. z = 0).
    PolyMatrix eval_vars(const std::vector<Scalar>& point) const;
    /// Matrix-vector product.
    std::vector<Polynomial> apply(const std::vector<Polynomial>& v) const;

    std::string to_string() const;

private:
    RingPtr ring_;
    std::size_t n_ = 0;
    std::vector<Polynomial> e_;
};

/// exp(m) for nilpotent m over a characteristic-zero field; terminates at the
/// nilpotency index, coefficients exact. Throws NotNilpotent / PositiveCharacteristic.
PolyMatrix exp_nilpotent(const PolyMatrix& m);

} // namespace autlin

#endif
