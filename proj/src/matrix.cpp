#include "autlin/matrix.hpp"

#include <sstream>

namespace autlin {

Mat2 Mat2::identity(FieldPtr F) {
    return Mat2{F, F->one(), F->zero(), F->zero(), F->one()};
}

Mat2 Mat2::of(FieldPtr F, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    return Mat2{F, F->from_int(a), F->from_int(b), F->from_int(c), F->from_int(d)};
}

Mat2 Mat2::operator*(const Mat2& o) const {
    return Mat2{F, F->add(F->mul(a, o.a), F->mul(b, o.c)), F->add(F->mul(a, o.b), F->mul(b, o.d)),
                F->add(F->mul(c, o.a), F->mul(d, o.c)), F->add(F->mul(c, o.b), F->mul(d, o.d))};
}

Mat2 Mat2::operator+(const Mat2& o) const {
    return Mat2{F, F->add(a, o.a), F->add(b, o.b), F->add(c, o.c), F->add(d, o.d)};
}

Mat2 Mat2::scaled(const Scalar& s) const {
    return Mat2{F, F->mul(a, s), F->mul(b, s), F->mul(c, s), F->mul(d, s)};
}

Scalar Mat2::det() const { return F->sub(F->mul(a, d), F->mul(b, c)); }

Mat2 Mat2::inverse() const {
    Scalar dt = det();
    require(!F->is_zero(dt), Err::DomainError, "singular 2x2 matrix");
    Scalar i = F->inv(dt);
    return Mat2{F, F->mul(d, i), F->neg(F->mul(b, i)), F->neg(F->mul(c, i)), F->mul(a, i)};
}

bool Mat2::operator==(const Mat2& o) const {
    return F->eq(a, o.a) && F->eq(b, o.b) && F->eq(c, o.c) && F->eq(d, o.d);
}

bool Mat2::is_identity() const { return *this == identity(F); }

bool Mat2::is_minus_identity() const {
    Scalar m1 = F->from_int(-1);
    return F->eq(a, m1) && F->is_zero(b) && F->is_zero(c) && F->eq(d, m1);
}

bool Mat2::is_scalar() const { return F->is_zero(b) && F->is_zero(c) && F->eq(a, d); }

std::pair<Scalar, Scalar> Mat2::apply(const Scalar& x, const Scalar& y) const {
    return {F->add(F->mul(a, x), F->mul(b, y)), F->add(F->mul(c, x), F->mul(d, y))};
}

std::string Mat2::to_string() const {
    return "[[" + F->str(a) + "," + F->str(b) + "],[" + F->str(c) + "," + F->str(d) + "]]";
}

// ---------------------------------------------------------------------------

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t n)
    : ring_(std::move(ring)), n_(n), e_(n * n, Polynomial(ring_)) {}

PolyMatrix PolyMatrix::identity(RingPtr ring, std::size_t n) {
    PolyMatrix m(ring, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Polynomial::from_int(ring, 1);
    return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    require(n_ == o.n_ && ring_->same(*o.ring_), Err::MismatchedContext, "matrix product shapes");
    PolyMatrix r(ring_, n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = 0; k < n_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < n_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
            }
        }
    return r;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
    require(n_ == o.n_ && ring_->same(*o.ring_), Err::MismatchedContext, "matrix sum shapes");
    PolyMatrix r(ring_, n_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
    require(n_ == o.n_ && ring_->same(*o.ring_), Err::MismatchedContext, "matrix diff shapes");
    PolyMatrix r(ring_, n_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

PolyMatrix PolyMatrix::scaled(const Polynomial& p) const {
    PolyMatrix r(ring_, n_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * p;
    return r;
}

PolyMatrix PolyMatrix::scaled(const Scalar& s) const {
    PolyMatrix r(ring_, n_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i].scaled(s);
    return r;
}

PolyMatrix PolyMatrix::pow(std::uint64_t e) const {
    PolyMatrix acc = identity(ring_, n_), b = *this;
    while (e) {
        if (e & 1) acc = acc * b;
        b = b * b;
        e >>= 1;
    }
    return acc;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    if (n_ != o.n_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] != o.e_[i]) return false;
    return true;
}

bool PolyMatrix::is_zero() const {
    for (const auto& p : e_)
        if (!p.is_zero()) return false;
    return true;
}

bool PolyMatrix::is_identity() const { return *this == identity(ring_, n_); }

Polynomial PolyMatrix::det() const {
    // Bareiss fraction-free elimination
    std::vector<std::vector<Polynomial>> a(n_, std::vector<Polynomial>(n_, Polynomial(ring_)));
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) a[i][j] = at(i, j);
    bool negate = false;
    Polynomial prev = Polynomial::from_int(ring_, 1);
    for (std::size_t k = 0; k + 1 < n_; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t s = k + 1;
            while (s < n_ && a[s][k].is_zero()) ++s;
            if (s == n_) return Polynomial(ring_);
            std::swap(a[k], a[s]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n_; ++i) {
            for (std::size_t j = k + 1; j < n_; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).exact_div(prev);
            a[i][k] = Polynomial(ring_);
        }
        prev = a[k][k];
    }
    Polynomial d = a[n_ - 1][n_ - 1];
    return negate ? -d : d;
}

PolyMatrix PolyMatrix::eval_vars(const std::vector<Scalar>& point) const {
    PolyMatrix r(ring_, n_);
    for (std::size_t i = 0; i < e_.size(); ++i)
        r.e_[i] = Polynomial::constant(ring_, e_[i].eval(point));
    return r;
}

std::vector<Polynomial> PolyMatrix::apply(const std::vector<Polynomial>& v) const {
    require(v.size() == n_, Err::DomainError, "vector length");
    std::vector<Polynomial> out(n_, Polynomial(ring_));
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] = out[i] + at(i, j) * v[j];
    return out;
}

std::string PolyMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < n_; ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < n_; ++j) os << (j ? ", " : "") << at(i, j).to_string();
        os << "]";
    }
    os << "]";
    return os.str();
}

PolyMatrix exp_nilpotent(const PolyMatrix& m) {
    RingPtr ring = m.ring();
    require(ring->field->characteristic() == 0, Err::PositiveCharacteristic,
            "exp needs characteristic zero");
    // verify nilpotency by powering up to the dimension
    PolyMatrix pw = m;
    std::size_t idx = 1;
    while (!pw.is_zero() && idx <= m.dim()) {
        pw = pw * m;
        ++idx;
    }
    require(pw.is_zero(), Err::NotNilpotent, "matrix is not nilpotent");
    const Field& F = *ring->field;
    PolyMatrix acc = PolyMatrix::identity(ring, m.dim());
    PolyMatrix term = PolyMatrix::identity(ring, m.dim());
    mpq_class kfact(1);
    for (std::size_t k = 1; k <= idx; ++k) {
        term = term * m;
        if (term.is_zero()) break;
        kfact *= static_cast<long>(k);
        acc = acc + term.scaled(F.inv(F.from_mpq(kfact)));
    }
    return acc;
}

} // namespace autlin
