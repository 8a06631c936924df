#ifndef AUTLIN_EXACTFIELD_HPP
#define AUTLIN_EXACTFIELD_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "autlin/error.hpp"

namespace autlin {

class Field;
class Polynomial;
struct Frac;
using FieldPtr = std::shared_ptr<const Field>;
using FracPtr = std::shared_ptr<const Frac>;

enum class FieldKind { Rationals, PrimeField, RationalFunctions };

/// A value in some coefficient field. Plain holder; arithmetic goes through Field.
class Scalar {
public:
    Scalar() : v_(mpq_class(0)) {}
    explicit Scalar(mpq_class q) : v_(std::move(q)) {}
    explicit Scalar(std::int64_t residue, int) : v_(residue) {}
    explicit Scalar(FracPtr f) : v_(std::move(f)) {}

    const mpq_class& rat() const { return std::get<mpq_class>(v_); }
    std::int64_t fp() const { return std::get<std::int64_t>(v_); }
    const Frac& frac() const { return *std::get<FracPtr>(v_); }
    bool holds_frac() const { return std::holds_alternative<FracPtr>(v_); }

private:
    std::variant<mpq_class, std::int64_t, FracPtr> v_;
};

/// Coefficient fields: Q, F_p (p prime < 2^31), and K(t1..tm) over one of those.
/// Immutable; shared by polynomials and matrices built over it.
class Field : public std::enable_shared_from_this<Field> {
public:
    static FieldPtr rationals();
    static FieldPtr prime(std::int64_t p);
    static FieldPtr rational_functions(FieldPtr base, std::vector<std::string> vars);

    FieldKind kind() const { return kind_; }
    std::int64_t characteristic() const { return char_; }
    std::int64_t prime_modulus() const { return p_; }
    FieldPtr base() const { return base_; }
    const std::vector<std::string>& function_vars() const { return fvars_; }
    bool same(const Field& other) const;
    /// Structural key, e.g. "Q", "F5", "Q(t)"; equal iff same().
    std::string signature() const;

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(std::int64_t n) const;
    Scalar from_mpq(const mpq_class& q) const;
    /// Generator t_i of a rational-function field, by name.
    Scalar param(const std::string& name) const;
    Scalar from_frac(Polynomial num, Polynomial den) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar div(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;
    Scalar pow(const Scalar& a, std::int64_t e) const;
    bool is_zero(const Scalar& a) const;
    bool is_one(const Scalar& a) const;
    bool eq(const Scalar& a, const Scalar& b) const;
    std::string str(const Scalar& a) const;
    /// True when printing `a` next to other factors needs parentheses.
    bool needs_parens(const Scalar& a) const;

private:
    Field() = default;
    FieldKind kind_ = FieldKind::Rationals;
    std::int64_t char_ = 0;
    std::int64_t p_ = 0;
    FieldPtr base_;
    std::vector<std::string> fvars_;
    friend struct FieldAccess;
};

// ---------------------------------------------------------------------------
// Polynomial ring context

struct PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// Ordered variable list over a field; `odd` marks square-zero variables.
struct PolyRing : std::enable_shared_from_this<PolyRing> {
    FieldPtr field;
    std::vector<std::string> vars;
    std::vector<bool> odd;

    static RingPtr make(FieldPtr field, std::vector<std::string> vars,
                        const std::vector<std::string>& odd_vars = {});
    int index_of(const std::string& name) const;
    std::size_t nvars() const { return vars.size(); }
    bool same(const PolyRing& other) const;
};

using Mono = std::vector<std::uint32_t>;

inline std::uint64_t mono_degree(const Mono& m) {
    std::uint64_t d = 0;
    for (auto e : m) d += e;
    return d;
}

/// Graded lex, declared variable order; used descending so leading term comes first.
struct MonoGreater {
    bool operator()(const Mono& a, const Mono& b) const {
        std::uint64_t da = mono_degree(a), db = mono_degree(b);
        if (da != db) return da > db;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] > b[i];
        return false;
    }
};

// ---------------------------------------------------------------------------
// Sparse exact multivariate polynomial

class Polynomial {
public:
    using TermMap = std::map<Mono, Scalar, MonoGreater>;

    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial constant(RingPtr ring, Scalar c);
    static Polynomial from_int(RingPtr ring, std::int64_t n);
    static Polynomial variable(RingPtr ring, std::size_t idx);
    static Polynomial variable(RingPtr ring, const std::string& name);
    static Polynomial monomial(RingPtr ring, Mono m, Scalar c);

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant value (zero polynomial gives 0).
    Scalar constant_value() const;
    std::size_t term_count() const { return terms_.size(); }

    /// Total degree; -1 for the zero polynomial.
    long degree() const;
    long degree_in(std::size_t var) const;

    Scalar coeff(const Mono& m) const;
    /// Coefficient of var^k, a polynomial in the remaining variables (same ring).
    Polynomial coeff_of(std::size_t var, std::uint32_t k) const;
    /// Top homogeneous component (by total degree).
    Polynomial top_homogeneous() const;
    const std::pair<const Mono, Scalar>& leading_term() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Scalar& c) const;
    Polynomial pow(std::uint64_t e) const;
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Exact substitution; images[i] replaces variable i, all in images' common ring.
    Polynomial substitute(const std::vector<Polynomial>& images) const;
    /// Replace a single variable, keeping the others (image in the same ring).
    Polynomial substitute_one(std::size_t var, const Polynomial& image) const;
    /// Evaluate at scalars.
    Scalar eval(const std::vector<Scalar>& point) const;

    Polynomial derivative(std::size_t var) const;
    /// Exact division; throws DomainError if not divisible.
    Polynomial exact_div(const Polynomial& d) const;

    std::string to_string() const;

    void add_term(const Mono& m, const Scalar& c); // canonicalizing insert

private:
    RingPtr ring_;
    TermMap terms_;
    void check_ring(const Polynomial& o) const;
};

/// Sylvester-matrix resultant eliminating `var`; exact over the ring.
Polynomial resultant(const Polynomial& p, const Polynomial& q, std::size_t var);

/// Monic gcd of polynomials univariate in `var` with coefficients that must be
/// field scalars (every other exponent zero).
Polynomial gcd_univariate(const Polynomial& a, const Polynomial& b, std::size_t var);

// ---------------------------------------------------------------------------
// Rational functions num/den over a polynomial ring (field of fractions)

struct Frac {
    Polynomial num, den;

    static Frac make(Polynomial num, Polynomial den); // normalizes
    static Frac of(Polynomial p);
    bool is_zero() const { return num.is_zero(); }
    Frac operator+(const Frac& o) const;
    Frac operator-(const Frac& o) const;
    Frac operator*(const Frac& o) const;
    Frac operator/(const Frac& o) const;
    Frac operator-() const;
    Frac inv() const;
    Frac pow(std::int64_t e) const;
    bool operator==(const Frac& o) const; // cross-multiplied, exact
    std::string to_string() const;
};

} // namespace autlin

#endif
