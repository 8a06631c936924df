#include "autlin/exactfield.hpp"

#include <algorithm>
#include <mutex>

namespace autlin {

const char* err_name(Err e) {
    switch (e) {
        case Err::MismatchedContext: return "MismatchedContext";
        case Err::DivisionByZero: return "DivisionByZero";
        case Err::NotAnAutomorphism: return "NotAnAutomorphism";
        case Err::JacobianNotConstant: return "JacobianNotConstant";
        case Err::OriginNotFixed: return "OriginNotFixed";
        case Err::LinearPartNotInS: return "LinearPartNotInS";
        case Err::NontrivialLinearPart: return "NontrivialLinearPart";
        case Err::LinearPartNotInU: return "LinearPartNotInU";
        case Err::DegreeOutOfRange: return "DegreeOutOfRange";
        case Err::DivisibilityViolated: return "DivisibilityViolated";
        case Err::PositiveCharacteristic: return "PositiveCharacteristic";
        case Err::NotNilpotent: return "NotNilpotent";
        case Err::NotBad: return "NotBad";
        case Err::ScopeExceeded: return "ScopeExceeded";
        case Err::EliminationFailed: return "EliminationFailed";
        case Err::ScalingViolated: return "ScalingViolated";
        case Err::SampleDegenerate: return "SampleDegenerate";
        case Err::UnsupportedDescriptor: return "UnsupportedDescriptor";
        case Err::SyntaxError: return "SyntaxError";
        case Err::DomainError: return "DomainError";
    }
    return "Error";
}

struct FieldAccess {
    static std::shared_ptr<Field> fresh() { return std::shared_ptr<Field>(new Field()); }
};

namespace {

bool small_prime_check(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::int64_t mod_normalize(std::int64_t a, std::int64_t p) {
    a %= p;
    if (a < 0) a += p;
    return a;
}

std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, newt = 1, r = p, newr = a;
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    require(r == 1, Err::DivisionByZero, "element has no inverse mod p");
    return mod_normalize(t, p);
}

} // namespace

FieldPtr Field::rationals() {
    static FieldPtr q = [] {
        auto f = FieldAccess::fresh();
        f->kind_ = FieldKind::Rationals;
        f->char_ = 0;
        return FieldPtr(f);
    }();
    return q;
}

FieldPtr Field::prime(std::int64_t p) {
    require(p > 1 && p < (std::int64_t(1) << 31) && small_prime_check(p), Err::DomainError,
            "prime field modulus must be a prime < 2^31");
    auto f = FieldAccess::fresh();
    f->kind_ = FieldKind::PrimeField;
    f->char_ = p;
    f->p_ = p;
    return f;
}

FieldPtr Field::rational_functions(FieldPtr base, std::vector<std::string> vars) {
    require(base != nullptr && base->kind() != FieldKind::RationalFunctions, Err::DomainError,
            "rational-function fields nest at most once");
    require(!vars.empty(), Err::DomainError, "rational-function field needs at least one variable");
    auto f = FieldAccess::fresh();
    f->kind_ = FieldKind::RationalFunctions;
    f->char_ = base->characteristic();
    f->base_ = base;
    f->fvars_ = std::move(vars);
    return f;
}

bool Field::same(const Field& other) const {
    if (this == &other) return true;
    if (kind_ != other.kind_) return false;
    switch (kind_) {
        case FieldKind::Rationals: return true;
        case FieldKind::PrimeField: return p_ == other.p_;
        case FieldKind::RationalFunctions:
            return fvars_ == other.fvars_ && base_->same(*other.base_);
    }
    return false;
}

std::string Field::signature() const {
    switch (kind_) {
        case FieldKind::Rationals: return "Q";
        case FieldKind::PrimeField: return "F" + std::to_string(p_);
        case FieldKind::RationalFunctions: {
            std::string s = base_->signature() + "(";
            for (std::size_t i = 0; i < fvars_.size(); ++i) s += (i ? "," : "") + fvars_[i];
            return s + ")";
        }
    }
    return "?";
}

// The ring of representatives for a rational-function field. Keyed by the
// structural signature so reused Field addresses cannot alias.
static RingPtr frac_ring(const Field& f) {
    static std::mutex mu;
    static std::map<std::string, RingPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    std::string key = f.signature();
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    RingPtr r = PolyRing::make(f.base(), f.function_vars());
    cache.emplace(std::move(key), r);
    return r;
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t n) const {
    switch (kind_) {
        case FieldKind::Rationals: return Scalar(mpq_class(static_cast<long>(n)));
        case FieldKind::PrimeField: return Scalar(mod_normalize(n, p_), 0);
        case FieldKind::RationalFunctions: {
            RingPtr r = frac_ring(*this);
            return Scalar(std::make_shared<Frac>(Frac::of(Polynomial::from_int(r, n))));
        }
    }
    return Scalar();
}

Scalar Field::from_mpq(const mpq_class& q) const {
    switch (kind_) {
        case FieldKind::Rationals: {
            mpq_class c = q;
            c.canonicalize();
            return Scalar(c);
        }
        case FieldKind::PrimeField: {
            mpz_class num = q.get_num(), den = q.get_den();
            std::int64_t n = mod_normalize(mpz_class(num % p_).get_si(), p_);
            std::int64_t d = mod_normalize(mpz_class(den % p_).get_si(), p_);
            require(d != 0, Err::DivisionByZero, "denominator divisible by p");
            return Scalar(mod_normalize(n * mod_inv(d, p_) % p_, p_), 0);
        }
        case FieldKind::RationalFunctions: {
            RingPtr r = frac_ring(*this);
            Polynomial num = Polynomial::constant(r, base_->from_mpq(q));
            return Scalar(std::make_shared<Frac>(Frac::of(num)));
        }
    }
    return Scalar();
}

Scalar Field::param(const std::string& name) const {
    require(kind_ == FieldKind::RationalFunctions, Err::DomainError,
            "field has no parameter " + name);
    RingPtr r = frac_ring(*this);
    int idx = r->index_of(name);
    require(idx >= 0, Err::DomainError, "field has no parameter " + name);
    return Scalar(std::make_shared<Frac>(Frac::of(Polynomial::variable(r, std::size_t(idx)))));
}

Scalar Field::from_frac(Polynomial num, Polynomial den) const {
    require(kind_ == FieldKind::RationalFunctions, Err::DomainError, "not a function field");
    require(num.ring()->same(*frac_ring(*this)), Err::MismatchedContext,
            "fraction over the wrong polynomial ring");
    return Scalar(std::make_shared<Frac>(Frac::make(std::move(num), std::move(den))));
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    switch (kind_) {
        case FieldKind::Rationals: return Scalar(mpq_class(a.rat() + b.rat()));
        case FieldKind::PrimeField: return Scalar(mod_normalize(a.fp() + b.fp(), p_), 0);
        case FieldKind::RationalFunctions:
            return Scalar(std::make_shared<Frac>(a.frac() + b.frac()));
    }
    return Scalar();
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
    switch (kind_) {
        case FieldKind::Rationals: return Scalar(mpq_class(a.rat() - b.rat()));
        case FieldKind::PrimeField: return Scalar(mod_normalize(a.fp() - b.fp(), p_), 0);
        case FieldKind::RationalFunctions:
            return Scalar(std::make_shared<Frac>(a.frac() - b.frac()));
    }
    return Scalar();
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    switch (kind_) {
        case FieldKind::Rationals: return Scalar(mpq_class(a.rat() * b.rat()));
        case FieldKind::PrimeField: return Scalar(a.fp() * b.fp() % p_, 0);
        case FieldKind::RationalFunctions:
            return Scalar(std::make_shared<Frac>(a.frac() * b.frac()));
    }
    return Scalar();
}

Scalar Field::div(const Scalar& a, const Scalar& b) const {
    require(!is_zero(b), Err::DivisionByZero, "division by zero");
    switch (kind_) {
        case FieldKind::Rationals: return Scalar(mpq_class(a.rat() / b.rat()));
        case FieldKind::PrimeField: return Scalar(a.fp() * mod_inv(b.fp(), p_) % p_, 0);
        case FieldKind::RationalFunctions:
            return Scalar(std::make_shared<Frac>(a.frac() / b.frac()));
    }
    return Scalar();
}

Scalar Field::neg(const Scalar& a) const {
    switch (kind_) {
        case FieldKind::Rationals: return Scalar(mpq_class(-a.rat()));
        case FieldKind::PrimeField: return Scalar(mod_normalize(-a.fp(), p_), 0);
        case FieldKind::RationalFunctions:
            return Scalar(std::make_shared<Frac>(-a.frac()));
    }
    return Scalar();
}

Scalar Field::inv(const Scalar& a) const { return div(one(), a); }

Scalar Field::pow(const Scalar& a, std::int64_t e) const {
    if (e < 0) return pow(inv(a), -e);
    Scalar acc = one(), b = a;
    std::uint64_t k = static_cast<std::uint64_t>(e);
    while (k) {
        if (k & 1) acc = mul(acc, b);
        b = mul(b, b);
        k >>= 1;
    }
    return acc;
}

bool Field::is_zero(const Scalar& a) const {
    switch (kind_) {
        case FieldKind::Rationals: return a.rat() == 0;
        case FieldKind::PrimeField: return a.fp() == 0;
        case FieldKind::RationalFunctions: return a.frac().is_zero();
    }
    return false;
}

bool Field::is_one(const Scalar& a) const { return eq(a, one()); }

bool Field::eq(const Scalar& a, const Scalar& b) const {
    switch (kind_) {
        case FieldKind::Rationals: return a.rat() == b.rat();
        case FieldKind::PrimeField: return a.fp() == b.fp();
        case FieldKind::RationalFunctions: return a.frac() == b.frac();
    }
    return false;
}

std::string Field::str(const Scalar& a) const {
    switch (kind_) {
        case FieldKind::Rationals: return a.rat().get_str();
        case FieldKind::PrimeField: return std::to_string(a.fp());
        case FieldKind::RationalFunctions: return a.frac().to_string();
    }
    return "";
}

bool Field::needs_parens(const Scalar& a) const {
    switch (kind_) {
        case FieldKind::Rationals: return false;
        case FieldKind::PrimeField: return false;
        case FieldKind::RationalFunctions: {
            const Frac& f = a.frac();
            if (!f.den.is_constant()) return true;
            return f.num.term_count() > 1;
        }
    }
    return false;
}

// ---------------------------------------------------------------------------

RingPtr PolyRing::make(FieldPtr field, std::vector<std::string> vars,
                       const std::vector<std::string>& odd_vars) {
    auto r = std::make_shared<PolyRing>();
    r->field = std::move(field);
    r->vars = std::move(vars);
    r->odd.assign(r->vars.size(), false);
    for (const auto& name : odd_vars) {
        int i = r->index_of(name);
        require(i >= 0, Err::DomainError, "odd variable " + name + " not declared");
        r->odd[std::size_t(i)] = true;
    }
    return r;
}

int PolyRing::index_of(const std::string& name) const {
    auto it = std::find(vars.begin(), vars.end(), name);
    return it == vars.end() ? -1 : int(it - vars.begin());
}

bool PolyRing::same(const PolyRing& other) const {
    if (this == &other) return true;
    return vars == other.vars && odd == other.odd && field->same(*other.field);
}

} // namespace autlin
