#include "autlin/exactfield.hpp"

#include <sstream>

namespace autlin {

void Polynomial::check_ring(const Polynomial& o) const {
    require(ring_ && o.ring_ && ring_->same(*o.ring_), Err::MismatchedContext,
            "polynomials from different variable contexts");
}

Polynomial Polynomial::constant(RingPtr ring, Scalar c) {
    Polynomial p(ring);
    if (!ring->field->is_zero(c)) p.terms_.emplace(Mono(ring->nvars(), 0), std::move(c));
    return p;
}

Polynomial Polynomial::from_int(RingPtr ring, std::int64_t n) {
    return constant(ring, ring->field->from_int(n));
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t idx) {
    require(idx < ring->nvars(), Err::DomainError, "variable index out of range");
    Mono m(ring->nvars(), 0);
    m[idx] = 1;
    Polynomial p(ring);
    p.terms_.emplace(std::move(m), ring->field->one());
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, const std::string& name) {
    int i = ring->index_of(name);
    require(i >= 0, Err::DomainError, "unknown variable " + name);
    return variable(ring, std::size_t(i));
}

Polynomial Polynomial::monomial(RingPtr ring, Mono m, Scalar c) {
    Polynomial p(ring);
    p.add_term(m, c);
    return p;
}

void Polynomial::add_term(const Mono& m, const Scalar& c) {
    require(m.size() == ring_->nvars(), Err::MismatchedContext, "exponent vector arity");
    const Field& F = *ring_->field;
    if (F.is_zero(c)) return;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (ring_->odd[i] && m[i] >= 2) return; // square-zero variable
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        Scalar s = F.add(it->second, c);
        if (F.is_zero(s))
            terms_.erase(it);
        else
            it->second = std::move(s);
    }
}

bool Polynomial::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && mono_degree(terms_.begin()->first) == 0;
}

Scalar Polynomial::constant_value() const {
    if (terms_.empty()) return ring_->field->zero();
    require(is_constant(), Err::DomainError, "polynomial is not constant");
    return terms_.begin()->second;
}

long Polynomial::degree() const {
    if (terms_.empty()) return -1;
    return long(mono_degree(terms_.begin()->first)); // leading term has max degree
}

long Polynomial::degree_in(std::size_t var) const {
    long d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, long(m[var]));
    return d;
}

Scalar Polynomial::coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? ring_->field->zero() : it->second;
}

Polynomial Polynomial::coeff_of(std::size_t var, std::uint32_t k) const {
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) {
        if (m[var] != k) continue;
        Mono m2 = m;
        m2[var] = 0;
        r.add_term(m2, c);
    }
    return r;
}

Polynomial Polynomial::top_homogeneous() const {
    Polynomial r(ring_);
    if (terms_.empty()) return r;
    std::uint64_t d = mono_degree(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
        if (mono_degree(m) == d) r.terms_.emplace(m, c);
    return r;
}

const std::pair<const Mono, Scalar>& Polynomial::leading_term() const {
    require(!terms_.empty(), Err::DomainError, "zero polynomial has no leading term");
    return *terms_.begin();
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ring_);
    const Field& F = *ring_->field;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, F.neg(c));
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_ring(o);
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    check_ring(o);
    Polynomial r = *this;
    const Field& F = *ring_->field;
    for (const auto& [m, c] : o.terms_) r.add_term(m, F.neg(c));
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_ring(o);
    Polynomial r(ring_);
    const Field& F = *ring_->field;
    const std::size_t nv = ring_->nvars();
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Mono m(nv);
            bool dead = false;
            for (std::size_t i = 0; i < nv; ++i) {
                m[i] = ma[i] + mb[i];
                if (ring_->odd[i] && m[i] >= 2) {
                    dead = true;
                    break;
                }
            }
            if (dead) continue;
            r.add_term(m, F.mul(ca, cb));
        }
    }
    return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    const Field& F = *ring_->field;
    Polynomial r(ring_);
    if (F.is_zero(c)) return r;
    for (const auto& [m, a] : terms_) r.terms_.emplace(m, F.mul(a, c));
    return r;
}

Polynomial Polynomial::pow(std::uint64_t e) const {
    Polynomial acc = from_int(ring_, 1), b = *this;
    while (e) {
        if (e & 1) acc = acc * b;
        b = b * b;
        e >>= 1;
    }
    return acc;
}

bool Polynomial::operator==(const Polynomial& o) const {
    check_ring(o);
    if (terms_.size() != o.terms_.size()) return false;
    const Field& F = *ring_->field;
    auto it = terms_.begin(), jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt)
        if (it->first != jt->first || !F.eq(it->second, jt->second)) return false;
    return true;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
    require(images.size() == ring_->nvars(), Err::DomainError,
            "assignment must cover all variables");
    RingPtr target = images.empty() ? ring_ : images[0].ring();
    for (const auto& img : images)
        require(img.ring()->same(*target), Err::MismatchedContext,
                "substitution images in different contexts");
    const Field& F = *target->field;
    // memoized powers of each image
    std::vector<std::vector<Polynomial>> pow_cache(images.size());
    auto img_pow = [&](std::size_t i, std::uint32_t e) -> const Polynomial& {
        auto& cache = pow_cache[i];
        if (cache.empty()) cache.push_back(Polynomial::from_int(target, 1));
        while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
        return cache[e];
    };
    require(F.same(*ring_->field), Err::MismatchedContext,
            "substitution images over a different coefficient field");
    Polynomial out(target);
    for (const auto& [m, c] : terms_) {
        Polynomial term = Polynomial::constant(target, c);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i]) term = term * img_pow(i, m[i]);
        out = out + term;
    }
    return out;
}

Polynomial Polynomial::substitute_one(std::size_t var, const Polynomial& image) const {
    check_ring(image);
    std::vector<Polynomial> images;
    images.reserve(ring_->nvars());
    for (std::size_t i = 0; i < ring_->nvars(); ++i)
        images.push_back(i == var ? image : Polynomial::variable(ring_, i));
    return substitute(images);
}

Scalar Polynomial::eval(const std::vector<Scalar>& point) const {
    require(point.size() == ring_->nvars(), Err::DomainError, "point arity");
    const Field& F = *ring_->field;
    Scalar acc = F.zero();
    for (const auto& [m, c] : terms_) {
        Scalar t = c;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i]) t = F.mul(t, F.pow(point[i], m[i]));
        acc = F.add(acc, t);
    }
    return acc;
}

Polynomial Polynomial::derivative(std::size_t var) const {
    Polynomial r(ring_);
    const Field& F = *ring_->field;
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Mono m2 = m;
        m2[var] -= 1;
        r.add_term(m2, F.mul(c, F.from_int(m[var])));
    }
    return r;
}

Polynomial Polynomial::exact_div(const Polynomial& d) const {
    check_ring(d);
    require(!d.is_zero(), Err::DivisionByZero, "division by zero polynomial");
    const Field& F = *ring_->field;
    Polynomial rem = *this, quot(ring_);
    const auto& [dm, dc] = d.leading_term();
    while (!rem.is_zero()) {
        const auto& [rm, rc] = rem.leading_term();
        Mono q(rm.size());
        for (std::size_t i = 0; i < rm.size(); ++i) {
            require(rm[i] >= dm[i], Err::DomainError, "not exactly divisible");
            q[i] = rm[i] - dm[i];
        }
        Scalar qc = F.div(rc, dc);
        Polynomial qt = Polynomial::monomial(ring_, q, qc);
        quot = quot + qt;
        rem = rem - qt * d;
        if (!rem.is_zero() && !(MonoGreater{}(rm, rem.leading_term().first)))
            fail(Err::DomainError, "not exactly divisible");
    }
    return quot;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    const Field& F = *ring_->field;
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Scalar cc = c;
        std::string cs = F.str(cc);
        bool neg = !cs.empty() && cs[0] == '-' && !F.needs_parens(cc);
        if (first) {
            if (neg) {
                os << "-";
                cs = cs.substr(1);
                cc = F.neg(cc);
            }
        } else {
            if (neg) {
                os << " - ";
                cs = cs.substr(1);
                cc = F.neg(cc);
            } else {
                os << " + ";
            }
        }
        first = false;
        bool any_var = mono_degree(m) > 0;
        bool coeff_is_one = F.is_one(cc);
        if (!any_var || !coeff_is_one) {
            if (F.needs_parens(cc))
                os << "(" << cs << ")";
            else
                os << cs;
            if (any_var) os << "*";
        }
        bool started = false;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (!m[i]) continue;
            if (started) os << "*";
            started = true;
            os << ring_->vars[i];
            if (m[i] > 1) os << "^" << m[i];
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Resultant via fraction-free (Bareiss) determinant of the Sylvester matrix

namespace {

Polynomial det_bareiss_poly(std::vector<std::vector<Polynomial>> a, RingPtr ring) {
    const std::size_t n = a.size();
    const Field& F = *ring->field;
    if (n == 0) return Polynomial::from_int(ring, 1);
    bool negate = false;
    Polynomial prev = Polynomial::from_int(ring, 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return Polynomial(ring); // singular
            std::swap(a[k], a[swap_row]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Polynomial t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                a[i][j] = t.exact_div(prev);
            }
            a[i][k] = Polynomial(ring);
        }
        prev = a[k][k];
    }
    Polynomial det = a[n - 1][n - 1];
    return negate ? det.scaled(F.neg(F.one())) : det;
}

} // namespace

Polynomial resultant(const Polynomial& p, const Polynomial& q, std::size_t var) {
    require(p.ring() && q.ring() && p.ring()->same(*q.ring()), Err::MismatchedContext,
            "resultant arguments over different rings");
    RingPtr ring = p.ring();
    require(!(p.is_zero() && q.is_zero()), Err::DomainError, "resultant of two zero polynomials");
    long dp = p.degree_in(var), dq = q.degree_in(var);
    if (dp <= 0 && dq <= 0) return Polynomial::from_int(ring, 1); // both constant in var
    if (dp <= 0) return p.is_zero() ? Polynomial(ring) : p.pow(std::uint64_t(std::max(dq, 0L)));
    if (dq <= 0) return q.is_zero() ? Polynomial(ring) : q.pow(std::uint64_t(std::max(dp, 0L)));

    auto coeff_rows = [&](const Polynomial& f, long df) {
        std::vector<Polynomial> c; // c[i] = coefficient of var^(df-i)
        for (long i = df; i >= 0; --i) c.push_back(f.coeff_of(var, std::uint32_t(i)));
        return c;
    };
    std::vector<Polynomial> cp = coeff_rows(p, dp), cq = coeff_rows(q, dq);
    std::size_t n = std::size_t(dp + dq);
    std::vector<std::vector<Polynomial>> syl(n, std::vector<Polynomial>(n, Polynomial(ring)));
    for (long r = 0; r < dq; ++r)
        for (std::size_t j = 0; j < cp.size(); ++j) syl[std::size_t(r)][std::size_t(r) + j] = cp[j];
    for (long r = 0; r < dp; ++r)
        for (std::size_t j = 0; j < cq.size(); ++j)
            syl[std::size_t(dq + r)][std::size_t(r) + j] = cq[j];
    return det_bareiss_poly(std::move(syl), ring);
}

Polynomial gcd_univariate(const Polynomial& a, const Polynomial& b, std::size_t var) {
    RingPtr ring = a.ring();
    const Field& F = *ring->field;
    auto as_monic = [&](Polynomial f) {
        if (f.is_zero()) return f;
        long d = f.degree_in(var);
        Scalar lc = f.coeff_of(var, std::uint32_t(d)).constant_value();
        return f.scaled(F.inv(lc));
    };
    auto check_univar = [&](const Polynomial& f) {
        for (const auto& [m, c] : f.terms())
            for (std::size_t i = 0; i < m.size(); ++i)
                require(i == var || m[i] == 0, Err::DomainError,
                        "gcd_univariate needs univariate input");
    };
    check_univar(a);
    check_univar(b);
    Polynomial u = a, v = b;
    while (!v.is_zero()) {
        // remainder of u by monic v
        Polynomial mv = as_monic(v);
        Polynomial r = u;
        long dv = mv.degree_in(var);
        while (!r.is_zero() && r.degree_in(var) >= dv) {
            long dr = r.degree_in(var);
            Scalar lc = r.coeff_of(var, std::uint32_t(dr)).constant_value();
            Mono shift(ring->nvars(), 0);
            shift[var] = std::uint32_t(dr - dv);
            r = r - mv * Polynomial::monomial(ring, shift, lc);
        }
        u = v;
        v = r;
    }
    return as_monic(u);
}

// ---------------------------------------------------------------------------
// Rational functions

Frac Frac::of(Polynomial p) {
    RingPtr r = p.ring();
    return Frac{std::move(p), Polynomial::from_int(r, 1)};
}

Frac Frac::make(Polynomial num, Polynomial den) {
    require(num.ring()->same(*den.ring()), Err::MismatchedContext, "fraction ring mismatch");
    require(!den.is_zero(), Err::DivisionByZero, "zero denominator");
    RingPtr ring = num.ring();
    const Field& F = *ring->field;
    if (num.is_zero()) return Frac{Polynomial(ring), Polynomial::from_int(ring, 1)};
    if (ring->nvars() == 1) {
        Polynomial g = gcd_univariate(num, den, 0);
        if (g.degree() > 0) {
            num = num.exact_div(g);
            den = den.exact_div(g);
        }
    }
    // normalize: leading coefficient of the denominator is 1
    Scalar lc = den.leading_term().second;
    if (!F.is_one(lc)) {
        Scalar ilc = F.inv(lc);
        num = num.scaled(ilc);
        den = den.scaled(ilc);
    }
    return Frac{std::move(num), std::move(den)};
}

Frac Frac::operator+(const Frac& o) const { return make(num * o.den + o.num * den, den * o.den); }
Frac Frac::operator-(const Frac& o) const { return make(num * o.den - o.num * den, den * o.den); }
Frac Frac::operator*(const Frac& o) const { return make(num * o.num, den * o.den); }
Frac Frac::operator/(const Frac& o) const {
    require(!o.is_zero(), Err::DivisionByZero, "division by zero");
    return make(num * o.den, den * o.num);
}
Frac Frac::operator-() const { return Frac{-num, den}; }
Frac Frac::inv() const {
    require(!is_zero(), Err::DivisionByZero, "inverse of zero");
    return make(den, num);
}

Frac Frac::pow(std::int64_t e) const {
    if (e < 0) return inv().pow(-e);
    Frac acc = of(Polynomial::from_int(num.ring(), 1));
    Frac b = *this;
    std::uint64_t k = std::uint64_t(e);
    while (k) {
        if (k & 1) acc = acc * b;
        b = b * b;
        k >>= 1;
    }
    return acc;
}

bool Frac::operator==(const Frac& o) const { return num * o.den == o.num * den; }

std::string Frac::to_string() const {
    if (den.is_constant() && num.ring()->field->is_one(den.constant_value()))
        return num.to_string();
    auto wrap = [](const Polynomial& p) {
        std::string s = p.to_string();
        if (p.term_count() > 1 || s.find('*') != std::string::npos ||
            s.find('^') != std::string::npos)
            return "(" + s + ")";
        return s;
    };
    return wrap(num) + "/" + wrap(den);
}

} // namespace autlin
