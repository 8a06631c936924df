#include "autlin/planeaut.hpp"

#include <map>
#include <mutex>

namespace autlin {

Direction Direction::make(FieldPtr F, const Scalar& a, const Scalar& b) {
    require(!(F->is_zero(a) && F->is_zero(b)), Err::DomainError, "direction (0,0)");
    if (!F->is_zero(a)) {
        Scalar ia = F->inv(a);
        return Direction{F, F->one(), F->mul(b, ia)};
    }
    return Direction{F, F->zero(), F->one()};
}

Direction Direction::d0(FieldPtr F) { return Direction{F, F->zero(), F->one()}; }
Direction Direction::dinf(FieldPtr F) { return Direction{F, F->one(), F->zero()}; }

bool Direction::operator==(const Direction& o) const { return F->eq(a, o.a) && F->eq(b, o.b); }

std::string Direction::to_string() const { return "(" + F->str(a) + ";" + F->str(b) + ")"; }

// ---------------------------------------------------------------------------

RingPtr PlaneAut::plane_ring(const FieldPtr& F) {
    static std::mutex mu;
    static std::map<std::string, RingPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    std::string key = F->signature();
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    RingPtr r = PolyRing::make(F, {"x", "y"});
    cache.emplace(std::move(key), r);
    return r;
}

RingPtr PlaneAut::letter_ring(const FieldPtr& F) {
    static std::mutex mu;
    static std::map<std::string, RingPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    std::string key = F->signature();
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    RingPtr r = PolyRing::make(F, {"t"});
    cache.emplace(std::move(key), r);
    return r;
}

PlaneAut::PlaneAut(Polynomial p, Polynomial q) : ring_(p.ring()), p_(std::move(p)), q_(std::move(q)) {
    require(ring_ && ring_->same(*q_.ring()), Err::MismatchedContext,
            "coordinates over different rings");
    require(ring_->nvars() == 2, Err::DomainError, "plane automorphisms need a 2-variable ring");
}

PlaneAut PlaneAut::identity(const FieldPtr& F) {
    RingPtr r = plane_ring(F);
    return PlaneAut(Polynomial::variable(r, 0), Polynomial::variable(r, 1));
}

PlaneAut PlaneAut::linear(const Mat2& m) {
    RingPtr r = plane_ring(m.F);
    Polynomial x = Polynomial::variable(r, 0), y = Polynomial::variable(r, 1);
    return PlaneAut(x.scaled(m.a) + y.scaled(m.b), x.scaled(m.c) + y.scaled(m.d));
}

PlaneAut PlaneAut::affine(const Mat2& m, const Scalar& tx, const Scalar& ty) {
    RingPtr r = plane_ring(m.F);
    PlaneAut lin = linear(m);
    return PlaneAut(lin.p_ + Polynomial::constant(r, tx), lin.q_ + Polynomial::constant(r, ty));
}

PlaneAut PlaneAut::triangular(const FieldPtr& F, const Polynomial& f) {
    RingPtr r = plane_ring(F);
    require(f.ring()->nvars() == 1 && f.ring()->field->same(*F), Err::MismatchedContext,
            "triangular map needs univariate f over the same field");
    Polynomial x = Polynomial::variable(r, 0), y = Polynomial::variable(r, 1);
    Polynomial fx = f.substitute({x});
    return PlaneAut(x, y + fx);
}

PlaneAut PlaneAut::letter(const Direction& d, const Polynomial& f) {
    const FieldPtr& F = d.F;
    RingPtr r = plane_ring(F);
    Polynomial x = Polynomial::variable(r, 0), y = Polynomial::variable(r, 1);
    Polynomial ell = x.scaled(d.b) - y.scaled(d.a);
    Polynomial fl = f.substitute({ell});
    return PlaneAut(x + fl.scaled(d.a), y + fl.scaled(d.b));
}

PlaneAut PlaneAut::compose(const PlaneAut& psi) const {
    require(ring_->same(*psi.ring_), Err::MismatchedContext, "composition over different fields");
    std::vector<Polynomial> imgs = {psi.p_, psi.q_};
    return PlaneAut(p_.substitute(imgs), q_.substitute(imgs));
}

Polynomial PlaneAut::jacobian() const {
    return p_.derivative(0) * q_.derivative(1) - p_.derivative(1) * q_.derivative(0);
}

std::optional<Scalar> PlaneAut::jacobian_constant() const {
    Polynomial j = jacobian();
    if (!j.is_constant()) return std::nullopt;
    return j.constant_value();
}

long PlaneAut::degree() const { return std::max(p_.degree(), q_.degree()); }

bool PlaneAut::fixes_origin() const {
    Mono zero(2, 0);
    const Field& F = *ring_->field;
    return F.is_zero(p_.coeff(zero)) && F.is_zero(q_.coeff(zero));
}

Mat2 PlaneAut::linear_part() const {
    Mono mx{1, 0}, my{0, 1};
    return Mat2{ring_->field, p_.coeff(mx), p_.coeff(my), q_.coeff(mx), q_.coeff(my)};
}

std::pair<Scalar, Scalar> PlaneAut::apply(const Scalar& x, const Scalar& y) const {
    return {p_.eval({x, y}), q_.eval({x, y})};
}

bool PlaneAut::operator==(const PlaneAut& o) const { return p_ == o.p_ && q_ == o.q_; }

std::string PlaneAut::to_string() const {
    return "(" + p_.to_string() + ", " + q_.to_string() + ")";
}

// ---------------------------------------------------------------------------
// van der Kulk degree reduction

PlaneAut VdkFactorization::recompose(const FieldPtr& F) const {
    PlaneAut acc = PlaneAut::identity(F);
    for (const auto& f : factors) acc = acc.compose(f.map);
    return acc;
}

namespace {

// one reduction step record: either "subtract c * p^k from q" or "swap coordinates"
struct Step {
    bool swap;
    Scalar c;
    std::uint32_t k;
};

} // namespace

VdkFactorization factor_vdk(const PlaneAut& phi) {
    const FieldPtr& F = phi.field();
    RingPtr ring = phi.ring();
    auto jc = phi.jacobian_constant();
    require(jc.has_value() && !F->is_zero(*jc), Err::NotAnAutomorphism,
            "jacobian is not a nonzero constant");

    Polynomial p = phi.p(), q = phi.q();
    std::vector<Step> steps;
    bool last_was_stuck_swap = false;
    long guard = 8 * (phi.degree() + 2);
    while (std::max(p.degree(), q.degree()) > 1) {
        require(guard-- > 0, Err::NotAnAutomorphism, "degree reduction did not terminate");
        long dp = p.degree(), dq = q.degree();
        if (dq >= dp) {
            require(dp >= 1, Err::NotAnAutomorphism, "degenerate coordinate");
            require(dq % dp == 0, Err::NotAnAutomorphism,
                    "no degree reduction applies (degree stuck)");
            std::uint32_t k = std::uint32_t(dq / dp);
            Polynomial hp = p.top_homogeneous(), hq = q.top_homogeneous();
            Polynomial hpk = hp.pow(k);
            Scalar c = F->div(hq.leading_term().second, hpk.leading_term().second);
            if (hq == hpk.scaled(c)) {
                q = q - p.pow(k).scaled(c);
                steps.push_back({false, c, k});
                last_was_stuck_swap = false;
            } else {
                require(!last_was_stuck_swap, Err::NotAnAutomorphism,
                        "no degree reduction applies (degree stuck)");
                std::swap(p, q);
                steps.push_back({true, F->zero(), 0});
                last_was_stuck_swap = true;
            }
        } else {
            std::swap(p, q);
            steps.push_back({true, F->zero(), 0});
            last_was_stuck_swap = false;
        }
    }

    // the residue must itself be invertible; for degree 1 the linear part decides
    PlaneAut residue(p, q);
    require(residue.degree() == 1 && !F->is_zero(residue.linear_part().det()),
            Err::NotAnAutomorphism, "reduction did not reach an invertible affine map");

    // phi = step_1^{ -1} o ... o step_r^{-1} o residue; collect with merging
    RingPtr lr = PlaneAut::letter_ring(F);
    Mat2 swap_m = Mat2::of(F, 0, 1, 1, 0);
    std::vector<VdkFactor> out;
    Polynomial pending_f(lr); // accumulated triangular correction
    auto flush_pending = [&]() {
        if (pending_f.is_zero()) return;
        PlaneAut tri = PlaneAut::triangular(F, pending_f);
        out.push_back({tri.degree() <= 1, tri});
        pending_f = Polynomial(lr);
    };
    for (const auto& st : steps) {
        if (st.swap) {
            flush_pending();
            if (!out.empty() && out.back().is_affine) {
                out.back().map = out.back().map.compose(PlaneAut::linear(swap_m));
            } else {
                out.push_back({true, PlaneAut::linear(swap_m)});
            }
        } else {
            Mono m(1, 0);
            m[0] = st.k;
            pending_f.add_term(m, st.c); // inverse of (x, y - c x^k)
        }
    }
    flush_pending();
    if (!out.empty() && out.back().is_affine && residue.degree() <= 1) {
        out.back().map = out.back().map.compose(residue);
    } else {
        out.push_back({true, residue});
    }
    return VdkFactorization{std::move(out)};
}

PlaneAut invert(const PlaneAut& phi) {
    const FieldPtr& F = phi.field();
    VdkFactorization fac = factor_vdk(phi);
    PlaneAut acc = PlaneAut::identity(F);
    RingPtr ring = phi.ring();
    for (const auto& f : fac.factors) {
        PlaneAut inv_factor = [&]() {
            if (f.is_affine) {
                Mat2 m = f.map.linear_part();
                Mono zero(2, 0);
                Scalar tx = f.map.p().coeff(zero), ty = f.map.q().coeff(zero);
                Mat2 mi = m.inverse();
                auto [ix, iy] = mi.apply(tx, ty);
                return PlaneAut::affine(mi, F->neg(ix), F->neg(iy));
            }
            // (x, y + f(x))^{-1} = (x, y - f(x))
            Polynomial x = Polynomial::variable(ring, 0), y = Polynomial::variable(ring, 1);
            Polynomial fx = f.map.q() - y;
            return PlaneAut(x, y - fx);
        }();
        acc = inv_factor.compose(acc);
    }
    return acc;
}

} // namespace autlin
