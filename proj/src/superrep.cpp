#include "autlin/superrep.hpp"

namespace autlin {

namespace {

PolyMatrix build_eta(const RingPtr& zring, int N) {
    // basis: i = 0..N : x^i y^(N-i); N+1+i, i = 0..N-1 : x^i y^(N-1-i) eps
    std::size_t dim = std::size_t(2 * N + 1);
    PolyMatrix m(zring, dim);
    for (int i = 0; i < N; ++i) // eta(x^i y^(N-i)) = (N-i) x^i y^(N-1-i) eps
        m.at(std::size_t(N + 1 + i), std::size_t(i)) = Polynomial::from_int(zring, N - i);
    for (int i = 0; i < N; ++i) // eta(x^i y^(N-1-i) eps) = x^(i+1) y^(N-1-i)
        m.at(std::size_t(i + 1), std::size_t(N + 1 + i)) = Polynomial::from_int(zring, 1);
    return m;
}

} // namespace

SuperRep::SuperRep(FieldPtr F, int N) : F_(std::move(F)), N_(N) {
    require(N_ >= 1, Err::DomainError, "N must be positive");
    require(F_->characteristic() == 0, Err::PositiveCharacteristic,
            "the representation needs characteristic zero");
    zring_ = PolyRing::make(F_, {"z"});
    eta_ = build_eta(zring_, N_);
}

PolyMatrix SuperRep::linear(const Mat2& g) const {
    require(F_->is_one(g.det()), Err::DomainError, "linear part must have determinant 1");
    Mat2 gi = g.inverse();
    RingPtr xy = PlaneAut::plane_ring(F_);
    Polynomial x = Polynomial::variable(xy, 0), y = Polynomial::variable(xy, 1);
    Polynomial ix = x.scaled(gi.a) + y.scaled(gi.b); // first coordinate of g^-1 (x,y)
    Polynomial iy = x.scaled(gi.c) + y.scaled(gi.d);
    std::size_t d = dim();
    PolyMatrix m(zring_, d);
    auto fill_block = [&](int deg, std::size_t offset) {
        // column for x^i y^(deg-i): expand ix^i * iy^(deg-i)
        for (int i = 0; i <= deg; ++i) {
            Polynomial img = ix.pow(std::uint64_t(i)) * iy.pow(std::uint64_t(deg - i));
            for (const auto& [mono, c] : img.terms()) {
                std::size_t row = offset + mono[0];
                m.at(row, offset + std::size_t(i)) = Polynomial::constant(zring_, c);
            }
        }
    };
    fill_block(N_, 0);
    if (N_ >= 1) fill_block(N_ - 1, std::size_t(N_ + 1));
    return m;
}

PolyMatrix SuperRep::elementary(const Polynomial& f) const {
    if (f.is_zero()) return PolyMatrix::identity(zring_, dim());
    check_letter_poly(f);
    require(f.ring()->field->same(*F_), Err::MismatchedContext, "letter over a different field");
    // A = eta * f(eta); exp(z A)
    PolyMatrix a(zring_, dim());
    for (const auto& [mono, c] : f.terms())
        a = a + eta_.pow(mono[0] + 1).scaled(c);
    Polynomial z = Polynomial::variable(zring_, 0);
    return exp_nilpotent(a.scaled(z));
}

Mat2 SuperRep::gamma_for(const Direction& d) const {
    // [[p,a],[q,b]] with p b - q a = 1; canonical coordinates make the choice
    // (p,q) = (1,0) for (0;1) and (p,q) = (0,-1) for (1;b).
    if (F_->is_zero(d.a)) return Mat2::identity(F_);
    return Mat2{F_, F_->zero(), d.a, F_->from_int(-1), d.b};
}

PolyMatrix SuperRep::letter_matrix(const Letter& l, int n) const {
    require(n >= 3, Err::DegreeOutOfRange, "need n >= 3");
    require(l.f.degree() < n, Err::DegreeOutOfRange,
            "letter degree " + std::to_string(l.f.degree()) + " is not < n");
    for (const auto& [mono, c] : l.f.terms())
        require((2 * N_) % int(mono[0] + 1) == 0, Err::DivisibilityViolated,
                "monomial degree k = " + std::to_string(mono[0]) + " needs (k+1) | 2N");
    Mat2 g = gamma_for(l.delta);
    if (g.is_identity()) return elementary(l.f);
    return linear(g) * elementary(l.f) * linear(g.inverse());
}

PolyMatrix SuperRep::word(const MixedWord& w, int n) const {
    require(F_->is_one(w.s().det()), Err::LinearPartNotInS,
            "mixed word linear part must lie in SL(2,K)");
    PolyMatrix acc = linear(w.s());
    for (const auto& l : w.letters()) acc = acc * letter_matrix(l, n);
    return acc;
}

std::vector<Scalar> SuperRep::line_vector(const Direction& d) const {
    // (b x - a y)^N in the monomial basis x^i y^(N-i)
    RingPtr xy = PlaneAut::plane_ring(F_);
    Polynomial ell = Polynomial::variable(xy, 0).scaled(d.b) -
                     Polynomial::variable(xy, 1).scaled(d.a);
    Polynomial powN = ell.pow(std::uint64_t(N_));
    std::vector<Scalar> v(dim(), F_->zero());
    for (const auto& [mono, c] : powN.terms()) v[mono[0]] = c;
    return v;
}

std::pair<long, std::vector<Scalar>> SuperRep::hdc(const std::vector<Polynomial>& v) const {
    long top = -1;
    for (const auto& p : v) top = std::max(top, p.degree_in(0));
    std::vector<Scalar> coeffs(v.size(), F_->zero());
    if (top < 0) return {top, coeffs};
    for (std::size_t i = 0; i < v.size(); ++i)
        coeffs[i] = v[i].coeff_of(0, std::uint32_t(top)).constant_value();
    return {top, coeffs};
}

bool SuperRep::in_line(const std::vector<Scalar>& vec, const Direction& d) const {
    std::vector<Scalar> line = line_vector(d);
    // vec = c * line for some nonzero c
    Scalar c = F_->zero();
    for (std::size_t i = 0; i < vec.size(); ++i) {
        if (!F_->is_zero(line[i])) {
            c = F_->div(vec[i], line[i]);
            break;
        }
    }
    if (F_->is_zero(c)) return false;
    for (std::size_t i = 0; i < vec.size(); ++i)
        if (!F_->eq(vec[i], F_->mul(c, line[i]))) return false;
    return true;
}

PingPongReport pingpong_check(const SuperRep& rep, const Direction& d, const Direction& dprime,
                              int samples, int n, std::uint64_t seed) {
    require(d != dprime, Err::DomainError, "ping-pong needs two distinct directions");
    const FieldPtr& F = rep.field();
    RingPtr zr = rep.zring();
    std::mt19937_64 rng(seed);
    auto rnd = [&](std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
    };
    PingPongReport report;
    Polynomial z = Polynomial::variable(zr, 0);
    for (int it = 0; it < samples; ++it) {
        // letter at d with an admissible monomial and nonzero coefficient
        std::vector<std::uint32_t> ks;
        for (std::uint32_t k = 2; int(k) < n; ++k)
            if ((2 * rep.N()) % int(k + 1) == 0) ks.push_back(k);
        require(!ks.empty(), Err::DivisibilityViolated, "no admissible letter degree");
        Polynomial f(PlaneAut::letter_ring(F));
        std::int64_t c = 0;
        while (c == 0) c = rnd(-3, 3);
        f.add_term({ks[std::size_t(rnd(0, long(ks.size()) - 1))]}, F->from_int(c));
        PolyMatrix tau = rep.letter_matrix(Letter{d, f}, n);

        // vector with hdc on the d' line: z^top * line + lower junk
        long top = rnd(1, 3);
        std::vector<Scalar> line = rep.line_vector(dprime);
        std::int64_t scale = 0;
        while (scale == 0) scale = rnd(-3, 3);
        std::vector<Polynomial> v(rep.dim(), Polynomial(zr));
        for (std::size_t i = 0; i < rep.dim(); ++i) {
            v[i] = z.pow(std::uint64_t(top)).scaled(F->mul(line[i], F->from_int(scale)));
            for (long deg = 0; deg < top; ++deg)
                v[i] = v[i] + z.pow(std::uint64_t(deg)).scaled(F->from_int(rnd(-2, 2)));
        }
        auto [vd, vh] = rep.hdc(v);
        if (!rep.in_line(vh, dprime)) {
            // lower junk can only matter if the top coefficient vanished; it cannot
            report.all_contained = false;
            report.notes.push_back("sample vector construction failed");
            continue;
        }
        auto [id2, ih] = rep.hdc(tau.apply(v));
        ++report.samples;
        if (!rep.in_line(ih, d)) {
            report.all_contained = false;
            report.notes.push_back("containment failed for f = " + f.to_string() + " at " +
                                   d.to_string());
        }
    }
    return report;
}

} // namespace autlin
