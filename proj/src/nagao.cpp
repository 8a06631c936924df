#include "autlin/nagao.hpp"

#include <map>
#include <mutex>

namespace autlin {

Mat2 e_delta(const Direction& d) {
    const FieldPtr& F = d.F;
    return Mat2{F, F->mul(d.a, d.b), F->neg(F->mul(d.a, d.a)), F->mul(d.b, d.b),
                F->neg(F->mul(d.a, d.b))};
}

bool CongruenceMatrix::det_is_one() const {
    return m.det() == Polynomial::from_int(m.ring(), 1);
}

Mat2 CongruenceMatrix::at_zero() const {
    const FieldPtr& F = m.ring()->field;
    Scalar z0 = F->zero();
    PolyMatrix e = m.eval_vars({z0});
    return Mat2{F, e.at(0, 0).constant_value(), e.at(0, 1).constant_value(),
                e.at(1, 0).constant_value(), e.at(1, 1).constant_value()};
}

namespace {

RingPtr zring_of(const FieldPtr& F) {
    static std::mutex mu;
    static std::map<std::string, RingPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    std::string key = F->signature();
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    RingPtr r = PolyRing::make(F, {"z"});
    cache.emplace(std::move(key), r);
    return r;
}

// psi(f)(z) = f(z)/z, the degree-shifting K-linear bijection t^2 K[t] -> z K[z]
Polynomial psi_shift(const Polynomial& f, const RingPtr& zr) {
    Polynomial out(zr);
    for (const auto& [m, c] : f.terms()) out.add_term({m[0] - 1}, c);
    return out;
}

PolyMatrix letter_image(const Letter& l, const RingPtr& zr) {
    Mat2 e = e_delta(l.delta);
    Polynomial r = psi_shift(l.f, zr);
    PolyMatrix m = PolyMatrix::identity(zr, 2);
    m.at(0, 0) = m.at(0, 0) + r.scaled(e.a);
    m.at(0, 1) = m.at(0, 1) + r.scaled(e.b);
    m.at(1, 0) = m.at(1, 0) + r.scaled(e.c);
    m.at(1, 1) = m.at(1, 1) + r.scaled(e.d);
    return m;
}

} // namespace

CongruenceMatrix embed_aut1(const MixedWord& w) {
    require(w.s().is_identity(), Err::NontrivialLinearPart,
            "embed_aut1 needs a trivial linear part");
    const FieldPtr& F = w.field();
    RingPtr zr = zring_of(F);
    PolyMatrix acc = PolyMatrix::identity(zr, 2);
    for (const auto& l : w.letters()) acc = acc * letter_image(l, zr);
    return CongruenceMatrix{acc};
}

CongruenceMatrix embed_autU(const MixedWord& w) {
    const FieldPtr& F = w.field();
    const Mat2& s = w.s();
    require(F->is_one(s.a) && F->is_zero(s.b) && F->is_one(s.d), Err::LinearPartNotInU,
            "linear part must be (x, y + a x)");
    RingPtr zr = zring_of(F);
    PolyMatrix acc = PolyMatrix::identity(zr, 2);
    acc.at(1, 0) = Polynomial::constant(zr, s.c);
    for (const auto& l : w.letters()) acc = acc * letter_image(l, zr);
    return CongruenceMatrix{acc};
}

VerifyFreeReport verify_free(const FieldPtr& F, int max_len, const std::vector<Scalar>& coeffs,
                             const std::vector<Direction>& dirs) {
    require(max_len <= 4 && coeffs.size() <= 4 && dirs.size() <= 3, Err::ScopeExceeded,
            "verify_free is capped at desk scale");
    RingPtr lr = PlaneAut::letter_ring(F);
    std::vector<Polynomial> fs;
    for (const auto& c : coeffs) {
        require(!F->is_zero(c), Err::DomainError, "letter coefficients must be nonzero");
        fs.push_back(Polynomial::monomial(lr, {2}, c));
    }

    VerifyFreeReport report;
    std::map<std::string, std::string> images; // matrix text -> word text
    std::vector<Letter> current;
    auto record = [&]() {
        MixedWord w(Mat2::identity(F), current);
        CongruenceMatrix cm = embed_aut1(w);
        ++report.words;
        std::string key = cm.m.to_string();
        auto [it, fresh] = images.emplace(key, w.to_string());
        if (!fresh) {
            report.all_distinct = false;
            if (report.collision.empty())
                report.collision = it->second + " vs " + w.to_string();
        }
    };
    // depth-first enumeration of reduced words of length <= max_len
    std::function<void(int)> walk = [&](int remaining) {
        record();
        if (remaining == 0) return;
        for (const auto& d : dirs) {
            if (!current.empty() && current.back().delta == d) continue;
            for (const auto& f : fs) {
                current.push_back({d, f});
                walk(remaining - 1);
                current.pop_back();
            }
        }
    };
    walk(max_len);
    return report;
}

} // namespace autlin
