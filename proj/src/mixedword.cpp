#include "autlin/mixedword.hpp"

namespace autlin {

std::string Letter::to_string() const { return "(" + delta.to_string() + "," + f.to_string() + ")"; }

void check_letter_poly(const Polynomial& f) {
    require(f.ring()->nvars() == 1, Err::DomainError, "letter polynomial must be univariate");
    require(!f.is_zero(), Err::DomainError, "letter polynomial must be nonzero");
    const Field& F = *f.ring()->field;
    require(F.is_zero(f.coeff({0})) && F.is_zero(f.coeff({1})), Err::DomainError,
            "letter polynomial must lie in t^2 K[t]");
}

MixedWord::MixedWord(Mat2 s, std::vector<Letter> letters)
    : s_(std::move(s)), letters_(std::move(letters)) {
    require(!s_.F->is_zero(s_.det()), Err::DomainError, "singular linear part");
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        check_letter_poly(letters_[i].f);
        if (i) require(letters_[i].delta != letters_[i - 1].delta, Err::DomainError,
                       "adjacent letters share a direction; word not reduced");
    }
}

MixedWord MixedWord::identity(const FieldPtr& F) { return MixedWord(Mat2::identity(F), {}); }

MixedWord MixedWord::of_letter(Letter l) {
    FieldPtr F = l.delta.F;
    return MixedWord(Mat2::identity(F), {std::move(l)});
}

MixedWord MixedWord::of_linear(Mat2 s) { return MixedWord(std::move(s), {}); }

bool MixedWord::is_identity() const { return letters_.empty() && s_.is_identity(); }

long MixedWord::degree() const {
    long d = 1;
    for (const auto& l : letters_) d *= l.f.degree();
    return d;
}

bool MixedWord::operator==(const MixedWord& o) const {
    if (!(s_ == o.s_) || letters_.size() != o.letters_.size()) return false;
    for (std::size_t i = 0; i < letters_.size(); ++i)
        if (!(letters_[i] == o.letters_[i])) return false;
    return true;
}

std::string MixedWord::to_string() const {
    std::string out = "s=" + s_.to_string() + " [";
    for (std::size_t i = 0; i < letters_.size(); ++i)
        out += (i ? ", " : "") + letters_[i].to_string();
    return out + "]";
}

Letter conj_letter(const Letter& u, const Mat2& g) {
    const FieldPtr& F = g.F;
    // new direction: span of g * (a,b)
    auto [va, vb] = g.apply(u.delta.a, u.delta.b);
    Direction nd = Direction::make(F, va, vb);
    // e: g*(a,b) = e * (a',b')
    Scalar e = F->is_zero(nd.a) ? vb : va;
    // c: l_d o g^-1 = c * l_{d'}
    Mat2 gi = g.inverse();
    Scalar w1 = F->sub(F->mul(u.delta.b, gi.a), F->mul(u.delta.a, gi.c));
    Scalar w2 = F->sub(F->mul(u.delta.b, gi.b), F->mul(u.delta.a, gi.d));
    Scalar c = !F->is_zero(nd.b) ? F->div(w1, nd.b) : F->div(w2, F->neg(nd.a));
    // consistency of the proportionality
    require(F->eq(w1, F->mul(c, nd.b)) && F->eq(w2, F->neg(F->mul(c, nd.a))), Err::DomainError,
            "inconsistent direction rescaling");
    // f'(s) = e * f(c s)
    Polynomial nf(u.f.ring());
    for (const auto& [m, coeff] : u.f.terms())
        nf.add_term(m, F->mul(coeff, F->mul(e, F->pow(c, m[0]))));
    return Letter{nd, nf};
}

namespace {

void push_reduced(std::vector<Letter>& stack, const Letter& l) {
    if (!stack.empty() && stack.back().delta == l.delta) {
        Polynomial sum = stack.back().f + l.f;
        if (sum.is_zero())
            stack.pop_back();
        else
            stack.back().f = std::move(sum);
    } else {
        stack.push_back(l);
    }
}

} // namespace

MixedWord word_mul(const MixedWord& w1, const MixedWord& w2) {
    const FieldPtr& F = w1.field();
    require(F->same(*w2.field()), Err::MismatchedContext, "words over different fields");
    Mat2 s = w1.s() * w2.s();
    Mat2 g = w2.s().inverse();
    std::vector<Letter> stack;
    stack.reserve(w1.length() + w2.length());
    for (const auto& l : w1.letters()) push_reduced(stack, conj_letter(l, g));
    for (const auto& l : w2.letters()) push_reduced(stack, l);
    return MixedWord(std::move(s), std::move(stack));
}

MixedWord word_inverse(const MixedWord& w) {
    Mat2 si = w.s().inverse();
    std::vector<Letter> letters;
    letters.reserve(w.length());
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
        letters.push_back(conj_letter(Letter{it->delta, -it->f}, w.s()));
    return MixedWord(std::move(si), std::move(letters));
}

PlaneAut from_mixed_word(const MixedWord& w) {
    PlaneAut acc = PlaneAut::linear(w.s());
    for (const auto& l : w.letters()) acc = acc.compose(PlaneAut::letter(l.delta, l.f));
    return acc;
}

MixedWord to_mixed_word(const PlaneAut& phi, const SubgroupDescriptor* S) {
    const FieldPtr& F = phi.field();
    require(phi.fixes_origin(), Err::OriginNotFixed, "mixed words need phi(0) = 0");
    VdkFactorization fac = factor_vdk(phi);
    RingPtr lr = PlaneAut::letter_ring(F);
    RingPtr ring = phi.ring();
    Polynomial y = Polynomial::variable(ring, 1);

    MixedWord acc = MixedWord::identity(F);
    for (const auto& factor : fac.factors) {
        if (factor.is_affine) {
            acc = word_mul(acc, MixedWord::of_linear(factor.map.linear_part()));
            continue;
        }
        // triangular (x, y + f(x)); split the linear part of f into U(K)
        Polynomial fx = factor.map.q() - y; // polynomial in x only
        Polynomial f(lr);
        Scalar lin = F->zero();
        for (const auto& [m, c] : fx.terms()) {
            if (m[0] == 1 && m[1] == 0) {
                lin = c;
            } else {
                f.add_term({m[0]}, c);
            }
        }
        if (!F->is_zero(lin))
            acc = word_mul(acc, MixedWord::of_linear(
                                    Mat2{F, F->one(), F->zero(), lin, F->one()}));
        if (!f.is_zero())
            acc = word_mul(acc, MixedWord::of_letter(Letter{Direction::d0(F), f}));
    }
    if (S) require(S->contains(acc.s()), Err::LinearPartNotInS,
                   "linear part is outside the declared subgroup");
    return acc;
}

} // namespace autlin
