#include "doctest.h"

#include "autlin/mixedword.hpp"
#include "util.hpp"

using namespace autlin;

namespace {

FieldPtr Q() { return Field::rationals(); }

Polynomial tpow(const FieldPtr& F, std::uint32_t k, std::int64_t c = 1) {
    return Polynomial::monomial(PlaneAut::letter_ring(F), {k}, F->from_int(c));
}

MixedWord rand_word(std::mt19937_64& rng, const FieldPtr& F, int len, int max_letter_deg = 3) {
    using testutil::rand_int;
    std::vector<Direction> dirs = {Direction::d0(F), Direction::dinf(F),
                                   Direction::make(F, F->one(), F->one())};
    std::vector<Letter> letters;
    int prev = -1;
    long degree_budget = 8; // keeps compositions at desk scale
    for (int i = 0; i < len; ++i) {
        int d;
        do {
            d = int(rand_int(rng, 0, long(dirs.size()) - 1));
        } while (d == prev);
        prev = d;
        int top = degree_budget >= 3 ? max_letter_deg : 2;
        Polynomial f(PlaneAut::letter_ring(F));
        do {
            f = Polynomial(PlaneAut::letter_ring(F));
            for (std::uint32_t k = 2; k <= std::uint32_t(top); ++k)
                f.add_term({k}, F->from_int(rand_int(rng, -2, 2)));
        } while (f.is_zero());
        degree_budget /= f.degree();
        letters.push_back({dirs[std::size_t(d)], f});
    }
    // a random SL2 linear part from lower/upper elementary generators
    Mat2 s = Mat2::identity(F);
    for (int i = 0; i < 2; ++i) {
        std::int64_t a = rand_int(rng, -2, 2);
        s = s * Mat2{F, F->one(), F->from_int(a), F->zero(), F->one()};
        std::int64_t b = rand_int(rng, -2, 2);
        s = s * Mat2{F, F->one(), F->zero(), F->from_int(b), F->one()};
    }
    return MixedWord(s, letters);
}

} // namespace

TEST_CASE("letter validation") {
    auto F = Q();
    CHECK_THROWS_AS(MixedWord::of_letter(Letter{Direction::d0(F), tpow(F, 1)}), Error);
    CHECK_THROWS_AS(MixedWord::of_letter(Letter{Direction::d0(F), tpow(F, 0)}), Error);
    CHECK_NOTHROW(MixedWord::of_letter(Letter{Direction::d0(F), tpow(F, 2)}));
    // adjacent equal directions rejected
    CHECK_THROWS_AS(MixedWord(Mat2::identity(F),
                              {Letter{Direction::d0(F), tpow(F, 2)},
                               Letter{Direction::d0(F), tpow(F, 3)}}),
                    Error);
}

TEST_CASE("single letters realize E_delta elements") {
    auto F = Q();
    // (d0, t^2) is (x, y + x^2)
    PlaneAut t = from_mixed_word(MixedWord::of_letter(Letter{Direction::d0(F), tpow(F, 2)}));
    RingPtr r = PlaneAut::plane_ring(F);
    Polynomial x = Polynomial::variable(r, 0), y = Polynomial::variable(r, 1);
    CHECK(t == PlaneAut(x, y + x * x));
    // (dinf, t^2) is (x + y^2, y)
    PlaneAut u = from_mixed_word(MixedWord::of_letter(Letter{Direction::dinf(F), tpow(F, 2)}));
    CHECK(u == PlaneAut(x + y * y, y));
}

TEST_CASE("to_mixed_word on the two-letter example") {
    auto F = Q();
    RingPtr r = PlaneAut::plane_ring(F);
    Polynomial x = Polynomial::variable(r, 0), y = Polynomial::variable(r, 1);
    PlaneAut u1(x, y + x * x);
    PlaneAut u2(x + y * y, y);
    MixedWord w = to_mixed_word(u1.compose(u2));
    CHECK(w.s().is_identity());
    REQUIRE(w.length() == 2);
    CHECK(w.letters()[0] == Letter{Direction::d0(F), tpow(F, 2)});
    CHECK(w.letters()[1] == Letter{Direction::dinf(F), tpow(F, 2)});
    CHECK(from_mixed_word(w) == u1.compose(u2));

    // single elementary
    MixedWord w2 = to_mixed_word(u1);
    CHECK(w2.s().is_identity());
    REQUIRE(w2.length() == 1);
    CHECK(w2.letters()[0] == Letter{Direction::d0(F), tpow(F, 2)});

    CHECK_THROWS_AS((void)to_mixed_word(PlaneAut(x + Polynomial::from_int(r, 1), y)), Error);
}

TEST_CASE("conjugation rescales the letter polynomial") {
    auto F = Q();
    // gamma = diag(1/lambda, lambda) with lambda = 2 sends (d0, t^2) to (d0, lambda^3 t^2)
    Mat2 g{F, F->from_mpq(mpq_class("1/2")), F->zero(), F->zero(), F->from_int(2)};
    Letter l{Direction::d0(F), tpow(F, 2)};
    Letter c = conj_letter(l, g);
    CHECK(c.delta == Direction::d0(F));
    CHECK(c.f == tpow(F, 2, 8));
    // the conjugated letter agrees with the plane-map conjugation
    PlaneAut lhs = from_mixed_word(MixedWord::of_letter(c));
    PlaneAut rhs = PlaneAut::linear(g)
                       .compose(from_mixed_word(MixedWord::of_letter(l)))
                       .compose(PlaneAut::linear(g.inverse()));
    CHECK(lhs == rhs);
}

TEST_CASE("word_mul cancellation") {
    auto F = Q();
    Letter a{Direction::d0(F), tpow(F, 2)};
    Letter na{Direction::d0(F), tpow(F, 2, -1)};
    MixedWord prod = word_mul(MixedWord::of_letter(a), MixedWord::of_letter(na));
    CHECK(prod.is_identity());

    Letter b{Direction::dinf(F), tpow(F, 3)};
    MixedWord two = word_mul(MixedWord::of_letter(a), MixedWord::of_letter(b));
    CHECK(two.length() == 2);
}

TEST_CASE("word_mul agrees with composition") {
    auto F = Q();
    std::mt19937_64 rng(777);
    for (int i = 0; i < 100; ++i) {
        MixedWord w1 = rand_word(rng, F, int(testutil::rand_int(rng, 0, 2)));
        MixedWord w2 = rand_word(rng, F, int(testutil::rand_int(rng, 0, 2)));
        MixedWord prod = word_mul(w1, w2);
        CHECK(from_mixed_word(prod) == from_mixed_word(w1).compose(from_mixed_word(w2)));
        // and against the peeling round trip
        CHECK(to_mixed_word(from_mixed_word(prod)) == prod);
    }
}

TEST_CASE("word degree is multiplicative") {
    auto F = Q();
    std::mt19937_64 rng(888);
    for (int i = 0; i < 30; ++i) {
        MixedWord w = rand_word(rng, F, int(testutil::rand_int(rng, 1, 3)));
        long expect = 1;
        for (const auto& l : w.letters()) expect *= l.f.degree();
        CHECK(w.degree() == expect);
        CHECK(from_mixed_word(w).degree() == expect);
    }
}

TEST_CASE("word inverse") {
    auto F = Q();
    std::mt19937_64 rng(999);
    for (int i = 0; i < 40; ++i) {
        MixedWord w = rand_word(rng, F, int(testutil::rand_int(rng, 0, 6)));
        MixedWord winv = word_inverse(w);
        CHECK(word_mul(w, winv).is_identity());
        CHECK(word_mul(winv, w).is_identity());
    }
}

TEST_CASE("core probe") {
    auto F = Q();
    auto S = SubgroupDescriptor::sl2(F);
    Mat2 id = Mat2::identity(F);
    Mat2 mid = Mat2::of(F, -1, 0, 0, -1);
    Mat2 diag = Mat2{F, F->from_int(2), F->zero(), F->zero(), F->from_mpq(mpq_class("1/2"))};
    auto report = core_probe(S, {id, mid, diag});
    REQUIRE(report.size() == 3);
    CHECK(report[0].kind == CoreProbeEntry::Kind::Identity);
    CHECK(report[1].kind == CoreProbeEntry::Kind::ConjugationWitness);
    // -id conjugates tau = (x, y + x^2) to (x, y - x^2)
    CHECK(report[1].detail.find("-x^2 + y") != std::string::npos);
    CHECK(report[2].kind == CoreProbeEntry::Kind::MovesDirection);
    CHECK(report[2].detail.find("(1;1)") != std::string::npos);

    CHECK_THROWS_AS((void)core_probe(SubgroupDescriptor::trivial(F), {mid}), Error);
}

TEST_CASE("linear part membership check in to_mixed_word") {
    auto F = Q();
    auto S = SubgroupDescriptor::sl2(F);
    RingPtr r = PlaneAut::plane_ring(F);
    Polynomial x = Polynomial::variable(r, 0), y = Polynomial::variable(r, 1);
    PlaneAut sl(x + y, y); // linear part det 1
    CHECK_NOTHROW((void)to_mixed_word(sl, &S));
    PlaneAut notsl(x.scaled(F->from_int(2)), y); // det 2
    CHECK_THROWS_AS((void)to_mixed_word(notsl, &S), Error);
}
