#include "doctest.h"

#include "autlin/planeaut.hpp"
#include "util.hpp"

using namespace autlin;

namespace {

FieldPtr Q() { return Field::rationals(); }

PlaneAut from_xy(std::function<std::pair<Polynomial, Polynomial>(Polynomial, Polynomial)> build) {
    RingPtr r = PlaneAut::plane_ring(Q());
    auto [p, q] = build(Polynomial::variable(r, 0), Polynomial::variable(r, 1));
    return PlaneAut(std::move(p), std::move(q));
}

PlaneAut S_map() { // (y, 2x)
    return from_xy([](Polynomial x, Polynomial y) {
        return std::pair{y, x.scaled(Q()->from_int(2))};
    });
}
PlaneAut T_map() { // (x, y + x^2)
    return from_xy([](Polynomial x, Polynomial y) { return std::pair{x, y + x * x}; });
}

// random product of <= max_factors elementary/affine factors with small coefficients
PlaneAut random_tame(std::mt19937_64& rng, const FieldPtr& F, int max_factors,
                     std::int64_t height = 3) {
    using testutil::rand_int;
    PlaneAut acc = PlaneAut::identity(F);
    int n = int(rand_int(rng, 1, max_factors));
    RingPtr lr = PlaneAut::letter_ring(F);
    for (int i = 0; i < n; ++i) {
        if (rand_int(rng, 0, 1)) {
            // invertible affine map
            Mat2 m = Mat2::identity(F);
            do {
                m = Mat2{F, testutil::rand_scalar(rng, F, height),
                         testutil::rand_scalar(rng, F, height),
                         testutil::rand_scalar(rng, F, height),
                         testutil::rand_scalar(rng, F, height)};
            } while (F->is_zero(m.det()));
            acc = acc.compose(PlaneAut::affine(m, testutil::rand_scalar(rng, F, height),
                                               testutil::rand_scalar(rng, F, height)));
        } else {
            Polynomial f(lr);
            int deg = int(rand_int(rng, 2, 3));
            for (int k = 1; k <= deg; ++k)
                f.add_term({std::uint32_t(k)}, testutil::rand_scalar(rng, F, height));
            if (f.is_zero()) f = Polynomial::monomial(lr, {2}, F->one());
            acc = acc.compose(PlaneAut::triangular(F, f));
        }
    }
    return acc;
}

} // namespace

TEST_CASE("compose applies the right factor first") {
    // T o S with S = (y,2x), T = (x, y+x^2) -> (y, 2x + y^2)
    PlaneAut ts = T_map().compose(S_map());
    PlaneAut expect = from_xy([](Polynomial x, Polynomial y) {
        return std::pair{y, x.scaled(Q()->from_int(2)) + y * y};
    });
    CHECK(ts == expect);

    CHECK(PlaneAut::identity(Q()).compose(T_map()) == T_map());
    CHECK(T_map().compose(PlaneAut::identity(Q())) == T_map());
}

TEST_CASE("composition degree multiplies for reduced shapes") {
    // u1 = (x, y+x^2), u2 = (x+y^2, y): u1 o u2 = (x+y^2, y+(x+y^2)^2), degree 4
    PlaneAut u1 = T_map();
    PlaneAut u2 = from_xy([](Polynomial x, Polynomial y) { return std::pair{x + y * y, y}; });
    PlaneAut u = u1.compose(u2);
    CHECK(u.degree() == 4);
    PlaneAut expect = from_xy([](Polynomial x, Polynomial y) {
        Polynomial s = x + y * y;
        return std::pair{s, y + s * s};
    });
    CHECK(u == expect);
}

TEST_CASE("jacobian multiplies under composition") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 10; ++i) {
        PlaneAut a = random_tame(rng, Q(), 3);
        PlaneAut b = random_tame(rng, Q(), 3);
        auto ja = a.jacobian_constant(), jb = b.jacobian_constant();
        auto jc = a.compose(b).jacobian_constant();
        REQUIRE(ja.has_value());
        REQUIRE(jb.has_value());
        REQUIRE(jc.has_value());
        CHECK(Q()->eq(*jc, Q()->mul(*ja, *jb)));
    }
}

TEST_CASE("factor_vdk on the book example") {
    // (y, x+y^2) = [elem (x, y+x^2)] o [affine swap (y,x)]
    PlaneAut phi = from_xy([](Polynomial x, Polynomial y) { return std::pair{y, x + y * y}; });
    VdkFactorization fac = factor_vdk(phi);
    REQUIRE(fac.factors.size() == 2);
    CHECK(!fac.factors[0].is_affine);
    CHECK(fac.factors[0].map == T_map());
    CHECK(fac.factors[1].is_affine);
    CHECK(fac.factors[1].map == PlaneAut::linear(Mat2::of(Q(), 0, 1, 1, 0)));
    CHECK(fac.recompose(Q()) == phi);
}

TEST_CASE("factor_vdk of an affine map is a single affine factor") {
    PlaneAut aff = PlaneAut::affine(Mat2::of(Q(), 1, 2, 1, 3), Q()->from_int(1), Q()->from_int(-2));
    VdkFactorization fac = factor_vdk(aff);
    REQUIRE(fac.factors.size() == 1);
    CHECK(fac.factors[0].is_affine);
    CHECK(fac.recompose(Q()) == aff);
}

TEST_CASE("factor_vdk rejects non-automorphisms") {
    PlaneAut bad = from_xy([](Polynomial x, Polynomial y) { return std::pair{x, x * y}; });
    CHECK_THROWS_WITH_AS((void)factor_vdk(bad), doctest::Contains("jacobian"), Error);
}

TEST_CASE("factor_vdk round trip, 500 cases over Q and over F5") {
    for (FieldPtr F : {Field::rationals(), Field::prime(5)}) {
        std::mt19937_64 rng(31337);
        for (int i = 0; i < 500; ++i) {
            PlaneAut phi = random_tame(rng, F, 6);
            VdkFactorization fac = factor_vdk(phi);
            CHECK(fac.recompose(F) == phi);
            for (std::size_t j = 0; j + 1 < fac.factors.size(); ++j)
                CHECK(fac.factors[j].is_affine != fac.factors[j + 1].is_affine);
            long prod = 1;
            for (const auto& f : fac.factors)
                if (!f.is_affine) prod *= f.map.degree();
            CHECK(prod == phi.degree());
        }
    }
}

TEST_CASE("factor_vdk over Q(z)") {
    auto Qz = Field::rational_functions(Field::rationals(), {"z"});
    Scalar z = Qz->param("z");
    RingPtr r = PlaneAut::plane_ring(Qz);
    Polynomial x = Polynomial::variable(r, 0), y = Polynomial::variable(r, 1);
    // phi = (x, y + z x^2) o (x + z^2 y^2, y), coefficients in Q(z)
    PlaneAut a(x, y + (x * x).scaled(z));
    PlaneAut b(x + (y * y).scaled(Qz->mul(z, z)), y);
    PlaneAut phi = a.compose(b);
    VdkFactorization fac = factor_vdk(phi);
    CHECK(fac.recompose(Qz) == phi);
    CHECK(invert(phi).compose(phi) == PlaneAut::identity(Qz));
}

TEST_CASE("invert") {
    // (x+y^2, y) -> (x-y^2, y)
    PlaneAut e = from_xy([](Polynomial x, Polynomial y) { return std::pair{x + y * y, y}; });
    PlaneAut einv = invert(e);
    PlaneAut expect = from_xy([](Polynomial x, Polynomial y) { return std::pair{x - y * y, y}; });
    CHECK(einv == expect);

    // (y, 2x) -> (y/2, x)
    PlaneAut s = S_map();
    PlaneAut sinv = invert(s);
    PlaneAut expect2 = from_xy([](Polynomial x, Polynomial y) {
        return std::pair{y.scaled(Q()->from_mpq(mpq_class("1/2"))), x};
    });
    CHECK(sinv == expect2);

    std::mt19937_64 rng(5150);
    for (int i = 0; i < 20; ++i) {
        PlaneAut a = random_tame(rng, Q(), 3, 2);
        PlaneAut b = random_tame(rng, Q(), 3, 2);
        // invert(a o b) = invert(b) o invert(a), and both sides invert the product
        PlaneAut ab = a.compose(b);
        PlaneAut left = invert(ab);
        PlaneAut right = invert(b).compose(invert(a));
        CHECK(left == right);
        CHECK(ab.compose(left) == PlaneAut::identity(Q()));
        CHECK(left.compose(ab) == PlaneAut::identity(Q()));
    }
}

TEST_CASE("Baumslag-Solitar relation S^-2 T S^2 = T^2 exactly") {
    PlaneAut s = S_map(), t = T_map();
    PlaneAut s2 = s.compose(s);
    PlaneAut sinv2 = invert(s2);
    PlaneAut lhs = sinv2.compose(t).compose(s2);
    PlaneAut rhs = t.compose(t);
    CHECK(lhs == rhs);
}
