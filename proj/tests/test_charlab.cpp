#include "doctest.h"

#include "autlin/charlab.hpp"

using namespace autlin;

namespace {

RingPtr qt() {
    static RingPtr r = PolyRing::make(Field::rationals(), {"t"});
    return r;
}

Frac fr(const Polynomial& p) { return Frac::of(p); }

LatticeSubgroup t_t1() {
    Polynomial t = Polynomial::variable(qt(), 0);
    return LatticeSubgroup(qt(), {fr(t), fr(t + Polynomial::from_int(qt(), 1))});
}

LatticeSubgroup consts(std::vector<long> vals) {
    std::vector<mpq_class> v;
    for (long x : vals) v.emplace_back(x);
    return LatticeSubgroup::of_rationals(v);
}

} // namespace

TEST_CASE("rank") {
    CHECK(rank(consts({4, 2})) == 1);
    CHECK(rank(consts({2, 3})) == 2);
    CHECK(rank(t_t1()) == 2);
    CHECK(rank(consts({-1})) == 0);
    CHECK(rank(consts({-1, 2})) == 1);
    CHECK(rank(consts({6, 10, 15})) == 3);
    CHECK(rank(consts({1})) == 0);
    // t^2/(t+1) and t/(t+1) and t: multiplicatively dependent
    Polynomial t = Polynomial::variable(qt(), 0), one = Polynomial::from_int(qt(), 1);
    LatticeSubgroup dep(qt(), {Frac::make(t * t, t + one), Frac::make(t, t + one), fr(t)});
    CHECK(rank(dep) == 2);
}

TEST_CASE("trdeg") {
    CHECK(trdeg(consts({2})) == 0);
    CHECK(trdeg(t_t1()) == 1);
    RingPtr r2 = PolyRing::make(Field::rationals(), {"t1", "t2"});
    LatticeSubgroup coords(r2, {fr(Polynomial::variable(r2, 0)), fr(Polynomial::variable(r2, 1))});
    CHECK(trdeg(coords) == 2);
    // t and t^2 generate the same field
    Polynomial t = Polynomial::variable(qt(), 0);
    LatticeSubgroup tt2(qt(), {fr(t), fr(t * t)});
    CHECK(trdeg(tt2) == 1);
}

TEST_CASE("classify") {
    CHECK(classify(consts({2})).result == GoodBad::Bad);
    CHECK(classify(t_t1()).result == GoodBad::Bad);
    Polynomial t = Polynomial::variable(qt(), 0);
    CHECK(classify(LatticeSubgroup(qt(), {fr(t)})).result == GoodBad::Good);
    CHECK(classify(consts({-1})).result == GoodBad::Good);
    CHECK(classify(consts({1})).result == GoodBad::Good);
    // <2 t> is good: rank 1, trdeg 1
    LatticeSubgroup twot(qt(), {fr(t.scaled(Field::rationals()->from_int(2)))});
    CHECK(classify(twot).result == GoodBad::Good);
    // ... but adding t exposes the constant: <2t, t> contains 2
    LatticeSubgroup twot_t(qt(), {fr(t.scaled(Field::rationals()->from_int(2))), fr(t)});
    CHECK(classify(twot_t).result == GoodBad::Bad);
}

TEST_CASE("rank >= trdeg invariant is exercised by classify") {
    // a few shapes; classify asserts internally on every subset
    CHECK_NOTHROW((void)classify(t_t1()));
    CHECK_NOTHROW((void)classify(consts({2, 3, 5})));
}

TEST_CASE("minimally_bad") {
    // <2,3> gives <2> (deterministic first find)
    LatticeSubgroup m = minimally_bad(consts({2, 3}));
    REQUIRE(m.arity() == 1);
    CHECK(m.generators()[0].to_string() == "2");

    // <t, t+1> is already minimally bad
    LatticeSubgroup m2 = minimally_bad(t_t1());
    CHECK(m2.arity() == 2);

    Polynomial t = Polynomial::variable(qt(), 0);
    CHECK_THROWS_AS((void)minimally_bad(LatticeSubgroup(qt(), {fr(t)})), Error);

    // <2t, t>: the bad subset is the pair; saturation extracts a rank-1 piece
    LatticeSubgroup twot_t(qt(), {fr(t.scaled(Field::rationals()->from_int(2))), fr(t)});
    LatticeSubgroup m3 = minimally_bad(twot_t);
    CHECK(rank(m3) == 1 + trdeg(m3));
}

TEST_CASE("relation_gen refuses ideals without a normalized generator") {
    // I_1(<2t, t>) = (x1 - 2 x2): no unit multiple has both a constant term
    // and nonnegative support
    Polynomial t = Polynomial::variable(qt(), 0);
    LatticeSubgroup g(qt(), {fr(t.scaled(Field::rationals()->from_int(2))), fr(t)});
    CHECK_THROWS_AS((void)relation_gen(g, 1), Error);
    // multiplicatively independent constants have no relation at all
    CHECK_THROWS_AS((void)relation_gen(consts({2, 3}), 1), Error);
}

TEST_CASE("relation_gen rank 1") {
    RelationGen p1 = relation_gen(consts({2}), 1);
    // P_1 = 1 - x/2
    CHECK(p1.P.to_string() == "-1/2*x + 1");
    RelationGen p3 = relation_gen(consts({2}), 3);
    CHECK(p3.P.to_string() == "-1/8*x + 1");
}

TEST_CASE("relation_gen rank 2") {
    RelationGen p1 = relation_gen(t_t1(), 1);
    // P_1 = 1 + x1 - x2
    RingPtr xr = p1.P.ring();
    Polynomial x1 = Polynomial::variable(xr, 0), x2 = Polynomial::variable(xr, 1);
    CHECK(p1.P == Polynomial::from_int(xr, 1) + x1 - x2);

    RelationGen p2 = relation_gen(t_t1(), 2);
    // P_2 = x1^2 - 2 x1 x2 + x2^2 - 2 x1 - 2 x2 + 1
    Polynomial expect = x1 * x1 - (x1 * x2).scaled(Field::rationals()->from_int(2)) + x2 * x2 -
                        x1.scaled(Field::rationals()->from_int(2)) -
                        x2.scaled(Field::rationals()->from_int(2)) +
                        Polynomial::from_int(xr, 1);
    // same ring up to instance; compare through strings to dodge pointer identity
    CHECK(p2.P.to_string() == expect.to_string());

    // normalized: constant coefficient 1, nonnegative support
    CHECK(Field::rationals()->is_one(p2.P.coeff({0, 0})));
}

TEST_CASE("relation_gen vanishes at the character point") {
    for (int n : {1, 2, 3, 4}) {
        RelationGen p = relation_gen(t_t1(), n);
        // evaluated at (t^n, (t+1)^n) inside Q(t)
        Polynomial t = Polynomial::variable(qt(), 0);
        Frac l1 = fr(t).pow(n), l2 = fr(t + Polynomial::from_int(qt(), 1)).pow(n);
        const Field& F = *qt()->field;
        Frac acc = Frac::of(Polynomial(qt()));
        for (const auto& [m, c] : p.P.terms()) {
            Frac term = Frac::of(Polynomial::constant(qt(), c));
            if (m[0]) term = term * l1.pow(m[0]);
            if (m[1]) term = term * l2.pow(m[1]);
            acc = acc + term;
        }
        CHECK(acc.is_zero());
    }
}

TEST_CASE("relation generators separate degrees (disjointness witness)") {
    RelationGen p2 = relation_gen(t_t1(), 2);
    RelationGen p3 = relation_gen(t_t1(), 3);
    RelationGen p5 = relation_gen(t_t1(), 5);
    CHECK(p2.P.to_string() != p3.P.to_string());
    CHECK(p3.P.to_string() != p5.P.to_string());
    CHECK(p2.P.to_string() != p5.P.to_string());
}

TEST_CASE("newton data") {
    RelationGen p1 = relation_gen(t_t1(), 1);
    NewtonData nd = newton_data(p1.P);
    // triangle (0,0), (1,0), (0,1)
    REQUIRE(nd.hull.size() == 3);
    CHECK(nd.hull[0] == std::array<long, 2>{0, 0});
    CHECK(nd.hull[1] == std::array<long, 2>{0, 1});
    CHECK(nd.hull[2] == std::array<long, 2>{1, 0});
    CHECK(nd.e == 1);

    NewtonData nd1 = newton_data(relation_gen(consts({2}), 1).P);
    CHECK(nd1.hull.size() == 2);
    CHECK(nd1.e == 1);
}

TEST_CASE("newton scaling") {
    for (int n : {2, 3, 4, 5}) {
        NewtonScalingReport rep = newton_scaling_check(t_t1(), n);
        CHECK(rep.ok);
        CHECK(rep.f_n == 1);
        CHECK(rep.e1 == 1);
        // hull(P_n) = n * hull(P_1): triangle with legs n
        REQUIRE(rep.hulln.hull.size() == 3);
        CHECK(rep.hulln.hull[2] == std::array<long, 2>{long(n), 0});
        CHECK(rep.hulln.hull[1] == std::array<long, 2>{0, long(n)});
    }
    NewtonScalingReport r1 = newton_scaling_check(t_t1(), 1);
    CHECK(r1.ok);
    CHECK(r1.f_n == 1);
}

TEST_CASE("newton scaling on squared and rescaled generators") {
    Polynomial t = Polynomial::variable(qt(), 0), one = Polynomial::from_int(qt(), 1);
    // <t^2, (t+1)^2>: e(P_1) = 2, scaling still holds with f_n = 1
    LatticeSubgroup sq(qt(), {fr(t * t), fr((t + one) * (t + one))});
    CHECK(classify(sq).result == GoodBad::Bad);
    NewtonData nd1 = newton_data(relation_gen(sq, 1).P);
    CHECK(nd1.e == 2);
    for (int n : {2, 3}) {
        NewtonScalingReport rep = newton_scaling_check(sq, n);
        CHECK(rep.ok);
        CHECK(rep.f_n == 1);
    }
    // <2t, 3t+3>: non-monic generators
    LatticeSubgroup resc(qt(), {fr(t.scaled(Field::rationals()->from_int(2))),
                                fr((t + one).scaled(Field::rationals()->from_int(3)))});
    for (int n : {2, 3}) {
        NewtonScalingReport rep = newton_scaling_check(resc, n);
        CHECK(rep.ok);
        REQUIRE(rep.hulln.hull.size() == 3);
        CHECK(rep.hulln.hull[2] == std::array<long, 2>{long(n), 0});
    }
}

TEST_CASE("d_divisors") {
    CHECK(d_divisors(consts({-1, 2})) == 2);
    CHECK(d_divisors(consts({2})) == 1);
    Polynomial t = Polynomial::variable(qt(), 0);
    CHECK(d_divisors(LatticeSubgroup(qt(), {fr(t)})) == 1);
    CHECK(d_divisors(consts({-2})) == 1);    // (-2)^k never hits -1
    CHECK(d_divisors(consts({-2, 2})) == 2); // (-2)/2 = -1
    // 4^a (-8)^b = -1 needs 2a+3b = 0 and b odd: impossible
    CHECK(d_divisors(consts({4, -8})) == 1);
    CHECK(d_divisors(consts({-4, 2})) == 2); // (-4)/2^2 = -1
    CHECK(d_divisors(consts({4, 8})) == 1);
    // needs the integer kernel lattice, not a scaled rational basis:
    // (-2)^3 / 8 = -1 comes from the primitive kernel vector (3, -1)
    CHECK(d_divisors(consts({-2, 8})) == 2);
    CHECK(d_divisors(LatticeSubgroup(qt(), {fr(-t), fr(t)})) == 2);
}

TEST_CASE("verdict catalog") {
    auto Q = Field::rationals();
    // SL(2,Q): nonlinear even over a ring, witness <2>
    Verdict v1 = verdict(SubgroupDescriptor::sl2(Q));
    CHECK(v1.result == Verdict::Result::NonlinearEvenOverRing);
    REQUIRE(v1.witnesses.size() >= 2);
    CHECK(v1.witnesses[1].classification == "Bad");
    CHECK(v1.witnesses[1].rank == 1);
    CHECK(v1.witnesses[1].trdeg == 0);

    // SO(x^2 + y^2): anisotropic over Q -> linear over a field
    Verdict v2 = verdict(SubgroupDescriptor::so(Q, Q->one(), Q->zero(), Q->one()));
    CHECK(v2.result == Verdict::Result::LinearOverField);

    // SO(xy): split -> nonlinear
    Verdict v3 = verdict(SubgroupDescriptor::so(Q, Q->zero(), Q->one(), Q->zero()));
    CHECK(v3.result == Verdict::Result::NonlinearEvenOverRing);

    // SO(x^2 - 2 y^2): anisotropic over Q (disc 8 is not a square)
    Verdict v4 = verdict(SubgroupDescriptor::so(Q, Q->one(), Q->zero(), Q->from_int(-2)));
    CHECK(v4.result == Verdict::Result::LinearOverField);

    // trivial and U
    CHECK(verdict(SubgroupDescriptor::trivial(Q)).result == Verdict::Result::LinearOverField);
    CHECK(verdict(SubgroupDescriptor::u(Q)).result == Verdict::Result::LinearOverField);
    CHECK(verdict(SubgroupDescriptor::b(Q)).result == Verdict::Result::NonlinearEvenOverRing);
    CHECK(verdict(SubgroupDescriptor::plus_minus_id(Q)).result ==
          Verdict::Result::LinearOverField);

    // diagonal cyclic: <diag(2, 1/2)> bad, <diag(t, 1/t)> good torsion-free
    Verdict v5 = verdict(SubgroupDescriptor::diagonal_cyclic(Q, Q->from_int(2)));
    CHECK(v5.result == Verdict::Result::NonlinearEvenOverRing);
    auto Qt = Field::rational_functions(Field::rationals(), {"t"});
    Verdict v6 = verdict(SubgroupDescriptor::diagonal_cyclic(Qt, Qt->param("t")));
    CHECK(v6.result == Verdict::Result::LinearOverField);
    CHECK(v6.rule.find("first-linearity") != std::string::npos);

    // SL(2, Q(t)): bad witness <t, t+1>
    Verdict v7 = verdict(SubgroupDescriptor::sl2(Qt));
    CHECK(v7.result == Verdict::Result::NonlinearEvenOverRing);
    CHECK(v7.witnesses[1].rank == 2);
    CHECK(v7.witnesses[1].trdeg == 1);

    // finite list: rotation of order 4
    Verdict v8 = verdict(SubgroupDescriptor::finite_list(Q, {Mat2::of(Q, 0, -1, 1, 0)}));
    CHECK(v8.result == Verdict::Result::LinearOverField);

    // ring subgroup: honest Unknown
    Verdict v9 = verdict(SubgroupDescriptor::ring_sl2(Q, "O[x,1/x,t]"));
    CHECK(v9.result == Verdict::Result::Unknown);

    // JSON comes out parseable-ish
    std::string js = v1.to_json();
    CHECK(js.find("\"result\":\"NonlinearEvenOverRing\"") != std::string::npos);
    CHECK(js.find("\"schema\":\"autlin.v1\"") != std::string::npos);
}
