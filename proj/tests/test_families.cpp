#include <random>

#include "pdyn/families.hpp"
#include "support.hpp"

using namespace pdyn;
using testing_support::P;

namespace {

PlaneEndo E(const std::string& a, const std::string& b) { return make_endo(P(a), P(b)); }

MPoly compose_x(const MPoly& outer, const MPoly& inner) { return substitute(outer, {{"x", inner}}); }

MPoly monic_cheb_oracle(int d) {
    // Coefficient of x^(d-2j) in T~_d is (-1)^j d/(d-j) binom(d-j, j)
    MPoly out;
    for (int j = 0; 2 * j <= d; ++j) {
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), d - j, j);
        Rational c(b * d, d - j);
        c.canonicalize();
        if (j % 2) c = -c;
        out += MPoly(c) * MPoly::var("x").pow(d - 2 * j);
    }
    return out;
}

}  // namespace

TEST_SUITE("families") {
    TEST_CASE("chebyshev polynomials") {
        CHECK(chebyshev(1, ChebyshevKind::Monic) == P("x"));
        CHECK(chebyshev(3, ChebyshevKind::Monic) == P("x^3-3*x"));
        CHECK(chebyshev(3, ChebyshevKind::Classical) == P("4*x^3-3*x"));
        for (int d = 1; d <= 12; ++d) {
            CHECK(chebyshev(d, ChebyshevKind::Monic) == monic_cheb_oracle(d));
            // T~_d(x) = 2 T_d(x/2)
            MPoly half = substitute(chebyshev(d, ChebyshevKind::Classical), {{"x", P("1/2*x")}});
            CHECK(chebyshev(d, ChebyshevKind::Monic) == half.scaled(Coefficient(2)));
            // T_d(1) = 1 and parity
            CHECK(substitute(chebyshev(d, ChebyshevKind::Classical), {{"x", MPoly(1)}}) == MPoly(1));
            MPoly neg = substitute(chebyshev(d, ChebyshevKind::Classical), {{"x", P("-x")}});
            CHECK(neg == chebyshev(d, ChebyshevKind::Classical).scaled(Coefficient(d % 2 ? -1 : 1)));
        }
    }

    TEST_CASE("chebyshev semigroup and Pell identity") {
        for (int m = 2; m <= 8; ++m)
            for (int n = 2; n <= 8; ++n)
                CHECK(compose_x(chebyshev(m, ChebyshevKind::Monic), chebyshev(n, ChebyshevKind::Monic)) ==
                      chebyshev(m * n, ChebyshevKind::Monic));
        for (int d = 2; d <= 8; ++d) {
            MPoly t = chebyshev(d, ChebyshevKind::Monic);
            MPoly v = t.derivative("x").scaled(Coefficient(Rational(1, d)));
            for (const auto& [e, c] : v.terms()) CHECK(c.rational().get_den() == 1);
            CHECK(t * t - MPoly(4) == P("x^2-4") * v * v);
        }
    }

    TEST_CASE("example 1") {
        auto [a, b] = ex1({3, 2, Coefficient(-1), 1, 1});
        CHECK(a == E("z1^3", "4*z2^3-3*z2"));
        CHECK(b == E("-z1^2", "2*z2^2-1"));
        CHECK(commutes(a, b));
        CHECK_NOTHROW(ex1({2, 3, Coefficient(1), 1, 1}));
        CHECK_THROWS_AS(ex1({2, 3, Coefficient(-1), 1, 1}), NotCommuting);
        CHECK_THROWS_AS(ex1({3, 2, Coefficient(1), -1, 1}), NotCommuting);
        CHECK_NOTHROW(ex1({2, 3, Coefficient(1), -1, 1}));
        CHECK_NOTHROW(ex1({3, 3, Coefficient(1), -1, -1}));
        CHECK_NOTHROW(ex1({3, 2, Coefficient::zeta(4, 1).pow(2), 1, 1}));
        CHECK_NOTHROW(ex1({4, 2, Coefficient::zeta(3, 1), 1, 1}));
        CHECK_THROWS_AS(ex1({2, 2, Coefficient(0), 1, 1}), PreconditionViolated);
    }

    TEST_CASE("sign rule matches direct commutation") {
        for (int d1 = 1; d1 <= 5; ++d1)
            for (int d2 = 1; d2 <= 5; ++d2)
                for (int s1 : {1, -1})
                    for (int s2 : {1, -1}) {
                        MPoly a = chebyshev(d1, ChebyshevKind::Classical).scaled(Coefficient(s1));
                        MPoly b = chebyshev(d2, ChebyshevKind::Classical).scaled(Coefficient(s2));
                        CHECK(chebyshev_signs_compatible(d1, s1, d2, s2) == (compose_x(a, b) == compose_x(b, a)));
                    }
    }

    TEST_CASE("example 2") {
        CHECK(ex2({2, Ex2Variant::Straight, 1, 1}) == E("2*z1^2-1", "2*z2^2-1"));
        CHECK(ex2({3, Ex2Variant::Swap, 1, 1}) == E("4*z2^3-3*z2", "4*z1^3-3*z1"));
        CHECK(commutes(ex2({2, Ex2Variant::Straight, 1, 1}), ex2({3, Ex2Variant::Swap, 1, 1})));
        CHECK(commutes(ex2({3, Ex2Variant::Swap, -1, -1}), ex2({5, Ex2Variant::Straight, -1, -1})));
        CHECK_FALSE(commutes(ex2({3, Ex2Variant::Swap, -1, -1}), ex2({5, Ex2Variant::Straight, 1, -1})));
    }

    TEST_CASE("example 3 lifts") {
        auto r2 = make_ratmap(P("s^2"), P("t^2"));
        auto r3 = make_ratmap(P("s^3"), P("t^3"));
        auto a = ex3_lift(r2, r3, Coefficient(1), Coefficient(1));
        CHECK(a.f1 == E("z1^2", "z2^2"));
        CHECK(a.f2 == E("z1^3", "z2^3"));
        CHECK(a.c == Coefficient(1));
        auto b = ex3_lift(r3, r3, Coefficient(-1), Coefficient(1));
        CHECK(b.f1 == E("-z1^3", "-z2^3"));
        CHECK(commutes(b.f1, b.f2));
        auto curve = make_curve(Coefficient(-1), Coefficient(0));
        auto l = ex3_lift(elliptic_lattes(curve, 2), elliptic_lattes(curve, 3), std::nullopt, std::nullopt, 4);
        CHECK(l.f1.degree == 4);
        CHECK(l.f2.degree == 9);
        CHECK(commutes(l.f1, l.f2));
        CHECK(l.lambda1.pow(8) == l.c * l.lambda2.pow(3));
        CHECK_THROWS_AS(ex3_lift(r2, make_ratmap(P("t^2"), P("s^2+t^2"))), NotCommuting);
        // c = 2 has no square root over Q; swapped, c = 1/2 is a first power
        auto s2 = make_ratmap(P("s^2"), P("t^2"));
        auto s3 = make_ratmap(P("2*s^3"), P("2*t^3"));
        CHECK_THROWS_AS(ex3_lift(s2, s3), ScalarNotSolvable);
        CHECK(ex3_lift(s3, s2).lambda1 == Coefficient(Rational(1, 2)));
    }

    TEST_CASE("symmetric reduction") {
        CHECK(sym_reduce(P("x^2+y^2")) == P("e1^2-2*e2"));
        CHECK(sym_reduce(P("x^3+y^3")) == P("e1^3-3*e1*e2"));
        CHECK(sym_reduce(P("x*y")) == P("e2"));
        CHECK_THROWS_AS(sym_reduce(P("x^2+y")), NotSymmetric);
        std::mt19937 g(5);
        for (int k = 0; k < 30; ++k) {
            MPoly u = testing_support::random_poly(g, {"e1", "e2"}, 4, 4);
            MPoly s = substitute(u, {{"e1", P("x+y")}, {"e2", P("x*y")}});
            CHECK(sym_reduce(s) == u);
        }
    }

    TEST_CASE("example 4 descent") {
        CHECK(ex4_descend(P("x")) == identity_endo());
        CHECK(ex4_descend(P("x^2")) == E("z1^2-2*z2", "z2^2"));
        CHECK(ex4_descend(P("x^2-2")) == E("z1^2-2*z2-4", "z2^2-2*z1^2+4*z2+4"));
        std::map<std::string, MPoly> pi{{"z1", P("x+y")}, {"z2", P("x*y")}};
        for (const char* h : {"x^2", "x^3", "x^2-2", "x^3-3*x", "x^4-4*x^2+2", "x^3+x-1"}) {
            auto f = ex4_descend(P(h));
            MPoly hx = P(h), hy = P(h).rename({{"x", "y"}});
            CHECK(substitute(f.comp1, pi) == hx + hy);
            CHECK(substitute(f.comp2, pi) == hx * hy);
            CHECK(extends_to_p2(f));
        }
        for (int a = 1; a <= 5; ++a)
            for (int b = 1; b <= 5; ++b) {
                CHECK(commutes(ex4_descend(MPoly::var("x").pow(a)), ex4_descend(MPoly::var("x").pow(b))));
                CHECK(commutes(ex4_descend(chebyshev(a, ChebyshevKind::Monic)), ex4_descend(chebyshev(b, ChebyshevKind::Monic))));
            }
    }

    TEST_CASE("lattes construction") {
        auto c = make_curve(Coefficient(-1), Coefficient(0));
        CHECK(projectively_equal(elliptic_lattes(c, 1), identity_map1()));
        CHECK(projectively_equal(elliptic_lattes(c, 2), ratmap_from_fraction(P("x^4+2*x^2+1"), P("4*x^3-4*x"))));
        CHECK(elliptic_lattes(c, 3).degree == 9);
        CHECK(elliptic_lattes(make_curve(Coefficient(1), Coefficient(1)), 3).degree == 9);
        CHECK(elliptic_lattes(make_curve(Coefficient(1), Coefficient(1)), 4).degree == 16);
        CHECK_THROWS_AS(make_curve(Coefficient(0), Coefficient(0)), SingularCurve);
        // general duplication formula ((x^2-a)^2 - 8bx) / (4(x^3+ax+b))
        auto c2 = make_curve(Coefficient(2), Coefficient(3));
        CHECK(projectively_equal(elliptic_lattes(c2, 2), ratmap_from_fraction(P("(x^2-2)^2-24*x"), P("4*(x^3+2*x+3)"))));
        // multiplication maps compose like integers
        CHECK(projectively_equal(compose1(elliptic_lattes(c2, 2), elliptic_lattes(c2, 2)), elliptic_lattes(c2, 4)));
    }

    TEST_CASE("two-torsion orbifolds") {
        auto o = two_torsion_orbifold(make_curve(Coefficient(-1), Coefficient(0)));
        REQUIRE(o.marked.size() == 4);
        for (int k : {0, 1, -1}) CHECK(o.weight_of(PPoint::affine(Coefficient(k))) == 2);
        CHECK(o.weight_of(PPoint::infinity()) == 2);
        auto o2 = two_torsion_orbifold(make_curve(Coefficient(-4), Coefficient(0)));
        for (int k : {0, 2, -2}) CHECK(o2.is_marked(PPoint::affine(Coefficient(k))));
        CHECK_THROWS_AS(two_torsion_orbifold(make_curve(Coefficient(1), Coefficient(1))), NotSplit);
        for (auto ab : {std::pair{-1, 0}, std::pair{-4, 0}, std::pair{-7, 6}}) {
            auto c = make_curve(Coefficient(ab.first), Coefficient(ab.second));
            auto t = two_torsion_orbifold(c);
            auto m2 = elliptic_lattes(c, 2), m3 = elliptic_lattes(c, 3);
            CHECK(commutes1(m2, m3));
            CHECK(is_orbifold_selfcover(m2, t));
            CHECK(is_orbifold_selfcover(m3, t));
        }
    }

    TEST_CASE("tags construct commuting pairs") {
        FamilyTag t1;
        t1.kind = FamilyKind::Ex1;
        t1.ex1 = {3, 2, Coefficient(-1), 1, 1};
        FamilyTag t2;
        t2.kind = FamilyKind::Ex2;
        t2.ex2_first = {2, Ex2Variant::Straight, 1, 1};
        t2.ex2_second = {3, Ex2Variant::Swap, 1, 1};
        FamilyTag t3;
        t3.kind = FamilyKind::Ex3;
        t3.r1 = make_ratmap(P("s^2"), P("t^2-2*s^2"));
        t3.r2 = make_ratmap(P("s^3"), P("t^3-3*s^2*t"));
        FamilyTag t4;
        t4.kind = FamilyKind::Ex4;
        t4.h1 = P("x^2");
        t4.h2 = P("x^3");
        for (const auto& t : {t1, t2, t3, t4}) {
            auto [a, b] = construct(t);
            CHECK(commutes(a, b));
            CHECK(extends_to_p2(a));
            CHECK(extends_to_p2(b));
            CHECK_FALSE(t.describe().empty());
        }
        CHECK(to_string(FamilyKind::Ex3) == "Ex3");
    }
}
