#include <random>

#include "pdyn/families.hpp"
#include "pdyn/local.hpp"
#include "support.hpp"

using namespace pdyn;
using testing_support::P;

namespace {

PlaneEndo E(const std::string& a, const std::string& b) { return make_endo(P(a), P(b)); }

LocalFrame at0(const PlaneEndo& f) { return local_frame(f); }

// random terms z1^i z2^j strictly above the segment joining (a, 0) and (0, b)
MPoly above_segment(std::mt19937& g, int a, int b, int count) {
    MPoly out;
    std::uniform_int_distribution<int> ei(0, a), ej(0, b), c(-3, 3);
    for (int k = 0; k < count; ++k) {
        int i = ei(g), j = ej(g);
        if (Rational(i, a) + Rational(j, b) <= 1) continue;
        out += MPoly(c(g)) * MPoly::monomial(Coefficient(1), {{"z1", i}, {"z2", j}});
    }
    return out;
}

}  // namespace

TEST_SUITE("local") {
    TEST_CASE("intersection multiplicities") {
        CHECK(intersection_mult(P("z2-z1^2"), P("z2")) == 2);
        CHECK(intersection_mult(P("z1"), P("z2")) == 1);
        CHECK(intersection_mult(P("z1^2-4*z2"), P("z1")) == 1);
        CHECK(intersection_mult(P("z1-1"), P("z2")) == 0);
        CHECK(intersection_mult(P("z1^2-z2^3"), P("z1")) == 3);
        CHECK(intersection_mult(P("z1^3"), P("z2^2")) == 6);
        // a common component away from the origin is ignored
        CHECK(intersection_mult(P("(z2-1)*z1"), P("(z2-1)*z2")) == 1);
        CHECK_THROWS_AS(intersection_mult(P("z1*z2"), P("z1")), NotIsolated);
        // the cusp and its tangent line
        CHECK(intersection_mult(P("z2^2-z1^3"), P("z2")) == 3);
        CHECK(intersection_mult(P("z2^2-z1^3"), P("z1")) == 2);
    }

    TEST_CASE("shear invariance") {
        std::mt19937 g(21);
        int tested = 0;
        while (tested < 50) {
            MPoly a = testing_support::random_poly(g, {"z1", "z2"}, 3, 3);
            MPoly b = testing_support::random_poly(g, {"z1", "z2"}, 3, 3);
            a = a.homogeneous_part(2) + a.homogeneous_part(3) + P("z1");
            b = b.homogeneous_part(2) + b.homogeneous_part(3) + P("z2");
            int v0 = intersection_mult_with_shear(a, b, 0).first;
            CHECK(v0 == 1);
            CHECK(intersection_mult_with_shear(a, b, 1).first == v0);
            CHECK(intersection_mult_with_shear(a, b, 2).first == v0);
            ++tested;
        }
        // tangent pairs as well
        for (int k = 0; k < 20; ++k) {
            MPoly a = P("z2") + above_segment(g, 2, 1, 3) + P("z1^2");
            MPoly b = P("z2") + above_segment(g, 3, 1, 3) + P("z1^3");
            auto v = intersection_mult_with_shear(a, b, 0).first;
            CHECK(intersection_mult_with_shear(a, b, 1).first == v);
            CHECK(intersection_mult_with_shear(a, b, 2).first == v);
        }
    }

    TEST_CASE("local degree") {
        CHECK(local_degree(at0(E("z1^2", "z2^3"))) == 6);
        CHECK(local_degree(at0(E("z1^2-2*z2", "z2^2"))) == 4);
        CHECK(local_degree(at0(identity_endo())) == 1);
        // at a noncritical point the local degree is 1
        CHECK(local_degree(local_frame(E("z1^2-2*z2", "z2^2"), Coefficient(1), Coefficient(1))) == 1);
        CHECK(local_degree(local_frame(E("z1^2", "z2^3"), Coefficient(0), Coefficient(2))) == 2);
    }

    TEST_CASE("local degree is multiplicative") {
        std::mt19937 g(9);
        for (int k = 0; k < 20; ++k) {
            std::uniform_int_distribution<int> deg(1, 2);
            int a = deg(g), b = deg(g), c = deg(g), e = deg(g);
            PlaneEndo f = make_endo(MPoly::var("z1").pow(a) + above_segment(g, a, b, 3), MPoly::var("z2").pow(b) + above_segment(g, a, b, 3));
            PlaneEndo h = make_endo(MPoly::var("z1").pow(c) + above_segment(g, c, e, 3), MPoly::var("z2").pow(e) + above_segment(g, c, e, 3));
            int lf = local_degree(at0(f)), lh = local_degree(at0(h));
            CHECK(lf == a * b);
            CHECK(lh == c * e);
            CHECK(local_degree(at0(compose(f, h))) == lf * lh);
        }
    }

    TEST_CASE("first multiplicity lemma") {
        auto r1 = lemma3_sides(E("z1^2", "z2^2"));
        CHECK(r1.left == 1);
        CHECK(r1.right == 1);
        auto r2 = lemma3_sides(E("z1^2", "z2^3"));
        CHECK(r2.left == 2);
        CHECK(r2.right == 2);
        CHECK(verify_lemma3(E("z1^2", "z2^2-z1")));
        CHECK(verify_lemma3(E("z1^3+z1^3*z2", "z2^4-z1*z2+z1^2")));
        CHECK(verify_lemma3(E("z1^2*(1+z1+z2)", "z2^3+z1*z2^5-z1")));
        CHECK_THROWS_AS(verify_lemma3(E("z1^2-z2", "z2^2")), ShapeMismatch);
        CHECK_THROWS_AS(verify_lemma3(E("z1^2", "z1")), ShapeMismatch);
    }

    TEST_CASE("second multiplicity lemma") {
        auto r1 = lemma4_sides(E("z1^2", "z2^2"), P("z2"));
        CHECK(r1.left == 4);
        CHECK(r1.right == 4);
        auto r2 = lemma4_sides(E("z1^2", "z2^3"), P("z2"));
        CHECK(r2.left == 6);
        CHECK(r2.right == 6);
        CHECK(verify_lemma4(E("z1^2-2*z2", "z2^2"), P("z2")));
        CHECK(verify_lemma4(E("z1^3", "z2^2-z1"), P("z2-z1")));
        CHECK(verify_lemma4(E("z1^2*(1+z2)", "z2^3+z1*z2"), P("z2+z1^2")));
        CHECK_THROWS_AS(verify_lemma4(E("z1^2", "z2^2"), P("z1")), ShapeMismatch);
        CHECK_THROWS_AS(verify_lemma4(E("z1^2", "z2^2"), P("z2-1")), ShapeMismatch);
    }

    TEST_CASE("newton exponents") {
        CHECK(d_alpha(P("y^2+x"), Rational(1)) == 1);
        CHECK(d_alpha(P("y^2+x"), Rational(3)) == 2);
        CHECK(d_alpha(P("y^5"), Rational(7, 3)) == 5);
        CHECK(quasi_part(P("y^2+x+x^2"), Rational(2)) == P("y^2+x"));
        CHECK(quasi_part(P("y^2+x*y"), Rational(1)) == P("y^2+x*y"));
        CHECK(quasi_part(P("3*x^2*y"), Rational(5)) == P("3*x^2*y"));
        CHECK(alpha_exponent(P("y^2+x")) == 2);
        CHECK(alpha_exponent(P("y^2+x*y")) == 1);
        CHECK(alpha_exponent(P("y^3+x*y")) == 2);
        CHECK(alpha_exponent(P("y^4+x*y+x^3")) == 3);
        CHECK_THROWS_AS(alpha_exponent(P("y^2+y+x")), ShapeMismatch);
        auto nd = newton_data(P("y^3+x*y+x^2"));
        CHECK(nd.d == 3);
        CHECK(nd.support.size() == 3);
    }

    TEST_CASE("newton function properties") {
        std::mt19937 g(4);
        for (int k = 0; k < 40; ++k) {
            MPoly h = testing_support::random_poly(g, {"x", "y"}, 5, 5) + P("y^6");
            std::uniform_int_distribution<int> n(0, 12), den(1, 4);
            Rational a1(n(g), den(g)), a3(n(g) + 13, den(g));
            a1.canonicalize();
            a3.canonicalize();
            Rational t(1, 3);
            Rational a2 = a1 + (a3 - a1) * t;
            CHECK(d_alpha(h, a2) >= d_alpha(h, a1) * (1 - t) + d_alpha(h, a3) * t);
            MPoly q = quasi_part(h, a2);
            Rational m = d_alpha(h, a2);
            // the quasi part is exactly the set of terms attaining the minimum
            for (const auto& [e, c] : h.terms()) {
                unsigned i = 0, j = 0;
                for (std::size_t v = 0; v < h.vars().size(); ++v) {
                    if (h.vars()[v] == "x") i = e[v];
                    if (h.vars()[v] == "y") j = e[v];
                }
                bool attains = a2 * i + j == m;
                CHECK((q.coeff({{"x", i}, {"y", j}}) == c) == attains);
                if (!attains) CHECK(q.coeff({{"x", i}, {"y", j}}).is_zero());
            }
            CHECK(q.size() <= h.size());
        }
    }

    TEST_CASE("infinity chart") {
        auto fr = infinity_chart(E("z1^2-2*z2", "z2^2"), 2);
        CHECK(fr.map.comp1 == P("z1^2"));
        CHECK(fr.map.comp2 == P("z2^2-2*z1"));
        auto fc = infinity_chart(ex4_descend(P("x^2-2")), 3);
        // the w2 component of the Chebyshev descent is not 1 in the chart, so the germ is a truncated series
        CHECK(fc.map.comp1.coeff({{"z1", 2}}) == Coefficient(1));
    }

    TEST_CASE("one-variable reduction") {
        auto a = infinity_chart(ex4_descend(P("x^2")), 2);
        auto b = infinity_chart(ex4_descend(P("x^3")), 3);
        auto r = prop2_reduce(a, b);
        CHECK(r.alpha == 2);
        CHECK(r.p1 == P("y^2-2"));
        CHECK(r.p2 == P("y^3-3*y"));
        CHECK(r.which == 3);
        CHECK(r.beta == Coefficient(1));

        auto p = prop2_reduce(at0(E("z1^2", "z2^2")), at0(E("z1^3", "z2^3")));
        CHECK(p.alpha == 1);
        CHECK(p.p1 == P("y^2"));
        CHECK(p.p2 == P("y^3"));
        CHECK(p.which == 1);
        REQUIRE(p.gamma);
        CHECK(*p.gamma == Coefficient(1));

        auto q = prop2_reduce(at0(E("z1^2", "-z2^2")), at0(E("z1^3", "z2^3")));
        CHECK(q.which == 1);

        auto c = prop2_reduce(at0(E("z1^2", "z2^2-2*z1^2")), at0(E("z1^3", "z2^3-3*z1^2*z2")));
        CHECK(c.alpha == 1);
        CHECK(c.which == 2);

        CHECK_THROWS_AS(prop2_reduce(at0(E("z1^2", "z2^2+z1^2")), at0(E("z1^3", "z2^3"))), CommutationFails);
        CHECK_THROWS_AS(prop2_reduce(at0(E("z1^2", "z2^2")), at0(E("z1^4", "z2^4"))), PreconditionViolated);
        CHECK_THROWS_AS(prop2_reduce(at0(E("z1^2-z2", "z2^2")), at0(E("z1^3", "z2^3"))), ShapeMismatch);
    }

    TEST_CASE("reduction commutes on family pairs") {
        std::vector<std::pair<MPoly, MPoly>> hs{{P("x^2"), P("x^3")}, {P("x^3"), P("x^2")}, {P("x^2"), P("x^5")}, {P("x^3"), P("x^4")}};
        for (const auto& [h1, h2] : hs) {
            auto f1 = infinity_chart(ex4_descend(h1), h1.total_degree());
            auto f2 = infinity_chart(ex4_descend(h2), h2.total_degree());
            auto r = prop2_reduce(f1, f2);
            CHECK(substitute(r.p1, {{"y", r.p2}}) == substitute(r.p2, {{"y", r.p1}}));
            CHECK(r.which == 3);
        }
        for (auto [d1, d2] : {std::pair{2, 3}, std::pair{3, 2}, std::pair{2, 5}}) {
            auto [f1, f2] = ex1({d1, d2, Coefficient(1), 1, 1});
            auto r = prop2_reduce(at0(make_endo(f1.comp1, f1.comp1.rename({{"z1", "z2"}}))),
                                  at0(make_endo(f2.comp1, f2.comp1.rename({{"z1", "z2"}}))));
            CHECK(substitute(r.p1, {{"y", r.p2}}) == substitute(r.p2, {{"y", r.p1}}));
        }
    }
}
