#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "support.hpp"

using namespace pdyn;
using testing_support::P;

namespace {

// Dense integer polynomial helpers, independent of the library kernel.
using Dense = std::vector<long>;

Dense dense_mul(const Dense& a, const Dense& b) {
    Dense r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// exact division by x^d - 1
Dense dense_div_xd_minus_1(Dense a, int d) {
    Dense q(a.size() - d, 0);
    for (std::size_t i = a.size(); i-- > static_cast<std::size_t>(d);) {
        long c = a[i];
        q[i - d] = c;
        a[i] -= c;
        a[i - d] += c;
    }
    for (long x : a) REQUIRE(x == 0);
    return q;
}

int mobius(int n) {
    int r = 1;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            r = -r;
        }
    if (n > 1) r = -r;
    return r;
}

Dense cyclotomic_by_mobius(int n) {
    Dense num{1}, den{1};
    std::vector<int> negative;
    for (int d = 1; d <= n; ++d) {
        if (n % d) continue;
        Dense xd(d + 1, 0);
        xd[0] = -1;
        xd[d] = 1;
        int m = mobius(n / d);
        if (m == 1) num = dense_mul(num, xd);
        if (m == -1) negative.push_back(d);
    }
    for (int d : negative) num = dense_div_xd_minus_1(num, d);
    return num;
}

MPoly from_dense(const Dense& a) {
    MPoly x = MPoly::var("x"), r;
    for (std::size_t i = 0; i < a.size(); ++i) r += MPoly(a[i]) * x.pow(static_cast<unsigned>(i));
    return r;
}

MPoly monic_tilde_chebyshev_by_recurrence(int d) {
    MPoly x = MPoly::var("x"), a(2), b = x;
    if (d == 0) return a;
    for (int k = 1; k < d; ++k) {
        MPoly c = x * b - a;
        a = b;
        b = c;
    }
    return b;
}

std::multiset<std::pair<int, std::string>> factor_set(const SquarefreeDecomposition& sd) {
    std::multiset<std::pair<int, std::string>> s;
    for (const auto& [f, m] : sd.factors) s.insert({m, f.to_string()});
    return s;
}

MPoly from_roots(const std::vector<Coefficient>& roots) {
    MPoly r(1), x = MPoly::var("x");
    for (const auto& c : roots) r *= x - MPoly(c);
    return r;
}

}  // namespace

TEST_SUITE("algebra") {

TEST_CASE("cyclotomic polynomials agree with the Mobius product") {
    CHECK(cyclotomic_polynomial(1) == P("x - 1"));
    CHECK(cyclotomic_polynomial(4) == P("x^2 + 1"));
    CHECK(cyclotomic_polynomial(6) == P("x^2 - x + 1"));
    for (int n = 1; n <= 60; ++n) {
        CAPTURE(n);
        CHECK(cyclotomic_polynomial(n) == from_dense(cyclotomic_by_mobius(n)));
        CHECK(cyclotomic_polynomial(n).degree_in("x") == euler_phi(n));
    }
}

TEST_CASE("zeta has the right multiplicative order") {
    for (int n : {3, 4, 5, 6, 8, 12}) {
        Coefficient z = Coefficient::zeta(n);
        for (int k = 1; k < n; ++k) CHECK(z.pow(k) != Coefficient(1));
        CHECK(z.pow(n) == Coefficient(1));
    }
    CHECK(Coefficient::zeta(4).pow(2) == Coefficient(-1));
    CHECK(Coefficient::zeta(4).is_rational() == false);
    CHECK(Coefficient::zeta(6).pow(3).is_rational());
}

TEST_CASE("mixed orders lift to the lcm") {
    Coefficient i = Coefficient::zeta(4), w = Coefficient::zeta(3);
    Coefficient p = i * w;
    CHECK(p.order() == 12);
    CHECK(p.pow(12) == Coefficient(1));
    CHECK(p.pow(6) != Coefficient(1));
    CHECK((i * i + 1).is_zero());
}

TEST_CASE("ring arithmetic examples") {
    CHECK(ring_arith(P("z1 + z2"), P("z1 - z2"), RingOp::Mul) == P("z1^2 - z2^2"));
    CHECK(ring_arith(P("x^3 - 3*x"), P("3*x"), RingOp::Add) == P("x^3"));
    CHECK(ring_arith(P("z1^2 - 2*z2"), MPoly(0), RingOp::Mul).is_zero());
    MPoly a = P("z1^2*z2 + 3"), b = P("z2^3 - z1");
    CHECK((a * b).total_degree() == a.total_degree() + b.total_degree());
}

TEST_CASE("substitution matches the Chebyshev recurrence") {
    MPoly t2 = P("x^2 - 2"), t3 = P("x^3 - 3*x");
    MPoly c = substitute(t2, {{"x", t3}});
    CHECK(c == monic_tilde_chebyshev_by_recurrence(6));
    CHECK(c == P("x^6 - 6*x^4 + 9*x^2 - 2"));
    CHECK(substitute(P("z1^2 - 4*z2"), {{"z1", P("z1^2 - 2*z2")}, {"z2", P("z2^2")}}) == P("z1^4 - 4*z1^2*z2"));
    MPoly p = P("z1^3*z2 - 7*z2 + 1/2");
    CHECK(substitute(p, {{"z1", P("z1")}, {"z2", P("z2")}}) == p);
    CHECK(substitute(p, {}) == p);
}

TEST_CASE("substitution is associative on univariate triples") {
    std::mt19937 g(11);
    for (int k = 0; k < 40; ++k) {
        std::uniform_int_distribution<int> dd(1, 6);
        MPoly p = testing_support::random_poly(g, {"x"}, dd(g) % 3 + 1, 3);
        MPoly q = testing_support::random_poly(g, {"x"}, dd(g) % 3 + 1, 3);
        MPoly r = testing_support::random_poly(g, {"x"}, dd(g) % 3 + 1, 3);
        MPoly lhs = substitute(p, {{"x", substitute(q, {{"x", r}})}});
        MPoly rhs = substitute(substitute(p, {{"x", q}}), {{"x", r}});
        CHECK(lhs == rhs);
    }
}

TEST_CASE("exact division") {
    CHECK(exact_divide(P("z1^4 - 4*z1^2*z2"), P("z1^2 - 4*z2")) == P("z1^2"));
    MPoly p = P("z1^3 + z2 - 5");
    CHECK(exact_divide(p, MPoly(1)) == p);
    CHECK_THROWS_AS(exact_divide(P("z1^2"), P("z2")), NotDivisible);
    CHECK_THROWS_AS(exact_divide(P("x^2 + 1"), P("x - 1")), NotDivisible);
    CHECK_THROWS_AS(exact_divide(P("x"), MPoly(0)), DivisionByZero);
    std::mt19937 g(5);
    for (int k = 0; k < 40; ++k) {
        MPoly a = testing_support::random_poly(g, {"z1", "z2"}, 3, 4, k % 2 ? 6 : 1);
        MPoly b = testing_support::random_poly(g, {"z1", "z2"}, 3, 3, k % 3 ? 4 : 1);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK(exact_divide(a * b, b) == a);
    }
}

TEST_CASE("gcd examples") {
    CHECK(gcd_poly(P("z1^2 - 4*z2^2"), P("z1^2 - 2*z1*z2")) == P("z1 - 2*z2"));
    CHECK(gcd_poly(P("x^2 - 4"), P("x^3 - 3*x - 2")) == P("x - 2"));
    CHECK(gcd_poly(P("3*x^2 - 6"), MPoly(0)) == P("x^2 - 2"));
    CHECK(gcd_poly(P("x^2 + 1"), P("x - 1")).is_constant());
}

TEST_CASE("gcd recovers a planted common factor") {
    std::mt19937 g(17);
    int done = 0;
    for (int k = 0; k < 60; ++k) {
        int order = k % 3 == 0 ? 6 : (k % 3 == 1 ? 4 : 1);
        MPoly c = testing_support::random_poly(g, {"z1", "z2"}, 2, 3, order);
        MPoly u = testing_support::random_poly(g, {"z1", "z2"}, 2, 3, order);
        MPoly v = testing_support::random_poly(g, {"z1", "z2"}, 2, 3, order);
        if (c.is_zero() || u.is_zero() || v.is_zero()) continue;
        MPoly a = c * u, b = c * v;
        MPoly d = gcd_poly(a, b);
        CHECK(divides(d, a));
        CHECK(divides(d, b));
        CHECK(divides(c, d));
        // cofactors are coprime
        CHECK(gcd_poly(exact_divide(a, d), exact_divide(b, d)).is_constant());
        ++done;
    }
    CHECK(done > 40);
}

TEST_CASE("squarefree decomposition examples") {
    auto a = squarefree_decompose(P("4*z1*z2^2"));
    CHECK(a.unit == Coefficient(4));
    CHECK(factor_set(a) == std::multiset<std::pair<int, std::string>>{{1, "z1"}, {2, "z2"}});
    auto b = squarefree_decompose(P("x^3 - 3*x - 2"));
    CHECK(factor_set(b) == std::multiset<std::pair<int, std::string>>{{1, "x - 2"}, {2, "x + 1"}});
    MPoly t4 = monic_tilde_chebyshev_by_recurrence(4);
    auto c = squarefree_decompose(t4 * t4 - 4);
    CHECK(factor_set(c) == std::multiset<std::pair<int, std::string>>{{2, "x"}, {1, "x^2 - 4"}, {2, "x^2 - 2"}});
}

TEST_CASE("squarefree decomposition reconstructs and is squarefree") {
    std::mt19937 g(23);
    for (int k = 0; k < 40; ++k) {
        int order = k % 2 ? 6 : 1;
        MPoly a = testing_support::random_poly(g, {"z1", "z2"}, 2, 3, order);
        MPoly b = testing_support::random_poly(g, {"z1", "z2"}, 2, 2, order);
        if (a.is_zero() || b.is_zero()) continue;
        MPoly p = a * b.pow(2) * P("z1").pow(k % 3);
        auto sd = squarefree_decompose(p);
        CHECK(sd.expand() == p);
        for (std::size_t i = 0; i < sd.factors.size(); ++i) {
            const auto& f = sd.factors[i].first;
            CHECK_FALSE(f.is_constant());
            for (const auto& v : f.vars()) CHECK(gcd_poly(f, f.derivative(v)).is_constant());
            for (std::size_t j = i + 1; j < sd.factors.size(); ++j)
                CHECK(gcd_poly(f, sd.factors[j].first).is_constant());
        }
    }
}

TEST_CASE("resultant examples") {
    CHECK(resultant(P("x^2 + 1"), P("x - 1"), "x") == MPoly(2));
    CHECK(resultant(P("x^2 - z2"), P("x - z1"), "x") == P("z1^2 - z2"));
    MPoly r = form_resultant(P("z1^2"), P("z2^2"), "z1", "z2", 2, 2);
    CHECK((r == MPoly(1) || r == MPoly(-1)));
    CHECK_THROWS_AS(resultant(MPoly(0), MPoly(0), "x"), BothZero);
    CHECK(resultant(MPoly(0), P("x+1"), "x").is_zero());
    CHECK(resultant(MPoly(3), P("x^2+1"), "x") == MPoly(9));
}

TEST_CASE("resultant equals the product of root differences") {
    std::mt19937 g(29);
    for (int k = 0; k < 30; ++k) {
        int order = k % 2 ? 4 : 3;
        std::vector<Coefficient> ra, rb;
        for (int i = 0; i < 1 + k % 3; ++i) ra.push_back(testing_support::random_coeff(g, order));
        for (int i = 0; i < 1 + k % 4; ++i) rb.push_back(testing_support::random_coeff(g, order));
        Coefficient expected(1);
        for (const auto& a : ra)
            for (const auto& b : rb) expected *= a - b;
        CHECK(resultant(from_roots(ra), from_roots(rb), "x") == MPoly(expected));
    }
}

TEST_CASE("poly_sqrt examples") {
    CHECK(poly_sqrt(P("z1^4 - 4*z1^2*z2 + 4*z2^2")) == P("z1^2 - 2*z2"));
    CHECK(poly_sqrt(MPoly(1)) == MPoly(1));
    CHECK_THROWS_AS(poly_sqrt(P("x^2 + 1")), NotASquare);
    CHECK(poly_sqrt(P("-x^2", 4), 4) == P("w*x", 4));
    CHECK_THROWS_AS(poly_sqrt(P("-x^2")), NotASquare);
}

TEST_CASE("poly_sqrt of squares over Q(zeta_6)") {
    std::mt19937 g(31);
    int n = 0;
    while (n < 500) {
        MPoly w = testing_support::random_poly(g, {"z1", "z2"}, 3, 1 + n % 3, 6);
        if (w.is_zero()) continue;
        MPoly r = poly_sqrt(w * w, 6);
        CHECK((r == w || r == -w));
        ++n;
    }
}

TEST_CASE("field axioms over Q(zeta_4) and Q(zeta_6)") {
    std::mt19937 g(37);
    for (int order : {4, 6}) {
        for (int k = 0; k < 200; ++k) {
            Coefficient a = testing_support::random_coeff(g, order), b = testing_support::random_coeff(g, order),
                        c = testing_support::random_coeff(g, order);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            if (!a.is_zero()) CHECK(a * a.inverse() == Coefficient(1));
        }
    }
}

TEST_CASE("field roots find planted roots") {
    std::mt19937 g(41);
    for (int k = 0; k < 25; ++k) {
        int order = (k % 3 == 0) ? 1 : (k % 3 == 1 ? 4 : 6);
        std::vector<Coefficient> roots;
        for (int i = 0; i < 1 + k % 4; ++i) roots.push_back(testing_support::random_coeff(g, order));
        MPoly p = from_roots(roots) * P("x^2 - 3");
        auto found = field_roots(p, "x", order);
        for (const auto& r : roots) CHECK(std::find(found.begin(), found.end(), r) != found.end());
        for (const auto& r : found) CHECK(substitute(p, {{"x", MPoly(r)}}).is_zero());
    }
    CHECK(field_roots(P("x^2 + 1"), "x").empty());
    CHECK(field_roots(P("x^2 + 1"), "x", 4).size() == 2);
    CHECK(nth_roots(Coefficient(-1), 2, 4).size() == 2);
    CHECK(nth_roots(Coefficient(8), 3, 1) == std::vector<Coefficient>{Coefficient(2)});
    CHECK(nth_roots(Coefficient(1), 3, 3).size() == 3);
    CHECK(roots_of_unity(1).size() == 2);
    CHECK(roots_of_unity(4).size() == 4);
    CHECK(roots_of_unity(3).size() == 6);
}

}
