#include <map>
#include <random>
#include <set>

#include "pdyn/classify.hpp"
#include "support.hpp"

using namespace pdyn;
using testing_support::P;

namespace {

PlaneEndo E(const std::string& a, const std::string& b, int order = 1) { return make_endo(P(a, order), P(b, order)); }

AffineConj random_affine(std::mt19937& g, int order = 1) {
    while (true) {
        std::array<std::array<Coefficient, 2>, 2> m;
        for (auto& row : m)
            for (auto& c : row) c = testing_support::random_coeff(g, order, 3, 2);
        Coefficient det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        if (det.is_zero()) continue;
        return make_affine(m, {testing_support::random_coeff(g, order, 3, 2), testing_support::random_coeff(g, order, 3, 2)});
    }
}

// diagonal or antidiagonal entries with b^(d-1) = 1, plus a translation
AffineConj random_unit_affine(std::mt19937& g, int d1, int d2, int order) {
    std::vector<Coefficient> units;
    for (const auto& z : roots_of_unity(order))
        if (z.pow(d1 - 1) == Coefficient(1) && z.pow(d2 - 1) == Coefficient(1)) units.push_back(z);
    std::uniform_int_distribution<std::size_t> pick(0, units.size() - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    Coefficient a = units[pick(g)], b = units[pick(g)], z;
    std::array<std::array<Coefficient, 2>, 2> m;
    if (coin(g))
        m = {{{a, z}, {z, b}}};
    else
        m = {{{z, a}, {b, z}}};
    return make_affine(m, {testing_support::random_coeff(g, 1, 3, 2), testing_support::random_coeff(g, 1, 3, 2)});
}

FamilyTag ex1_tag(int d1, int d2, long lambda, int s1, int s2) {
    FamilyTag t;
    t.kind = FamilyKind::Ex1;
    t.ex1 = Ex1Params{d1, d2, Coefficient(lambda), s1, s2};
    return t;
}

FamilyTag ex2_tag(Ex2Params a, Ex2Params b) {
    FamilyTag t;
    t.kind = FamilyKind::Ex2;
    t.ex2_first = a;
    t.ex2_second = b;
    return t;
}

FamilyTag ex3_tag(const std::string& a, const std::string& b, const std::string& c, const std::string& d) {
    FamilyTag t;
    t.kind = FamilyKind::Ex3;
    t.r1 = make_ratmap(P(a), P(b));
    t.r2 = make_ratmap(P(c), P(d));
    return t;
}

FamilyTag ex4_tag(const std::string& h1, const std::string& h2) {
    FamilyTag t;
    t.kind = FamilyKind::Ex4;
    t.h1 = P(h1);
    t.h2 = P(h2);
    return t;
}

VerdictTag as_verdict(FamilyKind k) { return static_cast<VerdictTag>(static_cast<int>(k)); }

std::vector<FamilyTag> sample_tags() {
    return {
        ex1_tag(2, 3, 1, 1, 1),
        ex1_tag(3, 2, -1, 1, 1),
        ex1_tag(3, 2, 1, 1, -1),
        ex2_tag({2, Ex2Variant::Straight, 1, 1}, {3, Ex2Variant::Straight, 1, 1}),
        ex2_tag({2, Ex2Variant::Straight, 1, 1}, {3, Ex2Variant::Swap, 1, 1}),
        ex3_tag("s^2", "t^2", "t^3", "s^3"),
        ex3_tag("s^2", "s^2-2*t^2", "s^3", "4*t^3-3*t*s^2"),
        ex4_tag("x^2", "x^3"),
        ex4_tag("x^2-2", "x^3-3*x"),
        ex4_tag("-x^2", "x^3"),
    };
}

// Naive grid enumeration used as an oracle for the pruned search.
struct GridMap {
    int d;
    std::vector<std::pair<int, int>> mons;
    std::vector<long> c[2];
};

std::vector<std::pair<int, int>> monomials(int d) {
    std::vector<std::pair<int, int>> m;
    for (int i = 0; i <= d; ++i)
        for (int j = 0; i + j <= d; ++j) m.push_back({i, j});
    return m;
}

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

std::array<long long, 2> eval(const GridMap& f, long long x, long long y) {
    std::array<long long, 2> r{0, 0};
    for (std::size_t k = 0; k < f.mons.size(); ++k)
        for (int q = 0; q < 2; ++q) r[q] += f.c[q][k] * ipow(x, f.mons[k].first) * ipow(y, f.mons[k].second);
    return r;
}

long coeff(const GridMap& f, int comp, int i, int j) {
    for (std::size_t k = 0; k < f.mons.size(); ++k)
        if (f.mons[k] == std::make_pair(i, j)) return f.c[comp][k];
    return 0;
}

bool unit(long v) { return v == 1 || v == -1; }

std::vector<GridMap> all_maps(int d, const std::vector<long>& s) {
    std::vector<GridMap> out;
    auto mons = monomials(d);
    std::size_t n = 2 * mons.size();
    std::vector<std::size_t> idx(n, 0);
    while (true) {
        GridMap f{d, mons, {}};
        for (std::size_t k = 0; k < n; ++k) f.c[k / mons.size()].push_back(s[idx[k]]);
        bool diag = unit(coeff(f, 0, d, 0)) && unit(coeff(f, 1, 0, d));
        bool anti = unit(coeff(f, 0, 0, d)) && unit(coeff(f, 1, d, 0));
        if (diag || anti) out.push_back(f);
        std::size_t p = 0;
        while (p < n && ++idx[p] == s.size()) idx[p++] = 0;
        if (p == n) break;
    }
    return out;
}

PlaneEndo to_endo(const GridMap& f) {
    MPoly a, b;
    for (std::size_t k = 0; k < f.mons.size(); ++k) {
        MPoly m = MPoly::var("z1").pow(f.mons[k].first) * MPoly::var("z2").pow(f.mons[k].second);
        a += m.scaled(Coefficient(f.c[0][k]));
        b += m.scaled(Coefficient(f.c[1][k]));
    }
    return make_endo(a, b);
}

std::string key(const PlaneEndo& f, const PlaneEndo& g) { return to_string(f) + "|" + to_string(g); }

PlaneEndo swapped(const PlaneEndo& f) { return affine_conjugate(f, affine_swap()); }

std::string orbit_key(const PlaneEndo& f, const PlaneEndo& g) {
    std::vector<std::string> ks{key(f, g), key(swapped(f), swapped(g))};
    if (f.degree == g.degree) {
        ks.push_back(key(g, f));
        ks.push_back(key(swapped(g), swapped(f)));
    }
    return *std::min_element(ks.begin(), ks.end());
}

std::set<std::string> naive_orbits(int d1, int d2, const std::vector<long>& s) {
    auto m1 = all_maps(d1, s), m2 = all_maps(d2, s);
    std::set<std::string> out;
    const std::vector<std::array<long long, 2>> pts{{1, 2}, {-1, 3}, {2, -1}};
    for (const auto& f : m1) {
        PlaneEndo ef = to_endo(f);
        if (ef.degree != d1 || !extends_to_p2(ef)) continue;
        for (const auto& g : m2) {
            bool agree = true;
            for (const auto& p : pts) {
                auto gp = eval(g, p[0], p[1]), fp = eval(f, p[0], p[1]);
                if (eval(f, gp[0], gp[1]) != eval(g, fp[0], fp[1])) {
                    agree = false;
                    break;
                }
            }
            if (!agree) continue;
            PlaneEndo eg = to_endo(g);
            if (eg.degree != d2 || !extends_to_p2(eg) || ef == eg || !commutes(ef, eg)) continue;
            out.insert(orbit_key(ef, eg));
        }
    }
    return out;
}

}  // namespace

TEST_SUITE("classify") {
    TEST_CASE("affine conjugation examples") {
        PlaneEndo f = E("z1^2", "z2^2");
        CHECK(affine_conjugate(f, affine_swap()) == f);
        CHECK(affine_conjugate(f, affine_translation(Coefficient(1), Coefficient(0))) == E("(z1+1)^2-1", "z2^2"));
        CHECK(affine_conjugate(f, affine_identity()) == f);
        PlaneEndo g = E("z1^2+3*z2", "z2^3-z1");
        CHECK(affine_conjugate(g, affine_swap()) == E("z1^3-z2", "z2^2+3*z1"));
        CHECK(affine_conjugate(g, affine_diagonal(Coefficient(2), Coefficient(1))) == E("2*z1^2+3/2*z2", "z2^3-2*z1"));
        CHECK_THROWS_AS(affine_diagonal(Coefficient(0), Coefficient(1)), PreconditionViolated);
        CHECK(affine_swap().swap_flag);
        CHECK(!affine_diagonal(Coefficient(2), Coefficient(3)).swap_flag);
    }

    TEST_CASE("conjugation is a group action") {
        std::mt19937 g(11);
        for (int k = 0; k < 20; ++k) {
            PlaneEndo f = make_endo(testing_support::random_poly(g, {"z1", "z2"}, 3, 4) + P("z1^3"),
                                    testing_support::random_poly(g, {"z1", "z2"}, 3, 4) + P("z2^3"));
            AffineConj s = random_affine(g), t = random_affine(g);
            CHECK(affine_conjugate(affine_conjugate(f, s), t) == affine_conjugate(f, compose_affine(s, t)));
            CHECK(compose_affine(s, inverse(s)) == affine_identity());
            CHECK(affine_conjugate(affine_conjugate(f, s), inverse(s)) == f);
        }
    }

    TEST_CASE("commutation is invariant under conjugation") {
        std::mt19937 g(12);
        auto tags = sample_tags();
        for (int k = 0; k < 50; ++k) {
            PlaneEndo a, b;
            if (k % 2 == 0) {
                auto pr = construct(tags[static_cast<std::size_t>(k / 2) % tags.size()]);
                a = pr.first;
                b = pr.second;
            } else {
                a = make_endo(testing_support::random_poly(g, {"z1", "z2"}, 2, 3) + P("z1^2"),
                              testing_support::random_poly(g, {"z1", "z2"}, 2, 3) + P("z2^2"));
                b = make_endo(testing_support::random_poly(g, {"z1", "z2"}, 2, 3) + P("z1^2"),
                              testing_support::random_poly(g, {"z1", "z2"}, 2, 3) - P("z2^2"));
            }
            AffineConj s = random_affine(g);
            bool before = commutes(a, b);
            CHECK(before == (k % 2 == 0));
            CHECK(commutes(affine_conjugate(a, s), affine_conjugate(b, s)) == before);
        }
    }

    TEST_CASE("disjoint iterates") {
        PlaneEndo f = E("z1^2+z2", "z2^2-1");
        CHECK(!disjoint_iterates(f, iterate(f, 2)));
        CHECK(!disjoint_iterates(E("z1^2", "z2^2"), E("z1^4", "z2^4")));
        CHECK(disjoint_iterates(E("z1^2-2*z2", "z2^2"), E("z1^3-3*z1*z2", "z2^3")));
        // equal squares
        CHECK(!disjoint_iterates(E("z1^2", "z2^2"), E("z2^2", "z1^2")));
        CHECK(!disjoint_iterates(E("z1^2", "z2^2"), E("z2^2", "z1^2"), 4));
        // the cap bounds the exponents tried
        CHECK(disjoint_iterates(E("z1^2", "z2^2"), E("z2^2", "z1^2"), 3));
        CHECK(disjoint_iterates(E("z1^2", "z2^2"), E("z1^2", "-z2^2")));
    }

    TEST_CASE("recognition examples") {
        Verdict v = recognize(E("z1^2-2*z2", "z2^2"), E("z1^3-3*z1*z2", "z2^3"));
        REQUIRE(v.tag == VerdictTag::Ex4);
        CHECK(v.params->h1 == P("x^2"));
        CHECK(v.params->h2 == P("x^3"));
        CHECK(*v.conjugation == affine_identity());

        v = recognize(E("z1^2", "z2^2"), E("z2^3", "z1^3"));
        CHECK(v.tag == VerdictTag::Ex3);

        v = recognize(E("z1^3", "4*z2^3-3*z2"), E("-z1^2", "2*z2^2-1"));
        REQUIRE(v.tag == VerdictTag::Ex1);
        CHECK(v.params->ex1.lambda == Coefficient(-1));
        CHECK(v.params->ex1.d1 == 3);
        CHECK(v.params->ex1.d2 == 2);
        CHECK(*v.conjugation == affine_identity());

        CHECK_THROWS_AS(recognize(E("z1^2", "z2^2"), E("z1^2+1", "z2^2")), PreconditionViolated);
        CHECK_THROWS_AS(recognize(E("z1^2", "z2^2"), E("z1^4", "z2^4")), PreconditionViolated);
        CHECK_THROWS_AS(recognize(E("z1^2", "z1^2"), E("z1^3", "z2^3")), PreconditionViolated);
    }

    TEST_CASE("recognition inverts construction and is sound") {
        std::mt19937 g(13);
        const int order = 6;
        for (const auto& tag : sample_tags()) {
            auto [f1, f2] = construct(tag, order);
            for (int rep = 0; rep < 3; ++rep) {
                AffineConj s = rep == 0 ? affine_identity() : random_unit_affine(g, f1.degree, f2.degree, order);
                PlaneEndo a = affine_conjugate(f1, s), b = affine_conjugate(f2, s);
                Verdict v = recognize(a, b, order);
                CAPTURE(tag.describe());
                REQUIRE(v.tag == as_verdict(tag.kind));
                auto e = construct(*v.params, v.field);
                CHECK(affine_conjugate(a, *v.conjugation) == e.first);
                CHECK(affine_conjugate(b, *v.conjugation) == e.second);
            }
        }
    }

    TEST_CASE("recognition handles shear conjugates") {
        std::mt19937 g(14);
        for (const auto& tag : sample_tags()) {
            auto [f1, f2] = construct(tag);
            AffineConj s = random_affine(g);
            PlaneEndo a = affine_conjugate(f1, s), b = affine_conjugate(f2, s);
            Verdict v = recognize_unchecked(a, b);
            CAPTURE(tag.describe());
            CHECK(v.tag == as_verdict(tag.kind));
        }
    }

    TEST_CASE("recognition is stable under iteration") {
        for (const auto& tag : sample_tags()) {
            auto [f1, f2] = construct(tag);
            if (f1.degree * f1.degree > 9 || f2.degree * f2.degree > 9) continue;
            Verdict v = recognize_unchecked(iterate(f1, 2), iterate(f2, 2));
            CAPTURE(tag.describe());
            CHECK(v.tag == as_verdict(tag.kind));
        }
    }

    TEST_CASE("non-family pairs stay unknown") {
        // (z1^2, z2^2) with a map sharing no iterate but not commuting is rejected earlier;
        // a commuting pair whose iterates coincide is outside the precondition.
        Verdict v = recognize_unchecked(E("z1^2+z2^2", "z2^2"), E("z1^3", "z2^3"));
        CHECK(v.tag == VerdictTag::Unknown);
        CHECK(v.describe() == "Unknown");
    }

    TEST_CASE("critical conic certificate") {
        // root-system maps of rank two: commuting, disjoint, outside the families
        PlaneEndo f = E("z2^2-2*z1", "z1^2-2*z2"), g = E("z2^3-3*z1*z2+3", "z1^3-3*z1*z2+3");
        CHECK(commutes(f, g));
        CHECK(disjoint_iterates(f, g));
        CHECK(smooth_critical_conic(f));
        Verdict v = recognize(f, g);
        CHECK(v.tag == VerdictTag::Unknown);
        std::mt19937 rng(15);
        CHECK(smooth_critical_conic(affine_conjugate(f, random_affine(rng))));
        for (const auto& tag : sample_tags()) {
            auto [f1, f2] = construct(tag);
            CAPTURE(tag.describe());
            CHECK(!smooth_critical_conic(f1));
            CHECK(!smooth_critical_conic(f2));
        }
        for (const char* h : {"x^2", "x^2-2", "-x^2+x", "3*x^2-x+1"}) CHECK(!smooth_critical_conic(ex4_descend(P(h))));
        CHECK(!smooth_critical_conic(E("z1^3", "z2^3")));
    }

    TEST_CASE("search matches a naive enumeration") {
        for (const std::vector<long>& s : {std::vector<long>{0, 1}, std::vector<long>{-1, 0}}) {
            auto oracle = naive_orbits(2, 2, s);
            CHECK(oracle.size() >= 4);
            std::set<std::string> found;
            SearchOptions o;
            o.coefficients = s;
            auto sum = search(o, [&](const SearchRecord& r) { found.insert(orbit_key(r.f1, r.f2)); });
            CHECK(sum.complete);
            CHECK(sum.commuting == oracle.size());
            CHECK(found == oracle);
            CHECK(sum.not_disjoint + sum.unknown.size() + sum.recognized[0] + sum.recognized[1] + sum.recognized[2] +
                      sum.recognized[3] ==
                  sum.commuting);
        }
    }

    TEST_CASE("search finds the descended power pair") {
        SearchOptions o;
        o.d1 = 2;
        o.d2 = 3;
        o.coefficients = {-3, -2, 0, 1};
        bool seen = false;
        PlaneEndo f = E("z1^2-2*z2", "z2^2"), g = E("z1^3-3*z1*z2", "z2^3");
        auto sum = search(o, [&](const SearchRecord& r) {
            if (orbit_key(r.f1, r.f2) == orbit_key(f, g)) {
                seen = true;
                CHECK(r.verdict.tag == VerdictTag::Ex4);
            }
        });
        CHECK(seen);
        CHECK(sum.unknown.empty());
        SearchOptions again = o;
        CHECK(search(again).to_string() == sum.to_string());
    }

    TEST_CASE("search edge cases") {
        SearchOptions o;
        auto sum = search(o);
        CHECK(sum.complete);
        CHECK(sum.commuting == 0);
        CHECK(sum.top_pairs == 0);
        o.coefficients = {-1, 0, 1};
        o.node_budget = 10;
        try {
            search(o);
            CHECK(false);
        } catch (const SearchBudgetExceeded& e) {
            CHECK(!e.partial.complete);
            CHECK(e.partial.nodes == 11);
            CHECK(e.error_class() == ErrorClass::Budget);
        }
        o.d1 = 1;
        CHECK_THROWS_AS(search(o), PreconditionViolated);
    }
}
