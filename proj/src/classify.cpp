#include "pdyn/classify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "pdyn/linalg.hpp"

namespace pdyn {

namespace {

using Lin = std::array<std::array<Coefficient, 2>, 2>;

const MPoly& Z1() {
    static const MPoly v = MPoly::var("z1");
    return v;
}
const MPoly& Z2() {
    static const MPoly v = MPoly::var("z2");
    return v;
}

Coefficient det(const Lin& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

bool is_antidiagonal(const Lin& m) { return m[0][0].is_zero() && m[1][1].is_zero(); }

Coefficient top_coeff(const MPoly& comp, int d, int i) {
    return comp.coeff({{"z1", static_cast<unsigned>(i)}, {"z2", static_cast<unsigned>(d - i)}});
}

// the only term of a homogeneous part, when it is z1^i z2^(d-i)
std::optional<Coefficient> single_term(const MPoly& comp, int d, int i) {
    MPoly top = comp.homogeneous_part(d);
    if (top.size() != 1) return std::nullopt;
    Coefficient c = top_coeff(comp, d, i);
    if (c.is_zero()) return std::nullopt;
    return c;
}

bool homogeneous(const PlaneEndo& f) {
    return f.comp1 == f.comp1.homogeneous_part(f.degree) && f.comp2 == f.comp2.homogeneous_part(f.degree);
}

// t with layer_{d-1}(g(z + t) - t) equal to the target layer
std::optional<std::array<Coefficient, 2>> solve_translation(const PlaneEndo& g, const PlaneEndo& target) {
    int d = g.degree;
    if (d < 2 || target.degree != d) return std::nullopt;
    const std::vector<std::string> zz{"z1", "z2"};
    Matrix rows;
    std::vector<Coefficient> rhs;
    const MPoly* comps[2] = {&g.comp1, &g.comp2};
    const MPoly* tcomps[2] = {&target.comp1, &target.comp2};
    for (int k = 0; k < 2; ++k) {
        MPoly top = comps[k]->homogeneous_part(d);
        MPoly diff = tcomps[k]->homogeneous_part(d - 1) - comps[k]->homogeneous_part(d - 1);
        auto a = top.derivative("z1").terms_over(zz);
        auto b = top.derivative("z2").terms_over(zz);
        auto r = diff.terms_over(zz);
        std::set<Exponent, GrlexGreater> keys;
        for (const auto* t : {&a, &b, &r})
            for (const auto& kv : *t) keys.insert(kv.first);
        for (const auto& e : keys) {
            auto get = [&](const MPoly::Terms& t) {
                auto it = t.find(e);
                return it == t.end() ? Coefficient() : it->second;
            };
            rows.push_back({get(a), get(b)});
            rhs.push_back(get(r));
        }
    }
    auto sol = solve_linear(rows, rhs, 2);
    if (!sol) return std::nullopt;
    return std::array<Coefficient, 2>{(*sol)[0], (*sol)[1]};
}

AffineConj linear_conj(const Lin& m) { return make_affine(m, {Coefficient(0), Coefficient(0)}); }

// fully ramified points of a line map
std::vector<PPoint> fully_ramified(const RatMap1& r, int order) {
    std::vector<PPoint> out;
    Fiber z = form_zeros(critical_form(r).wronskian, order);
    for (const auto& [p, m] : z.points)
        if (m == r.degree - 1) out.push_back(p);
    return out;
}

bool contains(const std::vector<PPoint>& v, const PPoint& p) { return std::find(v.begin(), v.end(), p) != v.end(); }

struct Attempt {
    const PlaneEndo& f1;
    const PlaneEndo& f2;
    int order;

    // s = base o tau_t where t matches map 1 to the target; checked on both maps
    std::optional<AffineConj> finish(const AffineConj& base, const PlaneEndo& e1, const PlaneEndo& e2) const {
        PlaneEndo g1 = affine_conjugate(f1, base);
        auto t = solve_translation(g1, e1);
        if (!t) return std::nullopt;
        AffineConj s = compose_affine(base, affine_translation((*t)[0], (*t)[1]));
        if (affine_conjugate(f1, s) != e1) return std::nullopt;
        if (affine_conjugate(f2, s) != e2) return std::nullopt;
        return s;
    }
};

std::optional<Verdict> accept(VerdictTag tag, FamilyTag params, AffineConj s) {
    Verdict v;
    v.tag = tag;
    v.params = std::move(params);
    v.conjugation = std::move(s);
    return v;
}

std::optional<Verdict> try_ex3(const Attempt& at) {
    PlaneEndo zero1 = make_endo(at.f1.comp1.homogeneous_part(at.f1.degree), at.f1.comp2.homogeneous_part(at.f1.degree));
    auto t = solve_translation(at.f1, zero1);
    if (!t) return std::nullopt;
    AffineConj s = affine_translation((*t)[0], (*t)[1]);
    PlaneEndo g1 = affine_conjugate(at.f1, s), g2 = affine_conjugate(at.f2, s);
    if (!homogeneous(g1) || !homogeneous(g2)) return std::nullopt;
    FamilyTag tag;
    tag.kind = FamilyKind::Ex3;
    tag.r1 = restrict_infinity(g1);
    tag.r2 = restrict_infinity(g2);
    auto e = construct(tag, at.order);
    if (e.first != g1 || e.second != g2) return std::nullopt;
    return accept(VerdictTag::Ex3, tag, s);
}

// 1 first, then positive and negative rationals, then the rest
std::vector<Coefficient> roots(const Coefficient& a, int n, int order) {
    auto v = nth_roots(a, n, order);
    auto rank = [](const Coefficient& c) { return c.is_one() ? 0 : !c.is_rational() ? 3 : c.rational() > 0 ? 1 : 2; };
    std::stable_sort(v.begin(), v.end(), [&](const Coefficient& x, const Coefficient& y) { return rank(x) < rank(y); });
    return v;
}

Coefficient two_pow(int k) { return Coefficient(2).pow(k); }

std::optional<int> unit_sign(const Coefficient& c) {
    if (c == Coefficient(1)) return 1;
    if (c == Coefficient(-1)) return -1;
    return std::nullopt;
}

// frame with diagonal tops: (z1^d1, +-T(z2)), (lambda z1^d2, +-T(z2))
std::optional<Verdict> try_ex1(const Attempt& at, const AffineConj& frame) {
    PlaneEndo g1 = affine_conjugate(at.f1, frame), g2 = affine_conjugate(at.f2, frame);
    int d1 = g1.degree, d2 = g2.degree;
    auto a1 = single_term(g1.comp1, d1, d1), b1 = single_term(g1.comp2, d1, 0);
    auto a2 = single_term(g2.comp1, d2, d2), b2 = single_term(g2.comp2, d2, 0);
    if (!a1 || !b1 || !a2 || !b2) return std::nullopt;
    for (const auto& beta1 : roots(a1->inverse(), d1 - 1, at.order)) {
        Coefficient lambda = *a2 * beta1.pow(d2 - 1);
        for (int s1 : {1, -1}) {
            for (const auto& beta2 : roots(Coefficient(s1) * two_pow(d1 - 1) / *b1, d1 - 1, at.order)) {
                auto s2 = unit_sign(*b2 * beta2.pow(d2 - 1) / two_pow(d2 - 1));
                if (!s2 || !chebyshev_signs_compatible(d1, s1, d2, *s2)) continue;
                FamilyTag tag;
                tag.kind = FamilyKind::Ex1;
                tag.ex1 = Ex1Params{d1, d2, lambda, s1, *s2};
                std::pair<PlaneEndo, PlaneEndo> e;
                try {
                    e = construct(tag, at.order);
                } catch (const Error&) {
                    continue;
                }
                AffineConj base = compose_affine(frame, affine_diagonal(beta1, beta2));
                if (auto s = at.finish(base, e.first, e.second)) return accept(VerdictTag::Ex1, tag, *s);
            }
        }
    }
    return std::nullopt;
}

struct TopShape {
    bool straight;
    Coefficient a, b;  // coefficients of the two top terms
};

std::optional<TopShape> diagonal_shape(const PlaneEndo& g) {
    int d = g.degree;
    auto a = single_term(g.comp1, d, d), b = single_term(g.comp2, d, 0);
    if (a && b) return TopShape{true, *a, *b};
    a = single_term(g.comp1, d, 0);
    b = single_term(g.comp2, d, d);
    if (a && b) return TopShape{false, *a, *b};
    return std::nullopt;
}

// scales (b1, b2) taking a top shape to +-2^(d-1) on both components
std::vector<std::pair<Coefficient, Coefficient>> chebyshev_scales(const TopShape& t, int d, int order) {
    std::vector<std::pair<Coefficient, Coefficient>> out;
    Coefficient c = two_pow(d - 1);
    for (int s1 : {1, -1})
        for (int s2 : {1, -1}) {
            if (t.straight) {
                for (const auto& x : roots(Coefficient(s1) * c / t.a, d - 1, order))
                    for (const auto& y : roots(Coefficient(s2) * c / t.b, d - 1, order)) out.push_back({x, y});
            } else {
                // a y^d / x = s1 c and b x^d / y = s2 c
                Coefficient rhs = Coefficient(s2) * Coefficient(s1).pow(d) * c.pow(d + 1) / (t.b * t.a.pow(d));
                for (const auto& y : roots(rhs, d * d - 1, order)) {
                    Coefficient x = t.a * y.pow(d) / (Coefficient(s1) * c);
                    out.push_back({x, y});
                }
            }
        }
    return out;
}

std::optional<Verdict> try_ex2(const Attempt& at, const AffineConj& frame) {
    PlaneEndo g1 = affine_conjugate(at.f1, frame), g2 = affine_conjugate(at.f2, frame);
    auto t1 = diagonal_shape(g1), t2 = diagonal_shape(g2);
    if (!t1 || !t2) return std::nullopt;
    bool use_first = t1->straight || !t2->straight;
    auto scales = use_first ? chebyshev_scales(*t1, g1.degree, at.order) : chebyshev_scales(*t2, g2.degree, at.order);
    for (const auto& [x, y] : scales) {
        AffineConj base = compose_affine(frame, affine_diagonal(x, y));
        PlaneEndo h1 = affine_conjugate(at.f1, base), h2 = affine_conjugate(at.f2, base);
        auto params = [&](const PlaneEndo& h, bool straight) -> std::optional<Ex2Params> {
            int d = h.degree;
            Coefficient c = two_pow(d - 1);
            auto s1 = unit_sign(top_coeff(h.comp1, d, straight ? d : 0) / c);
            auto s2 = unit_sign(top_coeff(h.comp2, d, straight ? 0 : d) / c);
            if (!s1 || !s2) return std::nullopt;
            return Ex2Params{d, straight ? Ex2Variant::Straight : Ex2Variant::Swap, *s1, *s2};
        };
        auto p1 = params(h1, t1->straight), p2 = params(h2, t2->straight);
        if (!p1 || !p2) continue;
        FamilyTag tag;
        tag.kind = FamilyKind::Ex2;
        tag.ex2_first = *p1;
        tag.ex2_second = *p2;
        std::pair<PlaneEndo, PlaneEndo> e;
        try {
            e = construct(tag, at.order);
        } catch (const Error&) {
            continue;
        }
        if (auto s = at.finish(base, e.first, e.second)) return accept(VerdictTag::Ex2, tag, *s);
    }
    return std::nullopt;
}

// line map of a map whose top is (mu z1^d, ...), read as a polynomial in x
std::optional<std::pair<Coefficient, MPoly>> polynomial_restriction(const PlaneEndo& g) {
    int d = g.degree;
    auto mu = single_term(g.comp1, d, d);
    if (!mu) return std::nullopt;
    MPoly h = substitute(g.comp2.homogeneous_part(d), {{"z1", MPoly(1)}, {"z2", MPoly::var("x")}});
    return std::make_pair(*mu, h.scaled(mu->inverse()));
}

// frame fixing the direction of z2 for both line maps
std::optional<Verdict> try_ex4(const Attempt& at, const AffineConj& frame) {
    PlaneEndo g1 = affine_conjugate(at.f1, frame);
    int d1 = g1.degree, d2 = at.f2.degree;
    auto r1 = polynomial_restriction(g1);
    if (!r1) return std::nullopt;
    const MPoly& h = r1->second;
    if (h.degree_in("x") != d1) return std::nullopt;
    Coefficient lc = h.coeff({{"x", static_cast<unsigned>(d1)}});
    Coefficient sub = h.coeff({{"x", static_cast<unsigned>(d1 - 1)}});
    Coefficient shift = -sub / (Coefficient(d1) * lc);
    AffineConj center = linear_conj({{{Coefficient(1), Coefficient(0)}, {shift, Coefficient(1)}}});
    auto alphas = roots(lc.inverse(), d1 - 1, at.order);
    if (alphas.empty()) alphas = roots(Coefficient(1), d1 - 1, at.order);
    for (const auto& alpha : alphas) {
        AffineConj lin = compose_affine(frame, compose_affine(center, affine_diagonal(Coefficient(1), alpha)));
        PlaneEndo k1 = affine_conjugate(at.f1, lin), k2 = affine_conjugate(at.f2, lin);
        auto q1 = polynomial_restriction(k1), q2 = polynomial_restriction(k2);
        if (!q1 || !q2 || q2->second.degree_in("x") != d2) continue;
        FamilyTag tag;
        tag.kind = FamilyKind::Ex4;
        tag.h1 = q1->second;
        tag.h2 = q2->second;
        std::pair<PlaneEndo, PlaneEndo> e;
        try {
            e = construct(tag, at.order);
        } catch (const Error&) {
            continue;
        }
        Coefficient a1 = tag.h1.coeff({{"x", static_cast<unsigned>(d1)}});
        for (const auto& kappa : roots(a1 / q1->first, d1 - 1, at.order)) {
            AffineConj base = compose_affine(lin, affine_diagonal(kappa, kappa));
            if (auto s = at.finish(base, e.first, e.second)) return accept(VerdictTag::Ex4, tag, *s);
        }
    }
    return std::nullopt;
}

Lin columns(const PPoint& p, const PPoint& q) { return {{{p.s, q.s}, {p.t, q.t}}}; }

}  // namespace

AffineConj make_affine(const Lin& linear, const std::array<Coefficient, 2>& translation) {
    if (det(linear).is_zero()) throw PreconditionViolated("affine map is not invertible");
    AffineConj s;
    s.linear = linear;
    s.translation = translation;
    s.swap_flag = is_antidiagonal(linear);
    return s;
}

AffineConj affine_identity() { return AffineConj{}; }

AffineConj affine_swap() {
    return make_affine({{{Coefficient(0), Coefficient(1)}, {Coefficient(1), Coefficient(0)}}}, {Coefficient(0), Coefficient(0)});
}

AffineConj affine_translation(const Coefficient& a, const Coefficient& b) {
    AffineConj s;
    s.translation = {a, b};
    return s;
}

AffineConj affine_diagonal(const Coefficient& b1, const Coefficient& b2) {
    return make_affine({{{b1, Coefficient(0)}, {Coefficient(0), b2}}}, {Coefficient(0), Coefficient(0)});
}

AffineConj compose_affine(const AffineConj& s, const AffineConj& t) {
    Lin m;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m[i][j] = s.linear[i][0] * t.linear[0][j] + s.linear[i][1] * t.linear[1][j];
    std::array<Coefficient, 2> v;
    for (int i = 0; i < 2; ++i)
        v[i] = s.linear[i][0] * t.translation[0] + s.linear[i][1] * t.translation[1] + s.translation[i];
    return make_affine(m, v);
}

AffineConj inverse(const AffineConj& s) {
    Coefficient dinv = det(s.linear).inverse();
    Lin m{{{s.linear[1][1] * dinv, -s.linear[0][1] * dinv}, {-s.linear[1][0] * dinv, s.linear[0][0] * dinv}}};
    std::array<Coefficient, 2> v;
    for (int i = 0; i < 2; ++i) v[i] = -(m[i][0] * s.translation[0] + m[i][1] * s.translation[1]);
    return make_affine(m, v);
}

bool operator==(const AffineConj& a, const AffineConj& b) { return a.linear == b.linear && a.translation == b.translation; }

PlaneEndo as_endo(const AffineConj& s) {
    MPoly c1 = Z1().scaled(s.linear[0][0]) + Z2().scaled(s.linear[0][1]) + MPoly(s.translation[0]);
    MPoly c2 = Z1().scaled(s.linear[1][0]) + Z2().scaled(s.linear[1][1]) + MPoly(s.translation[1]);
    return make_endo(c1, c2);
}

std::string to_string(const AffineConj& s, int order) {
    return "z -> [[" + s.linear[0][0].to_string(order) + ", " + s.linear[0][1].to_string(order) + "], [" +
           s.linear[1][0].to_string(order) + ", " + s.linear[1][1].to_string(order) + "]] z + (" + s.translation[0].to_string(order) +
           ", " + s.translation[1].to_string(order) + ")";
}

PlaneEndo affine_conjugate(const PlaneEndo& f, const AffineConj& s) {
    return compose(as_endo(inverse(s)), compose(f, as_endo(s)));
}

namespace {

using Point = std::array<Coefficient, 2>;

Coefficient eval(const MPoly& p, const Point& z) {
    const std::vector<std::string> zz{"z1", "z2"};
    std::map<unsigned, Coefficient> p1, p2;
    auto power = [](std::map<unsigned, Coefficient>& cache, const Coefficient& base, unsigned k) -> const Coefficient& {
        auto it = cache.find(k);
        if (it == cache.end()) it = cache.emplace(k, base.pow(k)).first;
        return it->second;
    };
    Coefficient acc;
    for (const auto& [e, c] : p.terms_over(zz)) acc += c * power(p1, z[0], e[0]) * power(p2, z[1], e[1]);
    return acc;
}

Point eval(const PlaneEndo& f, const Point& z) { return {eval(f.comp1, z), eval(f.comp2, z)}; }

struct Orbit {
    const PlaneEndo& f;
    std::vector<Point> pts;
    const Point& at(std::size_t n) {
        while (pts.size() <= n) pts.push_back(eval(f, pts.back()));
        return pts[n];
    }
};

}  // namespace

bool disjoint_iterates(const PlaneEndo& f1, const PlaneEndo& f2, long degree_cap) {
    if (f1.degree < 2 || f2.degree < 2) throw PreconditionViolated("degrees must be at least 2");
    const std::vector<Point> starts{{Coefficient(Rational(1, 3)), Coefficient(Rational(2, 7))},
                                    {Coefficient(Rational(-5, 2)), Coefficient(Rational(3, 11))}};
    std::vector<Orbit> o1, o2;
    for (const auto& p : starts) {
        o1.push_back(Orbit{f1, {p}});
        o2.push_back(Orbit{f2, {p}});
    }
    Integer dn = 1;
    for (unsigned n = 1;; ++n) {
        dn *= f1.degree;
        if (dn > degree_cap) break;
        Integer dm = 1;
        unsigned m = 0;
        while (dm < dn) {
            dm *= f2.degree;
            ++m;
        }
        if (dm != dn) continue;
        bool agree = true;
        for (std::size_t k = 0; k < starts.size() && agree; ++k) agree = o1[k].at(n) == o2[k].at(m);
        if (!agree) continue;
        long cap = dn.get_si();
        if (iterate(f1, n, cap) == iterate(f2, m, cap)) return false;
    }
    return true;
}

std::string to_string(VerdictTag t) {
    switch (t) {
        case VerdictTag::Ex1: return "Ex1";
        case VerdictTag::Ex2: return "Ex2";
        case VerdictTag::Ex3: return "Ex3";
        case VerdictTag::Ex4: return "Ex4";
        case VerdictTag::Unknown: return "Unknown";
    }
    return "?";
}

std::string Verdict::describe(int order) const {
    if (tag == VerdictTag::Unknown || !params) return "Unknown";
    int n = static_cast<int>(lcm_order(order == 0 ? 1 : order, field));
    std::string s = params->describe(n);
    if (conjugation) s += " via " + to_string(*conjugation, n);
    if (n > 1) s += " over Q(zeta_" + std::to_string(n) + ")";
    return s;
}

// a candidate whose construction is rejected simply fails
template <class F>
static std::optional<Verdict> guarded(F&& attempt) {
    try {
        return attempt();
    } catch (const Error& e) {
        if (e.error_class() == ErrorClass::Budget) throw;
        return std::nullopt;
    }
}

static Verdict recognize_in(const PlaneEndo& f1, const PlaneEndo& f2, int order) {
    Attempt at{f1, f2, order};
    if (auto v = guarded([&] { return try_ex3(at); })) return *v;

    RatMap1 r1 = restrict_infinity(f1), r2 = restrict_infinity(f2);
    std::vector<PPoint> common;
    auto fr2 = fully_ramified(r2, order);
    for (const auto& p : fully_ramified(r1, order))
        if (contains(fr2, p)) common.push_back(p);

    for (const auto& p : common)
        for (const auto& q : common) {
            if (p == q) continue;
            std::vector<PPoint> pq{p, q};
            bool stable = true;
            for (const auto* r : {&r1, &r2})
                for (const auto& x : pq) stable = stable && contains(pq, apply(*r, x));
            if (!stable) continue;
            AffineConj frame = linear_conj(columns(p, q));
            if (auto v = guarded([&] { return try_ex1(at, frame); })) return *v;
            if (auto v = guarded([&] { return try_ex2(at, frame); })) return *v;
        }

    for (const auto& p : common) {
        if (apply(r1, p) != p || apply(r2, p) != p) continue;
        PPoint u = p.t.is_zero() ? PPoint::infinity() : PPoint::affine(Coefficient(0));
        if (auto v = guarded([&] { return try_ex4(at, linear_conj(columns(u, p))); })) return *v;
    }
    return Verdict{};
}

namespace {

// squarefree integer part of a nonzero rational, sign kept
mpz_class squarefree_kernel(const Rational& q) {
    mpz_class n = q.get_num() * q.get_den(), out = n < 0 ? -1 : 1;
    n = abs(n);
    for (mpz_class p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e % 2) out *= p;
        if (p > 1000000) break;
    }
    return out * n;
}

// cyclotomic order containing the roots of the common fully ramified quadratic, if any
std::optional<int> quadratic_order(const RatMap1& r1, const RatMap1& r2) {
    auto ramified = [](const RatMap1& r) -> std::optional<MPoly> {
        for (const auto& [f, m] : critical_form(r).parts.factors)
            if (m == r.degree - 1) return f;
        return std::nullopt;
    };
    auto a = ramified(r1), b = ramified(r2);
    if (!a || !b || a->field_order() != 1 || b->field_order() != 1) return std::nullopt;
    MPoly u = substitute(gcd_poly(*a, *b), {{"t", MPoly(Rational(1))}});
    for (const auto& x : field_roots(u, "s")) u = exact_divide(u, MPoly::var("s") - MPoly(x));
    if (u.degree_in("s") != 2) return std::nullopt;
    auto c = u.coeffs_in("s");
    Rational disc = c[1].constant_value().rational() * c[1].constant_value().rational() -
                    4 * c[2].constant_value().rational() * c[0].constant_value().rational();
    if (disc == 0) return std::nullopt;
    mpz_class m = squarefree_kernel(disc);
    if (m == 1) return std::nullopt;
    mpz_class r = ((m % 4) + 4) % 4 == 1 ? mpz_class(abs(m)) : mpz_class(4 * abs(m));
    if (!r.fits_sint_p() || r > 10000) return std::nullopt;
    return static_cast<int>(r.get_si());
}

}  // namespace

Verdict recognize_unchecked(const PlaneEndo& f1, const PlaneEndo& f2, int order) {
    order = static_cast<int>(lcm_order(order, lcm_order(field_order(f1), field_order(f2))));
    Verdict v = recognize_in(f1, f2, order);
    v.field = order;
    if (v.tag != VerdictTag::Unknown) return v;
    if (auto q = quadratic_order(restrict_infinity(f1), restrict_infinity(f2))) {
        int wider = static_cast<int>(lcm_order(order, *q));
        if (wider != order) {
            Verdict w = recognize_in(f1, f2, wider);
            w.field = wider;
            if (w.tag != VerdictTag::Unknown) return w;
        }
    }
    return v;
}

bool smooth_critical_conic(const PlaneEndo& f) {
    if (f.degree != 2) return false;
    MPoly j = jacobian_det(f);
    if (j.total_degree() != 2) return false;
    auto c = [&](unsigned a, unsigned b) {
        std::vector<std::pair<std::string, unsigned>> pw;
        if (a) pw.push_back({"z1", a});
        if (b) pw.push_back({"z2", b});
        return j.coeff(pw);
    };
    Coefficient half(Rational(1, 2));
    std::vector<std::vector<MPoly>> m{{MPoly(c(2, 0)), MPoly(c(1, 1) * half), MPoly(c(1, 0) * half)},
                                      {MPoly(c(1, 1) * half), MPoly(c(0, 2)), MPoly(c(0, 1) * half)},
                                      {MPoly(c(1, 0) * half), MPoly(c(0, 1) * half), MPoly(c(0, 0))}};
    return !determinant(m).is_zero();
}

Verdict recognize(const PlaneEndo& f1, const PlaneEndo& f2, int order, long degree_cap) {
    if (f1.degree < 2 || f2.degree < 2) throw PreconditionViolated("degrees must be at least 2");
    if (!extends_to_p2(f1) || !extends_to_p2(f2)) throw PreconditionViolated("maps must extend to the projective plane");
    if (!commutes(f1, f2)) throw PreconditionViolated("maps do not commute");
    if (!disjoint_iterates(f1, f2, degree_cap)) throw PreconditionViolated("maps share an iterate");
    Verdict v = recognize_unchecked(f1, f2, order);
    v.degree_cap = degree_cap;
    return v;
}

}  // namespace pdyn
