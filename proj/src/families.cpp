#include "pdyn/families.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace pdyn {

namespace {

const MPoly& X() {
    static const MPoly x = MPoly::var("x");
    return x;
}
const MPoly& Y() {
    static const MPoly y = MPoly::var("y");
    return y;
}

void check_sign(int s) {
    if (s != 1 && s != -1) throw PreconditionViolated("signs must be +1 or -1");
}

std::string sign_str(int s) { return s > 0 ? "+" : "-"; }

Coefficient pick_root(std::vector<Coefficient> roots) {
    std::sort(roots.begin(), roots.end(), [](const Coefficient& a, const Coefficient& b) {
        if (a.is_rational() != b.is_rational()) return a.is_rational();
        if (a.is_rational() && (a.rational() > 0) != (b.rational() > 0)) return a.rational() > 0;
        return a.compare(b) < 0;
    });
    return roots.front();
}

}  // namespace

MPoly chebyshev(int d, ChebyshevKind kind, const std::string& var) {
    if (d < 0) throw PreconditionViolated("Chebyshev degree must be nonnegative");
    MPoly x = MPoly::var(var);
    MPoly prev = kind == ChebyshevKind::Classical ? MPoly(1) : MPoly(2);
    if (d == 0) return prev;
    MPoly cur = x;
    MPoly step = kind == ChebyshevKind::Classical ? x.scaled(Coefficient(2)) : x;
    for (int k = 1; k < d; ++k) {
        MPoly next = step * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

bool chebyshev_signs_compatible(int d1, int s1, int d2, int s2) {
    auto pw = [](int s, int e) { return (e % 2 == 0) ? 1 : s; };
    return s1 * pw(s2, d1) == s2 * pw(s1, d2);
}

std::pair<PlaneEndo, PlaneEndo> ex1(const Ex1Params& p) {
    if (p.d1 < 1 || p.d2 < 1) throw PreconditionViolated("degrees must be positive");
    if (p.lambda.is_zero()) throw PreconditionViolated("lambda must be nonzero");
    check_sign(p.sign1);
    check_sign(p.sign2);
    MPoly z1 = MPoly::var("z1");
    PlaneEndo f1 = make_endo(z1.pow(p.d1), chebyshev(p.d1, ChebyshevKind::Classical, "z2").scaled(Coefficient(p.sign1)));
    PlaneEndo f2 = make_endo(z1.pow(p.d2).scaled(p.lambda), chebyshev(p.d2, ChebyshevKind::Classical, "z2").scaled(Coefficient(p.sign2)));
    if (!chebyshev_signs_compatible(p.d1, p.sign1, p.d2, p.sign2)) throw NotCommuting("signs do not match the parity rule");
    if (!commutes(f1, f2)) throw NotCommuting("lambda^(d1-1) must be 1");
    return {f1, f2};
}

PlaneEndo ex2(const Ex2Params& p) {
    if (p.d < 1) throw PreconditionViolated("degree must be positive");
    check_sign(p.sign1);
    check_sign(p.sign2);
    bool straight = p.variant == Ex2Variant::Straight;
    MPoly a = chebyshev(p.d, ChebyshevKind::Classical, straight ? "z1" : "z2").scaled(Coefficient(p.sign1));
    MPoly b = chebyshev(p.d, ChebyshevKind::Classical, straight ? "z2" : "z1").scaled(Coefficient(p.sign2));
    return make_endo(a, b);
}

PlaneEndo homogeneous_lift(const RatMap1& r, const Coefficient& lambda) {
    std::map<std::string, std::string> names{{"s", "z1"}, {"t", "z2"}};
    return make_endo(r.formS.rename(names).scaled(lambda), r.formT.rename(names).scaled(lambda));
}

Ex3Result ex3_lift(const RatMap1& r1, const RatMap1& r2, std::optional<Coefficient> lambda1, std::optional<Coefficient> lambda2,
                   int order) {
    if (!commutes1(r1, r2)) throw NotCommuting("the line maps do not commute");
    std::map<std::string, MPoly> b2{{"s", r2.formS}, {"t", r2.formT}}, b1{{"s", r1.formS}, {"t", r1.formT}};
    MPoly as = substitute(r1.formS, b2), at = substitute(r1.formT, b2);
    MPoly bs = substitute(r2.formS, b1), bt = substitute(r2.formT, b1);
    Coefficient c = !bs.is_zero() ? as.leading_coeff() / bs.leading_coeff() : at.leading_coeff() / bt.leading_coeff();
    if (as != bs.scaled(c) || at != bt.scaled(c)) throw NotCommuting("compositions differ by a nonconstant factor");
    const int d1 = r1.degree, d2 = r2.degree;
    Coefficient l2 = lambda2.value_or(Coefficient(1));
    if (l2.is_zero() || (lambda1 && lambda1->is_zero())) throw PreconditionViolated("scalars must be nonzero");
    Coefficient target = c * l2.pow(d1 - 1);
    Coefficient l1;
    if (lambda1) {
        l1 = *lambda1;
        if (l1.pow(d2 - 1) != target) throw NotCommuting("lambda1^(d2-1) != c lambda2^(d1-1)");
    } else if (d2 == 1) {
        if (target != Coefficient(1)) throw ScalarNotSolvable("degree-one partner forces c = 1");
        l1 = Coefficient(1);
    } else {
        auto roots = nth_roots(target, d2 - 1, order);
        if (roots.empty()) throw ScalarNotSolvable("no (d2-1)-th root of " + target.to_string() + " in the field");
        l1 = pick_root(roots);
    }
    Ex3Result out{homogeneous_lift(r1, l1), homogeneous_lift(r2, l2), l1, l2, c};
    if (!commutes(out.f1, out.f2)) throw NotCommuting("lifted maps do not commute");
    return out;
}

MPoly sym_reduce(const MPoly& s) {
    for (const auto& v : s.vars())
        if (v != "x" && v != "y") throw PreconditionViolated("symmetric reduction expects x, y");
    if (s.rename({{"x", "y"}, {"y", "x"}}) != s) throw NotSymmetric(s.to_string());
    MPoly e1 = MPoly::var("e1"), e2 = MPoly::var("e2");
    MPoly rest = s, out;
    while (!rest.is_zero()) {
        Exponent ex = rest.leading_exponent();
        unsigned a = 0, b = 0;
        const auto& vs = rest.vars();
        for (std::size_t i = 0; i < vs.size(); ++i) {
            if (vs[i] == "x") a = ex[i];
            if (vs[i] == "y") b = ex[i];
        }
        if (a < b) throw NotSymmetric(s.to_string());
        Coefficient c = rest.leading_coeff();
        out += e1.pow(a - b) * e2.pow(b) * MPoly(c);
        rest -= ((X() + Y()).pow(a - b) * (X() * Y()).pow(b)).scaled(c);
    }
    return out;
}

PlaneEndo ex4_descend(const MPoly& h) {
    for (const auto& v : h.vars())
        if (v != "x") throw PreconditionViolated("h must be a polynomial in x");
    if (h.is_constant()) throw PreconditionViolated("h must be nonconstant");
    MPoly hy = h.rename({{"x", "y"}});
    MPoly s1 = h + hy, s2 = h * hy;
    std::map<std::string, std::string> names{{"e1", "z1"}, {"e2", "z2"}};
    PlaneEndo f = make_endo(sym_reduce(s1).rename(names), sym_reduce(s2).rename(names));
    std::map<std::string, MPoly> pi{{"z1", X() + Y()}, {"z2", X() * Y()}};
    if (substitute(f.comp1, pi) != s1 || substitute(f.comp2, pi) != s2) throw PreconditionViolated("descent identity failed");
    return f;
}

EllipticCurve make_curve(const Coefficient& a, const Coefficient& b) {
    if ((a.pow(3) * Coefficient(4) + b.pow(2) * Coefficient(27)).is_zero()) throw SingularCurve("discriminant vanishes");
    return EllipticCurve{a, b};
}

RatMap1 elliptic_lattes(const EllipticCurve& c, int n) {
    if (n < 1) throw PreconditionViolated("multiplier must be positive");
    if ((c.a.pow(3) * Coefficient(4) + c.b.pow(2) * Coefficient(27)).is_zero()) throw SingularCurve("discriminant vanishes");
    if (n == 1) return identity_map1();
    const MPoly A(c.a), B(c.b);
    const MPoly cubic = X().pow(3) + A * X() + B;
    auto reduce = [&](const MPoly& p) {
        auto cs = p.coeffs_in("y");
        MPoly out;
        for (std::size_t k = 0; k < cs.size(); ++k)
            if (!cs[k].is_zero()) out += cs[k] * cubic.pow(static_cast<unsigned>(k / 2)) * (k % 2 ? Y() : MPoly(1));
        return out;
    };
    std::map<int, MPoly> memo;
    std::function<MPoly(int)> psi = [&](int m) -> MPoly {
        auto it = memo.find(m);
        if (it != memo.end()) return it->second;
        MPoly r;
        if (m == 0) {
            r = MPoly(0);
        } else if (m == 1) {
            r = MPoly(1);
        } else if (m == 2) {
            r = Y().scaled(Coefficient(2));
        } else if (m == 3) {
            r = MPoly(3) * X().pow(4) + MPoly(6) * A * X().pow(2) + MPoly(12) * B * X() - A.pow(2);
        } else if (m == 4) {
            r = MPoly(4) * Y() *
                (X().pow(6) + MPoly(5) * A * X().pow(4) + MPoly(20) * B * X().pow(3) - MPoly(5) * A.pow(2) * X().pow(2) -
                 MPoly(4) * A * B * X() - MPoly(8) * B.pow(2) - A.pow(3));
        } else if (m % 2 == 1) {
            int k = (m - 1) / 2;
            r = reduce(psi(k + 2) * psi(k).pow(3) - psi(k - 1) * psi(k + 1).pow(3));
        } else {
            int k = m / 2;
            MPoly num = reduce(psi(k) * (psi(k + 2) * psi(k - 1).pow(2) - psi(k - 2) * psi(k + 1).pow(2)) * Y());
            r = exact_divide(num, cubic.scaled(Coefficient(2)));
        }
        memo[m] = r;
        return r;
    };
    MPoly pn2 = reduce(psi(n).pow(2));
    MPoly num = reduce(X() * pn2 - psi(n - 1) * psi(n + 1));
    if (num.has_var("y") || pn2.has_var("y")) throw PreconditionViolated("division polynomial parity failure");
    RatMap1 r = ratmap_from_fraction(num, pn2);
    if (r.degree != n * n) throw PreconditionViolated("multiplication map has the wrong degree");
    return r;
}

Orbifold1 two_torsion_orbifold(const EllipticCurve& c, int order) {
    if ((c.a.pow(3) * Coefficient(4) + c.b.pow(2) * Coefficient(27)).is_zero()) throw SingularCurve("discriminant vanishes");
    MPoly cubic = X().pow(3) + MPoly(c.a) * X() + MPoly(c.b);
    auto roots = field_roots(cubic, "x", order);
    if (roots.size() != 3) throw NotSplit("x^3 + a x + b does not split in the field");
    std::vector<PPoint> pts;
    for (const auto& r : roots) pts.push_back(PPoint::affine(r));
    std::sort(pts.begin(), pts.end());
    pts.push_back(PPoint::infinity());
    return standard_orbifold("2222", pts);
}

std::string to_string(FamilyKind k) {
    switch (k) {
        case FamilyKind::Ex1: return "Ex1";
        case FamilyKind::Ex2: return "Ex2";
        case FamilyKind::Ex3: return "Ex3";
        case FamilyKind::Ex4: return "Ex4";
    }
    return "?";
}

std::string FamilyTag::describe(int order) const {
    auto co = [&](const Coefficient& c) { return c.to_string(order == 0 ? c.order() : order); };
    switch (kind) {
        case FamilyKind::Ex1:
            return "Ex1(d1=" + std::to_string(ex1.d1) + ",d2=" + std::to_string(ex1.d2) + ",lambda=" + co(ex1.lambda) +
                   ",signs=" + sign_str(ex1.sign1) + sign_str(ex1.sign2) + ")";
        case FamilyKind::Ex2: {
            auto one = [&](const Ex2Params& p) {
                return "d=" + std::to_string(p.d) + "," + (p.variant == Ex2Variant::Straight ? "straight" : "swap") + "," +
                       sign_str(p.sign1) + sign_str(p.sign2);
            };
            return "Ex2(" + one(ex2_first) + ";" + one(ex2_second) + ")";
        }
        case FamilyKind::Ex3:
            return "Ex3(" + (r1 ? to_string(*r1, order) : std::string("?")) + "," + (r2 ? to_string(*r2, order) : std::string("?")) +
                   ",lambda1=" + co(lambda1) + ",lambda2=" + co(lambda2) + ")";
        case FamilyKind::Ex4:
            return "Ex4(h1=" + h1.to_string(order) + ",h2=" + h2.to_string(order) + ")";
    }
    return "?";
}

std::pair<PlaneEndo, PlaneEndo> construct(const FamilyTag& tag, int order) {
    switch (tag.kind) {
        case FamilyKind::Ex1: return ex1(tag.ex1);
        case FamilyKind::Ex2: {
            PlaneEndo a = ex2(tag.ex2_first), b = ex2(tag.ex2_second);
            if (!commutes(a, b)) throw NotCommuting("Chebyshev pair does not commute");
            return {a, b};
        }
        case FamilyKind::Ex3: {
            if (!tag.r1 || !tag.r2) throw PreconditionViolated("Ex3 needs two line maps");
            auto r = ex3_lift(*tag.r1, *tag.r2, tag.lambda1, tag.lambda2, order);
            return {r.f1, r.f2};
        }
        case FamilyKind::Ex4: {
            PlaneEndo a = ex4_descend(tag.h1), b = ex4_descend(tag.h2);
            if (!commutes(a, b)) throw NotCommuting("descended maps do not commute");
            return {a, b};
        }
    }
    throw PreconditionViolated("unknown family");
}

}  // namespace pdyn
