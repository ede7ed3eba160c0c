#include "pdyn/local.hpp"

#include <algorithm>

#include "pdyn/families.hpp"

namespace pdyn {

namespace {

const MPoly& Z1() {
    static const MPoly v = MPoly::var("z1");
    return v;
}
const MPoly& Z2() {
    static const MPoly v = MPoly::var("z2");
    return v;
}
const MPoly& Yv() {
    static const MPoly v = MPoly::var("y");
    return v;
}

Coefficient at_origin(const MPoly& p) { return p.coeff({}); }

void require_plane_vars(const MPoly& p) {
    for (const auto& v : p.vars())
        if (v != "z1" && v != "z2") throw PreconditionViolated("expected a polynomial in z1, z2");
}

MPoly as_xy(const MPoly& h) {
    for (const auto& v : h.vars())
        if (v != "x" && v != "y" && v != "z1" && v != "z2") throw PreconditionViolated("expected a polynomial in x, y");
    return h.rename({{"z1", "x"}, {"z2", "y"}});
}

// lowest power of v in a polynomial free of other variables
int order_in(const MPoly& p, const std::string& v) {
    auto cs = p.coeffs_in(v);
    for (std::size_t k = 0; k < cs.size(); ++k)
        if (!cs[k].is_zero()) return static_cast<int>(k);
    return -1;
}

MPoly truncate(const MPoly& p, int n) {
    MPoly out;
    for (int k = 0; k <= n; ++k) out += p.homogeneous_part(k);
    return out;
}

std::pair<unsigned, unsigned> xy_exponent(const MPoly& h, const Exponent& e) {
    unsigned k = 0, l = 0;
    for (std::size_t i = 0; i < h.vars().size(); ++i) {
        if (h.vars()[i] == "x") k = e[i];
        if (h.vars()[i] == "y") l = e[i];
    }
    return {k, l};
}

}  // namespace

Rational shear_candidate(int k) {
    if (k == 0) return 0;
    int m = (k + 1) / 2;
    return k % 2 ? Rational(m) : Rational(-m);
}

std::pair<int, Rational> intersection_mult_with_shear(const MPoly& g1_in, const MPoly& g2_in, int skip) {
    require_plane_vars(g1_in);
    require_plane_vars(g2_in);
    if (g1_in.is_zero() || g2_in.is_zero()) throw NotIsolated("a zero polynomial");
    if (!at_origin(g1_in).is_zero() || !at_origin(g2_in).is_zero()) return {0, Rational(0)};
    MPoly g1 = g1_in, g2 = g2_in;
    MPoly common = gcd_poly(g1, g2);
    if (!common.is_constant()) {
        if (at_origin(common).is_zero()) throw NotIsolated("common component through the origin");
        g1 = exact_divide(g1, common);
        g2 = exact_divide(g2, common);
    }
    for (int k = 0; k < kShearAttempts; ++k) {
        Rational tau = shear_candidate(k);
        std::map<std::string, MPoly> sh{{"z1", Z1() + Z2().scaled(Coefficient(tau))}};
        MPoly a = substitute(g1, sh), b = substitute(g2, sh);
        if (a.degree_in("z2") < 1 || b.degree_in("z2") < 1) continue;
        if (at_origin(a.coeffs_in("z2").back()).is_zero() || at_origin(b.coeffs_in("z2").back()).is_zero()) continue;
        std::map<std::string, MPoly> on_axis{{"z1", MPoly(0)}};
        MPoly ra = substitute(a, on_axis), rb = substitute(b, on_axis);
        MPoly g = gcd_poly(ra, rb);
        if (g.size() != 1) continue;  // another common zero on {z1 = 0}
        MPoly res = resultant(a, b, "z2");
        if (res.is_zero()) continue;
        if (skip-- > 0) continue;
        return {order_in(res, "z1"), tau};
    }
    throw NotIsolated("no admissible shear among the first " + std::to_string(kShearAttempts));
}

int intersection_mult(const MPoly& g1, const MPoly& g2) { return intersection_mult_with_shear(g1, g2).first; }

LocalFrame local_frame(const PlaneEndo& f, const Coefficient& p1, const Coefficient& p2) {
    std::map<std::string, MPoly> tr{{"z1", Z1() + MPoly(p1)}, {"z2", Z2() + MPoly(p2)}};
    MPoly a = substitute(f.comp1, tr), b = substitute(f.comp2, tr);
    a -= MPoly(at_origin(a));
    b -= MPoly(at_origin(b));
    PlaneEndo m{a, b, f.degree};
    return LocalFrame{m, p1, p2};
}

LocalFrame infinity_chart(const PlaneEndo& f, int truncation) {
    if (!extends_to_p2(f)) throw NotExtendable(to_string(f));
    const int d = f.degree;
    // homogenize with w0, then set (w0, w1, w2) = (x, y, 1), written in z1, z2
    auto chart = [&](const MPoly& p) {
        MPoly out;
        for (int k = 0; k <= d; ++k) {
            MPoly part = p.homogeneous_part(k);
            if (part.is_zero()) continue;
            out += substitute(part, {{"z1", Z2()}, {"z2", MPoly(1)}}) * Z1().pow(d - k);
        }
        return out;
    };
    MPoly w0 = Z1().pow(d), w1 = chart(f.comp1), w2 = chart(f.comp2);
    Coefficient u0 = at_origin(w2);
    if (u0.is_zero()) throw PreconditionViolated("[0:0:1] is not fixed by the map");
    if (!at_origin(w1).is_zero()) throw PreconditionViolated("[0:0:1] is not fixed by the map");
    // 1 / w2 as a truncated series
    MPoly rest = (w2 - MPoly(u0)).scaled(-u0.inverse());
    MPoly inv(1), term(1);
    for (int k = 1; k <= truncation; ++k) {
        term = truncate(term * rest, truncation);
        inv += term;
    }
    inv = inv.scaled(u0.inverse());
    MPoly a = truncate(w0 * inv, truncation), b = truncate(w1 * inv, truncation);
    return LocalFrame{PlaneEndo{a, b, std::max({1, a.total_degree(), b.total_degree()})}, Coefficient(0), Coefficient(0)};
}

int local_degree(const LocalFrame& frame) { return intersection_mult(frame.map.comp1, frame.map.comp2); }

LemmaReport lemma3_sides(const PlaneEndo& f, int order) {
    if (!at_origin(f.comp1).is_zero() || !at_origin(f.comp2).is_zero()) throw ShapeMismatch("the map must fix the origin");
    MPoly u = f.comp1;
    int d = 0;
    while (!u.is_zero() && divides(Z1(), u)) {
        u = exact_divide(u, Z1());
        ++d;
    }
    if (d < 1 || at_origin(u).is_zero()) throw ShapeMismatch("first component is not z1^d times a unit");
    MPoly h = substitute(f.comp2, {{"z1", MPoly(0)}});
    if (h.is_zero()) throw ShapeMismatch("second component vanishes on {z1 = 0}");
    LemmaReport rep;
    rep.right = order_in(h, "z2") - 1;
    MPoly j = jacobian_det(f);
    if (j.is_zero()) throw ZeroJacobian(to_string(f));
    if (!j.is_constant())
        for (const auto& [c, m] : curve_components(j, order)) {
            if (c == Z1()) continue;
            rep.left += static_cast<long>(m) * intersection_mult(c, Z1());
        }
    return rep;
}

bool verify_lemma3(const PlaneEndo& f, int order) { return lemma3_sides(f, order).holds(); }

LemmaReport lemma4_sides(const PlaneEndo& f, const MPoly& a, int order) {
    require_plane_vars(a);
    if (!at_origin(f.comp1).is_zero() || !at_origin(f.comp2).is_zero()) throw ShapeMismatch("the map must fix the origin");
    if (!at_origin(a).is_zero()) throw ShapeMismatch("the curve must pass through the origin");
    if (at_origin(a.derivative("z2")).is_zero()) throw ShapeMismatch("the curve must be smooth and transverse to {z1 = 0}");
    LemmaReport rep;
    rep.left = intersection_mult(f.comp1, f.comp2);
    long d = intersection_mult(f.comp1, a);
    long sum = 0;
    MPoly pre = pullback(a, f);
    if (pre.is_zero()) throw ShapeMismatch("the map sends everything into the curve");
    if (!pre.is_constant())
        for (const auto& [c, n] : curve_components(pre, order)) sum += static_cast<long>(n) * intersection_mult(c, Z1());
    rep.right = d * sum;
    return rep;
}

bool verify_lemma4(const PlaneEndo& f, const MPoly& a, int order) { return lemma4_sides(f, a, order).holds(); }

NewtonData newton_data(const MPoly& h_in) {
    MPoly h = as_xy(h_in);
    if (h.is_zero()) throw PreconditionViolated("zero polynomial has no Newton data");
    NewtonData nd;
    for (const auto& [e, c] : h.terms()) {
        auto [k, l] = xy_exponent(h, e);
        nd.support.push_back({static_cast<int>(k), static_cast<int>(l)});
        if (k == 0) nd.d = std::max(nd.d, static_cast<int>(l));
    }
    std::sort(nd.support.begin(), nd.support.end());
    return nd;
}

Rational d_alpha(const MPoly& h, const Rational& alpha) {
    auto nd = newton_data(h);
    Rational best = alpha * nd.support[0].first + nd.support[0].second;
    for (const auto& [k, l] : nd.support) best = std::min(best, Rational(alpha * k + l));
    return best;
}

MPoly quasi_part(const MPoly& h_in, const Rational& alpha) {
    MPoly h = as_xy(h_in);
    Rational m = d_alpha(h, alpha);
    MPoly out;
    for (const auto& [e, c] : h.terms()) {
        auto [k, l] = xy_exponent(h, e);
        if (alpha * k + l == m) out += MPoly::monomial(c, {{"x", k}, {"y", l}});
    }
    return out;
}

Rational alpha_exponent(const MPoly& h_in) {
    MPoly h = as_xy(h_in);
    MPoly pure = substitute(h, {{"x", MPoly(0)}});
    if (pure.size() != 1 || pure.is_constant()) throw ShapeMismatch("expected a y^d + x g");
    int d = pure.degree_in("y");
    Rational best = 0;
    for (const auto& [e, c] : h.terms()) {
        auto [k, l] = xy_exponent(h, e);
        if (k == 0) continue;
        best = std::max(best, Rational(Rational(d - static_cast<int>(l)) / k));
    }
    return std::max(best, Rational(1));
}

namespace {

struct Shape {
    int d;
    MPoly h;
};

Shape local_shape(const LocalFrame& fr) {
    const PlaneEndo& f = fr.map;
    if (!at_origin(f.comp1).is_zero() || !at_origin(f.comp2).is_zero()) throw ShapeMismatch("the map must fix the origin");
    MPoly u = f.comp1;
    int d = 0;
    while (!u.is_zero() && divides(Z1(), u)) {
        u = exact_divide(u, Z1());
        ++d;
    }
    if (d < 2 || at_origin(u).is_zero()) throw ShapeMismatch("first component is not z1^d times a unit");
    MPoly h = as_xy(f.comp2);
    MPoly pure = substitute(h, {{"x", MPoly(0)}});
    if (pure.size() != 1 || pure.degree_in("y") != d) throw ShapeMismatch("second component is not y^d + x g");
    return {d, h};
}

MPoly at_y(const MPoly& p, const MPoly& arg) { return substitute(p, {{"y", arg}}); }

// P(beta y + c) == beta * sign * T~_d(y) + c for some sign
std::optional<int> cheb_sign(const MPoly& p, int d, const Coefficient& beta, const Coefficient& c) {
    MPoly lhs = at_y(p, Yv().scaled(beta) + MPoly(c)) - MPoly(c);
    MPoly t = chebyshev(d, ChebyshevKind::Monic, "y").scaled(beta);
    if (lhs == t) return 1;
    if (lhs == -t) return -1;
    return std::nullopt;
}

}  // namespace

Prop2Result prop2_reduce(const LocalFrame& f1, const LocalFrame& f2, int order) {
    Shape s1 = local_shape(f1), s2 = local_shape(f2);
    {
        long a = 1;
        for (int m = 1; m <= 4; ++m) {
            a *= s1.d;
            long b = 1;
            for (int n = 1; n <= 4; ++n) {
                b *= s2.d;
                if (a == b) throw PreconditionViolated("degrees have a common power");
            }
        }
    }
    Prop2Result r;
    r.alpha = std::max(alpha_exponent(s1.h), alpha_exponent(s2.h));
    r.p1 = substitute(quasi_part(s1.h, r.alpha), {{"x", MPoly(1)}});
    r.p2 = substitute(quasi_part(s2.h, r.alpha), {{"x", MPoly(1)}});
    if (at_y(r.p1, r.p2) != at_y(r.p2, r.p1)) throw CommutationFails("reduced one-variable maps do not commute");
    const int d1 = s1.d, d2 = s2.d;
    order = lcm_order(lcm_order(order, r.p1.field_order()), r.p2.field_order());

    if (r.alpha == 1) {
        // power case: both are lc (y - c)^d + c
        Coefficient lc1 = r.p1.leading_coeff(), lc2 = r.p2.leading_coeff();
        Coefficient c = -r.p1.coeff({{"y", static_cast<unsigned>(d1 - 1)}}) / (lc1 * Coefficient(d1));
        auto power_like = [&](const MPoly& p, const Coefficient& lc, int d) {
            return p == (Yv() - MPoly(c)).pow(d).scaled(lc) + MPoly(c);
        };
        if (power_like(r.p1, lc1, d1) && power_like(r.p2, lc2, d2)) {
            r.which = 1;
            r.shift = c;
            auto betas = nth_roots(lc1.inverse(), d1 - 1, order);
            if (!betas.empty()) {
                std::sort(betas.begin(), betas.end(), [](const Coefficient& a, const Coefficient& b) { return a.compare(b) < 0; });
                r.beta = betas.front();
                r.gamma = lc2 * r.beta.pow(d2 - 1);
            }
            return r;
        }
        // Chebyshev case: the y^(d-1) term fixes the shift and the y^(d-2) term fixes beta^2
        MPoly centered = at_y(r.p1, Yv() + MPoly(c));
        Coefficient b = centered.coeff({{"y", static_cast<unsigned>(d1 - 2)}});
        if (!b.is_zero()) {
            Coefficient beta2 = -b / (Coefficient(d1) * lc1);
            auto betas = nth_roots(beta2, 2, order);
            std::sort(betas.begin(), betas.end(), [](const Coefficient& a, const Coefficient& b) { return a.compare(b) < 0; });
            for (const auto& beta : betas) {
                auto e1 = cheb_sign(r.p1, d1, beta, c), e2 = cheb_sign(r.p2, d2, beta, c);
                if (e1 && e2) {
                    r.which = 2;
                    r.beta = beta;
                    r.shift = c;
                    r.sign1 = *e1;
                    r.sign2 = *e2;
                    return r;
                }
            }
        }
        throw NoCaseMatches("alpha = 1 but neither power nor Chebyshev conjugate over the field");
    }
    if (r.alpha == 2) {
        for (const auto& beta : roots_of_unity(order)) {
            if (beta.pow(d1 - 1) != Coefficient(1) || beta.pow(d2 - 1) != Coefficient(1)) continue;
            auto e1 = cheb_sign(r.p1, d1, beta, Coefficient(0)), e2 = cheb_sign(r.p2, d2, beta, Coefficient(0));
            if (e1 && e2) {
                r.which = 3;
                r.beta = beta;
                r.sign1 = *e1;
                r.sign2 = *e2;
                return r;
            }
        }
        throw NoCaseMatches("alpha = 2 but no root of unity conjugates to Chebyshev");
    }
    throw NoCaseMatches("alpha is neither 1 nor 2");
}

}  // namespace pdyn
