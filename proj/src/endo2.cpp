#include "pdyn/endo2.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "pdyn/linalg.hpp"

namespace pdyn {

namespace {

const MPoly& Z1() {
    static const MPoly z = MPoly::var("z1");
    return z;
}
const MPoly& Z2() {
    static const MPoly z = MPoly::var("z2");
    return z;
}

bool plane_vars_only(const MPoly& p) {
    for (const auto& v : p.vars())
        if (v != "z1" && v != "z2") return false;
    return true;
}

PlaneEndo build(MPoly a, MPoly b) {
    PlaneEndo f{std::move(a), std::move(b), 0};
    f.degree = std::max({f.comp1.total_degree(), f.comp2.total_degree(), 0});
    return f;
}

void sort_components(std::vector<std::pair<MPoly, int>>& parts) {
    std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
        if (a.first.total_degree() != b.first.total_degree()) return a.first.total_degree() < b.first.total_degree();
        std::string sa = a.first.to_string(), sb = b.first.to_string();
        if (sa != sb) return sa < sb;
        return a.second < b.second;
    });
}

void split_squarefree(const MPoly& g, int order, std::vector<MPoly>& out) {
    if (g.is_constant()) return;
    MPoly work = g;
    for (const auto& v : g.vars()) {
        MPoly x = MPoly::var(v);
        if (divides(x, work)) {
            out.push_back(x);
            work = exact_divide(work, x);
        }
    }
    if (work.is_constant()) return;
    if (work.vars().size() > 1) {
        auto vs = work.vars();
        for (const auto& v : vs) {
            MPoly c = content_in(work, v);
            if (!c.is_constant()) {
                split_squarefree(c, order, out);
                work = exact_divide(work, c);
            }
        }
    }
    if (work.is_constant()) return;
    if (work.vars().size() == 1) {
        const std::string v = work.vars().front();
        MPoly x = MPoly::var(v);
        for (const auto& r : field_roots(work, v, order)) {
            MPoly lin = x - MPoly(r);
            out.push_back(lin);
            work = exact_divide(work, lin);
        }
        if (!work.is_constant()) out.push_back(work);
        return;
    }
    out.push_back(work);
}

// remainder of p modulo g in variable v; g must have a constant leading coefficient in v
MPoly reduce_mod(MPoly p, const MPoly& g, const std::string& v, int e, const Coefficient& inv_lc) {
    MPoly x = MPoly::var(v);
    while (!p.is_zero() && p.degree_in(v) >= e) {
        int k = p.degree_in(v);
        MPoly top = p.coeffs_in(v)[k];
        p -= (top * x.pow(static_cast<unsigned>(k - e)) * g).scaled(inv_lc);
    }
    return p;
}

std::vector<Exponent> monomials_of_degree(int k) {
    std::vector<Exponent> out;
    for (int i = k; i >= 0; --i) out.push_back(Exponent{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(k - i), 0, 0});
    return out;
}

}  // namespace

PlaneEndo make_endo(const MPoly& comp1, const MPoly& comp2) {
    if (!plane_vars_only(comp1) || !plane_vars_only(comp2)) throw PreconditionViolated("plane maps use z1, z2 only");
    if (comp1.is_zero() || comp2.is_zero()) throw PreconditionViolated("components must be nonzero");
    PlaneEndo f = build(comp1, comp2);
    if (f.degree < 1) throw PreconditionViolated("constant map");
    return f;
}

PlaneEndo identity_endo() { return PlaneEndo{Z1(), Z2(), 1}; }

bool operator==(const PlaneEndo& a, const PlaneEndo& b) { return a.comp1 == b.comp1 && a.comp2 == b.comp2; }

std::string to_string(const PlaneEndo& f, int order) {
    if (order == 0) order = field_order(f);
    return "(" + f.comp1.to_string(order) + ", " + f.comp2.to_string(order) + ")";
}

int field_order(const PlaneEndo& f) { return static_cast<int>(lcm_order(f.comp1.field_order(), f.comp2.field_order())); }

MPoly pullback(const MPoly& g, const PlaneEndo& f) { return substitute(g, {{"z1", f.comp1}, {"z2", f.comp2}}); }

PlaneEndo compose(const PlaneEndo& f, const PlaneEndo& g) { return build(pullback(f.comp1, g), pullback(f.comp2, g)); }

bool commutes(const PlaneEndo& f, const PlaneEndo& g) { return compose(f, g) == compose(g, f); }

PlaneEndo iterate(const PlaneEndo& f, unsigned n, long degree_cap) {
    Integer dn = 1;
    for (unsigned i = 0; i < n; ++i) {
        dn *= f.degree;
        if (dn > degree_cap) throw DegreeLimitExceeded("degree " + std::to_string(f.degree) + "^" + std::to_string(n) + " exceeds the cap");
    }
    PlaneEndo result = identity_endo(), base = f;
    while (n) {
        if (n & 1) result = compose(result, base);
        n >>= 1;
        if (n) base = compose(base, base);
    }
    return result;
}

bool extends_to_p2(const PlaneEndo& f) {
    int d = f.degree;
    MPoly a = f.comp1.homogeneous_part(d), b = f.comp2.homogeneous_part(d);
    if (a.is_zero() || b.is_zero()) return false;
    return !form_resultant(a, b, "z1", "z2", d, d).is_zero();
}

RatMap1 restrict_infinity(const PlaneEndo& f) {
    if (!extends_to_p2(f)) throw NotExtendable(to_string(f));
    std::map<std::string, std::string> names{{"z1", "s"}, {"z2", "t"}};
    return make_ratmap(f.comp1.homogeneous_part(f.degree).rename(names), f.comp2.homogeneous_part(f.degree).rename(names));
}

MPoly jacobian_det(const PlaneEndo& f) {
    return f.comp1.derivative("z1") * f.comp2.derivative("z2") - f.comp1.derivative("z2") * f.comp2.derivative("z1");
}

int CurveDivisor::total_degree() const {
    int t = 0;
    for (const auto& [g, m] : parts) t += m * g.total_degree();
    return t;
}

MPoly normalize_curve(const MPoly& g) { return g.is_zero() ? g : g.monic(); }

std::vector<std::pair<MPoly, int>> curve_components(const MPoly& p, int order) {
    std::vector<std::pair<MPoly, int>> out;
    if (p.is_zero()) throw PreconditionViolated("components of the zero polynomial");
    for (const auto& [g, m] : squarefree_decompose(p).factors) {
        std::vector<MPoly> pieces;
        split_squarefree(g, order, pieces);
        for (const auto& piece : pieces) out.push_back({normalize_curve(piece), m});
    }
    sort_components(out);
    return out;
}

CurveDivisor critical_divisor(const PlaneEndo& f, int order) {
    if (f.degree < 2) throw PreconditionViolated("critical divisor needs degree at least 2");
    MPoly j = jacobian_det(f);
    if (j.is_zero()) throw ZeroJacobian(to_string(f));
    if (!extends_to_p2(f)) throw NotExtendable(to_string(f));
    return CurveDivisor{j.is_constant() ? std::vector<std::pair<MPoly, int>>{} : curve_components(j, order)};
}

int mult_on_curve(const PlaneEndo& f, const MPoly& g) {
    if (g.is_constant()) throw PreconditionViolated("curve must be nonconstant");
    MPoly j = jacobian_det(f);
    if (j.is_zero()) throw ZeroJacobian(to_string(f));
    int k = 0;
    while (!j.is_constant() && divides(g, j)) {
        j = exact_divide(j, g);
        ++k;
    }
    return 1 + k;
}

bool check_critical_chain(const PlaneEndo& f1, const PlaneEndo& f2) {
    if (!commutes(f1, f2)) throw PreconditionViolated("maps do not commute");
    MPoly j1 = jacobian_det(f1), j2 = jacobian_det(f2);
    if (j1.is_zero() || j2.is_zero()) throw ZeroJacobian("critical chain");
    MPoly lhs = j2 * pullback(j1, f2), rhs = j1 * pullback(j2, f1);
    if (lhs.monic() == rhs.monic()) return true;
    return squarefree_part(lhs).monic() == squarefree_part(rhs).monic();
}

bool is_invariant_curve(const PlaneEndo& f, const MPoly& g) {
    if (g.is_constant()) throw PreconditionViolated("curve must be nonconstant");
    return divides(g, pullback(g, f));
}

std::optional<Coefficient> total_invariance_constant(const PlaneEndo& f, const MPoly& g) {
    if (g.is_constant()) throw PreconditionViolated("curve must be nonconstant");
    MPoly q = pullback(g, f), gd = g.pow(static_cast<unsigned>(f.degree));
    Coefficient c = q.leading_coeff() / gd.leading_coeff();
    if (q == gd.scaled(c)) return c;
    return std::nullopt;
}

bool is_totally_invariant(const PlaneEndo& f, const MPoly& g) { return total_invariance_constant(f, g).has_value(); }

MPoly ramified_square_invariance(const PlaneEndo& f, const MPoly& phi, int order) {
    if (phi.is_constant()) throw PreconditionViolated("phi must be nonconstant");
    MPoly q = exact_divide(pullback(phi, f), phi);
    return poly_sqrt(q, order);
}

MPoly image_curve(const PlaneEndo& f, const MPoly& g) {
    if (g.is_constant() || !plane_vars_only(g)) throw PreconditionViolated("curve must be a nonconstant polynomial in z1, z2");
    if (!extends_to_p2(f)) throw NotExtendable(to_string(f));
    MPoly gs = squarefree_part(g);
    const int e = gs.total_degree();
    MPoly top = gs.homogeneous_part(e);
    // shear (z1, z2) -> (z1, z2 + tau z1) so that gs has a constant leading coefficient in z1
    std::optional<long> tau;
    for (long k = 0; k < 16 && !tau; ++k) {
        long t = (k % 2 ? 1 : -1) * ((k + 1) / 2);
        MPoly v = substitute(top, {{"z1", MPoly(1)}, {"z2", MPoly(t)}});
        if (!v.is_zero()) tau = t;
    }
    if (!tau) throw EliminationDegenerate("no shear gives a monic curve");
    std::map<std::string, MPoly> shear{{"z2", Z2() + Z1().scaled(Coefficient(*tau))}};
    MPoly G = substitute(gs, shear);
    PlaneEndo F = build(substitute(f.comp1, shear), substitute(f.comp2, shear));
    Coefficient inv_lc = G.coeffs_in("z1")[e].constant_value().inverse();
    auto red = [&](const MPoly& p) { return reduce_mod(p, G, "z1", e, inv_lc); };
    MPoly r1 = red(F.comp1), r2 = red(F.comp2);

    std::vector<Exponent> cols;
    std::vector<MPoly> values;
    std::map<std::pair<int, int>, MPoly> cache;
    cache[{0, 0}] = MPoly(1);
    const int max_degree = f.degree * e;
    for (int k = 0; k <= max_degree; ++k) {
        for (const auto& m : monomials_of_degree(k)) {
            int i = static_cast<int>(m[0]), j = static_cast<int>(m[1]);
            if (!cache.count({i, j})) cache[{i, j}] = i > 0 ? red(cache.at({i - 1, j}) * r1) : red(cache.at({i, j - 1}) * r2);
            cols.push_back(m);
            values.push_back(cache.at({i, j}));
        }
        if (k == 0) continue;
        std::map<Exponent, std::size_t, GrlexGreater> row_of;
        std::vector<std::string> vars{"z1", "z2"};
        Matrix a;
        for (std::size_t c = 0; c < values.size(); ++c)
            for (const auto& [ex, coef] : values[c].terms_over(vars)) {
                auto it = row_of.find(ex);
                if (it == row_of.end()) {
                    it = row_of.emplace(ex, a.size()).first;
                    a.emplace_back(values.size());
                }
                a[it->second][c] = coef;
            }
        auto basis = nullspace(a, values.size());
        if (basis.empty()) continue;
        MPoly h;
        for (std::size_t c = 0; c < cols.size(); ++c)
            if (!basis.front()[c].is_zero())
                h += Z1().pow(cols[c][0]) * Z2().pow(cols[c][1]) * MPoly(basis.front()[c]);
        for (std::size_t b = 1; b < basis.size(); ++b) {
            MPoly h2;
            for (std::size_t c = 0; c < cols.size(); ++c)
                if (!basis[b][c].is_zero()) h2 += Z1().pow(cols[c][0]) * Z2().pow(cols[c][1]) * MPoly(basis[b][c]);
            h = gcd_poly(h, h2);
        }
        if (h.is_constant() || !divides(gs, pullback(h, f))) throw EliminationDegenerate("image equation failed verification");
        return normalize_curve(h);
    }
    throw EliminationDegenerate("no image equation up to the degree bound");
}

bool OrbitReport::all_finite() const {
    for (const auto& c : components)
        if (!c.finite) return false;
    return true;
}

OrbitReport critical_orbit_finite(const PlaneEndo& f1, const PlaneEndo& f2, int bound, long degree_cap, int order) {
    if (bound < 1) throw PreconditionViolated("bound must be positive");
    if (!commutes(f1, f2)) throw PreconditionViolated("maps do not commute");
    std::vector<MPoly> comps;
    for (const auto* f : {&f1, &f2})
        for (const auto& [g, m] : critical_divisor(*f, order).parts)
            if (std::find(comps.begin(), comps.end(), g) == comps.end()) comps.push_back(g);
    OrbitReport report;
    for (const auto& a : comps) {
        ComponentOrbit orbit;
        orbit.component = a;
        std::map<std::string, std::pair<int, int>> seen;
        std::set<std::pair<int, int>> assigned{{0, 0}};
        orbit.images.push_back({{0, 0}, a});
        seen[a.to_string()] = {0, 0};
        std::deque<std::pair<std::pair<int, int>, MPoly>> queue{{{0, 0}, a}};
        bool overflow = false;
        while (!queue.empty() && !overflow) {
            auto [key, curve] = queue.front();
            queue.pop_front();
            for (int i = 0; i < 2 && !overflow; ++i) {
                std::pair<int, int> next = i == 0 ? std::make_pair(key.first + 1, key.second) : std::make_pair(key.first, key.second + 1);
                if (!assigned.insert(next).second) continue;
                MPoly img = image_curve(i == 0 ? f1 : f2, curve);
                if (img.total_degree() > degree_cap) throw DegreeLimitExceeded("image curve degree above the cap");
                auto it = seen.find(img.to_string());
                if (it != seen.end()) {
                    orbit.witnesses.push_back({next, it->second});
                    continue;
                }
                if (static_cast<int>(orbit.images.size()) >= bound) {
                    overflow = true;
                    break;
                }
                seen[img.to_string()] = next;
                orbit.images.push_back({next, img});
                queue.push_back({next, img});
            }
        }
        orbit.finite = !overflow;
        report.components.push_back(std::move(orbit));
    }
    return report;
}

ExceptionalReport invariant_lines(const PlaneEndo& f, int order) {
    if (f.degree < 2) throw PreconditionViolated("invariant lines need degree at least 2");
    ExceptionalReport rep;
    rep.includes_infinity = extends_to_p2(f);
    MPoly u = MPoly::var("u"), v = MPoly::var("v");
    std::vector<MPoly> lines;

    // vertical lines z1 = c
    {
        MPoly p = substitute(f.comp1, {{"z1", u}}) - u;
        if (p.is_zero()) {
            rep.positive_dimensional = true;
        } else {
            MPoly g;
            for (const auto& c : p.coeffs_in("z2"))
                if (!c.is_zero()) g = gcd_poly(g, c);
            if (!g.is_constant())
                for (const auto& r : field_roots(g, "u", order)) lines.push_back(Z1() - MPoly(r));
        }
    }
    // lines z2 = u z1 + v
    {
        MPoly p = substitute(f.comp2 - u * f.comp1 - v, {{"z2", u * Z1() + v}});
        std::vector<MPoly> eqs;
        for (const auto& c : p.coeffs_in("z1"))
            if (!c.is_zero()) eqs.push_back(c);
        if (eqs.empty()) {
            rep.positive_dimensional = true;
        } else {
            MPoly common;
            for (const auto& e : eqs) common = gcd_poly(common, e);
            std::vector<MPoly> sys = eqs;
            if (!common.is_constant()) {
                rep.positive_dimensional = true;
                for (auto& e : sys) e = exact_divide(e, common);
            }
            std::vector<MPoly> in_v;
            for (std::size_t i = 0; i < sys.size(); ++i) {
                if (!sys[i].has_var("u")) {
                    in_v.push_back(sys[i]);
                    continue;
                }
                for (std::size_t j = i + 1; j < sys.size(); ++j) {
                    MPoly r = resultant(sys[i], sys[j], "u");
                    if (!r.is_zero()) in_v.push_back(r);
                }
            }
            std::vector<Coefficient> vroots;
            if (in_v.empty()) {
                rep.positive_dimensional = true;
            } else {
                MPoly rv;
                for (const auto& r : in_v) rv = gcd_poly(rv, r);
                if (!rv.is_constant()) vroots = field_roots(rv, "v", order);
            }
            for (const auto& v0 : vroots) {
                MPoly gu;
                for (const auto& e : eqs) {
                    MPoly ev = substitute(e, {{"v", MPoly(v0)}});
                    if (!ev.is_zero()) gu = gcd_poly(gu, ev);
                }
                if (gu.is_zero()) {
                    rep.positive_dimensional = true;
                    continue;
                }
                if (gu.is_constant()) continue;
                for (const auto& u0 : field_roots(gu, "u", order)) {
                    bool ok = true;
                    for (const auto& e : eqs) ok = ok && substitute(e, {{"u", MPoly(u0)}, {"v", MPoly(v0)}}).is_zero();
                    if (ok) lines.push_back(Z2() - Z1().scaled(u0) - MPoly(v0));
                }
            }
        }
    }
    for (auto& l : lines) l = normalize_curve(l);
    std::sort(lines.begin(), lines.end(), [](const MPoly& a, const MPoly& b) { return a.to_string() < b.to_string(); });
    lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
    for (const auto& l : lines) rep.affine_lines.push_back({l, is_totally_invariant(f, l)});
    return rep;
}

}  // namespace pdyn
