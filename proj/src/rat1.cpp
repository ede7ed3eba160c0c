#include "pdyn/rat1.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace pdyn {

namespace {

const MPoly& S() {
    static const MPoly s = MPoly::var("s");
    return s;
}
const MPoly& T() {
    static const MPoly t = MPoly::var("t");
    return t;
}

bool only_vars(const MPoly& p, std::initializer_list<const char*> allowed) {
    for (const auto& v : p.vars()) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || v == a;
        if (!ok) return false;
    }
    return true;
}

bool is_form_of_degree(const MPoly& p, int d) {
    if (p.is_zero()) return false;
    for (const auto& [e, c] : p.terms())
        if (static_cast<int>(e[0] + e[1] + e[2] + e[3]) != d) return false;
    return true;
}

// sum c_k x^k  ->  sum c_k t^k s^(d-k)
MPoly homogenize(const MPoly& p, int d) {
    auto cs = p.coeffs_in("x");
    MPoly out;
    for (std::size_t k = 0; k < cs.size(); ++k)
        if (!cs[k].is_zero()) out += cs[k] * T().pow(static_cast<unsigned>(k)) * S().pow(static_cast<unsigned>(d - static_cast<int>(k)));
    return out;
}

MPoly dehomogenize(const MPoly& form) { return substitute(form, {{"s", MPoly(1)}, {"t", MPoly::var("x")}}); }

Coefficient eval_form(const MPoly& f, const PPoint& p) {
    MPoly v = substitute(f, {{"s", MPoly(p.s)}, {"t", MPoly(p.t)}});
    return v.is_zero() ? Coefficient() : v.constant_value();
}

std::pair<MPoly, MPoly> compose_forms(const RatMap1& r1, const RatMap1& r2) {
    std::map<std::string, MPoly> b{{"s", r2.formS}, {"t", r2.formT}};
    return {substitute(r1.formS, b), substitute(r1.formT, b)};
}

}  // namespace

PPoint PPoint::from(const Coefficient& s, const Coefficient& t) {
    if (s.is_zero()) {
        if (t.is_zero()) throw PreconditionViolated("[0:0] is not a point");
        return infinity();
    }
    return affine(t / s);
}

std::string PPoint::to_string(int order) const {
    if (is_infinity()) return "inf";
    return t.to_string(order == 0 ? t.order() : order);
}

bool operator<(const PPoint& a, const PPoint& b) {
    if (a.is_infinity() != b.is_infinity()) return b.is_infinity();
    return a.t.compare(b.t) < 0;
}

RatMap1 make_ratmap(const MPoly& formS, const MPoly& formT) {
    if (!only_vars(formS, {"s", "t"}) || !only_vars(formT, {"s", "t"}))
        throw PreconditionViolated("forms must be in s, t");
    int d = std::max(formS.total_degree(), formT.total_degree());
    if (d < 1 || !is_form_of_degree(formS, d) || !is_form_of_degree(formT, d))
        throw PreconditionViolated("forms must be nonzero and homogeneous of one positive degree");
    if (form_resultant(formS, formT, "s", "t", d, d).is_zero()) throw PreconditionViolated("forms share a zero");
    return RatMap1{formS, formT, d};
}

RatMap1 identity_map1() { return RatMap1{S(), T(), 1}; }

RatMap1 ratmap_from_polynomial(const MPoly& p) { return ratmap_from_fraction(p, MPoly(1)); }

RatMap1 ratmap_from_fraction(const MPoly& num, const MPoly& den) {
    if (!only_vars(num, {"x"}) || !only_vars(den, {"x"})) throw PreconditionViolated("expected functions of x");
    if (den.is_zero()) throw DivisionByZero("zero denominator");
    MPoly n = num, m = den;
    if (!n.is_zero()) {
        MPoly g = gcd_poly(n, m);
        n = exact_divide(n, g);
        m = exact_divide(m, g);
    }
    int d = std::max(std::max(n.degree_in("x"), m.degree_in("x")), 0);
    if (d < 1) throw PreconditionViolated("constant map");
    return make_ratmap(homogenize(m, d), homogenize(n, d));
}

PPoint apply(const RatMap1& r, const PPoint& p) { return PPoint::from(eval_form(r.formS, p), eval_form(r.formT, p)); }

RatMap1 compose1(const RatMap1& r1, const RatMap1& r2) {
    auto [a, b] = compose_forms(r1, r2);
    MPoly g = gcd_poly(a, b);
    if (!g.is_constant()) {
        a = exact_divide(a, g);
        b = exact_divide(b, g);
    }
    return RatMap1{a, b, std::max(a.total_degree(), b.total_degree())};
}

bool projectively_equal(const RatMap1& a, const RatMap1& b) { return (a.formS * b.formT - a.formT * b.formS).is_zero(); }

bool commutes1(const RatMap1& r1, const RatMap1& r2) {
    auto [a1, b1] = compose_forms(r1, r2);
    auto [a2, b2] = compose_forms(r2, r1);
    return (a1 * b2 - b1 * a2).is_zero();
}

std::string to_string(const RatMap1& r, int order) {
    return "[" + r.formS.to_string(order) + " : " + r.formT.to_string(order) + "]";
}

CriticalForm critical_form(const RatMap1& r) {
    if (r.degree < 2) throw PreconditionViolated("critical form needs degree at least 2");
    MPoly w = r.formS.derivative("s") * r.formT.derivative("t") - r.formS.derivative("t") * r.formT.derivative("s");
    return CriticalForm{w, squarefree_decompose(w)};
}

int Fiber::degree() const {
    int d = 0;
    for (const auto& [p, m] : points) d += m;
    for (const auto& [f, m] : residual) d += m * f.total_degree();
    return d;
}

Fiber form_zeros(const MPoly& form, int order) {
    Fiber out;
    if (form.is_zero()) throw PreconditionViolated("zeros of the zero form");
    if (form.is_constant()) return out;
    auto sd = squarefree_decompose(form);
    MPoly x = MPoly::var("x");
    for (const auto& [g, m] : sd.factors) {
        MPoly a = dehomogenize(g);
        int da = a.is_constant() ? 0 : a.degree_in("x");
        if (g.total_degree() > da) out.points.push_back({PPoint::infinity(), m * (g.total_degree() - da)});
        if (da == 0) continue;
        MPoly rest = a;
        for (const auto& root : field_roots(a, "x", order)) {
            out.points.push_back({PPoint::affine(root), m});
            rest = exact_divide(rest, x - MPoly(root));
        }
        if (!rest.is_constant()) out.residual.push_back({homogenize(rest.monic(), rest.degree_in("x")), m});
    }
    std::sort(out.points.begin(), out.points.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

Fiber pullback_divisor(const RatMap1& r, const PPoint& p, int order) {
    MPoly form = r.formS.scaled(p.t) - r.formT.scaled(p.s);
    return form_zeros(form, order);
}

int Orbifold1::weight_of(const PPoint& p) const {
    for (const auto& m : marked)
        if (m.point == p) return m.weight;
    return 1;
}

bool Orbifold1::is_marked(const PPoint& p) const {
    for (const auto& m : marked)
        if (m.point == p) return true;
    return false;
}

Orbifold1 make_orbifold(std::vector<MarkedPoint> marked) {
    for (std::size_t i = 0; i < marked.size(); ++i) {
        if (marked[i].weight != kInfiniteWeight && marked[i].weight < 2)
            throw PreconditionViolated("weights must be at least 2 or infinite");
        for (std::size_t j = 0; j < i; ++j)
            if (marked[i].point == marked[j].point) throw PreconditionViolated("marked points must be distinct");
    }
    return Orbifold1{std::move(marked)};
}

std::string to_string(const Orbifold1& o, int order) {
    std::string out;
    for (const auto& m : o.marked) {
        if (!out.empty()) out += ",";
        out += m.point.to_string(order) + ":" + (m.weight == kInfiniteWeight ? std::string("inf") : std::to_string(m.weight));
    }
    return out;
}

bool is_orbifold_selfcover(const RatMap1& r, const Orbifold1& o, int order) {
    long ramification = 0;
    for (const auto& alpha : o.marked) {
        Fiber f = pullback_divisor(r, alpha.point, order);
        for (const auto& [x, m] : f.points) {
            int wx = o.weight_of(x);
            if (alpha.weight == kInfiniteWeight) {
                if (wx != kInfiniteWeight)
                    throw InfinityWeightViolation("preimage " + x.to_string(order) + " of a weight-infinity point has finite weight");
            } else {
                if (wx == kInfiniteWeight) return false;
                if (m * wx != alpha.weight) return false;
            }
            ramification += m - 1;
        }
        for (const auto& [g, m] : f.residual) {
            if (alpha.weight == kInfiniteWeight)
                throw InfinityWeightViolation("a weight-infinity point has unmarked preimages");
            if (m != alpha.weight) return false;
            ramification += static_cast<long>(m - 1) * g.total_degree();
        }
    }
    for (const auto& m : o.marked)
        if (!o.is_marked(apply(r, m.point))) return false;
    return ramification == 2L * r.degree - 2;
}

bool parabolic_check(const std::vector<int>& weights) {
    Rational sum = 0;
    for (int w : weights) {
        if (w == kInfiniteWeight || w < 1) throw PreconditionViolated("parabolic check needs finite positive weights");
        sum += Rational(1) - Rational(1, w);
    }
    return sum == 2;
}

Orbifold1 standard_orbifold(const std::string& signature, const std::vector<PPoint>& points) {
    std::vector<int> w;
    if (signature == "333")
        w = {3, 3, 3};
    else if (signature == "236")
        w = {6, 3, 2};
    else if (signature == "244")
        w = {4, 4, 2};
    else if (signature == "2222")
        w = {2, 2, 2, 2};
    else
        throw PreconditionViolated("unknown signature " + signature);
    if (points.size() != w.size())
        throw BadPointCount("signature " + signature + " needs " + std::to_string(w.size()) + " points");
    std::vector<MarkedPoint> m;
    for (std::size_t i = 0; i < w.size(); ++i) m.push_back({points[i], w[i]});
    return make_orbifold(std::move(m));
}

namespace {

struct RoleFiber {
    std::size_t image;
    std::vector<std::pair<std::size_t, int>> marked;  // (role, multiplicity)
    int unmarked_count;
    int unmarked_mult;
};

struct CaseTable {
    std::string label;
    std::vector<int> weights;  // per role
    std::function<bool(int)> applies;
    std::function<std::vector<RoleFiber>(int)> fibers;
};

const std::vector<CaseTable>& case_tables() {
    static const std::vector<CaseTable> t = {
        {"O4-odd", {2, 2, 2, 2}, [](int d) { return d % 2 == 1; },
         [](int d) {
             std::vector<RoleFiber> f;
             for (std::size_t j = 0; j < 4; ++j) f.push_back({j, {{j, 1}}, (d - 1) / 2, 2});
             return f;
         }},
        {"O4-even-collapse", {2, 2, 2, 2}, [](int d) { return d % 2 == 0 && d >= 4; },
         [](int d) {
             std::vector<RoleFiber> f;
             f.push_back({0, {{0, 1}, {1, 1}, {2, 1}, {3, 1}}, d / 2 - 2, 2});
             for (std::size_t j = 1; j < 4; ++j) f.push_back({0, {}, d / 2, 2});
             return f;
         }},
        {"O4-even-pairs", {2, 2, 2, 2}, [](int d) { return d % 2 == 0; },
         [](int d) {
             return std::vector<RoleFiber>{{0, {{0, 1}, {2, 1}}, d / 2 - 1, 2},
                                           {1, {{1, 1}, {3, 1}}, d / 2 - 1, 2},
                                           {0, {}, d / 2, 2},
                                           {1, {}, d / 2, 2}};
         }},
        {"O1-fixed", {3, 3, 3}, [](int d) { return d % 3 == 1; },
         [](int d) {
             std::vector<RoleFiber> f;
             for (std::size_t j = 0; j < 3; ++j) f.push_back({j, {{j, 1}}, (d - 1) / 3, 3});
             return f;
         }},
        {"O1-collapse", {3, 3, 3}, [](int d) { return d % 3 == 0; },
         [](int d) {
             return std::vector<RoleFiber>{
                 {0, {{0, 1}, {1, 1}, {2, 1}}, d / 3 - 1, 3}, {0, {}, d / 3, 3}, {0, {}, d / 3, 3}};
         }},
        {"O2-fixed", {6, 3, 2}, [](int d) { return d % 6 == 1; },
         [](int d) {
             return std::vector<RoleFiber>{
                 {0, {{0, 1}}, (d - 1) / 6, 6}, {1, {{1, 1}}, (d - 1) / 3, 3}, {2, {{2, 1}}, (d - 1) / 2, 2}};
         }},
        {"O2-4mod6", {6, 3, 2}, [](int d) { return d % 6 == 4; },
         [](int d) {
             return std::vector<RoleFiber>{
                 {0, {{0, 1}, {2, 3}}, (d - 4) / 6, 6}, {1, {{1, 1}}, (d - 1) / 3, 3}, {0, {}, d / 2, 2}};
         }},
        {"O2-3mod6", {6, 3, 2}, [](int d) { return d % 6 == 3; },
         [](int d) {
             return std::vector<RoleFiber>{
                 {0, {{0, 1}, {1, 2}}, (d - 3) / 6, 6}, {0, {}, d / 3, 3}, {2, {{2, 1}}, (d - 1) / 2, 2}};
         }},
        {"O2-0mod6", {6, 3, 2}, [](int d) { return d % 6 == 0; },
         [](int d) {
             return std::vector<RoleFiber>{
                 {0, {{0, 1}, {2, 3}, {1, 2}}, d / 6, 6}, {0, {}, d / 3, 3}, {0, {}, d / 2, 2}};
         }},
        {"O3-fixed", {4, 4, 2}, [](int d) { return d % 4 == 1; },
         [](int d) {
             return std::vector<RoleFiber>{
                 {0, {{0, 1}}, (d - 1) / 4, 4}, {1, {{1, 1}}, (d - 1) / 4, 4}, {2, {{2, 1}}, (d - 1) / 2, 2}};
         }},
        {"O3-collapse", {4, 4, 2}, [](int d) { return d % 4 == 0; },
         [](int d) {
             return std::vector<RoleFiber>{
                 {0, {{0, 1}, {1, 1}, {2, 2}}, d / 4 - 1, 4}, {0, {}, d / 4, 4}, {0, {}, d / 2, 2}};
         }},
    };
    return t;
}

bool entry_matches(const PortraitEntry& e, const RoleFiber& rf, const std::vector<std::size_t>& role_to_marked) {
    if (e.image != role_to_marked[rf.image]) return false;
    std::vector<std::pair<std::size_t, int>> want;
    for (const auto& [role, m] : rf.marked) want.push_back({role_to_marked[role], m});
    auto have = e.marked_preimages;
    std::sort(want.begin(), want.end());
    std::sort(have.begin(), have.end());
    if (want != have) return false;
    int count = 0;
    for (const auto& [n, m] : e.unmarked) {
        if (m != rf.unmarked_mult) return false;
        count += n;
    }
    return count == rf.unmarked_count;
}

}  // namespace

Portrait portrait(const RatMap1& r, const Orbifold1& o, int order) {
    if (!is_orbifold_selfcover(r, o, order)) throw PreconditionViolated("map is not a self-cover of the orbifold");
    Portrait p;
    for (std::size_t i = 0; i < o.marked.size(); ++i) {
        PortraitEntry e;
        e.marked = i;
        PPoint img = apply(r, o.marked[i].point);
        for (std::size_t j = 0; j < o.marked.size(); ++j)
            if (o.marked[j].point == img) e.image = j;
        Fiber f = pullback_divisor(r, o.marked[i].point, order);
        for (const auto& [x, m] : f.points) {
            bool found = false;
            for (std::size_t j = 0; j < o.marked.size(); ++j)
                if (o.marked[j].point == x) {
                    e.marked_preimages.push_back({j, m});
                    found = true;
                }
            if (!found) e.unmarked.push_back({1, m});
        }
        for (const auto& [g, m] : f.residual) e.unmarked.push_back({g.total_degree(), m});
        p.entries.push_back(std::move(e));
    }
    std::vector<int> weights;
    for (const auto& m : o.marked) weights.push_back(m.weight);
    for (const auto& table : case_tables()) {
        if (table.weights.size() != weights.size() || !table.applies(r.degree)) continue;
        std::vector<std::size_t> perm(weights.size());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        auto fibers = table.fibers(r.degree);
        do {
            bool ok = true;
            for (std::size_t role = 0; role < perm.size() && ok; ++role)
                ok = weights[perm[role]] == table.weights[role] && entry_matches(p.entries[perm[role]], fibers[role], perm);
            if (ok) {
                p.case_label = table.label;
                return p;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    throw NoCaseMatch("fiber structure outside the tabulated cases");
}

std::string to_string(InfinityClass k) {
    switch (k) {
        case InfinityClass::PowerLike: return "PowerLike";
        case InfinityClass::ChebyshevLike: return "ChebyshevLike";
        case InfinityClass::LattesLike: return "LattesLike";
        case InfinityClass::Unknown: return "Unknown";
    }
    return "Unknown";
}

namespace {

// Images of the zeros of a binary form under r, as a binary form in (s, t).
MPoly image_form(const RatMap1& r, const MPoly& g) {
    MPoly u = MPoly::var("u"), v = MPoly::var("v");
    MPoly eq = v * r.formS - u * r.formT;
    MPoly res = form_resultant(g, eq, "s", "t", g.total_degree(), r.degree);
    return res.rename({{"u", "s"}, {"v", "t"}});
}

}  // namespace

std::optional<std::vector<PPoint>> postcritical_set(const RatMap1& r, int order, std::size_t limit) {
    auto cf = critical_form(r);
    std::vector<PPoint> values;
    for (const auto& [g, m] : cf.parts.factors) {
        Fiber z = form_zeros(image_form(r, g), order);
        if (!z.residual.empty()) return std::nullopt;
        for (const auto& [p, k] : z.points)
            if (std::find(values.begin(), values.end(), p) == values.end()) values.push_back(p);
    }
    std::vector<PPoint> orbit;
    std::vector<PPoint> queue = values;
    while (!queue.empty()) {
        PPoint p = queue.back();
        queue.pop_back();
        if (std::find(orbit.begin(), orbit.end(), p) != orbit.end()) continue;
        orbit.push_back(p);
        if (orbit.size() > limit) return std::nullopt;
        queue.push_back(apply(r, p));
    }
    std::sort(orbit.begin(), orbit.end());
    return orbit;
}

InfinityVerdict classify_infinity(const RatMap1& r, int order) {
    if (r.degree < 2) throw PreconditionViolated("classification needs degree at least 2");
    InfinityVerdict out;
    auto cf = critical_form(r);
    Fiber crit = form_zeros(cf.wronskian, order);
    std::vector<PPoint> total;
    for (const auto& [p, m] : crit.points)
        if (m == r.degree - 1) total.push_back(p);
    for (std::size_t i = 0; i < total.size(); ++i)
        for (std::size_t j = i + 1; j < total.size(); ++j) {
            PPoint a = apply(r, total[i]), b = apply(r, total[j]);
            if ((a == total[i] && b == total[j]) || (a == total[j] && b == total[i])) {
                out.kind = InfinityClass::PowerLike;
                out.special = {total[i], total[j]};
                return out;
            }
        }
    auto post = postcritical_set(r, order);
    for (const auto& p : total) {
        if (apply(r, p) != p || !post) continue;
        std::vector<PPoint> rest;
        for (const auto& q : *post)
            if (q != p) rest.push_back(q);
        if (rest.size() != 2) continue;
        Orbifold1 o = make_orbifold({{p, kInfiniteWeight}, {rest[0], 2}, {rest[1], 2}});
        try {
            if (is_orbifold_selfcover(r, o, order)) {
                out.kind = InfinityClass::ChebyshevLike;
                out.special = {p};
                out.orbifold = o;
                return out;
            }
        } catch (const InfinityWeightViolation&) {
        }
    }
    if (!post) return out;
    const auto& P = *post;
    std::vector<std::string> sigs;
    if (P.size() == 4) sigs = {"2222"};
    if (P.size() == 3) sigs = {"333", "236", "244"};
    for (const auto& sig : sigs) {
        std::vector<std::size_t> perm(P.size());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        do {
            std::vector<PPoint> pts;
            for (auto i : perm) pts.push_back(P[i]);
            Orbifold1 o = standard_orbifold(sig, pts);
            if (is_orbifold_selfcover(r, o, order)) {
                out.kind = InfinityClass::LattesLike;
                out.signature = sig;
                out.special = pts;
                out.orbifold = o;
                return out;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
}

}  // namespace pdyn
