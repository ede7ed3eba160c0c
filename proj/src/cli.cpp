#include "pdyn/cli.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "pdyn/errors.hpp"
#include "pdyn/families.hpp"
#include "pdyn/local.hpp"
#include "pdyn/parse.hpp"

namespace pdyn {

using json = nlohmann::ordered_json;

Session make_session(int cyclotomic_order, long degree_cap, int iterate_cap) {
    if (cyclotomic_order < 1) throw PreconditionViolated("cyclotomic order must be at least 1");
    if (degree_cap < 1 || iterate_cap < 1) throw PreconditionViolated("caps must be positive");
    Session s;
    s.cyclotomic_order = cyclotomic_order;
    s.degree_cap = degree_cap;
    s.iterate_cap = iterate_cap;
    return s;
}

std::string Report::to_json(bool timing) const {
    json j;
    j["command"] = command;
    json in = json::object();
    for (const auto& [k, v] : inputs) in[k] = v;
    j["inputs"] = in;
    j["verdict"] = verdict;
    if (!error.empty()) j["error"] = error;
    j["data"] = data;
    if (timing) j["wall_time_s"] = wall_time;
    return j.dump(2) + "\n";
}

namespace {

std::string trim(const std::string& s) {
    auto a = s.find_first_not_of(" \t\n");
    if (a == std::string::npos) return "";
    return s.substr(a, s.find_last_not_of(" \t\n") - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(trim(cur));
    return out;
}

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

long parse_long(const std::string& s) {
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(s, &used);
    } catch (const std::exception&) {
        throw SyntaxError("expected an integer, got '" + s + "'");
    }
    if (used != s.size()) throw SyntaxError("expected an integer, got '" + s + "'");
    return v;
}

Coefficient parse_scalar(const std::string& s, int order) {
    MPoly p = parse_poly(s, order);
    if (p.is_zero()) return Coefficient(0);
    if (!p.is_constant()) throw SyntaxError("expected a constant, got '" + s + "'");
    return p.constant_value();
}

MPoly rename_x(const MPoly& p, const std::string& v) { return p.rename({{"x", v}}); }

MPoly chebyshev_shorthand(const std::string& text, const std::string& prefix, ChebyshevKind kind) {
    long d = parse_long(text.substr(prefix.size()));
    if (d < 1) throw PreconditionViolated("degree must be positive");
    return chebyshev(static_cast<int>(d), kind);
}

RatMap1 lattes_shorthand(const std::string& text, int order) {
    auto parts = split(text.substr(7), ',');
    if (parts.size() != 3) throw SyntaxError("lattes:a,b,n expects three values");
    return elliptic_lattes(make_curve(parse_scalar(parts[0], order), parse_scalar(parts[1], order)),
                           static_cast<int>(parse_long(parts[2])));
}

}  // namespace

PlaneEndo parse_plane_map(const std::string& raw, const Session& s) {
    std::string text = trim(raw);
    int n = s.cyclotomic_order;
    if (starts_with(text, "tcheb:")) {
        MPoly t = chebyshev_shorthand(text, "tcheb:", ChebyshevKind::Classical);
        return make_endo(rename_x(t, "z1"), rename_x(t, "z2"));
    }
    if (starts_with(text, "cheb:")) {
        MPoly t = chebyshev_shorthand(text, "cheb:", ChebyshevKind::Monic);
        return make_endo(rename_x(t, "z1"), rename_x(t, "z2"));
    }
    if (starts_with(text, "lattes:")) return homogeneous_lift(lattes_shorthand(text, n), Coefficient(1));
    if (starts_with(text, "ex4:")) return ex4_descend(parse_poly(text.substr(4), n));
    auto [a, b] = parse_pair(text, n);
    return make_endo(a, b);
}

RatMap1 parse_line_map(const std::string& raw, const Session& s) {
    std::string text = trim(raw);
    int n = s.cyclotomic_order;
    if (starts_with(text, "tcheb:")) return ratmap_from_polynomial(chebyshev_shorthand(text, "tcheb:", ChebyshevKind::Classical));
    if (starts_with(text, "cheb:")) return ratmap_from_polynomial(chebyshev_shorthand(text, "cheb:", ChebyshevKind::Monic));
    if (starts_with(text, "lattes:")) return lattes_shorthand(text, n);
    if (!text.empty() && text.front() == '[') {
        if (text.back() != ']') throw SyntaxError("expected ']' at byte " + std::to_string(text.size()));
        auto colon = text.find(':');
        if (colon == std::string::npos) throw SyntaxError("expected ':' in a pair of forms");
        return make_ratmap(parse_poly(text.substr(1, colon - 1), n), parse_poly(text.substr(colon + 1, text.size() - colon - 2), n));
    }
    return ratmap_from_polynomial(parse_poly(text, n));
}

PPoint parse_point(const std::string& raw, const Session& s) {
    std::string text = trim(raw);
    if (text == "inf") return PPoint::infinity();
    return PPoint::affine(parse_scalar(text, s.cyclotomic_order));
}

Orbifold1 parse_orbifold(const std::string& text, const Session& s) {
    std::vector<MarkedPoint> marked;
    for (const auto& item : split(text, ',')) {
        auto colon = item.rfind(':');
        if (colon == std::string::npos) throw SyntaxError("expected point:weight, got '" + item + "'");
        std::string w = trim(item.substr(colon + 1));
        int weight = w == "inf" ? kInfiniteWeight : static_cast<int>(parse_long(w));
        if (weight != kInfiniteWeight && weight < 2) throw PreconditionViolated("weights are at least 2");
        marked.push_back({parse_point(item.substr(0, colon), s), weight});
    }
    return make_orbifold(std::move(marked));
}

namespace {

struct Ctx {
    const Args& args;
    const Session& s;
    Report& rep;
    int n() const { return s.cyclotomic_order; }

    bool has(const std::string& k) const { return args.count(k) > 0; }
    const std::string& raw(const std::string& k) const {
        auto it = args.find(k);
        if (it == args.end()) throw PreconditionViolated("missing --" + k);
        return it->second;
    }
    PlaneEndo plane(const std::string& k) const {
        PlaneEndo f = parse_plane_map(raw(k), s);
        rep.inputs.push_back({k, to_string(f, n())});
        return f;
    }
    RatMap1 line(const std::string& k) const {
        RatMap1 r = parse_line_map(raw(k), s);
        rep.inputs.push_back({k, to_string(r, n())});
        return r;
    }
    MPoly poly(const std::string& k) const {
        MPoly p = parse_poly(raw(k), n());
        rep.inputs.push_back({k, p.to_string(n())});
        return p;
    }
    long integer(const std::string& k, long fallback) const {
        long v = has(k) ? parse_long(raw(k)) : fallback;
        rep.inputs.push_back({k, std::to_string(v)});
        return v;
    }
    Coefficient scalar(const std::string& k, const Coefficient& fallback) const {
        Coefficient c = has(k) ? parse_scalar(raw(k), n()) : fallback;
        rep.inputs.push_back({k, c.to_string(n())});
        return c;
    }
    std::string str(const MPoly& p) const { return p.to_string(n()); }
    std::string str(const Coefficient& c) const { return c.to_string(n()); }
    std::string str(const PlaneEndo& f) const { return to_string(f, n()); }
    std::string str(const RatMap1& r) const { return to_string(r, n()); }
    std::string str(const PPoint& p) const { return p.to_string(n()); }
};

int yes_no(Report& rep, bool v) {
    rep.verdict = v ? "true" : "false";
    return v ? 0 : 1;
}

json components_json(const Ctx& c, const std::vector<std::pair<MPoly, int>>& parts) {
    json arr = json::array();
    for (const auto& [p, m] : parts) arr.push_back({{"component", c.str(p)}, {"multiplicity", m}});
    return arr;
}

json orbifold_json(const Ctx& c, const Orbifold1& o) {
    json arr = json::array();
    for (const auto& m : o.marked)
        arr.push_back({{"point", c.str(m.point)}, {"weight", m.weight == kInfiniteWeight ? std::string("inf") : std::to_string(m.weight)}});
    return arr;
}

json verdict_json(const Ctx& c, const Verdict& v) {
    json j;
    j["tag"] = to_string(v.tag);
    j["describe"] = v.describe(c.n());
    j["field_order"] = static_cast<long>(lcm_order(c.n(), v.field));
    j["degree_cap"] = std::to_string(v.degree_cap);
    if (v.conjugation) j["conjugation"] = to_string(*v.conjugation, static_cast<int>(lcm_order(c.n(), v.field)));
    return j;
}

FamilyTag parse_tag(const Ctx& c) {
    FamilyTag t;
    std::string fam = c.raw("family");
    c.rep.inputs.push_back({"family", fam});
    auto sign = [](long v) {
        if (v != 1 && v != -1) throw PreconditionViolated("signs are 1 or -1");
        return static_cast<int>(v);
    };
    auto ex2p = [&](const std::string& key) {
        auto parts = split(c.raw(key), ',');
        if (parts.size() != 4) throw SyntaxError("expected d,variant,sign1,sign2 for --" + key);
        Ex2Params p;
        p.d = static_cast<int>(parse_long(parts[0]));
        if (parts[1] == "straight")
            p.variant = Ex2Variant::Straight;
        else if (parts[1] == "swap")
            p.variant = Ex2Variant::Swap;
        else
            throw SyntaxError("variant is straight or swap");
        p.sign1 = sign(parse_long(parts[2]));
        p.sign2 = sign(parse_long(parts[3]));
        c.rep.inputs.push_back({key, c.raw(key)});
        return p;
    };
    if (fam == "ex1") {
        t.kind = FamilyKind::Ex1;
        t.ex1.d1 = static_cast<int>(c.integer("d1", 2));
        t.ex1.d2 = static_cast<int>(c.integer("d2", 3));
        t.ex1.lambda = c.scalar("lambda", Coefficient(1));
        t.ex1.sign1 = sign(c.integer("s1", 1));
        t.ex1.sign2 = sign(c.integer("s2", 1));
    } else if (fam == "ex2") {
        t.kind = FamilyKind::Ex2;
        t.ex2_first = ex2p("first");
        t.ex2_second = ex2p("second");
    } else if (fam == "ex3") {
        t.kind = FamilyKind::Ex3;
        t.r1 = c.line("r1");
        t.r2 = c.line("r2");
        t.lambda1 = c.scalar("lambda1", Coefficient(1));
        t.lambda2 = c.scalar("lambda2", Coefficient(1));
    } else if (fam == "ex4") {
        t.kind = FamilyKind::Ex4;
        t.h1 = c.poly("h1");
        t.h2 = c.poly("h2");
    } else {
        throw PreconditionViolated("family is ex1, ex2, ex3 or ex4");
    }
    return t;
}

using Handler = std::function<int(Ctx&)>;

const std::map<std::string, Handler>& handlers() {
    static const std::map<std::string, Handler> h{
        {"commute",
         [](Ctx& c) {
             auto f = c.plane("f"), g = c.plane("g");
             bool v = commutes(f, g);
             c.rep.data["f_after_g"] = c.str(compose(f, g));
             return yes_no(c.rep, v);
         }},
        {"iterate",
         [](Ctx& c) {
             auto f = c.plane("f");
             long k = c.integer("n", 2);
             if (k < 0) throw PreconditionViolated("n must be nonnegative");
             PlaneEndo r = iterate(f, static_cast<unsigned>(k), c.s.degree_cap);
             c.rep.data["iterate"] = c.str(r);
             c.rep.data["degree"] = r.degree;
             c.rep.verdict = "ok";
             return 0;
         }},
        {"extends",
         [](Ctx& c) {
             auto f = c.plane("f");
             return yes_no(c.rep, extends_to_p2(f));
         }},
        {"infinity",
         [](Ctx& c) {
             auto f = c.plane("f");
             c.rep.data["restriction"] = c.str(restrict_infinity(f));
             c.rep.verdict = "ok";
             return 0;
         }},
        {"critical",
         [](Ctx& c) {
             auto f = c.plane("f");
             CurveDivisor d = critical_divisor(f, c.n());
             c.rep.data["jacobian"] = c.str(jacobian_det(f));
             c.rep.data["components"] = components_json(c, d.parts);
             c.rep.data["total_degree"] = d.total_degree();
             c.rep.verdict = "ok";
             return 0;
         }},
        {"mult-on-curve",
         [](Ctx& c) {
             auto f = c.plane("f");
             auto g = c.poly("curve");
             c.rep.data["multiplicity"] = mult_on_curve(f, g);
             c.rep.verdict = "ok";
             return 0;
         }},
        {"chain-check",
         [](Ctx& c) {
             auto f = c.plane("f"), g = c.plane("g");
             return yes_no(c.rep, check_critical_chain(f, g));
         }},
        {"invariant",
         [](Ctx& c) {
             auto f = c.plane("f");
             auto g = c.poly("curve");
             return yes_no(c.rep, is_invariant_curve(f, g));
         }},
        {"total-invariant",
         [](Ctx& c) {
             auto f = c.plane("f");
             auto g = c.poly("curve");
             auto k = total_invariance_constant(f, g);
             if (k) c.rep.data["constant"] = c.str(*k);
             return yes_no(c.rep, k.has_value());
         }},
        {"ramified-invariance",
         [](Ctx& c) {
             auto f = c.plane("f");
             auto phi = c.poly("phi");
             c.rep.data["cofactor"] = c.str(ramified_square_invariance(f, phi, c.n()));
             return yes_no(c.rep, true);
         }},
        {"image-curve",
         [](Ctx& c) {
             auto f = c.plane("f");
             auto g = c.poly("curve");
             c.rep.data["image"] = c.str(image_curve(f, g));
             c.rep.verdict = "ok";
             return 0;
         }},
        {"critical-orbit",
         [](Ctx& c) {
             auto f = c.plane("f"), g = c.plane("g");
             long bound = c.integer("bound", c.s.iterate_cap);
             OrbitReport r = critical_orbit_finite(f, g, static_cast<int>(bound), c.s.degree_cap, c.n());
             json arr = json::array();
             for (const auto& comp : r.components) {
                 json imgs = json::array(), wit = json::array();
                 for (const auto& [nm, p] : comp.images)
                     imgs.push_back({{"n", nm.first}, {"m", nm.second}, {"curve", c.str(p)}});
                 for (const auto& w : comp.witnesses)
                     wit.push_back({{"first", {w.first.first, w.first.second}}, {"second", {w.second.first, w.second.second}}});
                 arr.push_back({{"component", c.str(comp.component)}, {"finite", comp.finite}, {"images", imgs}, {"witnesses", wit}});
             }
             c.rep.data["components"] = arr;
             return yes_no(c.rep, r.all_finite());
         }},
        {"invariant-lines",
         [](Ctx& c) {
             auto f = c.plane("f");
             ExceptionalReport r = invariant_lines(f, c.n());
             json arr = json::array();
             for (const auto& l : r.affine_lines) arr.push_back({{"line", c.str(l.line)}, {"totally_invariant", l.totally_invariant}});
             c.rep.data["affine_lines"] = arr;
             c.rep.data["includes_infinity"] = r.includes_infinity;
             c.rep.data["positive_dimensional"] = r.positive_dimensional;
             c.rep.verdict = "ok";
             return 0;
         }},
        {"intersection-mult",
         [](Ctx& c) {
             auto a = c.poly("g1"), b = c.poly("g2");
             c.rep.data["multiplicity"] = intersection_mult(a, b);
             c.rep.verdict = "ok";
             return 0;
         }},
        {"local-degree",
         [](Ctx& c) {
             auto f = c.plane("f");
             Coefficient p1 = c.scalar("p1", Coefficient(0)), p2 = c.scalar("p2", Coefficient(0));
             c.rep.data["local_degree"] = local_degree(local_frame(f, p1, p2));
             c.rep.verdict = "ok";
             return 0;
         }},
        {"lemma3",
         [](Ctx& c) {
             auto f = c.plane("f");
             LemmaReport r = lemma3_sides(f, c.n());
             c.rep.data["left"] = r.left;
             c.rep.data["right"] = r.right;
             return yes_no(c.rep, r.holds());
         }},
        {"lemma4",
         [](Ctx& c) {
             auto f = c.plane("f");
             auto a = c.poly("curve");
             LemmaReport r = lemma4_sides(f, a, c.n());
             c.rep.data["left"] = r.left;
             c.rep.data["right"] = r.right;
             return yes_no(c.rep, r.holds());
         }},
        {"newton-alpha",
         [](Ctx& c) {
             auto h = c.poly("poly");
             Rational a = alpha_exponent(h);
             c.rep.data["alpha"] = a.get_str();
             c.rep.data["quasi_part"] = c.str(quasi_part(h, a));
             c.rep.verdict = "ok";
             return 0;
         }},
        {"prop2-reduce",
         [](Ctx& c) {
             auto f = c.plane("f"), g = c.plane("g");
             Prop2Result r = prop2_reduce(local_frame(f), local_frame(g), c.n());
             c.rep.data["alpha"] = r.alpha.get_str();
             c.rep.data["p1"] = c.str(r.p1);
             c.rep.data["p2"] = c.str(r.p2);
             c.rep.data["case"] = r.which;
             c.rep.data["beta"] = c.str(r.beta);
             c.rep.data["shift"] = c.str(r.shift);
             if (r.gamma) c.rep.data["gamma"] = c.str(*r.gamma);
             c.rep.data["signs"] = {r.sign1, r.sign2};
             c.rep.verdict = "ok";
             return 0;
         }},
        {"orbifold-cover",
         [](Ctx& c) {
             auto r = c.line("map");
             Orbifold1 o = parse_orbifold(c.raw("orbifold"), c.s);
             c.rep.inputs.push_back({"orbifold", to_string(o, c.n())});
             return yes_no(c.rep, is_orbifold_selfcover(r, o, c.n()));
         }},
        {"parabolic",
         [](Ctx& c) {
             std::vector<int> w;
             for (const auto& x : split(c.raw("weights"), ',')) w.push_back(static_cast<int>(parse_long(x)));
             c.rep.inputs.push_back({"weights", c.raw("weights")});
             return yes_no(c.rep, parabolic_check(w));
         }},
        {"portrait",
         [](Ctx& c) {
             auto r = c.line("map");
             Orbifold1 o = parse_orbifold(c.raw("orbifold"), c.s);
             c.rep.inputs.push_back({"orbifold", to_string(o, c.n())});
             Portrait p = portrait(r, o, c.n());
             json arr = json::array();
             for (const auto& e : p.entries) {
                 json pre = json::array(), un = json::array();
                 for (const auto& [i, m] : e.marked_preimages) pre.push_back({{"marked", i}, {"multiplicity", m}});
                 for (const auto& [k, m] : e.unmarked) un.push_back({{"count", k}, {"multiplicity", m}});
                 arr.push_back({{"marked", e.marked}, {"image", e.image}, {"marked_preimages", pre}, {"unmarked", un}});
             }
             c.rep.data["orbifold"] = orbifold_json(c, o);
             c.rep.data["entries"] = arr;
             c.rep.data["case"] = p.case_label;
             c.rep.verdict = "ok";
             return 0;
         }},
        {"classify-p1",
         [](Ctx& c) {
             auto r = c.line("map");
             InfinityVerdict v = classify_infinity(r, c.n());
             json pts = json::array();
             for (const auto& p : v.special) pts.push_back(c.str(p));
             c.rep.data["class"] = to_string(v.kind);
             c.rep.data["signature"] = v.signature;
             c.rep.data["special"] = pts;
             c.rep.data["orbifold"] = orbifold_json(c, v.orbifold);
             c.rep.verdict = to_string(v.kind);
             return v.kind == InfinityClass::Unknown ? 1 : 0;
         }},
        {"construct",
         [](Ctx& c) {
             FamilyTag t = parse_tag(c);
             auto [f1, f2] = construct(t, c.n());
             c.rep.data["tag"] = t.describe(c.n());
             c.rep.data["f1"] = c.str(f1);
             c.rep.data["f2"] = c.str(f2);
             c.rep.verdict = "ok";
             return 0;
         }},
        {"sym-reduce",
         [](Ctx& c) {
             auto p = c.poly("poly");
             c.rep.data["reduced"] = c.str(sym_reduce(p));
             c.rep.verdict = "ok";
             return 0;
         }},
        {"lattes",
         [](Ctx& c) {
             Coefficient a = c.scalar("a", Coefficient(-1)), b = c.scalar("b", Coefficient(0));
             long k = c.integer("n", 2);
             EllipticCurve e = make_curve(a, b);
             c.rep.data["map"] = c.str(elliptic_lattes(e, static_cast<int>(k)));
             c.rep.data["orbifold"] = orbifold_json(c, two_torsion_orbifold(e, c.n()));
             c.rep.verdict = "ok";
             return 0;
         }},
        {"classify",
         [](Ctx& c) {
             auto f = c.plane("f"), g = c.plane("g");
             Verdict v = recognize(f, g, c.n(), c.s.degree_cap);
             c.rep.data = verdict_json(c, v);
             if (v.tag == VerdictTag::Unknown)
                 c.rep.data["smooth_critical_conic"] = smooth_critical_conic(f) || smooth_critical_conic(g);
             c.rep.verdict = to_string(v.tag);
             return v.tag == VerdictTag::Unknown ? 1 : 0;
         }},
        {"disjoint",
         [](Ctx& c) {
             auto f = c.plane("f"), g = c.plane("g");
             c.rep.data["degree_cap"] = std::to_string(c.s.degree_cap);
             return yes_no(c.rep, disjoint_iterates(f, g, c.s.degree_cap));
         }},
        {"search",
         [](Ctx& c) {
             SearchOptions o;
             o.d1 = static_cast<int>(c.integer("d1", 2));
             o.d2 = static_cast<int>(c.integer("d2", 2));
             for (const auto& x : split(c.raw("coeffs"), ','))
                 if (!x.empty()) o.coefficients.push_back(parse_long(x));
             c.rep.inputs.push_back({"coeffs", c.raw("coeffs")});
             o.node_budget = c.integer("budget", 0);
             o.disjoint_cap = c.s.degree_cap;
             o.order = c.n();
             if (c.s.seed != 0) std::shuffle(o.coefficients.begin(), o.coefficients.end(), std::mt19937_64(c.s.seed));
             auto fill = [&](const SearchSummary& s) {
                 c.rep.data["summary"] = s.to_string(c.n());
                 c.rep.data["commuting"] = s.commuting;
                 c.rep.data["not_disjoint"] = s.not_disjoint;
                 c.rep.data["unknown"] = s.unknown.size();
                 c.rep.data["certified_outside"] = s.unknown_outside;
                 c.rep.data["complete"] = s.complete;
             };
             try {
                 SearchSummary s = search(o);
                 fill(s);
                 c.rep.verdict = s.unknown.empty() ? "complete" : "unknown-survivors";
                 return s.unknown.empty() ? 0 : 1;
             } catch (const SearchBudgetExceeded& e) {
                 fill(e.partial);
                 throw;
             }
         }},
    };
    return h;
}

}  // namespace

const std::map<std::string, std::vector<std::string>>& command_table() {
    static const std::map<std::string, std::vector<std::string>> t{
        {"commute", {"f", "g"}},
        {"iterate", {"f", "n?"}},
        {"extends", {"f"}},
        {"infinity", {"f"}},
        {"critical", {"f"}},
        {"mult-on-curve", {"f", "curve"}},
        {"chain-check", {"f", "g"}},
        {"invariant", {"f", "curve"}},
        {"total-invariant", {"f", "curve"}},
        {"ramified-invariance", {"f", "phi"}},
        {"image-curve", {"f", "curve"}},
        {"critical-orbit", {"f", "g", "bound?"}},
        {"invariant-lines", {"f"}},
        {"intersection-mult", {"g1", "g2"}},
        {"local-degree", {"f", "p1?", "p2?"}},
        {"lemma3", {"f"}},
        {"lemma4", {"f", "curve"}},
        {"newton-alpha", {"poly"}},
        {"prop2-reduce", {"f", "g"}},
        {"orbifold-cover", {"map", "orbifold"}},
        {"parabolic", {"weights"}},
        {"portrait", {"map", "orbifold"}},
        {"classify-p1", {"map"}},
        {"construct", {"family", "d1?", "d2?", "lambda?", "s1?", "s2?", "first?", "second?", "r1?", "r2?", "lambda1?", "lambda2?", "h1?", "h2?"}},
        {"sym-reduce", {"poly"}},
        {"lattes", {"a?", "b?", "n?"}},
        {"classify", {"f", "g"}},
        {"search", {"d1?", "d2?", "coeffs", "budget?"}},
        {"disjoint", {"f", "g"}},
    };
    return t;
}

RunResult run(const std::string& command, const Args& args, const Session& session) {
    RunResult out;
    out.report.command = command;
    auto t0 = std::chrono::steady_clock::now();
    auto it = handlers().find(command);
    try {
        if (it == handlers().end()) throw PreconditionViolated("unknown command '" + command + "'");
        if (session.cyclotomic_order < 1 || session.degree_cap < 1 || session.iterate_cap < 1)
            throw PreconditionViolated("session caps must be positive");
        Ctx c{args, session, out.report};
        out.exit_code = it->second(c);
    } catch (const Error& e) {
        out.report.error = e.what();
        switch (e.error_class()) {
            case ErrorClass::Negative:
                out.report.verdict = "false";
                out.exit_code = 1;
                break;
            case ErrorClass::Input:
                out.report.verdict = "input-error";
                out.exit_code = 2;
                break;
            case ErrorClass::Budget:
                out.report.verdict = "budget-exceeded";
                out.exit_code = 3;
                break;
        }
    } catch (const std::invalid_argument& e) {
        out.report.error = e.what();
        out.report.verdict = "input-error";
        out.exit_code = 2;
    }
    out.report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

}  // namespace pdyn
