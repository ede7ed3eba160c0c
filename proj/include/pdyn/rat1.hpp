#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pdyn/algebra.hpp"

namespace pdyn {

// Point [s:t] of the projective line, normalized to [1:x] or [0:1].
// The affine coordinate is x = t/s; [0:1] is infinity.
struct PPoint {
    Coefficient s{1}, t{0};

    static PPoint affine(const Coefficient& x) { return {Coefficient(1), x}; }
    static PPoint infinity() { return {Coefficient(0), Coefficient(1)}; }
    static PPoint from(const Coefficient& s, const Coefficient& t);

    bool is_infinity() const { return s.is_zero(); }
    std::string to_string(int order = 0) const;
    friend bool operator==(const PPoint& a, const PPoint& b) { return a.s == b.s && a.t == b.t; }
    friend bool operator!=(const PPoint& a, const PPoint& b) { return !(a == b); }
};
bool operator<(const PPoint& a, const PPoint& b);

// Self-map [s:t] -> [formS : formT] with forms of equal degree in s, t.
struct RatMap1 {
    MPoly formS, formT;
    int degree = 1;
};

RatMap1 make_ratmap(const MPoly& formS, const MPoly& formT);
RatMap1 identity_map1();
// x -> p(x), p univariate in x
RatMap1 ratmap_from_polynomial(const MPoly& p);
// x -> num(x)/den(x), common factors removed
RatMap1 ratmap_from_fraction(const MPoly& num, const MPoly& den);

PPoint apply(const RatMap1& r, const PPoint& p);
RatMap1 compose1(const RatMap1& r1, const RatMap1& r2);  // r1 after r2
bool commutes1(const RatMap1& r1, const RatMap1& r2);
bool projectively_equal(const RatMap1& a, const RatMap1& b);
std::string to_string(const RatMap1& r, int order = 0);

struct CriticalForm {
    MPoly wronskian;
    SquarefreeDecomposition parts;
};
CriticalForm critical_form(const RatMap1& r);

// Zeros of a binary form in (s, t): field-rational points with multiplicity,
// and the remaining irreducible-over-the-field pieces as forms with multiplicity.
struct Fiber {
    std::vector<std::pair<PPoint, int>> points;
    std::vector<std::pair<MPoly, int>> residual;
    int degree() const;
};
Fiber form_zeros(const MPoly& form, int order = 1);
Fiber pullback_divisor(const RatMap1& r, const PPoint& p, int order = 1);

constexpr int kInfiniteWeight = 0;

struct MarkedPoint {
    PPoint point;
    int weight = 2;  // kInfiniteWeight marks weight infinity
};

struct Orbifold1 {
    std::vector<MarkedPoint> marked;
    int weight_of(const PPoint& p) const;  // 1 when unmarked
    bool is_marked(const PPoint& p) const;
};
Orbifold1 make_orbifold(std::vector<MarkedPoint> marked);
std::string to_string(const Orbifold1& o, int order = 0);

bool is_orbifold_selfcover(const RatMap1& r, const Orbifold1& o, int order = 1);
bool parabolic_check(const std::vector<int>& weights);

// signature one of "333", "236", "244", "2222"; weights are assigned in the listed order
// with "236" giving weights 6, 3, 2 and "244" giving 4, 4, 2.
Orbifold1 standard_orbifold(const std::string& signature, const std::vector<PPoint>& points);

struct PortraitEntry {
    std::size_t marked = 0;
    std::size_t image = 0;
    std::vector<std::pair<std::size_t, int>> marked_preimages;  // (marked index, local multiplicity)
    std::vector<std::pair<int, int>> unmarked;                   // (number of points, local multiplicity)
};
struct Portrait {
    std::vector<PortraitEntry> entries;
    std::string case_label;
};
Portrait portrait(const RatMap1& r, const Orbifold1& o, int order = 1);

enum class InfinityClass { PowerLike, ChebyshevLike, LattesLike, Unknown };
struct InfinityVerdict {
    InfinityClass kind = InfinityClass::Unknown;
    std::string signature;            // for LattesLike
    std::vector<PPoint> special;      // totally ramified points, or the marked points
    Orbifold1 orbifold;               // the orbifold that was verified, when any
};
InfinityVerdict classify_infinity(const RatMap1& r, int order = 1);
std::string to_string(InfinityClass k);

// Forward orbit of the critical values; nothing when it leaves the field or exceeds `limit` points.
std::optional<std::vector<PPoint>> postcritical_set(const RatMap1& r, int order = 1, std::size_t limit = 8);

}  // namespace pdyn
