#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pdyn/algebra.hpp"
#include "pdyn/endo2.hpp"

namespace pdyn {

// Intersection number at the origin of {g1 = 0} and {g2 = 0}, in z1, z2.
// 0 when the origin is not a common zero.
int intersection_mult(const MPoly& g1, const MPoly& g2);

// Same, also reporting the shear z1 -> z1 + tau z2 that was used.
std::pair<int, Rational> intersection_mult_with_shear(const MPoly& g1, const MPoly& g2, int skip = 0);

// The shear parameters tried in order: 0, 1, -1, 2, -2, ...
Rational shear_candidate(int k);
constexpr int kShearAttempts = 16;

struct LocalFrame {
    PlaneEndo map;  // map(0) = 0
    Coefficient p1, p2;
};
// z -> f(z + p) - f(p)
LocalFrame local_frame(const PlaneEndo& f, const Coefficient& p1 = Coefficient(0), const Coefficient& p2 = Coefficient(0));
// f at the point [0:0:1] of the line at infinity, in the chart x = w0/w2, y = w1/w2,
// expanded to total degree `truncation`.
LocalFrame infinity_chart(const PlaneEndo& f, int truncation);

int local_degree(const LocalFrame& frame);

struct LemmaReport {
    long left = 0, right = 0;
    bool holds() const { return left == right; }
};
// f = (z1^d u, g) with u(0) != 0 and g(0) = 0
LemmaReport lemma3_sides(const PlaneEndo& f, int order = 1);
bool verify_lemma3(const PlaneEndo& f, int order = 1);
// f(0) = 0 and A smooth at 0, transverse to {z1 = 0}; left is the local degree
LemmaReport lemma4_sides(const PlaneEndo& f, const MPoly& a, int order = 1);
bool verify_lemma4(const PlaneEndo& f, const MPoly& a, int order = 1);

// Newton-polygon data of h(x, y); z1, z2 are read as x, y.
struct NewtonData {
    std::vector<std::pair<int, int>> support;  // (k, l) for x^k y^l
    int d = -1;                                 // degree of h(0, y)
};
NewtonData newton_data(const MPoly& h);
Rational d_alpha(const MPoly& h, const Rational& alpha);
MPoly quasi_part(const MPoly& h, const Rational& alpha);
Rational alpha_exponent(const MPoly& h);

struct Prop2Result {
    Rational alpha;
    MPoly p1, p2;  // in y
    int which = 0;  // 1 power, 2 Chebyshev, 3 Chebyshev with alpha = 2
    Coefficient beta{1}, shift{0};
    std::optional<Coefficient> gamma;  // case 1
    int sign1 = 1, sign2 = 1;          // cases 2 and 3
};
Prop2Result prop2_reduce(const LocalFrame& f1, const LocalFrame& f2, int order = 1);

}  // namespace pdyn
