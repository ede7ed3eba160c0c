#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pdyn/algebra.hpp"
#include "pdyn/rat1.hpp"

namespace pdyn {

constexpr long kDefaultDegreeCap = 512;

// Polynomial map (z1, z2) -> (comp1, comp2).
struct PlaneEndo {
    MPoly comp1, comp2;
    int degree = 1;
};

PlaneEndo make_endo(const MPoly& comp1, const MPoly& comp2);
PlaneEndo identity_endo();
bool operator==(const PlaneEndo& a, const PlaneEndo& b);
inline bool operator!=(const PlaneEndo& a, const PlaneEndo& b) { return !(a == b); }
std::string to_string(const PlaneEndo& f, int order = 0);
int field_order(const PlaneEndo& f);

PlaneEndo compose(const PlaneEndo& f, const PlaneEndo& g);  // f after g
bool commutes(const PlaneEndo& f, const PlaneEndo& g);
PlaneEndo iterate(const PlaneEndo& f, unsigned n, long degree_cap = kDefaultDegreeCap);
MPoly pullback(const MPoly& g, const PlaneEndo& f);  // g o f

bool extends_to_p2(const PlaneEndo& f);
RatMap1 restrict_infinity(const PlaneEndo& f);
MPoly jacobian_det(const PlaneEndo& f);

struct CurveDivisor {
    std::vector<std::pair<MPoly, int>> parts;  // monic squarefree components
    int total_degree() const;
};

// Squarefree components of a nonzero polynomial, split along monomial and content
// factors and along field-rational linear factors of one-variable pieces.
std::vector<std::pair<MPoly, int>> curve_components(const MPoly& p, int order = 1);

CurveDivisor critical_divisor(const PlaneEndo& f, int order = 1);
int mult_on_curve(const PlaneEndo& f, const MPoly& g);
bool check_critical_chain(const PlaneEndo& f1, const PlaneEndo& f2);
bool is_invariant_curve(const PlaneEndo& f, const MPoly& g);
// the constant c with g o f = c g^d, when it exists
std::optional<Coefficient> total_invariance_constant(const PlaneEndo& f, const MPoly& g);
bool is_totally_invariant(const PlaneEndo& f, const MPoly& g);
MPoly ramified_square_invariance(const PlaneEndo& f, const MPoly& phi, int order = 1);
MPoly image_curve(const PlaneEndo& f, const MPoly& g);

struct OrbitWitness {
    std::pair<int, int> first, second;  // (n, m) pairs with equal images
};
struct ComponentOrbit {
    MPoly component;
    std::vector<std::pair<std::pair<int, int>, MPoly>> images;  // distinct images in discovery order
    std::vector<OrbitWitness> witnesses;
    bool finite = false;  // the image set is closed under both maps
};
struct OrbitReport {
    std::vector<ComponentOrbit> components;
    bool all_finite() const;
};
OrbitReport critical_orbit_finite(const PlaneEndo& f1, const PlaneEndo& f2, int bound, long degree_cap = kDefaultDegreeCap,
                                  int order = 1);

struct InvariantLine {
    MPoly line;
    bool totally_invariant = false;
};
struct ExceptionalReport {
    std::vector<InvariantLine> affine_lines;
    bool includes_infinity = false;
    bool positive_dimensional = false;  // a one-parameter family of invariant lines was skipped
};
ExceptionalReport invariant_lines(const PlaneEndo& f, int order = 1);

// Normalization used for curve equality: leading graded-lex coefficient 1.
MPoly normalize_curve(const MPoly& g);

}  // namespace pdyn
