#pragma once

#include <optional>
#include <string>
#include <utility>

#include "pdyn/algebra.hpp"
#include "pdyn/endo2.hpp"
#include "pdyn/rat1.hpp"

namespace pdyn {

enum class ChebyshevKind { Classical, Monic };  // T_d(cos t) = cos dt, and 2 T_d(x/2)

MPoly chebyshev(int d, ChebyshevKind kind, const std::string& var = "x");

// Signs are +1 or -1.
struct Ex1Params {
    int d1 = 2, d2 = 3;
    Coefficient lambda{1};
    int sign1 = 1, sign2 = 1;
};
std::pair<PlaneEndo, PlaneEndo> ex1(const Ex1Params& p);

enum class Ex2Variant { Straight, Swap };
struct Ex2Params {
    int d = 2;
    Ex2Variant variant = Ex2Variant::Straight;
    int sign1 = 1, sign2 = 1;  // signs on the two components
};
PlaneEndo ex2(const Ex2Params& p);
// sign rule for commuting pairs +-T_{d1}, +-T_{d2}
bool chebyshev_signs_compatible(int d1, int s1, int d2, int s2);

struct Ex3Result {
    PlaneEndo f1, f2;
    Coefficient lambda1, lambda2, c;
};
// When lambdas are omitted, lambda2 = 1 and lambda1 solves lambda1^(d2-1) = c in the field of `order`.
Ex3Result ex3_lift(const RatMap1& r1, const RatMap1& r2, std::optional<Coefficient> lambda1 = std::nullopt,
                   std::optional<Coefficient> lambda2 = std::nullopt, int order = 1);
// (lambda P(z1, z2), lambda Q(z1, z2)) for the forms of r
PlaneEndo homogeneous_lift(const RatMap1& r, const Coefficient& lambda);

// symmetric polynomial in x, y -> polynomial in e1, e2
MPoly sym_reduce(const MPoly& s);
PlaneEndo ex4_descend(const MPoly& h);

struct EllipticCurve {
    Coefficient a, b;  // y^2 = x^3 + a x + b
};
EllipticCurve make_curve(const Coefficient& a, const Coefficient& b);
RatMap1 elliptic_lattes(const EllipticCurve& c, int n);
Orbifold1 two_torsion_orbifold(const EllipticCurve& c, int order = 1);

// Tags for the four example families.
enum class FamilyKind { Ex1, Ex2, Ex3, Ex4 };
std::string to_string(FamilyKind k);

struct FamilyTag {
    FamilyKind kind = FamilyKind::Ex1;
    Ex1Params ex1;                 // Ex1
    Ex2Params ex2_first, ex2_second;  // Ex2
    std::optional<RatMap1> r1, r2;    // Ex3
    Coefficient lambda1{1}, lambda2{1};
    MPoly h1, h2;                  // Ex4
    std::string describe(int order = 0) const;
};

// The pair built from a tag.
std::pair<PlaneEndo, PlaneEndo> construct(const FamilyTag& tag, int order = 1);

}  // namespace pdyn
