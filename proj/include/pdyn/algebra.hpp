#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pdyn/errors.hpp"

namespace pdyn {

using Integer = mpz_class;
using Rational = mpq_class;

int euler_phi(int n);
long lcm_order(long a, long b);

// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<Integer>& cyclotomic_coeffs(int n);

// Element of Q(zeta_N) stored as a residue modulo the N-th cyclotomic polynomial.
// Rational values are always kept at order 1.
class Coefficient {
public:
    Coefficient();
    Coefficient(long v);
    Coefficient(const Rational& q);
    Coefficient(int order, std::vector<Rational> residue);

    static Coefficient zeta(int order, long k = 1);

    int order() const { return order_; }
    const std::vector<Rational>& residue() const { return r_; }
    bool is_zero() const { return order_ == 1 && r_[0] == 0; }
    bool is_one() const { return order_ == 1 && r_[0] == 1; }
    bool is_rational() const { return order_ == 1; }
    const Rational& rational() const { return r_[0]; }

    Coefficient lift(int order) const;
    Coefficient inverse() const;
    Coefficient pow(long e) const;
    Coefficient operator-() const;

    Coefficient& operator+=(const Coefficient& o);
    Coefficient& operator-=(const Coefficient& o);
    Coefficient& operator*=(const Coefficient& o);

    friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
    friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
    friend Coefficient operator*(Coefficient a, const Coefficient& b) { return a *= b; }
    friend Coefficient operator/(const Coefficient& a, const Coefficient& b) { return a * b.inverse(); }
    friend bool operator==(const Coefficient& a, const Coefficient& b);
    friend bool operator!=(const Coefficient& a, const Coefficient& b) { return !(a == b); }

    // Total order used only for deterministic sorting.
    int compare(const Coefficient& o) const;

    // Sign of the first nonzero residue component (0 for zero).
    int sign_hint() const;

    // Rendered as a sum of rational multiples of powers of w, w = zeta_M.
    // M defaults to the own order; otherwise it must be a multiple of it.
    std::string to_string(int order = 0) const;

private:
    void reduce();
    int order_ = 1;
    std::vector<Rational> r_{Rational(0)};
};

using Exponent = std::array<std::uint32_t, 4>;

struct GrlexGreater {
    bool operator()(const Exponent& a, const Exponent& b) const {
        std::uint32_t sa = a[0] + a[1] + a[2] + a[3], sb = b[0] + b[1] + b[2] + b[3];
        if (sa != sb) return sa > sb;
        return a > b;
    }
};

// Ordering of variable names: z1 z2 x y s t e1 e2 y1 y2 u v, then lexicographic.
bool var_less(const std::string& a, const std::string& b);

class MPoly {
public:
    using Terms = std::map<Exponent, Coefficient, GrlexGreater>;

    MPoly() = default;
    MPoly(long c) : MPoly(Coefficient(c)) {}
    MPoly(const Rational& c) : MPoly(Coefficient(c)) {}
    MPoly(const Coefficient& c);
    MPoly(std::vector<std::string> vars, Terms terms);

    static MPoly var(const std::string& name);
    static MPoly monomial(const Coefficient& c, const std::vector<std::pair<std::string, unsigned>>& powers);

    const std::vector<std::string>& vars() const { return vars_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return vars_.empty(); }
    bool has_var(const std::string& v) const;
    Coefficient constant_value() const;  // requires is_constant()

    int total_degree() const;  // -1 for zero
    int degree_in(const std::string& v) const;
    Coefficient leading_coeff() const;
    Exponent leading_exponent() const;
    Coefficient coeff(const std::vector<std::pair<std::string, unsigned>>& powers) const;

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend bool operator==(const MPoly& a, const MPoly& b);
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    MPoly scaled(const Coefficient& c) const;
    MPoly pow(unsigned e) const;
    MPoly derivative(const std::string& v) const;
    MPoly homogeneous_part(int degree) const;
    MPoly monic() const;                // leading graded-lex coefficient 1
    MPoly rename(const std::map<std::string, std::string>& names) const;

    // Dense coefficient list in v (index = power); coefficients free of v.
    std::vector<MPoly> coeffs_in(const std::string& v) const;
    static MPoly from_coeffs(const std::string& v, const std::vector<MPoly>& cs);

    // lcm of the coefficient orders (1 for rational polynomials).
    int field_order() const;

    std::string to_string(int order = 0) const;

    // Same terms, expressed over a superset of variables (in var_less order).
    Terms terms_over(const std::vector<std::string>& vars) const;

private:
    void prune();
    std::vector<std::string> vars_;
    Terms terms_;
};

std::vector<std::string> merge_vars(const std::vector<std::string>& a, const std::vector<std::string>& b);

MPoly cyclotomic_polynomial(int n, const std::string& var = "x");

enum class RingOp { Add, Sub, Mul };
MPoly ring_arith(const MPoly& a, const MPoly& b, RingOp op);

MPoly substitute(const MPoly& p, const std::map<std::string, MPoly>& bindings);

MPoly exact_divide(const MPoly& a, const MPoly& b);
bool divides(const MPoly& b, const MPoly& a);

MPoly gcd_poly(const MPoly& a, const MPoly& b);

// Content with respect to v (a polynomial free of v), normalized.
MPoly content_in(const MPoly& p, const std::string& v);

struct SquarefreeDecomposition {
    Coefficient unit;
    std::vector<std::pair<MPoly, int>> factors;
    MPoly expand() const;
};
SquarefreeDecomposition squarefree_decompose(const MPoly& p);
MPoly squarefree_part(const MPoly& p);

MPoly resultant(const MPoly& a, const MPoly& b, const std::string& var);

// Resultant of two binary forms in (v1, v2) taken at formal degrees da, db.
MPoly form_resultant(const MPoly& a, const MPoly& b, const std::string& v1, const std::string& v2, int da, int db);

// Square root in the field of lcm(order, field_order(p)).
MPoly poly_sqrt(const MPoly& p, int order = 1);

// Determinant by fraction-free elimination; entries may be polynomials.
MPoly determinant(std::vector<std::vector<MPoly>> m);

// Roots in Q(zeta_N) of a univariate polynomial in v, N = field_order lifted by extra_order.
std::vector<Coefficient> field_roots(const MPoly& p, const std::string& v, int extra_order = 1);

// All b in the field of the given order with b^n = a.
std::vector<Coefficient> nth_roots(const Coefficient& a, int n, int order = 1);

// Roots of unity in Q(zeta_N): the cyclic group of order lcm(2, N).
std::vector<Coefficient> roots_of_unity(int order);

}  // namespace pdyn
