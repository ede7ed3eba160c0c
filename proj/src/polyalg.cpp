#include <algorithm>

#include "pdyn/algebra.hpp"

namespace pdyn {

namespace {

bool univariate_in(const MPoly& a, const MPoly& b, const std::string& v) {
    for (const auto& x : a.vars())
        if (x != v) return false;
    for (const auto& x : b.vars())
        if (x != v) return false;
    return true;
}

using UPoly = std::vector<Coefficient>;

UPoly to_upoly(const MPoly& p, const std::string& v) {
    auto cs = p.coeffs_in(v);
    UPoly out;
    out.reserve(cs.size());
    for (const auto& c : cs) out.push_back(c.constant_value());
    return out;
}

void utrim(UPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

MPoly from_upoly(const UPoly& p, const std::string& v) {
    MPoly::Terms t;
    for (std::size_t k = 0; k < p.size(); ++k)
        if (!p[k].is_zero()) t.emplace(Exponent{static_cast<std::uint32_t>(k), 0, 0, 0}, p[k]);
    return MPoly({v}, std::move(t));
}

// remainder of a by b over the field, b nonzero
UPoly urem(UPoly a, const UPoly& b) {
    utrim(a);
    std::size_t db = b.size() - 1;
    Coefficient inv = b.back().inverse();
    while (a.size() >= b.size()) {
        Coefficient c = a.back() * inv;
        std::size_t s = a.size() - b.size();
        for (std::size_t k = 0; k <= db; ++k) a[s + k] -= c * b[k];
        a.pop_back();
        utrim(a);
    }
    return a;
}

UPoly ugcd(UPoly a, UPoly b) {
    utrim(a);
    utrim(b);
    while (!b.empty()) {
        UPoly r = urem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return a;
    Coefficient inv = a.back().inverse();
    for (auto& c : a) c *= inv;
    return a;
}

std::string main_var(const MPoly& a, const MPoly& b) {
    auto vs = merge_vars(a.vars(), b.vars());
    return vs.front();
}

// pseudo-remainder of a by b in v (dense coefficient vectors free of v)
std::vector<MPoly> prem(std::vector<MPoly> a, const std::vector<MPoly>& b) {
    std::size_t db = b.size() - 1;
    const MPoly& lb = b.back();
    int e = static_cast<int>(a.size()) - static_cast<int>(b.size()) + 1;
    while (a.size() >= b.size()) {
        MPoly lr = a.back();
        std::size_t s = a.size() - b.size();
        for (auto& x : a) x = x * lb;
        for (std::size_t k = 0; k <= db; ++k) a[s + k] -= lr * b[k];
        a.pop_back();
        while (!a.empty() && a.back().is_zero()) a.pop_back();
        --e;
    }
    if (e > 0) {
        MPoly f = lb.pow(static_cast<unsigned>(e));
        for (auto& x : a) x = x * f;
    }
    return a;
}

MPoly primitive_part(const MPoly& p, const std::string& v) {
    return exact_divide(p, content_in(p, v));
}

MPoly subresultant_gcd(const MPoly& pa, const MPoly& pb, const std::string& v) {
    std::vector<MPoly> A = pa.coeffs_in(v), B = pb.coeffs_in(v);
    if (A.size() < B.size()) std::swap(A, B);
    MPoly g(1), h(1);
    while (true) {
        int d = static_cast<int>(A.size()) - static_cast<int>(B.size());
        std::vector<MPoly> R = prem(A, B);
        if (R.empty()) return primitive_part(MPoly::from_coeffs(v, B), v);
        if (R.size() == 1) return MPoly(1);
        MPoly div = g * h.pow(static_cast<unsigned>(d));
        for (auto& x : R) x = exact_divide(x, div);
        A = std::move(B);
        B = std::move(R);
        g = A.back();
        if (d == 0) {
        } else if (d == 1) {
            h = g;
        } else {
            h = exact_divide(g.pow(static_cast<unsigned>(d)), h.pow(static_cast<unsigned>(d - 1)));
        }
    }
}

}  // namespace

MPoly exact_divide(const MPoly& a, const MPoly& b) {
    if (b.is_zero()) throw DivisionByZero("exact_divide by zero");
    if (a.is_zero()) return MPoly();
    if (b.is_constant()) return a.scaled(b.constant_value().inverse());
    const std::string v = b.vars().front();
    if (!a.has_var(v)) throw NotDivisible(a.to_string() + " by " + b.to_string());
    std::vector<MPoly> A = a.coeffs_in(v), B = b.coeffs_in(v);
    if (A.size() < B.size()) throw NotDivisible(a.to_string() + " by " + b.to_string());
    std::size_t db = B.size() - 1;
    std::vector<MPoly> Q(A.size() - db);
    for (std::size_t k = A.size(); k-- > db;) {
        if (A[k].is_zero()) continue;
        MPoly q = exact_divide(A[k], B[db]);
        for (std::size_t j = 0; j <= db; ++j) A[k - db + j] -= q * B[j];
        Q[k - db] = std::move(q);
    }
    for (std::size_t j = 0; j < db; ++j)
        if (!A[j].is_zero()) throw NotDivisible(a.to_string() + " by " + b.to_string());
    return MPoly::from_coeffs(v, Q);
}

bool divides(const MPoly& b, const MPoly& a) {
    try {
        exact_divide(a, b);
        return true;
    } catch (const NotDivisible&) {
        return false;
    }
}

MPoly content_in(const MPoly& p, const std::string& v) {
    if (p.is_zero()) return MPoly();
    if (!p.has_var(v)) return p.monic();
    auto cs = p.coeffs_in(v);
    MPoly g;
    for (const auto& c : cs) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c.monic() : gcd_poly(g, c);
        if (g.is_constant()) return MPoly(1);
    }
    return g;
}

MPoly gcd_poly(const MPoly& a, const MPoly& b) {
    if (a.is_zero() && b.is_zero()) throw PreconditionViolated("gcd of two zero polynomials");
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return MPoly(1);
    std::string v = main_var(a, b);
    if (univariate_in(a, b, v)) return from_upoly(ugcd(to_upoly(a, v), to_upoly(b, v)), v).monic();
    if (!a.has_var(v)) return gcd_poly(a, content_in(b, v));
    if (!b.has_var(v)) return gcd_poly(content_in(a, v), b);
    MPoly ca = content_in(a, v), cb = content_in(b, v);
    MPoly pa = exact_divide(a, ca), pb = exact_divide(b, cb);
    MPoly gc = gcd_poly(ca, cb);
    MPoly pg = subresultant_gcd(pa, pb, v);
    return (gc * pg).monic();
}

MPoly SquarefreeDecomposition::expand() const {
    MPoly r(unit);
    for (const auto& [f, m] : factors) r *= f.pow(static_cast<unsigned>(m));
    return r;
}

namespace {

void yun(const MPoly& pp, const std::string& v, std::vector<std::pair<MPoly, int>>& out) {
    MPoly b = pp.derivative(v);
    MPoly a0 = gcd_poly(pp, b);
    MPoly c = exact_divide(pp, a0);
    MPoly d = exact_divide(b, a0) - c.derivative(v);
    int i = 1;
    while (c.degree_in(v) > 0) {
        MPoly a = gcd_poly(c, d);
        if (!a.is_constant()) out.emplace_back(a.monic(), i);
        c = exact_divide(c, a);
        d = exact_divide(d, a) - c.derivative(v);
        ++i;
    }
}

void sqf_rec(MPoly q, std::vector<std::pair<MPoly, int>>& out) {
    if (q.is_constant()) return;
    const auto vs = q.vars();
    Exponent mins{0, 0, 0, 0};
    bool first = true;
    for (const auto& [e, c] : q.terms()) {
        for (std::size_t i = 0; i < vs.size(); ++i) mins[i] = first ? e[i] : std::min(mins[i], e[i]);
        first = false;
    }
    if (mins != Exponent{0, 0, 0, 0}) {
        MPoly::Terms t;
        for (const auto& [e, c] : q.terms()) {
            Exponent ne = e;
            for (std::size_t i = 0; i < 4; ++i) ne[i] -= mins[i];
            t.emplace(ne, c);
        }
        for (std::size_t i = 0; i < vs.size(); ++i)
            if (mins[i]) out.emplace_back(MPoly::var(vs[i]), static_cast<int>(mins[i]));
        q = MPoly(vs, std::move(t));
        if (q.is_constant()) return;
    }
    const std::string v = q.vars().front();
    MPoly c = content_in(q, v);
    MPoly pp = exact_divide(q, c);
    sqf_rec(c, out);
    if (pp.degree_in(v) > 0) yun(pp, v, out);
}

}  // namespace

SquarefreeDecomposition squarefree_decompose(const MPoly& p) {
    if (p.is_zero()) throw PreconditionViolated("squarefree decomposition of zero");
    SquarefreeDecomposition sd;
    sd.unit = p.leading_coeff();
    sqf_rec(p.monic(), sd.factors);
    return sd;
}

MPoly squarefree_part(const MPoly& p) {
    if (p.is_zero()) return p;
    MPoly r(1);
    for (const auto& [f, m] : squarefree_decompose(p).factors) r *= f;
    return r;
}

MPoly determinant(std::vector<std::vector<MPoly>> m) {
    std::size_t n = m.size();
    if (n == 0) return MPoly(1);
    bool neg = false;
    MPoly prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k].is_zero()) ++piv;
            if (piv == n) return MPoly();
            std::swap(m[k], m[piv]);
            neg = !neg;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                MPoly t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = prev.is_constant() && prev.constant_value().is_one() ? t : exact_divide(t, prev);
            }
            m[i][k] = MPoly();
        }
        prev = m[k][k];
    }
    return neg ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

namespace {

MPoly sylvester_det(const std::vector<MPoly>& a, const std::vector<MPoly>& b) {
    // a, b: coefficient lists from the top degree down
    std::size_t m = a.size() - 1, n = b.size() - 1, sz = m + n;
    std::vector<std::vector<MPoly>> s(sz, std::vector<MPoly>(sz));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k <= m; ++k) s[r][r + k] = a[k];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t k = 0; k <= n; ++k) s[n + r][r + k] = b[k];
    return determinant(std::move(s));
}

}  // namespace

MPoly resultant(const MPoly& a, const MPoly& b, const std::string& var) {
    if (a.is_zero() && b.is_zero()) throw BothZero("resultant of two zero polynomials");
    if (a.is_zero() || b.is_zero()) return MPoly();
    int m = a.degree_in(var), n = b.degree_in(var);
    if (m == 0 && n == 0) return MPoly(1);
    if (m == 0) return a.pow(static_cast<unsigned>(n));
    if (n == 0) return b.pow(static_cast<unsigned>(m));
    auto ca = a.coeffs_in(var), cb = b.coeffs_in(var);
    std::reverse(ca.begin(), ca.end());
    std::reverse(cb.begin(), cb.end());
    return sylvester_det(ca, cb);
}

MPoly form_resultant(const MPoly& a, const MPoly& b, const std::string& v1, const std::string& v2, int da, int db) {
    if (a.is_zero() && b.is_zero()) throw BothZero("resultant of two zero forms");
    if (a.is_zero() || b.is_zero()) return MPoly();
    // coefficient of v1^(d-k) v2^k for k = 0..d
    auto coeffs = [&](const MPoly& f, int d) {
        std::vector<MPoly> out(static_cast<std::size_t>(d) + 1);
        auto c2 = f.coeffs_in(v2);
        for (int k = 0; k <= d; ++k) {
            if (static_cast<std::size_t>(k) >= c2.size()) continue;
            auto c1 = c2[k].coeffs_in(v1);
            std::size_t p = static_cast<std::size_t>(d - k);
            if (p < c1.size()) out[k] = c1[p];
        }
        return out;
    };
    if (da == 0 && db == 0) return MPoly(1);
    if (da == 0) return a.pow(static_cast<unsigned>(db));
    if (db == 0) return b.pow(static_cast<unsigned>(da));
    return sylvester_det(coeffs(a, da), coeffs(b, db));
}

MPoly poly_sqrt(const MPoly& p, int order) {
    if (p.is_zero()) throw PreconditionViolated("square root of zero");
    auto sd = squarefree_decompose(p);
    MPoly w(1);
    for (const auto& [f, m] : sd.factors) {
        if (m % 2) throw NotASquare(p.to_string());
        w *= f.pow(static_cast<unsigned>(m / 2));
    }
    auto roots = nth_roots(sd.unit, 2, static_cast<int>(lcm_order(order, p.field_order())));
    if (roots.empty()) throw NotASquare(p.to_string());
    w = w.scaled(roots.front());
    if (w.leading_coeff().sign_hint() < 0) w = -w;
    if (w * w != p) throw NotASquare(p.to_string());
    return w;
}

}  // namespace pdyn
