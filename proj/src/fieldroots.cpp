#include <algorithm>
#include <numeric>

#include "pdyn/algebra.hpp"

namespace pdyn {

namespace {

using i64 = long;

i64 powmod(i64 b, i64 e, i64 m) {
    i64 r = 1 % m;
    b %= m;
    if (b < 0) b += m;
    while (e) {
        if (e & 1) r = static_cast<i64>(static_cast<__int128>(r) * b % m);
        b = static_cast<i64>(static_cast<__int128>(b) * b % m);
        e >>= 1;
    }
    return r;
}

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<int> prime_factors(int n) {
    std::vector<int> out;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) out.push_back(n);
    return out;
}

i64 mod_of(const Integer& z, i64 p) {
    Integer r = z % p;
    if (r < 0) r += p;
    return r.get_si();
}

// a polynomial over F_p, constant first
using FPoly = std::vector<i64>;

void ftrim(FPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

FPoly frem(FPoly a, const FPoly& b, i64 p) {
    ftrim(a);
    i64 inv = powmod(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
        i64 c = a.back() * inv % p;
        std::size_t s = a.size() - b.size();
        for (std::size_t k = 0; k < b.size(); ++k) a[s + k] = ((a[s + k] - c * b[k]) % p + p) % p;
        a.pop_back();
        ftrim(a);
    }
    return a;
}

std::size_t fgcd_degree(FPoly a, FPoly b, i64 p) {
    ftrim(a);
    ftrim(b);
    while (!b.empty()) {
        FPoly r = frem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a.empty() ? 0 : a.size() - 1;
}

// monic polynomial with coefficients in Z[zeta]; coefficient k is a vector of phi integers
struct IntPoly {
    std::vector<std::vector<Integer>> c;
};

Integer eval_coord(const std::vector<Integer>& coords, const Integer& r, const Integer& m) {
    Integer acc = 0;
    for (std::size_t i = coords.size(); i-- > 0;) acc = (acc * r + coords[i]) % m;
    if (acc < 0) acc += m;
    return acc;
}

Integer inv_mod(const Integer& a, const Integer& m) {
    Integer r;
    mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

// Solve a Vandermonde system sum_i x_i r_j^i = y_j modulo m.
std::vector<Integer> vandermonde_solve(const std::vector<Integer>& r, const std::vector<Integer>& y, const Integer& m) {
    std::size_t n = r.size();
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n + 1));
    for (std::size_t j = 0; j < n; ++j) {
        Integer pw = 1;
        for (std::size_t i = 0; i < n; ++i) {
            a[j][i] = pw;
            pw = pw * r[j] % m;
        }
        a[j][n] = y[j] % m;
    }
    for (std::size_t k = 0; k < n; ++k) {
        Integer iv = inv_mod(a[k][k], m);
        for (std::size_t c = k; c <= n; ++c) a[k][c] = a[k][c] * iv % m;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k] == 0) continue;
            Integer f = a[i][k];
            for (std::size_t c = k; c <= n; ++c) {
                a[i][c] = (a[i][c] - f * a[k][c]) % m;
                if (a[i][c] < 0) a[i][c] += m;
            }
        }
    }
    std::vector<Integer> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
    return x;
}

Integer symmetric(const Integer& a, const Integer& m) {
    Integer r = a % m;
    if (r < 0) r += m;
    if (2 * r > m) r -= m;
    return r;
}

}  // namespace

std::vector<Coefficient> field_roots(const MPoly& poly, const std::string& v, int extra_order) {
    for (const auto& x : poly.vars())
        if (x != v) throw PreconditionViolated("field_roots expects a univariate polynomial");
    if (poly.is_zero()) throw PreconditionViolated("roots of the zero polynomial");
    const int N = static_cast<int>(lcm_order(poly.field_order(), extra_order));
    MPoly sq = poly.degree_in(v) > 0 ? exact_divide(poly, gcd_poly(poly, poly.derivative(v))) : poly;
    sq = sq.monic();
    int n = sq.degree_in(v);
    std::vector<Coefficient> out;
    if (n <= 0) return out;
    auto cs = sq.coeffs_in(v);
    if (n == 1) {
        out.push_back(-cs[0].constant_value());
        return out;
    }
    const int phi = euler_phi(N);
    // coordinates of each coefficient at order N
    std::vector<std::vector<Rational>> rc(cs.size());
    Integer den = 1;
    for (std::size_t k = 0; k < cs.size(); ++k) {
        Coefficient c = cs[k].constant_value();
        std::vector<Rational> r;
        if (c.is_rational()) {
            r.assign(phi, 0);
            r[0] = c.rational();
        } else {
            r = c.lift(N).residue();
        }
        for (auto& x : r) den = lcm(den, Integer(x.get_den()));
        rc[k] = std::move(r);
    }
    // Y = den * X gives a monic polynomial with coefficients in Z[zeta]
    IntPoly Q;
    Q.c.resize(cs.size());
    Integer scale = 1;
    for (std::size_t k = cs.size(); k-- > 0;) {
        Q.c[k].resize(phi);
        for (int i = 0; i < phi; ++i) {
            Rational t = rc[k][i] * scale;
            Q.c[k][i] = t.get_num() / t.get_den();
        }
        scale *= den;
    }
    Integer height = 1;
    for (const auto& c : Q.c) {
        Integer s = 0;
        for (const auto& x : c) s += abs(x);
        height = std::max(height, s);
    }
    const auto& cyc = cyclotomic_coeffs(N);

    // choose a prime p = 1 mod N that keeps everything separable
    i64 p = 0, r0 = 0;
    std::vector<i64> embed;
    std::vector<std::vector<i64>> froots;
    for (i64 cand = (1000 / N + 1) * N + 1;; cand += N) {
        if (!is_prime(cand)) continue;
        i64 g = 0;
        for (i64 h = 2; h < cand; ++h) {
            i64 t = powmod(h, (cand - 1) / N, cand);
            bool ok = true;
            for (int q : prime_factors(N))
                if (powmod(t, N / q, cand) == 1) ok = false;
            if (N == 1) ok = (t == 1);
            if (ok) {
                g = t;
                break;
            }
        }
        std::vector<i64> em;
        for (int k = 1; k <= N; ++k)
            if (std::gcd(k, N) == 1) em.push_back(powmod(g, k, cand));
        bool good = true;
        std::vector<std::vector<i64>> fr;
        for (i64 e : em) {
            FPoly f(Q.c.size());
            for (std::size_t k = 0; k < Q.c.size(); ++k) {
                i64 acc = 0;
                for (int i = phi; i-- > 0;) acc = (acc * e + mod_of(Q.c[k][i], cand)) % cand;
                f[k] = acc;
            }
            FPoly df(f.size() > 1 ? f.size() - 1 : 1, 0);
            for (std::size_t k = 1; k < f.size(); ++k) df[k - 1] = f[k] * static_cast<i64>(k) % cand;
            if (fgcd_degree(f, df, cand) != 0) {
                good = false;
                break;
            }
            std::vector<i64> roots;
            for (i64 x = 0; x < cand; ++x) {
                i64 acc = 0;
                for (std::size_t k = f.size(); k-- > 0;) acc = (acc * x + f[k]) % cand;
                if (acc == 0) roots.push_back(x);
            }
            fr.push_back(std::move(roots));
        }
        if (!good) continue;
        p = cand;
        r0 = g;
        embed = std::move(em);
        froots = std::move(fr);
        break;
    }
    (void)r0;
    for (const auto& fr : froots)
        if (fr.empty()) return out;

    // coordinate bound for algebraic-integer roots, with a generous margin
    Integer bound = (height + 1) * (Integer(1) << (2 * phi + 64)) * phi;
    Integer modulus = p;
    int prec = 1;
    while (modulus <= 2 * bound * bound) {
        modulus *= modulus;
        prec *= 2;
    }
    // lift the embedding points (roots of the cyclotomic polynomial)
    std::vector<Integer> R(embed.begin(), embed.end());
    auto lift_root = [&](Integer x, auto&& evalf, auto&& evald) {
        Integer m = p;
        for (int k = 1; k < prec; k *= 2) {
            m = m * m;
            Integer fx = evalf(x, m), dx = evald(x, m);
            x = (x - fx * inv_mod(dx, m)) % m;
            if (x < 0) x += m;
        }
        return x;
    };
    for (auto& x : R) {
        auto f = [&](const Integer& t, const Integer& m) {
            Integer acc = 0;
            for (std::size_t k = cyc.size(); k-- > 0;) acc = (acc * t + cyc[k]) % m;
            return acc;
        };
        auto d = [&](const Integer& t, const Integer& m) {
            Integer acc = 0;
            for (std::size_t k = cyc.size(); k-- > 1;) acc = (acc * t + cyc[k] * static_cast<long>(k)) % m;
            return acc;
        };
        x = lift_root(x, f, d);
    }
    // lift roots of each embedded polynomial
    std::vector<std::vector<Integer>> lifted(embed.size());
    for (std::size_t j = 0; j < embed.size(); ++j) {
        for (i64 r : froots[j]) {
            auto f = [&](const Integer& t, const Integer& m) {
                Integer acc = 0;
                for (std::size_t k = Q.c.size(); k-- > 0;) acc = (acc * t + eval_coord(Q.c[k], R[j] % m, m)) % m;
                return acc;
            };
            auto d = [&](const Integer& t, const Integer& m) {
                Integer acc = 0;
                for (std::size_t k = Q.c.size(); k-- > 1;)
                    acc = (acc * t + eval_coord(Q.c[k], R[j] % m, m) * static_cast<long>(k)) % m;
                return acc;
            };
            lifted[j].push_back(lift_root(Integer(r), f, d));
        }
    }
    MPoly sqY;
    {
        std::vector<MPoly> qc;
        for (const auto& c : Q.c) {
            std::vector<Rational> r(c.begin(), c.end());
            qc.push_back(MPoly(Coefficient(N, r)));
        }
        sqY = MPoly::from_coeffs(v, qc);
    }
    std::vector<std::size_t> idx(embed.size(), 0);
    while (true) {
        std::vector<Integer> y(embed.size());
        for (std::size_t j = 0; j < embed.size(); ++j) y[j] = lifted[j][idx[j]];
        auto coords = vandermonde_solve(R, y, modulus);
        std::vector<Rational> rr;
        for (auto& c : coords) rr.emplace_back(symmetric(c, modulus));
        Coefficient cand(N, rr);
        MPoly val = substitute(sqY, {{v, MPoly(cand)}});
        if (val.is_zero()) out.push_back(cand * Coefficient(Rational(1) / Rational(den)));
        std::size_t j = 0;
        while (j < idx.size() && ++idx[j] == lifted[j].size()) idx[j++] = 0;
        if (j == idx.size()) break;
    }
    std::sort(out.begin(), out.end(), [](const Coefficient& a, const Coefficient& b) { return a.compare(b) < 0; });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Coefficient> nth_roots(const Coefficient& a, int n, int order) {
    if (n < 1) throw PreconditionViolated("root index must be positive");
    if (a.is_zero()) return {Coefficient()};
    int N = static_cast<int>(lcm_order(order, a.order()));
    if (n == 1) return {a};
    MPoly x = MPoly::var("x");
    MPoly p = x.pow(static_cast<unsigned>(n)) - MPoly(a);
    return field_roots(p, "x", N);
}

}  // namespace pdyn
