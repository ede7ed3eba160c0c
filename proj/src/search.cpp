// Grid search for commuting pairs: top forms are matched first, lower
// homogeneous layers are then solved one at a time as linear systems.
#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>
#include <sstream>

#include "pdyn/classify.hpp"

namespace pdyn {

namespace {

using I64 = long long;

I64 mul_ck(I64 a, I64 b) {
    I64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw PreconditionViolated("coefficient overflow in grid arithmetic");
    return r;
}
I64 add_ck(I64 a, I64 b) {
    I64 r;
    if (__builtin_add_overflow(a, b, &r)) throw PreconditionViolated("coefficient overflow in grid arithmetic");
    return r;
}

// dense z1^i z2^j coefficients for i + j <= n
struct Dense {
    int n = 0;
    std::vector<I64> a;
    explicit Dense(int n_ = 0) : n(n_), a(static_cast<std::size_t>((n_ + 1) * (n_ + 1)), 0) {}
    I64& at(int i, int j) { return a[static_cast<std::size_t>(i * (n + 1) + j)]; }
    I64 at(int i, int j) const { return a[static_cast<std::size_t>(i * (n + 1) + j)]; }
    bool operator==(const Dense& o) const { return a == o.a; }
};

Dense mul(const Dense& x, const Dense& y) {
    Dense r(x.n);
    for (int i = 0; i <= x.n; ++i)
        for (int j = 0; i + j <= x.n; ++j) {
            I64 c = x.at(i, j);
            if (!c) continue;
            for (int k = 0; i + k <= x.n; ++k)
                for (int l = 0; i + j + k + l <= x.n; ++l) {
                    I64 e = y.at(k, l);
                    if (e) r.at(i + k, j + l) = add_ck(r.at(i + k, j + l), mul_ck(c, e));
                }
        }
    return r;
}

// index of z1^i z2^j among monomials of degree <= d, top degree first, z1 power descending
int mono_index(int d, int i, int j) {
    int k = i + j, before = 0;
    for (int kk = d; kk > k; --kk) before += kk + 1;
    return before + (k - i);
}

std::vector<std::pair<int, int>> monomials_upto(int d) {
    std::vector<std::pair<int, int>> out;
    for (int k = d; k >= 0; --k)
        for (int i = k; i >= 0; --i) out.push_back({i, k - i});
    return out;
}

struct IMap {
    int d = 0;
    std::vector<I64> c[2];
    explicit IMap(int d_ = 0) : d(d_) {
        std::size_t n = static_cast<std::size_t>((d + 1) * (d + 2) / 2);
        c[0].assign(n, 0);
        c[1].assign(n, 0);
    }
    std::vector<I64> key() const {
        std::vector<I64> k = c[0];
        k.insert(k.end(), c[1].begin(), c[1].end());
        return k;
    }
    std::vector<I64> top_key() const {
        std::vector<I64> k(c[0].begin(), c[0].begin() + d + 1);
        k.insert(k.end(), c[1].begin(), c[1].begin() + d + 1);
        return k;
    }
};

Dense to_dense(const IMap& f, int comp, int n) {
    Dense r(n);
    auto mons = monomials_upto(f.d);
    for (std::size_t k = 0; k < mons.size(); ++k) r.at(mons[k].first, mons[k].second) = f.c[comp][k];
    return r;
}

// p(q1, q2), all in the degree bound of q
Dense substitute_dense(const Dense& p, const Dense& q1, const Dense& q2, int pdeg) {
    int n = q1.n;
    std::vector<Dense> pw1{Dense(n)}, pw2{Dense(n)};
    pw1[0].at(0, 0) = 1;
    pw2[0].at(0, 0) = 1;
    for (int k = 1; k <= pdeg; ++k) {
        pw1.push_back(mul(pw1.back(), q1));
        pw2.push_back(mul(pw2.back(), q2));
    }
    Dense r(n);
    for (int i = 0; i <= pdeg; ++i)
        for (int j = 0; i + j <= pdeg; ++j) {
            I64 c = p.at(i, j);
            if (!c) continue;
            Dense t = mul(pw1[i], pw2[j]);
            for (std::size_t k = 0; k < r.a.size(); ++k) r.a[k] = add_ck(r.a[k], mul_ck(c, t.a[k]));
        }
    return r;
}

std::array<Dense, 2> compose_dense(const IMap& f, const IMap& g, int n) {
    Dense g1 = to_dense(g, 0, n), g2 = to_dense(g, 1, n);
    return {substitute_dense(to_dense(f, 0, n), g1, g2, f.d), substitute_dense(to_dense(f, 1, n), g1, g2, f.d)};
}

Dense derivative(const Dense& p, int var) {
    Dense r(p.n);
    for (int i = 0; i <= p.n; ++i)
        for (int j = 0; i + j <= p.n; ++j) {
            I64 c = p.at(i, j);
            if (!c) continue;
            if (var == 0 && i > 0) r.at(i - 1, j) = mul_ck(c, i);
            if (var == 1 && j > 0) r.at(i, j - 1) = mul_ck(c, j);
        }
    return r;
}

IMap coord_swap(const IMap& f) {
    IMap r(f.d);
    auto mons = monomials_upto(f.d);
    for (std::size_t k = 0; k < mons.size(); ++k) {
        auto [i, j] = mons[k];
        std::size_t src = static_cast<std::size_t>(mono_index(f.d, j, i));
        r.c[0][k] = f.c[1][src];
        r.c[1][k] = f.c[0][src];
    }
    return r;
}

MPoly to_mpoly(const IMap& f, int comp) {
    MPoly::Terms t;
    auto mons = monomials_upto(f.d);
    for (std::size_t k = 0; k < mons.size(); ++k) {
        I64 c = f.c[comp][k];
        if (!c) continue;
        t[Exponent{static_cast<std::uint32_t>(mons[k].first), static_cast<std::uint32_t>(mons[k].second), 0, 0}] = Coefficient(static_cast<long>(c));
    }
    return MPoly({"z1", "z2"}, t);
}

PlaneEndo to_endo(const IMap& f) { return make_endo(to_mpoly(f, 0), to_mpoly(f, 1)); }

// Solutions of M u = b restricted to values in the grid, for a fixed M.
struct LayerSolver {
    std::size_t rows = 0, cols = 0;
    std::vector<std::size_t> pivots, free_cols;
    std::vector<std::vector<I64>> pivot_rhs;   // integer multiple of E restricted to pivot rows
    std::vector<std::vector<I64>> pivot_free;  // coefficients of free unknowns
    std::vector<I64> pivot_den;
    std::vector<std::vector<I64>> consistency;

    LayerSolver() = default;
    LayerSolver(const std::vector<std::vector<I64>>& m, std::size_t ncols) : rows(m.size()), cols(ncols) {
        std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols + rows));
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < cols; ++j) a[i][j] = Rational(static_cast<long>(m[i][j]));
            a[i][cols + i] = 1;
        }
        std::size_t r = 0;
        std::vector<bool> is_pivot(cols, false);
        for (std::size_t c = 0; c < cols && r < rows; ++c) {
            std::size_t p = r;
            while (p < rows && a[p][c] == 0) ++p;
            if (p == rows) continue;
            std::swap(a[p], a[r]);
            Rational inv = 1 / a[r][c];
            for (auto& x : a[r]) x *= inv;
            for (std::size_t i = 0; i < rows; ++i) {
                if (i == r || a[i][c] == 0) continue;
                Rational f = a[i][c];
                for (std::size_t j = 0; j < cols + rows; ++j) a[i][j] -= f * a[r][j];
            }
            pivots.push_back(c);
            is_pivot[c] = true;
            ++r;
        }
        for (std::size_t c = 0; c < cols; ++c)
            if (!is_pivot[c]) free_cols.push_back(c);
        auto scale_row = [&](std::size_t i, std::vector<I64>& rhs, std::vector<I64>* fr) {
            Integer l = 1;
            for (std::size_t j = 0; j < cols + rows; ++j) {
                mpz_class den = a[i][j].get_den();
                mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
            }
            auto as_int = [&](const Rational& q) {
                Integer v = q.get_num() * (l / q.get_den());
                if (!v.fits_slong_p()) throw PreconditionViolated("layer system too large");
                return static_cast<I64>(v.get_si());
            };
            for (std::size_t j = 0; j < rows; ++j) rhs.push_back(as_int(a[i][cols + j]));
            if (fr)
                for (auto c : free_cols) fr->push_back(as_int(a[i][c]));
            if (!l.fits_slong_p()) throw PreconditionViolated("layer system too large");
            return static_cast<I64>(l.get_si());
        };
        for (std::size_t i = 0; i < r; ++i) {
            std::vector<I64> rhs, fr;
            pivot_den.push_back(scale_row(i, rhs, &fr));
            pivot_rhs.push_back(rhs);
            pivot_free.push_back(fr);
        }
        for (std::size_t i = r; i < rows; ++i) {
            std::vector<I64> rhs;
            scale_row(i, rhs, nullptr);
            consistency.push_back(rhs);
        }
    }
};

I64 dot(const std::vector<I64>& a, const std::vector<I64>& b) {
    I64 s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = add_ck(s, mul_ck(a[i], b[i]));
    return s;
}

struct Unknown {
    int map;  // 0 for the first map, 1 for the second
    int comp;
    int i, j;
};

class Searcher {
public:
    Searcher(const SearchOptions& o, const SearchSink& sink) : opts_(o), sink_(sink) {
        for (long v : o.coefficients) value_set_.insert(v);
        values_.assign(value_set_.begin(), value_set_.end());
        D_ = o.d1 * o.d2;
        L_ = std::max(o.d1, o.d2);
    }

    SearchSummary run() {
        if (opts_.d1 < 2 || opts_.d2 < 2) throw PreconditionViolated("degrees must be at least 2");
        if (values_.empty()) {
            sum_.complete = true;
            return sum_;
        }
        int d1 = opts_.d1, d2 = opts_.d2;
        std::size_t w1 = static_cast<std::size_t>(2 * (d1 + 1));
        std::vector<I64> tops1;
        for (I64 p : values_)
            for (I64 c : values_) enumerate_tops(d1, p, c, [&](const I64* t) { tops1.insert(tops1.end(), t, t + w1); });
        std::size_t n1 = tops1.size() / w1;
        // first tops grouped by their value at (1, 0)
        std::map<std::pair<I64, I64>, std::vector<std::size_t>> groups;
        for (std::size_t k = 0; k < n1; ++k) {
            const I64* t = &tops1[k * w1];
            groups[{t[0], t[d1 + 1]}].push_back(k);
        }
        using Key = std::pair<I64, I64>;
        struct KeyHash {
            std::size_t operator()(const Key& k) const { return std::hash<I64>()(k.first * 1000003 + k.second); }
        };
        // F(G(1,0)) = G(F(1,0)): for each value (P, C) = G(1,0), tables keyed by F(P, C)
        for (I64 P : values_)
            for (I64 C : values_) {
                std::vector<std::pair<Key, std::unordered_map<Key, std::vector<std::size_t>, KeyHash>>> tables;
                for (const auto& [pc, members] : groups) {
                    std::unordered_map<Key, std::vector<std::size_t>, KeyHash> table;
                    for (std::size_t fi : members) {
                        auto v = eval_top(&tops1[fi * w1], d1, P, C);
                        table[{v[0], v[1]}].push_back(fi);
                    }
                    tables.push_back({pc, std::move(table)});
                }
                enumerate_tops(d2, P, C, [&](const I64* g) {
                    for (const auto& [pc, table] : tables) {
                        auto v = eval_top(g, d2, pc.first, pc.second);
                        auto it = table.find({v[0], v[1]});
                        if (it == table.end()) continue;
                        for (std::size_t fi : it->second) {
                            const I64* f = &tops1[fi * w1];
                            // F(G(0,1)) = G(F(0,1))
                            if (eval_top(f, d1, g[d2], g[2 * d2 + 1]) != eval_top(g, d2, f[d1], f[2 * d1 + 1])) continue;
                            top_pair(imap_from_top(f, d1), imap_from_top(g, d2));
                        }
                    }
                });
            }
        sum_.complete = true;
        return sum_;
    }

private:
    static std::array<I64, 2> eval_top(const I64* t, int d, I64 x, I64 y) {
        std::array<I64, 2> r{0, 0};
        for (int comp = 0; comp < 2; ++comp)
            for (int k = 0; k <= d; ++k) {
                I64 term = t[comp * (d + 1) + k];
                for (int e = 0; e < d - k; ++e) term = mul_ck(term, x);
                for (int e = 0; e < k; ++e) term = mul_ck(term, y);
                r[static_cast<std::size_t>(comp)] = add_ck(r[static_cast<std::size_t>(comp)], term);
            }
        return r;
    }

    static bool unit(I64 v) { return v == 1 || v == -1; }

    // unit pure powers on the diagonal or on the antidiagonal
    static bool unit_top(const I64* t, int d) {
        return (unit(t[0]) && unit(t[2 * d + 1])) || (unit(t[d]) && unit(t[d + 1]));
    }

    // tops of degree d with value (p, c) at (1, 0); flat layout: comp 1 from z1^d down to z2^d, then comp 2
    template <class Fn>
    void enumerate_tops(int d, I64 p, I64 c, Fn&& fn) const {
        std::size_t w = static_cast<std::size_t>(2 * (d + 1));
        std::vector<I64> t(w, 0);
        t[0] = p;
        t[static_cast<std::size_t>(d + 1)] = c;
        std::vector<std::size_t> slots;
        for (std::size_t k = 0; k < w; ++k)
            if (k != 0 && k != static_cast<std::size_t>(d + 1)) slots.push_back(k);
        std::vector<std::size_t> idx(slots.size(), 0);
        while (true) {
            for (std::size_t q = 0; q < slots.size(); ++q) t[slots[q]] = values_[idx[q]];
            if (unit_top(t.data(), d)) fn(t.data());
            std::size_t q = 0;
            while (q < slots.size() && ++idx[q] == values_.size()) idx[q++] = 0;
            if (q == slots.size()) break;
        }
    }

    static IMap imap_from_top(const I64* t, int d) {
        IMap f(d);
        for (int comp = 0; comp < 2; ++comp)
            for (int k = 0; k <= d; ++k) f.c[comp][static_cast<std::size_t>(k)] = t[comp * (d + 1) + k];
        return f;
    }

    static bool extends(const IMap& top) {
        return !form_resultant(to_mpoly(top, 0), to_mpoly(top, 1), "z1", "z2", top.d, top.d).is_zero();
    }

    std::vector<std::pair<IMap, IMap>> images(const IMap& f, const IMap& g) const {
        std::vector<std::pair<IMap, IMap>> out{{coord_swap(f), coord_swap(g)}};
        if (opts_.d1 == opts_.d2) {
            out.push_back({g, f});
            out.push_back({coord_swap(g), coord_swap(f)});
        }
        return out;
    }

    static std::vector<I64> pair_key(const IMap& f, const IMap& g, bool top) {
        std::vector<I64> k = top ? f.top_key() : f.key(), kg = top ? g.top_key() : g.key();
        k.insert(k.end(), kg.begin(), kg.end());
        return k;
    }

    void top_pair(const IMap& F, const IMap& G) {
        int d1 = opts_.d1, d2 = opts_.d2;
        ++sum_.top_pairs;
        // equal tops of equal degree force equal maps
        if (d1 == d2 && F.c[0] == G.c[0] && F.c[1] == G.c[1]) return;
        auto own = pair_key(F, G, true);
        for (const auto& [a, b] : images(F, G))
            if (pair_key(a, b, true) < own) return;
        if (compose_dense(F, G, D_) != compose_dense(G, F, D_)) return;
        if (!extends(F) || !extends(G)) return;
        ++sum_.commuting_tops;
        prepare_layers(F, G);
        IMap f = F, g = G;
        dfs(f, g, 1);
    }

    void prepare_layers(const IMap& F, const IMap& G) {
        int d1 = opts_.d1, d2 = opts_.d2;
        Dense f1 = to_dense(F, 0, D_), f2 = to_dense(F, 1, D_), g1 = to_dense(G, 0, D_), g2 = to_dense(G, 1, D_);
        // dG_k/dz_c at F, and dF_k/dz_c at G
        Dense dGF[2][2], dFG[2][2];
        for (int k = 0; k < 2; ++k)
            for (int c = 0; c < 2; ++c) {
                dGF[k][c] = substitute_dense(derivative(k == 0 ? g1 : g2, c), f1, f2, d2 - 1);
                dFG[k][c] = substitute_dense(derivative(k == 0 ? f1 : f2, c), g1, g2, d1 - 1);
            }
        solvers_.assign(static_cast<std::size_t>(L_ + 1), LayerSolver());
        unknowns_.assign(static_cast<std::size_t>(L_ + 1), {});
        for (int m = 1; m <= L_; ++m) {
            auto& unk = unknowns_[static_cast<std::size_t>(m)];
            for (int map = 0; map < 2; ++map) {
                int d = map == 0 ? d1 : d2;
                if (m > d) continue;
                for (int comp = 0; comp < 2; ++comp)
                    for (int i = d - m; i >= 0; --i) unk.push_back(Unknown{map, comp, i, d - m - i});
            }
            int deg = D_ - m;
            std::vector<std::vector<I64>> mat;
            for (int k = 0; k < 2; ++k)
                for (int i = deg; i >= 0; --i) {
                    std::vector<I64> row;
                    int j = deg - i;
                    for (const auto& u : unk) {
                        const Dense& src = u.map == 0 ? dGF[k][u.comp] : dFG[k][u.comp];
                        I64 v = (i >= u.i && j >= u.j) ? src.at(i - u.i, j - u.j) : 0;
                        row.push_back(u.map == 0 ? -v : v);
                    }
                    mat.push_back(row);
                }
            solvers_[static_cast<std::size_t>(m)] = LayerSolver(mat, unk.size());
        }
    }

    static void zero_below(IMap& f, int m) {
        auto mons = monomials_upto(f.d);
        for (std::size_t k = 0; k < mons.size(); ++k)
            if (mons[k].first + mons[k].second <= f.d - m) f.c[0][k] = f.c[1][k] = 0;
    }

    void dfs(IMap& f, IMap& g, int m) {
        if (m > L_) {
            leaf(f, g);
            return;
        }
        zero_below(f, m);
        zero_below(g, m);
        auto fg = compose_dense(f, g, D_), gf = compose_dense(g, f, D_);
        int deg = D_ - m;
        std::vector<I64> b;
        for (int k = 0; k < 2; ++k)
            for (int i = deg; i >= 0; --i) b.push_back(-(fg[static_cast<std::size_t>(k)].at(i, deg - i) - gf[static_cast<std::size_t>(k)].at(i, deg - i)));
        const LayerSolver& s = solvers_[static_cast<std::size_t>(m)];
        for (const auto& row : s.consistency)
            if (dot(row, b) != 0) return;
        std::vector<I64> eb;
        for (const auto& row : s.pivot_rhs) eb.push_back(dot(row, b));
        const auto& unk = unknowns_[static_cast<std::size_t>(m)];
        std::vector<I64> u(unk.size(), 0);
        std::size_t nf = s.free_cols.size();
        std::vector<std::size_t> idx(nf, 0);
        while (true) {
            for (std::size_t q = 0; q < nf; ++q) u[s.free_cols[q]] = values_[idx[q]];
            bool ok = true;
            for (std::size_t r = 0; r < s.pivots.size() && ok; ++r) {
                I64 num = eb[r];
                for (std::size_t q = 0; q < nf; ++q) num = add_ck(num, -mul_ck(s.pivot_free[r][q], u[s.free_cols[q]]));
                if (num % s.pivot_den[r] != 0) {
                    ok = false;
                    break;
                }
                I64 val = num / s.pivot_den[r];
                if (!value_set_.count(val)) ok = false;
                u[s.pivots[r]] = val;
            }
            if (ok) {
                for (std::size_t k = 0; k < unk.size(); ++k) {
                    IMap& target = unk[k].map == 0 ? f : g;
                    std::size_t pos = static_cast<std::size_t>(mono_index(target.d, unk[k].i, unk[k].j));
                    target.c[unk[k].comp][pos] = u[k];
                }
                ++sum_.nodes;
                if (opts_.node_budget > 0 && sum_.nodes > static_cast<std::uint64_t>(opts_.node_budget)) throw SearchBudgetExceeded(sum_);
                dfs(f, g, m + 1);
                zero_below(f, m + 1);
                zero_below(g, m + 1);
            }
            std::size_t p = 0;
            while (p < nf && ++idx[p] == values_.size()) idx[p++] = 0;
            if (p == nf) break;
        }
    }

    void leaf(const IMap& f, const IMap& g) {
        if (compose_dense(f, g, D_) != compose_dense(g, f, D_)) return;
        auto own = pair_key(f, g, false);
        for (const auto& [a, b] : images(f, g))
            if (pair_key(a, b, false) < own) return;
        ++sum_.commuting;
        SearchRecord rec{to_endo(f), to_endo(g), false, Verdict{}};
        bool equal_squares = f.d == g.d && D_ <= opts_.disjoint_cap && compose_dense(f, f, D_) == compose_dense(g, g, D_);
        rec.disjoint = !equal_squares && disjoint_iterates(rec.f1, rec.f2, opts_.disjoint_cap);
        if (!rec.disjoint) {
            ++sum_.not_disjoint;
        } else {
            rec.verdict = recognize_unchecked(rec.f1, rec.f2, opts_.order);
            if (rec.verdict.tag == VerdictTag::Unknown) {
                sum_.unknown.push_back({rec.f1, rec.f2});
                rec.outside = smooth_critical_conic(rec.f1) || smooth_critical_conic(rec.f2);
                if (rec.outside) ++sum_.unknown_outside;
            } else
                ++sum_.recognized[static_cast<std::size_t>(rec.verdict.tag)];
        }
        if (sink_) sink_(rec);
    }

    SearchOptions opts_;
    const SearchSink& sink_;
    std::vector<I64> values_;
    std::set<I64> value_set_;
    int D_ = 0, L_ = 0;
    std::vector<LayerSolver> solvers_;
    std::vector<std::vector<Unknown>> unknowns_;
    SearchSummary sum_;
};

}  // namespace

std::string SearchSummary::to_string(int order) const {
    std::ostringstream os;
    os << "top_pairs=" << top_pairs << " commuting_tops=" << commuting_tops << " nodes=" << nodes << " commuting=" << commuting
       << " not_disjoint=" << not_disjoint << " Ex1=" << recognized[0] << " Ex2=" << recognized[1] << " Ex3=" << recognized[2]
       << " Ex4=" << recognized[3] << " Unknown=" << unknown.size()
       << " certified_outside=" << unknown_outside << (complete ? "" : " (partial)");
    for (const auto& [a, b] : unknown) os << "\n  unknown: " << pdyn::to_string(a, order) << " ; " << pdyn::to_string(b, order);
    return os.str();
}

SearchSummary search(const SearchOptions& opts, const SearchSink& sink) { return Searcher(opts, sink).run(); }

}  // namespace pdyn
