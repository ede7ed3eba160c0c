#include <algorithm>
#include <sstream>

#include "pdyn/algebra.hpp"

namespace pdyn {

namespace {

const std::vector<std::string>& known_vars() {
    static const std::vector<std::string> v = {"z1", "z2", "x", "y", "s", "t", "e1", "e2", "y1", "y2", "u", "v"};
    return v;
}

int rank_of(const std::string& name) {
    const auto& k = known_vars();
    auto it = std::find(k.begin(), k.end(), name);
    return it == k.end() ? static_cast<int>(k.size()) : static_cast<int>(it - k.begin());
}

std::uint32_t total(const Exponent& e) { return e[0] + e[1] + e[2] + e[3]; }

void add_into(MPoly::Terms& t, const Exponent& e, const Coefficient& c) {
    if (c.is_zero()) return;
    auto it = t.find(e);
    if (it == t.end()) {
        t.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) t.erase(it);
    }
}

void sub_into(MPoly::Terms& t, const Exponent& e, const Coefficient& c) {
    if (c.is_zero()) return;
    auto it = t.find(e);
    if (it == t.end()) {
        t.emplace(e, -c);
    } else {
        it->second -= c;
        if (it->second.is_zero()) t.erase(it);
    }
}

}  // namespace

bool var_less(const std::string& a, const std::string& b) {
    int ra = rank_of(a), rb = rank_of(b);
    if (ra != rb) return ra < rb;
    return a < b;
}

std::vector<std::string> merge_vars(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    std::vector<std::string> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), var_less);
    if (out.size() > 4) throw VariableLimit("more than four variables");
    return out;
}

MPoly::MPoly(const Coefficient& c) {
    if (!c.is_zero()) terms_.emplace(Exponent{0, 0, 0, 0}, c);
}

MPoly::MPoly(std::vector<std::string> vars, Terms terms) : vars_(std::move(vars)), terms_(std::move(terms)) {
    if (vars_.size() > 4) throw VariableLimit("more than four variables");
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero())
            it = terms_.erase(it);
        else
            ++it;
    }
    prune();
}

void MPoly::prune() {
    std::array<bool, 4> used{false, false, false, false};
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (e[i]) used[i] = true;
    bool all = true;
    for (std::size_t i = 0; i < vars_.size(); ++i) all = all && used[i];
    if (all) return;
    std::vector<std::string> nv;
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (used[i]) {
            nv.push_back(vars_[i]);
            keep.push_back(i);
        }
    Terms nt;
    for (const auto& [e, c] : terms_) {
        Exponent ne{0, 0, 0, 0};
        for (std::size_t j = 0; j < keep.size(); ++j) ne[j] = e[keep[j]];
        nt.emplace(ne, c);
    }
    vars_ = std::move(nv);
    terms_ = std::move(nt);
}

MPoly MPoly::var(const std::string& name) {
    Terms t;
    t.emplace(Exponent{1, 0, 0, 0}, Coefficient(1));
    return MPoly({name}, std::move(t));
}

MPoly MPoly::monomial(const Coefficient& c, const std::vector<std::pair<std::string, unsigned>>& powers) {
    MPoly r(c);
    for (const auto& [v, k] : powers) r *= var(v).pow(k);
    return r;
}

MPoly::Terms MPoly::terms_over(const std::vector<std::string>& vars) const {
    if (vars == vars_) return terms_;
    std::array<std::size_t, 4> pos{};
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(vars.begin(), vars.end(), vars_[i]);
        pos[i] = static_cast<std::size_t>(it - vars.begin());
    }
    Terms out;
    for (const auto& [e, c] : terms_) {
        Exponent ne{0, 0, 0, 0};
        for (std::size_t i = 0; i < vars_.size(); ++i) ne[pos[i]] = e[i];
        out.emplace(ne, c);
    }
    return out;
}

bool MPoly::has_var(const std::string& v) const {
    return std::find(vars_.begin(), vars_.end(), v) != vars_.end();
}

Coefficient MPoly::constant_value() const {
    auto it = terms_.find(Exponent{0, 0, 0, 0});
    return it == terms_.end() ? Coefficient() : it->second;
}

int MPoly::total_degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(total(terms_.begin()->first));
}

int MPoly::degree_in(const std::string& v) const {
    if (terms_.empty()) return -1;
    auto it = std::find(vars_.begin(), vars_.end(), v);
    if (it == vars_.end()) return 0;
    std::size_t i = static_cast<std::size_t>(it - vars_.begin());
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
    return static_cast<int>(d);
}

Coefficient MPoly::leading_coeff() const { return terms_.empty() ? Coefficient() : terms_.begin()->second; }

Exponent MPoly::leading_exponent() const { return terms_.empty() ? Exponent{0, 0, 0, 0} : terms_.begin()->first; }

Coefficient MPoly::coeff(const std::vector<std::pair<std::string, unsigned>>& powers) const {
    Exponent e{0, 0, 0, 0};
    for (const auto& [v, k] : powers) {
        if (k == 0) continue;
        auto it = std::find(vars_.begin(), vars_.end(), v);
        if (it == vars_.end()) return Coefficient();
        e[static_cast<std::size_t>(it - vars_.begin())] = k;
    }
    auto it = terms_.find(e);
    return it == terms_.end() ? Coefficient() : it->second;
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    if (o.is_zero()) return *this;
    if (vars_ != o.vars_) {
        auto vs = merge_vars(vars_, o.vars_);
        terms_ = terms_over(vs);
        vars_ = vs;
        for (const auto& [e, c] : o.terms_over(vs)) add_into(terms_, e, c);
    } else {
        for (const auto& [e, c] : o.terms_) add_into(terms_, e, c);
    }
    prune();
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    if (o.is_zero()) return *this;
    if (vars_ != o.vars_) {
        auto vs = merge_vars(vars_, o.vars_);
        terms_ = terms_over(vs);
        vars_ = vs;
        for (const auto& [e, c] : o.terms_over(vs)) sub_into(terms_, e, c);
    } else {
        for (const auto& [e, c] : o.terms_) sub_into(terms_, e, c);
    }
    prune();
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    if (a.is_zero() || b.is_zero()) return MPoly();
    if (b.is_constant()) return a.scaled(b.constant_value());
    if (a.is_constant()) return b.scaled(a.constant_value());
    auto vs = merge_vars(a.vars_, b.vars_);
    MPoly::Terms ta = a.terms_over(vs), tb = b.terms_over(vs);
    MPoly::Terms out;
    for (const auto& [ea, ca] : ta) {
        for (const auto& [eb, cb] : tb) {
            Exponent e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
            add_into(out, e, ca * cb);
        }
    }
    return MPoly(vs, std::move(out));
}

MPoly& MPoly::operator*=(const MPoly& o) {
    *this = *this * o;
    return *this;
}

bool operator==(const MPoly& a, const MPoly& b) {
    if (a.vars_ != b.vars_ || a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib)
        if (ia->first != ib->first || ia->second != ib->second) return false;
    return true;
}

MPoly MPoly::scaled(const Coefficient& c) const {
    if (c.is_zero()) return MPoly();
    MPoly r = *this;
    for (auto& [e, x] : r.terms_) x *= c;
    return r;
}

MPoly MPoly::pow(unsigned e) const {
    MPoly result(1), base = *this;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

MPoly MPoly::derivative(const std::string& v) const {
    auto it = std::find(vars_.begin(), vars_.end(), v);
    if (it == vars_.end()) return MPoly();
    std::size_t i = static_cast<std::size_t>(it - vars_.begin());
    Terms out;
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        Exponent ne = e;
        ne[i] -= 1;
        out.emplace(ne, c * Coefficient(static_cast<long>(e[i])));
    }
    return MPoly(vars_, std::move(out));
}

MPoly MPoly::homogeneous_part(int degree) const {
    Terms out;
    for (const auto& [e, c] : terms_)
        if (static_cast<int>(total(e)) == degree) out.emplace(e, c);
    return MPoly(vars_, std::move(out));
}

MPoly MPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(leading_coeff().inverse());
}

MPoly MPoly::rename(const std::map<std::string, std::string>& names) const {
    std::map<std::string, MPoly> b;
    for (const auto& v : vars_) {
        auto it = names.find(v);
        if (it != names.end()) b.emplace(v, var(it->second));
    }
    return substitute(*this, b);
}

std::vector<MPoly> MPoly::coeffs_in(const std::string& v) const {
    auto it = std::find(vars_.begin(), vars_.end(), v);
    if (it == vars_.end()) return {*this};
    std::size_t i = static_cast<std::size_t>(it - vars_.begin());
    std::vector<Terms> parts(static_cast<std::size_t>(degree_in(v)) + 1);
    for (const auto& [e, c] : terms_) {
        Exponent ne = e;
        ne[i] = 0;
        parts[e[i]].emplace(ne, c);
    }
    std::vector<MPoly> out;
    out.reserve(parts.size());
    for (auto& p : parts) out.emplace_back(vars_, std::move(p));
    return out;
}

MPoly MPoly::from_coeffs(const std::string& v, const std::vector<MPoly>& cs) {
    MPoly out;
    MPoly x = var(v), xp(1);
    for (std::size_t k = 0; k < cs.size(); ++k) {
        if (!cs[k].is_zero()) out += cs[k] * xp;
        if (k + 1 < cs.size()) xp *= x;
    }
    return out;
}

int MPoly::field_order() const {
    long m = 1;
    for (const auto& [e, c] : terms_) m = lcm_order(m, c.order());
    return static_cast<int>(m);
}

std::string MPoly::to_string(int order) const {
    if (terms_.empty()) return "0";
    if (order == 0) order = field_order();
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string mono;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (!e[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        std::vector<Rational> parts;
        if (c.is_rational())
            parts.assign(1, c.rational());
        else
            parts = c.lift(order).residue();
        for (std::size_t j = 0; j < parts.size(); ++j) {
            Rational q = parts[j];
            if (q == 0) continue;
            bool neg = q < 0;
            if (neg) q = -q;
            if (first)
                out << (neg ? "-" : "");
            else
                out << (neg ? " - " : " + ");
            first = false;
            std::string body;
            if (q != 1 || (j == 0 && mono.empty())) body = q.get_str();
            if (j > 0) {
                if (!body.empty()) body += "*";
                body += "w";
                if (j > 1) body += "^" + std::to_string(j);
            }
            if (!mono.empty()) {
                if (!body.empty()) body += "*";
                body += mono;
            }
            out << body;
        }
    }
    return out.str();
}

MPoly ring_arith(const MPoly& a, const MPoly& b, RingOp op) {
    switch (op) {
        case RingOp::Add: return a + b;
        case RingOp::Sub: return a - b;
        case RingOp::Mul: return a * b;
    }
    return MPoly();
}

MPoly cyclotomic_polynomial(int n, const std::string& var) {
    const auto& c = cyclotomic_coeffs(n);
    MPoly out;
    MPoly x = MPoly::var(var);
    for (std::size_t k = 0; k < c.size(); ++k)
        if (c[k] != 0) out += MPoly(Coefficient(Rational(c[k]))) * x.pow(static_cast<unsigned>(k));
    return out;
}

MPoly substitute(const MPoly& p, const std::map<std::string, MPoly>& bindings) {
    const auto& vs = p.vars();
    std::vector<MPoly> images;
    std::vector<std::uint32_t> maxdeg(vs.size(), 0);
    for (const auto& [e, c] : p.terms())
        for (std::size_t i = 0; i < vs.size(); ++i) maxdeg[i] = std::max(maxdeg[i], e[i]);
    std::vector<std::vector<MPoly>> powers(vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i) {
        auto it = bindings.find(vs[i]);
        MPoly img = it == bindings.end() ? MPoly::var(vs[i]) : it->second;
        powers[i].reserve(maxdeg[i] + 1);
        powers[i].push_back(MPoly(1));
        for (std::uint32_t k = 1; k <= maxdeg[i]; ++k) powers[i].push_back(powers[i].back() * img);
    }
    MPoly out;
    for (const auto& [e, c] : p.terms()) {
        MPoly term(c);
        for (std::size_t i = 0; i < vs.size(); ++i)
            if (e[i]) term = term * powers[i][e[i]];
        out += term;
    }
    return out;
}

}  // namespace pdyn
