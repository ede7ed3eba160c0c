#include <mutex>
#include <numeric>
#include <sstream>

#include "pdyn/algebra.hpp"

namespace pdyn {

int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

long lcm_order(long a, long b) { return std::lcm(a, b); }

namespace {

using IPoly = std::vector<Integer>;

// a / b for monic b, exact.
IPoly divide_monic(IPoly a, const IPoly& b) {
    std::size_t db = b.size() - 1;
    if (a.size() < b.size()) return {Integer(0)};
    IPoly q(a.size() - db, 0);
    for (std::size_t i = a.size(); i-- > db;) {
        Integer c = a[i];
        if (c == 0) continue;
        q[i - db] = c;
        for (std::size_t k = 0; k <= db; ++k) a[i - db + k] -= c * b[k];
    }
    return q;
}

}  // namespace

const std::vector<Integer>& cyclotomic_coeffs(int n) {
    static std::mutex mu;
    static std::map<int, IPoly> cache;
    if (n < 1) throw PreconditionViolated("cyclotomic order must be positive");
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    IPoly p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) p = divide_monic(p, cyclotomic_coeffs(d));
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(n, std::move(p)).first->second;
}

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
}

bool qzero(const QPoly& p) { return p.size() == 1 && p[0] == 0; }

QPoly qmul(const QPoly& a, const QPoly& b) {
    QPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

QPoly qsub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

void qdivmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
    r = a;
    trim(r);
    std::size_t db = b.size() - 1;
    if (r.size() < b.size()) {
        q = {Rational(0)};
        return;
    }
    q.assign(r.size() - db, 0);
    Rational lb = b.back();
    for (std::size_t i = r.size(); i-- > db;) {
        if (r[i] == 0) continue;
        Rational c = r[i] / lb;
        q[i - db] = c;
        for (std::size_t k = 0; k <= db; ++k) r[i - db + k] -= c * b[k];
    }
    r.resize(db == 0 ? 1 : db);
    trim(r);
    trim(q);
}

}  // namespace

Coefficient::Coefficient() = default;

Coefficient::Coefficient(long v) : r_{Rational(v)} {}

Coefficient::Coefficient(const Rational& q) : r_{q} { r_[0].canonicalize(); }

Coefficient::Coefficient(int order, std::vector<Rational> residue) : order_(order), r_(std::move(residue)) {
    if (order_ < 1) throw PreconditionViolated("cyclotomic order must be positive");
    if (r_.empty()) r_.push_back(0);
    reduce();
}

Coefficient Coefficient::zeta(int order, long k) {
    if (order < 1) throw PreconditionViolated("cyclotomic order must be positive");
    k %= order;
    if (k < 0) k += order;
    std::vector<Rational> r(k + 1, 0);
    r[k] = 1;
    return Coefficient(order, std::move(r));
}

void Coefficient::reduce() {
    if (order_ > 1) {
        const auto& phi = cyclotomic_coeffs(order_);
        std::size_t deg = phi.size() - 1;
        for (std::size_t i = r_.size(); i-- > deg;) {
            if (r_[i] == 0) continue;
            Rational c = r_[i];
            for (std::size_t k = 0; k <= deg; ++k) r_[i - deg + k] -= c * phi[k];
        }
        r_.resize(deg, 0);
        bool rational = true;
        for (std::size_t i = 1; i < r_.size(); ++i)
            if (r_[i] != 0) rational = false;
        if (rational) {
            order_ = 1;
            r_.resize(1);
        }
    } else {
        if (r_.size() > 1) {
            Rational s = 0;
            for (auto& c : r_) s += c;
            r_.assign(1, s);
        }
    }
}

Coefficient Coefficient::lift(int order) const {
    if (order == order_ || order_ == 1) {
        if (order_ == 1) return *this;
        return *this;
    }
    if (order % order_ != 0) throw PreconditionViolated("lift to a non-multiple order");
    int step = order / order_;
    std::vector<Rational> r((r_.size() - 1) * step + 1, 0);
    for (std::size_t k = 0; k < r_.size(); ++k) r[k * step] = r_[k];
    return Coefficient(order, std::move(r));
}

namespace {

// Express both at a common order with full-length residues.
int common_frame(const Coefficient& a, const Coefficient& b, std::vector<Rational>& ra, std::vector<Rational>& rb) {
    int m = static_cast<int>(lcm_order(a.order(), b.order()));
    auto expand = [m](const Coefficient& c) {
        if (m == 1) return c.residue();
        if (c.order() == 1) {
            std::vector<Rational> r(euler_phi(m), 0);
            r[0] = c.rational();
            return r;
        }
        Coefficient l = c.lift(m);
        std::vector<Rational> r = l.residue();
        r.resize(euler_phi(m), 0);
        return r;
    };
    ra = expand(a);
    rb = expand(b);
    return m;
}

}  // namespace

Coefficient& Coefficient::operator+=(const Coefficient& o) {
    if (order_ == 1 && o.order_ == 1) {
        r_[0] += o.r_[0];
        return *this;
    }
    std::vector<Rational> ra, rb;
    int m = common_frame(*this, o, ra, rb);
    for (std::size_t i = 0; i < ra.size(); ++i) ra[i] += rb[i];
    *this = Coefficient(m, std::move(ra));
    return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) {
    if (order_ == 1 && o.order_ == 1) {
        r_[0] -= o.r_[0];
        return *this;
    }
    std::vector<Rational> ra, rb;
    int m = common_frame(*this, o, ra, rb);
    for (std::size_t i = 0; i < ra.size(); ++i) ra[i] -= rb[i];
    *this = Coefficient(m, std::move(ra));
    return *this;
}

Coefficient& Coefficient::operator*=(const Coefficient& o) {
    if (o.order_ == 1) {
        if (o.r_[0] == 0) {
            *this = Coefficient();
            return *this;
        }
        for (auto& c : r_) c *= o.r_[0];
        return *this;
    }
    if (order_ == 1) {
        Rational s = r_[0];
        *this = o;
        if (s == 0) {
            *this = Coefficient();
            return *this;
        }
        for (auto& c : r_) c *= s;
        return *this;
    }
    std::vector<Rational> ra, rb;
    int m = common_frame(*this, o, ra, rb);
    std::vector<Rational> prod(ra.size() + rb.size() - 1, 0);
    for (std::size_t i = 0; i < ra.size(); ++i) {
        if (ra[i] == 0) continue;
        for (std::size_t j = 0; j < rb.size(); ++j) prod[i + j] += ra[i] * rb[j];
    }
    *this = Coefficient(m, std::move(prod));
    return *this;
}

Coefficient Coefficient::operator-() const {
    Coefficient c = *this;
    for (auto& x : c.r_) x = -x;
    return c;
}

bool operator==(const Coefficient& a, const Coefficient& b) {
    if (a.order_ == b.order_) return a.r_ == b.r_;
    if (a.order_ == 1 || b.order_ == 1) return false;
    std::vector<Rational> ra, rb;
    common_frame(a, b, ra, rb);
    return ra == rb;
}

int Coefficient::compare(const Coefficient& o) const {
    std::vector<Rational> ra, rb;
    common_frame(*this, o, ra, rb);
    for (std::size_t i = 0; i < ra.size(); ++i) {
        int c = cmp(ra[i], rb[i]);
        if (c) return c < 0 ? -1 : 1;
    }
    return 0;
}

int Coefficient::sign_hint() const {
    for (const auto& c : r_)
        if (c != 0) return sgn(c);
    return 0;
}

Coefficient Coefficient::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    if (order_ == 1) return Coefficient(Rational(1) / r_[0]);
    const auto& phi = cyclotomic_coeffs(order_);
    QPoly m(phi.begin(), phi.end());
    QPoly a = r_;
    trim(a);
    // extended Euclid: track s with s*a = r (mod m)
    QPoly r0 = m, r1 = a, s0 = {Rational(0)}, s1 = {Rational(1)};
    while (!(r1.size() == 1)) {
        QPoly q, rem;
        qdivmod(r0, r1, q, rem);
        QPoly s2 = qsub(s0, qmul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
        if (qzero(r1)) throw DivisionByZero("non-invertible residue");
    }
    Rational c = r1[0];
    for (auto& x : s1) x /= c;
    return Coefficient(order_, std::move(s1));
}

Coefficient Coefficient::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Coefficient result(1), base = *this;
    while (e) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

std::string Coefficient::to_string(int order) const {
    if (order == 0) order = order_;
    std::vector<Rational> r;
    if (order_ == 1) {
        r.assign(1, r_[0]);
    } else {
        r = lift(order).residue();
    }
    std::ostringstream out;
    bool first = true;
    for (std::size_t j = 0; j < r.size(); ++j) {
        if (r[j] == 0) continue;
        Rational c = r[j];
        if (!first) {
            out << (c < 0 ? " - " : " + ");
            c = abs(c);
        } else if (c < 0 && j > 0) {
            out << "-";
            c = -c;
        }
        if (j == 0) {
            out << c.get_str();
        } else {
            if (c != 1) out << c.get_str() << "*";
            out << "w";
            if (j > 1) out << "^" << j;
        }
        first = false;
    }
    if (first) return "0";
    return out.str();
}

std::vector<Coefficient> roots_of_unity(int order) {
    std::vector<Coefficient> out;
    for (int k = 0; k < order; ++k) out.push_back(Coefficient::zeta(order, k));
    if (order % 2)
        for (int k = 0; k < order; ++k) out.push_back(-Coefficient::zeta(order, k));
    return out;
}

}  // namespace pdyn
