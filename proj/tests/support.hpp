#pragma once

#include <random>
#include <string>

#include "doctest.h"
#include "pdyn/algebra.hpp"
#include "pdyn/parse.hpp"

namespace testing_support {

inline pdyn::MPoly P(const std::string& s, int order = 1) { return pdyn::parse_poly(s, order); }

inline pdyn::Rational small_rational(std::mt19937& g, int range = 5, int den = 3) {
    std::uniform_int_distribution<int> n(-range, range), d(1, den);
    pdyn::Rational q(n(g), d(g));
    q.canonicalize();
    return q;
}

inline pdyn::Coefficient random_coeff(std::mt19937& g, int order, int range = 5, int den = 3) {
    std::vector<pdyn::Rational> r(pdyn::euler_phi(order));
    for (auto& x : r) x = small_rational(g, range, den);
    return pdyn::Coefficient(order, r);
}

inline pdyn::Coefficient random_nonzero(std::mt19937& g, int order) {
    while (true) {
        auto c = random_coeff(g, order);
        if (!c.is_zero()) return c;
    }
}

// sparse polynomial in the given variables with at most `terms` terms of total degree <= deg
inline pdyn::MPoly random_poly(std::mt19937& g, const std::vector<std::string>& vars, int deg, int terms, int order = 1) {
    pdyn::MPoly p;
    std::uniform_int_distribution<int> e(0, deg);
    for (int k = 0; k < terms; ++k) {
        pdyn::MPoly m(random_coeff(g, order));
        int left = deg;
        for (const auto& v : vars) {
            std::uniform_int_distribution<int> ev(0, left);
            int x = ev(g);
            left -= x;
            m *= pdyn::MPoly::var(v).pow(x);
        }
        p += m;
    }
    (void)e;
    return p;
}

}  // namespace testing_support
