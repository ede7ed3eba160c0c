#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pdyn/algebra.hpp"
#include "pdyn/endo2.hpp"
#include "pdyn/families.hpp"

namespace pdyn {

// z -> linear * z + translation
struct AffineConj {
    std::array<std::array<Coefficient, 2>, 2> linear{{{Coefficient(1), Coefficient(0)}, {Coefficient(0), Coefficient(1)}}};
    std::array<Coefficient, 2> translation{Coefficient(0), Coefficient(0)};
    bool swap_flag = false;  // linear part antidiagonal
};

AffineConj make_affine(const std::array<std::array<Coefficient, 2>, 2>& linear, const std::array<Coefficient, 2>& translation);
AffineConj affine_identity();
AffineConj affine_swap();
AffineConj affine_translation(const Coefficient& a, const Coefficient& b);
AffineConj affine_diagonal(const Coefficient& b1, const Coefficient& b2);
AffineConj compose_affine(const AffineConj& s, const AffineConj& t);  // s after t
AffineConj inverse(const AffineConj& s);
bool operator==(const AffineConj& a, const AffineConj& b);
PlaneEndo as_endo(const AffineConj& s);
std::string to_string(const AffineConj& s, int order = 0);

// s^-1 o f o s
PlaneEndo affine_conjugate(const PlaneEndo& f, const AffineConj& s);

constexpr long kDisjointCap = 1000000;

// false iff f1^n = f2^m for some n, m >= 1 with d1^n = d2^m <= degree_cap
bool disjoint_iterates(const PlaneEndo& f1, const PlaneEndo& f2, long degree_cap = kDisjointCap);

enum class VerdictTag { Ex1, Ex2, Ex3, Ex4, Unknown };
std::string to_string(VerdictTag t);

struct Verdict {
    VerdictTag tag = VerdictTag::Unknown;
    std::optional<FamilyTag> params;
    std::optional<AffineConj> conjugation;
    long degree_cap = kDisjointCap;
    int field = 1;  // cyclotomic order the parameters and conjugation live in
    std::string describe(int order = 0) const;
};

// Degree-2 map whose critical curve is a smooth conic. The Jacobian of every degree-2
// member of the four families splits into lines, and affine conjugation keeps that.
bool smooth_critical_conic(const PlaneEndo& f);

// Checks commutation, extension, degrees and disjointness first.
Verdict recognize(const PlaneEndo& f1, const PlaneEndo& f2, int order = 1, long degree_cap = kDisjointCap);
// Same without the precondition checks.
Verdict recognize_unchecked(const PlaneEndo& f1, const PlaneEndo& f2, int order = 1);

// Grid of maps with all coefficients in a finite integer set whose top forms carry
// +-1 on z1^d and z2^d (first and second component), or on z2^d and z1^d.
struct SearchOptions {
    int d1 = 2, d2 = 2;
    std::vector<long> coefficients;
    long node_budget = 0;  // 0: unlimited
    long disjoint_cap = kDisjointCap;
    int order = 1;
};

struct SearchRecord {
    PlaneEndo f1, f2;
    bool disjoint = false;
    Verdict verdict;
    bool outside = false;  // Unknown with a smooth critical conic
};

struct SearchSummary {
    std::uint64_t top_pairs = 0;       // top-form pairs agreeing at (1,0) and (0,1)
    std::uint64_t commuting_tops = 0;  // of which commute and extend
    std::uint64_t nodes = 0;           // lower-layer assignments visited
    std::uint64_t commuting = 0;       // canonical commuting pairs of distinct maps
    std::uint64_t not_disjoint = 0;
    std::array<std::uint64_t, 4> recognized{0, 0, 0, 0};
    std::vector<std::pair<PlaneEndo, PlaneEndo>> unknown;
    std::uint64_t unknown_outside = 0;  // unknown pairs certified outside the families
    bool complete = false;
    std::string to_string(int order = 0) const;
};

struct SearchBudgetExceeded : BudgetExceeded {
    SearchSummary partial;
    explicit SearchBudgetExceeded(SearchSummary s)
        : BudgetExceeded("search node budget exhausted after " + std::to_string(s.nodes) + " nodes"), partial(std::move(s)) {}
};

using SearchSink = std::function<void(const SearchRecord&)>;
SearchSummary search(const SearchOptions& opts, const SearchSink& sink = {});

}  // namespace pdyn
