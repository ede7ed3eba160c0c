#include "pdyn/linalg.hpp"

namespace pdyn {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& a, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
        std::size_t p = row;
        while (p < a.size() && a[p][c].is_zero()) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[row]);
        Coefficient inv = a[row][c].inverse();
        for (auto& x : a[row]) x *= inv;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == row || a[r][c].is_zero()) continue;
            Coefficient f = a[r][c];
            for (std::size_t k = c; k < a[r].size(); ++k)
                if (!a[row][k].is_zero()) a[r][k] -= f * a[row][k];
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

}  // namespace

std::vector<std::vector<Coefficient>> nullspace(Matrix a, std::size_t cols) {
    for (auto& r : a) r.resize(cols);
    auto pivots = rref(a, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Coefficient>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Coefficient> v(cols);
        v[f] = Coefficient(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Coefficient>> solve_linear(Matrix a, std::vector<Coefficient> b, std::size_t cols) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        a[i].resize(cols);
        a[i].push_back(b[i]);
    }
    auto pivots = rref(a, cols + 1);
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    std::vector<Coefficient> x(cols);
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = a[i][cols];
    return x;
}

}  // namespace pdyn
