#include "umbral/linalg.hpp"

namespace umbral {

std::vector<std::size_t> row_reduce(Matrix& a, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < a.size(); ++col) {
        std::size_t p = row;
        while (p < a.size() && a[p][col] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[row]);
        Rational inv = 1 / a[row][col];
        for (std::size_t j = col; j < ncols; ++j) a[row][j] *= inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == row || a[i][col] == 0) continue;
            Rational f = a[i][col];
            for (std::size_t j = col; j < ncols; ++j)
                if (a[row][j] != 0) a[i][j] -= f * a[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(Matrix a, std::size_t ncols) { return row_reduce(a, ncols).size(); }

std::vector<std::vector<Rational>> nullspace(Matrix a, std::size_t ncols) {
    auto piv = row_reduce(a, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(ncols, Rational(0));
        v[f] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -a[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rational>> solve_unique(const Matrix& a, const std::vector<Rational>& b) {
    if (a.empty()) return std::nullopt;
    std::size_t n = a.front().size();
    Matrix aug = a;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
    auto piv = row_reduce(aug, n + 1);
    if (piv.size() != n || piv.back() >= n) return std::nullopt;  // singular, or a pivot in the augmented column
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = aug[i][n];
    return x;
}

}  // namespace umbral
