#include "tvb/lp.hpp"

#include <stdexcept>

namespace tvb {

LpFeasibility lp_equality_feasible(std::vector<std::vector<Rational>> a,
                                   std::vector<Rational> b) {
    const std::size_t m = a.size();
    if (b.size() != m) throw std::invalid_argument("right-hand side size mismatch");
    const std::size_t n = m == 0 ? 0 : a[0].size();
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("ragged constraint matrix");
    if (m == 0) return {true, std::vector<Rational>(n, Rational(0))};

    // Tableau [A | I | b] with artificial basis; phase 1 minimizes the sum
    // of the artificials.
    const std::size_t cols = n + m + 1;
    std::vector<std::vector<Rational>> t(m, std::vector<Rational>(cols, Rational(0)));
    for (std::size_t i = 0; i < m; ++i) {
        const bool flip = b[i] < 0;
        for (std::size_t j = 0; j < n; ++j) t[i][j] = flip ? -a[i][j] : a[i][j];
        t[i][n + i] = 1;
        t[i][cols - 1] = flip ? -b[i] : b[i];
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    // red[j] > 0 marks a column whose entry decreases the artificial sum;
    // red[cols-1] is the current sum.
    std::vector<Rational> red(cols, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) red[j] += t[i][j];
    for (std::size_t i = 0; i < m; ++i) red[cols - 1] += t[i][cols - 1];

    for (;;) {
        std::size_t enter = cols - 1;
        for (std::size_t j = 0; j < cols - 1; ++j)
            if (red[j] > 0) {
                enter = j;
                break;
            }
        if (enter == cols - 1) break;

        std::size_t leave = m;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            if (leave == m) {
                leave = i;
                continue;
            }
            const Rational lhs = t[i][cols - 1] * t[leave][enter];
            const Rational rhs = t[leave][cols - 1] * t[i][enter];
            if (lhs < rhs || (lhs == rhs && basis[i] < basis[leave])) leave = i;
        }
        if (leave == m)
            throw std::logic_error("phase-1 objective unbounded");  // cannot happen: sum >= 0

        const Rational pivot = t[leave][enter];
        for (std::size_t j = 0; j < cols; ++j) t[leave][j] /= pivot;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            const Rational f = t[i][enter];
            for (std::size_t j = 0; j < cols; ++j) t[i][j] -= f * t[leave][j];
        }
        if (red[enter] != 0) {
            const Rational f = red[enter];
            for (std::size_t j = 0; j < cols; ++j) red[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }

    LpFeasibility out;
    out.feasible = red[cols - 1] == 0;
    if (out.feasible) {
        out.solution.assign(n, Rational(0));
        for (std::size_t i = 0; i < m; ++i)
            if (basis[i] < n) out.solution[basis[i]] = t[i][cols - 1];
    }
    return out;
}

}  // namespace tvb
