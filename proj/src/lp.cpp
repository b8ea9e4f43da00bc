#include "lgmirror/lp.hpp"

#include <stdexcept>

namespace lgm {

std::optional<std::vector<BigRat>> feasible_point(const std::vector<std::vector<BigRat>>& a,
                                                  const std::vector<BigRat>& b) {
    const std::size_t m = a.size();
    if (b.size() != m) throw std::invalid_argument("feasible_point: row count mismatch");
    const std::size_t n = m ? a[0].size() : 0;
    if (m == 0) return std::vector<BigRat>(n, BigRat(0));
    // Columns: x+ (n), x- (n), surplus (m), artificial (m); rhs last.
    const std::size_t cols = 2 * n + 2 * m;
    std::vector<std::vector<BigRat>> t(m, std::vector<BigRat>(cols + 1, BigRat(0)));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (a[i].size() != n) throw std::invalid_argument("feasible_point: ragged matrix");
        const int s = b[i] < 0 ? -1 : 1;
        for (std::size_t j = 0; j < n; ++j) {
            t[i][j] = s * a[i][j];
            t[i][n + j] = -s * a[i][j];
        }
        t[i][2 * n + i] = -s;
        t[i][2 * n + m + i] = 1;
        t[i][cols] = s * b[i];
        basis[i] = 2 * n + m + i;
    }
    // Phase I objective: minimize the sum of artificials, stored as reduced costs.
    std::vector<BigRat> cost(cols + 1, BigRat(0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= cols; ++j)
            if (j < 2 * n + m || j == cols) cost[j] -= t[i][j];
    for (;;) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j)
            if (cost[j] < 0) {
                enter = j;
                break;
            }
        if (enter == cols) break;
        std::size_t leave = m;
        BigRat best;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            BigRat r = t[i][cols] / t[i][enter];
            if (leave == m || r < best || (r == best && basis[i] < basis[leave])) {
                leave = i;
                best = r;
            }
        }
        if (leave == m) break;  // unbounded direction cannot occur in phase I
        const BigRat piv = t[leave][enter];
        for (auto& v : t[leave]) v /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            const BigRat f = t[i][enter];
            for (std::size_t j = 0; j <= cols; ++j)
                if (t[leave][j] != 0) t[i][j] -= f * t[leave][j];
        }
        if (cost[enter] != 0) {
            const BigRat f = cost[enter];
            for (std::size_t j = 0; j <= cols; ++j)
                if (t[leave][j] != 0) cost[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }
    if (cost[cols] != 0) return std::nullopt;
    std::vector<BigRat> x(n, BigRat(0));
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] < n) x[basis[i]] += t[i][cols];
        else if (basis[i] < 2 * n) x[basis[i] - n] -= t[i][cols];
    }
    for (std::size_t i = 0; i < m; ++i) {
        BigRat lhs = 0;
        for (std::size_t j = 0; j < n; ++j) lhs += a[i][j] * x[j];
        if (lhs < b[i]) throw std::logic_error("feasible_point: certificate check failed");
    }
    return x;
}

}  // namespace lgm
