#include "lgmirror/linalg.hpp"

#include <algorithm>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace lgm {

Int det(Mat a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("det: matrix not square");
    if (n == 1) return a[0][0];
    Int sgn = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a[piv][k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(a[piv], a[k]);
            sgn = -sgn;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                __int128 v = static_cast<__int128>(a[i][j]) * a[k][k] -
                             static_cast<__int128>(a[i][k]) * a[k][j];
                v /= prev;  // exact by Sylvester's identity
                if (v > INT64_MAX || v < INT64_MIN) throw OverflowError("integer overflow in determinant");
                a[i][j] = static_cast<Int>(v);
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return mul(sgn, a[n - 1][n - 1]);
}

int rank(const Mat& a) {
    RMat m;
    for (const auto& row : a) m.emplace_back(row.begin(), row.end());
    if (m.empty()) return 0;
    const std::size_t cols = m[0].size();
    int r = 0;
    for (std::size_t c = 0; c < cols && r < static_cast<int>(m.size()); ++c) {
        std::size_t piv = r;
        while (piv < m.size() && m[piv][c] == Rat(0)) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            if (m[i][c] == Rat(0)) continue;
            Rat f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

namespace {

Mat identity(std::size_t n) {
    Mat m(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

// row_i -= q * row_j
void row_op(Mat& m, std::size_t i, std::size_t j, Int q) {
    for (std::size_t c = 0; c < m[i].size(); ++c) m[i][c] = sub(m[i][c], mul(q, m[j][c]));
}
// col_i -= q * col_j
void col_op(Mat& m, std::size_t i, std::size_t j, Int q) {
    for (auto& row : m) row[i] = sub(row[i], mul(q, row[j]));
}
void col_swap(Mat& m, std::size_t i, std::size_t j) {
    for (auto& row : m) std::swap(row[i], row[j]);
}

}  // namespace

SmithForm smith_normal_form(const Mat& a) {
    const std::size_t m = a.size();
    const std::size_t n = m ? a[0].size() : 0;
    SmithForm s{identity(m), identity(n), a, {}};
    Mat& D = s.D;
    bool finished = false;
    for (std::size_t t = 0; t < std::min(m, n) && !finished; ++t) {
        while (true) {
            // smallest nonzero entry of the trailing block becomes the pivot
            std::size_t bi = m, bj = n;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (D[i][j] != 0 && (bi == m || iabs(D[i][j]) < iabs(D[bi][bj]))) {
                        bi = i;
                        bj = j;
                    }
            if (bi == m) {
                finished = true;
                break;
            }
            if (bi != t) {
                std::swap(D[bi], D[t]);
                std::swap(s.U[bi], s.U[t]);
            }
            if (bj != t) {
                col_swap(D, bj, t);
                col_swap(s.V, bj, t);
            }
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (D[i][t] == 0) continue;
                Int q = D[i][t] / D[t][t];
                row_op(D, i, t, q);
                row_op(s.U, i, t, q);
                if (D[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (D[t][j] == 0) continue;
                Int q = D[t][j] / D[t][t];
                col_op(D, j, t, q);
                col_op(s.V, j, t, q);
                if (D[t][j] != 0) clean = false;
            }
            if (!clean) continue;
            // divisibility condition on the trailing block
            std::size_t bad = m;
            for (std::size_t i = t + 1; i < m && bad == m; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (D[i][j] % D[t][t] != 0) {
                        bad = i;
                        break;
                    }
            if (bad == m) break;
            row_op(D, t, bad, -1);
            row_op(s.U, t, bad, -1);
        }
        if (finished) break;
        if (D[t][t] < 0) {
            for (auto& x : D[t]) x = neg(x);
            for (auto& x : s.U[t]) x = neg(x);
        }
    }
    for (std::size_t k = 0; k < std::min(m, n); ++k)
        if (D[k][k] != 0) s.divisors.push_back(D[k][k]);
    return s;
}

Mat unimodular_inverse(const Mat& u) {
    const std::size_t n = u.size();
    RMat m(n, RVec(2 * n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = Rat(u[i][j]);
        m[i][n + i] = Rat(1);
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c] == Rat(0)) ++piv;
        if (piv == n) throw std::invalid_argument("unimodular_inverse: singular matrix");
        std::swap(m[piv], m[c]);
        Rat p = m[c][c];
        for (auto& x : m[c]) x = x / p;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m[i][c] == Rat(0)) continue;
            Rat f = m[i][c];
            for (std::size_t j = 0; j < 2 * n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    Mat inv(n, Vec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!m[i][n + j].is_integer()) throw std::invalid_argument("unimodular_inverse: not unimodular");
            inv[i][j] = m[i][n + j].num();
        }
    return inv;
}

LatticeBasis saturated_basis(const Mat& rows, int n) {
    LatticeBasis b;
    if (rows.empty()) {
        b.full = identity(n);
        b.full_inv = identity(n);
        return b;
    }
    SmithForm s = smith_normal_form(rows);
    b.r = static_cast<int>(s.divisors.size());
    b.full_inv = s.V;
    b.full = unimodular_inverse(s.V);
    return b;
}

Mat integer_kernel(const Mat& a, int n) {
    if (a.empty()) return identity(n);
    // column Hermite reduction of A in big integers; V records the column operations
    using boost::multiprecision::cpp_int;
    using BMat = std::vector<std::vector<cpp_int>>;
    const std::size_t m = a.size(), nn = static_cast<std::size_t>(n);
    BMat A(m, std::vector<cpp_int>(nn)), V(nn, std::vector<cpp_int>(nn));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < nn; ++j) A[i][j] = a[i][j];
    for (std::size_t j = 0; j < nn; ++j) V[j][j] = 1;
    auto col_combine = [&](std::size_t dst, std::size_t src, const cpp_int& q) {
        for (auto& row : A) row[dst] -= q * row[src];
        for (auto& row : V) row[dst] -= q * row[src];
    };
    auto col_swap_b = [&](std::size_t x, std::size_t y) {
        for (auto& row : A) std::swap(row[x], row[y]);
        for (auto& row : V) std::swap(row[x], row[y]);
    };
    std::size_t rank = 0;
    for (std::size_t i = 0; i < m && rank < nn; ++i) {
        while (true) {
            std::size_t piv = nn;
            for (std::size_t j = rank; j < nn; ++j)
                if (A[i][j] != 0 && (piv == nn || abs(A[i][j]) < abs(A[i][piv]))) piv = j;
            if (piv == nn) break;
            if (piv != rank) col_swap_b(piv, rank);
            bool done = true;
            for (std::size_t j = rank + 1; j < nn; ++j) {
                if (A[i][j] == 0) continue;
                col_combine(j, rank, A[i][j] / A[i][rank]);
                if (A[i][j] != 0) done = false;
            }
            if (done) {
                ++rank;
                break;
            }
        }
    }
    // the trailing columns of V span the kernel; shorten them pairwise
    BMat ker(V.size() ? nn - rank : 0);
    for (std::size_t j = rank; j < nn; ++j)
        for (std::size_t i = 0; i < nn; ++i) ker[j - rank].push_back(V[i][j]);
    auto norm2 = [](const std::vector<cpp_int>& v) {
        cpp_int s = 0;
        for (const auto& x : v) s += x * x;
        return s;
    };
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t x = 0; x < ker.size(); ++x)
            for (std::size_t y = 0; y < ker.size(); ++y) {
                if (x == y) continue;
                cpp_int dxy = 0;
                for (std::size_t i = 0; i < nn; ++i) dxy += ker[x][i] * ker[y][i];
                const cpp_int ny = norm2(ker[y]);
                // nearest integer to dxy / ny
                cpp_int q = (2 * dxy + ny) / (2 * ny);
                if (2 * dxy + ny < 0 && (2 * dxy + ny) % (2 * ny) != 0) q -= 1;
                if (q == 0) continue;
                std::vector<cpp_int> cand = ker[x];
                for (std::size_t i = 0; i < nn; ++i) cand[i] -= q * ker[y][i];
                if (norm2(cand) < norm2(ker[x])) {
                    ker[x] = cand;
                    changed = true;
                }
            }
    }
    Mat k;
    for (const auto& v : ker) {
        Vec col;
        for (const auto& x : v) {
            if (x > INT64_MAX || x < INT64_MIN) throw std::overflow_error("integer_kernel: basis exceeds 64 bits");
            col.push_back(static_cast<Int>(x));
        }
        k.push_back(col);
    }
    return k;
}

Vec cofactor_normal(const Mat& rows, int dim) {
    const std::size_t n = static_cast<std::size_t>(dim);
    if (rows.size() + 1 != n) throw std::invalid_argument("cofactor_normal: need n-1 vectors in Z^n");
    Vec nv(n);
    for (std::size_t j = 0; j < n; ++j) {
        Mat minor(rows.size(), Vec());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) minor[i].push_back(rows[i][c]);
        Int d = det(minor);
        nv[j] = (j % 2 == 0) ? d : neg(d);
    }
    return primitive(nv);
}

std::optional<RVec> rational_solve(const RMat& a, const RVec& b) {
    const std::size_t m = a.size();
    const std::size_t n = m ? a[0].size() : 0;
    RMat aug = a;
    for (std::size_t i = 0; i < m; ++i) aug[i].push_back(b[i]);
    std::vector<std::size_t> pivcol;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t piv = r;
        while (piv < m && aug[piv][c] == Rat(0)) ++piv;
        if (piv == m) continue;
        std::swap(aug[piv], aug[r]);
        Rat p = aug[r][c];
        for (auto& x : aug[r]) x = x / p;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || aug[i][c] == Rat(0)) continue;
            Rat f = aug[i][c];
            for (std::size_t j = c; j <= n; ++j) aug[i][j] -= f * aug[r][j];
        }
        pivcol.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < m; ++i)
        if (aug[i][n] != Rat(0)) return std::nullopt;
    RVec x(n, Rat(0));
    for (std::size_t i = 0; i < r; ++i) x[pivcol[i]] = aug[i][n];
    return x;
}

int affine_dim(const std::vector<Vec>& pts) {
    if (pts.empty()) return -1;
    Mat diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(vsub(pts[i], pts[0]));
    return rank(diffs);
}

}  // namespace lgm
