#include <algorithm>
#include <cstdlib>

#include "catlim/simpl.hpp"

namespace catlim {

IntMat mat_mul(const IntMat& x, const IntMat& y) {
    if (x.cols != y.rows) throw PreconditionError("mat_mul: shape mismatch");
    IntMat z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            if (x.at(i, k) == 0) continue;
            for (int j = 0; j < y.cols; ++j) z.at(i, j) += x.at(i, k) * y.at(k, j);
        }
    return z;
}

bool mat_equal(const IntMat& x, const IntMat& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
}

IntMat identity_mat(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

mpz_class determinant(const IntMat& m) {
    if (m.rows != m.cols) throw PreconditionError("determinant: not square");
    int n = m.rows;
    if (n == 0) return 1;
    IntMat b = m;
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (b.at(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (b.at(i, k) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(b.at(k, j), b.at(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                mpz_class num = b.at(i, j) * b.at(k, k) - b.at(i, k) * b.at(k, j);
                mpz_class q;
                mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                b.at(i, j) = q;
            }
        prev = b.at(k, k);
    }
    return sign > 0 ? b.at(n - 1, n - 1) : -b.at(n - 1, n - 1);
}

int bareiss_rank(const IntMat& m) {
    IntMat b = m;
    int rank = 0;
    mpz_class prev = 1;
    int row = 0;
    for (int col = 0; col < b.cols && row < b.rows; ++col) {
        int piv = -1;
        for (int i = row; i < b.rows; ++i)
            if (b.at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < b.cols; ++j) std::swap(b.at(row, j), b.at(piv, j));
        for (int i = row + 1; i < b.rows; ++i)
            for (int j = col + 1; j < b.cols; ++j) {
                mpz_class num = b.at(i, j) * b.at(row, col) - b.at(i, col) * b.at(row, j);
                mpz_class q;
                mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                b.at(i, j) = q;
            }
        for (int i = row + 1; i < b.rows; ++i) b.at(i, col) = 0;
        prev = b.at(row, col);
        ++row;
        ++rank;
    }
    return rank;
}

std::vector<mpz_class> SmithResult::diagonal() const {
    std::vector<mpz_class> out;
    int n = std::min(d.rows, d.cols);
    for (int i = 0; i < n; ++i)
        if (d.at(i, i) != 0) out.push_back(d.at(i, i));
    return out;
}

int SmithResult::rank() const { return static_cast<int>(diagonal().size()); }

namespace {
void row_swap(IntMat& m, int a, int b) {
    for (int j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
}
void col_swap(IntMat& m, int a, int b) {
    for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, a), m.at(i, b));
}
// row a -= q * row b
void row_sub(IntMat& m, int a, const mpz_class& q, int b) {
    for (int j = 0; j < m.cols; ++j) m.at(a, j) -= q * m.at(b, j);
}
void col_sub(IntMat& m, int a, const mpz_class& q, int b) {
    for (int i = 0; i < m.rows; ++i) m.at(i, a) -= q * m.at(i, b);
}
void row_add(IntMat& m, int a, int b) {
    for (int j = 0; j < m.cols; ++j) m.at(a, j) += m.at(b, j);
}
void row_neg(IntMat& m, int a) {
    for (int j = 0; j < m.cols; ++j) m.at(a, j) = -m.at(a, j);
}
}  // namespace

SmithResult smith_normal_form(const IntMat& m) {
    SmithResult r;
    r.d = m;
    r.u = identity_mat(m.rows);
    r.v = identity_mat(m.cols);
    IntMat& d = r.d;
    int t = 0;
    const int tmax = std::min(m.rows, m.cols);
    while (t < tmax) {
        // smallest-magnitude nonzero pivot in the remaining block
        int pi = -1, pj = -1;
        mpz_class best = 0;
        for (int i = t; i < d.rows; ++i)
            for (int j = t; j < d.cols; ++j) {
                if (d.at(i, j) == 0) continue;
                mpz_class mag = abs(d.at(i, j));
                if (pi < 0 || mag < best) {
                    pi = i;
                    pj = j;
                    best = mag;
                }
            }
        if (pi < 0) break;
        if (pi != t) {
            row_swap(d, t, pi);
            row_swap(r.u, t, pi);
        }
        if (pj != t) {
            col_swap(d, t, pj);
            col_swap(r.v, t, pj);
        }
        bool dirty = true;
        while (dirty) {
            dirty = false;
            // clear column t
            for (int i = t + 1; i < d.rows; ++i) {
                if (d.at(i, t) == 0) continue;
                mpz_class q = d.at(i, t) / d.at(t, t);  // truncated
                if (q != 0) {
                    row_sub(d, i, q, t);
                    row_sub(r.u, i, q, t);
                }
                if (d.at(i, t) != 0) {
                    row_swap(d, t, i);
                    row_swap(r.u, t, i);
                    dirty = true;
                }
            }
            // clear row t
            for (int j = t + 1; j < d.cols; ++j) {
                if (d.at(t, j) == 0) continue;
                mpz_class q = d.at(t, j) / d.at(t, t);
                if (q != 0) {
                    col_sub(d, j, q, t);
                    col_sub(r.v, j, q, t);
                }
                if (d.at(t, j) != 0) {
                    col_swap(d, t, j);
                    col_swap(r.v, t, j);
                    dirty = true;
                }
            }
        }
        // divisibility: every remaining entry must be divisible by the pivot
        bool restart = false;
        for (int i = t + 1; i < d.rows && !restart; ++i)
            for (int j = t + 1; j < d.cols && !restart; ++j)
                if (d.at(i, j) % d.at(t, t) != 0) {
                    row_add(d, t, i);
                    row_add(r.u, t, i);
                    restart = true;
                }
        if (restart) continue;  // redo step t with the enlarged row
        if (d.at(t, t) < 0) {
            row_neg(d, t);
            row_neg(r.u, t);
        }
        ++t;
    }
    return r;
}

}  // namespace catlim
