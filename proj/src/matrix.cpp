#include "stabrep/matrix.hpp"

#include <stdexcept>

namespace stabrep {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix multiply(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matrix shape mismatch");
    IntMatrix out(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i) {
        for (int k = 0; k < x.cols; ++k) {
            const mpz_class& v = x.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < y.cols; ++j) {
                const mpz_class& w = y.at(k, j);
                if (w != 0) out.at(i, j) += v * w;
            }
        }
    }
    return out;
}

IntMatrix scale(const IntMatrix& x, const mpz_class& c) {
    IntMatrix out = x;
    for (auto& v : out.a) v *= c;
    return out;
}

IntMatrix transpose_matrix(const IntMatrix& x) {
    IntMatrix out(x.cols, x.rows);
    for (int i = 0; i < x.rows; ++i) {
        for (int j = 0; j < x.cols; ++j) out.at(j, i) = x.at(i, j);
    }
    return out;
}

mpz_class trace(const IntMatrix& x) {
    mpz_class t = 0;
    for (int i = 0; i < x.rows && i < x.cols; ++i) t += x.at(i, i);
    return t;
}

int rank_bareiss(const IntMatrix& x) {
    IntMatrix m = x;
    int rank = 0;
    mpz_class prev = 1;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r) {
            if (m.at(r, col) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != rank) {
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
        }
        const mpz_class piv = m.at(rank, col);
        for (int r = rank + 1; r < m.rows; ++r) {
            mpz_class head = m.at(r, col);
            if (head == 0 && piv == prev) continue;  // still must rescale otherwise
            for (int j = col; j < m.cols; ++j) {
                mpz_class v = piv * m.at(r, j) - head * m.at(rank, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m.at(r, j) = v;
            }
        }
        prev = piv;
        ++rank;
    }
    return rank;
}

namespace {

// Reduced row echelon form over Q; returns pivot column of each pivot row.
std::vector<int> rref(RatMatrix& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int pivot = -1;
        for (int r = row; r < m.rows; ++r) {
            if (m.at(r, col) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != row) {
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(row, j));
        }
        mpq_class inv = m.at(row, col);
        for (int j = col; j < m.cols; ++j) m.at(row, j) /= inv;
        for (int r = 0; r < m.rows; ++r) {
            if (r == row) continue;
            mpq_class f = m.at(r, col);
            if (f == 0) continue;
            for (int j = col; j < m.cols; ++j) m.at(r, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

IntMatrix nullspace(const IntMatrix& x) {
    RatMatrix m(x.rows, x.cols);
    for (size_t i = 0; i < x.a.size(); ++i) m.a[i] = x.a[i];
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(x.cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < x.cols; ++c) {
        if (!is_pivot[c]) free_cols.push_back(c);
    }
    IntMatrix basis(x.cols, static_cast<int>(free_cols.size()));
    for (size_t k = 0; k < free_cols.size(); ++k) {
        int fc = free_cols[k];
        // Rational solution with free variable fc = 1, other free vars 0.
        std::vector<mpq_class> v(x.cols, mpq_class(0));
        v[fc] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(static_cast<int>(r), fc);
        mpz_class lcm = 1;
        for (auto& q : v) {
            q.canonicalize();
            mpz_class den = q.get_den();
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        }
        mpz_class gcd = 0;
        std::vector<mpz_class> w(x.cols);
        for (int i = 0; i < x.cols; ++i) {
            mpq_class q = v[i] * mpq_class(lcm);
            q.canonicalize();
            w[i] = q.get_num();
            mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), w[i].get_mpz_t());
        }
        if (gcd == 0) gcd = 1;
        for (int i = 0; i < x.cols; ++i) {
            mpz_divexact(w[i].get_mpz_t(), w[i].get_mpz_t(), gcd.get_mpz_t());
            basis.at(i, static_cast<int>(k)) = w[i];
        }
    }
    return basis;
}

RatMatrix solve_full_column_rank(const IntMatrix& x, const IntMatrix& rhs) {
    if (x.rows != rhs.rows) throw std::invalid_argument("solve: row mismatch");
    // Eliminate on [x | rhs]; x must have full column rank.
    RatMatrix m(x.rows, x.cols + rhs.cols);
    for (int i = 0; i < x.rows; ++i) {
        for (int j = 0; j < x.cols; ++j) m.at(i, j) = x.at(i, j);
        for (int j = 0; j < rhs.cols; ++j) m.at(i, x.cols + j) = rhs.at(i, j);
    }
    std::vector<int> pivots = rref(m);
    RatMatrix sol(x.cols, rhs.cols);
    int seen = 0;
    for (size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] >= x.cols) throw std::runtime_error("solve: inconsistent system");
        for (int j = 0; j < rhs.cols; ++j) {
            sol.at(pivots[r], j) = m.at(static_cast<int>(r), x.cols + j);
        }
        ++seen;
    }
    if (seen != x.cols) throw std::runtime_error("solve: matrix not of full column rank");
    // Rows of m beyond the pivots must have zero rhs for consistency.
    for (int r = seen; r < m.rows; ++r) {
        for (int j = 0; j < rhs.cols; ++j) {
            if (m.at(r, x.cols + j) != 0) throw std::runtime_error("solve: inconsistent system");
        }
    }
    return sol;
}

mpq_class trace_rat(const RatMatrix& x) {
    mpq_class t = 0;
    for (int i = 0; i < x.rows && i < x.cols; ++i) t += x.at(i, i);
    return t;
}

}  // namespace stabrep
