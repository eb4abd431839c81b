/*
 * matrix.hpp
 *
 * Dense exact linear algebra over arbitrary-precision integers/rationals:
 * multiplication, rank by fraction-free (Bareiss) elimination, rational
 * nullspace and linear solves. Dimensions stay at desk scale, so dense
 * storage is fine.
 */
#pragma once

#include <gmpxx.h>

#include <vector>

namespace stabrep {

struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<mpz_class> a;  // row-major

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    mpz_class& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const mpz_class& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    static IntMatrix identity(int n);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

IntMatrix multiply(const IntMatrix& x, const IntMatrix& y);
IntMatrix scale(const IntMatrix& x, const mpz_class& c);
IntMatrix transpose_matrix(const IntMatrix& x);
mpz_class trace(const IntMatrix& x);

// Rank over Q by fraction-free Gaussian elimination (input copied).
int rank_bareiss(const IntMatrix& x);

// Basis of the rational nullspace {v : x v = 0}, cleared to primitive integer
// column vectors; returned as the columns of a (cols × nullity) matrix.
IntMatrix nullspace(const IntMatrix& x);

// Rational matrices appear only as intermediates (solves, projections).
struct RatMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<mpq_class> a;

    RatMatrix() = default;
    RatMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
    mpq_class& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const mpq_class& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

// Solves x * sol = rhs where x has full column rank; throws if inconsistent.
RatMatrix solve_full_column_rank(const IntMatrix& x, const IntMatrix& rhs);

mpq_class trace_rat(const RatMatrix& x);

}  // namespace stabrep
