/*
 * charring.hpp
 *
 * Exact character arithmetic for the finite-rank groups: Laurent polynomials
 * in the torus variables, irreducible characters for GL(d) (Schur polynomials
 * shifted by a power of the determinant) and Sp(2k) (symplectic bialternant),
 * decomposition of invariant characters into irreducibles by leading-term
 * peeling, Weyl dimension formulas, and virtual character classes.
 */
#pragma once

#include "stabrep/partition.hpp"

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace stabrep {

struct LaurentPoly {
    int rank = 0;  // number of torus variables
    std::map<std::vector<int>, mpz_class> coeffs;
};

LaurentPoly lp_zero(int rank);
LaurentPoly lp_monomial(std::vector<int> exponent, const mpz_class& c);
LaurentPoly lp_add(const LaurentPoly& x, const LaurentPoly& y);
LaurentPoly lp_sub(const LaurentPoly& x, const LaurentPoly& y);
LaurentPoly lp_multiply(const LaurentPoly& x, const LaurentPoly& y);
LaurentPoly lp_scale(const LaurentPoly& x, const mpz_class& c);
// Exact quotient; throws if the division does not terminate exactly.
LaurentPoly lp_divide_exact(const LaurentPoly& num, const LaurentPoly& den);

enum class FinGroup { gl, sp, sym };

std::string fin_group_name(FinGroup g);

// Irreducible character of GL(d) with dominant weight w (length d, weakly
// decreasing integers): det-power shift of a Schur polynomial.
LaurentPoly gl_character(const std::vector<int>& weight, int d);
// Irreducible character of Sp(2k) with highest weight mu (length <= k).
LaurentPoly sp_character(const Partition& mu, int k);

// A virtual sum of irreducibles at finite rank. Keys are full weight vectors
// (length d) for gl, partitions with zeros stripped for sp and sym.
struct FiniteClass {
    FinGroup group = FinGroup::gl;
    int rank = 0;
    std::map<std::vector<int>, mpz_class> terms;

    friend bool operator==(const FiniteClass&, const FiniteClass&) = default;
};

FiniteClass fc_add(const FiniteClass& x, const FiniteClass& y);
FiniteClass fc_scale(const FiniteClass& x, const mpz_class& c);
// Tensor-product multiplication: character arithmetic for gl/sp, Kronecker
// coefficients for sym.
FiniteClass fc_multiply(const FiniteClass& x, const FiniteClass& y);

LaurentPoly finite_character(const FiniteClass& x);
// Inverse of finite_character on Weyl-invariant input (gl and sp only).
FiniteClass decompose_character(const LaurentPoly& chi, FinGroup group);

mpz_class weyl_dim_gl(const std::vector<int>& weight, int d);
mpz_class weyl_dim_sp(const Partition& mu, int k);
mpz_class finite_dim(const FiniteClass& x);  // virtual dimension

}  // namespace stabrep
