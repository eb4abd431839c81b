/*
 * symfunc.hpp
 *
 * Littlewood–Richardson coefficients (lattice-word tableau count, memoized),
 * skew Schur expansions, an independent monomial-expansion oracle (semistandard
 * tableau generating functions + highest-term peeling), Murnaghan–Nakayama
 * character values, and finite/stable Kronecker coefficients.
 *
 * Everything is exact; inner products that can exceed 64 bits use GMP.
 */
#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

#include "stabrep/partition.hpp"

namespace stabrep {

// Monomial expansion of a symmetric polynomial in a fixed number of variables.
struct SymPoly {
    int nvars = 0;
    std::map<std::vector<int>, mpz_class> coeffs;  // exponent vector -> coefficient

    bool is_zero() const { return coeffs.empty(); }
};

SymPoly sympoly_multiply(const SymPoly& a, const SymPoly& b);
SymPoly sympoly_sub(const SymPoly& a, const SymPoly& b);

// Monomial expansion of the Schur polynomial s_p in nvars variables
// (semistandard tableaux with entries 1..nvars). Memoized internally.
const SymPoly& schur_poly(const Partition& p, int nvars);

// Monomial expansion of the skew Schur polynomial s_{p/q}.
SymPoly skew_schur_poly(const Partition& p, const Partition& q, int nvars);

// Littlewood–Richardson coefficient c^lam_{mu,nu} (lattice-word tableaux).
long lr_coeff(const Partition& lam, const Partition& mu, const Partition& nu);

// {nu -> c^lam_{mu,nu}}; empty when mu is not contained in lam.
std::map<Partition, long, PartitionLess> skew_expand(const Partition& lam, const Partition& mu);

// Independent cross-check: multiply monomial expansions of s_mu and s_nu and
// peel off Schur polynomials by lexicographically greatest exponent.
// Requires nvars >= |mu| + |nu| so no constituent is truncated.
std::map<Partition, long, PartitionLess>
schur_product_oracle(const Partition& mu, const Partition& nu, int nvars);

// Decompose a symmetric polynomial into Schur polynomials by peeling.
std::map<Partition, mpz_class, PartitionLess> decompose_schur(SymPoly poly);

// Irreducible symmetric group character chi^lam at the given cycle type
// (a partition of |lam|), via the Murnaghan–Nakayama rule.
long long character_mn(const Partition& lam, const Partition& cycle_type);

// Finite Kronecker coefficient g_{lam,mu}^{nu} (all three of equal size).
long kronecker(const Partition& lam, const Partition& mu, const Partition& nu);

// Stable (reduced) Kronecker coefficient: evaluate the finite coefficient on
// the padded triple at a conservative rank and again one higher; throws
// std::runtime_error if the two disagree.
long stable_kronecker(const Partition& lam, const Partition& mu, const Partition& nu);

mpz_class factorial(int n);

// Hook length formula: dimension of the symmetric group irreducible M_lam.
mpz_class hook_dimension(const Partition& lam);

}  // namespace stabrep
