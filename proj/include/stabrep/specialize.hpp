/*
 * specialize.hpp
 *
 * Specialization from stable classes to finite rank: the degree-0 functor on
 * simples, the symmetric-group border-strip rule for derived degrees, Euler
 * characteristics of Littlewood complexes evaluated at a finite torus, and
 * the finite tensor product computed through the stable ring.
 *
 * Orthogonal Euler data is only reachable through the Sp reading of the
 * transposed label; the direct O character ring is out of scope.
 */
#pragma once

#include <optional>
#include <vector>

#include "stabrep/charring.hpp"
#include "stabrep/kring.hpp"
#include "stabrep/partition.hpp"

namespace stabrep {

// Outcome of a derived specialization: zero, or a single irreducible label
// (a gl weight vector or partition part list) in one cohomological degree.
struct SpecResult {
    bool nonzero = false;
    int degree = 0;
    std::vector<int> weight;

    friend bool operator==(const SpecResult&, const SpecResult&) = default;
};

// Degree-0 specialization of a simple: gl pairs need l(lam) + l(lam2) <= d;
// the O reading needs the first two columns of lam to hold at most d boxes;
// the Sp reading needs l(lam) <= k; sym pads with a long first row.
std::optional<std::vector<int>> specialize_simple(KCat cat, const Label& x, int rank,
                                                  OspVariant variant = OspVariant::o);

// Symmetric-group derived specialization: the padded closed form for
// d >= |lam|, the unique anchored border strip of size |lam| - d otherwise.
SpecResult derived_specialize_sym(const Partition& lam, int d);

// Alternating sum over the Littlewood complex, each level's character
// evaluated at the finite torus and decomposed exactly.
FiniteClass euler_specialize(KCat cat, const Label& x, int rank,
                             OspVariant variant = OspVariant::sp);

// Stable tensor product followed by termwise Euler specialization.
FiniteClass finite_tensor_via_stable(KCat cat, const Label& x, const Label& y, int rank,
                                     OspVariant variant = OspVariant::sp);

}  // namespace stabrep
