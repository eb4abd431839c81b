/*
 * schur_weyl.hpp
 *
 * Exact matrix actions of the diagram algebras on tensor space, the
 * double-centralizer dimension checks, and traceless-tensor decompositions.
 *
 * Matrices are written with rows indexed by the top multi-index and columns
 * by the bottom multi-index, so that stacking diagrams matches matrix
 * multiplication: action(a)·action(b) = sign·d^loops·action(a∘b)
 * (with d replaced by -d for the signed flavor).
 */
#pragma once

#include "stabrep/diagram.hpp"
#include "stabrep/matrix.hpp"
#include "stabrep/partition.hpp"

#include <map>
#include <utility>

namespace stabrep {

// The invariant bilinear forms on C^d: symmetric (pair-swap for even d,
// identity for odd) and skew (2x2 blocks [[0,1],[-1,0]], even d only).
IntMatrix orthogonal_form(int d);
IntMatrix symplectic_form(int d);

IntMatrix action_matrix(const Diagram& g, int d);
// Specializes t to d (-d for the signed flavor) and sums the termwise actions.
IntMatrix action_matrix(const AlgebraElement& x, int d);

struct CentralizerResult {
    int dim_image = 0;      // rank of the span of all diagram action matrices
    int dim_commutant = 0;  // solution space of the commutation equations
};

// Square case n_top = n_bot = n; wall applies to the walled flavor.
CentralizerResult centralizer_check(DiagKind kind, int n, int d, int wall = 0);

// Tensor-space actions of the generators of the commuting group or Lie
// algebra: permutation matrices of adjacent transpositions for the partition
// flavor, derivation actions of a Lie-algebra basis otherwise.
std::vector<IntMatrix> group_generator_actions(DiagKind kind, int n, int d, int wall = 0);

enum class TracelessKind { gl, o, sp, sym };

// Decomposition of the traceless subspace of tensor space under the
// symmetric-group slot action: {(λ, λ′) ↦ multiplicity}. The second partition
// is used by the gl flavor (m dual slots) and stays empty otherwise.
std::map<std::pair<Partition, Partition>, long> traceless_decomposition(TracelessKind kind,
                                                                        int n, int m, int d);

}  // namespace stabrep
