/*
 * diagram.hpp
 *
 * The four diagram flavors (Brauer, signed Brauer, walled Brauer, set
 * partition) on two rows of vertices, their composition with middle-loop
 * counting and sign bookkeeping, the t-polynomial diagram algebras, and
 * enumeration of the finite monoids.
 *
 * Vertex numbering: top row 0..n_top-1, bottom row n_top..n_top+n_bot-1.
 * Walled diagrams place the wall after `wall` columns in each row: top
 * vertices < wall and bottom vertices < n_top + wall sit left of the wall.
 * Signed Brauer diagrams are kept canonical: every horizontal edge is read
 * as directed from its lower-numbered to its higher-numbered vertex, and the
 * stored sign absorbs any orientation flips performed to reach that form.
 */
#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace stabrep {

enum class DiagKind { brauer, signed_brauer, walled_brauer, set_partition };

std::string kind_name(DiagKind k);
DiagKind kind_from_name(const std::string& name);

struct Diagram {
    DiagKind kind = DiagKind::brauer;
    int n_top = 0;
    int n_bot = 0;
    int wall = 0;  // walled flavor only
    std::vector<std::vector<int>> blocks;  // canonical: sorted blocks of sorted vertices
    int sign = 1;  // signed flavor canonical-form sign; +1 otherwise

    int vertex_count() const { return n_top + n_bot; }
    bool is_top(int v) const { return v < n_top; }
    friend bool operator==(const Diagram&, const Diagram&) = default;
    friend auto operator<=>(const Diagram&, const Diagram&) = default;
};

// Validates invariants and brings blocks (and, for the signed flavor, edge
// orientations given as (from, to) pairs) to canonical form.
Diagram make_diagram(DiagKind kind, int n_top, int n_bot, int wall,
                     std::vector<std::vector<int>> blocks, int sign = 1);
Diagram make_signed_diagram(int n_top, int n_bot,
                            std::vector<std::pair<int, int>> directed_edges, int sign = 1);

Diagram identity_diagram(DiagKind kind, int n, int wall = 0);

struct ComposeResult {
    Diagram diagram;  // canonical, sign field +1; the sign is reported separately
    int loops = 0;
    int sign = 1;
};

// Stack a over b (a's bottom row glued to b's top row), trace the middle,
// count the discarded middle-only components, and accumulate orientation
// signs for the signed flavor.
ComposeResult compose(const Diagram& a, const Diagram& b);

// Elements of the diagram algebra over Z[t]: diagram -> polynomial in t.
using TPoly = std::map<int, mpz_class>;  // exponent -> coefficient

struct AlgebraElement {
    DiagKind kind = DiagKind::brauer;
    int n_top = 0;
    int n_bot = 0;
    int wall = 0;
    std::map<Diagram, TPoly> terms;
};

AlgebraElement algebra_from_diagram(const Diagram& d);
AlgebraElement algebra_unit(DiagKind kind, int n, int wall = 0);
AlgebraElement algebra_add(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement algebra_multiply(const AlgebraElement& a, const AlgebraElement& b);
bool algebra_equal(const AlgebraElement& a, const AlgebraElement& b);

// All elements of the degree-n monoid (n_top = n_bot = n).
std::vector<Diagram> enumerate_diagrams(DiagKind kind, int n, int wall = 0);

}  // namespace stabrep
