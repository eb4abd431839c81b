/*
 * kring.hpp
 *
 * Stable Grothendieck rings: simple-object labels for the five stable
 * categories, tensor structure constants, comultiplication, restriction and
 * polarization between the general linear and orthosymplectic rings, Ext
 * dimensions, block membership, labeled-graph Littlewood-Richardson sums,
 * Littlewood complexes and the injective-to-simple transition matrices.
 *
 * The osp ring is a single category whose operations come in two readings
 * (O and Sp) differing by transposing doubled shapes; ops that depend on the
 * reading take an OspVariant flag.
 */
#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "stabrep/partition.hpp"

namespace stabrep {

enum class KCat { glpol, ga, gl, osp, sym };
enum class OspVariant { o, sp };

std::string kcat_name(KCat c);
KCat kcat_from_name(const std::string& name);
std::string variant_name(OspVariant v);
OspVariant variant_from_name(const std::string& name);

// Simple-object label: a single partition, except in the gl category where
// simples are indexed by ordered pairs (lam, lam2).
struct Label {
    Partition lam;
    Partition lam2;
    friend bool operator==(const Label&, const Label&) = default;
    friend auto operator<=>(const Label&, const Label&) = default;
};

int label_size(const Label& x);

// Canonical listing order: total size, then lexicographic on the parts.
bool label_less(const Label& a, const Label& b);
struct LabelLess {
    bool operator()(const Label& a, const Label& b) const { return label_less(a, b); }
};

// Text syntax: "2,1" for one-partition labels, "2,1|1" for gl pairs.
Label parse_label(KCat cat, const std::string& text);
std::string label_to_string(const Label& x);

struct KClass {
    KCat cat = KCat::glpol;
    std::map<Label, mpz_class, LabelLess> terms;  // zero coefficients never stored
};

KClass kclass_zero(KCat cat);
KClass kclass_simple(KCat cat, const Label& x);
KClass kclass_add(const KClass& a, const KClass& b);
KClass kclass_scale(KClass a, const mpz_class& c);
bool kclass_equal(const KClass& a, const KClass& b);

// Tensor product, bilinear over virtual classes; simple products memoized.
KClass stable_tensor(const KClass& x, const KClass& y);
KClass stable_tensor(KCat cat, const Label& x, const Label& y);

using LabelPair = std::pair<Label, Label>;
struct LabelPairLess {
    bool operator()(const LabelPair& a, const LabelPair& b) const;
};
using LabelPairMap = std::map<LabelPair, mpz_class, LabelPairLess>;

// Comultiplication of a simple (gl, or osp in the chosen reading).
LabelPairMap comultiply(KCat cat, const Label& x, OspVariant variant = OspVariant::o);

// Restriction K(gl) -> K(osp), linear over virtual classes.
KClass restrict_gl(const KClass& x, OspVariant variant);

// Polarization K(osp) -> K(gl), linear over virtual classes.
KClass polarize(const KClass& x, OspVariant variant);

// dim Ext^i(V_source, V_target) for gl, osp (variant reading) and ga.
mpz_class ext_dim(KCat cat, const Label& source, const Label& target, int i,
                  OspVariant variant = OspVariant::o);

// Block membership for gl (difference of sizes), osp (size parity) and ga
// (a single block).
bool same_block(KCat cat, const Label& a, const Label& b);

struct LabeledGraph {
    int vertices = 0;
    std::vector<std::tuple<int, int, Partition>> edges;
};

// Sum over all vertex labelings of the product of the edge LR coefficients
// c^{lam(e)}_{mu(i), mu(j)}. Finite because each edge bounds the label sizes
// at its endpoints; isolated vertices are rejected.
mpz_class lr_graph_eval(const LabeledGraph& g);

// Littlewood complex of a simple: one class of injective labels per
// cohomological degree (pairs for gl, polynomial labels for osp/ga).
// Trailing zero levels are trimmed; level 0 is the label itself.
std::vector<KClass> littlewood_complex(KCat cat, const Label& x,
                                       OspVariant variant = OspVariant::o);

// Class of the injective object S_lam(V) (tensor S_lam2(V_*) for gl) in the
// simple basis. For ga this is the inverse of the unitriangular Littlewood
// matrix, computed recursively.
KClass injective_to_simple(KCat cat, const Label& inj,
                           OspVariant variant = OspVariant::o);

// All labels of the category with size at most maxsize, in canonical order.
std::vector<Label> labels_up_to(KCat cat, int maxsize);

}  // namespace stabrep
