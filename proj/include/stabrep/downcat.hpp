/*
 * downcat.hpp
 *
 * The five downwards categories of morphisms between finite sets (bisets for
 * the walled flavor): a morphism carries a matching / oriented matching /
 * subset on the source together with a bijection from the leftover source
 * onto the target, or, for the partition flavor, a set partition of
 * source ⊔ target in which every part meets the source.
 *
 * Element numbering: source elements 0..src_n-1 (for the walled flavor the
 * positive half is 0..src_n-1 and the negative half src_n..src_n+src_m-1),
 * and in partition-flavor parts target elements are offset by the source
 * size.
 */
#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace stabrep {

enum class DownFlavor { dwb, db, dsb, ds, dp };

std::string flavor_name(DownFlavor f);
DownFlavor flavor_from_name(const std::string& name);

struct DownMorphism {
    DownFlavor flavor = DownFlavor::db;
    int src_n = 0, src_m = 0;  // src_m only for dwb
    int tgt_n = 0, tgt_m = 0;
    std::vector<std::pair<int, int>> matching;  // dwb/db/dsb; dsb pairs are directed
    std::vector<int> subset;                    // ds
    std::map<int, int> bij;                     // leftover source element -> target element
    std::vector<std::vector<int>> parts;        // dp

    friend bool operator==(const DownMorphism&, const DownMorphism&) = default;
    friend auto operator<=>(const DownMorphism&, const DownMorphism&) = default;
};

// Validate and canonicalize (sorted matchings/subsets/parts; undirected pairs
// stored low-high).
DownMorphism make_down_morphism(DownMorphism m);

DownMorphism identity_down(DownFlavor flavor, int n, int m = 0);

// Category composite: apply f first, then g (f.target must equal g.source).
DownMorphism compose_down(const DownMorphism& f, const DownMorphism& g);

struct DpClassification {
    bool mono = false;
    bool epi = false;
    bool proper = false;
    bool rectangular = false;
    std::optional<DownMorphism> transpose;
};

DpClassification classify_dp(const DownMorphism& f);

// All morphisms between the given objects (desk scale).
std::vector<DownMorphism> enumerate_down_morphisms(DownFlavor flavor, int src_n, int tgt_n,
                                                   int src_m = 0, int tgt_m = 0);

}  // namespace stabrep
