/*
 * partition.hpp
 *
 * Partition / Young diagram combinatorics: transpose, padding, the Q(+1) and
 * Q(-1) families (arm/leg conditions along the main diagonal), border strips,
 * enumeration helpers and the canonical text syntax ("3,1,1"; "" or "-" for
 * the empty partition).
 *
 * Partitions are stored canonically: weakly decreasing positive parts, no
 * trailing zeros, so structural equality is semantic equality.
 */
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace stabrep {

using Partition = std::vector<int>;

// 1-based box coordinates, English convention (row grows downward).
struct Box {
    int row = 0;
    int col = 0;
    friend bool operator==(const Box&, const Box&) = default;
};

// A connected skew shape with no 2x2 square; height = rows spanned - 1.
struct BorderStrip {
    std::vector<Box> boxes;
    int height = 0;
};

bool is_partition(const Partition& p);
void normalize_partition(Partition& p);  // strips trailing zeros; rejects bad input

int psize(const Partition& p);    // |p| = sum of parts
int plength(const Partition& p);  // number of parts
int part_at(const Partition& p, int i);  // 1-based part, 0 beyond length

Partition transpose(const Partition& p);

// (k, p_1, ..., p_r) when k >= p_1; absent otherwise. pad(empty, 0) = empty.
std::optional<Partition> pad(const Partition& p, int k);

bool contains(const Partition& outer, const Partition& inner);  // inner ⊆ outer

// sign = +1: arm = leg + 1 at every diagonal box (family Q₁);
// sign = -1: leg = arm + 1 (family Q₋₁). Empty partition belongs to both.
bool in_Q(const Partition& p, int sign);

Partition double_parts(const Partition& p);  // (2p_1, 2p_2, ...)
bool all_parts_even(const Partition& p);
bool all_multiplicities_even(const Partition& p);  // i.e. transpose has even parts

// All border strips of the given size removable from p so that a partition
// shape remains; if anchored, the strip must contain box (1, p_1).
std::vector<std::pair<BorderStrip, Partition>>
border_strips(const Partition& p, int size, bool anchored);

// Enumeration, in (size, lex) order within each size.
std::vector<Partition> partitions_of(int n);
std::vector<Partition> partitions_up_to(int n);  // sizes 0..n

// Canonical ordering used for every user-visible listing: by size, then
// lexicographically on the part vectors.
bool partition_less(const Partition& a, const Partition& b);

struct PartitionLess {
    bool operator()(const Partition& a, const Partition& b) const {
        return partition_less(a, b);
    }
};

// Text syntax: "3,1,1"; empty string or "-" denotes the empty partition.
Partition parse_partition(const std::string& text);  // throws std::invalid_argument
std::string partition_to_string(const Partition& p);

}  // namespace stabrep
