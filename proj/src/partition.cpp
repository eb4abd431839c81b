#include "stabrep/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace stabrep {

bool is_partition(const Partition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 1) return false;
        if (i + 1 < p.size() && p[i] < p[i + 1]) return false;
    }
    return true;
}

void normalize_partition(Partition& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    if (!is_partition(p)) throw std::invalid_argument("not a partition");
}

int psize(const Partition& p) {
    int s = 0;
    for (int x : p) s += x;
    return s;
}

int plength(const Partition& p) { return static_cast<int>(p.size()); }

int part_at(const Partition& p, int i) {
    return (i >= 1 && i <= plength(p)) ? p[i - 1] : 0;
}

Partition transpose(const Partition& p) {
    Partition t;
    if (p.empty()) return t;
    t.resize(p[0]);
    for (int j = 1; j <= p[0]; ++j) {
        int count = 0;
        for (int x : p) {
            if (x >= j) ++count;
        }
        t[j - 1] = count;
    }
    return t;
}

std::optional<Partition> pad(const Partition& p, int k) {
    if (k < 0) return std::nullopt;
    if (!p.empty() && k < p[0]) return std::nullopt;
    if (k == 0) return Partition{};  // p must be empty here; (0) normalizes to ∅
    Partition out;
    out.reserve(p.size() + 1);
    out.push_back(k);
    out.insert(out.end(), p.begin(), p.end());
    return out;
}

bool contains(const Partition& outer, const Partition& inner) {
    if (inner.size() > outer.size()) return false;
    for (size_t i = 0; i < inner.size(); ++i) {
        if (inner[i] > outer[i]) return false;
    }
    return true;
}

bool in_Q(const Partition& p, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    Partition t = transpose(p);
    // Diagonal boxes (i,i) exist while p_i >= i.
    for (int i = 1; i <= plength(p) && part_at(p, i) >= i; ++i) {
        int arm = part_at(p, i) - i;   // boxes to the right of (i,i)
        int leg = part_at(t, i) - i;   // boxes below (i,i)
        if (sign == 1 && arm != leg + 1) return false;
        if (sign == -1 && leg != arm + 1) return false;
    }
    return true;
}

Partition double_parts(const Partition& p) {
    Partition out = p;
    for (int& x : out) x *= 2;
    return out;
}

bool all_parts_even(const Partition& p) {
    for (int x : p) {
        if (x % 2 != 0) return false;
    }
    return true;
}

bool all_multiplicities_even(const Partition& p) {
    for (size_t i = 0; i < p.size();) {
        size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        if ((j - i) % 2 != 0) return false;
        i = j;
    }
    return true;
}

std::vector<std::pair<BorderStrip, Partition>>
border_strips(const Partition& p, int size, bool anchored) {
    std::vector<std::pair<BorderStrip, Partition>> out;
    if (size < 1) throw std::invalid_argument("strip size must be positive");
    int len = plength(p);
    // A removable border strip occupies a contiguous run of rows r1..r2 and is
    // forced there: mu_i = p_{i+1} - 1 for r1 <= i < r2 (exactly one column of
    // overlap between consecutive rows), with mu_r2 fixed by the total size.
    for (int r1 = anchored ? 1 : 1; r1 <= (anchored ? 1 : len); ++r1) {
        for (int r2 = r1; r2 <= len; ++r2) {
            Partition mu = p;
            int removed_above = 0;
            bool ok = true;
            for (int i = r1; i < r2; ++i) {
                mu[i - 1] = part_at(p, i + 1) - 1;
                removed_above += part_at(p, i) - mu[i - 1];
            }
            int last = size - removed_above;
            if (last < 1) continue;  // row r2 must contribute at least one box
            int mu_r2 = part_at(p, r2) - last;
            if (mu_r2 < 0) continue;
            mu[r2 - 1] = mu_r2;
            if (mu_r2 < part_at(p, r2 + 1)) ok = false;  // must stay a partition
            if (!ok) continue;
            Partition rem = mu;
            while (!rem.empty() && rem.back() == 0) rem.pop_back();
            if (!is_partition(rem)) continue;
            BorderStrip strip;
            for (int i = r1; i <= r2; ++i) {
                for (int c = mu[i - 1] + 1; c <= part_at(p, i); ++c) {
                    strip.boxes.push_back(Box{i, c});
                }
            }
            strip.height = r2 - r1;
            out.emplace_back(std::move(strip), std::move(rem));
        }
    }
    return out;
}

namespace {

void gen_partitions(int n, int max_part, Partition& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int k = std::min(n, max_part); k >= 1; --k) {
        cur.push_back(k);
        gen_partitions(n - k, k, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    Partition cur;
    gen_partitions(n, n == 0 ? 1 : n, cur, out);
    std::sort(out.begin(), out.end(), partition_less);
    return out;
}

std::vector<Partition> partitions_up_to(int n) {
    std::vector<Partition> out;
    for (int s = 0; s <= n; ++s) {
        for (auto& p : partitions_of(s)) out.push_back(std::move(p));
    }
    return out;
}

bool partition_less(const Partition& a, const Partition& b) {
    int sa = psize(a), sb = psize(b);
    if (sa != sb) return sa < sb;
    return a < b;
}

Partition parse_partition(const std::string& text) {
    Partition p;
    if (text.empty() || text == "-") return p;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        std::string piece = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                        : comma - pos);
        if (piece.empty()) throw std::invalid_argument("malformed partition: '" + text + "'");
        size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(piece, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed partition: '" + text + "'");
        }
        if (used != piece.size() || v < 0) {
            throw std::invalid_argument("malformed partition: '" + text + "'");
        }
        p.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
        if (pos == text.size()) throw std::invalid_argument("malformed partition: '" + text + "'");
    }
    normalize_partition(p);
    return p;
}

std::string partition_to_string(const Partition& p) {
    std::string s;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(p[i]);
    }
    return s;
}

}  // namespace stabrep
