#include "stabrep/downcat.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace stabrep {

std::string flavor_name(DownFlavor f) {
    switch (f) {
        case DownFlavor::dwb: return "dwb";
        case DownFlavor::db: return "db";
        case DownFlavor::dsb: return "dsb";
        case DownFlavor::ds: return "ds";
        case DownFlavor::dp: return "dp";
    }
    throw std::logic_error("unknown flavor");
}

DownFlavor flavor_from_name(const std::string& name) {
    if (name == "dwb") return DownFlavor::dwb;
    if (name == "db") return DownFlavor::db;
    if (name == "dsb") return DownFlavor::dsb;
    if (name == "ds") return DownFlavor::ds;
    if (name == "dp") return DownFlavor::dp;
    throw std::invalid_argument("unknown downwards flavor: " + name);
}

namespace {

bool uses_matching(DownFlavor f) {
    return f == DownFlavor::dwb || f == DownFlavor::db || f == DownFlavor::dsb;
}

void check_bijection(const DownMorphism& m, const std::vector<char>& consumed) {
    // Domain: every source element not consumed by the matching/subset.
    // Codomain: all of the target, hit exactly once, halves respected for dwb.
    int src_total = m.src_n + m.src_m;
    int tgt_total = m.tgt_n + m.tgt_m;
    std::vector<char> hit(tgt_total, 0);
    size_t expected = 0;
    for (int v = 0; v < src_total; ++v)
        if (!consumed[v]) ++expected;
    if (m.bij.size() != expected)
        throw std::invalid_argument("bijection domain must be the leftover source");
    for (const auto& [x, y] : m.bij) {
        if (x < 0 || x >= src_total || consumed[x])
            throw std::invalid_argument("bijection domain must be the leftover source");
        if (y < 0 || y >= tgt_total || hit[y])
            throw std::invalid_argument("bijection must cover the target exactly once");
        hit[y] = 1;
        if (m.flavor == DownFlavor::dwb && (x < m.src_n) != (y < m.tgt_n))
            throw std::invalid_argument("walled bijection must respect the biset halves");
    }
}

}  // namespace

DownMorphism make_down_morphism(DownMorphism m) {
    if (m.src_n < 0 || m.src_m < 0 || m.tgt_n < 0 || m.tgt_m < 0)
        throw std::invalid_argument("negative object size");
    if (m.flavor != DownFlavor::dwb && (m.src_m != 0 || m.tgt_m != 0))
        throw std::invalid_argument("bisets only occur for the walled flavor");
    int src_total = m.src_n + m.src_m;

    if (m.flavor == DownFlavor::dp) {
        if (!m.matching.empty() || !m.subset.empty() || !m.bij.empty())
            throw std::invalid_argument("partition morphisms carry only parts");
        std::vector<char> seen(m.src_n + m.tgt_n, 0);
        for (auto& part : m.parts) {
            if (part.empty()) throw std::invalid_argument("empty part");
            bool meets_source = false;
            for (int v : part) {
                if (v < 0 || v >= m.src_n + m.tgt_n)
                    throw std::invalid_argument("part element out of range");
                if (seen[v]) throw std::invalid_argument("element repeated across parts");
                seen[v] = 1;
                if (v < m.src_n) meets_source = true;
            }
            if (!meets_source) throw std::invalid_argument("every part must meet the source");
            std::sort(part.begin(), part.end());
        }
        for (int v = 0; v < m.src_n + m.tgt_n; ++v)
            if (!seen[v]) throw std::invalid_argument("parts do not cover source and target");
        std::sort(m.parts.begin(), m.parts.end());
        return m;
    }

    std::vector<char> consumed(src_total, 0);
    if (uses_matching(m.flavor)) {
        if (!m.subset.empty() || !m.parts.empty())
            throw std::invalid_argument("unexpected data for a matching flavor");
        for (auto& [u, v] : m.matching) {
            if (u < 0 || v < 0 || u >= src_total || v >= src_total || u == v)
                throw std::invalid_argument("bad matched pair");
            if (consumed[u] || consumed[v])
                throw std::invalid_argument("element matched twice");
            consumed[u] = consumed[v] = 1;
            if (m.flavor == DownFlavor::dwb) {
                if ((u < m.src_n) == (v < m.src_n))
                    throw std::invalid_argument("walled matching must be bipartite");
                if (u > v) std::swap(u, v);  // positive half first
            } else if (m.flavor == DownFlavor::db && u > v) {
                std::swap(u, v);
            }
        }
        std::sort(m.matching.begin(), m.matching.end());
        int k = static_cast<int>(m.matching.size());
        bool sizes_ok = (m.flavor == DownFlavor::dwb)
                            ? (m.src_n - k == m.tgt_n && m.src_m - k == m.tgt_m)
                            : (m.src_n - 2 * k == m.tgt_n);
        if (!sizes_ok) throw std::invalid_argument("matching size does not fit the objects");
    } else {  // ds
        if (!m.matching.empty() || !m.parts.empty())
            throw std::invalid_argument("unexpected data for the subset flavor");
        for (int v : m.subset) {
            if (v < 0 || v >= src_total) throw std::invalid_argument("subset element out of range");
            if (consumed[v]) throw std::invalid_argument("subset element repeated");
            consumed[v] = 1;
        }
        std::sort(m.subset.begin(), m.subset.end());
        if (m.src_n - static_cast<int>(m.subset.size()) != m.tgt_n)
            throw std::invalid_argument("subset size does not fit the objects");
    }
    check_bijection(m, consumed);
    return m;
}

DownMorphism identity_down(DownFlavor flavor, int n, int m) {
    DownMorphism f;
    f.flavor = flavor;
    f.src_n = f.tgt_n = n;
    if (flavor == DownFlavor::dwb) f.src_m = f.tgt_m = m;
    if (flavor == DownFlavor::dp) {
        for (int i = 0; i < n; ++i) f.parts.push_back({i, n + i});
    } else {
        int total = f.src_n + f.src_m;
        for (int i = 0; i < total; ++i) f.bij[i] = i;
    }
    return make_down_morphism(std::move(f));
}

DownMorphism compose_down(const DownMorphism& f, const DownMorphism& g) {
    if (f.flavor != g.flavor) throw std::invalid_argument("cannot compose mixed flavors");
    if (f.tgt_n != g.src_n || f.tgt_m != g.src_m)
        throw std::invalid_argument("target of the first morphism must be the source of the second");

    DownMorphism out;
    out.flavor = f.flavor;
    out.src_n = f.src_n;
    out.src_m = f.src_m;
    out.tgt_n = g.tgt_n;
    out.tgt_m = g.tgt_m;

    if (f.flavor == DownFlavor::dp) {
        // Glue along the middle set and merge overlapping parts; every glued
        // component reaches the outer source, so nothing is discarded.
        int s = f.src_n, mid = f.tgt_n, t = g.tgt_n;
        std::vector<int> parent(s + mid + t);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        auto unite = [&](int x, int y) { parent[find(x)] = find(y); };
        for (const auto& part : f.parts)
            for (size_t i = 1; i < part.size(); ++i) unite(part[0], part[i]);
        for (const auto& part : g.parts)
            for (size_t i = 1; i < part.size(); ++i) unite(part[0] + s, part[i] + s);
        std::map<int, std::vector<int>> comps;
        for (int v = 0; v < s + mid + t; ++v) {
            if (v >= s && v < s + mid) continue;
            comps[find(v)].push_back(v < s ? v : v - mid);
        }
        for (auto& [root, part] : comps) out.parts.push_back(std::move(part));
        return make_down_morphism(std::move(out));
    }

    std::map<int, int> finv;
    for (const auto& [x, y] : f.bij) finv[y] = x;
    out.matching = f.matching;
    for (const auto& [u, v] : g.matching) out.matching.emplace_back(finv.at(u), finv.at(v));
    out.subset = f.subset;
    for (int v : g.subset) out.subset.push_back(finv.at(v));
    for (const auto& [x, y] : f.bij) {
        auto it = g.bij.find(y);
        if (it != g.bij.end()) out.bij[x] = it->second;
    }
    return make_down_morphism(std::move(out));
}

DpClassification classify_dp(const DownMorphism& f) {
    if (f.flavor != DownFlavor::dp)
        throw std::invalid_argument("classification applies to the partition flavor");
    DpClassification c;
    c.mono = c.epi = c.proper = c.rectangular = true;
    for (const auto& part : f.parts) {
        int in_src = 0, in_tgt = 0;
        for (int v : part) (v < f.src_n ? in_src : in_tgt)++;
        if (in_tgt == 0 || in_src != 1) c.mono = false;
        if (in_tgt > 1) c.epi = false;
        if (in_tgt == 0) c.proper = false;
        if (in_src != in_tgt) c.rectangular = false;
    }
    if (c.proper) {
        DownMorphism t;
        t.flavor = DownFlavor::dp;
        t.src_n = f.tgt_n;
        t.tgt_n = f.src_n;
        for (const auto& part : f.parts) {
            std::vector<int> moved;
            for (int v : part) moved.push_back(v < f.src_n ? v + f.tgt_n : v - f.src_n);
            t.parts.push_back(std::move(moved));
        }
        c.transpose = make_down_morphism(std::move(t));
    }
    return c;
}

namespace {

void for_each_bijection(const std::vector<int>& domain, int tgt_lo, int tgt_n,
                        const std::function<void(const std::map<int, int>&)>& fn) {
    std::vector<int> image(tgt_n);
    std::iota(image.begin(), image.end(), tgt_lo);
    do {
        std::map<int, int> bij;
        for (size_t i = 0; i < domain.size(); ++i) bij[domain[i]] = image[i];
        fn(bij);
    } while (std::next_permutation(image.begin(), image.end()));
}

// Partial matchings with exactly pairs_left more pairs: each vertex, in
// increasing order, is either left unmatched or paired with a later one.
void gen_down_matchings(int total, int pairs_left, int v, std::vector<char>& used,
                        std::vector<std::pair<int, int>>& acc,
                        const std::function<void(const std::vector<std::pair<int, int>>&)>& fn) {
    if (pairs_left == 0) {
        fn(acc);
        return;
    }
    if (v >= total) return;
    if (used[v]) {
        gen_down_matchings(total, pairs_left, v + 1, used, acc, fn);
        return;
    }
    gen_down_matchings(total, pairs_left, v + 1, used, acc, fn);  // v stays unmatched
    used[v] = 1;
    for (int w = v + 1; w < total; ++w) {
        if (used[w]) continue;
        used[w] = 1;
        acc.emplace_back(v, w);
        gen_down_matchings(total, pairs_left - 1, v + 1, used, acc, fn);
        acc.pop_back();
        used[w] = 0;
    }
    used[v] = 0;
}

}  // namespace

std::vector<DownMorphism> enumerate_down_morphisms(DownFlavor flavor, int src_n, int tgt_n,
                                                   int src_m, int tgt_m) {
    std::vector<DownMorphism> out;
    auto push = [&](DownMorphism m) { out.push_back(make_down_morphism(std::move(m))); };

    if (flavor == DownFlavor::dp) {
        int total = src_n + tgt_n;
        std::vector<int> rgs(total, 0);
        auto emit = [&](int nblocks) {
            std::vector<std::vector<int>> parts(nblocks);
            for (int v = 0; v < total; ++v) parts[rgs[v]].push_back(v);
            for (const auto& part : parts)
                if (part[0] >= src_n) return;  // part misses the source
            DownMorphism m;
            m.flavor = flavor;
            m.src_n = src_n;
            m.tgt_n = tgt_n;
            m.parts = parts;
            push(std::move(m));
        };
        std::function<void(int, int)> rec = [&](int pos, int maxval) {
            if (pos == total) {
                emit(maxval + 1);
                return;
            }
            for (int v = 0; v <= maxval + 1; ++v) {
                rgs[pos] = v;
                rec(pos + 1, std::max(maxval, v));
            }
        };
        if (total == 0)
            emit(0);
        else
            rec(1, 0);
        return out;
    }

    if (flavor == DownFlavor::ds) {
        int k = src_n - tgt_n;
        if (k < 0) return out;
        std::vector<char> take(src_n, 0);
        std::fill(take.begin(), take.begin() + k, 1);
        std::sort(take.begin(), take.end());
        // iterate over all subsets of size k via permutations of the mask
        do {
            std::vector<int> subset, rest;
            for (int v = 0; v < src_n; ++v) (take[v] ? subset : rest).push_back(v);
            for_each_bijection(rest, 0, tgt_n, [&](const std::map<int, int>& bij) {
                DownMorphism m;
                m.flavor = flavor;
                m.src_n = src_n;
                m.tgt_n = tgt_n;
                m.subset = subset;
                m.bij = bij;
                push(std::move(m));
            });
        } while (std::next_permutation(take.begin(), take.end()));
        return out;
    }

    if (flavor == DownFlavor::dwb) {
        int k = src_n - tgt_n;
        if (k < 0 || src_m - k != tgt_m) return out;
        // choose k positives and k negatives and a pairing between them
        std::vector<char> pos_take(src_n, 0), neg_take(src_m, 0);
        std::fill(pos_take.end() - std::min(k, src_n), pos_take.end(), 1);
        std::sort(pos_take.begin(), pos_take.end());
        do {
            std::fill(neg_take.begin(), neg_take.end(), 0);
            std::fill(neg_take.begin(), neg_take.begin() + k, 1);
            std::sort(neg_take.begin(), neg_take.end());
            do {
                std::vector<int> ps, pr, ns, nr;
                for (int v = 0; v < src_n; ++v) (pos_take[v] ? ps : pr).push_back(v);
                for (int v = 0; v < src_m; ++v) (neg_take[v] ? ns : nr).push_back(v + src_n);
                std::vector<int> perm(k);
                std::iota(perm.begin(), perm.end(), 0);
                do {
                    std::vector<std::pair<int, int>> matching;
                    for (int i = 0; i < k; ++i) matching.emplace_back(ps[i], ns[perm[i]]);
                    for_each_bijection(pr, 0, tgt_n, [&](const std::map<int, int>& bp) {
                        for_each_bijection(nr, tgt_n, tgt_m, [&](const std::map<int, int>& bn) {
                            DownMorphism m;
                            m.flavor = flavor;
                            m.src_n = src_n;
                            m.src_m = src_m;
                            m.tgt_n = tgt_n;
                            m.tgt_m = tgt_m;
                            m.matching = matching;
                            m.bij = bp;
                            m.bij.insert(bn.begin(), bn.end());
                            push(std::move(m));
                        });
                    });
                } while (std::next_permutation(perm.begin(), perm.end()));
            } while (std::next_permutation(neg_take.begin(), neg_take.end()));
        } while (std::next_permutation(pos_take.begin(), pos_take.end()));
        return out;
    }

    // db and dsb
    if ((src_n - tgt_n) % 2 != 0 || src_n < tgt_n) return out;
    int pairs = (src_n - tgt_n) / 2;
    std::vector<char> used(src_n, 0);
    std::vector<std::pair<int, int>> acc;
    gen_down_matchings(src_n, pairs, 0, used, acc,
                       [&](const std::vector<std::pair<int, int>>& matching) {
                           std::vector<char> consumed(src_n, 0);
                           for (const auto& [u, v] : matching) consumed[u] = consumed[v] = 1;
                           std::vector<int> rest;
                           for (int v = 0; v < src_n; ++v)
                               if (!consumed[v]) rest.push_back(v);
                           int orientations = (flavor == DownFlavor::dsb) ? (1 << pairs) : 1;
                           for (int bits = 0; bits < orientations; ++bits) {
                               std::vector<std::pair<int, int>> oriented = matching;
                               for (int i = 0; i < pairs; ++i)
                                   if (bits & (1 << i))
                                       std::swap(oriented[i].first, oriented[i].second);
                               for_each_bijection(rest, 0, tgt_n,
                                                  [&](const std::map<int, int>& bij) {
                                                      DownMorphism m;
                                                      m.flavor = flavor;
                                                      m.src_n = src_n;
                                                      m.tgt_n = tgt_n;
                                                      m.matching = oriented;
                                                      m.bij = bij;
                                                      push(std::move(m));
                                                  });
                           }
                       });
    return out;
}

}  // namespace stabrep
