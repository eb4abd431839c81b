#include "stabrep/kring.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>

#include "stabrep/symfunc.hpp"

namespace stabrep {

std::string kcat_name(KCat c) {
    switch (c) {
        case KCat::glpol: return "glpol";
        case KCat::ga: return "ga";
        case KCat::gl: return "gl";
        case KCat::osp: return "osp";
        case KCat::sym: return "sym";
    }
    throw std::logic_error("unknown category");
}

KCat kcat_from_name(const std::string& name) {
    if (name == "glpol") return KCat::glpol;
    if (name == "ga") return KCat::ga;
    if (name == "gl") return KCat::gl;
    if (name == "osp") return KCat::osp;
    if (name == "sym") return KCat::sym;
    throw std::invalid_argument("unknown category: " + name);
}

std::string variant_name(OspVariant v) { return v == OspVariant::o ? "o" : "sp"; }

OspVariant variant_from_name(const std::string& name) {
    if (name == "o") return OspVariant::o;
    if (name == "sp") return OspVariant::sp;
    throw std::invalid_argument("unknown variant: " + name);
}

int label_size(const Label& x) { return psize(x.lam) + psize(x.lam2); }

bool label_less(const Label& a, const Label& b) {
    int sa = label_size(a), sb = label_size(b);
    if (sa != sb) return sa < sb;
    if (a.lam != b.lam) return partition_less(a.lam, b.lam);
    return partition_less(a.lam2, b.lam2);
}

bool LabelPairLess::operator()(const LabelPair& a, const LabelPair& b) const {
    if (label_less(a.first, b.first)) return true;
    if (label_less(b.first, a.first)) return false;
    return label_less(a.second, b.second);
}

Label parse_label(KCat cat, const std::string& text) {
    Label out;
    auto bar = text.find('|');
    if (cat == KCat::gl) {
        if (bar == std::string::npos)
            throw std::invalid_argument("gl labels take two partitions separated by '|'");
        out.lam = parse_partition(text.substr(0, bar));
        out.lam2 = parse_partition(text.substr(bar + 1));
    } else {
        if (bar != std::string::npos)
            throw std::invalid_argument("only gl labels carry a second partition");
        out.lam = parse_partition(text);
    }
    return out;
}

std::string label_to_string(const Label& x) {
    if (x.lam2.empty()) return partition_to_string(x.lam);
    return partition_to_string(x.lam) + "|" + partition_to_string(x.lam2);
}

namespace {

void check_label(KCat cat, const Label& x) {
    if (!is_partition(x.lam) || !is_partition(x.lam2))
        throw std::invalid_argument("label components must be partitions");
    if (cat != KCat::gl && !x.lam2.empty())
        throw std::invalid_argument("only gl labels carry a second partition");
}

void kclass_cleanup(KClass& x) {
    for (auto it = x.terms.begin(); it != x.terms.end();)
        it = (it->second == 0) ? x.terms.erase(it) : std::next(it);
}

// {nu -> c^nu_{a,b}}, memoized: the full Schur-basis expansion of s_a * s_b.
const std::map<Partition, long, PartitionLess>& lr_product(const Partition& a,
                                                           const Partition& b) {
    static std::map<std::pair<Partition, Partition>,
                    std::map<Partition, long, PartitionLess>>
        memo;
    auto key = std::make_pair(a, b);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::map<Partition, long, PartitionLess> out;
    for (const Partition& nu : partitions_of(psize(a) + psize(b))) {
        long c = lr_coeff(nu, a, b);
        if (c) out[nu] = c;
    }
    return memo.emplace(std::move(key), std::move(out)).first->second;
}

// Calls f(mu, nu, c^alpha_{mu,nu}) for every two-part split of alpha.
template <typename F>
void for_each_split(const Partition& alpha, F&& f) {
    for (int ms = 0; ms <= psize(alpha); ++ms)
        for (const Partition& mu : partitions_of(ms))
            for (const auto& [nu, c] : skew_expand(alpha, mu)) f(mu, nu, c);
}

// Doubled shape in the requested reading: 2*beta for rows, its transpose for
// columns.
Partition doubled(const Partition& beta, bool rows) {
    Partition d = double_parts(beta);
    return rows ? d : transpose(d);
}

long stable_kronecker_memo(const Partition& lam, const Partition& mu, const Partition& nu) {
    static std::map<std::tuple<Partition, Partition, Partition>, long> memo;
    // The reduced Kronecker coefficient is symmetric in its three arguments.
    std::vector<Partition> key{lam, mu, nu};
    std::sort(key.begin(), key.end());
    auto tkey = std::make_tuple(key[0], key[1], key[2]);
    auto it = memo.find(tkey);
    if (it != memo.end()) return it->second;
    long g = stable_kronecker(lam, mu, nu);
    memo.emplace(std::move(tkey), g);
    return g;
}

KClass tensor_simple(KCat cat, const Label& x, const Label& y) {
    KClass out = kclass_zero(cat);
    switch (cat) {
        case KCat::glpol:
        case KCat::ga: {
            for (const auto& [nu, c] : lr_product(x.lam, y.lam))
                out.terms[Label{nu, {}}] = c;
            break;
        }
        case KCat::osp: {
            // multiplicity of V_nu = sum over alpha, beta, gamma of
            // c^lam_{alpha,beta} c^mu_{beta,gamma} c^nu_{alpha,gamma}
            int bmax = std::min(psize(x.lam), psize(y.lam));
            for (int bs = 0; bs <= bmax; ++bs)
                for (const Partition& beta : partitions_of(bs)) {
                    auto alphas = skew_expand(x.lam, beta);
                    if (alphas.empty()) continue;
                    auto gammas = skew_expand(y.lam, beta);
                    if (gammas.empty()) continue;
                    for (const auto& [alpha, ca] : alphas)
                        for (const auto& [gamma, cg] : gammas) {
                            mpz_class w = mpz_class(ca) * cg;
                            for (const auto& [nu, cn] : lr_product(alpha, gamma))
                                out.terms[Label{nu, {}}] += w * cn;
                        }
                }
            break;
        }
        case KCat::gl: {
            // multiplicity of V_{nu,nu'} = the six-fold LR sum over
            // alpha, alpha', beta, beta', gamma, gamma' of
            // c^lam_{alpha,beta} c^lam'_{alpha',beta'} c^mu_{gamma,beta'}
            // c^mu'_{gamma',beta} c^nu_{alpha,gamma} c^nu'_{alpha',gamma'}
            const Partition &lam = x.lam, &lamp = x.lam2, &mu = y.lam, &mup = y.lam2;
            for (int bs = 0; bs <= std::min(psize(lam), psize(mup)); ++bs)
                for (const Partition& beta : partitions_of(bs)) {
                    auto alphas = skew_expand(lam, beta);
                    if (alphas.empty()) continue;
                    auto gammaps = skew_expand(mup, beta);
                    if (gammaps.empty()) continue;
                    for (int bs2 = 0; bs2 <= std::min(psize(lamp), psize(mu)); ++bs2)
                        for (const Partition& betap : partitions_of(bs2)) {
                            auto alphaps = skew_expand(lamp, betap);
                            if (alphaps.empty()) continue;
                            auto gammas = skew_expand(mu, betap);
                            if (gammas.empty()) continue;
                            for (const auto& [alpha, c1] : alphas)
                                for (const auto& [gamma, c3] : gammas) {
                                    const auto& nus = lr_product(alpha, gamma);
                                    if (nus.empty()) continue;
                                    for (const auto& [alphap, c2] : alphaps)
                                        for (const auto& [gammap, c4] : gammaps) {
                                            mpz_class w =
                                                mpz_class(c1) * c2 * c3 * c4;
                                            for (const auto& [nup, c6] :
                                                 lr_product(alphap, gammap)) {
                                                mpz_class w2 = w * c6;
                                                for (const auto& [nu, c5] : nus)
                                                    out.terms[Label{nu, nup}] +=
                                                        w2 * c5;
                                            }
                                        }
                                }
                        }
                }
            break;
        }
        case KCat::sym: {
            for (int s = 0; s <= psize(x.lam) + psize(y.lam); ++s)
                for (const Partition& nu : partitions_of(s)) {
                    long g = stable_kronecker_memo(x.lam, y.lam, nu);
                    if (g) out.terms[Label{nu, {}}] += g;
                }
            break;
        }
    }
    kclass_cleanup(out);
    return out;
}

const KClass& tensor_simple_memo(KCat cat, const Label& x, const Label& y) {
    static std::map<std::tuple<KCat, Label, Label>, KClass> memo;
    auto key = std::make_tuple(cat, x, y);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    KClass p = tensor_simple(cat, x, y);
    return memo.emplace(std::move(key), std::move(p)).first->second;
}

}  // namespace

KClass kclass_zero(KCat cat) {
    KClass out;
    out.cat = cat;
    return out;
}

KClass kclass_simple(KCat cat, const Label& x) {
    check_label(cat, x);
    KClass out = kclass_zero(cat);
    out.terms[x] = 1;
    return out;
}

KClass kclass_add(const KClass& a, const KClass& b) {
    if (a.cat != b.cat) throw std::invalid_argument("category mismatch in class sum");
    KClass out = a;
    for (const auto& [l, c] : b.terms) out.terms[l] += c;
    kclass_cleanup(out);
    return out;
}

KClass kclass_scale(KClass a, const mpz_class& c) {
    for (auto& [l, m] : a.terms) m *= c;
    kclass_cleanup(a);
    return a;
}

bool kclass_equal(const KClass& a, const KClass& b) {
    return a.cat == b.cat && a.terms == b.terms;
}

KClass stable_tensor(const KClass& x, const KClass& y) {
    if (x.cat != y.cat)
        throw std::invalid_argument("category mismatch in tensor product");
    KClass out = kclass_zero(x.cat);
    for (const auto& [a, ca] : x.terms)
        for (const auto& [b, cb] : y.terms) {
            const KClass& p = tensor_simple_memo(x.cat, a, b);
            mpz_class w = ca * cb;
            for (const auto& [l, m] : p.terms) out.terms[l] += w * m;
        }
    kclass_cleanup(out);
    return out;
}

KClass stable_tensor(KCat cat, const Label& x, const Label& y) {
    check_label(cat, x);
    check_label(cat, y);
    return tensor_simple_memo(cat, x, y);
}

LabelPairMap comultiply(KCat cat, const Label& x, OspVariant variant) {
    check_label(cat, x);
    LabelPairMap out;
    if (cat == KCat::gl) {
        // multiplicity of V_{mu,mu'} x V_{nu,nu'} = sum over alpha, beta,
        // gamma of c^alpha_{mu,nu} c^beta_{mu',nu'} c^lam_{alpha,gamma}
        // c^lam'_{beta,gamma}
        const Partition &lam = x.lam, &lamp = x.lam2;
        for (int gs = 0; gs <= std::min(psize(lam), psize(lamp)); ++gs)
            for (const Partition& gamma : partitions_of(gs)) {
                auto alphas = skew_expand(lam, gamma);
                if (alphas.empty()) continue;
                auto betas = skew_expand(lamp, gamma);
                if (betas.empty()) continue;
                for (const auto& [alpha, ca] : alphas)
                    for (const auto& [beta, cb] : betas) {
                        mpz_class w = mpz_class(ca) * cb;
                        for_each_split(alpha, [&](const Partition& mu, const Partition& nu,
                                                  long c1) {
                            for_each_split(beta, [&](const Partition& mup,
                                                     const Partition& nup, long c2) {
                                out[{Label{mu, mup}, Label{nu, nup}}] +=
                                    w * c1 * c2;
                            });
                        });
                    }
            }
    } else if (cat == KCat::osp) {
        // multiplicity of V_mu x V_nu = sum over alpha, beta of
        // c^lam_{alpha, 2beta} c^alpha_{mu,nu} (transposed doubling for Sp)
        for (int bs = 0; 2 * bs <= psize(x.lam); ++bs)
            for (const Partition& beta : partitions_of(bs)) {
                Partition d = doubled(beta, variant == OspVariant::o);
                for (const auto& [alpha, ca] : skew_expand(x.lam, d))
                    for_each_split(alpha, [&](const Partition& mu, const Partition& nu,
                                              long c) {
                        out[{Label{mu, {}}, Label{nu, {}}}] += mpz_class(ca) * c;
                    });
            }
    } else {
        throw std::invalid_argument("comultiplication is available for gl and osp only");
    }
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
}

namespace {

KClass restrict_simple(const Label& x, OspVariant variant) {
    // multiplicity of W_mu = sum over alpha, beta, gamma, delta of
    // c^mu_{alpha,beta} c^lam_{alpha,2gamma} c^lam'_{beta,2delta}
    // (transposed doublings for Sp)
    bool rows = variant == OspVariant::o;
    KClass out = kclass_zero(KCat::osp);
    for (int gs = 0; 2 * gs <= psize(x.lam); ++gs)
        for (const Partition& gamma : partitions_of(gs)) {
            auto alphas = skew_expand(x.lam, doubled(gamma, rows));
            if (alphas.empty()) continue;
            for (int ds = 0; 2 * ds <= psize(x.lam2); ++ds)
                for (const Partition& delta : partitions_of(ds)) {
                    auto betas = skew_expand(x.lam2, doubled(delta, rows));
                    if (betas.empty()) continue;
                    for (const auto& [alpha, ca] : alphas)
                        for (const auto& [beta, cb] : betas) {
                            mpz_class w = mpz_class(ca) * cb;
                            for (const auto& [mu, c] : lr_product(alpha, beta))
                                out.terms[Label{mu, {}}] += w * c;
                        }
                }
        }
    kclass_cleanup(out);
    return out;
}

KClass polarize_simple(const Label& x, OspVariant variant) {
    // multiplicity of V_{mu,mu'} = sum over alpha, beta of
    // c^lam_{alpha,(2beta)^t} c^alpha_{mu,mu'} (plain doubling for Sp)
    bool rows = variant == OspVariant::sp;
    KClass out = kclass_zero(KCat::gl);
    for (int bs = 0; 2 * bs <= psize(x.lam); ++bs)
        for (const Partition& beta : partitions_of(bs))
            for (const auto& [alpha, ca] : skew_expand(x.lam, doubled(beta, rows)))
                for_each_split(alpha,
                               [&](const Partition& mu, const Partition& mup, long c) {
                                   out.terms[Label{mu, mup}] += mpz_class(ca) * c;
                               });
    kclass_cleanup(out);
    return out;
}

}  // namespace

KClass restrict_gl(const KClass& x, OspVariant variant) {
    if (x.cat != KCat::gl)
        throw std::invalid_argument("restriction starts from the gl ring");
    KClass out = kclass_zero(KCat::osp);
    for (const auto& [l, c] : x.terms)
        out = kclass_add(out, kclass_scale(restrict_simple(l, variant), c));
    return out;
}

KClass polarize(const KClass& x, OspVariant variant) {
    if (x.cat != KCat::osp)
        throw std::invalid_argument("polarization starts from the osp ring");
    KClass out = kclass_zero(KCat::gl);
    for (const auto& [l, c] : x.terms)
        out = kclass_add(out, kclass_scale(polarize_simple(l, variant), c));
    return out;
}

mpz_class ext_dim(KCat cat, const Label& source, const Label& target, int i,
                  OspVariant variant) {
    if (i < 0) throw std::invalid_argument("negative cohomological degree");
    check_label(cat, source);
    check_label(cat, target);
    mpz_class total = 0;
    switch (cat) {
        case KCat::gl:
            for (const Partition& nu : partitions_of(i))
                total += mpz_class(lr_coeff(target.lam, source.lam, nu)) *
                         lr_coeff(target.lam2, source.lam2, transpose(nu));
            return total;
        case KCat::osp:
            for (const Partition& nu : partitions_of(2 * i))
                if (in_Q(nu, variant == OspVariant::o ? 1 : -1))
                    total += lr_coeff(target.lam, source.lam, nu);
            return total;
        case KCat::ga: {
            Partition col(i, 1);
            return lr_coeff(target.lam, source.lam, col);
        }
        default:
            throw std::invalid_argument("Ext dimensions cover gl, osp and ga only");
    }
}

bool same_block(KCat cat, const Label& a, const Label& b) {
    check_label(cat, a);
    check_label(cat, b);
    switch (cat) {
        case KCat::gl:
            return psize(a.lam) - psize(a.lam2) == psize(b.lam) - psize(b.lam2);
        case KCat::osp:
            return (psize(a.lam) - psize(b.lam)) % 2 == 0;
        case KCat::ga:
            return true;  // a single block
        default:
            throw std::invalid_argument("block structure covers gl, osp and ga only");
    }
}

mpz_class lr_graph_eval(const LabeledGraph& g) {
    int n = g.vertices;
    if (n < 0) throw std::invalid_argument("negative vertex count");
    std::vector<std::vector<int>> inc(n);
    for (size_t e = 0; e < g.edges.size(); ++e) {
        auto [u, v, lam] = g.edges[e];
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (!is_partition(lam)) throw std::invalid_argument("edge label must be a partition");
        inc[u].push_back(static_cast<int>(e));
        if (v != u) inc[v].push_back(static_cast<int>(e));
    }
    for (int v = 0; v < n; ++v)
        if (inc[v].empty())
            throw std::invalid_argument("isolated vertex: the labeling sum is infinite");

    // Connected components of the vertex set.
    std::vector<int> comp(n, -1);
    mpz_class result = 1;
    for (int root = 0; root < n; ++root) {
        if (comp[root] != -1) continue;
        // Solve the size system x_u + x_v = |lam(e)| on the component by
        // writing x_v = s_v * t + b_v along a spanning tree.
        std::vector<int> verts;
        std::vector<int> sgn(n, 0), off(n, 0);
        std::vector<int> stack{root};
        comp[root] = root;
        sgn[root] = 1;
        off[root] = 0;
        std::vector<int> comp_edges;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            verts.push_back(u);
            for (int e : inc[u]) {
                comp_edges.push_back(e);
                auto [a, b, lam] = g.edges[e];
                int w = (a == u) ? b : a;
                if (comp[w] == -1) {
                    comp[w] = root;
                    sgn[w] = -sgn[u];
                    off[w] = psize(lam) - off[u];
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp_edges.begin(), comp_edges.end());
        comp_edges.erase(std::unique(comp_edges.begin(), comp_edges.end()),
                         comp_edges.end());

        bool feasible = true;
        std::optional<long> t_fixed;
        for (int e : comp_edges) {
            auto [a, b, lam] = g.edges[e];
            int cs = sgn[a] + sgn[b];
            int cb = off[a] + off[b];
            int target = psize(lam);
            if (cs == 0) {
                if (cb != target) feasible = false;
            } else {
                if ((target - cb) % cs != 0) {
                    feasible = false;
                } else {
                    long t = (target - cb) / cs;
                    if (t_fixed && *t_fixed != t) feasible = false;
                    t_fixed = t;
                }
            }
        }
        long lo = 0, hi = -1;
        bool has_lo = false, has_hi = false;
        for (int v : verts) {
            if (sgn[v] > 0) {
                long bound = -off[v];
                if (!has_lo || bound > lo) lo = bound;
                has_lo = true;
            } else {
                long bound = off[v];
                if (!has_hi || bound < hi) hi = bound;
                has_hi = true;
            }
        }
        std::vector<long> candidates;
        if (feasible) {
            if (t_fixed) {
                if ((!has_lo || *t_fixed >= lo) && (!has_hi || *t_fixed <= hi))
                    candidates.push_back(*t_fixed);
            } else if (has_lo && has_hi) {
                for (long t = lo; t <= hi; ++t) candidates.push_back(t);
            } else {
                // Every component has an edge; a free parameter with a one-
                // sided bound cannot occur for nonnegative sizes.
                throw std::logic_error("unbounded size system on a covered component");
            }
        }

        mpz_class comp_value = 0;
        for (long t : candidates) {
            std::map<int, Partition> chosen;
            std::function<mpz_class(size_t)> rec = [&](size_t idx) -> mpz_class {
                if (idx == verts.size()) return mpz_class(1);
                int v = verts[idx];
                long size = sgn[v] * t + off[v];
                mpz_class total = 0;
                for (const Partition& mu : partitions_of(static_cast<int>(size))) {
                    chosen[v] = mu;
                    // Each edge is scored once, at whichever endpoint is
                    // assigned later; self-loops are scored here as well.
                    mpz_class factor = 1;
                    for (int e : inc[v]) {
                        const auto& [a, b, lam] = g.edges[e];
                        int w = (a == v) ? b : a;
                        if (w != v && !chosen.count(w)) continue;
                        factor *= lr_coeff(lam, w == v ? mu : chosen[w], mu);
                        if (factor == 0) break;
                    }
                    if (factor != 0) total += factor * rec(idx + 1);
                    chosen.erase(v);
                }
                return total;
            };
            comp_value += rec(0);
        }
        result *= comp_value;
        if (result == 0) return 0;
    }
    return result;
}

std::vector<KClass> littlewood_complex(KCat cat, const Label& x, OspVariant variant) {
    check_label(cat, x);
    std::vector<KClass> levels;
    auto push_level = [&](KClass lvl) {
        kclass_cleanup(lvl);
        levels.push_back(std::move(lvl));
    };
    switch (cat) {
        case KCat::gl: {
            int imax = std::min(psize(x.lam), psize(x.lam2));
            for (int i = 0; i <= imax; ++i) {
                KClass lvl = kclass_zero(KCat::gl);
                for (const Partition& mu : partitions_of(i)) {
                    auto nus = skew_expand(x.lam, mu);
                    if (nus.empty()) continue;
                    auto nups = skew_expand(x.lam2, transpose(mu));
                    if (nups.empty()) continue;
                    for (const auto& [nu, c1] : nus)
                        for (const auto& [nup, c2] : nups)
                            lvl.terms[Label{nu, nup}] += mpz_class(c1) * c2;
                }
                push_level(std::move(lvl));
            }
            break;
        }
        case KCat::osp: {
            int qsign = variant == OspVariant::o ? 1 : -1;
            for (int i = 0; 2 * i <= psize(x.lam); ++i) {
                KClass lvl = kclass_zero(KCat::glpol);
                for (const Partition& mu : partitions_of(2 * i)) {
                    if (!in_Q(mu, qsign)) continue;
                    for (const auto& [nu, c] : skew_expand(x.lam, mu))
                        lvl.terms[Label{nu, {}}] += c;
                }
                push_level(std::move(lvl));
            }
            break;
        }
        case KCat::ga: {
            for (int i = 0; i <= plength(x.lam); ++i) {
                Partition col(i, 1);
                KClass lvl = kclass_zero(KCat::glpol);
                for (const auto& [nu, c] : skew_expand(x.lam, col))
                    lvl.terms[Label{nu, {}}] += c;
                push_level(std::move(lvl));
            }
            break;
        }
        default:
            throw std::invalid_argument("Littlewood complexes cover gl, osp and ga only");
    }
    while (levels.size() > 1 && levels.back().terms.empty()) levels.pop_back();
    return levels;
}

namespace {

const KClass& ga_injective(const Partition& lam) {
    static std::map<Partition, KClass> memo;
    auto it = memo.find(lam);
    if (it != memo.end()) return it->second;
    // Invert the unitriangular Euler matrix E[lam][nu] = sum_i (-1)^i
    // c^lam_{(1^i),nu} row by row: f_lam = e_lam - sum_{nu != lam} E[lam][nu] f_nu.
    KClass f = kclass_simple(KCat::ga, Label{lam, {}});
    for (int i = 1; i <= plength(lam); ++i) {
        Partition col(i, 1);
        mpz_class sign = (i % 2) ? -1 : 1;
        for (const auto& [nu, c] : skew_expand(lam, col)) {
            const KClass& sub = ga_injective(nu);
            for (const auto& [l, m] : sub.terms) f.terms[l] -= sign * c * m;
        }
    }
    kclass_cleanup(f);
    return memo.emplace(lam, std::move(f)).first->second;
}

}  // namespace

KClass injective_to_simple(KCat cat, const Label& inj, OspVariant variant) {
    check_label(cat, inj);
    KClass out;
    switch (cat) {
        case KCat::osp: {
            // [S_lam(V)] = sum over mu, gamma of c^lam_{mu,2gamma} [V_mu]
            // (transposed doubling for Sp)
            out = kclass_zero(KCat::osp);
            for (int gs = 0; 2 * gs <= psize(inj.lam); ++gs)
                for (const Partition& gamma : partitions_of(gs)) {
                    Partition d = doubled(gamma, variant == OspVariant::o);
                    for (const auto& [mu, c] : skew_expand(inj.lam, d))
                        out.terms[Label{mu, {}}] += c;
                }
            break;
        }
        case KCat::gl: {
            // [S_lam(V) x S_lam2(V_*)] = sum over mu, mu', beta of
            // c^lam_{mu,beta} c^lam2_{mu',beta} [V_{mu,mu'}]
            out = kclass_zero(KCat::gl);
            for (int bs = 0; bs <= std::min(psize(inj.lam), psize(inj.lam2)); ++bs)
                for (const Partition& beta : partitions_of(bs)) {
                    auto mus = skew_expand(inj.lam, beta);
                    if (mus.empty()) continue;
                    auto mups = skew_expand(inj.lam2, beta);
                    if (mups.empty()) continue;
                    for (const auto& [mu, c1] : mus)
                        for (const auto& [mup, c2] : mups)
                            out.terms[Label{mu, mup}] += mpz_class(c1) * c2;
                }
            break;
        }
        case KCat::ga:
            out = ga_injective(inj.lam);
            break;
        default:
            throw std::invalid_argument(
                "injective decompositions cover gl, osp and ga only");
    }
    kclass_cleanup(out);
    return out;
}

std::vector<Label> labels_up_to(KCat cat, int maxsize) {
    std::vector<Label> out;
    if (cat == KCat::gl) {
        for (int s = 0; s <= maxsize; ++s)
            for (int a = 0; a <= s; ++a)
                for (const Partition& l1 : partitions_of(a))
                    for (const Partition& l2 : partitions_of(s - a))
                        out.push_back(Label{l1, l2});
    } else {
        for (const Partition& p : partitions_up_to(maxsize)) out.push_back(Label{p, {}});
    }
    std::sort(out.begin(), out.end(), label_less);
    return out;
}

}  // namespace stabrep
