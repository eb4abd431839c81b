#include "stabrep/schur_weyl.hpp"

#include "stabrep/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace stabrep {

namespace {

long long ipow_checked(int d, int n) {
    long long r = 1;
    for (int i = 0; i < n; ++i) {
        r *= d;
        if (r > (1LL << 40)) throw std::runtime_error("tensor space too large");
    }
    return r;
}

std::vector<int> decode_index(long long idx, int d, int n) {
    std::vector<int> I(n);
    for (int s = n - 1; s >= 0; --s) {
        I[s] = static_cast<int>(idx % d);
        idx /= d;
    }
    return I;
}

long long encode_index(const std::vector<int>& I, int d) {
    long long idx = 0;
    for (int v : I) idx = idx * d + v;
    return idx;
}

constexpr long long kEntryGuard = 1LL << 22;

}  // namespace

IntMatrix orthogonal_form(int d) {
    IntMatrix F(d, d);
    if (d % 2 == 0) {
        for (int k = 0; k < d / 2; ++k) {
            F.at(2 * k, 2 * k + 1) = 1;
            F.at(2 * k + 1, 2 * k) = 1;
        }
    } else {
        for (int a = 0; a < d; ++a) F.at(a, a) = 1;
    }
    return F;
}

IntMatrix symplectic_form(int d) {
    if (d % 2 != 0) throw std::invalid_argument("the skew form needs even dimension");
    IntMatrix F(d, d);
    for (int k = 0; k < d / 2; ++k) {
        F.at(2 * k, 2 * k + 1) = 1;
        F.at(2 * k + 1, 2 * k) = -1;
    }
    return F;
}

IntMatrix action_matrix(const Diagram& g, int d) {
    if (d <= 0) throw std::invalid_argument("dimension must be positive");
    if (g.kind == DiagKind::signed_brauer && d % 2 != 0)
        throw std::invalid_argument("the signed flavor acts only in even dimension");
    long long rows = ipow_checked(d, g.n_top);
    long long cols = ipow_checked(d, g.n_bot);
    if (rows * cols > kEntryGuard) throw std::runtime_error("action matrix too large");

    bool use_form = g.kind == DiagKind::brauer || g.kind == DiagKind::signed_brauer;
    IntMatrix F = use_form ? (g.kind == DiagKind::brauer ? orthogonal_form(d)
                                                         : symplectic_form(d))
                           : IntMatrix();

    IntMatrix M(static_cast<int>(rows), static_cast<int>(cols));
    std::vector<int> I(g.n_top), J(g.n_bot);
    for (long long r = 0; r < rows; ++r) {
        I = decode_index(r, d, g.n_top);
        for (long long c = 0; c < cols; ++c) {
            J = decode_index(c, d, g.n_bot);
            auto val = [&](int v) { return v < g.n_top ? I[v] : J[v - g.n_top]; };
            long entry = (g.kind == DiagKind::signed_brauer) ? g.sign : 1;
            for (const auto& blk : g.blocks) {
                if (entry == 0) break;
                if (g.kind == DiagKind::set_partition) {
                    for (size_t i = 1; i < blk.size(); ++i)
                        if (val(blk[i]) != val(blk[0])) {
                            entry = 0;
                            break;
                        }
                    continue;
                }
                bool horizontal = g.is_top(blk[0]) == g.is_top(blk[1]);
                if (use_form && horizontal)
                    entry *= static_cast<long>(F.at(val(blk[0]), val(blk[1])).get_si());
                else
                    entry *= (val(blk[0]) == val(blk[1])) ? 1 : 0;
            }
            if (entry != 0) M.at(static_cast<int>(r), static_cast<int>(c)) = entry;
        }
    }
    return M;
}

IntMatrix action_matrix(const AlgebraElement& x, int d) {
    long long rows = ipow_checked(d, x.n_top);
    long long cols = ipow_checked(d, x.n_bot);
    if (rows * cols > kEntryGuard) throw std::runtime_error("action matrix too large");
    mpz_class param = (x.kind == DiagKind::signed_brauer) ? mpz_class(-d) : mpz_class(d);
    IntMatrix M(static_cast<int>(rows), static_cast<int>(cols));
    for (const auto& [diag, poly] : x.terms) {
        mpz_class scalar = 0;
        for (const auto& [e, c] : poly) {
            mpz_class p;
            mpz_pow_ui(p.get_mpz_t(), param.get_mpz_t(), e);
            scalar += c * p;
        }
        if (scalar == 0) continue;
        IntMatrix A = action_matrix(diag, d);
        for (int r = 0; r < M.rows; ++r)
            for (int c = 0; c < M.cols; ++c) M.at(r, c) += scalar * A.at(r, c);
    }
    return M;
}

namespace {

// d x d matrices spanning the Lie algebra that commutes with the flavor's
// form: gl(d) for walled, so(d)/sp(d) for the (signed) Brauer flavors.
std::vector<IntMatrix> lie_basis(DiagKind kind, int d) {
    std::vector<IntMatrix> gens;
    if (kind == DiagKind::walled_brauer) {
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) {
                IntMatrix E(d, d);
                E.at(a, b) = 1;
                gens.push_back(std::move(E));
            }
        return gens;
    }
    IntMatrix F = (kind == DiagKind::brauer) ? orthogonal_form(d) : symplectic_form(d);
    // Solve g^T F + F g = 0 for g: rows index the output entry (i,j), columns
    // the unknown entry of g. (g^T F)[i][j] picks up g[a][i] with weight
    // F[a][j]; (F g)[i][j] picks up g[a][j] with weight F[i][a].
    IntMatrix K(d * d, d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int a = 0; a < d; ++a) {
                K.at(i * d + j, a * d + i) += F.at(a, j);
                K.at(i * d + j, a * d + j) += F.at(i, a);
            }
    IntMatrix null = nullspace(K);
    for (int c = 0; c < null.cols; ++c) {
        IntMatrix g(d, d);
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) g.at(a, b) = null.at(a * d + b, c);
        gens.push_back(std::move(g));
    }
    return gens;
}

// Tensor action of a Lie-algebra element by derivations, in the same
// row-by-top-index convention as action_matrix. Slots marked dual act by the
// negative transpose.
IntMatrix lie_tensor_action(const IntMatrix& g, const std::vector<bool>& dual, int d) {
    int n = static_cast<int>(dual.size());
    long long D = ipow_checked(d, n);
    if (D * D > kEntryGuard) throw std::runtime_error("tensor space too large");
    IntMatrix M(static_cast<int>(D), static_cast<int>(D));
    for (long long r = 0; r < D; ++r) {
        std::vector<int> I = decode_index(r, d, n);
        for (int s = 0; s < n; ++s) {
            for (int b = 0; b < d; ++b) {
                mpz_class coeff = dual[s] ? -g.at(I[s], b) : g.at(b, I[s]);
                if (coeff == 0) continue;
                std::vector<int> J = I;
                J[s] = b;
                M.at(static_cast<int>(r), static_cast<int>(encode_index(J, d))) += coeff;
            }
        }
    }
    return M;
}

std::vector<bool> slot_duals(DiagKind kind, int n, int wall) {
    std::vector<bool> dual(n, false);
    if (kind == DiagKind::walled_brauer)
        for (int s = wall; s < n; ++s) dual[s] = true;
    return dual;
}

}  // namespace

std::vector<IntMatrix> group_generator_actions(DiagKind kind, int n, int d, int wall) {
    std::vector<IntMatrix> out;
    long long D = ipow_checked(d, n);
    if (D * D > kEntryGuard) throw std::runtime_error("tensor space too large");
    if (kind == DiagKind::set_partition) {
        // adjacent transpositions of S(d) acting on every slot
        for (int a = 0; a + 1 < d; ++a) {
            IntMatrix P(static_cast<int>(D), static_cast<int>(D));
            for (long long r = 0; r < D; ++r) {
                std::vector<int> I = decode_index(r, d, n);
                for (int& v : I) {
                    if (v == a)
                        v = a + 1;
                    else if (v == a + 1)
                        v = a;
                }
                P.at(static_cast<int>(r), static_cast<int>(encode_index(I, d))) = 1;
            }
            out.push_back(std::move(P));
        }
        return out;
    }
    std::vector<bool> dual = slot_duals(kind, n, wall);
    for (const IntMatrix& g : lie_basis(kind, d)) out.push_back(lie_tensor_action(g, dual, d));
    return out;
}

CentralizerResult centralizer_check(DiagKind kind, int n, int d, int wall) {
    long long D = ipow_checked(d, n);
    if (D > 100) throw std::runtime_error("centralizer check: tensor space too large");

    std::vector<Diagram> diagrams = enumerate_diagrams(kind, n, wall);
    std::vector<IntMatrix> acts;
    acts.reserve(diagrams.size());
    for (const Diagram& g : diagrams) acts.push_back(action_matrix(g, d));

    int m = static_cast<int>(acts.size());
    IntMatrix gram(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            mpz_class s = 0;
            for (size_t k = 0; k < acts[i].a.size(); ++k) s += acts[i].a[k] * acts[j].a[k];
            gram.at(i, j) = s;
            gram.at(j, i) = s;
        }
    CentralizerResult res;
    res.dim_image = rank_bareiss(gram);

    int Di = static_cast<int>(D);
    if (kind == DiagKind::set_partition) {
        // Orbit count of S(d) acting diagonally on pairs of multi-indices:
        // the fixed space of permutation matrices has one dimension per orbit.
        std::vector<int> parent(Di * Di);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (int a = 0; a + 1 < d; ++a) {
            std::vector<int> image(Di);
            for (int r = 0; r < Di; ++r) {
                std::vector<int> I = decode_index(r, d, n);
                for (int& v : I) {
                    if (v == a)
                        v = a + 1;
                    else if (v == a + 1)
                        v = a;
                }
                image[r] = static_cast<int>(encode_index(I, d));
            }
            for (int i = 0; i < Di; ++i)
                for (int j = 0; j < Di; ++j) {
                    int x = find(i * Di + j), y = find(image[i] * Di + image[j]);
                    if (x != y) parent[x] = y;
                }
        }
        int orbits = 0;
        for (int x = 0; x < Di * Di; ++x)
            if (find(x) == x) ++orbits;
        res.dim_commutant = orbits;
        return res;
    }

    if (D > 16) throw std::runtime_error("centralizer check: commutant system too large");
    std::vector<bool> dual = slot_duals(kind, n, wall);
    std::vector<IntMatrix> gens;
    for (const IntMatrix& g : lie_basis(kind, d)) gens.push_back(lie_tensor_action(g, dual, d));

    // Commutation equations K·vec(X) = 0 where row (gen, i, j) reads
    // (X·G - G·X)[i][j]; the commutant dimension is the nullity, and
    // rank(K) = rank(K^T K) keeps the elimination at D^2 x D^2.
    int unknowns = Di * Di;
    IntMatrix ggram(unknowns, unknowns);
    std::vector<std::pair<int, mpz_class>> row;
    for (const IntMatrix& G : gens) {
        for (int i = 0; i < Di; ++i)
            for (int j = 0; j < Di; ++j) {
                row.clear();
                for (int b = 0; b < Di; ++b)
                    if (G.at(b, j) != 0) row.emplace_back(i * Di + b, G.at(b, j));
                for (int a = 0; a < Di; ++a)
                    if (G.at(i, a) != 0) row.emplace_back(a * Di + j, -G.at(i, a));
                // merge duplicate columns (the diagonal collision a=i, b=j)
                std::sort(row.begin(), row.end(),
                          [](const auto& x, const auto& y) { return x.first < y.first; });
                for (size_t x = 0; x < row.size(); ++x) {
                    if (row[x].second == 0) continue;
                    for (size_t y = x + 1; y < row.size() && row[y].first == row[x].first; ++y) {
                        row[x].second += row[y].second;
                        row[y].second = 0;
                    }
                }
                for (const auto& [c1, v1] : row)
                    for (const auto& [c2, v2] : row) {
                        if (v1 == 0 || v2 == 0) continue;
                        ggram.at(c1, c2) += v1 * v2;
                    }
            }
    }
    res.dim_commutant = unknowns - rank_bareiss(ggram);
    return res;
}

namespace {

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

Partition cycle_type(const std::vector<int>& perm) {
    int n = static_cast<int>(perm.size());
    std::vector<char> seen(n, 0);
    Partition ct;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        int len = 0, cur = s;
        while (!seen[cur]) {
            seen[cur] = 1;
            cur = perm[cur];
            ++len;
        }
        ct.push_back(len);
    }
    std::sort(ct.begin(), ct.end(), std::greater<int>());
    return ct;
}

}  // namespace

std::map<std::pair<Partition, Partition>, long> traceless_decomposition(TracelessKind kind,
                                                                        int n, int m, int d) {
    if (n < 0 || m < 0 || d <= 0) throw std::invalid_argument("bad traceless parameters");
    if (kind != TracelessKind::gl && m != 0)
        throw std::invalid_argument("dual slots occur only for the gl flavor");
    int slots = n + m;
    long long D = ipow_checked(d, slots);
    if (D * D > kEntryGuard) throw std::runtime_error("traceless space too large");
    int Di = static_cast<int>(D);

    // Stack the contraction maps and intersect their kernels.
    std::vector<std::vector<mpz_class>> rows;  // each of length D
    auto new_row = [&]() -> std::vector<mpz_class>& {
        rows.emplace_back(Di);
        return rows.back();
    };
    long long Dout = (slots >= 2) ? D / d / d : 0;
    auto insert2 = [&](const std::vector<int>& K, int s1, int v1, int s2, int v2) {
        // rebuild a full multi-index from the contracted one
        std::vector<int> I(slots);
        int pos = 0;
        for (int s = 0; s < slots; ++s) {
            if (s == s1)
                I[s] = v1;
            else if (s == s2)
                I[s] = v2;
            else
                I[s] = K[pos++];
        }
        return encode_index(I, d);
    };

    if (kind == TracelessKind::gl) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j)
                for (long long k = 0; k < Dout; ++k) {
                    std::vector<int> K = decode_index(k, d, slots - 2);
                    auto& row = new_row();
                    for (int c = 0; c < d; ++c) row[insert2(K, i, c, n + j, c)] += 1;
                }
    } else if (kind == TracelessKind::o || kind == TracelessKind::sp) {
        IntMatrix F = (kind == TracelessKind::o) ? orthogonal_form(d) : symplectic_form(d);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (long long k = 0; k < Dout; ++k) {
                    std::vector<int> K = decode_index(k, d, slots - 2);
                    auto& row = new_row();
                    for (int a = 0; a < d; ++a)
                        for (int b = 0; b < d; ++b)
                            if (F.at(a, b) != 0) row[insert2(K, i, a, j, b)] += F.at(a, b);
                }
    } else {  // sym: slot sums and diagonal merges
        long long D1 = D / d;
        for (int i = 0; i < n; ++i)
            for (long long k = 0; k < D1; ++k) {
                std::vector<int> K = decode_index(k, d, slots - 1);
                auto& row = new_row();
                for (int c = 0; c < d; ++c) {
                    std::vector<int> I(slots);
                    int pos = 0;
                    for (int s = 0; s < slots; ++s) I[s] = (s == i) ? c : K[pos++];
                    row[encode_index(I, d)] += 1;
                }
            }
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (long long k = 0; k < D1; ++k) {
                    // merged value sits in the final slot of the output index
                    std::vector<int> K = decode_index(k, d, slots - 1);
                    int merged = K[slots - 2];
                    auto& row = new_row();
                    std::vector<int> rest(K.begin(), K.end() - 1);
                    row[insert2(rest, i, merged, j, merged)] += 1;
                }
    }

    IntMatrix B;
    if (rows.empty()) {
        B = IntMatrix::identity(Di);
    } else {
        IntMatrix M(static_cast<int>(rows.size()), Di);
        for (size_t r = 0; r < rows.size(); ++r)
            for (int c = 0; c < Di; ++c) M.at(static_cast<int>(r), c) = rows[r][c];
        B = nullspace(M);
    }

    std::map<std::pair<Partition, Partition>, long> out;
    if (B.cols == 0) return out;

    // Character projection under S_n (x S_m for gl).
    auto perms_n = all_permutations(n);
    auto perms_m = all_permutations(m);
    std::map<std::pair<Partition, Partition>, mpq_class> traces;
    for (const auto& sigma : perms_n)
        for (const auto& tau : perms_m) {
            IntMatrix PB(Di, B.cols);
            for (int r = 0; r < Di; ++r) {
                std::vector<int> I = decode_index(r, d, slots);
                std::vector<int> J(slots);
                for (int s = 0; s < n; ++s) J[sigma[s]] = I[s];
                for (int t = 0; t < m; ++t) J[n + tau[t]] = I[n + t];
                int rr = static_cast<int>(encode_index(J, d));
                for (int c = 0; c < B.cols; ++c) PB.at(rr, c) = B.at(r, c);
            }
            RatMatrix C = solve_full_column_rank(B, PB);
            mpq_class tr = trace_rat(C);
            auto key = std::make_pair(cycle_type(sigma), cycle_type(tau));
            traces[key] += tr;  // classes regroup automatically
        }

    mpz_class order = factorial(n) * factorial(m);
    for (const Partition& lam : partitions_of(n))
        for (const Partition& lam2 : partitions_of(m)) {
            mpq_class acc = 0;
            for (const auto& [key, tr] : traces)
                acc += mpq_class(character_mn(lam, key.first) *
                                 character_mn(lam2, key.second)) *
                       tr;
            acc /= mpq_class(order);
            mpq_class canon = acc;
            canon.canonicalize();
            if (canon == 0) continue;
            if (canon.get_den() != 1 || canon < 0)
                throw std::logic_error("character projection must give nonnegative integers");
            out[{lam, lam2}] = static_cast<long>(canon.get_num().get_si());
        }
    return out;
}

}  // namespace stabrep
