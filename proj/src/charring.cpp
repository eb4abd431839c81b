#include "stabrep/charring.hpp"

#include "stabrep/symfunc.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace stabrep {

namespace {

void lp_cleanup(LaurentPoly& p) {
    for (auto it = p.coeffs.begin(); it != p.coeffs.end();)
        it = (it->second == 0) ? p.coeffs.erase(it) : std::next(it);
}

void check_rank(const LaurentPoly& x, const LaurentPoly& y) {
    if (x.rank != y.rank) throw std::invalid_argument("Laurent ranks differ");
}

}  // namespace

LaurentPoly lp_zero(int rank) {
    LaurentPoly p;
    p.rank = rank;
    return p;
}

LaurentPoly lp_monomial(std::vector<int> exponent, const mpz_class& c) {
    LaurentPoly p;
    p.rank = static_cast<int>(exponent.size());
    if (c != 0) p.coeffs[std::move(exponent)] = c;
    return p;
}

LaurentPoly lp_add(const LaurentPoly& x, const LaurentPoly& y) {
    check_rank(x, y);
    LaurentPoly out = x;
    for (const auto& [e, c] : y.coeffs) out.coeffs[e] += c;
    lp_cleanup(out);
    return out;
}

LaurentPoly lp_sub(const LaurentPoly& x, const LaurentPoly& y) {
    check_rank(x, y);
    LaurentPoly out = x;
    for (const auto& [e, c] : y.coeffs) out.coeffs[e] -= c;
    lp_cleanup(out);
    return out;
}

LaurentPoly lp_multiply(const LaurentPoly& x, const LaurentPoly& y) {
    check_rank(x, y);
    LaurentPoly out = lp_zero(x.rank);
    std::vector<int> e(x.rank);
    for (const auto& [e1, c1] : x.coeffs)
        for (const auto& [e2, c2] : y.coeffs) {
            for (int i = 0; i < x.rank; ++i) e[i] = e1[i] + e2[i];
            out.coeffs[e] += c1 * c2;
        }
    lp_cleanup(out);
    return out;
}

LaurentPoly lp_scale(const LaurentPoly& x, const mpz_class& c) {
    LaurentPoly out = lp_zero(x.rank);
    if (c == 0) return out;
    for (const auto& [e, v] : x.coeffs) out.coeffs[e] = v * c;
    return out;
}

LaurentPoly lp_divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
    check_rank(num, den);
    if (den.coeffs.empty()) throw std::invalid_argument("division by zero");
    LaurentPoly rem = num, quot = lp_zero(num.rank);
    auto dl = den.coeffs.rbegin();  // lex-greatest monomial of the divisor
    long guard = 0;
    while (!rem.coeffs.empty()) {
        if (++guard > 200000) throw std::runtime_error("inexact Laurent division");
        auto nl = rem.coeffs.rbegin();
        if (!mpz_divisible_p(nl->second.get_mpz_t(), dl->second.get_mpz_t()))
            throw std::runtime_error("inexact Laurent division");
        std::vector<int> qe(num.rank);
        for (int i = 0; i < num.rank; ++i) qe[i] = nl->first[i] - dl->first[i];
        mpz_class qc = nl->second / dl->second;
        quot.coeffs[qe] += qc;
        rem = lp_sub(rem, lp_multiply(lp_monomial(qe, qc), den));
    }
    lp_cleanup(quot);
    return quot;
}

std::string fin_group_name(FinGroup g) {
    switch (g) {
        case FinGroup::gl: return "gl";
        case FinGroup::sp: return "sp";
        case FinGroup::sym: return "sym";
    }
    throw std::logic_error("unknown finite group");
}

LaurentPoly gl_character(const std::vector<int>& weight, int d) {
    if (static_cast<int>(weight.size()) != d)
        throw std::invalid_argument("weight length must equal the rank");
    for (size_t i = 1; i < weight.size(); ++i)
        if (weight[i - 1] < weight[i]) throw std::invalid_argument("weight is not dominant");
    if (d == 0) {
        LaurentPoly one = lp_zero(0);
        one.coeffs[{}] = 1;
        return one;
    }
    int shift = weight.back();
    Partition p;
    for (int w : weight)
        if (w - shift > 0) p.push_back(w - shift);
    const SymPoly& s = schur_poly(p, d);
    LaurentPoly out = lp_zero(d);
    for (const auto& [e, c] : s.coeffs) {
        std::vector<int> shifted = e;
        for (int& v : shifted) v += shift;
        out.coeffs[std::move(shifted)] = c;
    }
    return out;
}

namespace {

// det( x_i^{l_j} - x_i^{-l_j} )_{1<=i,j<=k} expanded over permutations; each
// factor involves a single variable, so a term is a choice of sign per row.
LaurentPoly alternant_det(const std::vector<int>& l, int k) {
    LaurentPoly out = lp_zero(k);
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int inv = 0;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (perm[i] > perm[j]) ++inv;
        int psign = (inv % 2) ? -1 : 1;
        for (int mask = 0; mask < (1 << k); ++mask) {
            std::vector<int> e(k);
            int msign = 1;
            for (int i = 0; i < k; ++i) {
                if (mask & (1 << i)) {
                    e[i] = -l[perm[i]];
                    msign = -msign;
                } else {
                    e[i] = l[perm[i]];
                }
            }
            out.coeffs[e] += psign * msign;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    lp_cleanup(out);
    return out;
}

}  // namespace

LaurentPoly sp_character(const Partition& mu, int k) {
    if (plength(mu) > k) throw std::invalid_argument("highest weight too long for the rank");
    if (k > 6) throw std::runtime_error("symplectic rank guard");
    if (k == 0) {
        LaurentPoly one = lp_zero(0);
        one.coeffs[{}] = 1;
        return one;
    }
    std::vector<int> l(k), m(k);
    for (int j = 1; j <= k; ++j) {
        l[j - 1] = part_at(mu, j) + k - j + 1;
        m[j - 1] = k - j + 1;
    }
    return lp_divide_exact(alternant_det(l, k), alternant_det(m, k));
}

namespace {

void check_same_space(const FiniteClass& x, const FiniteClass& y) {
    if (x.group != y.group || x.rank != y.rank)
        throw std::invalid_argument("finite classes live in different rings");
}

void fc_cleanup(FiniteClass& x) {
    for (auto it = x.terms.begin(); it != x.terms.end();)
        it = (it->second == 0) ? x.terms.erase(it) : std::next(it);
}

Partition key_to_partition(const std::vector<int>& key) {
    Partition p = key;
    normalize_partition(p);
    return p;
}

void check_weyl_invariance(const LaurentPoly& chi, FinGroup group) {
    std::map<std::vector<int>, mpz_class> canon;
    for (const auto& [e, c] : chi.coeffs) {
        std::vector<int> key = e;
        if (group == FinGroup::sp)
            for (int& v : key) v = std::abs(v);
        std::sort(key.begin(), key.end(), std::greater<int>());
        auto [it, inserted] = canon.emplace(key, c);
        if (!inserted && it->second != c)
            throw std::invalid_argument("character is not Weyl-invariant");
    }
    // A partial orbit passes this coefficient check but is caught later by a
    // non-dominant leading term during peeling.
}

}  // namespace

FiniteClass fc_add(const FiniteClass& x, const FiniteClass& y) {
    check_same_space(x, y);
    FiniteClass out = x;
    for (const auto& [t, c] : y.terms) out.terms[t] += c;
    fc_cleanup(out);
    return out;
}

FiniteClass fc_scale(const FiniteClass& x, const mpz_class& c) {
    FiniteClass out;
    out.group = x.group;
    out.rank = x.rank;
    if (c == 0) return out;
    for (const auto& [t, v] : x.terms) out.terms[t] = v * c;
    return out;
}

LaurentPoly finite_character(const FiniteClass& x) {
    if (x.group == FinGroup::sym)
        throw std::invalid_argument("symmetric groups have no torus character here");
    LaurentPoly out = lp_zero(x.rank);
    for (const auto& [t, c] : x.terms) {
        LaurentPoly term = (x.group == FinGroup::gl)
                               ? gl_character(t, x.rank)
                               : sp_character(key_to_partition(t), x.rank);
        out = lp_add(out, lp_scale(term, c));
    }
    return out;
}

FiniteClass fc_multiply(const FiniteClass& x, const FiniteClass& y) {
    check_same_space(x, y);
    if (x.group == FinGroup::sym) {
        FiniteClass out;
        out.group = x.group;
        out.rank = x.rank;
        std::vector<Partition> all = partitions_of(x.rank);
        for (const auto& [t1, c1] : x.terms)
            for (const auto& [t2, c2] : y.terms) {
                Partition lam = key_to_partition(t1), mu = key_to_partition(t2);
                for (const Partition& nu : all) {
                    long g = kronecker(lam, mu, nu);
                    if (g != 0) out.terms[nu] += c1 * c2 * g;
                }
            }
        fc_cleanup(out);
        return out;
    }
    return decompose_character(lp_multiply(finite_character(x), finite_character(y)), x.group);
}

FiniteClass decompose_character(const LaurentPoly& chi, FinGroup group) {
    if (group == FinGroup::sym)
        throw std::invalid_argument("symmetric groups have no torus character here");
    check_weyl_invariance(chi, group);
    FiniteClass out;
    out.group = group;
    out.rank = chi.rank;
    LaurentPoly rem = chi;
    while (!rem.coeffs.empty()) {
        auto lead = rem.coeffs.rbegin();
        const std::vector<int>& e = lead->first;
        for (size_t i = 1; i < e.size(); ++i)
            if (e[i - 1] < e[i]) throw std::invalid_argument("character is not Weyl-invariant");
        mpz_class c = lead->second;
        if (group == FinGroup::gl) {
            out.terms[e] += c;
            rem = lp_sub(rem, lp_scale(gl_character(e, chi.rank), c));
        } else {
            if (!e.empty() && e.back() < 0)
                throw std::invalid_argument("character is not Weyl-invariant");
            Partition mu = key_to_partition(e);
            out.terms[mu] += c;
            rem = lp_sub(rem, lp_scale(sp_character(mu, chi.rank), c));
        }
    }
    fc_cleanup(out);
    return out;
}

mpz_class weyl_dim_gl(const std::vector<int>& weight, int d) {
    if (static_cast<int>(weight.size()) != d)
        throw std::invalid_argument("weight length must equal the rank");
    mpz_class num = 1, den = 1;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            num *= weight[i] - weight[j] + j - i;
            den *= j - i;
        }
    mpz_class out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
}

mpz_class weyl_dim_sp(const Partition& mu, int k) {
    if (plength(mu) > k) throw std::invalid_argument("highest weight too long for the rank");
    std::vector<long> l(k), m(k);
    for (int j = 1; j <= k; ++j) {
        l[j - 1] = part_at(mu, j) + k - j + 1;
        m[j - 1] = k - j + 1;
    }
    mpz_class num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= l[i];
        den *= m[i];
        for (int j = i + 1; j < k; ++j) {
            num *= (l[i] * l[i] - l[j] * l[j]);
            den *= (m[i] * m[i] - m[j] * m[j]);
        }
    }
    mpz_class out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
}

mpz_class finite_dim(const FiniteClass& x) {
    mpz_class out = 0;
    for (const auto& [t, c] : x.terms) {
        if (x.group == FinGroup::gl)
            out += c * weyl_dim_gl(t, x.rank);
        else if (x.group == FinGroup::sp)
            out += c * weyl_dim_sp(key_to_partition(t), x.rank);
        else
            out += c * hook_dimension(key_to_partition(t));
    }
    return out;
}

}  // namespace stabrep
