#include "stabrep/symfunc.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace stabrep {

SymPoly sympoly_multiply(const SymPoly& a, const SymPoly& b) {
    if (a.nvars != b.nvars) throw std::invalid_argument("variable count mismatch");
    SymPoly out;
    out.nvars = a.nvars;
    std::vector<int> e(a.nvars);
    for (const auto& [ea, ca] : a.coeffs) {
        for (const auto& [eb, cb] : b.coeffs) {
            for (int i = 0; i < a.nvars; ++i) e[i] = ea[i] + eb[i];
            mpz_class& slot = out.coeffs[e];
            slot += ca * cb;
            if (slot == 0) out.coeffs.erase(e);
        }
    }
    return out;
}

SymPoly sympoly_sub(const SymPoly& a, const SymPoly& b) {
    if (a.nvars != b.nvars) throw std::invalid_argument("variable count mismatch");
    SymPoly out = a;
    for (const auto& [e, c] : b.coeffs) {
        mpz_class& slot = out.coeffs[e];
        slot -= c;
        if (slot == 0) out.coeffs.erase(e);
    }
    return out;
}

namespace {

// Enumerate semistandard fillings of the skew shape outer/inner with entries
// 1..nvars, accumulating x^content into poly. Cells are filled row-major;
// rows weakly increase, columns strictly increase.
struct SsytEnumerator {
    const Partition& outer;
    const Partition& inner;
    int nvars;
    SymPoly& poly;
    std::vector<std::vector<int>> val;  // filled values; 0 = absent
    std::vector<int> content;

    void run() {
        val.assign(outer.size(), {});
        for (size_t r = 0; r < outer.size(); ++r) val[r].assign(outer[r], 0);
        content.assign(nvars, 0);
        fill_cell(0, inner_at(0));
    }

    int inner_at(int r) const {
        return (r < static_cast<int>(inner.size())) ? inner[r] : 0;
    }

    void fill_cell(int r, int c) {
        if (r == static_cast<int>(outer.size())) {
            poly.coeffs[content] += 1;
            return;
        }
        if (c == outer[r]) {
            int nr = r + 1;
            fill_cell(nr, nr == static_cast<int>(outer.size()) ? 0 : inner_at(nr));
            return;
        }
        int lo = 1;
        if (c > 0 && c - 1 >= inner_at(r)) lo = std::max(lo, val[r][c - 1]);  // row: weak
        if (r > 0 && c < static_cast<int>(outer[r - 1]) && c >= inner_at(r - 1)) {
            lo = std::max(lo, val[r - 1][c] + 1);  // column: strict
        }
        for (int v = lo; v <= nvars; ++v) {
            val[r][c] = v;
            ++content[v - 1];
            fill_cell(r, c + 1);
            --content[v - 1];
        }
        val[r][c] = 0;
    }
};

std::map<std::pair<Partition, int>, SymPoly>& schur_cache() {
    static std::map<std::pair<Partition, int>, SymPoly> cache;
    return cache;
}

}  // namespace

const SymPoly& schur_poly(const Partition& p, int nvars) {
    auto key = std::make_pair(p, nvars);
    auto it = schur_cache().find(key);
    if (it != schur_cache().end()) return it->second;
    SymPoly poly;
    poly.nvars = nvars;
    Partition empty;
    SsytEnumerator{p, empty, nvars, poly}.run();
    return schur_cache().emplace(std::move(key), std::move(poly)).first->second;
}

SymPoly skew_schur_poly(const Partition& p, const Partition& q, int nvars) {
    SymPoly poly;
    poly.nvars = nvars;
    if (!contains(p, q)) return poly;
    SsytEnumerator{p, q, nvars, poly}.run();
    return poly;
}

namespace {

// Count Littlewood–Richardson tableaux of shape lam/mu and content nu: cells
// are visited in reading order (each row right-to-left, rows top-down) so the
// lattice condition can be enforced online.
struct LrCounter {
    const Partition& lam;
    const Partition& mu;
    const Partition& nu;
    std::vector<std::vector<int>> val;
    std::vector<int> cnt;
    long total = 0;

    int mu_at(int r) const { return (r < static_cast<int>(mu.size())) ? mu[r] : 0; }

    void run() {
        val.assign(lam.size(), {});
        for (size_t r = 0; r < lam.size(); ++r) val[r].assign(lam[r], 0);
        cnt.assign(nu.size(), 0);
        visit(0, lam.empty() ? -1 : lam[0] - 1);
    }

    void visit(int r, int c) {
        if (r == static_cast<int>(lam.size())) {
            ++total;
            return;
        }
        if (c < mu_at(r)) {
            int nr = r + 1;
            visit(nr, nr == static_cast<int>(lam.size()) ? -1 : lam[nr] - 1);
            return;
        }
        int hi = static_cast<int>(nu.size());
        if (c + 1 < static_cast<int>(lam[r])) hi = std::min(hi, val[r][c + 1]);  // row: weak
        int lo = 1;
        if (r > 0 && c < static_cast<int>(lam[r - 1]) && c >= mu_at(r - 1)) {
            lo = std::max(lo, val[r - 1][c] + 1);  // column: strict
        }
        for (int v = lo; v <= hi; ++v) {
            if (cnt[v - 1] + 1 > nu[v - 1]) continue;             // content bound
            if (v >= 2 && cnt[v - 1] + 1 > cnt[v - 2]) continue;  // lattice word
            val[r][c] = v;
            ++cnt[v - 1];
            visit(r, c - 1);
            --cnt[v - 1];
        }
        val[r][c] = 0;
    }
};

}  // namespace

long lr_coeff(const Partition& lam, const Partition& mu, const Partition& nu) {
    if (psize(mu) + psize(nu) != psize(lam)) return 0;
    if (!contains(lam, mu) || !contains(lam, nu)) return 0;
    static std::map<std::tuple<Partition, Partition, Partition>, long> cache;
    auto key = std::make_tuple(lam, mu, nu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    LrCounter counter{lam, mu, nu};
    counter.run();
    cache.emplace(std::move(key), counter.total);
    return counter.total;
}

std::map<Partition, long, PartitionLess> skew_expand(const Partition& lam, const Partition& mu) {
    std::map<Partition, long, PartitionLess> out;
    if (!contains(lam, mu)) return out;
    int rest = psize(lam) - psize(mu);
    for (const auto& nu : partitions_of(rest)) {
        long c = lr_coeff(lam, mu, nu);
        if (c != 0) out[nu] = c;
    }
    return out;
}

std::map<Partition, mpz_class, PartitionLess> decompose_schur(SymPoly poly) {
    std::map<Partition, mpz_class, PartitionLess> out;
    while (!poly.coeffs.empty()) {
        auto top = poly.coeffs.rbegin();  // lexicographically greatest exponent
        std::vector<int> e = top->first;
        mpz_class c = top->second;
        for (size_t i = 0; i + 1 < e.size(); ++i) {
            if (e[i] < e[i + 1]) {
                throw std::runtime_error("leading exponent is not dominant; not symmetric?");
            }
        }
        Partition p(e.begin(), e.end());
        while (!p.empty() && p.back() == 0) p.pop_back();
        poly = sympoly_sub(poly, [&] {
            SymPoly scaled = schur_poly(p, poly.nvars);
            for (auto& [k, v] : scaled.coeffs) v *= c;
            return scaled;
        }());
        out[p] = c;
    }
    return out;
}

std::map<Partition, long, PartitionLess>
schur_product_oracle(const Partition& mu, const Partition& nu, int nvars) {
    if (nvars < psize(mu) + psize(nu)) {
        throw std::invalid_argument("need at least |mu|+|nu| variables to avoid truncation");
    }
    SymPoly prod = sympoly_multiply(schur_poly(mu, nvars), schur_poly(nu, nvars));
    std::map<Partition, long, PartitionLess> out;
    for (const auto& [p, c] : decompose_schur(std::move(prod))) {
        if (c < 0 || !c.fits_slong_p()) throw std::runtime_error("oracle decomposition out of range");
        out[p] = c.get_si();
    }
    return out;
}

long long character_mn(const Partition& lam, const Partition& cycle_type) {
    if (psize(lam) != psize(cycle_type)) throw std::invalid_argument("character: size mismatch");
    if (lam.empty()) return 1;
    static std::map<std::pair<Partition, Partition>, long long> cache;
    auto key = std::make_pair(lam, cycle_type);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    int k = cycle_type[0];
    Partition rest(cycle_type.begin() + 1, cycle_type.end());
    long long total = 0;
    for (const auto& [strip, remaining] : border_strips(lam, k, false)) {
        long long sub = character_mn(remaining, rest);
        total += (strip.height % 2 == 0) ? sub : -sub;
    }
    cache.emplace(std::move(key), total);
    return total;
}

mpz_class factorial(int n) {
    mpz_class f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

mpz_class hook_dimension(const Partition& lam) {
    Partition t = transpose(lam);
    mpz_class hooks = 1;
    for (int r = 1; r <= plength(lam); ++r) {
        for (int c = 1; c <= lam[r - 1]; ++c) {
            hooks *= (lam[r - 1] - c) + (t[c - 1] - r) + 1;
        }
    }
    mpz_class dim = factorial(psize(lam));
    mpz_divexact(dim.get_mpz_t(), dim.get_mpz_t(), hooks.get_mpz_t());
    return dim;
}

namespace {

mpz_class centralizer_order(const Partition& cycle_type) {
    mpz_class z = 1;
    for (size_t i = 0; i < cycle_type.size();) {
        size_t j = i;
        while (j < cycle_type.size() && cycle_type[j] == cycle_type[i]) ++j;
        int mult = static_cast<int>(j - i);
        for (int m = 1; m <= mult; ++m) z *= m;
        for (size_t r = i; r < j; ++r) z *= cycle_type[r];
        i = j;
    }
    return z;
}

}  // namespace

long kronecker(const Partition& lam, const Partition& mu, const Partition& nu) {
    int n = psize(lam);
    if (psize(mu) != n || psize(nu) != n) throw std::invalid_argument("kronecker: size mismatch");
    mpz_class nfact = factorial(n);
    mpz_class total = 0;
    for (const auto& ct : partitions_of(n)) {
        mpz_class cls = nfact / centralizer_order(ct);
        mpz_class term = cls;
        term *= character_mn(lam, ct);
        term *= character_mn(mu, ct);
        term *= character_mn(nu, ct);
        total += term;
    }
    mpz_class g;
    mpz_class rem;
    mpz_fdiv_qr(g.get_mpz_t(), rem.get_mpz_t(), total.get_mpz_t(), nfact.get_mpz_t());
    if (rem != 0 || g < 0 || !g.fits_slong_p()) {
        throw std::runtime_error("kronecker: inner product is not a nonnegative integer");
    }
    return g.get_si();
}

long stable_kronecker(const Partition& lam, const Partition& mu, const Partition& nu) {
    int first = 0;
    for (const auto* p : {&lam, &mu, &nu}) {
        if (!p->empty()) first = std::max(first, (*p)[0]);
    }
    int n0 = psize(lam) + psize(mu) + psize(nu) + first + 1;
    auto eval = [&](int n) {
        auto pl = pad(lam, n - psize(lam));
        auto pm = pad(mu, n - psize(mu));
        auto pn = pad(nu, n - psize(nu));
        if (!pl || !pm || !pn) throw std::runtime_error("stable kronecker: padding failed");
        return kronecker(*pl, *pm, *pn);
    };
    long a = eval(n0);
    long b = eval(n0 + 1);
    if (a != b) {
        throw std::runtime_error("stable kronecker: values at consecutive ranks disagree");
    }
    return a;
}

}  // namespace stabrep
