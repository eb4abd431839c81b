#include "stabrep/specialize.hpp"

#include <stdexcept>

#include "stabrep/symfunc.hpp"

namespace stabrep {

namespace {

void lp_cleanup(LaurentPoly& p) {
    for (auto it = p.coeffs.begin(); it != p.coeffs.end();)
        it = (it->second == 0) ? p.coeffs.erase(it) : std::next(it);
}

// s_p(x_1, x_1^{-1}, ..., x_k, x_k^{-1}): the Schur polynomial in 2k
// variables folded onto the symplectic torus.
LaurentPoly schur_folded(const Partition& p, int k) {
    const SymPoly& s = schur_poly(p, 2 * k);
    LaurentPoly out = lp_zero(k);
    for (const auto& [e, c] : s.coeffs) {
        std::vector<int> w(k);
        for (int j = 0; j < k; ++j) w[j] = e[2 * j] - e[2 * j + 1];
        out.coeffs[w] += c;
    }
    lp_cleanup(out);
    return out;
}

// s_p(x_1, ..., x_d), or s_p(x_1^{-1}, ..., x_d^{-1}) when inverted.
LaurentPoly schur_rank(const Partition& p, int d, bool inverted) {
    const SymPoly& s = schur_poly(p, d);
    LaurentPoly out = lp_zero(d);
    for (const auto& [e, c] : s.coeffs) {
        std::vector<int> w = e;
        if (inverted)
            for (int& a : w) a = -a;
        out.coeffs[w] += c;
    }
    return out;
}

}  // namespace

std::optional<std::vector<int>> specialize_simple(KCat cat, const Label& x, int rank,
                                                  OspVariant variant) {
    if (rank < 0) throw std::invalid_argument("negative rank");
    switch (cat) {
        case KCat::gl: {
            int a = plength(x.lam), b = plength(x.lam2);
            if (a + b > rank) return std::nullopt;
            std::vector<int> w(rank, 0);
            for (int i = 0; i < a; ++i) w[i] = x.lam[i];
            for (int i = 0; i < b; ++i) w[rank - 1 - i] = -x.lam2[i];
            return w;
        }
        case KCat::osp: {
            if (variant == OspVariant::o) {
                Partition t = transpose(x.lam);
                if (part_at(t, 1) + part_at(t, 2) > rank) return std::nullopt;
            } else if (plength(x.lam) > rank) {
                return std::nullopt;
            }
            return x.lam;
        }
        case KCat::sym: {
            if (rank < psize(x.lam)) return std::nullopt;
            std::optional<Partition> padded = pad(x.lam, rank - psize(x.lam));
            if (!padded) return std::nullopt;
            return *padded;
        }
        default:
            throw std::invalid_argument("specialization covers gl, osp and sym simples");
    }
}

SpecResult derived_specialize_sym(const Partition& lam, int d) {
    if (!is_partition(lam)) throw std::invalid_argument("not a partition");
    if (d < 0) throw std::invalid_argument("negative rank");
    SpecResult out;
    if (d >= psize(lam)) {
        auto label = specialize_simple(KCat::sym, Label{lam, {}}, d);
        if (label) {
            out.nonzero = true;
            out.degree = 0;
            out.weight = *label;
        }
        return out;
    }
    auto strips = border_strips(lam, psize(lam) - d, true);
    if (strips.size() > 1)
        throw std::runtime_error("ambiguous border strip: uniqueness violated");
    if (!strips.empty()) {
        out.nonzero = true;
        out.degree = strips[0].first.height;
        out.weight = strips[0].second;
    }
    return out;
}

FiniteClass euler_specialize(KCat cat, const Label& x, int rank, OspVariant variant) {
    if (rank < 0) throw std::invalid_argument("negative rank");
    if (cat == KCat::osp) {
        if (variant == OspVariant::o)
            throw std::invalid_argument(
                "orthogonal Euler data is reached by transposing the label and using the "
                "Sp reading");
        if (rank > 3)
            throw std::runtime_error("rank guard: sp derived specialization needs k <= 3");
        FiniteClass total{FinGroup::sp, rank, {}};
        std::vector<KClass> levels = littlewood_complex(KCat::osp, x, OspVariant::sp);
        for (size_t i = 0; i < levels.size(); ++i) {
            LaurentPoly chi = lp_zero(rank);
            for (const auto& [lbl, mult] : levels[i].terms)
                chi = lp_add(chi, lp_scale(schur_folded(lbl.lam, rank), mult));
            if (chi.coeffs.empty()) continue;
            FiniteClass dec = decompose_character(chi, FinGroup::sp);
            total = fc_add(total, fc_scale(dec, (i % 2) ? mpz_class(-1) : mpz_class(1)));
        }
        return total;
    }
    if (cat == KCat::gl) {
        if (rank > 4)
            throw std::runtime_error("rank guard: gl derived specialization needs d <= 4");
        FiniteClass total{FinGroup::gl, rank, {}};
        std::vector<KClass> levels = littlewood_complex(KCat::gl, x);
        for (size_t i = 0; i < levels.size(); ++i) {
            LaurentPoly chi = lp_zero(rank);
            for (const auto& [lbl, mult] : levels[i].terms) {
                LaurentPoly term = lp_multiply(schur_rank(lbl.lam, rank, false),
                                               schur_rank(lbl.lam2, rank, true));
                chi = lp_add(chi, lp_scale(term, mult));
            }
            if (chi.coeffs.empty()) continue;
            FiniteClass dec = decompose_character(chi, FinGroup::gl);
            total = fc_add(total, fc_scale(dec, (i % 2) ? mpz_class(-1) : mpz_class(1)));
        }
        return total;
    }
    throw std::invalid_argument("derived specialization covers gl and osp labels");
}

FiniteClass finite_tensor_via_stable(KCat cat, const Label& x, const Label& y, int rank,
                                     OspVariant variant) {
    KClass prod = stable_tensor(cat, x, y);
    FiniteClass total{cat == KCat::gl ? FinGroup::gl : FinGroup::sp, rank, {}};
    for (const auto& [l, c] : prod.terms)
        total = fc_add(total, fc_scale(euler_specialize(cat, l, rank, variant), c));
    return total;
}

}  // namespace stabrep
