#pragma once

#include "lambdap/exterior.hpp"
#include "lambdap/linsolve.hpp"

namespace lambdap {

/// Elementary braiding on V (x) V:
///   tau(a (x) b) = (p^{theta_{a,b}} - 1) a (x) b - p^{theta_{b,a}} b (x) a.
inline Element elementary_tau(const BasisOrder& basis, int a, int b) {
    if (a < 1 || a > basis.n || b < 1 || b > basis.n) throw Error("elementary_tau: index range");
    Mask ma = Mask(1) << (a - 1), mb = Mask(1) << (b - 1);
    Element out(2);
    if (a > b) out.add_term({ma, mb}, LaurentPoly::p(1) - LaurentPoly(1));
    out.add_term({mb, ma}, -LaurentPoly::p(a < b ? 1 : 0));
    return out;
}

/// tau as an operator on the degree-(1,1) block.
inline Op elementary_tau_op(const BasisOrder& basis) {
    Op op(2, 2);
    for (int a = 1; a <= basis.n; ++a)
        for (int b = 1; b <= basis.n; ++b)
            op.set_column({Mask(1) << (a - 1), Mask(1) << (b - 1)},
                          elementary_tau(basis, a, b));
    return op;
}

/// Induced braiding via the graded form
///   hat_tau f_{E,F} = sum_k gamma_k L^<|F|-k> R^<|E|-k> f_{E,F},
/// assembled block by block over bidegrees.
inline Op hat_tau_moy(const BasisOrder& basis) {
    std::vector<Op> ld, rd;
    for (int k = 0; k <= basis.n; ++k) {
        ld.push_back(divided_power_L(basis, k));
        rd.push_back(divided_power_R(basis, k));
    }
    return Op::build(basis, 2, 2, [&](const BasisKey& key) {
        const int m = card(key[0]), n = card(key[1]);
        Element out(2);
        for (int k = 0; k <= std::min(m, n); ++k)
            out += ld[n - k].apply(rd[m - k].apply(key)).scaled(gauss_gamma(k));
        return out;
    });
}

/// Exchange-channel coefficient beta_{E,G;F,H}; see the channel decomposition.
inline LaurentPoly beta_coeff(Mask e, Mask g, Mask f, Mask h) {
    const Mask c = e & f;
    const Mask fdot = (f & ~e) & ~h;
    const Mask ep = (e & ~g) | h;
    const Mask fp = (f & ~h) | g;
    LaurentPoly a = alpha(g, h);
    if (a.is_zero()) return a;
    int sign = (theta(f, e) + theta(fp, ep)) % 2 == 0 ? 1 : -1;
    int pexp = theta(g | c, e) + theta(fdot, ep);
    return LaurentPoly::monomial(sign, pexp, 0) * a;
}

/// Size-k exchange channel tau_k applied to one basis pair; the global
/// (-1)^{|E||F|} sign lives here, not in beta.
inline Element tau_channel_of(Mask e, Mask f, int k) {
    Element out(2);
    const int gs = (card(e) * card(f)) % 2 == 0 ? 1 : -1;
    for (Mask g : k_subsets(e & ~f, k)) {
        for (Mask h : k_subsets(f & ~e, k)) {
            if (!alpha_nonvanishing(g, h)) continue;  // skip known zeros
            LaurentPoly coeff = beta_coeff(e, g, f, h);
            if (coeff.is_zero()) continue;
            Mask ep = (e & ~g) | h, fp = (f & ~h) | g;
            out.add_term({fp, ep}, gs == 1 ? coeff : -coeff);
        }
    }
    return out;
}

/// Induced braiding via direct coefficient enumeration over exchange channels.
inline Op hat_tau_coeff(const BasisOrder& basis) {
    return Op::build(basis, 2, 2, [&](const BasisKey& key) {
        Element out(2);
        int kmax = std::min(card(key[0] & ~key[1]), card(key[1] & ~key[0]));
        for (int k = 0; k <= kmax; ++k) out += tau_channel_of(key[0], key[1], k);
        return out;
    });
}

/// Channel decomposition of hat_tau keyed by exchange size k.
inline std::map<int, Op> braiding_channels(const BasisOrder& basis) {
    std::map<int, Op> out;
    for (int k = 0; k <= basis.n; ++k) {
        Op ch = Op::build(basis, 2, 2, [&](const BasisKey& key) {
            return tau_channel_of(key[0], key[1], k);
        });
        if (!ch.is_zero()) out.emplace(k, std::move(ch));
    }
    return out;
}

namespace detail {

/// Inverts a degree-graded arity-2 operator block by block. `block_of` maps
/// a basis tuple to its block id; the operator must preserve blocks.
template <class BlockFn>
LinearOperator<RationalFn> invert_blockwise(const Op& op, const BasisOrder& basis,
                                            BlockFn block_of) {
    std::map<int, std::vector<BasisKey>> blocks;
    for (const BasisKey& k : all_keys(basis, 2)) blocks[block_of(k)].push_back(k);
    LinearOperator<RationalFn> inv(2, 2);
    for (const auto& [id, keys] : blocks) {
        const size_t n = keys.size();
        std::map<BasisKey, size_t> index;
        for (size_t i = 0; i < n; ++i) index.emplace(keys[i], i);
        // columns of op restricted to the block
        Matrix<RationalFn> m(n, std::vector<RationalFn>(n, RationalFn(0)));
        for (size_t j = 0; j < n; ++j) {
            for (const auto& [ko, c] : op.apply(keys[j])) {
                auto it = index.find(ko);
                if (it == index.end())
                    throw Error("invert_blockwise: operator does not preserve blocks");
                m[it->second][j] = RationalFn(c);
            }
        }
        // solve M X = I column by column
        for (size_t j = 0; j < n; ++j) {
            std::vector<RationalFn> rhs(n, RationalFn(0));
            rhs[j] = RationalFn(1);
            auto sol = solve_linear(m, rhs);
            if (!sol.consistent || !sol.nullspace.empty())
                throw Error("invert_blockwise: singular block");
            TensorElement<RationalFn> img(2);
            for (size_t i = 0; i < n; ++i) img.add_term(keys[i], sol.particular[i]);
            inv.set_column(keys[j], img);
        }
    }
    return inv;
}

}  // namespace detail

/// Exact two-sided inverse of hat_tau, solved per bidegree block over the
/// fraction field; entries are asserted to land back in the Laurent ring.
/// Since hat_tau swaps bidegrees, a block joins (m,n) with (n,m).
inline Op inverse_braiding(const Op& hat_tau, const BasisOrder& basis) {
    auto inv = detail::invert_blockwise(hat_tau, basis, [&](const BasisKey& k) {
        int a = card(k[0]), b = card(k[1]);
        return std::min(a, b) * (basis.n + 1) + std::max(a, b);
    });
    Op out(2, 2);
    for (const auto& [k, img] : inv.columns()) {
        Element e(2);
        for (const auto& [ko, c] : img.terms()) e.add_term(ko, c.as_laurent());
        out.set_column(k, e);
    }
    return out;
}

}  // namespace lambdap
