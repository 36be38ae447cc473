#pragma once

#include "lambdap/braiding.hpp"

namespace lambdap {

/// Right action of the algebra on itself: f_E <| f_F = f_E f_F (t p^{|E|}; p)_{|F|}.
inline Element right_action(const BasisOrder& basis, Mask e, Mask f) {
    if ((e | f) & ~basis.full()) throw Error("right_action: subset out of range");
    LaurentPoly w(1);
    for (int i = 0; i < card(f); ++i)
        w *= LaurentPoly(1) - LaurentPoly::monomial(1, card(e) + i, 1);
    Element out(1);
    for (const auto& [k, c] : product_pair(e, f)) out.add_term(k, c * w);
    return out;
}

/// Right action assembled from the raw structure maps (the defining
/// composition), used to validate the closed form above.
inline Element right_action_raw(const BasisOrder& basis, const Op& hat_tau, Mask e, Mask f) {
    // nabla^(2) ((S phi_t) (x) id (x) id)(hat_tau (x) id)(id (x) Delta) f_{E,F}
    if ((e | f) & ~basis.full()) throw Error("right_action_raw: subset out of range");
    Element out(1);
    for (const auto& [dk, dc] : coproduct_of(f)) {
        for (const auto& [bk, bc] : hat_tau.apply(BasisKey{e, dk[0]})) {
            LaurentPoly c = dc * bc * gauss_gamma(card(bk[0]));
            c *= LaurentPoly::t(card(bk[0]));  // phi_t after S on the first strand
            for (const auto& [p1, c1] : product_pair(bk[0], bk[1])) {
                for (const auto& [p2, c2] : product_pair(p1[0], dk[1]))
                    out.add_term(p2, c * c1 * c2);
            }
        }
    }
    return out;
}

/// W_n(x, tL; p) = sum_{i=0}^n (x;p)_{n-i} t^i L^<i>, as an operator; the
/// divided powers beyond the top degree vanish and are skipped.
inline Op wn_operator(int n, const LaurentPoly& x, const std::vector<Op>& l_divided) {
    Op acc(2, 2);
    for (int i = 0; i <= n && i < static_cast<int>(l_divided.size()); ++i) {
        LaurentPoly w = qpochhammer(x, n - i) * LaurentPoly::t(i);
        acc += l_divided[i].scaled(w);
    }
    return acc;
}

/// R-matrix via the graded operator form
///   rho f_{E,F} = sum_k t^k gamma_k W_{|F|-k}(t p^{|E|}, tL; p) R^<|E|-k> f_{E,F}.
inline Op rho_operator_form(const BasisOrder& basis) {
    std::vector<Op> ld, rd;
    for (int k = 0; k <= basis.n; ++k) {
        ld.push_back(divided_power_L(basis, k));
        rd.push_back(divided_power_R(basis, k));
    }
    std::vector<std::vector<Op>> wn(basis.n + 1);  // wn[m][n] = W_n(t p^m, tL)
    for (int m = 0; m <= basis.n; ++m)
        for (int n = 0; n <= basis.n; ++n)
            wn[m].push_back(wn_operator(n, LaurentPoly::monomial(1, m, 1), ld));
    return Op::build(basis, 2, 2, [&](const BasisKey& key) {
        const int m = card(key[0]), n = card(key[1]);
        Element out(2);
        for (int k = 0; k <= std::min(m, n); ++k) {
            Element step = rd[m - k].apply(key);
            step = wn[m][n - k].apply(step);
            out += step.scaled(gauss_gamma(k) * LaurentPoly::t(k));
        }
        return out;
    });
}

/// Coefficient of the R-matrix on one channel:
///   r_{E,G;F,H} = t^{|F'|} (t p^{|E|}; p)_{|H|-|G|} beta_{E,G;F,H}.
inline LaurentPoly rho_coefficient(Mask e, Mask g, Mask f, Mask h) {
    LaurentPoly b = beta_coeff(e, g, f, h);
    if (b.is_zero()) return b;
    const Mask fp = (f & ~h) | g;
    LaurentPoly w(1);
    for (int i = 0; i < card(h) - card(g); ++i)
        w *= LaurentPoly(1) - LaurentPoly::monomial(1, card(e) + i, 1);
    return LaurentPoly::t(card(fp)) * w * b;
}

/// R-matrix via direct coefficient enumeration.
inline Op rho_coeff_form(const BasisOrder& basis) {
    return Op::build(basis, 2, 2, [&](const BasisKey& key) {
        const Mask e = key[0], f = key[1];
        Element out(2);
        const int gs = (card(e) * card(f)) % 2 == 0 ? 1 : -1;
        for (Mask g : all_subsets(e & ~f)) {
            for (Mask h : all_subsets(f & ~e)) {
                if (card(h) < card(g)) continue;
                LaurentPoly c = rho_coefficient(e, g, f, h);
                if (c.is_zero()) continue;
                Mask ep = (e & ~g) | h, fp = (f & ~h) | g;
                out.add_term({fp, ep}, gs == 1 ? c : -c);
            }
        }
        return out;
    });
}

/// Exact inverse of rho, solved per total-degree block (rho mixes bidegrees
/// within a total degree). Entries may be honest rational functions.
inline LinearOperator<RationalFn> rho_inverse(const Op& rho, const BasisOrder& basis) {
    return detail::invert_blockwise(rho, basis,
                                    [](const BasisKey& k) { return key_degree(k); });
}

/// The conventional flat index for the small-dimension tables: empty set,
/// then singletons in order, then pairs {i,j} at slot 1+i+j, then the full
/// set. Bitmask order differs from it at N=3 (slots 3 and 4 swap).
inline std::vector<Mask> flat_index(const BasisOrder& basis) {
    switch (basis.n) {
        case 1:
            return {0b0, 0b1};
        case 2:
            return {0b00, 0b01, 0b10, 0b11};
        case 3:
            return {0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111};
        default: {
            std::vector<Mask> v;
            for (Mask m = 0; m <= basis.full(); ++m) v.push_back(m);
            return v;
        }
    }
}

enum class Channel { Scattering, Reflection, Decay, Fusion, Exchange };

inline const char* channel_name(Channel c) {
    switch (c) {
        case Channel::Scattering: return "scattering";
        case Channel::Reflection: return "reflection";
        case Channel::Decay: return "decay";
        case Channel::Fusion: return "fusion";
        case Channel::Exchange: return "exchange";
    }
    return "?";
}

/// Classify an entry f_{E,F} -> f_{A,B} of a channel-decomposed operator.
/// Scattering is the strand swap (which subsumes the diagonal when E = F),
/// reflection the diagonal, and the remainder splits by degree flow.
inline Channel classify_entry(Mask e, Mask f, Mask a, Mask b) {
    if (a == f && b == e) return Channel::Scattering;
    if (a == e && b == f) return Channel::Reflection;
    if (e == 0) return Channel::Decay;
    if (a == 0) return Channel::Fusion;
    return Channel::Exchange;
}

struct ChannelEntry {
    int in_first, in_second;    // flat indices of the input pair
    int out_first, out_second;  // flat indices of the output pair
    LaurentPoly coeff;
};

/// Channel report for the assembled R-matrix, in the flat index.
struct ChannelReport {
    int n = 0;
    std::vector<Mask> index;
    std::vector<std::vector<int>> exponent_matrix;          // scattering p-exponents m_{i,j}
    std::vector<std::vector<LaurentPoly>> reflection_raw;   // diagonal coefficients as-is
    std::map<Channel, std::vector<ChannelEntry>> channels;  // everything, classified

    json to_json() const {
        json j;
        j["dim"] = n;
        j["flat_index"] = json::array();
        for (Mask m : index) j["flat_index"].push_back(mask_to_json(m));
        j["exponent_matrix"] = exponent_matrix;
        json refl = json::array();
        for (const auto& row : reflection_raw) {
            json r = json::array();
            for (const auto& c : row) r.push_back(c.to_json());
            refl.push_back(r);
        }
        j["reflection_matrix_raw"] = refl;
        json ch;
        for (const auto& [c, entries] : channels) {
            json arr = json::array();
            for (const auto& ent : entries)
                arr.push_back(json{{"in", {ent.in_first, ent.in_second}},
                                   {"out", {ent.out_first, ent.out_second}},
                                   {"coeff", ent.coeff.to_json()}});
            ch[channel_name(c)] = arr;
        }
        j["channels"] = ch;
        return j;
    }
};

/// Classifies the entries of an assembled rho into named channels. The
/// scattering coefficients are checked to be (-1)^{[i][j]} t^{[j]} p^m and the
/// exponent m is tabulated; the reflection diagonal is reported raw.
inline ChannelReport rho_channels(const Op& rho, const BasisOrder& basis) {
    ChannelReport rep;
    rep.n = basis.n;
    rep.index = flat_index(basis);
    const int dim = static_cast<int>(rep.index.size());
    std::map<Mask, int> pos;
    for (int i = 0; i < dim; ++i) pos.emplace(rep.index[i], i);
    rep.exponent_matrix.assign(dim, std::vector<int>(dim, 0));
    rep.reflection_raw.assign(dim, std::vector<LaurentPoly>(dim));
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            const Mask e = rep.index[i], f = rep.index[j];
            for (const auto& [ko, c] : rho.apply(BasisKey{e, f})) {
                Channel ch = classify_entry(e, f, ko[0], ko[1]);
                ChannelEntry ent{i, j, pos.at(ko[0]), pos.at(ko[1]), c};
                switch (ch) {
                    case Channel::Scattering: {
                        // coefficient must be a signed monomial t^{[j]} p^m
                        int sign = (card(e) * card(f)) % 2 == 0 ? 1 : -1;
                        if (!c.is_monomial() || c.terms()[0].t_exp != card(f) ||
                            c.terms()[0].coeff != sign)
                            throw Error("rho_channels: unexpected scattering coefficient " +
                                        c.to_string());
                        rep.exponent_matrix[j][i] = c.terms()[0].p_exp;
                        break;
                    }
                    case Channel::Reflection:
                        rep.reflection_raw[i][j] = c;
                        break;
                    default:
                        break;
                }
                rep.channels[ch].push_back(std::move(ent));
            }
        }
    }
    return rep;
}

}  // namespace lambdap
