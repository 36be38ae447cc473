#pragma once

#include "lambdap/linear_operator.hpp"
#include "lambdap/qseries.hpp"

namespace lambdap {

using Op = LinearOperator<LaurentPoly>;
using Element = TensorElement<LaurentPoly>;

/// Basis product rule: f_E f_F = [E cap F = 0] (-1)^{theta_{E,F}} f_{E u F}.
inline Element product_pair(Mask e, Mask f) {
    Element out(1);
    if ((e & f) == 0)
        out.add_term({e | f}, LaurentPoly(theta(e, f) % 2 == 0 ? 1 : -1));
    return out;
}

/// Product as an operator Lambda^{x2} -> Lambda.
inline Op product_op(const BasisOrder& basis) {
    return Op::build(basis, 2, 1, [](const BasisKey& k) { return product_pair(k[0], k[1]); });
}

/// Coproduct: Delta f_E = sum_{A <= E} (-p)^{theta_{A,E\A}} f_A (x) f_{E\A}.
inline Element coproduct_of(Mask e) {
    Element out(2);
    for (Mask a : all_subsets(e)) {
        int th = theta(a, e & ~a);
        out.add_term({a, e & ~a}, LaurentPoly::monomial(th % 2 == 0 ? 1 : -1, th, 0));
    }
    return out;
}

inline Op coproduct_op(const BasisOrder& basis) {
    return Op::build(basis, 1, 2, [](const BasisKey& k) { return coproduct_of(k[0]); });
}

/// Antipode: S f_E = gamma_{|E|} f_E, diagonal in the set-theoretic basis.
inline Op antipode_op(const BasisOrder& basis) {
    return Op::build(basis, 1, 1, [](const BasisKey& k) {
        return Element::basis(k).scaled(gauss_gamma(card(k[0])));
    });
}

/// Unit element f_{} of the algebra.
inline Element unit_element() { return Element::basis({Mask(0)}); }

/// Counit: the coefficient of f_{}.
inline LaurentPoly counit(const Element& x) {
    if (x.arity() != 1) throw Error("counit: arity-1 input required");
    return x.coeff({Mask(0)});
}

/// Projection onto the degree-k component.
inline Op projector_op(const BasisOrder& basis, int k) {
    return Op::build(basis, 1, 1, [k](const BasisKey& key) {
        return card(key[0]) == k ? Element::basis(key) : Element(1);
    });
}

/// Delta_{k)} = (pi_k (x) id) Delta.
inline Element delta_left_of(Mask e, int k) {
    Element out(2);
    for (Mask a : k_subsets(e, k)) {
        int th = theta(a, e & ~a);
        out.add_term({a, e & ~a}, LaurentPoly::monomial(th % 2 == 0 ? 1 : -1, th, 0));
    }
    return out;
}
inline Op delta_left_op(const BasisOrder& basis, int k) {
    return Op::build(basis, 1, 2, [k](const BasisKey& key) { return delta_left_of(key[0], k); });
}

/// Delta_{(k} = (id (x) pi_k) Delta.
inline Element delta_right_of(Mask e, int k) {
    Element out(2);
    for (Mask a : k_subsets(e, k)) {
        int th = theta(e & ~a, a);
        out.add_term({e & ~a, a}, LaurentPoly::monomial(th % 2 == 0 ? 1 : -1, th, 0));
    }
    return out;
}
inline Op delta_right_op(const BasisOrder& basis, int k) {
    return Op::build(basis, 1, 2, [k](const BasisKey& key) { return delta_right_of(key[0], k); });
}

/// Diagonal automorphism acting by base^{|E|} on f_E; base is a monomial
/// such as p or t.
inline Op phi_op(const BasisOrder& basis, const LaurentPoly& base) {
    return Op::build(basis, 1, 1, [&](const BasisKey& key) {
        LaurentPoly c(1);
        for (int i = 0; i < card(key[0]); ++i) c *= base;
        return Element::basis(key).scaled(c);
    });
}
inline Op phi_p_op(const BasisOrder& basis) { return phi_op(basis, LaurentPoly::p()); }
inline Op phi_t_op(const BasisOrder& basis) { return phi_op(basis, LaurentPoly::t()); }

inline Op op_T1(const BasisOrder& basis) {
    return tensor(phi_p_op(basis), Op::identity(basis, 1));
}
inline Op op_T2(const BasisOrder& basis) {
    return tensor(Op::identity(basis, 1), phi_p_op(basis));
}

/// Divided power L^<k> = (prod (x) id)(id (x) Delta_{k)}), assembled column-wise.
inline Op divided_power_L(const BasisOrder& basis, int k) {
    return Op::build(basis, 2, 2, [&, k](const BasisKey& key) {
        Element out(2);
        for (const auto& [dk, dc] : delta_left_of(key[1], k)) {
            for (const auto& [pk, pc] : product_pair(key[0], dk[0]))
                out.add_term({pk[0], dk[1]}, dc * pc);
        }
        return out;
    });
}

/// Divided power R^<k> = (id (x) prod)(Delta_{(k} (x) id).
inline Op divided_power_R(const BasisOrder& basis, int k) {
    return Op::build(basis, 2, 2, [&, k](const BasisKey& key) {
        Element out(2);
        for (const auto& [dk, dc] : delta_right_of(key[0], k)) {
            for (const auto& [pk, pc] : product_pair(dk[1], key[1]))
                out.add_term({dk[0], pk[0]}, dc * pc);
        }
        return out;
    });
}

inline Op op_L(const BasisOrder& basis) { return divided_power_L(basis, 1); }
inline Op op_R(const BasisOrder& basis) { return divided_power_R(basis, 1); }

/// Divided powers via plain powers and exact division by [k]_p^!; retained as
/// a cross-check of the closed forms above.
inline Op divided_power_via_powers(const BasisOrder& basis, const Op& x, int k) {
    Op acc = Op::identity(basis, 2);
    for (int i = 0; i < k; ++i) acc = x.compose(acc);
    LaurentPoly fact = qfactorial(k);
    Op out(2, 2);
    for (const auto& [key, img] : acc.columns()) {
        Element e(2);
        for (const auto& [ko, c] : img.terms()) e.add_term(ko, exact_divide(c, fact));
        out.set_column(key, e);
    }
    return out;
}

/// Truncated operator exponential exp_p(X) = sum_k X^<k>; L and R are
/// nilpotent beyond total degree N, so k runs to N.
inline Op exp_p_of_L(const BasisOrder& basis) {
    Op acc = Op::identity(basis, 2);
    for (int k = 1; k <= basis.n; ++k) acc += divided_power_L(basis, k);
    return acc;
}
inline Op exp_p_of_R(const BasisOrder& basis) {
    Op acc = Op::identity(basis, 2);
    for (int k = 1; k <= basis.n; ++k) acc += divided_power_R(basis, k);
    return acc;
}

/// B = (prod (x) id)(S (x) (Delta prod))(Delta (x) id), via raw structure maps.
inline Op op_B_structure(const BasisOrder& basis) {
    Op id1 = Op::identity(basis, 1);
    Op step1 = tensor(coproduct_op(basis), id1);                               // 2 -> 3
    Op step2 = tensor(antipode_op(basis),
                      coproduct_op(basis).compose(product_op(basis)));        // 3 -> 3
    Op step3 = tensor(product_op(basis), id1);                                // 3 -> 2
    return step3.compose(step2.compose(step1));
}

/// B = exp_p(L) (S (x) id) exp_p(R), via the truncated exponentials.
inline Op op_B_exponential(const BasisOrder& basis) {
    Op s_id = tensor(antipode_op(basis), Op::identity(basis, 1));
    return exp_p_of_L(basis).compose(s_id.compose(exp_p_of_R(basis)));
}

}  // namespace lambdap
