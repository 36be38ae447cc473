#pragma once

#include <chrono>

#include "lambdap/rmatrix.hpp"

namespace lambdap {

/// Machine-readable outcome of one identity check. A failing report always
/// carries a concrete counterexample (input tuple plus both sides).
struct VerificationReport {
    std::string name;
    json params = json::object();
    bool pass = true;
    std::string counterexample;
    double wall_ms = 0.0;
    std::vector<VerificationReport> sub;

    json to_json() const {
        json j{{"name", name},
               {"params", params},
               {"status", pass ? "pass" : "fail"},
               {"wall_ms", wall_ms}};
        if (!pass) j["counterexample"] = counterexample;
        if (!sub.empty()) {
            j["sub"] = json::array();
            for (const auto& s : sub) j["sub"].push_back(s.to_json());
        }
        return j;
    }
};

namespace detail {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        auto d = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration<double, std::milli>(d).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

template <class Ring>
void check_equal(VerificationReport& rep, const std::string& what,
                 const LinearOperator<Ring>& lhs, const LinearOperator<Ring>& rhs) {
    if (!rep.pass) return;
    if (lhs == rhs) return;
    auto k = LinearOperator<Ring>::first_difference(lhs, rhs);
    rep.pass = false;
    rep.counterexample = what + " at " + key_to_string(*k) + ": lhs = " +
                         lhs.apply(*k).to_string() + ", rhs = " + rhs.apply(*k).to_string();
}

inline void check_true(VerificationReport& rep, bool ok, const std::string& what) {
    if (!rep.pass || ok) return;
    rep.pass = false;
    rep.counterexample = what;
}

}  // namespace detail

/// The five structure maps plus the braiding, bundled so checks can run
/// against deliberately corrupted data as well as the standard maps.
struct HopfMaps {
    Op product;
    Op coproduct;
    Op antipode;
    Op braiding;
};

inline HopfMaps standard_hopf_maps(const BasisOrder& basis) {
    return HopfMaps{product_op(basis), coproduct_op(basis), antipode_op(basis),
                    hat_tau_moy(basis)};
}

/// (eta (x) id) as an operator H -> H (x) H.
inline Op eta_left_op(const BasisOrder& basis) {
    return Op::build(basis, 1, 2,
                     [](const BasisKey& k) { return Element::basis({Mask(0), k[0]}); });
}
inline Op eta_right_op(const BasisOrder& basis) {
    return Op::build(basis, 1, 2,
                     [](const BasisKey& k) { return Element::basis({k[0], Mask(0)}); });
}
/// (eps (x) id) as an operator H (x) H -> H.
inline Op eps_left_op(const BasisOrder& basis) {
    return Op::build(basis, 2, 1, [](const BasisKey& k) {
        return k[0] == 0 ? Element::basis({k[1]}) : Element(1);
    });
}
inline Op eps_right_op(const BasisOrder& basis) {
    return Op::build(basis, 2, 1, [](const BasisKey& k) {
        return k[1] == 0 ? Element::basis({k[0]}) : Element(1);
    });
}
/// eta eps : H -> H.
inline Op eta_eps_op(const BasisOrder& basis) {
    return Op::build(basis, 1, 1, [](const BasisKey& k) {
        return k[0] == 0 ? Element::basis({Mask(0)}) : Element(1);
    });
}

/// Axioms Hr1..Hr7: associativity, coassociativity, unitality, counitality,
/// antipode invertibility, unit-braiding compatibility, and the braided
/// product/coproduct compatibility. Exact operator identities on full bases.
inline VerificationReport verify_hopf_with(const BasisOrder& basis, const HopfMaps& m) {
    detail::Stopwatch sw;
    VerificationReport rep;
    rep.name = "hopf";
    rep.params = {{"dim", basis.n}};
    Op id1 = Op::identity(basis, 1);

    detail::check_equal(rep, "associativity",
                        m.product.compose(tensor(m.product, id1)),
                        m.product.compose(tensor(id1, m.product)));
    detail::check_equal(rep, "coassociativity",
                        tensor(m.coproduct, id1).compose(m.coproduct),
                        tensor(id1, m.coproduct).compose(m.coproduct));
    detail::check_equal(rep, "unitality (left)", m.product.compose(eta_left_op(basis)), id1);
    detail::check_equal(rep, "unitality (right)", m.product.compose(eta_right_op(basis)), id1);
    detail::check_equal(rep, "counitality (left)",
                        eps_left_op(basis).compose(m.coproduct), id1);
    detail::check_equal(rep, "counitality (right)",
                        eps_right_op(basis).compose(m.coproduct), id1);
    Op etaeps = eta_eps_op(basis);
    detail::check_equal(rep, "antipode (left)",
                        m.product.compose(tensor(m.antipode, id1)).compose(m.coproduct), etaeps);
    detail::check_equal(rep, "antipode (right)",
                        m.product.compose(tensor(id1, m.antipode)).compose(m.coproduct), etaeps);
    detail::check_equal(rep, "unit compatibility (left)",
                        m.braiding.compose(eta_left_op(basis)), eta_right_op(basis));
    detail::check_equal(rep, "unit compatibility (right)",
                        m.braiding.compose(eta_right_op(basis)), eta_left_op(basis));
    detail::check_equal(rep, "compatibility",
                        tensor(m.product, m.product)
                            .compose(tensor(id1, tensor(m.braiding, id1)))
                            .compose(tensor(m.coproduct, m.coproduct)),
                        m.coproduct.compose(m.product));
    rep.wall_ms = sw.ms();
    return rep;
}

inline VerificationReport verify_hopf(const BasisOrder& basis) {
    return verify_hopf_with(basis, standard_hopf_maps(basis));
}

/// Naturality of the braiding with respect to unit, counit, antipode,
/// product and coproduct (the braided-linear-map relations).
inline VerificationReport verify_naturality(const BasisOrder& basis) {
    detail::Stopwatch sw;
    VerificationReport rep;
    rep.name = "naturality";
    rep.params = {{"dim", basis.n}};
    Op id1 = Op::identity(basis, 1);
    Op tau = hat_tau_moy(basis);
    Op prod = product_op(basis), cop = coproduct_op(basis), anti = antipode_op(basis);
    Op tau_l = tensor(tau, id1), tau_r = tensor(id1, tau);

    detail::check_equal(rep, "unit slide (left)", tau.compose(eta_left_op(basis)),
                        eta_right_op(basis));
    detail::check_equal(rep, "unit slide (right)", tau.compose(eta_right_op(basis)),
                        eta_left_op(basis));
    detail::check_equal(rep, "counit slide (left)", eps_left_op(basis).compose(tau),
                        eps_right_op(basis));
    detail::check_equal(rep, "counit slide (right)", eps_right_op(basis).compose(tau),
                        eps_left_op(basis));
    detail::check_equal(rep, "antipode slide (first)", tensor(anti, id1).compose(tau),
                        tau.compose(tensor(id1, anti)));
    detail::check_equal(rep, "antipode slide (second)", tensor(id1, anti).compose(tau),
                        tau.compose(tensor(anti, id1)));
    detail::check_equal(rep, "product slide (left)", tau.compose(tensor(prod, id1)),
                        tensor(id1, prod).compose(tau_l).compose(tau_r));
    detail::check_equal(rep, "product slide (right)", tau.compose(tensor(id1, prod)),
                        tensor(prod, id1).compose(tau_r).compose(tau_l));
    detail::check_equal(rep, "coproduct slide (left)", tensor(cop, id1).compose(tau),
                        tau_r.compose(tau_l).compose(tensor(id1, cop)));
    detail::check_equal(rep, "coproduct slide (right)", tensor(id1, cop).compose(tau),
                        tau_l.compose(tau_r).compose(tensor(cop, id1)));
    rep.wall_ms = sw.ms();
    return rep;
}

/// hat_tau expressed through the structure maps alone:
///   hat_tau = (prod (x) prod)(S (x) (Delta prod) (x) S)(Delta (x) Delta).
inline VerificationReport verify_braiding_expression(const BasisOrder& basis) {
    detail::Stopwatch sw;
    VerificationReport rep;
    rep.name = "braiding_structure_expression";
    rep.params = {{"dim", basis.n}};
    Op prod = product_op(basis), cop = coproduct_op(basis), anti = antipode_op(basis);
    Op mid = tensor(anti, tensor(cop.compose(prod), anti));
    Op lhs = tensor(prod, prod).compose(mid).compose(tensor(cop, cop));
    detail::check_equal(rep, "structure-map expression", lhs, hat_tau_moy(basis));
    // antipode-braiding relation S prod = prod hat_tau (S (x) S)
    detail::check_equal(rep, "antipode-braiding",
                        anti.compose(prod),
                        prod.compose(hat_tau_moy(basis)).compose(tensor(anti, anti)));
    rep.wall_ms = sw.ms();
    return rep;
}

/// Yang-Baxter on the triple tensor power for an arity-2 operator.
template <class Ring>
VerificationReport verify_ybe(const LinearOperator<Ring>& op, const BasisOrder& basis,
                              const std::string& label) {
    detail::Stopwatch sw;
    VerificationReport rep;
    rep.name = "ybe(" + label + ")";
    rep.params = {{"dim", basis.n}, {"operator", label}};
    auto id1 = LinearOperator<Ring>::identity(basis, 1);
    auto lhsf = tensor(op, id1), rhsf = tensor(id1, op);
    detail::check_equal(rep, "yang-baxter", lhsf.compose(rhsf).compose(lhsf),
                        rhsf.compose(lhsf).compose(rhsf));
    rep.wall_ms = sw.ms();
    return rep;
}

/// Hecke relation (tau + 1)(tau - p) = 0 on V (x) V, plus the stated
/// eigenvector families.
inline VerificationReport verify_hecke(const BasisOrder& basis) {
    detail::Stopwatch sw;
    VerificationReport rep;
    rep.name = "hecke";
    rep.params = {{"dim", basis.n}};
    Op tau = elementary_tau_op(basis);
    Op idb(2, 2);  // identity on the (1,1) block
    for (const auto& [k, img] : tau.columns()) idb.set_column(k, Element::basis(k));
    Op quad = tau.compose(tau) + tau.scaled(LaurentPoly(1) - LaurentPoly::p()) -
              idb.scaled(LaurentPoly::p());
    detail::check_true(rep, quad.is_zero(), "quadratic relation does not vanish");
    for (int a = 1; a <= basis.n && rep.pass; ++a) {
        Mask ma = Mask(1) << (a - 1);
        Element aa = Element::basis({ma, ma});
        detail::check_true(rep, tau.apply(aa) == aa.scaled(LaurentPoly(-1)),
                           "a(x)a not a (-1)-eigenvector at a=" + std::to_string(a));
        for (int b = a + 1; b <= basis.n && rep.pass; ++b) {
            Mask mb = Mask(1) << (b - 1);
            Element sym = Element::basis({ma, mb}) + Element::basis({mb, ma});
            Element skew = Element::basis({ma, mb}) -
                           Element::basis({mb, ma}).scaled(LaurentPoly::p());
            detail::check_true(rep, tau.apply(sym) == sym.scaled(LaurentPoly(-1)),
                               "symmetric vector not a (-1)-eigenvector");
            detail::check_true(rep, tau.apply(skew) == skew.scaled(LaurentPoly::p()),
                               "skew vector not a p-eigenvector");
        }
    }
    rep.wall_ms = sw.ms();
    return rep;
}

/// No nontrivial primitives in degrees 2..N: solves the primitivity equations
/// over the fraction field and reports the null-space dimension per degree.
inline VerificationReport verify_nichols_primitives(const BasisOrder& basis) {
    detail::Stopwatch sw;
    VerificationReport rep;
    rep.name = "nichols_primitives";
    rep.params = {{"dim", basis.n}};
    json dims = json::object();
    for (int d = 2; d <= basis.n; ++d) {
        std::vector<Mask> degree_basis;
        for (Mask m : all_subsets(basis.full()))
            if (card(m) == d) degree_basis.push_back(m);
        std::map<std::pair<Mask, Mask>, size_t> row_index;
        std::vector<std::vector<RationalFn>> rows;
        auto row_of = [&](Mask a, Mask b) {
            auto [it, inserted] = row_index.emplace(std::make_pair(a, b), rows.size());
            if (inserted) rows.emplace_back(degree_basis.size(), RationalFn(0));
            return it->second;
        };
        for (size_t col = 0; col < degree_basis.size(); ++col) {
            for (const auto& [k, c] : coproduct_of(degree_basis[col])) {
                if (k[0] == 0 || k[1] == 0) continue;  // primitive part is subtracted off
                rows[row_of(k[0], k[1])][col] = RationalFn(c);
            }
        }
        auto sol = solve_linear(rows, std::vector<RationalFn>(rows.size(), RationalFn(0)));
        dims[std::to_string(d)] = sol.nullspace.size();
        detail::check_true(rep, sol.nullspace.empty(),
                           "nontrivial primitive space in degree " + std::to_string(d) +
                               " (dim " + std::to_string(sol.nullspace.size()) + ")");
    }
    rep.params["null_space_dims"] = dims;
    rep.wall_ms = sw.ms();
    return rep;
}

struct LemmaRanges {
    int subset_qbinom_n = 8;  // subset q-binomial identity, |E| <= n
    int bubble_dim = 4;       // bubble identity, N <= this
    int summation_max = 6;    // two-index summation identity, i,j <= this
    int rl_power_max = 3;     // RL commutation, m,n <= this
    int rl_dim = 3;           // RL commutation, N <= this
    int poch_add_max = 6;     // Pochhammer additivity, m,n <= this

    void validate() const {
        if (subset_qbinom_n < 0 || subset_qbinom_n > 16 || bubble_dim < 1 || bubble_dim > 8 ||
            summation_max < 0 || rl_power_max < 0 || rl_dim < 1 || rl_dim > 4 ||
            poch_add_max < 0)
            throw Error("verify_lemma_suite: malformed ranges");
    }
};

/// Bundled combinatorial identities with per-identity sub-reports.
inline VerificationReport verify_lemma_suite(const LemmaRanges& ranges = {}) {
    ranges.validate();
    detail::Stopwatch sw;
    VerificationReport rep;
    rep.name = "lemmas";
    rep.params = {{"subset_qbinom_n", ranges.subset_qbinom_n},
                  {"bubble_dim", ranges.bubble_dim},
                  {"summation_max", ranges.summation_max},
                  {"rl_power_max", ranges.rl_power_max},
                  {"rl_dim", ranges.rl_dim},
                  {"poch_add_max", ranges.poch_add_max}};

    {  // subset q-binomial: sum over k-subsets of p^{theta_{A,E\A}} = qbinom(|E|,k)
        detail::Stopwatch s2;
        VerificationReport r;
        r.name = "subset_qbinomial";
        const Mask ambient = static_cast<Mask>((1u << ranges.subset_qbinom_n) - 1);
        for (Mask e : all_subsets(ambient)) {
            int n = card(e);
            for (int k = 0; k <= n && r.pass; ++k) {
                LaurentPoly acc;
                for (Mask a : k_subsets(e, k)) acc += LaurentPoly::p(theta(a, e & ~a));
                detail::check_true(r, acc == qbinom(n, k),
                                   "subset q-binomial fails at E=" + mask_to_string(e) +
                                       ", k=" + std::to_string(k) + ": " + acc.to_string());
            }
            if (!r.pass) break;
        }
        r.wall_ms = s2.ms();
        rep.sub.push_back(std::move(r));
    }
    {  // bubble: prod Delta_{k)} pi_n = qbinom(n,k) pi_n = prod Delta_{(k} pi_n
        detail::Stopwatch s2;
        VerificationReport r;
        r.name = "bubble";
        BasisOrder basis(ranges.bubble_dim);
        Op prod = product_op(basis);
        for (int n = 0; n <= basis.n && r.pass; ++n) {
            Op pin = projector_op(basis, n);
            for (int k = 0; k <= n && r.pass; ++k) {
                Op lhs = prod.compose(delta_left_op(basis, k)).compose(pin);
                Op rhs = pin.scaled(qbinom(n, k));
                detail::check_equal(r, "bubble (left) n=" + std::to_string(n) +
                                       " k=" + std::to_string(k), lhs, rhs);
                Op lhs2 = prod.compose(delta_right_op(basis, k)).compose(pin);
                detail::check_equal(r, "bubble (right) n=" + std::to_string(n) +
                                        " k=" + std::to_string(k), lhs2, rhs);
            }
        }
        r.wall_ms = s2.ms();
        rep.sub.push_back(std::move(r));
    }
    {  // summation: sum_{k,l} qbinom(i,k) (p^{i-j-k};p)_l/(p)_l gamma_k p^l = delta_{ij}
        detail::Stopwatch s2;
        VerificationReport r;
        r.name = "summation";
        for (int i = 0; i <= ranges.summation_max && r.pass; ++i) {
            for (int j = 0; j <= ranges.summation_max && r.pass; ++j) {
                RationalFn acc(0);
                for (int k = 0; k <= i; ++k) {
                    for (int l = 0; l <= j; ++l) {
                        RationalFn term(qbinom(i, k) * qpochhammer(LaurentPoly::p(i - j - k), l) *
                                            gauss_gamma(k) * LaurentPoly::p(l),
                                        poch_p(l));
                        acc += term;
                    }
                }
                detail::check_true(r, acc == RationalFn(i == j ? 1 : 0),
                                   "summation fails at i=" + std::to_string(i) +
                                       ", j=" + std::to_string(j) + ": " + acc.to_string());
            }
        }
        r.wall_ms = s2.ms();
        rep.sub.push_back(std::move(r));
    }
    {  // RL commutation identity over the fraction field
        detail::Stopwatch s2;
        VerificationReport r;
        r.name = "rl_commutation";
        BasisOrder basis(ranges.rl_dim);
        std::vector<LinearOperator<RationalFn>> ld, rd;
        for (int k = 0; k <= basis.n + ranges.rl_power_max; ++k) {
            ld.push_back(to_rational(k <= basis.n ? divided_power_L(basis, k) : Op(2, 2)));
            rd.push_back(to_rational(k <= basis.n ? divided_power_R(basis, k) : Op(2, 2)));
        }
        auto t1 = to_rational(op_T1(basis)), t2 = to_rational(op_T2(basis));
        for (int m = 0; m <= ranges.rl_power_max && r.pass; ++m) {
            for (int n = 0; n <= ranges.rl_power_max && r.pass; ++n) {
                auto lhs = rd[m].compose(ld[n]);
                LinearOperator<RationalFn> rhs(2, 2);
                for (int k = 0; k <= std::min(m, n); ++k) {
                    auto term = ld[n - k].compose(rd[m - k]);
                    for (int j = 1; j <= k; ++j) {
                        auto factor = t1.scaled(RationalFn(LaurentPoly::p(k - m))) -
                                      t2.scaled(RationalFn(LaurentPoly::p(j - n)));
                        term = term.compose(factor);
                    }
                    rhs += term.scaled(RationalFn(LaurentPoly(1), poch_p(k)));
                }
                detail::check_equal(r, "rl m=" + std::to_string(m) + " n=" + std::to_string(n),
                                    lhs, rhs);
            }
        }
        r.wall_ms = s2.ms();
        rep.sub.push_back(std::move(r));
    }
    {  // Pochhammer additivity (t;p)_{m+n} = (t;p)_n (t p^n; p)_m
        detail::Stopwatch s2;
        VerificationReport r;
        r.name = "pochhammer_additivity";
        for (int m = 0; m <= ranges.poch_add_max && r.pass; ++m) {
            for (int n = 0; n <= ranges.poch_add_max && r.pass; ++n) {
                LaurentPoly lhs = qpochhammer(LaurentPoly::t(), m + n);
                LaurentPoly rhs = qpochhammer(LaurentPoly::t(), n) *
                                  qpochhammer(LaurentPoly::monomial(1, n, 1), m);
                detail::check_true(r, lhs == rhs,
                                   "additivity fails at m=" + std::to_string(m) +
                                       ", n=" + std::to_string(n));
            }
        }
        r.wall_ms = s2.ms();
        rep.sub.push_back(std::move(r));
    }
    for (const auto& s : rep.sub) {
        if (!s.pass) {
            rep.pass = false;
            rep.counterexample = s.name + ": " + s.counterexample;
            break;
        }
    }
    rep.wall_ms = sw.ms();
    return rep;
}

}  // namespace lambdap
