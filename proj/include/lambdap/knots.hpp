#pragma once

#include <numeric>

#include "lambdap/verify.hpp"

namespace lambdap {

/// A braid word on n strands; letters are signed generator indices,
/// +i for sigma_i and -i for its inverse, 1 <= i <= n-1.
struct BraidWord {
    int strands = 1;
    std::vector<int> letters;

    BraidWord(int n, std::vector<int> w) : strands(n), letters(std::move(w)) {
        if (n < 1) throw Error("BraidWord: need at least one strand");
        for (int l : letters)
            if (l == 0 || std::abs(l) > strands - 1)
                throw Error("BraidWord: generator index out of range");
    }

    int writhe() const {
        int w = 0;
        for (int l : letters) w += l > 0 ? 1 : -1;
        return w;
    }
    int positive_count() const {
        return static_cast<int>(std::count_if(letters.begin(), letters.end(),
                                              [](int l) { return l > 0; }));
    }
    int negative_count() const {
        return static_cast<int>(letters.size()) - positive_count();
    }

    /// Permutation of strand endpoints induced by the word.
    std::vector<int> permutation() const {
        std::vector<int> perm(strands);
        std::iota(perm.begin(), perm.end(), 0);
        for (int l : letters) std::swap(perm[std::abs(l) - 1], perm[std::abs(l)]);
        return perm;
    }

    /// The closure is a knot iff the permutation is a single n-cycle.
    bool closure_is_knot() const {
        auto perm = permutation();
        int seen = 1, at = perm[0];
        while (at != 0) {
            at = perm[at];
            ++seen;
        }
        return seen == strands;
    }
};

/// Parses "1,1,-2" style letter lists.
inline std::vector<int> parse_braid_letters(const std::string& s) {
    std::vector<int> out;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) return;
        size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(cur, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != cur.size()) throw Error("braid word: bad letter '" + cur + "'");
        out.push_back(v);
        cur.clear();
    };
    for (char c : s) {
        if (c == ',' || c == ' ')
            flush();
        else
            cur += c;
    }
    flush();
    return out;
}

/// Default cap on the number of sparse basis tuples a braid computation may
/// touch; override with LAMBDAP_BUDGET.
inline std::uint64_t resource_budget() {
    if (const char* env = std::getenv("LAMBDAP_BUDGET")) {
        long long v = std::atoll(env);
        if (v > 0) return static_cast<std::uint64_t>(v);
    }
    return std::uint64_t(1) << 20;
}

struct ResourceError : Error {
    using Error::Error;
};

/// Diagonal enhancement (mu, lambda+-) turning rho into a Markov-trace
/// machine: (mu (x) mu) rho = rho (mu (x) mu) and
/// ptr_2((id (x) mu) rho^{+-1}) = lambda_{+-} id.
struct Enhancement {
    int dim = 1;
    std::vector<RationalFn> mu;  // indexed by subset bitmask, mu[0] = 1
    RationalFn lambda_plus;
    RationalFn lambda_minus;
};

namespace detail {

/// Partial trace over the second slot of (id (x) mu) rho^{+-1}, as a matrix
/// over the arity-1 basis: out[i'][i] = sum_j mu_j <f_{i',j}|rho|f_{i,j}>.
template <class Ring>
std::vector<std::vector<RationalFn>> traced_matrix(const LinearOperator<Ring>& rho,
                                                   const BasisOrder& basis,
                                                   const std::vector<RationalFn>& mu) {
    const int dim = basis.dim();
    std::vector<std::vector<RationalFn>> out(dim, std::vector<RationalFn>(dim, RationalFn(0)));
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            for (const auto& [ko, c] : rho.apply(BasisKey{Mask(i), Mask(j)})) {
                if (ko[1] != Mask(j)) continue;
                out[ko[0]][i] += RationalFn(c) * mu[j];
            }
        }
    }
    return out;
}

}  // namespace detail

/// Solves for the enhancement of rho at dimension N: mu_0 = 1 anchors the
/// normalization, the remaining diagonal entries and lambda+ come from the
/// partial-trace conditions, lambda- from rho^{-1}. Throws when no solution
/// or a multi-parameter family exists (both are findings, not fallbacks).
/// `pivot_order` selects the row scan of the linear solver so the result can
/// be re-derived along an independent elimination path.
inline Enhancement solve_enhancement(const BasisOrder& basis, bool reverse_pivot_order = false) {
    const int dim = basis.dim();
    Op rho = rho_operator_form(basis);

    // coefficients c[ip][i][j] = <f_{ip,j}| rho |f_{i,j}>
    std::vector<std::vector<RationalFn>> mat;
    std::vector<RationalFn> rhs;
    auto push_row = [&](std::vector<RationalFn> row, RationalFn r) {
        mat.push_back(std::move(row));
        rhs.push_back(std::move(r));
    };
    auto coeff = [&](int ip, int i, int j) {
        return RationalFn(rho.entry(BasisKey{Mask(ip), Mask(j)}, BasisKey{Mask(i), Mask(j)}));
    };
    // unknowns mu_1..mu_{dim-1}
    for (int i = 0; i < dim; ++i) {
        for (int ip = 0; ip < dim; ++ip) {
            if (i == ip) continue;
            std::vector<RationalFn> row(dim - 1, RationalFn(0));
            for (int j = 1; j < dim; ++j) row[j - 1] = coeff(ip, i, j);
            push_row(std::move(row), -coeff(ip, i, 0));
        }
    }
    for (int i = 1; i < dim; ++i) {
        std::vector<RationalFn> row(dim - 1, RationalFn(0));
        for (int j = 1; j < dim; ++j) row[j - 1] = coeff(i, i, j) - coeff(0, 0, j);
        push_row(std::move(row), coeff(0, 0, 0) - coeff(i, i, 0));
    }
    std::vector<size_t> order;
    if (reverse_pivot_order) {
        order.resize(mat.size());
        for (size_t k = 0; k < order.size(); ++k) order[k] = order.size() - 1 - k;
    }
    auto sol = solve_linear(mat, rhs, order);
    if (!sol.consistent) throw Error("solve_enhancement: no enhancement exists");
    if (!sol.nullspace.empty())
        throw Error("solve_enhancement: non-unique enhancement (dim " +
                    std::to_string(sol.nullspace.size()) + ")");

    Enhancement enh;
    enh.dim = basis.n;
    enh.mu.assign(dim, RationalFn(1));
    for (int j = 1; j < dim; ++j) enh.mu[j] = sol.particular[j - 1];

    // lambda+ and a full recheck of the defining conditions
    auto tp = detail::traced_matrix(rho, basis, enh.mu);
    enh.lambda_plus = tp[0][0];
    for (int i = 0; i < dim; ++i)
        for (int ip = 0; ip < dim; ++ip)
            if (tp[ip][i] != (i == ip ? enh.lambda_plus : RationalFn(0)))
                throw Error("solve_enhancement: partial trace is not scalar");

    // commutation with mu (x) mu
    for (const auto& [k, img] : rho.columns()) {
        RationalFn w_in = enh.mu[k[0]] * enh.mu[k[1]];
        for (const auto& [ko, c] : img.terms()) {
            if ((enh.mu[ko[0]] * enh.mu[ko[1]] - w_in) * RationalFn(c) != RationalFn(0))
                throw Error("solve_enhancement: mu (x) mu does not commute with rho");
        }
    }

    auto rho_inv = rho_inverse(rho, basis);
    auto tm = detail::traced_matrix(rho_inv, basis, enh.mu);
    enh.lambda_minus = tm[0][0];
    for (int i = 0; i < dim; ++i)
        for (int ip = 0; ip < dim; ++ip)
            if (tm[ip][i] != (i == ip ? enh.lambda_minus : RationalFn(0)))
                throw Error("solve_enhancement: inverse partial trace is not scalar");
    if (enh.lambda_plus.is_zero() || enh.lambda_minus.is_zero())
        throw Error("solve_enhancement: degenerate lambda");
    return enh;
}

/// The sparse state space (2^N)^strands must stay within the budget.
inline void ensure_within_budget(const BraidWord& w, const BasisOrder& basis) {
    std::uint64_t size = 1;
    for (int s = 0; s < w.strands; ++s) {
        size *= static_cast<std::uint64_t>(basis.dim());
        if (size > resource_budget())
            throw ResourceError("braid computation: state space exceeds the resource budget");
    }
}

/// Crossing operators placed at adjacent slots, composed in word order
/// (the first letter acts first). Budget-guarded.
inline LinearOperator<RationalFn> braid_operator(const BraidWord& w, const BasisOrder& basis) {
    ensure_within_budget(w, basis);
    Op rho_laurent = rho_operator_form(basis);
    auto rho = to_rational(rho_laurent);
    std::optional<LinearOperator<RationalFn>> rho_inv;  // only inverted when needed
    auto op = LinearOperator<RationalFn>::identity(basis, w.strands);
    std::map<int, LinearOperator<RationalFn>> layer_cache;
    for (int l : w.letters) {
        auto it = layer_cache.find(l);
        if (it == layer_cache.end()) {
            if (l < 0 && !rho_inv) rho_inv = rho_inverse(rho_laurent, basis);
            const auto& cross = l > 0 ? rho : *rho_inv;
            LinearOperator<RationalFn> layer = cross;
            int i = std::abs(l);
            if (i - 1 > 0)
                layer = tensor(LinearOperator<RationalFn>::identity(basis, i - 1), layer);
            if (w.strands - i - 1 > 0)
                layer = tensor(layer,
                               LinearOperator<RationalFn>::identity(basis, w.strands - i - 1));
            it = layer_cache.emplace(l, std::move(layer)).first;
        }
        op = it->second.compose(op);
    }
    return op;
}

struct InvariantResult {
    RationalFn open_scalar;     // s, with T = s * id on the open strand
    RationalFn normalized_raw;  // s * lambda+^{-w+} * lambda-^{-w-}
    LaurentPoly value;          // the invariant, asserted Laurent in (p, t)
    bool p_free = false;        // whether p cancels (asserted at N=1)
};

/// Markov-trace invariant with the first strand left open:
///   T = ptr_{2..n}((id (x) mu^{(n-1)}) B_w), asserted to be s * id,
/// returning s * lambda+^{-w+} * lambda-^{-w-}.
inline InvariantResult knot_invariant(const BraidWord& w, const BasisOrder& basis,
                                      const Enhancement& enh) {
    if (!w.closure_is_knot())
        throw Error("knot_invariant: braid closure has more than one component");
    auto op = braid_operator(w, basis);
    // weight slots 2..n by mu, then trace them out
    const int n = w.strands;
    if (n > 1) {
        auto weighted = LinearOperator<RationalFn>::build(
            basis, n, n, [&](const BasisKey& k) {
                RationalFn s(1);
                for (int slot = 1; slot < n; ++slot) s *= enh.mu[k[slot]];
                return TensorElement<RationalFn>::basis(k).scaled(s);
            });
        op = weighted.compose(op);
        for (int slot = n - 1; slot >= 1; --slot) op = op.partial_trace(slot);
    }
    const int dim = basis.dim();
    RationalFn s = op.entry(BasisKey{Mask(0)}, BasisKey{Mask(0)});
    for (int i = 0; i < dim; ++i) {
        for (int ip = 0; ip < dim; ++ip) {
            RationalFn got = op.entry(BasisKey{Mask(ip)}, BasisKey{Mask(i)});
            RationalFn expect = i == ip ? s : RationalFn(0);
            if (got != expect)
                throw Error("knot_invariant: open-strand endomorphism is not scalar at (" +
                            std::to_string(ip) + "," + std::to_string(i) + "): got " +
                            got.to_string() + ", diagonal " + s.to_string());
        }
    }
    InvariantResult res;
    res.open_scalar = s;
    RationalFn norm = s;
    for (int k = 0; k < w.positive_count(); ++k) norm /= enh.lambda_plus;
    for (int k = 0; k < w.negative_count(); ++k) norm /= enh.lambda_minus;
    res.normalized_raw = norm;
    res.value = norm.as_laurent();
    res.p_free = !res.value.has_p();
    if (basis.n == 1 && !res.p_free)
        throw Error("knot_invariant: unexpected p-dependence at N=1: " + res.value.to_string());
    return res;
}

/// Normalizes a one-variable Alexander value by a unit +-t^k so that
/// Delta(t) = Delta(1/t) and Delta(1) = 1.
inline LaurentPoly normalize_alexander(const LaurentPoly& raw) {
    if (raw.is_zero()) throw Error("normalize_alexander: zero input");
    if (raw.has_p()) throw Error("normalize_alexander: input must be t-only");
    int lo = raw.min_t_exp(), hi = raw.max_t_exp();
    if ((lo + hi) % 2 != 0)
        throw Error("normalize_alexander: not symmetrizable by a monomial: " + raw.to_string());
    LaurentPoly shifted = raw.shifted(0, -(lo + hi) / 2);
    BigInt at_one = 0;
    for (const auto& m : shifted.terms()) at_one += m.coeff;
    if (at_one != 1 && at_one != -1)
        throw Error("normalize_alexander: value at t=1 is not a unit: " + raw.to_string());
    if (at_one == -1) shifted = -shifted;
    for (const auto& m : shifted.terms()) {
        bool found = false;
        for (const auto& mm : shifted.terms())
            if (mm.t_exp == -m.t_exp && mm.coeff == m.coeff) found = true;
        if (!found)
            throw Error("normalize_alexander: not palindromic: " + shifted.to_string());
    }
    return shifted;
}

}  // namespace lambdap
