#pragma once

#include <bit>
#include <cstdint>

#include "lambdap/laurent.hpp"

namespace lambdap {

/// Subset of the ordered basis {1..N}, bit-encoded: bit i-1 <-> element i.
using Mask = std::uint32_t;

constexpr int kMaxBasis = 16;

/// Dimension of the underlying vector space, 1 <= n <= 16.
struct BasisOrder {
    int n;
    explicit BasisOrder(int dim) : n(dim) {
        if (dim < 1 || dim > kMaxBasis) throw Error("BasisOrder: need 1 <= N <= 16");
    }
    Mask full() const { return static_cast<Mask>((1u << n) - 1); }
    int dim() const { return 1 << n; }  // number of subsets = dim of the algebra
};

inline int card(Mask a) { return std::popcount(a); }

/// theta_{A,B} = #{(a,b) in A x B : a > b}.
inline int theta(Mask a, Mask b) {
    int acc = 0;
    Mask rest = a;
    while (rest) {
        int bit = std::countr_zero(rest);
        rest &= rest - 1;
        acc += std::popcount(b & ((Mask(1) << bit) - 1));
    }
    return acc;
}

/// All k-element subsets of e, in increasing bitmask order.
inline std::vector<Mask> k_subsets(Mask e, int k) {
    std::vector<Mask> out;
    if (k < 0 || k > card(e)) return out;
    std::vector<int> bits;
    for (Mask rest = e; rest;) {
        int b = std::countr_zero(rest);
        rest &= rest - 1;
        bits.push_back(b);
    }
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    const int n = static_cast<int>(bits.size());
    while (true) {
        Mask m = 0;
        for (int i : idx) m |= Mask(1) << bits[i];
        out.push_back(m);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// All subsets of e, in increasing bitmask order.
inline std::vector<Mask> all_subsets(Mask e) {
    std::vector<Mask> out;
    Mask s = 0;
    while (true) {
        out.push_back(s);
        if (s == e) break;
        s = (s - e) & e;  // next submask in increasing order
    }
    return out;
}

/// alpha_{G,H} = prod over singletons {a} of G of (p^{theta_{a,H} - theta_{a,G}} - 1).
/// Empty G yields 1. Callers keep G and H disjoint.
inline LaurentPoly alpha(Mask g, Mask h) {
    LaurentPoly r(1);
    Mask rest = g;
    while (rest) {
        int bit = std::countr_zero(rest);
        rest &= rest - 1;
        Mask a = Mask(1) << bit;
        r *= LaurentPoly::p(theta(a, h) - theta(a, g)) - LaurentPoly(1);
        if (r.is_zero()) return r;
    }
    return r;
}

/// Exact nonvanishing test for alpha: every factor p^{theta_{a,H}-theta_{a,G}} - 1
/// is nonzero, i.e. theta_{a,H} != theta_{a,G} for every a in G. This implies
/// |H| >= |G|: writing d_i = theta_{g_i,H} - (i-1) over the increasing
/// enumeration of G, d_1 >= 0, consecutive d drop by at most one, and
/// d_{|G|} <= |H| - |G| + 1, so a nonpositive tail forces some d_i = 0.
inline bool alpha_nonvanishing(Mask g, Mask h) {
    Mask rest = g;
    while (rest) {
        int bit = std::countr_zero(rest);
        rest &= rest - 1;
        Mask a = Mask(1) << bit;
        if (theta(a, h) == theta(a, g)) return false;
    }
    return true;
}

/// Sufficient condition from the ladder picture: theta_{.,H} on the singletons
/// of G injective with image in the positive integers. Strictly weaker than
/// alpha_nonvanishing (e.g. G = {3,4}, H = {1,2} has nonzero alpha with theta
/// values (2,2)).
inline bool alpha_injectivity_condition(Mask g, Mask h) {
    if (card(h) < card(g)) return false;
    std::vector<int> seen;
    Mask rest = g;
    while (rest) {
        int bit = std::countr_zero(rest);
        rest &= rest - 1;
        int v = theta(Mask(1) << bit, h);
        if (v <= 0) return false;
        for (int s : seen)
            if (s == v) return false;
        seen.push_back(v);
    }
    return true;
}

/// JSON subset form: strictly increasing array of elements, [] for the empty set.
inline json mask_to_json(Mask m) {
    json arr = json::array();
    for (int i = 0; i < kMaxBasis; ++i)
        if (m & (Mask(1) << i)) arr.push_back(i + 1);
    return arr;
}

inline std::string mask_to_string(Mask m) {
    std::string s = "{";
    bool first = true;
    for (int i = 0; i < kMaxBasis; ++i) {
        if (m & (Mask(1) << i)) {
            if (!first) s += ",";
            s += std::to_string(i + 1);
            first = false;
        }
    }
    return s + "}";
}

}  // namespace lambdap
