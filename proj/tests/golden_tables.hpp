#pragma once

// Golden expectation tables for the small-dimension R-matrix channel splits,
// shared by the unit suite and the acceptance binary.

#include <map>

#include "lambdap/rmatrix.hpp"

namespace golden {

using lambdap::LaurentPoly;
using lambdap::Mask;

inline LaurentPoly T(int k) { return LaurentPoly::t(k); }
inline LaurentPoly P(int k) { return LaurentPoly::p(k); }
/// One Pochhammer factor 1 - p^a t^b.
inline LaurentPoly F(int a, int b) { return LaurentPoly(1) - LaurentPoly::monomial(1, a, b); }

struct Action {
    int in_i, in_j;
    std::map<std::pair<int, int>, LaurentPoly> out;  // (out_i, out_j) -> coefficient
};

// --- dimension 2 -----------------------------------------------------------

inline std::vector<std::vector<int>> exponent_matrix_dim2() {
    return {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 0, 1}};
}

/// Reflection coefficients r_{i,j} (the (-t)^{[i]} prefactor not included).
inline std::vector<std::vector<LaurentPoly>> reflection_matrix_dim2() {
    LaurentPoly z;
    return {{z, F(0, 1), F(0, 1), F(0, 1) * F(1, 1)},
            {z, z, z, F(1, 1)},
            {z, F(1, 0), z, F(1, 1)},
            {z, z, z, z}};
}

inline std::vector<Action> annihilation_dim2() {
    return {
        {0, 3, {{{1, 2}, T(1) * F(0, 1)}, {{2, 1}, -P(1) * T(1) * F(0, 1)}}},
        {1, 2, {{{0, 3}, F(1, 1)}}},
        {2, 1, {{{0, 3}, -F(1, 1)}}},
    };
}

// --- dimension 3 -----------------------------------------------------------

inline std::vector<std::vector<int>> exponent_matrix_dim3() {
    return {{0, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 1, 1, 0, 1},
            {0, 1, 1, 0, 2, 1, 1, 2}, {0, 1, 0, 0, 1, 1, 0, 1}, {0, 1, 1, 0, 2, 1, 1, 2},
            {0, 2, 1, 0, 3, 2, 1, 3}, {0, 2, 1, 0, 3, 2, 1, 3}};
}

/// Reflection coefficients r_{i,j}; the stated prefactor is
/// (-t)^{[i]} p^{delta_{[i],2}} and is checked separately.
inline std::vector<std::vector<LaurentPoly>> reflection_matrix_dim3() {
    LaurentPoly z;
    auto t1 = F(0, 1);                    // (t)_1
    auto tp = F(1, 1);                    // (tp)_1
    auto p1 = F(1, 0);                    // (p)_1
    auto tp2 = F(2, 1);                   // (tp^2)_1
    auto t_p_2 = F(0, 1) * F(1, 1);       // (t;p)_2
    auto t_p_3 = t_p_2 * F(2, 1);         // (t;p)_3
    auto tp_p_2 = F(1, 1) * F(2, 1);      // (tp;p)_2
    auto p_t_2 = F(1, 0) * F(1, 1);       // (p;t)_2
    auto p2tp = (LaurentPoly(1) - P(2)) * F(1, 1);  // (p^2)_1 (tp)_1
    return {{z, t1, t1, t1, t_p_2, t_p_2, t_p_2, t_p_3},
            {z, z, z, z, tp, tp, z, tp_p_2},
            {z, p1, z, z, tp, p_t_2, tp, tp_p_2},
            {z, p1, p1, z, p2tp, tp, tp, tp_p_2},
            {z, z, z, z, z, z, z, tp2},
            {z, z, z, z, p1, z, z, tp2},
            {z, z, z, z, p1, p1, z, tp2},
            {z, z, z, z, z, z, z, z}};
}

inline std::vector<Action> decay_dim3() {
    auto d_pair = [](int i, int j) {
        // rho_d f_{0,1+i+j} = t (t)_1 (f_{i,j} - p f_{j,i})
        return Action{0, 1 + i + j,
                      {{{i, j}, T(1) * F(0, 1)}, {{j, i}, -P(1) * T(1) * F(0, 1)}}};
    };
    Action full{0, 7, {}};
    LaurentPoly a = T(1) * F(0, 1) * F(1, 1);  // t (t;p)_2
    LaurentPoly b = T(2) * F(0, 1);            // t^2 (t)_1
    full.out = {{{1, 6}, a},          {{2, 5}, -P(1) * a}, {{3, 4}, P(2) * a},
                {{4, 3}, b},          {{5, 2}, -P(1) * b}, {{6, 1}, P(2) * b}};
    return {d_pair(1, 2), d_pair(1, 3), d_pair(2, 3), full};
}

inline std::vector<Action> fusion_dim3() {
    std::vector<Action> out;
    auto pair_case = [&](int i, int j) {
        out.push_back({i, j, {{{0, 1 + i + j}, F(1, 1)}}});
        out.push_back({j, i, {{{0, 1 + i + j}, -F(1, 1)}}});
    };
    pair_case(1, 2);
    pair_case(1, 3);
    pair_case(2, 3);
    for (int i = 1; i <= 3; ++i)
        out.push_back({i, 7 - i, {{{0, 7}, (i % 2 ? LaurentPoly(1) : LaurentPoly(-1)) *
                                               F(1, 1) * F(2, 1)}}});
    for (int i = 4; i <= 6; ++i)
        out.push_back({i, 7 - i, {{{0, 7}, (i % 2 ? LaurentPoly(-1) : LaurentPoly(1)) *
                                               F(2, 1)}}});
    return out;
}

inline std::vector<Action> exchange_dim3() {
    auto tp = F(1, 1);
    auto p1 = F(1, 0);
    auto tp2 = F(2, 1);
    return {
        {1, 6, {{{3, 4}, T(1) * P(2) * tp}, {{2, 5}, -T(1) * P(1) * tp}}},
        {1, 7, {{{4, 5}, T(2) * P(1) * tp}, {{5, 4}, -T(2) * P(2) * tp}}},
        {2, 5, {{{6, 1}, T(2) * P(1) * p1}, {{1, 6}, -T(1) * tp}, {{3, 4}, -T(1) * P(2) * tp}}},
        {2, 7, {{{4, 6}, T(2) * tp}, {{6, 4}, -T(2) * P(2) * tp}}},
        {3, 4,
         {{{1, 6}, T(1) * tp},
          {{2, 5}, -T(1) * P(1) * tp},
          {{5, 2}, T(2) * p1},
          {{6, 1}, -T(2) * P(1) * p1}}},
        {3, 7, {{{5, 6}, T(2) * tp}, {{6, 5}, -T(2) * P(1) * tp}}},
        {4, 5, {{{1, 7}, T(1) * tp2}}},
        {4, 6, {{{2, 7}, T(1) * P(1) * tp2}}},
        {5, 2, {{{3, 4}, T(1) * P(1) * p1}}},
        {5, 4, {{{1, 7}, -T(1) * tp2}}},
        {5, 6, {{{3, 7}, T(1) * P(1) * tp2}}},
        {6, 1, {{{2, 5}, T(1) * p1}, {{3, 4}, -T(1) * P(1) * p1}}},
        {6, 4, {{{2, 7}, -T(1) * tp2}}},
        {6, 5, {{{3, 7}, -T(1) * P(1) * tp2}}},
    };
}

// --- comparison helpers ----------------------------------------------------

/// Collects the entries of one channel keyed by input pair.
inline std::map<std::pair<int, int>, std::map<std::pair<int, int>, LaurentPoly>>
channel_actions(const lambdap::ChannelReport& rep, lambdap::Channel ch) {
    std::map<std::pair<int, int>, std::map<std::pair<int, int>, LaurentPoly>> got;
    auto it = rep.channels.find(ch);
    if (it == rep.channels.end()) return got;
    for (const auto& e : it->second)
        got[{e.in_first, e.in_second}][{e.out_first, e.out_second}] = e.coeff;
    return got;
}

/// True when the channel's entries equal exactly the expected action list.
inline bool match_actions(const lambdap::ChannelReport& rep, lambdap::Channel ch,
                          const std::vector<Action>& expected, std::string* why = nullptr) {
    auto got = channel_actions(rep, ch);
    std::map<std::pair<int, int>, std::map<std::pair<int, int>, LaurentPoly>> want;
    for (const auto& a : expected) want[{a.in_i, a.in_j}] = a.out;
    if (got != want) {
        if (why) {
            for (const auto& [k, v] : want) {
                auto it = got.find(k);
                if (it == got.end()) {
                    *why = "missing action at f" + std::to_string(k.first) + "," +
                           std::to_string(k.second);
                    return false;
                }
                if (it->second != v) {
                    *why = "wrong action at f" + std::to_string(k.first) + "," +
                           std::to_string(k.second);
                    return false;
                }
            }
            for (const auto& [k, v] : got)
                if (!want.count(k))
                    *why = "unexpected action at f" + std::to_string(k.first) + "," +
                           std::to_string(k.second);
        }
        return false;
    }
    return true;
}

}  // namespace golden
