#pragma once

#include "lambdap/laurent.hpp"

namespace lambdap {

/// (x;p)_n = prod_{i=0}^{n-1} (1 - x p^i).
inline LaurentPoly qpochhammer(const LaurentPoly& x, int n) {
    if (n < 0) throw Error("qpochhammer: n must be nonnegative");
    LaurentPoly r(1);
    for (int i = 0; i < n; ++i) r *= LaurentPoly(1) - x * LaurentPoly::p(i);
    return r;
}

/// (p;p)_n, the base factor of the q-factorial.
inline LaurentPoly poch_p(int n) { return qpochhammer(LaurentPoly::p(), n); }

/// [n]_p = 1 + p + ... + p^{n-1}.
inline LaurentPoly qint(int n) {
    if (n < 0) throw Error("qint: n must be nonnegative");
    LaurentPoly r;
    for (int i = 0; i < n; ++i) r += LaurentPoly::p(i);
    return r;
}

/// [n]_p^! = [1]_p [2]_p ... [n]_p.
inline LaurentPoly qfactorial(int n) {
    if (n < 0) throw Error("qfactorial: n must be nonnegative");
    LaurentPoly r(1);
    for (int i = 1; i <= n; ++i) r *= qint(i);
    return r;
}

/// Gaussian binomial coefficient, reduced to an honest polynomial in p by
/// exact division of (p;p)_n / ((p;p)_k (p;p)_{n-k}).
inline LaurentPoly qbinom(int n, int k) {
    if (k < 0 || n < 0 || k > n) throw Error("qbinom: need 0 <= k <= n");
    return exact_divide(poch_p(n), poch_p(k) * poch_p(n - k));
}

/// gamma_k = (-1)^k p^{k(k-1)/2}.
inline LaurentPoly gauss_gamma(int k) {
    if (k < 0) throw Error("gauss_gamma: k must be nonnegative");
    return LaurentPoly::monomial(k % 2 == 0 ? 1 : -1, k * (k - 1) / 2, 0);
}

}  // namespace lambdap
