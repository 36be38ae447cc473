#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include <nlohmann/json.hpp>

namespace lambdap {

using BigInt = boost::multiprecision::cpp_int;
using json = nlohmann::json;

/// Error type for all contract violations in this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact Laurent polynomial in the two formal variables p and t over Z.
///
/// Canonical form: terms sorted ascending-lexicographically by
/// (p_exponent, t_exponent), no zero coefficients, no duplicate exponent
/// pairs. Equal polynomials have identical term lists.
class LaurentPoly {
public:
    struct Term {
        BigInt coeff;
        int p_exp = 0;
        int t_exp = 0;
    };

    LaurentPoly() = default;
    LaurentPoly(long long c) {
        if (c != 0) terms_.push_back({BigInt(c), 0, 0});
    }
    LaurentPoly(const BigInt& c) {
        if (c != 0) terms_.push_back({c, 0, 0});
    }

    static LaurentPoly monomial(BigInt c, int p_exp, int t_exp) {
        LaurentPoly r;
        if (c != 0) r.terms_.push_back({std::move(c), p_exp, t_exp});
        return r;
    }
    static LaurentPoly p(int exp = 1) { return monomial(1, exp, 0); }
    static LaurentPoly t(int exp = 1) { return monomial(1, 0, exp); }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_[0].coeff == 1 && terms_[0].p_exp == 0 &&
               terms_[0].t_exp == 0;
    }
    /// True when the polynomial is a single term +-p^a t^b (a unit of the ring).
    bool is_unit_monomial() const {
        return terms_.size() == 1 && (terms_[0].coeff == 1 || terms_[0].coeff == -1);
    }
    bool is_monomial() const { return terms_.size() == 1; }

    bool has_p() const {
        for (const auto& m : terms_)
            if (m.p_exp != 0) return true;
        return false;
    }
    bool has_t() const {
        for (const auto& m : terms_)
            if (m.t_exp != 0) return true;
        return false;
    }

    int min_p_exp() const { return min_exp(&Term::p_exp); }
    int min_t_exp() const { return min_exp(&Term::t_exp); }
    int max_p_exp() const { return max_exp(&Term::p_exp); }
    int max_t_exp() const { return max_exp(&Term::t_exp); }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        auto ia = a.terms_.begin(), ib = b.terms_.begin();
        while (ia != a.terms_.end() && ib != b.terms_.end()) {
            int c = cmp_key(*ia, *ib);
            if (c < 0) {
                r.terms_.push_back(*ia++);
            } else if (c > 0) {
                r.terms_.push_back(*ib++);
            } else {
                BigInt s = ia->coeff + ib->coeff;
                if (s != 0) r.terms_.push_back({std::move(s), ia->p_exp, ia->t_exp});
                ++ia;
                ++ib;
            }
        }
        r.terms_.insert(r.terms_.end(), ia, a.terms_.end());
        r.terms_.insert(r.terms_.end(), ib, b.terms_.end());
        return r;
    }
    friend LaurentPoly operator-(const LaurentPoly& a) {
        LaurentPoly r = a;
        for (auto& m : r.terms_) m.coeff = -m.coeff;
        return r;
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        // accumulate into a sorted merge; inputs are small in practice
        LaurentPoly r;
        for (const auto& mb : b.terms_) {
            LaurentPoly shifted;
            shifted.terms_.reserve(a.terms_.size());
            for (const auto& ma : a.terms_)
                shifted.terms_.push_back(
                    {ma.coeff * mb.coeff, ma.p_exp + mb.p_exp, ma.t_exp + mb.t_exp});
            r = r + shifted;
        }
        return r;
    }
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (size_t i = 0; i < a.terms_.size(); ++i) {
            if (a.terms_[i].p_exp != b.terms_[i].p_exp ||
                a.terms_[i].t_exp != b.terms_[i].t_exp || a.terms_[i].coeff != b.terms_[i].coeff)
                return false;
        }
        return true;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    /// Total order compatible with canonical form; used for deterministic containers.
    friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
        size_t n = std::min(a.terms_.size(), b.terms_.size());
        for (size_t i = 0; i < n; ++i) {
            const auto &x = a.terms_[i], &y = b.terms_[i];
            if (x.p_exp != y.p_exp) return x.p_exp < y.p_exp;
            if (x.t_exp != y.t_exp) return x.t_exp < y.t_exp;
            if (x.coeff != y.coeff) return x.coeff < y.coeff;
        }
        return a.terms_.size() < b.terms_.size();
    }

    LaurentPoly shifted(int dp, int dt) const {
        LaurentPoly r = *this;
        for (auto& m : r.terms_) {
            m.p_exp += dp;
            m.t_exp += dt;
        }
        return r;
    }

    /// Substitute t := 1 (collapses the t variable).
    LaurentPoly substitute_t_one() const {
        LaurentPoly r;
        for (const auto& m : terms_) r += monomial(m.coeff, m.p_exp, 0);
        return r;
    }
    /// Substitute p := 1.
    LaurentPoly substitute_p_one() const {
        LaurentPoly r;
        for (const auto& m : terms_) r += monomial(m.coeff, 0, m.t_exp);
        return r;
    }
    /// Evaluate at integer points, for randomized cross-checks.
    BigInt eval(const BigInt& pv, const BigInt& tv) const {
        BigInt acc = 0;
        for (const auto& m : terms_) acc += m.coeff * int_pow(pv, m.p_exp) * int_pow(tv, m.t_exp);
        return acc;
    }

    /// Exact division: returns q with q*b == a, or nullopt if b does not divide a.
    static std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
        if (b.is_zero()) return std::nullopt;
        if (a.is_zero()) return LaurentPoly();
        // shift so both are honest polynomials; the shift is a unit
        int ap = a.min_p_exp(), at = a.min_t_exp();
        int bp = b.min_p_exp(), bt = b.min_t_exp();
        LaurentPoly r = a.shifted(-ap, -at);
        LaurentPoly d = b.shifted(-bp, -bt);
        LaurentPoly q;
        const Term& lead_d = d.terms_.back();  // max in lex order
        while (!r.is_zero()) {
            const Term& lead_r = r.terms_.back();
            if (lead_r.p_exp < lead_d.p_exp || lead_r.t_exp < lead_d.t_exp) return std::nullopt;
            if (lead_r.coeff % lead_d.coeff != 0) return std::nullopt;
            LaurentPoly m = monomial(lead_r.coeff / lead_d.coeff, lead_r.p_exp - lead_d.p_exp,
                                     lead_r.t_exp - lead_d.t_exp);
            q += m;
            r -= m * d;
            if (!r.is_zero() && cmp_key(r.terms_.back(), lead_r) >= 0) return std::nullopt;
        }
        return q.shifted(ap - bp, at - bt);
    }

    /// Canonical text form: terms joined by " + "/" - ", each "c*p^a*t^b" with
    /// unit parts omitted, in canonical ascending order.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& m : terms_) {
            bool neg = m.coeff < 0;
            BigInt mag = neg ? BigInt(-m.coeff) : m.coeff;
            if (first) {
                if (neg) out += "-";
                first = false;
            } else {
                out += neg ? " - " : " + ";
            }
            std::string factors;
            if (m.p_exp != 0) {
                factors += "p";
                if (m.p_exp != 1) factors += "^" + std::to_string(m.p_exp);
            }
            if (m.t_exp != 0) {
                if (!factors.empty()) factors += "*";
                factors += "t";
                if (m.t_exp != 1) factors += "^" + std::to_string(m.t_exp);
            }
            if (factors.empty()) {
                out += mag.str();
            } else {
                if (mag != 1) out += mag.str() + "*";
                out += factors;
            }
        }
        return out;
    }

    /// JSON form: sorted array of [c, a, b] triples.
    json to_json() const {
        json arr = json::array();
        for (const auto& m : terms_) {
            json c;
            if (m.coeff >= std::numeric_limits<std::int64_t>::min() &&
                m.coeff <= std::numeric_limits<std::int64_t>::max())
                c = static_cast<std::int64_t>(m.coeff);
            else
                c = m.coeff.str();
            arr.push_back(json::array({c, m.p_exp, m.t_exp}));
        }
        return arr;
    }

private:
    static int cmp_key(const Term& x, const Term& y) {
        if (x.p_exp != y.p_exp) return x.p_exp < y.p_exp ? -1 : 1;
        if (x.t_exp != y.t_exp) return x.t_exp < y.t_exp ? -1 : 1;
        return 0;
    }
    int min_exp(int Term::*f) const {
        if (terms_.empty()) return 0;
        int v = terms_[0].*f;
        for (const auto& m : terms_) v = std::min(v, m.*f);
        return v;
    }
    int max_exp(int Term::*f) const {
        if (terms_.empty()) return 0;
        int v = terms_[0].*f;
        for (const auto& m : terms_) v = std::max(v, m.*f);
        return v;
    }
    static BigInt int_pow(const BigInt& b, int e) {
        if (e < 0) throw Error("integer evaluation needs nonnegative exponents");
        BigInt r = 1, x = b;
        for (int k = e; k > 0; k >>= 1) {
            if (k & 1) r *= x;
            if (k > 1) x *= x;
        }
        return r;
    }

    std::vector<Term> terms_;
};

inline LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
    auto q = LaurentPoly::divide_exact(a, b);
    if (!q) throw Error("exact_divide: " + b.to_string() + " does not divide " + a.to_string());
    return *q;
}

namespace detail {

// Univariate polynomials with BigInt coefficients, dense low-to-high. Used
// only inside the bivariate GCD.
using UPoly = std::vector<BigInt>;

inline void utrim(UPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}
inline UPoly umul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    utrim(r);
    return r;
}
inline UPoly uscale(const UPoly& a, const BigInt& c) {
    if (c == 0) return {};
    UPoly r = a;
    for (auto& x : r) x *= c;
    return r;
}
inline UPoly usub(const UPoly& a, const UPoly& b) {
    UPoly r = a;
    if (b.size() > r.size()) r.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    utrim(r);
    return r;
}
inline BigInt ucontent(const UPoly& a) {
    BigInt g = 0;
    for (const auto& c : a) g = boost::multiprecision::gcd(g, c);
    return g;
}
inline UPoly uprimitive(const UPoly& a) {
    BigInt g = ucontent(a);
    if (g == 0) return {};
    if (a.back() < 0) g = -g;
    UPoly r = a;
    for (auto& c : r) c /= g;
    return r;
}
inline UPoly usign_normalized(UPoly a) {
    if (!a.empty() && a.back() < 0)
        for (auto& c : a) c = -c;
    return a;
}

inline UPoly ugcd(UPoly a, UPoly b) {
    utrim(a);
    utrim(b);
    // gcd with zero keeps the full content of the other argument
    if (a.empty()) return usign_normalized(std::move(b));
    if (b.empty()) return usign_normalized(std::move(a));
    BigInt cont = boost::multiprecision::gcd(ucontent(a), ucontent(b));
    a = uprimitive(a);
    b = uprimitive(b);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        // primitive PRS: pseudo-divide then reduce to primitive part
        UPoly r = a;
        const BigInt lb = b.back();
        while (r.size() >= b.size()) {
            BigInt lr = r.back();
            size_t shift = r.size() - b.size();
            for (auto& c : r) c *= lb;
            for (size_t i = 0; i < b.size(); ++i) r[i + shift] -= lr * b[i];
            utrim(r);
        }
        a = b;
        b = uprimitive(r);
    }
    UPoly g = uprimitive(a);
    return umul(g, UPoly{cont});
}

}  // namespace detail

/// GCD in Z[p^{+-1}, t^{+-1}]: monomial-content extraction, then primitive-part
/// GCD in Z[p,t] viewed as (Z[t])[p]. Result is normalized with zero Laurent
/// offset and positive coefficient on the canonically-first term.
inline LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

namespace detail {

// bivariate polynomial as vector of (p_exp -> UPoly in t), dense in p
using BPoly = std::vector<UPoly>;

inline void btrim(BPoly& a) {
    while (!a.empty() && a.back().empty()) a.pop_back();
}
inline BPoly to_bpoly(const LaurentPoly& f) {
    BPoly r;
    for (const auto& m : f.terms()) {
        if (m.p_exp >= static_cast<int>(r.size())) r.resize(m.p_exp + 1);
        auto& u = r[m.p_exp];
        if (m.t_exp >= static_cast<int>(u.size())) u.resize(m.t_exp + 1);
        u[m.t_exp] += m.coeff;
    }
    for (auto& u : r) utrim(u);
    btrim(r);
    return r;
}
inline LaurentPoly from_bpoly(const BPoly& f) {
    LaurentPoly r;
    for (size_t i = 0; i < f.size(); ++i)
        for (size_t j = 0; j < f[i].size(); ++j)
            if (f[i][j] != 0)
                r += LaurentPoly::monomial(f[i][j], static_cast<int>(i), static_cast<int>(j));
    return r;
}
inline UPoly bcontent(const BPoly& a) {
    UPoly g;
    for (const auto& u : a) g = ugcd(g, u);
    return g;
}
// exact division in Z[t]: q*b == a required (used only where it holds)
inline UPoly udiv_exact(const UPoly& a, const UPoly& b) {
    UPoly r = a, q;
    utrim(r);
    if (r.empty()) return {};
    if (b.empty() || r.size() < b.size()) throw Error("internal gcd error: inexact division in Z[t]");
    q.assign(r.size() - b.size() + 1, BigInt(0));
    while (!r.empty() && r.size() >= b.size()) {
        if (r.back() % b.back() != 0) throw Error("internal gcd error: inexact division in Z[t]");
        BigInt c = r.back() / b.back();
        size_t shift = r.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) r[i + shift] -= c * b[i];
        utrim(r);
    }
    if (!r.empty()) throw Error("internal gcd error: inexact division in Z[t]");
    utrim(q);
    return q;
}
inline BPoly bprimitive(const BPoly& a, UPoly* content_out = nullptr) {
    UPoly c = bcontent(a);
    if (content_out) *content_out = c;
    if (c.empty()) return {};
    BPoly r;
    r.reserve(a.size());
    for (const auto& u : a) r.push_back(u.empty() ? UPoly{} : udiv_exact(u, c));
    return r;
}

inline BPoly bgcd(BPoly a, BPoly b) {
    btrim(a);
    btrim(b);
    if (a.empty()) return b;
    if (b.empty()) return a;
    UPoly ca, cb;
    a = bprimitive(a, &ca);
    b = bprimitive(b, &cb);
    UPoly cont = ugcd(ca, cb);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        // pseudo-remainder in (Z[t])[p], primitive PRS
        BPoly r = a;
        const UPoly lb = b.back();
        while (r.size() >= b.size()) {
            UPoly lr = r.back();
            size_t shift = r.size() - b.size();
            for (auto& u : r) u = umul(u, lb);
            for (size_t i = 0; i < b.size(); ++i) r[i + shift] = usub(r[i + shift], umul(lr, b[i]));
            btrim(r);
        }
        a = b;
        b = bprimitive(r);
    }
    // restore content
    BPoly g;
    g.reserve(a.size());
    for (const auto& u : a) g.push_back(umul(u, cont));
    return g;
}

}  // namespace detail

inline LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) return LaurentPoly();
    auto canonical = [](const LaurentPoly& f) {
        LaurentPoly s = f.shifted(-f.min_p_exp(), -f.min_t_exp());
        if (s.terms().front().coeff < 0) s = -s;
        return s;
    };
    if (a.is_zero()) return canonical(b);
    if (b.is_zero()) return canonical(a);
    LaurentPoly as = a.shifted(-a.min_p_exp(), -a.min_t_exp());
    LaurentPoly bs = b.shifted(-b.min_p_exp(), -b.min_t_exp());
    LaurentPoly g = detail::from_bpoly(detail::bgcd(detail::to_bpoly(as), detail::to_bpoly(bs)));
    return canonical(g);
}

}  // namespace lambdap
