#pragma once

#include "lambdap/laurent.hpp"

namespace lambdap {

/// Quotient of two Laurent polynomials, kept reduced: numerator and
/// denominator share no nonconstant factor, and the denominator has zero
/// Laurent offset with a positive coefficient on its canonically-first term.
/// Equality of normalized values is componentwise.
class RationalFn {
public:
    RationalFn() : num_(), den_(1) {}
    RationalFn(long long c) : num_(c), den_(1) {}
    RationalFn(const LaurentPoly& n) : num_(n), den_(1) {}
    RationalFn(LaurentPoly n, LaurentPoly d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_.is_zero()) throw Error("RationalFn: zero denominator");
        normalize();
    }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    /// True when the value lies in the Laurent ring. After normalization this
    /// means the denominator reduced to 1, but the check is kept structural.
    bool is_laurent() const { return LaurentPoly::divide_exact(num_, den_).has_value(); }
    /// Convert to a Laurent polynomial; requires exact divisibility.
    LaurentPoly as_laurent() const {
        auto q = LaurentPoly::divide_exact(num_, den_);
        if (!q) throw Error("RationalFn: value is not a Laurent polynomial: " + to_string());
        return *q;
    }

    friend RationalFn operator+(const RationalFn& a, const RationalFn& b) {
        return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFn operator-(const RationalFn& a) {
        RationalFn r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend RationalFn operator-(const RationalFn& a, const RationalFn& b) { return a + (-b); }
    friend RationalFn operator*(const RationalFn& a, const RationalFn& b) {
        return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFn operator/(const RationalFn& a, const RationalFn& b) {
        if (b.is_zero()) throw Error("RationalFn: division by zero");
        return RationalFn(a.num_ * b.den_, a.den_ * b.num_);
    }
    RationalFn& operator+=(const RationalFn& o) { return *this = *this + o; }
    RationalFn& operator-=(const RationalFn& o) { return *this = *this - o; }
    RationalFn& operator*=(const RationalFn& o) { return *this = *this * o; }
    RationalFn& operator/=(const RationalFn& o) { return *this = *this / o; }

    friend bool operator==(const RationalFn& a, const RationalFn& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFn& a, const RationalFn& b) { return !(a == b); }

    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
    }
    json to_json() const {
        if (den_.is_one()) return num_.to_json();
        return json{{"num", num_.to_json()}, {"den", den_.to_json()}};
    }

private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = LaurentPoly(1);
            return;
        }
        LaurentPoly g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = exact_divide(num_, g);
            den_ = exact_divide(den_, g);
        }
        // zero Laurent offset for the denominator: move the monomial unit to the numerator
        int dp = den_.min_p_exp(), dt = den_.min_t_exp();
        if (dp != 0 || dt != 0) {
            den_ = den_.shifted(-dp, -dt);
            num_ = num_.shifted(-dp, -dt);
        }
        if (den_.terms().front().coeff < 0) {
            den_ = -den_;
            num_ = -num_;
        }
    }

    LaurentPoly num_;
    LaurentPoly den_;
};

}  // namespace lambdap
