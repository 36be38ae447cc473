#pragma once

#include <map>

#include "lambdap/subsets.hpp"

namespace lambdap {

/// k-tuple of basis subsets, the key of the set-theoretic basis f_{E1,...,Ek}.
using BasisKey = std::vector<Mask>;

inline json key_to_json(const BasisKey& k) {
    json arr = json::array();
    for (Mask m : k) arr.push_back(mask_to_json(m));
    return arr;
}

inline std::string key_to_string(const BasisKey& k) {
    std::string s = "f(";
    for (size_t i = 0; i < k.size(); ++i) {
        if (i) s += ";";
        s += mask_to_string(k[i]);
    }
    return s + ")";
}

inline int key_degree(const BasisKey& k) {
    int d = 0;
    for (Mask m : k) d += card(m);
    return d;
}

/// Sparse linear combination of k-fold pure tensors with ring coefficients.
/// No zero coefficients are stored; all keys carry the declared arity.
template <class Ring>
class TensorElement {
public:
    explicit TensorElement(int arity = 1) : arity_(arity) {
        if (arity < 1) throw Error("TensorElement: arity must be >= 1");
    }
    static TensorElement basis(BasisKey key) {
        TensorElement e(static_cast<int>(key.size()));
        e.terms_.emplace(std::move(key), Ring(1));
        return e;
    }

    int arity() const { return arity_; }
    const std::map<BasisKey, Ring>& terms() const { return terms_; }
    // iterating the element directly keeps range-for over temporaries safe
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    void add_term(const BasisKey& key, const Ring& c) {
        if (static_cast<int>(key.size()) != arity_) throw Error("TensorElement: arity mismatch");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Ring coeff(const BasisKey& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Ring(0) : it->second;
    }

    TensorElement& operator+=(const TensorElement& o) {
        if (o.arity_ != arity_) throw Error("TensorElement: arity mismatch in +=");
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(const TensorElement& a) {
        TensorElement r(a.arity_);
        for (const auto& [k, c] : a.terms_) r.terms_.emplace(k, -c);
        return r;
    }
    friend TensorElement operator-(const TensorElement& a, const TensorElement& b) {
        return a + (-b);
    }
    TensorElement scaled(const Ring& s) const {
        TensorElement r(arity_);
        if (s.is_zero()) return r;
        for (const auto& [k, c] : terms_) {
            Ring v = c * s;
            if (!v.is_zero()) r.terms_.emplace(k, std::move(v));
        }
        return r;
    }
    friend bool operator==(const TensorElement& a, const TensorElement& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const TensorElement& a, const TensorElement& b) { return !(a == b); }

    /// Tensor product: concatenates keys, multiplies coefficients.
    friend TensorElement tensor(const TensorElement& a, const TensorElement& b) {
        TensorElement r(a.arity_ + b.arity_);
        for (const auto& [ka, ca] : a.terms_) {
            for (const auto& [kb, cb] : b.terms_) {
                BasisKey k = ka;
                k.insert(k.end(), kb.begin(), kb.end());
                r.add_term(k, ca * cb);
            }
        }
        return r;
    }

    /// Map coefficients into another ring (e.g. LaurentPoly -> RationalFn).
    template <class Other, class Fn>
    TensorElement<Other> map_coeffs(Fn fn) const {
        TensorElement<Other> r(arity_);
        for (const auto& [k, c] : terms_) r.add_term(k, fn(c));
        return r;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            if (!first) s += " + ";
            first = false;
            s += "(" + c.to_string() + ")*" + key_to_string(k);
        }
        return s;
    }
    json to_json() const {
        json arr = json::array();
        for (const auto& [k, c] : terms_)
            arr.push_back(json{{"coeff", c.to_json()}, {"basis", key_to_json(k)}});
        return arr;
    }

private:
    int arity_;
    std::map<BasisKey, Ring> terms_;
};

}  // namespace lambdap
