#pragma once

#include "lambdap/parallel.hpp"
#include "lambdap/rational.hpp"
#include "lambdap/tensor.hpp"

namespace lambdap {

/// All arity-k basis tuples over {subsets of 1..N}, ascending lexicographic.
inline std::vector<BasisKey> all_keys(const BasisOrder& basis, int arity) {
    std::vector<BasisKey> out;
    const Mask top = basis.full();
    BasisKey cur(arity, 0);
    for (;;) {
        out.push_back(cur);
        int i = arity - 1;
        while (i >= 0 && cur[i] == top) cur[i--] = 0;
        if (i < 0) break;
        ++cur[i];
    }
    return out;
}

/// Sparse linear map between tensor powers, stored column-wise: a missing
/// column means the basis tuple maps to zero.
template <class Ring>
class LinearOperator {
public:
    LinearOperator(int domain_arity, int codomain_arity)
        : dom_(domain_arity), cod_(codomain_arity) {
        if (domain_arity < 1 || codomain_arity < 1) throw Error("LinearOperator: arity >= 1");
    }

    int domain_arity() const { return dom_; }
    int codomain_arity() const { return cod_; }
    const std::map<BasisKey, TensorElement<Ring>>& columns() const { return cols_; }

    void set_column(const BasisKey& key, TensorElement<Ring> image) {
        if (static_cast<int>(key.size()) != dom_) throw Error("LinearOperator: domain arity");
        if (image.arity() != cod_) throw Error("LinearOperator: codomain arity");
        if (image.is_zero())
            cols_.erase(key);
        else
            cols_.insert_or_assign(key, std::move(image));
    }
    void add_to_column(const BasisKey& key, const TensorElement<Ring>& image) {
        if (image.is_zero()) return;
        auto it = cols_.find(key);
        if (it == cols_.end()) {
            set_column(key, image);
        } else {
            it->second += image;
            if (it->second.is_zero()) cols_.erase(it);
        }
    }

    TensorElement<Ring> apply(const BasisKey& key) const {
        auto it = cols_.find(key);
        return it == cols_.end() ? TensorElement<Ring>(cod_) : it->second;
    }
    TensorElement<Ring> apply(const TensorElement<Ring>& x) const {
        if (x.arity() != dom_) throw Error("LinearOperator: apply arity mismatch");
        TensorElement<Ring> out(cod_);
        for (const auto& [k, c] : x.terms()) out += apply(k).scaled(c);
        return out;
    }

    /// Entry <out_key | this | in_key>.
    Ring entry(const BasisKey& out_key, const BasisKey& in_key) const {
        return apply(in_key).coeff(out_key);
    }

    static LinearOperator identity(const BasisOrder& basis, int arity) {
        LinearOperator op(arity, arity);
        for (auto& k : all_keys(basis, arity)) op.cols_.emplace(k, TensorElement<Ring>::basis(k));
        return op;
    }
    static LinearOperator zero(int domain_arity, int codomain_arity) {
        return LinearOperator(domain_arity, codomain_arity);
    }

    /// Builds a total operator from a per-key image function, fanning out
    /// across workers; the merge is in key order regardless of worker count.
    template <class Fn>
    static LinearOperator build(const BasisOrder& basis, int domain_arity, int codomain_arity,
                                Fn fn) {
        LinearOperator op(domain_arity, codomain_arity);
        auto keys = all_keys(basis, domain_arity);
        std::vector<TensorElement<Ring>> images(keys.size(), TensorElement<Ring>(codomain_arity));
        parallel_for(keys.size(), [&](size_t i) { images[i] = fn(keys[i]); });
        for (size_t i = 0; i < keys.size(); ++i)
            if (!images[i].is_zero()) op.cols_.emplace(keys[i], std::move(images[i]));
        return op;
    }

    /// this after inner.
    LinearOperator compose(const LinearOperator& inner) const {
        if (inner.cod_ != dom_) throw Error("LinearOperator: compose arity mismatch");
        LinearOperator op(inner.dom_, cod_);
        std::vector<const BasisKey*> keys;
        keys.reserve(inner.cols_.size());
        for (const auto& [k, img] : inner.cols_) keys.push_back(&k);
        std::vector<TensorElement<Ring>> images(keys.size(), TensorElement<Ring>(cod_));
        parallel_for(keys.size(), [&](size_t i) { images[i] = apply(inner.cols_.at(*keys[i])); });
        for (size_t i = 0; i < keys.size(); ++i)
            if (!images[i].is_zero()) op.cols_.emplace(*keys[i], std::move(images[i]));
        return op;
    }

    friend LinearOperator tensor(const LinearOperator& a, const LinearOperator& b) {
        LinearOperator op(a.dom_ + b.dom_, a.cod_ + b.cod_);
        for (const auto& [ka, ia] : a.cols_) {
            for (const auto& [kb, ib] : b.cols_) {
                BasisKey k = ka;
                k.insert(k.end(), kb.begin(), kb.end());
                op.cols_.emplace(std::move(k), tensor(ia, ib));
            }
        }
        return op;
    }

    LinearOperator& operator+=(const LinearOperator& o) {
        if (o.dom_ != dom_ || o.cod_ != cod_) throw Error("LinearOperator: sum arity mismatch");
        for (const auto& [k, img] : o.cols_) add_to_column(k, img);
        return *this;
    }
    friend LinearOperator operator+(LinearOperator a, const LinearOperator& b) { return a += b; }
    friend LinearOperator operator-(const LinearOperator& a, const LinearOperator& b) {
        return a + b.scaled(Ring(-1));
    }
    LinearOperator scaled(const Ring& s) const {
        LinearOperator op(dom_, cod_);
        if (s.is_zero()) return op;
        for (const auto& [k, img] : cols_) {
            auto v = img.scaled(s);
            if (!v.is_zero()) op.cols_.emplace(k, std::move(v));
        }
        return op;
    }

    bool is_zero() const { return cols_.empty(); }
    friend bool operator==(const LinearOperator& a, const LinearOperator& b) {
        return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.cols_ == b.cols_;
    }
    friend bool operator!=(const LinearOperator& a, const LinearOperator& b) { return !(a == b); }

    /// First differing column between two operators, for counterexamples.
    static std::optional<BasisKey> first_difference(const LinearOperator& a,
                                                    const LinearOperator& b) {
        for (const auto& [k, img] : a.cols_) {
            if (b.apply(k) != img) return k;
        }
        for (const auto& [k, img] : b.cols_) {
            if (a.apply(k) != img) return k;
        }
        return std::nullopt;
    }

    /// Partial trace over one tensor slot (0-based); domain and codomain
    /// arities must match.
    LinearOperator partial_trace(int slot) const {
        if (dom_ != cod_) throw Error("partial_trace: needs equal arities");
        if (dom_ < 2) throw Error("partial_trace: needs arity >= 2");
        if (slot < 0 || slot >= dom_) throw Error("partial_trace: bad slot");
        LinearOperator op(dom_ - 1, cod_ - 1);
        for (const auto& [k, img] : cols_) {
            Mask traced = k[slot];
            BasisKey kin = k;
            kin.erase(kin.begin() + slot);
            TensorElement<Ring> acc(cod_ - 1);
            for (const auto& [ko, c] : img.terms()) {
                if (ko[slot] != traced) continue;
                BasisKey kout = ko;
                kout.erase(kout.begin() + slot);
                acc.add_term(kout, c);
            }
            op.add_to_column(kin, acc);
        }
        return op;
    }

    template <class Other, class Fn>
    LinearOperator<Other> map_coeffs(Fn fn) const {
        LinearOperator<Other> op(dom_, cod_);
        for (const auto& [k, img] : cols_)
            op.set_column(k, img.template map_coeffs<Other>(fn));
        return op;
    }

    /// Operator JSON dump; entries sorted by input key.
    json to_json() const {
        json entries = json::array();
        for (const auto& [k, img] : cols_)
            entries.push_back(json{{"in", key_to_json(k)}, {"out", img.to_json()}});
        return json{{"domain_arity", dom_}, {"entries", entries}};
    }

private:
    int dom_;
    int cod_;
    std::map<BasisKey, TensorElement<Ring>> cols_;
};

/// Lift a Laurent-coefficient operator into the fraction field.
template <class Ring>
LinearOperator<RationalFn> to_rational(const LinearOperator<Ring>& op) {
    return op.template map_coeffs<RationalFn>([](const Ring& c) { return RationalFn(c); });
}

}  // namespace lambdap
