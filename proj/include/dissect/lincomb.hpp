#pragma once

#include "dissect/xpoly.hpp"

#include <map>

namespace dissect {

// Finite linear combinations over an ordered key type. No zero coefficients
// are ever stored.
template <class Key, class Coeff>
class LinearCombination {
public:
    using Terms = std::map<Key, Coeff>;

    LinearCombination() = default;

    void add(const Key& k, const Coeff& c) {
        if (coeff_is_zero(c)) return;
        auto [it, inserted] = terms_.emplace(k, c);
        if (!inserted) {
            it->second = it->second + c;
            if (coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    Coeff coeff(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Coeff{} : it->second;
    }

    LinearCombination operator+(const LinearCombination& o) const {
        LinearCombination r = *this;
        for (const auto& [k, c] : o.terms_) r.add(k, c);
        return r;
    }
    LinearCombination operator-(const LinearCombination& o) const {
        LinearCombination r = *this;
        for (const auto& [k, c] : o.terms_) r.add(k, Coeff{} - c);
        return r;
    }
    LinearCombination scaled(const Coeff& c) const {
        LinearCombination r;
        for (const auto& [k, v] : terms_) r.add(k, v * c);
        return r;
    }

    bool operator==(const LinearCombination& o) const { return terms_ == o.terms_; }
    bool operator!=(const LinearCombination& o) const { return !(*this == o); }

private:
    Terms terms_;
};

} // namespace dissect
