#pragma once

#include "dissect/scalar.hpp"

#include <map>
#include <vector>

namespace dissect {

// The iterated-integral symbol I(a_0; a_1,...,a_n; a_{n+1}). Generic means
// all entries pairwise distinct (exact modes).
struct ItIntSymbol {
    Scalar a0;
    std::vector<Scalar> word;
    Scalar a_end;

    int weight() const { return static_cast<int>(word.size()); }
    std::vector<Scalar> entries() const {
        std::vector<Scalar> e{a0};
        e.insert(e.end(), word.begin(), word.end());
        e.push_back(a_end);
        return e;
    }
    bool is_generic() const {
        auto e = entries();
        for (size_t i = 0; i < e.size(); ++i)
            for (size_t j = i + 1; j < e.size(); ++j)
                if (e[i] == e[j]) return false;
        return true;
    }

    bool operator==(const ItIntSymbol& o) const {
        return a0 == o.a0 && word == o.word && a_end == o.a_end;
    }
    bool operator<(const ItIntSymbol& o) const {
        if (weight() != o.weight()) return weight() < o.weight();
        if (!(a0 == o.a0)) return a0 < o.a0;
        for (int i = 0; i < weight(); ++i)
            if (!(word[i] == o.word[i])) return word[i] < o.word[i];
        return a_end < o.a_end;
    }

    std::string str() const;
};

// Integer-linear combinations of symbols, the reduction output.
class FormalSum {
public:
    void add(const ItIntSymbol& s, long long c) {
        if (c == 0) return;
        auto [it, ins] = terms_.emplace(s, c);
        if (!ins) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    const std::map<ItIntSymbol, long long>& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }
    bool operator==(const FormalSum& o) const { return terms_ == o.terms_; }
    std::string str() const;

private:
    std::map<ItIntSymbol, long long> terms_;
};

// The J-polylogarithm symbol J(a_1..a_n; b) of the path-tree family.
struct JSymbol {
    std::vector<Scalar> word;
    Scalar b;

    int weight() const { return static_cast<int>(word.size()); }
    bool operator==(const JSymbol& o) const { return word == o.word && b == o.b; }
    bool operator<(const JSymbol& o) const {
        if (weight() != o.weight()) return weight() < o.weight();
        for (int i = 0; i < weight(); ++i)
            if (!(word[i] == o.word[i])) return word[i] < o.word[i];
        return b < o.b;
    }
    std::string str() const;
};

} // namespace dissect
