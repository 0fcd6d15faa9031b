#pragma once

#include "dissect/rational.hpp"

#include <string>
#include <vector>

namespace dissect {

// Polynomials in the coproduct parameter x, over Q. Degrees stay below the
// diagram degree, so a dense coefficient vector is plenty.
class XPoly {
public:
    XPoly() = default;
    static XPoly constant(Rational c) {
        XPoly p;
        if (c != 0) p.c_ = {std::move(c)};
        return p;
    }
    static XPoly x_pow(int k) {
        XPoly p;
        p.c_.assign(k + 1, Rational(0));
        p.c_[k] = 1;
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rational coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Rational(0);
    }

    XPoly operator+(const XPoly& o) const {
        XPoly r;
        r.c_.resize(std::max(c_.size(), o.c_.size()), Rational(0));
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
        r.trim();
        return r;
    }
    XPoly operator-() const {
        XPoly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    XPoly operator-(const XPoly& o) const { return *this + (-o); }
    XPoly operator*(const XPoly& o) const {
        XPoly r;
        if (is_zero() || o.is_zero()) return r;
        r.c_.assign(c_.size() + o.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
        r.trim();
        return r;
    }
    XPoly& operator+=(const XPoly& o) { *this = *this + o; return *this; }

    bool operator==(const XPoly& o) const { return c_ == o.c_; }
    bool operator!=(const XPoly& o) const { return !(*this == o); }

    Rational eval(const Rational& x) const {
        Rational v(0);
        for (size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
        return v;
    }

    std::string str() const {
        if (c_.empty()) return "0";
        std::string s;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            if (!s.empty() && c_[i] > 0) s += "+";
            if (i == 0) s += to_string(c_[i]);
            else {
                if (c_[i] == -1) s += "-";
                else if (c_[i] != 1) s += to_string(c_[i]) + "*";
                s += (i == 1) ? "x" : ("x^" + std::to_string(i));
            }
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_; // c_[k] = coefficient of x^k, trailing nonzero
};

inline bool coeff_is_zero(const Rational& r) { return r == 0; }
inline bool coeff_is_zero(const XPoly& p) { return p.is_zero(); }

} // namespace dissect
