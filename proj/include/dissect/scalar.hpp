#pragma once

#include "dissect/rational.hpp"

#include <complex>
#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace dissect {

// Decoration values live in an abelian group: addition and negation are
// always defined within one mode, multiplication only where the mode is a
// ring/field (or for rational rescaling, which the linear algebra needs).
enum class ScalarMode { None, Rational, Gaussian, Float, Formal };

std::string mode_name(ScalarMode m);

class Scalar {
public:
    Scalar() : mode_(ScalarMode::None) {}

    static Scalar none() { return Scalar(); }
    static Scalar rational(Rational q);
    static Scalar integer(long v) { return rational(Rational(v)); }
    static Scalar gaussian(Rational re, Rational im);
    static Scalar complex_float(std::complex<double> z);
    static Scalar symbol(const std::string& name);
    static Scalar formal(std::vector<std::pair<std::string, Rational>> terms);
    static Scalar zero(ScalarMode m);

    ScalarMode mode() const { return mode_; }
    bool is_zero() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
    Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }

    // Defined when one side is rational, or both sides lie in the same
    // field mode (Gaussian, Float). Formal*Formal is an error.
    Scalar operator*(const Scalar& o) const;
    Scalar inverse() const; // Rational/Gaussian/Float only

    // Rescaling by an exact rational; valid in every mode except None
    // (and trivially valid there for 0).
    Scalar scaled(const Rational& r) const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    // Total order (mode rank first), used only for canonical encodings.
    bool operator<(const Scalar& o) const;

    std::complex<double> to_complex() const; // Rational/Gaussian/Float
    const Rational& rat() const;             // Rational mode
    std::pair<Rational, Rational> gauss() const;
    const std::vector<std::pair<std::string, Rational>>& formal_terms() const;

    // Replace each symbol by a concrete scalar (all of mode `target`);
    // integer/rational coefficients rescale the substituted values.
    Scalar substitute(const std::vector<std::pair<std::string, Scalar>>& values) const;

    std::string str() const;

private:
    ScalarMode mode_;
    Rational re_, im_;                // Rational (re_), Gaussian (re_, im_)
    std::complex<double> f_{0.0, 0.0};
    std::vector<std::pair<std::string, Rational>> terms_; // Formal, sorted, no zeros

    void normalize_formal();
    static void require_same_mode(const Scalar& a, const Scalar& b, const char* op);
};

} // namespace dissect
