#pragma once

#include <gmpxx.h>
#include <string>
#include <stdexcept>

namespace dissect {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Rational& q) {
    return q.get_str();
}

// Accepts "p", "p/q", with optional sign.
inline Rational rational_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) {
    return q.get_den() == 1;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace dissect
