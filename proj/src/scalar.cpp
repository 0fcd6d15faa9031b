#include "dissect/scalar.hpp"

#include <algorithm>
#include <sstream>

namespace dissect {

std::string mode_name(ScalarMode m) {
    switch (m) {
        case ScalarMode::None: return "none";
        case ScalarMode::Rational: return "rational";
        case ScalarMode::Gaussian: return "gaussian";
        case ScalarMode::Float: return "float";
        case ScalarMode::Formal: return "formal";
    }
    return "?";
}

Scalar Scalar::rational(Rational q) {
    Scalar s;
    s.mode_ = ScalarMode::Rational;
    s.re_ = std::move(q);
    return s;
}

Scalar Scalar::gaussian(Rational re, Rational im) {
    Scalar s;
    s.mode_ = ScalarMode::Gaussian;
    s.re_ = std::move(re);
    s.im_ = std::move(im);
    return s;
}

Scalar Scalar::complex_float(std::complex<double> z) {
    Scalar s;
    s.mode_ = ScalarMode::Float;
    s.f_ = z;
    return s;
}

Scalar Scalar::symbol(const std::string& name) {
    Scalar s;
    s.mode_ = ScalarMode::Formal;
    s.terms_ = {{name, Rational(1)}};
    return s;
}

Scalar Scalar::formal(std::vector<std::pair<std::string, Rational>> terms) {
    Scalar s;
    s.mode_ = ScalarMode::Formal;
    s.terms_ = std::move(terms);
    s.normalize_formal();
    return s;
}

Scalar Scalar::zero(ScalarMode m) {
    Scalar s;
    s.mode_ = m;
    return s;
}

void Scalar::normalize_formal() {
    std::sort(terms_.begin(), terms_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<std::string, Rational>> out;
    for (auto& t : terms_) {
        if (!out.empty() && out.back().first == t.first)
            out.back().second += t.second;
        else
            out.push_back(t);
        if (!out.empty() && out.back().second == 0)
            out.pop_back();
    }
    terms_ = std::move(out);
}

bool Scalar::is_zero() const {
    switch (mode_) {
        case ScalarMode::None: return true;
        case ScalarMode::Rational: return re_ == 0;
        case ScalarMode::Gaussian: return re_ == 0 && im_ == 0;
        case ScalarMode::Float: return f_ == std::complex<double>(0.0, 0.0);
        case ScalarMode::Formal: return terms_.empty();
    }
    return true;
}

void Scalar::require_same_mode(const Scalar& a, const Scalar& b, const char* op) {
    if (a.mode_ != b.mode_)
        throw std::invalid_argument(std::string("scalar mode mismatch in ") + op + ": " +
                                    mode_name(a.mode_) + " vs " + mode_name(b.mode_));
}

namespace {
// Q embeds in Q(i); arithmetic and comparisons treat a rational as a
// Gaussian rational with zero imaginary part.
bool exact_complex_pair(ScalarMode a, ScalarMode b) {
    auto ok = [](ScalarMode m) {
        return m == ScalarMode::Rational || m == ScalarMode::Gaussian;
    };
    return a != b && ok(a) && ok(b);
}
} // namespace

Scalar Scalar::operator-() const {
    Scalar s = *this;
    switch (mode_) {
        case ScalarMode::None: break;
        case ScalarMode::Rational: s.re_ = -re_; break;
        case ScalarMode::Gaussian: s.re_ = -re_; s.im_ = -im_; break;
        case ScalarMode::Float: s.f_ = -f_; break;
        case ScalarMode::Formal:
            for (auto& t : s.terms_) t.second = -t.second;
            break;
    }
    return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (exact_complex_pair(mode_, o.mode_))
        return gaussian(re_ + o.re_, im_ + o.im_);
    require_same_mode(*this, o, "+");
    Scalar s = *this;
    switch (mode_) {
        case ScalarMode::None: break;
        case ScalarMode::Rational: s.re_ += o.re_; break;
        case ScalarMode::Gaussian: s.re_ += o.re_; s.im_ += o.im_; break;
        case ScalarMode::Float: s.f_ += o.f_; break;
        case ScalarMode::Formal: {
            s.terms_.insert(s.terms_.end(), o.terms_.begin(), o.terms_.end());
            s.normalize_formal();
            break;
        }
    }
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::scaled(const Rational& r) const {
    switch (mode_) {
        case ScalarMode::None:
            if (r == 0) return *this;
            throw std::invalid_argument("cannot rescale a none-mode scalar");
        case ScalarMode::Rational: return rational(re_ * r);
        case ScalarMode::Gaussian: return gaussian(re_ * r, im_ * r);
        case ScalarMode::Float: return complex_float(f_ * r.get_d());
        case ScalarMode::Formal: {
            Scalar s = *this;
            for (auto& t : s.terms_) t.second *= r;
            s.normalize_formal();
            return s;
        }
    }
    return *this;
}

Scalar Scalar::operator*(const Scalar& o) const {
    if (mode_ == ScalarMode::Rational) return o.scaled(re_);
    if (o.mode_ == ScalarMode::Rational) return scaled(o.re_);
    require_same_mode(*this, o, "*");
    switch (mode_) {
        case ScalarMode::Gaussian:
            return gaussian(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
        case ScalarMode::Float:
            return complex_float(f_ * o.f_);
        default:
            throw std::invalid_argument("multiplication undefined in mode " + mode_name(mode_));
    }
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("scalar inverse of zero");
    switch (mode_) {
        case ScalarMode::Rational: return rational(1 / re_);
        case ScalarMode::Gaussian: {
            Rational n = re_ * re_ + im_ * im_;
            return gaussian(re_ / n, -im_ / n);
        }
        case ScalarMode::Float: return complex_float(1.0 / f_);
        default:
            throw std::invalid_argument("inverse undefined in mode " + mode_name(mode_));
    }
}

bool Scalar::operator==(const Scalar& o) const {
    if (exact_complex_pair(mode_, o.mode_)) return re_ == o.re_ && im_ == o.im_;
    if (mode_ != o.mode_) return false;
    switch (mode_) {
        case ScalarMode::None: return true;
        case ScalarMode::Rational: return re_ == o.re_;
        case ScalarMode::Gaussian: return re_ == o.re_ && im_ == o.im_;
        case ScalarMode::Float: return f_ == o.f_;
        case ScalarMode::Formal: return terms_ == o.terms_;
    }
    return false;
}

bool Scalar::operator<(const Scalar& o) const {
    if (exact_complex_pair(mode_, o.mode_)) {
        if (re_ != o.re_) return re_ < o.re_;
        return im_ < o.im_;
    }
    if (mode_ != o.mode_) return static_cast<int>(mode_) < static_cast<int>(o.mode_);
    switch (mode_) {
        case ScalarMode::None: return false;
        case ScalarMode::Rational: return re_ < o.re_;
        case ScalarMode::Gaussian:
            if (re_ != o.re_) return re_ < o.re_;
            return im_ < o.im_;
        case ScalarMode::Float:
            if (f_.real() != o.f_.real()) return f_.real() < o.f_.real();
            return f_.imag() < o.f_.imag();
        case ScalarMode::Formal: {
            auto cmp = [](const std::pair<std::string, Rational>& a,
                          const std::pair<std::string, Rational>& b) {
                if (a.first != b.first) return a.first < b.first ? -1 : 1;
                if (a.second != b.second) return a.second < b.second ? -1 : 1;
                return 0;
            };
            size_t m = std::min(terms_.size(), o.terms_.size());
            for (size_t i = 0; i < m; ++i) {
                int c = cmp(terms_[i], o.terms_[i]);
                if (c != 0) return c < 0;
            }
            return terms_.size() < o.terms_.size();
        }
    }
    return false;
}

std::complex<double> Scalar::to_complex() const {
    switch (mode_) {
        case ScalarMode::Rational: return {re_.get_d(), 0.0};
        case ScalarMode::Gaussian: return {re_.get_d(), im_.get_d()};
        case ScalarMode::Float: return f_;
        default:
            throw std::invalid_argument("no numeric value in mode " + mode_name(mode_));
    }
}

const Rational& Scalar::rat() const {
    if (mode_ != ScalarMode::Rational)
        throw std::invalid_argument("not a rational scalar");
    return re_;
}

std::pair<Rational, Rational> Scalar::gauss() const {
    if (mode_ == ScalarMode::Rational) return {re_, Rational(0)};
    if (mode_ != ScalarMode::Gaussian)
        throw std::invalid_argument("not a Gaussian scalar");
    return {re_, im_};
}

const std::vector<std::pair<std::string, Rational>>& Scalar::formal_terms() const {
    if (mode_ != ScalarMode::Formal)
        throw std::invalid_argument("not a formal scalar");
    return terms_;
}

Scalar Scalar::substitute(const std::vector<std::pair<std::string, Scalar>>& values) const {
    if (mode_ != ScalarMode::Formal)
        throw std::invalid_argument("substitute: not a formal scalar");
    if (values.empty())
        throw std::invalid_argument("substitute: empty value map");
    Scalar acc = Scalar::zero(values.front().second.mode());
    for (const auto& [name, coeff] : terms_) {
        const Scalar* v = nullptr;
        for (const auto& kv : values)
            if (kv.first == name) { v = &kv.second; break; }
        if (!v) throw std::invalid_argument("substitute: no value for symbol " + name);
        acc += v->scaled(coeff);
    }
    return acc;
}

std::string Scalar::str() const {
    std::ostringstream os;
    switch (mode_) {
        case ScalarMode::None: os << "0"; break;
        case ScalarMode::Rational: os << re_; break;
        case ScalarMode::Gaussian:
            os << re_;
            if (im_ != 0) os << (im_ > 0 ? "+" : "") << im_ << "i";
            break;
        case ScalarMode::Float:
            os << f_.real();
            if (f_.imag() != 0) os << (f_.imag() > 0 ? "+" : "") << f_.imag() << "i";
            break;
        case ScalarMode::Formal: {
            if (terms_.empty()) { os << "0"; break; }
            bool first = true;
            for (const auto& [n, c] : terms_) {
                if (c > 0 && !first) os << "+";
                if (c == -1) os << "-";
                else if (c != 1) os << c << "*";
                os << n;
                first = false;
            }
            break;
        }
    }
    return os.str();
}

} // namespace dissect
