#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace cospec {

using Int = boost::multiprecision::cpp_int;

/// Exact fraction over arbitrary-precision integers.
///
/// Invariants: denominator > 0, gcd(|num|, den) == 1, zero is 0/1.
/// Every operation re-canonicalizes, so two equal values always compare
/// equal member-wise.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(Int v) : num_(std::move(v)), den_(1) {}
    Rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) { canonicalize(); }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    // Integer fast paths; shifts and probe points are usually integers.
    friend bool operator==(const Rational& a, long long v) { return a.den_ == 1 && a.num_ == v; }
    friend bool operator==(long long v, const Rational& a) { return a == v; }
    friend bool operator<(const Rational& a, long long v) { return a.num_ < v * a.den_; }
    friend bool operator>(const Rational& a, long long v) { return a.num_ > v * a.den_; }

    /// "p/q", or just "p" when the value is integral.
    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) {
            s += '/';
            s += den_.str();
        }
        return s;
    }

    /// Accepts "p" and "p/q" with an optional leading sign. Throws
    /// std::invalid_argument on anything else (including q == 0).
    static Rational parse(std::string_view text) {
        auto fail = [&] { throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'"); };
        std::size_t slash = text.find('/');
        Int num = parse_int(text.substr(0, slash == std::string_view::npos ? text.size() : slash), fail);
        Int den = 1;
        if (slash != std::string_view::npos) {
            den = parse_int(text.substr(slash + 1), fail);
            if (den == 0) fail();
        }
        return Rational(std::move(num), std::move(den));
    }

    /// Lossy conversion for display only; all computation stays exact.
    double to_double() const {
        return num_.convert_to<double>() / den_.convert_to<double>();
    }

private:
    template <class Fail>
    static Int parse_int(std::string_view s, Fail fail) {
        if (s.empty()) fail();
        std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
        if (i == s.size()) fail();
        for (std::size_t j = i; j < s.size(); ++j)
            if (s[j] < '0' || s[j] > '9') fail();
        return Int(std::string(s));
    }

    void canonicalize() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        Int g = boost::multiprecision::gcd(num_ < 0 ? Int(-num_) : num_, den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    Int num_;
    Int den_;
};

}  // namespace cospec
