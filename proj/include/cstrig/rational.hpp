// Exact rationals over BigInt. Always stored reduced with positive denominator.
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "cstrig/bigint.hpp"

namespace cstrig {

class BigRational {
public:
    BigRational() : num_(0), den_(1) {}
    BigRational(BigInt n) : num_(std::move(n)), den_(1) {}
    BigRational(long long n) : num_(n), den_(1) {}
    BigRational(int n) : num_(n), den_(1) {}
    BigRational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
    BigRational(long long n, long long d) : num_(n), den_(d) { normalize(); }

    // Accepts "p", "-p", "p/q".
    static BigRational from_string(std::string_view s) {
        auto slash = s.find('/');
        if (slash == std::string_view::npos) return BigRational(BigInt::from_string(s));
        return BigRational(BigInt::from_string(s.substr(0, slash)),
                           BigInt::from_string(s.substr(slash + 1)));
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_.is_one(); }
    int sign() const { return num_.sign(); }

    friend bool operator==(const BigRational& a, const BigRational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const BigRational& a, const BigRational& b) { return !(a == b); }
    friend bool operator<(const BigRational& a, const BigRational& b) {
        return (a.num_ * b.den_) < (b.num_ * a.den_);
    }
    friend bool operator>(const BigRational& a, const BigRational& b) { return b < a; }
    friend bool operator<=(const BigRational& a, const BigRational& b) { return !(b < a); }
    friend bool operator>=(const BigRational& a, const BigRational& b) { return !(a < b); }

    BigRational operator-() const {
        BigRational r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend BigRational operator+(const BigRational& a, const BigRational& b) {
        return BigRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend BigRational operator-(const BigRational& a, const BigRational& b) {
        return BigRational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend BigRational operator*(const BigRational& a, const BigRational& b) {
        return BigRational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend BigRational operator/(const BigRational& a, const BigRational& b) {
        if (b.is_zero()) throw std::domain_error("BigRational: division by zero");
        return BigRational(a.num_ * b.den_, a.den_ * b.num_);
    }

    BigRational& operator+=(const BigRational& b) { *this = *this + b; return *this; }
    BigRational& operator-=(const BigRational& b) { *this = *this - b; return *this; }
    BigRational& operator*=(const BigRational& b) { *this = *this * b; return *this; }
    BigRational& operator/=(const BigRational& b) { *this = *this / b; return *this; }

    // Throws unless the value is an integer.
    BigInt to_integer() const {
        if (!den_.is_one()) throw std::logic_error("BigRational: not an integer");
        return num_;
    }

    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

private:
    BigInt num_;
    BigInt den_;  // > 0

    void normalize() {
        if (den_.is_zero()) throw std::domain_error("BigRational: zero denominator");
        if (num_.is_zero()) { den_ = BigInt(1); return; }
        if (den_.is_negative()) { num_ = -num_; den_ = -den_; }
        BigInt g = BigInt::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = BigInt::div_exact(num_, g);
            den_ = BigInt::div_exact(den_, g);
        }
    }
};

inline std::string to_string(const BigRational& v) { return v.to_string(); }

}  // namespace cstrig
