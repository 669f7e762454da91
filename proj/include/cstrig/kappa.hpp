// Univariate polynomials in the coupling constant k over the integers, and
// the rational-function field Q(k) built from them.
//
// KappaRational keeps a unique canonical form: numerator and denominator are
// integer polynomials with no common polynomial factor over Q[k], their
// integer contents are coprime, and the denominator has a positive leading
// coefficient. Equality is therefore structural.
#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cstrig/bigint.hpp"
#include "cstrig/format.hpp"
#include "cstrig/rational.hpp"

namespace cstrig {

struct PoleError : std::runtime_error {
    explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

class KappaPoly {
public:
    KappaPoly() = default;
    KappaPoly(BigInt c) {
        if (!c.is_zero()) coef_.push_back(std::move(c));
    }
    KappaPoly(long long c) : KappaPoly(BigInt(c)) {}

    // coefficients in ascending degree
    static KappaPoly from_coefficients(std::vector<BigInt> coef) {
        KappaPoly p;
        p.coef_ = std::move(coef);
        p.trim();
        return p;
    }

    static KappaPoly variable() { return from_coefficients({BigInt(0), BigInt(1)}); }

    // p + q*k, handy for the ubiquitous linear factors
    static KappaPoly linear(BigInt p, BigInt q) {
        return from_coefficients({std::move(p), std::move(q)});
    }

    bool is_zero() const { return coef_.empty(); }
    bool is_one() const { return coef_.size() == 1 && coef_[0].is_one(); }
    bool is_constant() const { return coef_.size() <= 1; }
    int degree() const { return static_cast<int>(coef_.size()) - 1; }  // -1 for zero

    const BigInt& coefficient(int d) const {
        static const BigInt zero(0);
        if (d < 0 || d >= static_cast<int>(coef_.size())) return zero;
        return coef_[static_cast<std::size_t>(d)];
    }
    const BigInt& leading() const {
        if (coef_.empty()) throw std::logic_error("KappaPoly: leading of zero");
        return coef_.back();
    }

    friend bool operator==(const KappaPoly& a, const KappaPoly& b) { return a.coef_ == b.coef_; }
    friend bool operator!=(const KappaPoly& a, const KappaPoly& b) { return !(a == b); }

    KappaPoly operator-() const {
        KappaPoly r = *this;
        for (auto& c : r.coef_) c = -c;
        return r;
    }

    friend KappaPoly operator+(const KappaPoly& a, const KappaPoly& b) {
        KappaPoly r;
        r.coef_.resize(std::max(a.coef_.size(), b.coef_.size()));
        for (std::size_t i = 0; i < r.coef_.size(); ++i) {
            if (i < a.coef_.size()) r.coef_[i] += a.coef_[i];
            if (i < b.coef_.size()) r.coef_[i] += b.coef_[i];
        }
        r.trim();
        return r;
    }
    friend KappaPoly operator-(const KappaPoly& a, const KappaPoly& b) { return a + (-b); }

    friend KappaPoly operator*(const KappaPoly& a, const KappaPoly& b) {
        if (a.is_zero() || b.is_zero()) return KappaPoly();
        KappaPoly r;
        r.coef_.assign(a.coef_.size() + b.coef_.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < a.coef_.size(); ++i)
            for (std::size_t j = 0; j < b.coef_.size(); ++j)
                r.coef_[i + j] += a.coef_[i] * b.coef_[j];
        r.trim();
        return r;
    }

    KappaPoly& operator+=(const KappaPoly& b) { *this = *this + b; return *this; }
    KappaPoly& operator-=(const KappaPoly& b) { *this = *this - b; return *this; }
    KappaPoly& operator*=(const KappaPoly& b) { *this = *this * b; return *this; }

    BigRational evaluate(const BigRational& x) const {
        BigRational acc(0);
        for (std::size_t i = coef_.size(); i-- > 0;) acc = acc * x + BigRational(coef_[i]);
        return acc;
    }

    // gcd of coefficients, positive; sign of the leading coefficient reported separately
    BigInt content() const {
        BigInt g(0);
        for (const auto& c : coef_) g = BigInt::gcd(g, c);
        return g;
    }

    KappaPoly primitive_part() const {
        if (is_zero()) return *this;
        BigInt g = content();
        if (leading().is_negative()) g = -g;
        KappaPoly r = *this;
        for (auto& c : r.coef_) c = BigInt::div_exact(c, g);
        return r;
    }

    KappaPoly divided_by_integer(const BigInt& g) const {
        KappaPoly r = *this;
        for (auto& c : r.coef_) c = BigInt::div_exact(c, g);
        return r;
    }

    // Exact polynomial quotient over Q; throws if b does not divide a in Z[k].
    static KappaPoly div_exact(const KappaPoly& a, const KappaPoly& b) {
        if (b.is_zero()) throw std::domain_error("KappaPoly: division by zero");
        if (a.is_zero()) return KappaPoly();
        std::vector<BigRational> rem(a.coef_.begin(), a.coef_.end());
        int db = b.degree();
        int dq = a.degree() - db;
        if (dq < 0) throw std::logic_error("KappaPoly: division expected to be exact");
        std::vector<BigRational> quot(static_cast<std::size_t>(dq) + 1);
        BigRational lb{b.leading()};
        for (int d = dq; d >= 0; --d) {
            BigRational c = rem[static_cast<std::size_t>(d + db)] / lb;
            quot[static_cast<std::size_t>(d)] = c;
            if (c.is_zero()) continue;
            for (int i = 0; i <= db; ++i)
                rem[static_cast<std::size_t>(d + i)] -= c * BigRational(b.coef_[static_cast<std::size_t>(i)]);
        }
        for (const auto& c : rem)
            if (!c.is_zero()) throw std::logic_error("KappaPoly: division expected to be exact");
        std::vector<BigInt> out;
        out.reserve(quot.size());
        for (auto& c : quot) out.push_back(c.to_integer());
        return from_coefficients(std::move(out));
    }

    // Primitive gcd over Q[k] via the primitive pseudo-remainder sequence.
    static KappaPoly gcd(const KappaPoly& a, const KappaPoly& b) {
        KappaPoly u = a.primitive_part();
        KappaPoly v = b.primitive_part();
        if (u.is_zero()) return v;
        if (v.is_zero()) return u;
        if (u.degree() < v.degree()) std::swap(u, v);
        while (!v.is_zero()) {
            KappaPoly r = pseudo_remainder(u, v);
            u = v;
            v = r.is_zero() ? KappaPoly() : r.primitive_part();
        }
        return u;
    }

    std::string to_string(const std::string& var = "k", Style style = Style::plain) const {
        if (is_zero()) return "0";
        const std::string mul = style == Style::mathematica ? "*" : " ";
        std::string out;
        for (std::size_t i = coef_.size(); i-- > 0;) {
            const BigInt& c = coef_[i];
            if (c.is_zero()) continue;
            BigInt a = BigInt::abs(c);
            if (out.empty()) {
                if (c.is_negative()) out += "-";
            } else {
                out += c.is_negative() ? " - " : " + ";
            }
            if (i == 0) {
                out += a.to_string();
            } else {
                if (!a.is_one()) out += a.to_string() + mul;
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

    std::size_t hash() const {
        std::size_t h = 0x51a0b2c3d4e5f607ull;
        for (const auto& c : coef_) h = (h * 0x100000001b3ull) ^ c.hash();
        return h;
    }

private:
    std::vector<BigInt> coef_;  // ascending degree, no trailing zeros

    void trim() {
        while (!coef_.empty() && coef_.back().is_zero()) coef_.pop_back();
    }

    // lc(v)^(deg u - deg v + 1) * u mod v, computed without fractions
    static KappaPoly pseudo_remainder(KappaPoly u, const KappaPoly& v) {
        int dv = v.degree();
        const BigInt& lv = v.leading();
        while (!u.is_zero() && u.degree() >= dv) {
            int shift = u.degree() - dv;
            BigInt lu = u.leading();
            KappaPoly scaled;
            scaled.coef_.assign(u.coef_.size(), BigInt(0));
            for (std::size_t i = 0; i < u.coef_.size(); ++i) scaled.coef_[i] = u.coef_[i] * lv;
            for (int i = 0; i <= dv; ++i)
                scaled.coef_[static_cast<std::size_t>(i + shift)] -=
                    lu * v.coef_[static_cast<std::size_t>(i)];
            scaled.trim();
            u = std::move(scaled);
        }
        return u;
    }
};

class KappaRational {
public:
    KappaRational() : num_(), den_(1) {}
    KappaRational(long long c) : num_(c), den_(1) {}
    KappaRational(BigInt c) : num_(std::move(c)), den_(1) {}
    KappaRational(const BigRational& q) : num_(q.num()), den_(q.den()) {}
    KappaRational(KappaPoly n) : num_(std::move(n)), den_(1) {}
    KappaRational(KappaPoly n, KappaPoly d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    static KappaRational variable() { return KappaRational(KappaPoly::variable()); }

    const KappaPoly& num() const { return num_; }
    const KappaPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    // Valid only when den is a constant; returns num/den with rational coefficients folded.
    BigRational constant_value() const {
        if (!is_constant()) throw std::logic_error("KappaRational: not constant");
        return BigRational(num_.coefficient(0), den_.coefficient(0));
    }

    friend bool operator==(const KappaRational& a, const KappaRational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const KappaRational& a, const KappaRational& b) { return !(a == b); }

    KappaRational operator-() const {
        KappaRational r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend KappaRational operator+(const KappaRational& a, const KappaRational& b) {
        return KappaRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend KappaRational operator-(const KappaRational& a, const KappaRational& b) {
        return KappaRational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend KappaRational operator*(const KappaRational& a, const KappaRational& b) {
        return KappaRational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend KappaRational operator/(const KappaRational& a, const KappaRational& b) {
        if (b.is_zero()) throw std::domain_error("KappaRational: division by zero");
        return KappaRational(a.num_ * b.den_, a.den_ * b.num_);
    }

    KappaRational& operator+=(const KappaRational& b) { *this = *this + b; return *this; }
    KappaRational& operator-=(const KappaRational& b) { *this = *this - b; return *this; }
    KappaRational& operator*=(const KappaRational& b) { *this = *this * b; return *this; }
    KappaRational& operator/=(const KappaRational& b) { *this = *this / b; return *this; }

    BigRational evaluate(const BigRational& x) const {
        BigRational d = den_.evaluate(x);
        if (d.is_zero()) {
            throw PoleError("pole at k = " + x.to_string() + ": denominator factor (" +
                            vanishing_factor(x) + ") vanishes");
        }
        return num_.evaluate(x) / d;
    }

    // Splits a polynomial value into coefficients by degree in k; requires den == 1.
    const KappaPoly& polynomial() const {
        if (!den_.is_one())
            throw std::logic_error("KappaRational: expected a polynomial value, got denominator " +
                                   den_.to_string());
        return num_;
    }

    std::string to_string(const std::string& var = "k", Style style = Style::plain) const {
        if (den_.is_one()) return num_.to_string(var, style);
        std::string n = num_.to_string(var, style);
        std::string d = den_.to_string(var, style);
        bool n_paren = num_.degree() > 0;
        bool d_paren = den_.degree() > 0 || style == Style::mathematica;
        std::string out = n_paren ? "(" + n + ")" : n;
        out += "/";
        out += d_paren ? "(" + d + ")" : d;
        return out;
    }

    std::size_t hash() const { return num_.hash() * 0x9e3779b97f4a7c15ull + den_.hash(); }

private:
    KappaPoly num_;
    KappaPoly den_;

    void normalize() {
        if (den_.is_zero()) throw std::domain_error("KappaRational: zero denominator");
        if (num_.is_zero()) { den_ = KappaPoly(1); return; }
        KappaPoly g = KappaPoly::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = KappaPoly::div_exact(num_, g);
            den_ = KappaPoly::div_exact(den_, g);
        }
        BigInt cn = num_.content();
        BigInt cd = den_.content();
        BigInt ci = BigInt::gcd(cn, cd);
        if (!ci.is_one()) {
            num_ = num_.divided_by_integer(ci);
            den_ = den_.divided_by_integer(ci);
        }
        if (den_.leading().is_negative()) {
            num_ = -num_;
            den_ = -den_;
        }
    }

    // The linear factor of den_ vanishing at x = -p/q, rendered as "p + q k".
    std::string vanishing_factor(const BigRational& x) const {
        BigInt p = -x.num();
        BigInt q = x.den();
        return KappaPoly::linear(p, q).to_string();
    }
};

inline std::string to_string(const KappaPoly& v) { return v.to_string(); }
inline std::string to_string(const KappaRational& v) { return v.to_string(); }

}  // namespace cstrig
