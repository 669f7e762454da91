// Sparse multivariate polynomials in z_1..z_r with exact coefficients
// (BigRational or KappaRational). Terms are kept in graded-lexicographic
// descending order, which doubles as the canonical rendering order and makes
// begin() the leading term.
#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "cstrig/format.hpp"
#include "cstrig/kappa.hpp"
#include "cstrig/rational.hpp"
#include "cstrig/weight.hpp"

namespace cstrig {

// coefficient display helpers shared by the renderers
inline bool coef_is_zero(const BigRational& c) { return c.is_zero(); }
inline bool coef_is_zero(const KappaRational& c) { return c.is_zero(); }
inline bool coef_is_one(const BigRational& c) { return c == BigRational(1); }
inline bool coef_is_one(const KappaRational& c) { return c.is_one(); }
inline bool coef_display_negative(const BigRational& c) { return c.sign() < 0; }
inline bool coef_display_negative(const KappaRational& c) {
    return !c.is_zero() && c.num().leading().is_negative();
}
inline BigRational coef_negated(const BigRational& c) { return -c; }
inline KappaRational coef_negated(const KappaRational& c) { return -c; }
inline bool coef_needs_parens(const BigRational&) { return false; }
inline bool coef_needs_parens(const KappaRational& c) { return !c.is_constant(); }
inline std::string coef_to_string(const BigRational& c, Style) { return c.to_string(); }
inline std::string coef_to_string(const KappaRational& c, Style style) {
    if (c.is_constant()) return c.constant_value().to_string();
    return c.to_string("k", style);
}

inline KappaRational to_kappa_rational(const BigRational& c) { return KappaRational(c); }

// graded-lexicographic, larger terms first
struct GradedLexDesc {
    bool operator()(const Weight& a, const Weight& b) const {
        long long da = a.label_sum();
        long long db = b.label_sum();
        if (da != db) return da > db;
        return b < a;
    }
};

template <typename C>
class ZPolynomial {
public:
    using Coefficient = C;
    using TermMap = std::map<Weight, C, GradedLexDesc>;

    ZPolynomial() = default;
    explicit ZPolynomial(int nvars) : nvars_(nvars) {}

    static ZPolynomial constant(int nvars, C value) {
        ZPolynomial p(nvars);
        p.add_term(Weight(nvars), std::move(value));
        return p;
    }
    static ZPolynomial variable(int nvars, int j) {
        ZPolynomial p(nvars);
        p.add_term(Weight::fundamental(nvars, j), C(1));
        return p;
    }
    static ZPolynomial monomial(Weight exponents, C value) {
        ZPolynomial p(exponents.rank());
        p.add_term(std::move(exponents), std::move(value));
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    const std::pair<const Weight, C>& leading_term() const {
        if (terms_.empty()) throw std::logic_error("ZPolynomial: leading term of zero");
        return *terms_.begin();
    }

    C coefficient(const Weight& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? C(0) : it->second;
    }

    void add_term(Weight e, C c) {
        if (coef_is_zero(c)) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(std::move(e), std::move(c));
        } else {
            it->second += c;
            if (coef_is_zero(it->second)) terms_.erase(it);
        }
    }

    friend bool operator==(const ZPolynomial& a, const ZPolynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const ZPolynomial& a, const ZPolynomial& b) { return !(a == b); }

    ZPolynomial operator-() const {
        ZPolynomial r(nvars_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, coef_negated(c));
        return r;
    }

    ZPolynomial& operator+=(const ZPolynomial& b) {
        check(b);
        for (const auto& [e, c] : b.terms_) add_term(e, c);
        return *this;
    }
    ZPolynomial& operator-=(const ZPolynomial& b) {
        check(b);
        for (const auto& [e, c] : b.terms_) add_term(e, coef_negated(c));
        return *this;
    }
    friend ZPolynomial operator+(ZPolynomial a, const ZPolynomial& b) { return a += b; }
    friend ZPolynomial operator-(ZPolynomial a, const ZPolynomial& b) { return a -= b; }

    friend ZPolynomial operator*(const ZPolynomial& a, const ZPolynomial& b) {
        a.check(b);
        ZPolynomial r(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    ZPolynomial& operator*=(const ZPolynomial& b) { *this = *this * b; return *this; }

    ZPolynomial scaled(const C& s) const {
        ZPolynomial r(nvars_);
        if (coef_is_zero(s)) return r;
        for (const auto& [e, c] : terms_) r.add_term(e, c * s);
        return r;
    }

    ZPolynomial derivative(int j) const {
        ZPolynomial r(nvars_);
        for (const auto& [e, c] : terms_) {
            int k = e[j];
            if (k == 0) continue;
            Weight d = e;
            d[j] = static_cast<std::int16_t>(k - 1);
            r.add_term(std::move(d), c * C(k));
        }
        return r;
    }

    std::string to_string(Style style = Style::plain) const {
        if (terms_.empty()) return "0";
        const std::string mul = style == Style::mathematica ? "*" : " ";
        std::string out;
        for (const auto& [e, c] : terms_) {
            C cc = c;
            bool neg = coef_display_negative(cc);
            if (neg) cc = coef_negated(cc);
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            bool has_vars = e.label_sum() != 0;
            std::string cs;
            if (!coef_is_one(cc) || !has_vars) {
                cs = coef_to_string(cc, style);
                if (coef_needs_parens(cc) && has_vars) cs = "(" + cs + ")";
            }
            std::string ms = monomial_string(e, mul);
            if (!cs.empty() && !ms.empty()) out += cs + mul + ms;
            else if (!cs.empty()) out += cs;
            else out += ms;
        }
        return out;
    }

private:
    int nvars_ = 0;
    TermMap terms_;

    void check(const ZPolynomial& b) const {
        if (nvars_ != b.nvars_) throw std::invalid_argument("ZPolynomial: variable count mismatch");
    }

    static std::string monomial_string(const Weight& e, const std::string& mul) {
        std::string s;
        for (int j = 0; j < e.rank(); ++j) {
            if (e[j] == 0) continue;
            if (!s.empty()) s += mul;
            s += "z" + std::to_string(j + 1);
            if (e[j] > 1) s += "^" + std::to_string(e[j]);
        }
        return s;
    }
};

using ZPolyQ = ZPolynomial<BigRational>;
using ZPolyK = ZPolynomial<KappaRational>;

inline ZPolyK promote(const ZPolyQ& p) {
    ZPolyK r(p.nvars());
    for (const auto& [e, c] : p.terms()) r.add_term(e, KappaRational(c));
    return r;
}

// Substitutes a rational value for k in every coefficient; throws PoleError if
// the value hits a denominator zero.
inline ZPolyQ substitute_kappa(const ZPolyK& p, const BigRational& kappa0) {
    ZPolyQ r(p.nvars());
    for (const auto& [e, c] : p.terms()) r.add_term(e, c.evaluate(kappa0));
    return r;
}

}  // namespace cstrig
