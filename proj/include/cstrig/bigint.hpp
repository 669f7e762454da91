// Arbitrary-precision signed integers (sign + base-2^32 magnitude).
//
// Sizes in this library stay modest (weight multiplicities, Weyl dimension
// products, coefficients of polynomials in the coupling constant), so the
// implementation favours simplicity: schoolbook multiplication and Knuth
// algorithm D division.
#pragma once

#include <cstdint>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cstrig {

class BigInt {
public:
    BigInt() = default;
    BigInt(long long v) { assign(v); }
    BigInt(long v) : BigInt(static_cast<long long>(v)) {}
    BigInt(int v) : BigInt(static_cast<long long>(v)) {}
    BigInt(unsigned long v) : BigInt(static_cast<unsigned long long>(v)) {}
    BigInt(unsigned v) : BigInt(static_cast<unsigned long long>(v)) {}
    BigInt(unsigned long long v) {
        while (v != 0) {
            mag_.push_back(static_cast<std::uint32_t>(v & 0xffffffffu));
            v >>= 32;
        }
        sign_ = mag_.empty() ? 0 : 1;
    }

    static BigInt from_string(std::string_view s) {
        BigInt r;
        bool neg = false;
        std::size_t i = 0;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            neg = (s[i] == '-');
            ++i;
        }
        if (i == s.size()) throw std::invalid_argument("BigInt: empty numeral");
        for (; i < s.size(); ++i) {
            char c = s[i];
            if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit in numeral");
            r.mul_small_add(10, static_cast<std::uint32_t>(c - '0'));
        }
        r.sign_ = r.mag_.empty() ? 0 : (neg ? -1 : 1);
        return r;
    }

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    bool is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }
    int sign() const { return sign_; }

    // Valid only when the value fits; checked.
    long long to_int64() const {
        unsigned long long v = 0;
        if (mag_.size() > 2) throw std::overflow_error("BigInt: does not fit in 64 bits");
        for (std::size_t i = mag_.size(); i-- > 0;) v = (v << 32) | mag_[i];
        if (sign_ >= 0) {
            if (v > static_cast<unsigned long long>(std::numeric_limits<long long>::max()))
                throw std::overflow_error("BigInt: does not fit in 64 bits");
            return static_cast<long long>(v);
        }
        if (v > static_cast<unsigned long long>(std::numeric_limits<long long>::max()) + 1ull)
            throw std::overflow_error("BigInt: does not fit in 64 bits");
        return static_cast<long long>(-v);
    }

    bool fits_int64() const {
        if (mag_.size() > 2) return false;
        unsigned long long v = 0;
        for (std::size_t i = mag_.size(); i-- > 0;) v = (v << 32) | mag_[i];
        unsigned long long lim = static_cast<unsigned long long>(std::numeric_limits<long long>::max());
        return sign_ >= 0 ? v <= lim : v <= lim + 1ull;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return cmp(a, b) >= 0; }

    static int cmp(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
        int c = cmp_mag(a.mag_, b.mag_);
        return a.sign_ >= 0 ? c : -c;
    }

    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.sign_ = a.sign_;
        } else {
            int c = cmp_mag(a.mag_, b.mag_);
            if (c == 0) return BigInt();
            if (c > 0) {
                r.mag_ = sub_mag(a.mag_, b.mag_);
                r.sign_ = a.sign_;
            } else {
                r.mag_ = sub_mag(b.mag_, a.mag_);
                r.sign_ = b.sign_;
            }
        }
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
        BigInt r;
        r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
        for (std::size_t i = 0; i < a.mag_.size(); ++i) {
            std::uint64_t carry = 0;
            std::uint64_t ai = a.mag_[i];
            for (std::size_t j = 0; j < b.mag_.size(); ++j) {
                std::uint64_t cur = r.mag_[i + j] + ai * b.mag_[j] + carry;
                r.mag_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
                carry = cur >> 32;
            }
            std::size_t k = i + b.mag_.size();
            while (carry != 0) {
                std::uint64_t cur = r.mag_[k] + carry;
                r.mag_[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
                carry = cur >> 32;
                ++k;
            }
        }
        r.trim();
        r.sign_ = r.mag_.empty() ? 0 : a.sign_ * b.sign_;
        return r;
    }

    BigInt& operator+=(const BigInt& b) { *this = *this + b; return *this; }
    BigInt& operator-=(const BigInt& b) { *this = *this - b; return *this; }
    BigInt& operator*=(const BigInt& b) { *this = *this * b; return *this; }

    // Truncated toward zero, like built-in integer division.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
        int c = cmp_mag(a.mag_, b.mag_);
        if (c < 0) { q = BigInt(); r = a; return; }
        if (b.mag_.size() == 1) {
            divmod_small(a.mag_, b.mag_[0], q.mag_, r.mag_);
        } else {
            divmod_knuth(a.mag_, b.mag_, q.mag_, r.mag_);
        }
        q.trim(); r.trim();
        q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
        r.sign_ = r.mag_.empty() ? 0 : a.sign_;
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    // Exact quotient; throws if the division leaves a remainder.
    static BigInt div_exact(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        if (!r.is_zero()) throw std::logic_error("BigInt: division expected to be exact");
        return q;
    }

    static BigInt gcd(BigInt a, BigInt b) {
        a.sign_ = a.mag_.empty() ? 0 : 1;
        b.sign_ = b.mag_.empty() ? 0 : 1;
        while (!b.is_zero()) {
            BigInt q, r;
            divmod(a, b, q, r);
            a = b;
            b = r;
        }
        return a;
    }

    static BigInt pow(const BigInt& base, unsigned e) {
        BigInt r(1), b = base;
        while (e != 0) {
            if (e & 1u) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    static BigInt abs(const BigInt& a) {
        BigInt r = a;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        std::vector<std::uint32_t> tmp = mag_;
        std::string digits;
        while (!tmp.empty()) {
            std::uint64_t rem = 0;
            for (std::size_t i = tmp.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | tmp[i];
                tmp[i] = static_cast<std::uint32_t>(cur / 1000000000u);
                rem = cur % 1000000000u;
            }
            while (!tmp.empty() && tmp.back() == 0) tmp.pop_back();
            for (int k = 0; k < 9; ++k) {
                digits.push_back(static_cast<char>('0' + rem % 10));
                rem /= 10;
            }
        }
        while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
        if (sign_ < 0) digits.push_back('-');
        return std::string(digits.rbegin(), digits.rend());
    }

    std::size_t hash() const {
        std::size_t h = static_cast<std::size_t>(sign_) * 0x9e3779b97f4a7c15ull;
        for (std::uint32_t w : mag_) h = (h ^ w) * 0x100000001b3ull;
        return h;
    }

private:
    int sign_ = 0;                    // -1, 0, +1
    std::vector<std::uint32_t> mag_;  // little-endian, no leading zero limb

    void assign(long long v) {
        sign_ = v == 0 ? 0 : (v < 0 ? -1 : 1);
        unsigned long long m = v < 0 ? 0ull - static_cast<unsigned long long>(v)
                                     : static_cast<unsigned long long>(v);
        while (m != 0) {
            mag_.push_back(static_cast<std::uint32_t>(m & 0xffffffffu));
            m >>= 32;
        }
    }

    void trim() {
        while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
        if (mag_.empty()) sign_ = 0;
    }

    void mul_small_add(std::uint32_t m, std::uint32_t add) {
        std::uint64_t carry = add;
        for (std::size_t i = 0; i < mag_.size(); ++i) {
            std::uint64_t cur = static_cast<std::uint64_t>(mag_[i]) * m + carry;
            mag_[i] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        while (carry != 0) {
            mag_.push_back(static_cast<std::uint32_t>(carry & 0xffffffffu));
            carry >>= 32;
        }
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<std::uint32_t> r(big.size() + 1, 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < big.size(); ++i) {
            std::uint64_t cur = static_cast<std::uint64_t>(big[i]) + (i < small.size() ? small[i] : 0u) + carry;
            r[i] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        r[big.size()] = static_cast<std::uint32_t>(carry);
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // Requires |a| >= |b|.
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r(a.size(), 0);
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(a[i]) - (i < b.size() ? b[i] : 0u) - borrow;
            if (cur < 0) { cur += (1ll << 32); borrow = 1; } else { borrow = 0; }
            r[i] = static_cast<std::uint32_t>(cur);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    static void divmod_small(const std::vector<std::uint32_t>& a, std::uint32_t d,
                             std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
        q.assign(a.size(), 0);
        std::uint64_t rem = 0;
        for (std::size_t i = a.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | a[i];
            q[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        r.clear();
        if (rem != 0) r.push_back(static_cast<std::uint32_t>(rem));
    }

    // Knuth TAOCP vol. 2, algorithm D. Requires |b| >= 2 limbs and |a| >= |b|.
    static void divmod_knuth(const std::vector<std::uint32_t>& a_in,
                             const std::vector<std::uint32_t>& b_in,
                             std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
        int shift = 0;
        std::uint32_t top = b_in.back();
        while ((top & 0x80000000u) == 0) { top <<= 1; ++shift; }

        auto shl = [shift](const std::vector<std::uint32_t>& v) {
            std::vector<std::uint32_t> out(v.size() + 1, 0);
            std::uint32_t carry = 0;
            for (std::size_t i = 0; i < v.size(); ++i) {
                out[i] = (v[i] << shift) | carry;
                carry = shift == 0 ? 0 : static_cast<std::uint32_t>(v[i] >> (32 - shift));
            }
            out[v.size()] = carry;
            return out;
        };

        std::vector<std::uint32_t> u = shl(a_in);
        std::vector<std::uint32_t> v = shl(b_in);
        while (!v.empty() && v.back() == 0) v.pop_back();
        const std::size_t n = v.size();
        const std::size_t m = u.size() - n;

        q.assign(m, 0);
        const std::uint64_t vtop = v[n - 1];
        const std::uint64_t vsec = n >= 2 ? v[n - 2] : 0;

        for (std::size_t j = m; j-- > 0;) {
            std::uint64_t num = (static_cast<std::uint64_t>(u[j + n]) << 32) | u[j + n - 1];
            std::uint64_t qhat = num / vtop;
            std::uint64_t rhat = num % vtop;
            if (qhat > 0xffffffffu) { qhat = 0xffffffffu; rhat = num - qhat * vtop; }
            while (rhat <= 0xffffffffu &&
                   qhat * vsec > ((rhat << 32) | (j + n >= 2 ? u[j + n - 2] : 0u))) {
                --qhat;
                rhat += vtop;
            }
            // multiply-and-subtract
            std::int64_t borrow = 0;
            std::uint64_t carry = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t p = qhat * v[i] + carry;
                carry = p >> 32;
                std::int64_t t = static_cast<std::int64_t>(u[i + j]) -
                                 static_cast<std::int64_t>(p & 0xffffffffu) - borrow;
                if (t < 0) { t += (1ll << 32); borrow = 1; } else { borrow = 0; }
                u[i + j] = static_cast<std::uint32_t>(t);
            }
            std::int64_t t = static_cast<std::int64_t>(u[j + n]) -
                             static_cast<std::int64_t>(carry) - borrow;
            if (t < 0) {
                // qhat was one too large: add back
                t += (1ll << 32);
                --qhat;
                std::uint64_t c2 = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    std::uint64_t s = static_cast<std::uint64_t>(u[i + j]) + v[i] + c2;
                    u[i + j] = static_cast<std::uint32_t>(s & 0xffffffffu);
                    c2 = s >> 32;
                }
                t += static_cast<std::int64_t>(c2);
            }
            u[j + n] = static_cast<std::uint32_t>(t);
            q[j] = static_cast<std::uint32_t>(qhat);
        }

        // denormalize the remainder
        r.assign(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(n));
        if (shift != 0) {
            std::uint32_t carry = 0;
            for (std::size_t i = r.size(); i-- > 0;) {
                std::uint32_t cur = r[i];
                r[i] = (cur >> shift) | carry;
                carry = cur << (32 - shift);
            }
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
};

inline std::string to_string(const BigInt& v) { return v.to_string(); }

}  // namespace cstrig
