// A small expression parser producing exact polynomials in z_1..z_r over
// Q(k). Grammar:
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ( factor | '*' factor | '/' factor )*
//   factor := atom ['^' uint]
//   atom   := uint | 'k' | 'z' uint | '(' expr ')'
//
// Juxtaposition multiplies ("2 z1 z6"). Division binds to the single factor
// that follows it, so denominators with several pieces must be wrapped in one
// set of parentheses: "(3 k)/((1 + k) (1 + 4 k))". Divisors must be free of
// the z variables.
#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cstrig/weight.hpp"
#include "cstrig/zpolynomial.hpp"

namespace cstrig {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

class ExprParser {
public:
    ExprParser(std::string_view src, int nvars) : src_(src), nvars_(nvars) {}

    ZPolyK parse() {
        ZPolyK p = expr();
        skip_ws();
        if (pos_ != src_.size()) fail("trailing input");
        return p;
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;
    int nvars_;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("parse error at offset " + std::to_string(pos_) + ": " + msg);
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    bool consume(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    ZPolyK expr() {
        bool neg = false;
        if (consume('-')) neg = true;
        else consume('+');
        ZPolyK acc = term();
        if (neg) acc = -acc;
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                acc += term();
            } else if (c == '-') {
                ++pos_;
                acc -= term();
            } else {
                break;
            }
        }
        return acc;
    }

    ZPolyK term() {
        ZPolyK acc = factor();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc *= factor();
            } else if (c == '/') {
                ++pos_;
                acc = divide(acc, factor());
            } else if (c == '(' || c == 'k' || c == 'z' ||
                       std::isdigit(static_cast<unsigned char>(c))) {
                acc *= factor();
            } else {
                break;
            }
        }
        return acc;
    }

    ZPolyK factor() {
        ZPolyK base = atom();
        if (peek() == '^') {
            ++pos_;
            unsigned e = read_uint();
            ZPolyK out = ZPolyK::constant(nvars_, KappaRational(1));
            for (unsigned i = 0; i < e; ++i) out *= base;
            return out;
        }
        return base;
    }

    ZPolyK atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            ZPolyK inner = expr();
            if (!consume(')')) fail("expected ')'");
            return inner;
        }
        if (c == 'k') {
            ++pos_;
            return ZPolyK::constant(nvars_, KappaRational::variable());
        }
        if (c == 'z') {
            ++pos_;
            unsigned idx = read_uint();
            if (idx < 1 || static_cast<int>(idx) > nvars_) fail("variable index out of range");
            return ZPolyK::variable(nvars_, static_cast<int>(idx) - 1);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            BigInt v = BigInt::from_string(src_.substr(start, pos_ - start));
            return ZPolyK::constant(nvars_, KappaRational(std::move(v)));
        }
        fail("expected a factor");
    }

    unsigned read_uint() {
        skip_ws();
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
            fail("expected an integer");
        unsigned v = 0;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            v = v * 10 + static_cast<unsigned>(src_[pos_] - '0');
            if (v > 1000000) fail("integer out of range");
            ++pos_;
        }
        return v;
    }

    ZPolyK divide(const ZPolyK& num, const ZPolyK& den) {
        if (den.is_zero()) fail("division by zero");
        KappaRational scalar(0);
        for (const auto& [e, c] : den.terms()) {
            if (e.label_sum() != 0) fail("division by a z-dependent expression");
            scalar = c;
        }
        return num.scaled(KappaRational(1) / scalar);
    }
};

}  // namespace detail

inline ZPolyK parse_zk_expression(std::string_view src, int nvars) {
    return detail::ExprParser(src, nvars).parse();
}

// Digit-string weight, e.g. "0000002" -> (0,0,0,0,0,0,2).
inline Weight weight_from_digits(std::string_view s, int rank) {
    if (static_cast<int>(s.size()) != rank)
        throw ParseError("weight digits '" + std::string(s) + "' do not match rank " + std::to_string(rank));
    Weight w(rank);
    for (int i = 0; i < rank; ++i) {
        char c = s[static_cast<std::size_t>(i)];
        if (c < '0' || c > '9') throw ParseError("bad weight digit string");
        w[i] = static_cast<std::int16_t>(c - '0');
    }
    return w;
}

}  // namespace cstrig
