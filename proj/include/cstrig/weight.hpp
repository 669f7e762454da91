// Small fixed-capacity integer vectors used for weights (Dynkin labels) and
// for exponent vectors of polynomials in the z variables.
#pragma once

#include <array>
#include <cstdint>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cstrig {

inline constexpr int kMaxRank = 16;

struct Weight {
    std::array<std::int16_t, kMaxRank> v{};
    std::uint8_t n = 0;

    Weight() = default;
    explicit Weight(int rank) : n(static_cast<std::uint8_t>(rank)) {
        if (rank < 0 || rank > kMaxRank) throw std::invalid_argument("Weight: rank out of range");
    }
    Weight(std::initializer_list<int> labels) {
        if (labels.size() > kMaxRank) throw std::invalid_argument("Weight: rank out of range");
        n = static_cast<std::uint8_t>(labels.size());
        std::size_t i = 0;
        for (int x : labels) v[i++] = static_cast<std::int16_t>(x);
    }

    int rank() const { return n; }
    std::int16_t& operator[](int i) { return v[static_cast<std::size_t>(i)]; }
    std::int16_t operator[](int i) const { return v[static_cast<std::size_t>(i)]; }

    bool is_zero() const {
        for (int i = 0; i < n; ++i)
            if (v[static_cast<std::size_t>(i)] != 0) return false;
        return true;
    }
    bool is_dominant() const {
        for (int i = 0; i < n; ++i)
            if (v[static_cast<std::size_t>(i)] < 0) return false;
        return true;
    }
    long long label_sum() const {
        long long s = 0;
        for (int i = 0; i < n; ++i) s += v[static_cast<std::size_t>(i)];
        return s;
    }

    friend bool operator==(const Weight& a, const Weight& b) { return a.n == b.n && a.v == b.v; }
    friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }

    // lexicographic, first differing label decides
    friend bool operator<(const Weight& a, const Weight& b) {
        if (a.n != b.n) return a.n < b.n;
        for (int i = 0; i < a.n; ++i) {
            auto x = a.v[static_cast<std::size_t>(i)];
            auto y = b.v[static_cast<std::size_t>(i)];
            if (x != y) return x < y;
        }
        return false;
    }

    friend Weight operator+(const Weight& a, const Weight& b) {
        Weight r(a.rank_checked(b));
        for (int i = 0; i < r.n; ++i)
            r.v[static_cast<std::size_t>(i)] =
                static_cast<std::int16_t>(a.v[static_cast<std::size_t>(i)] + b.v[static_cast<std::size_t>(i)]);
        return r;
    }
    friend Weight operator-(const Weight& a, const Weight& b) {
        Weight r(a.rank_checked(b));
        for (int i = 0; i < r.n; ++i)
            r.v[static_cast<std::size_t>(i)] =
                static_cast<std::int16_t>(a.v[static_cast<std::size_t>(i)] - b.v[static_cast<std::size_t>(i)]);
        return r;
    }
    friend Weight operator*(int c, const Weight& a) {
        Weight r(a.rank());
        for (int i = 0; i < r.n; ++i)
            r.v[static_cast<std::size_t>(i)] = static_cast<std::int16_t>(c * a.v[static_cast<std::size_t>(i)]);
        return r;
    }
    Weight operator-() const { return -1 * *this; }

    static Weight fundamental(int rank, int i) {
        Weight r(rank);
        r.v[static_cast<std::size_t>(i)] = 1;
        return r;
    }
    static Weight zero(int rank) { return Weight(rank); }
    static Weight rho(int rank) {
        Weight r(rank);
        for (int i = 0; i < rank; ++i) r.v[static_cast<std::size_t>(i)] = 1;
        return r;
    }

    // Comma-separated Dynkin labels, e.g. "2,0,0,0,0,0,0".
    static Weight parse(std::string_view s, int rank) {
        Weight r(rank);
        int i = 0;
        std::size_t pos = 0;
        while (pos <= s.size()) {
            std::size_t comma = s.find(',', pos);
            std::string_view tok = s.substr(pos, comma == std::string_view::npos ? s.size() - pos
                                                                                 : comma - pos);
            if (tok.empty()) throw std::invalid_argument("weight: empty label in '" + std::string(s) + "'");
            if (i >= rank) throw std::invalid_argument("weight: too many labels for rank " + std::to_string(rank));
            int sign = 1;
            std::size_t j = 0;
            if (tok[0] == '-') { sign = -1; j = 1; }
            if (j == tok.size()) throw std::invalid_argument("weight: bad label '" + std::string(tok) + "'");
            long val = 0;
            for (; j < tok.size(); ++j) {
                if (tok[j] < '0' || tok[j] > '9')
                    throw std::invalid_argument("weight: bad label '" + std::string(tok) + "'");
                val = val * 10 + (tok[j] - '0');
                if (val > 30000) throw std::invalid_argument("weight: label out of range");
            }
            r.v[static_cast<std::size_t>(i++)] = static_cast<std::int16_t>(sign * val);
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
        if (i != rank) throw std::invalid_argument("weight: expected " + std::to_string(rank) + " labels");
        return r;
    }

    std::string to_string() const {
        std::string s;
        for (int i = 0; i < n; ++i) {
            if (i) s += ",";
            s += std::to_string(v[static_cast<std::size_t>(i)]);
        }
        return s;
    }

    // Concatenated-digit form used by the tables when every label is a single digit.
    std::string compact_string() const {
        for (int i = 0; i < n; ++i) {
            auto x = v[static_cast<std::size_t>(i)];
            if (x < 0 || x > 9) return to_string();
        }
        std::string s;
        for (int i = 0; i < n; ++i) s += static_cast<char>('0' + v[static_cast<std::size_t>(i)]);
        return s;
    }

private:
    int rank_checked(const Weight& other) const {
        if (n != other.n) throw std::invalid_argument("Weight: rank mismatch");
        return n;
    }
};

struct WeightHash {
    std::size_t operator()(const Weight& w) const {
        std::uint64_t h = 0xcbf29ce484222325ull ^ w.n;
        for (int i = 0; i < w.n; ++i) {
            h ^= static_cast<std::uint16_t>(w.v[static_cast<std::size_t>(i)]);
            h *= 0x100000001b3ull;
        }
        return static_cast<std::size_t>(h);
    }
};

inline std::string to_string(const Weight& w) { return w.to_string(); }

}  // namespace cstrig
