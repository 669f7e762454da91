#include "doctest.h"

#include <cstdint>
#include <string>

#include "cstrig/bigint.hpp"
#include "cstrig/rational.hpp"

using cstrig::BigInt;
using cstrig::BigRational;

namespace {

// deterministic xorshift generator for property tests
struct Rng {
    std::uint64_t s = 0x243f6a8885a308d3ull;
    std::uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    long long small(long long bound) {
        return static_cast<long long>(next() % (2 * bound + 1)) - bound;
    }
};

BigInt random_big(Rng& rng, int words) {
    BigInt v(0);
    BigInt base(1ll << 32);
    for (int i = 0; i < words; ++i) v = v * base + BigInt(static_cast<long long>(rng.next() & 0xffffffffu));
    if (rng.next() & 1) v = -v;
    return v;
}

}  // namespace

TEST_CASE("BigInt small arithmetic agrees with int64") {
    Rng rng;
    for (int i = 0; i < 2000; ++i) {
        long long a = rng.small(1'000'000'000);
        long long b = rng.small(1'000'000'000);
        CHECK(BigInt(a) + BigInt(b) == BigInt(a + b));
        CHECK(BigInt(a) - BigInt(b) == BigInt(a - b));
        CHECK(BigInt(a) * BigInt(b) == BigInt(a * b));
        if (b != 0) {
            CHECK(BigInt(a) / BigInt(b) == BigInt(a / b));
            CHECK(BigInt(a) % BigInt(b) == BigInt(a % b));
        }
        CHECK((BigInt(a) < BigInt(b)) == (a < b));
    }
}

TEST_CASE("BigInt ring identities on big values") {
    Rng rng;
    for (int i = 0; i < 300; ++i) {
        BigInt a = random_big(rng, 1 + static_cast<int>(rng.next() % 5));
        BigInt b = random_big(rng, 1 + static_cast<int>(rng.next() % 5));
        BigInt c = random_big(rng, 1 + static_cast<int>(rng.next() % 3));
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) {
            BigInt q, r;
            BigInt::divmod(a, b, q, r);
            CHECK(q * b + r == a);
            CHECK(BigInt::abs(r) < BigInt::abs(b));
        }
    }
}

TEST_CASE("BigInt decimal round trip") {
    Rng rng;
    CHECK(BigInt(0).to_string() == "0");
    CHECK(BigInt(-1).to_string() == "-1");
    CHECK(BigInt::from_string("123456789012345678901234567890").to_string() ==
          "123456789012345678901234567890");
    for (int i = 0; i < 200; ++i) {
        BigInt a = random_big(rng, 1 + static_cast<int>(rng.next() % 6));
        CHECK(BigInt::from_string(a.to_string()) == a);
    }
}

TEST_CASE("BigInt gcd and factorial sanity") {
    BigInt f(1);
    for (int i = 2; i <= 30; ++i) f *= BigInt(i);
    CHECK(f.to_string() == "265252859812191058636308480000000");
    CHECK(BigInt::gcd(BigInt(462), BigInt(1071)) == BigInt(21));
    CHECK(BigInt::gcd(f, BigInt(0)) == f);
    CHECK(BigInt::div_exact(f, BigInt(30)) * BigInt(30) == f);
}

TEST_CASE("BigRational canonical form and field axioms") {
    CHECK(BigRational(2, 4) == BigRational(1, 2));
    CHECK(BigRational(-2, -4) == BigRational(1, 2));
    CHECK(BigRational(2, -4) == BigRational(-1, 2));
    CHECK(BigRational(0, 7) == BigRational(0));
    CHECK(BigRational(0).den() == cstrig::BigInt(1));

    Rng rng;
    for (int i = 0; i < 500; ++i) {
        BigRational a(rng.small(50), 1 + (rng.next() % 30));
        BigRational b(rng.small(50), 1 + (rng.next() % 30));
        BigRational c(rng.small(50), 1 + (rng.next() % 30));
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == BigRational(0));
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
    CHECK(BigRational::from_string("-22/7") == BigRational(-22, 7));
    CHECK_THROWS(BigRational(1, 0));
}
