#include "doctest.h"

#include <cstdint>

#include "cstrig/kappa.hpp"

using cstrig::BigInt;
using cstrig::BigRational;
using cstrig::KappaPoly;
using cstrig::KappaRational;

namespace {

struct Rng {
    std::uint64_t s = 0x9e3779b97f4a7c15ull;
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

KappaPoly random_poly(Rng& rng, int maxdeg) {
    std::vector<BigInt> c;
    int d = static_cast<int>(rng.next() % (maxdeg + 1));
    for (int i = 0; i <= d; ++i) c.emplace_back(rng.small(9));
    return KappaPoly::from_coefficients(std::move(c));
}

KappaRational random_rat(Rng& rng) {
    KappaPoly den;
    do {
        den = random_poly(rng, 2);
    } while (den.is_zero());
    return KappaRational(random_poly(rng, 3), den);
}

}  // namespace

TEST_CASE("KappaPoly basics") {
    KappaPoly k = KappaPoly::variable();
    KappaPoly p = KappaPoly(1) + KappaPoly(17) * k;  // 1 + 17k
    CHECK(p.degree() == 1);
    CHECK(p.evaluate(BigRational(1)) == BigRational(18));
    CHECK(p.to_string() == "17 k + 1");
    CHECK((p * p).to_string() == "289 k^2 + 34 k + 1");
    CHECK(KappaPoly::gcd(p * p * KappaPoly(6), p * KappaPoly(4)) == p);
    CHECK(KappaPoly::div_exact(p * p, p) == p);
}

TEST_CASE("KappaRational canonical form") {
    KappaPoly k = KappaPoly::variable();
    // (k-1)/(1+17k) * (1+17k) == k-1
    KappaRational a(k - KappaPoly(1), KappaPoly(1) + KappaPoly(17) * k);
    KappaRational b(KappaPoly(1) + KappaPoly(17) * k);
    CHECK(a * b == KappaRational(k - KappaPoly(1)));

    // denominator sign and content normalization
    KappaRational c(KappaPoly(2), KappaPoly(-4) * k - KappaPoly(4));
    CHECK(c.den().leading() > BigInt(0));
    CHECK(c == KappaRational(KappaPoly(-1), KappaPoly(2) * k + KappaPoly(2)));

    // 2/(1+k) + (-2)/(1+k) == 0
    KappaRational d(KappaPoly(2), KappaPoly(1) + k);
    CHECK((d + (-d)).is_zero());

    // 7(k-1)/(1+17k) at k=1 vanishes
    KappaRational e(KappaPoly(7) * (k - KappaPoly(1)), KappaPoly(1) + KappaPoly(17) * k);
    CHECK(e.evaluate(BigRational(1)) == BigRational(0));
}

TEST_CASE("KappaRational field axioms (randomized)") {
    Rng rng;
    for (int i = 0; i < 200; ++i) {
        KappaRational a = random_rat(rng);
        KappaRational b = random_rat(rng);
        KappaRational c = random_rat(rng);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("substitution commutes with arithmetic") {
    Rng rng;
    const BigRational x(3, 2);
    for (int i = 0; i < 100; ++i) {
        KappaRational a = random_rat(rng);
        KappaRational b = random_rat(rng);
        BigRational da = a.den().evaluate(x);
        BigRational db = b.den().evaluate(x);
        if (da.is_zero() || db.is_zero()) continue;
        KappaRational s = a * b;
        if (s.den().evaluate(x).is_zero()) continue;
        CHECK(s.evaluate(x) == a.evaluate(x) * b.evaluate(x));
        KappaRational t = a + b;
        if (t.den().evaluate(x).is_zero()) continue;
        CHECK(t.evaluate(x) == a.evaluate(x) + b.evaluate(x));
    }
}

TEST_CASE("polynomial gcd divides and div_exact inverts (randomized)") {
    Rng rng;
    for (int i = 0; i < 200; ++i) {
        KappaPoly g = random_poly(rng, 3);
        KappaPoly a = random_poly(rng, 3);
        KappaPoly b = random_poly(rng, 3);
        if (g.is_zero() || a.is_zero() || b.is_zero()) continue;
        KappaPoly d = KappaPoly::gcd(g * a, g * b);
        // the common factor survives into the gcd, and the gcd divides exactly
        CHECK(KappaPoly::gcd(d, g.primitive_part()) == g.primitive_part());
        KappaPoly qa = KappaPoly::div_exact((g * a).primitive_part(), d);
        CHECK(qa * d == (g * a).primitive_part());
    }
}

TEST_CASE("pole reporting names the vanishing linear factor") {
    KappaPoly k = KappaPoly::variable();
    KappaRational a(KappaPoly(2), KappaPoly(1) + k);  // 2/(1+k)
    CHECK_THROWS_AS(a.evaluate(BigRational(-1)), cstrig::PoleError);
    try {
        a.evaluate(BigRational(-1));
    } catch (const cstrig::PoleError& e) {
        CHECK(std::string(e.what()).find("(k + 1)") != std::string::npos);
    }
}
