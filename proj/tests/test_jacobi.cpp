#include "doctest.h"

#include <map>
#include <thread>
#include <vector>

#include "cstrig/jacobi.hpp"
#include "cstrig/parse.hpp"
#include "cstrig/session.hpp"

using namespace cstrig;

namespace {

KappaRational kr(const char* src) {
    ZPolyK p = parse_zk_expression(src, 1);
    REQUIRE(p.term_count() <= 1);
    return p.coefficient(Weight{0});
}

// --- independent A1 solver ---------------------------------------------------
//
// Delta M_m = (m^2 + 2 k m) M_m + 4 k m (M_{m-2} + M_{m-4} + ...), derived by
// hand from the pair rule for the single root. Solve the triangular system
// directly on coefficient vectors indexed by 0..m.

using A1Poly = std::map<int, KappaRational>;  // degree -> coefficient, in the M basis

KappaRational a1_eps(int m) {
    return KappaRational(KappaPoly::linear(BigInt(m) * BigInt(m), BigInt(2 * m)));
}

A1Poly a1_act(int m) {
    A1Poly out;
    if (m == 0) return out;
    out[m] = a1_eps(m);
    for (int d = m - 2; d >= 0; d -= 2)
        out[d] = KappaRational(KappaPoly::linear(BigInt(0), BigInt(4 * m)));
    return out;
}

A1Poly a1_solve(int m) {
    A1Poly c;
    std::map<int, KappaRational> pending;
    c[m] = KappaRational(1);
    for (int nu = m; nu >= 0; --nu) {
        KappaRational coef;
        if (nu == m) {
            coef = KappaRational(1);
        } else {
            auto it = pending.find(nu);
            if (it == pending.end() || it->second.is_zero()) continue;
            coef = it->second / (a1_eps(m) - a1_eps(nu));
        }
        c[nu] = coef;
        for (const auto& [d, t] : a1_act(nu)) {
            if (d == nu) continue;
            auto [pit, inserted] = pending.try_emplace(d, KappaRational(0));
            pit->second += t * coef;
        }
    }
    return c;
}

// M_a M_b in the A1 orbit-sum basis
A1Poly a1_mmul(const A1Poly& p, const A1Poly& q) {
    A1Poly out;
    auto add = [&out](int d, const KappaRational& v) {
        auto [it, inserted] = out.try_emplace(d, KappaRational(0));
        it->second += v;
        if (it->second.is_zero()) out.erase(it);
    };
    for (const auto& [a, ca] : p) {
        for (const auto& [b, cb] : q) {
            KappaRational v = ca * cb;
            if (a == 0 || b == 0) {
                add(a + b, v);
            } else if (a == b) {
                add(2 * a, v);
                add(0, v + v);
            } else {
                add(a + b, v);
                add(std::abs(a - b), v);
            }
        }
    }
    return out;
}

}  // namespace

TEST_CASE("first-order eigenpolynomials on E7") {
    Session s(AlgebraId::parse("E7"));

    const JacobiPolynomial& p7 = s.jacobi(Weight{0, 0, 0, 0, 0, 0, 1});
    CHECK(p7.zform == parse_zk_expression("z7", 7));

    const JacobiPolynomial& p1 = s.jacobi(Weight{1, 0, 0, 0, 0, 0, 0});
    CHECK(p1.zform == parse_zk_expression("z1 + (7 (-1 + k))/((1 + 17 k))", 7));
    CHECK(p1.coeffs.coefficient(Weight{1, 0, 0, 0, 0, 0, 0}) == KappaRational(1));
    CHECK(p1.coeffs.coefficient(Weight::zero(7)) == kr("(126 k)/((1 + 17 k))"));
}

TEST_CASE("second-order eigenpolynomial with the printed corner entry") {
    Session s(AlgebraId::parse("E7"));
    const JacobiPolynomial& p = s.jacobi(Weight{0, 0, 0, 0, 0, 0, 2});
    CHECK(p.zform ==
          parse_zk_expression("z7^2 + (-2 z6)/((1 + k)) + (-12 k z1)/((1 + k) (1 + 5 k))"
                              " + (-2 (1 + 59 k^2))/((1 + k) (1 + 5 k) (1 + 9 k))",
                              7));
}

TEST_CASE("eigen residual vanishes identically") {
    Session s(AlgebraId::parse("E7"));
    const CSOperator& op = s.cs_operator();
    for (Weight m : {Weight{0, 0, 0, 0, 0, 0, 1}, Weight{1, 0, 0, 0, 0, 0, 0},
                     Weight{0, 0, 0, 0, 0, 0, 2}, Weight{0, 1, 0, 0, 0, 0, 0}}) {
        const JacobiPolynomial& p = s.jacobi(m);
        ZPolyK residual = apply(op, p.zform) - p.zform.scaled(s.eigenvalue(m).value);
        CHECK(residual.is_zero());
    }
}

TEST_CASE("specialization endpoints and poles") {
    Session s(AlgebraId::parse("E7"));
    for (Weight m : {Weight{1, 0, 0, 0, 0, 0, 0}, Weight{0, 0, 0, 0, 0, 0, 2},
                     Weight{0, 0, 0, 0, 0, 1, 0}}) {
        const JacobiPolynomial& p = s.jacobi(m);
        CHECK(specialize(p, BigRational(1)) == s.char_to_z(m));
        CHECK(specialize(p, BigRational(0)) == s.monomial_to_z(m));
    }
    // the kappa-free entry stays itself at any coupling
    CHECK(specialize(s.jacobi(Weight{0, 0, 0, 0, 0, 0, 1}), BigRational(1, 2)) ==
          substitute_kappa(parse_zk_expression("z7", 7), BigRational(0)));

    // structural pole of the second-order entry
    CHECK_THROWS_AS(specialize(s.jacobi(Weight{0, 0, 0, 0, 0, 0, 2}), BigRational(-1)),
                    PoleError);
}

TEST_CASE("A1 eigenpolynomials match the hand-built solver to degree 8") {
    Session s(AlgebraId::parse("A1"));
    for (int m = 0; m <= 8; ++m) {
        const JacobiPolynomial& p = s.jacobi(Weight{m});
        A1Poly oracle = a1_solve(m);
        std::size_t nonzero = 0;
        for (const auto& [d, c] : oracle) {
            if (c.is_zero()) continue;
            ++nonzero;
            CHECK(p.coeffs.coefficient(Weight{d}) == c);
        }
        CHECK(p.coeffs.size() == nonzero);
    }
}

TEST_CASE("A1 products satisfy a three-term recurrence") {
    // P_1 P_m = P_{m+1} + g_m P_{m-1} with a single lower term
    for (int m = 1; m <= 7; ++m) {
        A1Poly q = a1_mmul(a1_solve(1), a1_solve(m));
        A1Poly top = a1_solve(m + 1);
        for (const auto& [d, c] : top) {
            auto [it, inserted] = q.try_emplace(d, KappaRational(0));
            it->second -= c;
            if (it->second.is_zero()) q.erase(it);
        }
        auto git = q.find(m - 1);
        REQUIRE(git != q.end());
        KappaRational g = git->second;
        A1Poly low = a1_solve(m - 1);
        for (const auto& [d, c] : low) {
            auto [it, inserted] = q.try_emplace(d, KappaRational(0));
            it->second -= c * g;
            if (it->second.is_zero()) q.erase(it);
        }
        CHECK(q.empty());
    }

    // and the library's generalized series on A1 agrees with the oracle g_m
    Session s(AlgebraId::parse("A1"));
    for (int m = 1; m <= 7; ++m) {
        GeneralizedCGSeries series = s.generalized_cg(Weight{1}, Weight{m});
        CHECK(series.terms.size() == 2);
        CHECK(series.terms.at(Weight{m + 1}) == KappaRational(1));

        A1Poly q = a1_mmul(a1_solve(1), a1_solve(m));
        A1Poly top = a1_solve(m + 1);
        for (const auto& [d, c] : top) {
            auto [it, inserted] = q.try_emplace(d, KappaRational(0));
            it->second -= c;
            if (it->second.is_zero()) q.erase(it);
        }
        CHECK(series.terms.at(Weight{m - 1}) == q.at(m - 1));
    }
}

TEST_CASE("third-order eigenpolynomial: residual and endpoints") {
    Session s(AlgebraId::parse("E7"));
    Weight m{0, 0, 0, 0, 0, 0, 3};
    const JacobiPolynomial& p = s.jacobi(m);
    CHECK(p.coeffs.coefficient(m) == KappaRational(1));
    ZPolyK residual = apply(s.cs_operator(), p.zform) - p.zform.scaled(s.eigenvalue(m).value);
    CHECK(residual.is_zero());
    CHECK(specialize(p, BigRational(1)) == s.char_to_z(m));
    CHECK(specialize(p, BigRational(0)) == s.monomial_to_z(m));
}

TEST_CASE("sessions are safe to share across threads") {
    Session s(AlgebraId::parse("A3"));
    Session reference(AlgebraId::parse("A3"));
    std::vector<Weight> batch;
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j)
            batch.push_back(Weight::fundamental(3, i) + Weight::fundamental(3, j));

    std::vector<std::thread> workers;
    for (int t = 0; t < 4; ++t) {
        workers.emplace_back([&s, &batch, t] {
            for (std::size_t i = t % 2; i < batch.size(); ++i) {
                (void)s.jacobi(batch[i]);
                (void)s.freudenthal(batch[i]);
                (void)s.monomial_to_z(batch[i]);
            }
        });
    }
    for (auto& w : workers) w.join();
    for (const Weight& w : batch) {
        CHECK(s.jacobi(w).zform == reference.jacobi(w).zform);
        CHECK(s.freudenthal(w).mult == reference.freudenthal(w).mult);
    }
}

TEST_CASE("generalized series: trivial factor and the 56 x 56 table entry") {
    Session s(AlgebraId::parse("E7"));
    Weight l7{0, 0, 0, 0, 0, 0, 1};

    GeneralizedCGSeries trivial = s.generalized_cg(Weight::zero(7), l7);
    CHECK(trivial.terms.size() == 1);
    CHECK(trivial.terms.at(l7) == KappaRational(1));

    GeneralizedCGSeries s77 = s.generalized_cg(l7, l7);
    CHECK(s77.terms.size() == 4);
    CHECK(s77.terms.at(Weight{0, 0, 0, 0, 0, 0, 2}) == KappaRational(1));
    CHECK(s77.terms.at(Weight{0, 0, 0, 0, 0, 1, 0}) == kr("(2)/((1 + k))"));
    CHECK(s77.terms.at(Weight{1, 0, 0, 0, 0, 0, 0}) ==
          kr("(12 (1 + 4 k))/((1 + 5 k) (1 + 9 k))"));
    CHECK(s77.terms.at(Weight::zero(7)) ==
          kr("(56 (1 + 4 k) (1 + 8 k))/((1 + 9 k) (1 + 13 k) (1 + 17 k))"));

    // support equality with the classical series; k = 1 recovers the integers
    const DecompositionSeries& classical = s.clebsch_gordan(l7, l7);
    CHECK(s77.terms.size() == classical.terms.size());
    for (const auto& [w, n] : classical.terms) {
        CHECK(s77.terms.count(w) == 1);
        CHECK(s77.terms.at(w).evaluate(BigRational(1)) == BigRational(n));
    }

    // denominators keep positive coefficients
    for (const auto& [w, c] : s77.terms) {
        const KappaPoly& den = c.den();
        for (int d = 0; d <= den.degree(); ++d) CHECK(den.coefficient(d) > BigInt(0));
    }
}
