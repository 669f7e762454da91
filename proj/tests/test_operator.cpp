#include "doctest.h"

#include <vector>

#include "cstrig/operator.hpp"
#include "cstrig/parse.hpp"
#include "cstrig/session.hpp"

using namespace cstrig;

namespace {

KappaRational kr_linear(long long c0, long long c1) {
    return KappaRational(KappaPoly::linear(BigInt(c0), BigInt(c1)));
}

void check_act_invariants(Session& s, const Weight& lambda) {
    const MonomialK& act = s.act_on_monomial(lambda);
    for (const auto& [mu, c] : act.terms()) {
        CHECK(s.rs().dominance_leq(mu, lambda));  // triangular
        if (mu == lambda) {
            CHECK(c == s.eigenvalue(lambda).value);
        } else {
            // off-diagonal terms are kappa times a non-negative integer
            CHECK(c.is_polynomial());
            CHECK(c.num().degree() == 1);
            CHECK(c.num().coefficient(0).is_zero());
            CHECK(c.den().is_one());
            CHECK(c.num().coefficient(1) > BigInt(0));
        }
    }
}

}  // namespace

TEST_CASE("eigenvalues") {
    Session s(AlgebraId::parse("E7"));
    CHECK(s.eigenvalue(Weight::zero(7)).value.is_zero());
    CHECK(s.eigenvalue(Weight{0, 0, 0, 0, 0, 0, 1}).value == kr_linear(3, 54));
    CHECK(s.eigenvalue(Weight{1, 0, 0, 0, 0, 0, 0}).value == kr_linear(4, 68));
    CHECK(s.eigenvalue(Weight{1, 0, 0, 0, 0, 0, 0}).value.evaluate(BigRational(1)) ==
          BigRational(72));

    Session a2(AlgebraId::parse("A2"));
    // 2(m, m + 2 k rho) for m = l1: 2*(2/3) + 4k*1
    KappaRational e1 = a2.eigenvalue(Weight{1, 0}).value;
    CHECK(e1.evaluate(BigRational(0)) == BigRational(4, 3));
    CHECK(e1.evaluate(BigRational(1)) == BigRational(16, 3));
}

TEST_CASE("action on orbit sums: E7 spot values") {
    Session s(AlgebraId::parse("E7"));

    CHECK(s.act_on_monomial(Weight::zero(7)).is_zero());

    // adjoint: 63 root pairs, each feeding 8k into the zero weight
    const MonomialK& act1 = s.act_on_monomial(Weight{1, 0, 0, 0, 0, 0, 0});
    CHECK(act1.size() == 2);
    CHECK(act1.coefficient(Weight{1, 0, 0, 0, 0, 0, 0}) == kr_linear(4, 68));
    CHECK(act1.coefficient(Weight::zero(7)) == kr_linear(0, 504));

    // the 56 is alone in its string
    const MonomialK& act7 = s.act_on_monomial(Weight{0, 0, 0, 0, 0, 0, 1});
    CHECK(act7.size() == 1);
    CHECK(act7.coefficient(Weight{0, 0, 0, 0, 0, 0, 1}) == kr_linear(3, 54));

    for (Weight w : {Weight{0, 0, 0, 0, 0, 0, 2}, Weight{0, 0, 0, 1, 0, 0, 0},
                     Weight{1, 0, 0, 0, 0, 0, 1}})
        check_act_invariants(s, w);
}

TEST_CASE("fast action equals the full-orbit reference route") {
    for (const char* name : {"A2", "A3", "D4"}) {
        Session s(AlgebraId::parse(name));
        const int r = s.rank();
        std::vector<Weight> batch{Weight::zero(r)};
        for (int i = 0; i < r; ++i) {
            batch.push_back(Weight::fundamental(r, i));
            for (int j = i; j < r; ++j)
                batch.push_back(Weight::fundamental(r, i) + Weight::fundamental(r, j));
        }
        for (const Weight& w : batch) CHECK(s.act_on_monomial(w) == s.act_on_monomial_by_orbit(w));
    }
    Session e7(AlgebraId::parse("E7"));
    for (Weight w : {Weight{0, 0, 0, 0, 0, 0, 1}, Weight{1, 0, 0, 0, 0, 0, 0},
                     Weight{0, 1, 0, 0, 0, 0, 0}, Weight{0, 0, 0, 0, 0, 1, 0},
                     Weight{0, 0, 0, 0, 0, 0, 2}})
        CHECK(e7.act_on_monomial(w) == e7.act_on_monomial_by_orbit(w));
}

TEST_CASE("A1 operator reduces to the classical one-variable form") {
    Session s(AlgebraId::parse("A1"));
    const CSOperator& op = s.cs_operator();
    CHECK(promote(op.a_at(0, 0)) == parse_zk_expression("z1^2 - 4", 1));
    CHECK(promote(op.b0[0]) == parse_zk_expression("z1", 1));
    CHECK(promote(op.b1[0]) == parse_zk_expression("2 z1", 1));

    // second-order action: Delta(z^2) = (4 + 4k) z^2 - 8
    ZPolyK res = apply(op, parse_zk_expression("z1^2", 1));
    CHECK(res == parse_zk_expression("(4 + 4 k) z1^2 - 8", 1));
}

TEST_CASE("operator coefficients: symmetry and the b7 list") {
    Session s(AlgebraId::parse("E7"));
    const CSOperator& op = s.cs_operator();
    for (int j = 0; j < 7; ++j)
        for (int k = 0; k < 7; ++k) CHECK(op.a_at(j, k) == op.a_at(k, j));

    CHECK(promote(op.b0[6]) == parse_zk_expression("3 z7", 7));
    CHECK(promote(op.b1[6]) == parse_zk_expression("54 z7", 7));

    // apply to a constant kills it; apply to z1 gives the first b list
    CHECK(apply(op, ZPolyK::constant(7, KappaRational(5))).is_zero());
    CHECK(apply(op, parse_zk_expression("z1", 7)) ==
          parse_zk_expression("-28 + 4 z1 + k (28 + 68 z1)", 7));
    CHECK(apply(op, parse_zk_expression("z1 - 7", 7)) ==
          parse_zk_expression("(4 + 68 k) (z1 - 7) + 504 k", 7));
}

TEST_CASE("route equivalence past second order") {
    Session s(AlgebraId::parse("E7"));
    const CSOperator& op = s.cs_operator();
    for (Weight lambda : {Weight{0, 0, 0, 0, 0, 0, 3}, Weight{1, 0, 0, 0, 0, 0, 2},
                          Weight{0, 1, 0, 0, 0, 1, 0}}) {
        ZPolyK image = apply(op, promote(s.monomial_to_z(lambda)));
        CHECK(s.z_to_monomials(image) == s.act_on_monomial(lambda));
        check_act_invariants(s, lambda);
    }
}

TEST_CASE("route equivalence on small algebras") {
    for (const char* name : {"A2", "A3", "D4"}) {
        Session s(AlgebraId::parse(name));
        const CSOperator& op = s.cs_operator();
        const int r = s.rank();
        std::vector<Weight> batch{Weight::zero(r)};
        for (int i = 0; i < r; ++i) {
            batch.push_back(Weight::fundamental(r, i));
            for (int j = i; j < r; ++j)
                batch.push_back(Weight::fundamental(r, i) + Weight::fundamental(r, j));
        }
        for (const Weight& lambda : batch) {
            ZPolyK image = apply(op, promote(s.monomial_to_z(lambda)));
            MonomialK via_z = s.z_to_monomials(image);
            CHECK(via_z == s.act_on_monomial(lambda));
        }
    }
}
