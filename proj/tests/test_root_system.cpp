#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "cstrig/root_system.hpp"

using namespace cstrig;

namespace {

RootSystem make(const char* name) { return RootSystem(AlgebraId::parse(name)); }

// Independent oracle: close the simple roots under all simple reflections,
// collecting the full root set, and count the positive half.
std::size_t closure_root_count(const RootSystem& rs) {
    std::set<Weight> all;
    std::vector<Weight> frontier;
    for (int i = 0; i < rs.rank(); ++i) {
        Weight alpha(rs.rank());
        for (int j = 0; j < rs.rank(); ++j) alpha[j] = static_cast<std::int16_t>(rs.cartan(i, j));
        all.insert(alpha);
        frontier.push_back(alpha);
    }
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (const Weight& w : frontier) {
            for (int i = 0; i < rs.rank(); ++i) {
                Weight u = w;
                rs.reflect_simple(u, i);
                if (all.insert(u).second) next.push_back(u);
            }
        }
        frontier = std::move(next);
    }
    REQUIRE(all.size() % 2 == 0);
    return all.size() / 2;
}

// Brute-force oracle for the dominant weights below lambda: scan a box of
// simple-root subtractions.
std::set<Weight> below_box_oracle(const RootSystem& rs, const Weight& lambda, int box) {
    const int r = rs.rank();
    std::set<Weight> out;
    std::vector<int> c(static_cast<std::size_t>(r), 0);
    for (;;) {
        Weight mu = lambda;
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                mu[j] = static_cast<std::int16_t>(mu[j] - c[static_cast<std::size_t>(i)] * rs.cartan(i, j));
        if (mu.is_dominant()) out.insert(mu);
        int i = 0;
        while (i < r && c[static_cast<std::size_t>(i)] == box) {
            c[static_cast<std::size_t>(i)] = 0;
            ++i;
        }
        if (i == r) break;
        ++c[static_cast<std::size_t>(i)];
    }
    return out;
}

}  // namespace

TEST_CASE("positive root counts per family") {
    CHECK(make("A1").positive_roots().size() == 1);
    CHECK(make("A2").positive_roots().size() == 3);
    CHECK(make("A5").positive_roots().size() == 15);
    CHECK(make("D4").positive_roots().size() == 12);
    CHECK(make("D5").positive_roots().size() == 20);
    CHECK(make("E6").positive_roots().size() == 36);
    RootSystem e7 = make("E7");
    CHECK(e7.positive_roots().size() == 63);
    CHECK(closure_root_count(e7) == 63);
    CHECK(closure_root_count(make("E6")) == 36);
    CHECK(closure_root_count(make("D5")) == 20);
}

TEST_CASE("all roots have squared length 2") {
    for (const char* name : {"A3", "D4", "E6", "E7"}) {
        RootSystem rs = make(name);
        for (const PositiveRoot& alpha : rs.positive_roots())
            CHECK(rs.inner_product(alpha.labels, alpha.labels) == BigRational(2));
    }
}

TEST_CASE("gram matrix inverts the Cartan matrix") {
    for (const char* name : {"A2", "A4", "D4", "E6", "E7"}) {
        RootSystem rs = make(name);
        const int r = rs.rank();
        for (int i = 0; i < r; ++i) {
            for (int j = 0; j < r; ++j) {
                BigRational s(0);
                for (int k = 0; k < r; ++k)
                    s += rs.inner_product(Weight::fundamental(r, i), Weight::fundamental(r, k)) *
                         BigRational(rs.cartan(k, j));
                CHECK(s == BigRational(i == j ? 1 : 0));
            }
        }
    }
}

TEST_CASE("E7 inner products pin the numbering convention") {
    RootSystem rs = make("E7");
    Weight l1 = Weight::fundamental(7, 0);
    Weight l7 = Weight::fundamental(7, 6);
    CHECK(rs.inner_product(l1, l1) == BigRational(2));
    CHECK(rs.inner_product(l7, l7) == BigRational(3, 2));
    CHECK(rs.inner_product(l1, rs.rho()) == BigRational(17));
    CHECK(rs.inner_product(l7, rs.rho()) == BigRational(27, 2));
    CHECK(rs.inner_product(Weight::zero(7), l1) == BigRational(0));
    CHECK_THROWS(rs.inner_product(Weight::zero(6), l1));
}

TEST_CASE("rho pairs to 1 with every simple root") {
    for (const char* name : {"A3", "D4", "E6", "E7"}) {
        RootSystem rs = make(name);
        for (const PositiveRoot& alpha : rs.positive_roots())
            if (alpha.height == 1) CHECK(rs.root_pairing(rs.rho(), alpha) == 1);
    }
}

TEST_CASE("orbits: enumeration matches the stabilizer formula") {
    RootSystem e7 = make("E7");
    CHECK(e7.weyl_order() == 2903040);
    CHECK(e7.orbit(Weight::zero(7)) == std::vector<Weight>{Weight::zero(7)});

    const std::uint64_t expected[7] = {126, 576, 2016, 10080, 4032, 756, 56};
    for (int i = 0; i < 7; ++i) {
        Weight li = Weight::fundamental(7, i);
        CHECK(e7.orbit_size(li) == expected[i]);
        CHECK(e7.orbit(li).size() == expected[i]);
    }

    for (const char* name : {"A2", "A3", "D4", "D5", "E6"}) {
        RootSystem rs = make(name);
        for (int i = 0; i < rs.rank(); ++i) {
            Weight li = Weight::fundamental(rs.rank(), i);
            CHECK(rs.orbit(li).size() == rs.orbit_size(li));
        }
        Weight two = Weight::rho(rs.rank());
        CHECK(rs.orbit(two).size() == rs.weyl_order());  // regular weight
    }
    CHECK_THROWS(e7.orbit(Weight{0, 0, 0, 0, 0, 0, -1}));
}

TEST_CASE("dominant representative") {
    RootSystem e7 = make("E7");
    Weight l1 = Weight::fundamental(7, 0);

    // dominant inputs are fixed
    CHECK(e7.dominant_representative(l1).first == l1);

    // every orbit element maps back to the orbit top
    for (int i = 0; i < 7; ++i) {
        Weight li = Weight::fundamental(7, i);
        for (const Weight& w : e7.orbit(li)) CHECK(e7.dominant_representative(w).first == li);
    }

    // the negative of a simple root lands on the highest root, which for E7
    // is the first fundamental weight
    for (const PositiveRoot& alpha : e7.positive_roots()) {
        if (alpha.height != 1) continue;
        CHECK(e7.dominant_representative(-alpha.labels).first == l1);
    }

    // orbit constancy under a single reflection
    Weight w{1, 0, 2, 0, -1, 3, 0};
    Weight rep = e7.dominant_representative(w).first;
    for (int i = 0; i < 7; ++i) {
        Weight u = w;
        e7.reflect_simple(u, i);
        CHECK(e7.dominant_representative(u).first == rep);
    }

    // parity tracks the determinant of the group element (well defined away
    // from the walls): one reflection of a regular weight flips it, two do not
    Weight rho = e7.rho();
    for (int i = 0; i < 7; ++i) {
        Weight u = rho;
        e7.reflect_simple(u, i);
        CHECK(e7.dominant_representative(u) == std::make_pair(rho, -1));
        for (int j = 0; j < 7; ++j) {
            Weight v = u;
            e7.reflect_simple(v, j);
            if (v == rho) continue;
            CHECK(e7.dominant_representative(v) == std::make_pair(rho, 1));
        }
    }
}

TEST_CASE("dominant weights below") {
    RootSystem e7 = make("E7");
    CHECK(e7.dominant_weights_below(Weight::zero(7)) == std::vector<Weight>{Weight::zero(7)});
    CHECK(e7.dominant_weights_below(Weight{1, 0, 0, 0, 0, 0, 0}) ==
          std::vector<Weight>{Weight{1, 0, 0, 0, 0, 0, 0}, Weight::zero(7)});
    CHECK(e7.dominant_weights_below(Weight{0, 0, 0, 0, 0, 0, 2}) ==
          std::vector<Weight>{Weight{0, 0, 0, 0, 0, 0, 2}, Weight{0, 0, 0, 0, 0, 1, 0},
                              Weight{1, 0, 0, 0, 0, 0, 0}, Weight::zero(7)});

    // topological order: no later weight dominates an earlier one
    Weight top{0, 0, 0, 1, 0, 0, 1};
    std::vector<Weight> below = e7.dominant_weights_below(top);
    for (std::size_t i = 0; i < below.size(); ++i)
        for (std::size_t j = i + 1; j < below.size(); ++j)
            CHECK_FALSE((e7.dominance_leq(below[i], below[j]) && below[i] != below[j]));

    // brute-force box oracle on small ranks
    for (const char* name : {"A2", "A3", "D4"}) {
        RootSystem rs = make(name);
        Weight l0 = Weight::fundamental(rs.rank(), 0);
        Weight lr = Weight::fundamental(rs.rank(), rs.rank() - 1);
        for (Weight lambda : {2 * l0, l0 + lr, 2 * lr, Weight::rho(rs.rank())}) {
            std::vector<Weight> got = rs.dominant_weights_below(lambda);
            std::set<Weight> got_set(got.begin(), got.end());
            CHECK(got_set.size() == got.size());
            CHECK(got_set == below_box_oracle(rs, lambda, 12));
        }
    }
}

TEST_CASE("Weyl dimension formula") {
    RootSystem e7 = make("E7");
    CHECK(e7.weyl_dimension(Weight::zero(7)) == BigInt(1));
    const long long dims[7] = {133, 912, 8645, 365750, 27664, 1539, 56};
    for (int i = 0; i < 7; ++i)
        CHECK(e7.weyl_dimension(Weight::fundamental(7, i)) == BigInt(dims[i]));

    RootSystem a2 = make("A2");
    CHECK(a2.weyl_dimension(Weight{1, 1}) == BigInt(8));
    CHECK(a2.weyl_dimension(Weight{3, 0}) == BigInt(10));
    RootSystem d4 = make("D4");
    CHECK(d4.weyl_dimension(Weight{1, 0, 0, 0}) == BigInt(8));
    CHECK(d4.weyl_dimension(Weight{0, 1, 0, 0}) == BigInt(28));
}

TEST_CASE("algebra validation") {
    CHECK_THROWS(AlgebraId::parse("B3"));
    CHECK_THROWS(AlgebraId::parse("E8"));
    CHECK_THROWS(AlgebraId::parse("Ax"));
    CHECK_THROWS(RootSystem(AlgebraId{Family::D, 2}));
    CHECK_THROWS(RootSystem(AlgebraId{Family::A, 30}));
    CHECK(AlgebraId::parse("e7").to_string() == "E7");
}
