// Session: a root system together with memoized results (orbits, weight
// multiplicities, basis conversions, operator actions, eigenpolynomials) and
// an optional persistent record store.
//
// All cached values are immutable once inserted and node-based, so references
// handed out stay valid for the session lifetime. The memo tables behave as
// idempotent concurrent caches: computation happens outside the lock, a lost
// insertion race just discards the duplicate.
#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cstrig/monomial.hpp"
#include "cstrig/root_system.hpp"
#include "cstrig/zpolynomial.hpp"

namespace cstrig {

// Dominant weight multiplicities of one irreducible representation.
struct DominantCharacter {
    Weight highest;
    MonomialZ mult;  // dominant weight -> positive multiplicity
};

// chi_a * chi_b = sum над mu of N(mu) chi_mu with positive integer N
struct DecompositionSeries {
    Weight a, b;
    std::map<Weight, BigInt> terms;
};

// The differential operator in z coordinates:
//   sum_{j,k} a_jk dz_j dz_k + sum_j (b0_j + k b1_j) dz_j
struct CSOperator {
    int rank = 0;
    std::vector<ZPolyQ> a;   // row-major rank x rank, symmetric
    std::vector<ZPolyQ> b0;  // length rank
    std::vector<ZPolyQ> b1;  // length rank

    const ZPolyQ& a_at(int j, int k) const { return a[static_cast<std::size_t>(j * rank + k)]; }
};

struct EigenvalueFn {
    Weight m;
    KappaRational value;  // 2 (m, m + 2 k rho), linear in k
};

// Eigenpolynomial with leading M-coefficient 1, plus its z-coordinate form.
struct JacobiPolynomial {
    Weight m;
    MonomialK coeffs;
    ZPolyK zform;
};

struct GeneralizedCGSeries {
    Weight a, b;
    std::map<Weight, KappaRational> terms;
};

// Persistence hook implemented by the disk cache; see cache.hpp.
class RecordStore {
public:
    virtual ~RecordStore() = default;
    virtual std::optional<DominantCharacter> load_multiplicities(const Weight& key) = 0;
    virtual void save_multiplicities(const Weight& key, const DominantCharacter& value) = 0;
    virtual std::optional<ZPolyQ> load_poly(const std::string& kind, const Weight& key, int nvars) = 0;
    virtual void save_poly(const std::string& kind, const Weight& key, const ZPolyQ& value) = 0;
    virtual std::optional<JacobiPolynomial> load_jacobi(const Weight& key) = 0;
    virtual void save_jacobi(const Weight& key, const JacobiPolynomial& value) = 0;
};

class Session {
public:
    explicit Session(AlgebraId id, std::shared_ptr<RecordStore> store = nullptr)
        : rs_(id), store_(std::move(store)) {}

    const RootSystem& rs() const { return rs_; }
    int rank() const { return rs_.rank(); }

    // det * (w, rho): a dominance-compatible integer grading of the weight
    // lattice ((w,rho) strictly drops along positive-root subtractions).
    long long rho_height(const Weight& w) const { return rs_.inner_scaled(w, rs_.rho()); }

    const std::vector<Weight>& orbit(const Weight& lambda) {
        return memoize(orbits_, lambda, [&] { return rs_.orbit(lambda); });
    }

    const std::vector<Weight>& weights_below(const Weight& lambda) {
        return memoize(below_, lambda, [&] { return rs_.dominant_weights_below(lambda); });
    }

    // characters module
    const DominantCharacter& freudenthal(const Weight& lambda);
    MonomialZ char_product(const DominantCharacter& c1, const DominantCharacter& c2);
    const DecompositionSeries& clebsch_gordan(const Weight& a, const Weight& b);

    // zbasis module
    const ZPolyQ& char_to_z(const Weight& mu);
    const ZPolyQ& monomial_to_z(const Weight& lambda);
    template <typename C>
    MonomialCombination<C> z_to_monomials(const ZPolynomial<C>& p);

    // csoperator module
    const MonomialK& act_on_monomial(const Weight& lambda);
    MonomialK act_on_monomial_by_orbit(const Weight& lambda);  // reference route
    EigenvalueFn eigenvalue(const Weight& m) const;
    const CSOperator& cs_operator();

    // jacobi module
    const JacobiPolynomial& jacobi(const Weight& m);
    GeneralizedCGSeries generalized_cg(const Weight& a, const Weight& b);

private:
    RootSystem rs_;
    std::shared_ptr<RecordStore> store_;
    std::mutex mutex_;

    std::map<Weight, std::vector<Weight>> orbits_;
    std::map<Weight, std::vector<Weight>> below_;
    std::map<Weight, DominantCharacter> characters_;
    std::map<std::pair<Weight, Weight>, DecompositionSeries> cg_;
    std::map<Weight, ZPolyQ> char_z_;
    std::map<Weight, ZPolyQ> monomial_z_;
    std::map<Weight, MonomialK> act_;
    std::map<Weight, JacobiPolynomial> jacobi_;
    std::unique_ptr<CSOperator> operator_;

    template <typename Map, typename Key, typename Fn>
    const typename Map::mapped_type& memoize(Map& map, const Key& key, Fn&& compute) {
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto it = map.find(key);
            if (it != map.end()) return it->second;
        }
        auto value = compute();
        std::lock_guard<std::mutex> lock(mutex_);
        auto [it, inserted] = map.emplace(key, std::move(value));
        return it->second;
    }

    // defined in the module headers
    DominantCharacter compute_freudenthal(const Weight& lambda);
    DecompositionSeries compute_clebsch_gordan(const Weight& a, const Weight& b);
    ZPolyQ compute_char_to_z(const Weight& mu);
    ZPolyQ compute_monomial_to_z(const Weight& lambda);
    MonomialK compute_act(const Weight& lambda);
    CSOperator compute_operator();
    JacobiPolynomial compute_jacobi(const Weight& m);
};

}  // namespace cstrig
