// Weight multiplicities via the Freudenthal recursion, products of characters
// in the orbit-sum basis, and the classical Clebsch-Gordan series by
// triangular peel-off.
#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cstrig/session.hpp"

namespace cstrig {

inline const DominantCharacter& Session::freudenthal(const Weight& lambda) {
    return memoize(characters_, lambda, [&] {
        if (store_) {
            if (auto hit = store_->load_multiplicities(lambda)) return std::move(*hit);
        }
        DominantCharacter value = compute_freudenthal(lambda);
        if (store_) store_->save_multiplicities(lambda, value);
        return value;
    });
}

// ((lambda+rho, lambda+rho) - (mu+rho, mu+rho)) m_mu
//     = 2 sum_{alpha > 0} sum_{k >= 1} (mu + k alpha, alpha) m_{mu + k alpha},
// processed down the dominance order so every multiplicity on the right is
// already known (the dominant representative of mu + k alpha sits strictly
// closer to lambda).
inline DominantCharacter Session::compute_freudenthal(const Weight& lambda) {
    const RootSystem& rs = rs_;
    const std::vector<Weight>& below = weights_below(lambda);
    const Weight rho = rs.rho();
    const long long det = rs.det();
    const long long norm_top = rs.inner_scaled(lambda, lambda);
    const long long norm_lr = rs.inner_scaled(lambda + rho, lambda + rho);

    DominantCharacter out;
    out.highest = lambda;
    out.mult.add(lambda, BigInt(1));

    for (std::size_t idx = 1; idx < below.size(); ++idx) {
        const Weight& mu = below[idx];
        BigInt acc(0);
        const long long norm_mu = rs.inner_scaled(mu, mu);
        for (const PositiveRoot& alpha : rs.positive_roots()) {
            const long long p = rs.root_pairing(mu, alpha);  // >= 0, mu dominant
            Weight w = mu;
            for (long long k = 1;; ++k) {
                // det * |mu + k alpha|^2, monotone in k
                long long norm_w = norm_mu + 2 * k * det * p + 2 * k * k * det;
                if (norm_w > norm_top) break;
                w = w + alpha.labels;
                Weight rep = rs.dominant_representative(w).first;
                const BigInt* m = nullptr;
                auto it = out.mult.terms().find(rep);
                if (it != out.mult.terms().end()) m = &it->second;
                if (m != nullptr) acc += *m * BigInt(p + 2 * k);
            }
        }
        long long denom_scaled = norm_lr - rs.inner_scaled(mu + rho, mu + rho);
        if (denom_scaled <= 0 || denom_scaled % det != 0)
            throw std::logic_error("freudenthal: bad denominator");
        BigInt mult = BigInt::div_exact(BigInt(2) * acc, BigInt(denom_scaled / det));
        if (mult.sign() <= 0) throw std::logic_error("freudenthal: non-positive multiplicity");
        out.mult.add(mu, std::move(mult));
    }
    return out;
}

// Pointwise product of two characters, re-expressed over dominant orbits.
// The smaller weight diagram is expanded in full; the other factor is probed
// through dominant representatives (multiplicities are Weyl invariant).
inline MonomialZ Session::char_product(const DominantCharacter& c1, const DominantCharacter& c2) {
    const RootSystem& rs = rs_;
    auto diagram_size = [&](const DominantCharacter& c) {
        std::uint64_t total = 0;
        for (const auto& [w, m] : c.mult.terms()) total += rs.orbit_size(w);
        return total;
    };
    const DominantCharacter& small = diagram_size(c1) <= diagram_size(c2) ? c1 : c2;
    const DominantCharacter& large = (&small == &c1) ? c2 : c1;

    std::vector<std::pair<Weight, const BigInt*>> diagram;
    for (const auto& [w, m] : small.mult.terms()) {
        for (const Weight& u : orbit(w)) diagram.emplace_back(u, &m);
    }

    const long long norm_large = rs.inner_scaled(large.highest, large.highest);
    MonomialZ out;
    for (const Weight& nu : weights_below(small.highest + large.highest)) {
        BigInt acc(0);
        for (const auto& [u, m] : diagram) {
            Weight d = nu - u;
            if (rs.inner_scaled(d, d) > norm_large) continue;
            Weight rep = rs.dominant_representative(d).first;
            auto it = large.mult.terms().find(rep);
            if (it != large.mult.terms().end()) acc += *m * it->second;
        }
        if (!acc.is_zero()) out.add(nu, std::move(acc));
    }
    return out;
}

inline const DecompositionSeries& Session::clebsch_gordan(const Weight& a, const Weight& b) {
    std::pair<Weight, Weight> key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    return memoize(cg_, key, [&] { return compute_clebsch_gordan(key.first, key.second); });
}

inline DecompositionSeries Session::compute_clebsch_gordan(const Weight& a, const Weight& b) {
    MonomialZ prod = char_product(freudenthal(a), freudenthal(b));
    DecompositionSeries series;
    series.a = a;
    series.b = b;
    for (const Weight& nu : weights_below(a + b)) {
        BigInt c = prod.coefficient(nu);
        if (c.is_zero()) continue;
        if (c.sign() < 0)
            throw std::logic_error("clebsch_gordan: peeled a non-positive coefficient at " +
                                   nu.to_string() + " (multiplicity bug)");
        prod -= freudenthal(nu).mult.scaled(c);
        series.terms.emplace(nu, std::move(c));
    }
    if (!prod.is_zero()) throw std::logic_error("clebsch_gordan: nonzero remainder");
    return series;
}

// sum of N(mu) dim(mu); equals dim(a) dim(b) for a valid series
inline BigInt series_dimension(const RootSystem& rs, const DecompositionSeries& s) {
    BigInt total(0);
    for (const auto& [w, n] : s.terms) total += n * rs.weyl_dimension(w);
    return total;
}

// sum of mult(mu) |orbit(mu)|; equals the Weyl dimension for a character
inline BigInt character_dimension(const RootSystem& rs, const DominantCharacter& c) {
    BigInt total(0);
    for (const auto& [w, m] : c.mult.terms()) total += m * BigInt(rs.orbit_size(w));
    return total;
}

}  // namespace cstrig
