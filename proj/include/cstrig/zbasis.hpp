// Conversions between the polynomial ring in z_1..z_r and the orbit-sum /
// character bases.
//
// The triangular structure used throughout: under the rho-height grading
// (w -> (w, rho), strictly decreasing along positive-root subtractions) the
// z-form of M_lambda has the single top term z^lambda with coefficient 1.
// Note the plain total z-degree is NOT dominance compatible (already for E7,
// M_{lambda_5} contains the degree-2 monomial z1 z7), so eliminations here
// grade by rho-height, never by total degree.
#pragma once

#include <stdexcept>
#include <utility>

#include "cstrig/characters.hpp"
#include "cstrig/session.hpp"

namespace cstrig {

namespace detail {
template <typename C>
C coef_from_rational(const BigRational& q) {
    if constexpr (std::is_same_v<C, BigRational>) return q;
    else return C(q);
}
}  // namespace detail

inline const ZPolyQ& Session::char_to_z(const Weight& mu) {
    return memoize(char_z_, mu, [&] {
        if (store_) {
            if (auto hit = store_->load_poly("char_z", mu, rank())) return std::move(*hit);
        }
        ZPolyQ value = compute_char_to_z(mu);
        if (store_) store_->save_poly("char_z", mu, value);
        return value;
    });
}

// chi_mu = chi_{mu - lambda_i} * z_i - sum_{nu < mu} N(nu) chi_nu, where the
// N come from the Clebsch-Gordan series of (mu - lambda_i) x lambda_i and i
// is the smallest index with a positive label.
inline ZPolyQ Session::compute_char_to_z(const Weight& mu) {
    const int r = rank();
    if (!mu.is_dominant()) throw std::invalid_argument("char_to_z: weight not dominant");
    if (mu.is_zero()) return ZPolyQ::constant(r, BigRational(1));
    int i = 0;
    while (mu[i] == 0) ++i;
    Weight rest = mu;
    rest[i] = static_cast<std::int16_t>(rest[i] - 1);
    const DecompositionSeries& series = clebsch_gordan(rest, rs_.fundamental_weight(i));
    auto top = series.terms.find(mu);
    if (top == series.terms.end() || !top->second.is_one())
        throw std::logic_error("char_to_z: product is missing the top term");
    ZPolyQ p = char_to_z(rest) * ZPolyQ::variable(r, i);
    for (const auto& [nu, n] : series.terms) {
        if (nu == mu) continue;
        p -= char_to_z(nu).scaled(BigRational(n));
    }
    return p;
}

inline const ZPolyQ& Session::monomial_to_z(const Weight& lambda) {
    return memoize(monomial_z_, lambda, [&] {
        if (store_) {
            if (auto hit = store_->load_poly("monomial_z", lambda, rank())) return std::move(*hit);
        }
        ZPolyQ value = compute_monomial_to_z(lambda);
        if (store_) store_->save_poly("monomial_z", lambda, value);
        return value;
    });
}

// M_lambda = chi_lambda - sum_{mu < lambda} mult_lambda(mu) M_mu
inline ZPolyQ Session::compute_monomial_to_z(const Weight& lambda) {
    ZPolyQ p = char_to_z(lambda);
    const DominantCharacter& chi = freudenthal(lambda);
    for (const auto& [mu, m] : chi.mult.terms()) {
        if (mu == lambda) continue;
        p -= monomial_to_z(mu).scaled(BigRational(m));
    }
    // triangularity: the rho-leading term must be z^lambda with coefficient 1
    long long best = -1;
    const Weight* arg = nullptr;
    for (const auto& [e, c] : p.terms()) {
        long long h = rho_height(e);
        if (h > best || (h == best && (arg == nullptr || *arg < e))) {
            best = h;
            arg = &e;
        }
    }
    if (arg == nullptr || *arg != lambda || p.coefficient(lambda) != BigRational(1))
        throw std::logic_error("monomial_to_z: triangularity violated at " + lambda.to_string());
    return p;
}

// Exact expansion of p in the orbit-sum basis, by elimination against the
// memoized M_lambda(z) forms: repeatedly strip the rho-highest monomial z^e,
// which corresponds to the dominant weight with labels e.
template <typename C>
MonomialCombination<C> Session::z_to_monomials(const ZPolynomial<C>& p) {
    if (p.nvars() != rank()) throw std::invalid_argument("z_to_monomials: variable count mismatch");
    MonomialCombination<C> out;
    ZPolynomial<C> work = p;
    while (!work.is_zero()) {
        long long best = -1;
        const Weight* arg = nullptr;
        for (const auto& [e, c] : work.terms()) {
            long long h = rho_height(e);
            if (h > best || (h == best && (arg == nullptr || *arg < e))) {
                best = h;
                arg = &e;
            }
        }
        Weight w = *arg;
        C c = work.coefficient(w);
        const ZPolyQ& mz = monomial_to_z(w);
        ZPolynomial<C> sub(rank());
        for (const auto& [e, q] : mz.terms()) sub.add_term(e, detail::coef_from_rational<C>(q) * c);
        work -= sub;
        out.add(std::move(w), std::move(c));
    }
    return out;
}

// z-coordinate form of a monomial-basis combination
template <typename C>
ZPolynomial<C> monomials_to_z(Session& session, const MonomialCombination<C>& m) {
    ZPolynomial<C> out(session.rank());
    for (const auto& [w, c] : m.terms()) {
        const ZPolyQ& mz = session.monomial_to_z(w);
        for (const auto& [e, q] : mz.terms()) out.add_term(e, detail::coef_from_rational<C>(q) * c);
    }
    return out;
}

}  // namespace cstrig
