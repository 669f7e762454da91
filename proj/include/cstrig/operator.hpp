// The gauge-transformed Calogero-Sutherland operator: its exact triangular
// action on orbit sums (the primary route) and the synthesis of its
// z-coordinate coefficients a_jk, b_j^0, b_j^1 from that action.
//
// Action on one exponential pair {w, s_alpha w} with n = (w, alpha) > 0:
// the pair contributes 2 k n to each endpoint and 4 k n to every interior
// point w - j alpha (j = 1..n-1); the flat Laplacian adds 2 (w, w) on the
// diagonal. Collected at a dominant representative nu, the interior rule
// inverts to: each positive root alpha with nu + k alpha in the orbit of
// lambda for some k >= 1 (unique, by norm monotonicity) contributes
// 4 k (nu + k alpha, alpha).
#pragma once

#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cstrig/characters.hpp"
#include "cstrig/session.hpp"
#include "cstrig/zbasis.hpp"

namespace cstrig {

inline EigenvalueFn Session::eigenvalue(const Weight& m) const {
    if (!m.is_dominant()) throw std::invalid_argument("eigenvalue: weight not dominant");
    const long long det = rs_.det();
    const long long s_mm = rs_.inner_scaled(m, m);
    const long long s_mr = rs_.inner_scaled(m, rs_.rho());
    // 2 (m, m) + 4 (m, rho) k
    KappaRational value(KappaPoly::linear(BigInt(2 * s_mm), BigInt(4 * s_mr)), KappaPoly(BigInt(det)));
    return EigenvalueFn{m, std::move(value)};
}

inline const MonomialK& Session::act_on_monomial(const Weight& lambda) {
    return memoize(act_, lambda, [&] { return compute_act(lambda); });
}

inline MonomialK Session::compute_act(const Weight& lambda) {
    const RootSystem& rs = rs_;
    if (!lambda.is_dominant()) throw std::invalid_argument("act_on_monomial: weight not dominant");
    MonomialK out;
    if (lambda.is_zero()) return out;
    out.add(lambda, eigenvalue(lambda).value);

    const long long det = rs.det();
    const long long norm_top = rs.inner_scaled(lambda, lambda);
    for (const Weight& nu : weights_below(lambda)) {
        if (nu == lambda) continue;
        const long long norm_nu = rs.inner_scaled(nu, nu);
        long long total = 0;
        for (const PositiveRoot& alpha : rs.positive_roots()) {
            const long long p = rs.root_pairing(nu, alpha);
            Weight w = nu;
            for (long long k = 1;; ++k) {
                long long norm_w = norm_nu + 2 * k * det * p + 2 * k * k * det;
                if (norm_w > norm_top) break;
                w = w + alpha.labels;
                if (norm_w == norm_top && rs.dominant_representative(w).first == lambda) {
                    total += 4 * (p + 2 * k);  // 4 (w, alpha)
                    break;
                }
            }
        }
        if (total != 0)
            out.add(nu, KappaRational(KappaPoly::linear(BigInt(0), BigInt(total))));
    }
    return out;
}

// Reference route: distribute the pair rule over the whole orbit, then verify
// that the collected coefficient is constant on each orbit before reducing to
// dominant representatives. Slow but direct; used to cross-check compute_act.
inline MonomialK Session::act_on_monomial_by_orbit(const Weight& lambda) {
    const RootSystem& rs = rs_;
    if (!lambda.is_dominant()) throw std::invalid_argument("act_on_monomial_by_orbit: weight not dominant");
    MonomialK out;
    if (lambda.is_zero()) return out;

    const long long det = rs.det();
    std::unordered_map<Weight, KappaPoly, WeightHash> acc;  // det * coefficient, in Z[k]
    for (const Weight& w : orbit(lambda)) {
        // Laplacian: 2 (w, w)
        acc[w] += KappaPoly(BigInt(2 * rs.inner_scaled(w, w)));
        for (const PositiveRoot& alpha : rs.positive_roots()) {
            long long n = rs.root_pairing(w, alpha);
            if (n <= 0) continue;
            KappaPoly endpoint = KappaPoly::linear(BigInt(0), BigInt(2 * n * det));
            Weight mirror = w - static_cast<int>(n) * alpha.labels;
            acc[w] += endpoint;
            acc[mirror] += endpoint;
            KappaPoly interior = KappaPoly::linear(BigInt(0), BigInt(4 * n * det));
            Weight u = w;
            for (long long j = 1; j < n; ++j) {
                u = u - alpha.labels;
                acc[u] += interior;
            }
        }
    }

    std::unordered_map<Weight, KappaPoly, WeightHash> collected;
    for (const auto& [w, c] : acc) {
        Weight rep = rs.dominant_representative(w).first;
        auto it = collected.find(rep);
        if (it == collected.end()) {
            collected.emplace(rep, c);
        } else if (it->second != c) {
            throw std::logic_error("act_on_monomial_by_orbit: orbit-dependent coefficient at " +
                                   rep.to_string() + " (Weyl-invariance violated)");
        }
    }
    for (auto& [w, c] : collected)
        out.add(w, KappaRational(std::move(c), KappaPoly(BigInt(det))));
    return out;
}

inline const CSOperator& Session::cs_operator() {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        if (operator_) return *operator_;
    }
    CSOperator value = compute_operator();
    std::lock_guard<std::mutex> lock(mutex_);
    if (!operator_) operator_ = std::make_unique<CSOperator>(std::move(value));
    return *operator_;
}

namespace detail {

// z-coordinate image of an M-basis combination with Q[k]-linear coefficients,
// split into the k^0 and k^1 parts. Throws if any coefficient fails to be a
// polynomial of degree <= 1 in k.
inline std::pair<ZPolyQ, ZPolyQ> kappa_split(Session& session, const MonomialK& m, const char* what) {
    ZPolyQ part0(session.rank()), part1(session.rank());
    for (const auto& [w, c] : m.terms()) {
        if (!c.is_polynomial() || c.num().degree() > 1)
            throw std::logic_error(std::string(what) + ": coefficient not linear in k: " + c.to_string());
        BigRational den(c.den().coefficient(0));
        BigRational c0 = BigRational(c.num().coefficient(0)) / den;
        BigRational c1 = BigRational(c.num().coefficient(1)) / den;
        const ZPolyQ& mz = session.monomial_to_z(w);
        if (!c0.is_zero()) part0 += mz.scaled(c0);
        if (!c1.is_zero()) part1 += mz.scaled(c1);
    }
    return {std::move(part0), std::move(part1)};
}

}  // namespace detail

// b_j := z-image of the action on the expansion of z_j, split by kappa degree;
// a_jk := [ action(z_j z_k) - z_j action(z_k) - z_k action(z_j) ] / 2, which
// must come out kappa-free.
inline CSOperator Session::compute_operator() {
    const int r = rank();
    CSOperator op;
    op.rank = r;
    op.a.assign(static_cast<std::size_t>(r) * r, ZPolyQ(r));
    op.b0.assign(static_cast<std::size_t>(r), ZPolyQ(r));
    op.b1.assign(static_cast<std::size_t>(r), ZPolyQ(r));

    std::vector<MonomialK> delta_z(static_cast<std::size_t>(r));
    for (int j = 0; j < r; ++j) {
        const DominantCharacter& chi = freudenthal(rs_.fundamental_weight(j));
        MonomialK total;
        for (const auto& [mu, m] : chi.mult.terms())
            total += act_on_monomial(mu).scaled(KappaRational(BigInt(m)));
        auto [p0, p1] = detail::kappa_split(*this, total, "operator b");
        op.b0[static_cast<std::size_t>(j)] = std::move(p0);
        op.b1[static_cast<std::size_t>(j)] = std::move(p1);
        delta_z[static_cast<std::size_t>(j)] = std::move(total);
    }

    for (int j = 0; j < r; ++j) {
        for (int k = j; k < r; ++k) {
            MonomialZ prod = char_product(freudenthal(rs_.fundamental_weight(j)),
                                          freudenthal(rs_.fundamental_weight(k)));
            MonomialK acted;
            for (const auto& [mu, m] : prod.terms())
                acted += act_on_monomial(mu).scaled(KappaRational(BigInt(m)));
            auto [q0, q1] = detail::kappa_split(*this, acted, "operator a");

            ZPolyQ zj = ZPolyQ::variable(r, j);
            ZPolyQ zk = ZPolyQ::variable(r, k);
            ZPolyQ cross0 = zj * op.b0[static_cast<std::size_t>(k)] + zk * op.b0[static_cast<std::size_t>(j)];
            ZPolyQ cross1 = zj * op.b1[static_cast<std::size_t>(k)] + zk * op.b1[static_cast<std::size_t>(j)];
            ZPolyQ k1 = q1 - cross1;
            if (!k1.is_zero())
                throw std::logic_error("operator a: kappa-dependent part does not cancel at (" +
                                       std::to_string(j + 1) + "," + std::to_string(k + 1) + ")");
            ZPolyQ ajk = (q0 - cross0).scaled(BigRational(1, 2));
            op.a[static_cast<std::size_t>(j * r + k)] = ajk;
            op.a[static_cast<std::size_t>(k * r + j)] = std::move(ajk);
        }
    }
    return op;
}

// sum_{j,k} a_jk d_j d_k p + sum_j (b0_j + k b1_j) d_j p
inline ZPolyK apply(const CSOperator& op, const ZPolyK& p) {
    const int r = op.rank;
    if (p.nvars() != r) throw std::invalid_argument("apply: variable count mismatch");
    ZPolyK out(r);
    const KappaRational kappa = KappaRational::variable();
    for (int j = 0; j < r; ++j) {
        ZPolyK dj = p.derivative(j);
        if (dj.is_zero()) continue;
        out += promote(op.b0[static_cast<std::size_t>(j)]) * dj;
        out += promote(op.b1[static_cast<std::size_t>(j)]).scaled(kappa) * dj;
        for (int k = 0; k < r; ++k) {
            const ZPolyQ& a = op.a_at(j, k);
            if (a.is_zero()) continue;
            ZPolyK djk = dj.derivative(k);
            if (djk.is_zero()) continue;
            out += promote(a) * djk;
        }
    }
    return out;
}

inline ZPolyK apply(const CSOperator& op, const ZPolyQ& p) { return apply(op, promote(p)); }

}  // namespace cstrig
