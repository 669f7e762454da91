// The iterative eigen-solver: for dominant m, the unique eigenfunction
//   P_m = M_m + sum_{mu < m} c_mu(k) M_mu,   Delta P_m = eps_m(k) P_m,
// obtained by walking the dominant weights below m in dominance order and
// dividing accumulated couplings by eps_m - eps_mu. Products of two P's
// decompose again over the same index set with Q(k) coefficients.
#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "cstrig/operator.hpp"
#include "cstrig/session.hpp"
#include "cstrig/zbasis.hpp"

namespace cstrig {

inline const JacobiPolynomial& Session::jacobi(const Weight& m) {
    return memoize(jacobi_, m, [&] {
        if (store_) {
            if (auto hit = store_->load_jacobi(m)) return std::move(*hit);
        }
        JacobiPolynomial value = compute_jacobi(m);
        if (store_) store_->save_jacobi(m, value);
        return value;
    });
}

inline JacobiPolynomial Session::compute_jacobi(const Weight& m) {
    if (!m.is_dominant()) throw std::invalid_argument("jacobi: weight not dominant");
    const KappaRational eps_m = eigenvalue(m).value;

    JacobiPolynomial out;
    out.m = m;
    std::map<Weight, KappaRational> pending;  // couplings scattered from processed weights
    for (const Weight& nu : weights_below(m)) {
        KappaRational c;
        if (nu == m) {
            c = KappaRational(1);
        } else {
            auto it = pending.find(nu);
            if (it == pending.end() || it->second.is_zero()) continue;
            KappaRational gap = eps_m - eigenvalue(nu).value;
            if (gap.is_zero())
                throw std::logic_error("jacobi: vanishing eigenvalue gap at " + nu.to_string());
            c = it->second / gap;
        }
        if (c.is_zero()) continue;
        out.coeffs.add(nu, c);
        for (const auto& [mu, t] : act_on_monomial(nu).terms()) {
            if (mu == nu) continue;
            auto [it, inserted] = pending.try_emplace(mu, KappaRational(0));
            it->second += t * c;
        }
    }
    out.zform = monomials_to_z(*this, out.coeffs);
    return out;
}

// Exact z-polynomial at a rational coupling; refuses poles.
inline ZPolyQ specialize(const JacobiPolynomial& p, const BigRational& kappa0) {
    return substitute_kappa(p.zform, kappa0);
}

// P_a P_b = sum c_mu(k) P_mu, peeled in dominance order from the monomial
// expansion of the product of z-forms. The remainder must vanish exactly.
inline GeneralizedCGSeries Session::generalized_cg(const Weight& a, const Weight& b) {
    const JacobiPolynomial& pa = jacobi(a);
    const JacobiPolynomial& pb = jacobi(b);
    ZPolyK prod = pa.zform * pb.zform;
    MonomialK mono = z_to_monomials(prod);

    GeneralizedCGSeries series;
    series.a = a;
    series.b = b;
    for (const Weight& nu : weights_below(a + b)) {
        KappaRational c = mono.coefficient(nu);
        if (c.is_zero()) continue;
        mono -= jacobi(nu).coeffs.scaled(c);
        series.terms.emplace(nu, std::move(c));
    }
    if (!mono.is_zero())
        throw std::logic_error("generalized_cg: nonzero remainder after peel-off");
    return series;
}

}  // namespace cstrig
