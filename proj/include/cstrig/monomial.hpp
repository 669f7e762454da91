// Finite linear combinations of orbit sums M_lambda, indexed by dominant
// weights. The coefficient type varies with the context: integers for
// characters, rationals for conversions, elements of Q(k) for eigenpolynomial
// work.
#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "cstrig/kappa.hpp"
#include "cstrig/rational.hpp"
#include "cstrig/weight.hpp"

namespace cstrig {

template <typename C>
class MonomialCombination {
public:
    using Coefficient = C;
    using TermMap = std::map<Weight, C>;

    MonomialCombination() = default;

    static MonomialCombination single(Weight w, C c) {
        MonomialCombination m;
        m.add(std::move(w), std::move(c));
        return m;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    C coefficient(const Weight& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? C(0) : it->second;
    }
    bool contains(const Weight& w) const { return terms_.find(w) != terms_.end(); }

    void add(Weight w, C c) {
        if (is_zero_coef(c)) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(std::move(w), std::move(c));
        } else {
            it->second += c;
            if (is_zero_coef(it->second)) terms_.erase(it);
        }
    }

    MonomialCombination& operator+=(const MonomialCombination& b) {
        for (const auto& [w, c] : b.terms_) add(w, c);
        return *this;
    }
    MonomialCombination& operator-=(const MonomialCombination& b) {
        for (const auto& [w, c] : b.terms_) add(w, C(0) - c);
        return *this;
    }
    friend MonomialCombination operator+(MonomialCombination a, const MonomialCombination& b) { return a += b; }
    friend MonomialCombination operator-(MonomialCombination a, const MonomialCombination& b) { return a -= b; }

    MonomialCombination scaled(const C& s) const {
        MonomialCombination r;
        if (is_zero_coef(s)) return r;
        for (const auto& [w, c] : terms_) r.add(w, c * s);
        return r;
    }

    friend bool operator==(const MonomialCombination& a, const MonomialCombination& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const MonomialCombination& a, const MonomialCombination& b) { return !(a == b); }

    template <typename D, typename Fn>
    MonomialCombination<D> mapped(Fn&& fn) const {
        MonomialCombination<D> r;
        for (const auto& [w, c] : terms_) r.add(w, fn(c));
        return r;
    }

private:
    TermMap terms_;

    static bool is_zero_coef(const C& c) {
        if constexpr (std::is_same_v<C, BigInt>) return c.is_zero();
        else if constexpr (std::is_same_v<C, BigRational>) return c.is_zero();
        else return c.is_zero();
    }
};

using MonomialZ = MonomialCombination<BigInt>;
using MonomialQ = MonomialCombination<BigRational>;
using MonomialK = MonomialCombination<KappaRational>;

}  // namespace cstrig
