// Cartan data and weight-lattice geometry for the simply-laced families
// A_n, D_n, E6, E7, normalized so that every root has squared length 2.
//
// Weights are always held in the fundamental-weight basis (Dynkin labels).
// A positive root is carried in two coordinate systems at once: its Dynkin
// labels (for reflections and lattice walks) and its simple-root coordinates
// (for pairings, since (w, alpha) = sum_j c_j(alpha) * w_j is an integer).
#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "cstrig/bigint.hpp"
#include "cstrig/rational.hpp"
#include "cstrig/weight.hpp"

namespace cstrig {

enum class Family : char { A = 'A', D = 'D', E = 'E' };

struct AlgebraId {
    Family family = Family::A;
    int rank = 1;

    static AlgebraId parse(std::string_view s) {
        if (s.size() < 2) throw std::invalid_argument("algebra: expected e.g. A2, D4, E7");
        char f = s[0];
        if (f >= 'a' && f <= 'z') f = static_cast<char>(f - 'a' + 'A');
        Family fam;
        switch (f) {
            case 'A': fam = Family::A; break;
            case 'D': fam = Family::D; break;
            case 'E': fam = Family::E; break;
            default: throw std::invalid_argument("algebra: unsupported family '" + std::string(1, s[0]) + "'");
        }
        int r = 0;
        for (std::size_t i = 1; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("algebra: bad rank in '" + std::string(s) + "'");
            r = r * 10 + (s[i] - '0');
            if (r > 1000) throw std::invalid_argument("algebra: rank out of range");
        }
        AlgebraId id{fam, r};
        id.validate();
        return id;
    }

    void validate() const {
        if (rank < 1 || rank > kMaxRank)
            throw std::invalid_argument("algebra: rank must be between 1 and " + std::to_string(kMaxRank));
        switch (family) {
            case Family::A:
                break;
            case Family::D:
                if (rank < 3) throw std::invalid_argument("algebra: D_n requires n >= 3");
                break;
            case Family::E:
                if (rank != 6 && rank != 7)
                    throw std::invalid_argument("algebra: only E6 and E7 are supported");
                break;
        }
    }

    std::string to_string() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }

    friend bool operator==(const AlgebraId& a, const AlgebraId& b) {
        return a.family == b.family && a.rank == b.rank;
    }
};

struct PositiveRoot {
    Weight labels;                  // Dynkin labels of the root
    std::array<std::int16_t, kMaxRank> coords{};  // coordinates over simple roots
    int height = 0;
};

class RootSystem {
public:
    explicit RootSystem(AlgebraId id) : id_(id), rank_(id.rank) {
        id.validate();
        build_cartan();
        invert_cartan();
        build_positive_roots();
        weyl_order_ = parabolic_weyl_order(all_nodes());
    }

    const AlgebraId& algebra() const { return id_; }
    int rank() const { return rank_; }
    const std::vector<PositiveRoot>& positive_roots() const { return roots_; }
    Weight rho() const { return Weight::rho(rank_); }
    Weight fundamental_weight(int i) const { return Weight::fundamental(rank_, i); }
    long long det() const { return det_; }
    std::uint64_t weyl_order() const { return weyl_order_; }

    int cartan(int i, int j) const { return cartan_[static_cast<std::size_t>(i * rank_ + j)]; }

    // (u, v) with the (alpha, alpha) = 2 normalization; entries of the gram
    // matrix are inverse-Cartan entries, so the value is a rational with
    // denominator dividing det(Cartan).
    BigRational inner_product(const Weight& u, const Weight& v) const {
        check_rank(u);
        check_rank(v);
        return BigRational(BigInt(inner_scaled(u, v)), BigInt(det_));
    }

    // det * (u, v), an exact integer
    long long inner_scaled(const Weight& u, const Weight& v) const {
        long long s = 0;
        for (int i = 0; i < rank_; ++i) {
            if (u[i] == 0) continue;
            long long row = 0;
            for (int j = 0; j < rank_; ++j) row += gram_scaled_[static_cast<std::size_t>(i * rank_ + j)] * v[j];
            s += static_cast<long long>(u[i]) * row;
        }
        return s;
    }

    // (w, alpha) for a positive root alpha; an exact integer
    long long root_pairing(const Weight& w, const PositiveRoot& alpha) const {
        long long s = 0;
        for (int j = 0; j < rank_; ++j) s += static_cast<long long>(alpha.coords[static_cast<std::size_t>(j)]) * w[j];
        return s;
    }

    void reflect_simple(Weight& w, int i) const {
        std::int16_t t = w[i];
        if (t == 0) return;
        w[i] = static_cast<std::int16_t>(-t);
        for (int j : neighbors_[static_cast<std::size_t>(i)])
            w[j] = static_cast<std::int16_t>(w[j] + t);
    }

    // Dominant representative of the Weyl orbit of w, with the determinant
    // (+1/-1) of the group element applied. Stabilizer reflections never fire,
    // so the parity is well defined up to the stabilizer, which is enough for
    // every use here.
    std::pair<Weight, int> dominant_representative(Weight w) const {
        int parity = 1;
        for (;;) {
            int neg = -1;
            for (int i = 0; i < rank_; ++i) {
                if (w[i] < 0) { neg = i; break; }
            }
            if (neg < 0) return {w, parity};
            reflect_simple(w, neg);
            parity = -parity;
        }
    }

    // Full Weyl orbit of a dominant weight, sorted for determinism.
    std::vector<Weight> orbit(const Weight& lambda) const {
        require_dominant(lambda, "orbit");
        std::vector<Weight> out;
        std::unordered_set<Weight, WeightHash> seen;
        std::vector<Weight> frontier{lambda};
        seen.insert(lambda);
        while (!frontier.empty()) {
            std::vector<Weight> next;
            for (const Weight& w : frontier) {
                out.push_back(w);
                for (int i = 0; i < rank_; ++i) {
                    if (w[i] == 0) continue;
                    Weight u = w;
                    reflect_simple(u, i);
                    if (seen.insert(u).second) next.push_back(u);
                }
            }
            frontier = std::move(next);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    // |W| / |W_stab|, via the parabolic stabilizer of the dominant weight.
    std::uint64_t orbit_size(const Weight& lambda) const {
        require_dominant(lambda, "orbit_size");
        std::vector<int> zero_nodes;
        for (int i = 0; i < rank_; ++i)
            if (lambda[i] == 0) zero_nodes.push_back(i);
        return weyl_order_ / parabolic_weyl_order(zero_nodes);
    }

    // Is lambda - mu a non-negative integer combination of simple roots?
    bool dominance_leq(const Weight& mu, const Weight& lambda) const {
        return depth_below(lambda, mu) >= 0;
    }

    // ht(lambda - mu) when mu <= lambda in the root lattice, else -1.
    long long depth_below(const Weight& lambda, const Weight& mu) const {
        check_rank(lambda);
        check_rank(mu);
        long long total = 0;
        for (int j = 0; j < rank_; ++j) {
            long long cj = 0;
            for (int k = 0; k < rank_; ++k)
                cj += gram_scaled_[static_cast<std::size_t>(j * rank_ + k)] *
                      (static_cast<long long>(lambda[k]) - mu[k]);
            if (cj < 0 || cj % det_ != 0) return -1;
            total += cj / det_;
        }
        return total;
    }

    // All dominant mu <= lambda, topologically sorted by dominance: lambda
    // first, then increasing ht(lambda - mu); incomparable weights at equal
    // depth are ordered lexicographically (larger labels first).
    std::vector<Weight> dominant_weights_below(const Weight& lambda) const {
        require_dominant(lambda, "dominant_weights_below");
        std::unordered_set<Weight, WeightHash> seen{lambda};
        std::vector<Weight> queue{lambda};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            Weight w = queue[qi];
            for (const PositiveRoot& beta : roots_) {
                Weight u = w - beta.labels;
                if (!u.is_dominant()) continue;
                if (seen.insert(u).second) queue.push_back(u);
            }
        }
        std::sort(queue.begin(), queue.end(), [&](const Weight& a, const Weight& b) {
            long long da = depth_below(lambda, a);
            long long db = depth_below(lambda, b);
            if (da != db) return da < db;
            return b < a;
        });
        return queue;
    }

    // Weyl dimension formula, prod (lambda+rho, alpha) / (rho, alpha).
    BigInt weyl_dimension(const Weight& lambda) const {
        require_dominant(lambda, "weyl_dimension");
        Weight lr = lambda + rho();
        Weight r = rho();
        BigInt num(1), den(1);
        for (const PositiveRoot& alpha : roots_) {
            num *= BigInt(root_pairing(lr, alpha));
            den *= BigInt(root_pairing(r, alpha));
        }
        return BigInt::div_exact(num, den);
    }

    // Order of the parabolic Weyl subgroup generated by the given nodes.
    std::uint64_t parabolic_weyl_order(const std::vector<int>& nodes) const {
        std::vector<char> in(static_cast<std::size_t>(rank_), 0);
        for (int i : nodes) in[static_cast<std::size_t>(i)] = 1;
        std::vector<char> done(static_cast<std::size_t>(rank_), 0);
        std::uint64_t order = 1;
        for (int i : nodes) {
            if (done[static_cast<std::size_t>(i)]) continue;
            std::vector<int> comp;
            std::vector<int> stack{i};
            done[static_cast<std::size_t>(i)] = 1;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                comp.push_back(u);
                for (int v : neighbors_[static_cast<std::size_t>(u)]) {
                    if (in[static_cast<std::size_t>(v)] && !done[static_cast<std::size_t>(v)]) {
                        done[static_cast<std::size_t>(v)] = 1;
                        stack.push_back(v);
                    }
                }
            }
            order *= component_weyl_order(comp, in);
        }
        return order;
    }

private:
    AlgebraId id_;
    int rank_;
    std::vector<int> cartan_;                 // row-major r x r
    std::vector<std::vector<int>> neighbors_; // Dynkin diagram adjacency
    std::vector<long long> gram_scaled_;      // det * inverse Cartan, row-major
    long long det_ = 1;
    std::vector<PositiveRoot> roots_;
    std::uint64_t weyl_order_ = 1;

    void check_rank(const Weight& w) const {
        if (w.rank() != rank_) throw std::invalid_argument("weight rank does not match algebra rank");
    }

    void require_dominant(const Weight& w, const char* where) const {
        check_rank(w);
        if (!w.is_dominant())
            throw std::invalid_argument(std::string(where) + ": weight " + w.to_string() + " is not dominant");
    }

    std::vector<int> all_nodes() const {
        std::vector<int> v(static_cast<std::size_t>(rank_));
        for (int i = 0; i < rank_; ++i) v[static_cast<std::size_t>(i)] = i;
        return v;
    }

    void build_cartan() {
        std::vector<std::pair<int, int>> edges;
        const int n = rank_;
        switch (id_.family) {
            case Family::A:
                for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
                break;
            case Family::D:
                for (int i = 0; i + 1 < n - 2; ++i) edges.emplace_back(i, i + 1);
                edges.emplace_back(n - 3, n - 2);
                edges.emplace_back(n - 3, n - 1);
                break;
            case Family::E:
                // Bourbaki numbering: chain 1-3-4-5-...-n with node 2 on node 4
                edges.emplace_back(0, 2);
                edges.emplace_back(1, 3);
                for (int i = 2; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
                break;
        }
        cartan_.assign(static_cast<std::size_t>(n * n), 0);
        neighbors_.assign(static_cast<std::size_t>(n), {});
        for (int i = 0; i < n; ++i) cartan_[static_cast<std::size_t>(i * n + i)] = 2;
        for (auto [a, b] : edges) {
            cartan_[static_cast<std::size_t>(a * n + b)] = -1;
            cartan_[static_cast<std::size_t>(b * n + a)] = -1;
            neighbors_[static_cast<std::size_t>(a)].push_back(b);
            neighbors_[static_cast<std::size_t>(b)].push_back(a);
        }
        for (auto& nb : neighbors_) std::sort(nb.begin(), nb.end());
    }

    // Gauss-Jordan over exact rationals; fills gram_scaled_ = det * A^{-1}.
    void invert_cartan() {
        const int n = rank_;
        std::vector<BigRational> m(static_cast<std::size_t>(n) * n);
        std::vector<BigRational> inv(static_cast<std::size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                m[static_cast<std::size_t>(i * n + j)] = BigRational(cartan(i, j));
                inv[static_cast<std::size_t>(i * n + j)] = BigRational(i == j ? 1 : 0);
            }
        BigRational det(1);
        for (int col = 0; col < n; ++col) {
            int pivot = -1;
            for (int r = col; r < n; ++r) {
                if (!m[static_cast<std::size_t>(r * n + col)].is_zero()) { pivot = r; break; }
            }
            if (pivot < 0) throw std::logic_error("Cartan matrix is singular");
            if (pivot != col) {
                for (int j = 0; j < n; ++j) {
                    std::swap(m[static_cast<std::size_t>(pivot * n + j)], m[static_cast<std::size_t>(col * n + j)]);
                    std::swap(inv[static_cast<std::size_t>(pivot * n + j)], inv[static_cast<std::size_t>(col * n + j)]);
                }
                det = -det;
            }
            BigRational p = m[static_cast<std::size_t>(col * n + col)];
            det *= p;
            for (int j = 0; j < n; ++j) {
                m[static_cast<std::size_t>(col * n + j)] /= p;
                inv[static_cast<std::size_t>(col * n + j)] /= p;
            }
            for (int r = 0; r < n; ++r) {
                if (r == col) continue;
                BigRational f = m[static_cast<std::size_t>(r * n + col)];
                if (f.is_zero()) continue;
                for (int j = 0; j < n; ++j) {
                    m[static_cast<std::size_t>(r * n + j)] -= f * m[static_cast<std::size_t>(col * n + j)];
                    inv[static_cast<std::size_t>(r * n + j)] -= f * inv[static_cast<std::size_t>(col * n + j)];
                }
            }
        }
        det_ = det.to_integer().to_int64();
        if (det_ <= 0) throw std::logic_error("Cartan determinant not positive");
        gram_scaled_.assign(static_cast<std::size_t>(n) * n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                gram_scaled_[static_cast<std::size_t>(i * n + j)] =
                    (inv[static_cast<std::size_t>(i * n + j)] * BigRational(det_)).to_integer().to_int64();
    }

    // Height-by-height closure: beta + alpha_i is a root iff (beta, alpha_i) = -1.
    void build_positive_roots() {
        const int n = rank_;
        std::unordered_set<Weight, WeightHash> seen;
        std::vector<PositiveRoot> frontier;
        for (int i = 0; i < n; ++i) {
            PositiveRoot r;
            r.labels = Weight(n);
            for (int j = 0; j < n; ++j) r.labels[j] = static_cast<std::int16_t>(cartan(i, j));
            r.coords[static_cast<std::size_t>(i)] = 1;
            r.height = 1;
            seen.insert(r.labels);
            frontier.push_back(r);
        }
        while (!frontier.empty()) {
            std::vector<PositiveRoot> next;
            for (const PositiveRoot& beta : frontier) {
                roots_.push_back(beta);
                for (int i = 0; i < n; ++i) {
                    if (beta.labels[i] != -1) continue;
                    PositiveRoot r = beta;
                    for (int j = 0; j < n; ++j)
                        r.labels[j] = static_cast<std::int16_t>(r.labels[j] + cartan(i, j));
                    r.coords[static_cast<std::size_t>(i)] =
                        static_cast<std::int16_t>(r.coords[static_cast<std::size_t>(i)] + 1);
                    r.height = beta.height + 1;
                    if (seen.insert(r.labels).second) next.push_back(r);
                }
            }
            frontier = std::move(next);
        }
        std::sort(roots_.begin(), roots_.end(), [](const PositiveRoot& a, const PositiveRoot& b) {
            if (a.height != b.height) return a.height < b.height;
            return a.labels < b.labels;
        });
    }

    std::uint64_t component_weyl_order(const std::vector<int>& comp, const std::vector<char>& in) const {
        const std::size_t m = comp.size();
        auto degree = [&](int u) {
            int d = 0;
            for (int v : neighbors_[static_cast<std::size_t>(u)])
                if (in[static_cast<std::size_t>(v)] &&
                    std::find(comp.begin(), comp.end(), v) != comp.end())
                    ++d;
            return d;
        };
        int center = -1;
        for (int u : comp) {
            int d = degree(u);
            if (d > 3) throw std::logic_error("subdiagram is not of ADE type");
            if (d == 3) {
                if (center >= 0) throw std::logic_error("subdiagram is not of ADE type");
                center = u;
            }
        }
        auto factorial = [](std::uint64_t k) {
            std::uint64_t f = 1;
            for (std::uint64_t i = 2; i <= k; ++i) f *= i;
            return f;
        };
        if (center < 0) return factorial(m + 1);  // type A_m
        // arm lengths from the degree-3 node
        std::vector<int> arms;
        for (int v0 : neighbors_[static_cast<std::size_t>(center)]) {
            if (!in[static_cast<std::size_t>(v0)] ||
                std::find(comp.begin(), comp.end(), v0) == comp.end())
                continue;
            int len = 0, prev = center, cur = v0;
            for (;;) {
                ++len;
                int nxt = -1;
                for (int w : neighbors_[static_cast<std::size_t>(cur)]) {
                    if (w != prev && in[static_cast<std::size_t>(w)] &&
                        std::find(comp.begin(), comp.end(), w) != comp.end()) {
                        nxt = w;
                        break;
                    }
                }
                if (nxt < 0) break;
                prev = cur;
                cur = nxt;
            }
            arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        if (arms.size() != 3) throw std::logic_error("subdiagram is not of ADE type");
        if (arms[0] == 1 && arms[1] == 1)
            return (std::uint64_t{1} << (m - 1)) * factorial(m);  // type D_m
        if (arms[0] == 1 && arms[1] == 2 && arms[2] == 2) return 51840;        // E6
        if (arms[0] == 1 && arms[1] == 2 && arms[2] == 3) return 2903040;      // E7
        if (arms[0] == 1 && arms[1] == 2 && arms[2] == 4) return 696729600;    // E8
        throw std::logic_error("subdiagram is not of ADE type");
    }
};

}  // namespace cstrig
