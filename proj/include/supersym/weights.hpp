#ifndef SUPERSYM_WEIGHTS_HPP
#define SUPERSYM_WEIGHTS_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "scalar.hpp"

namespace supersym {

/// Element of X(T) = Z^{m+n}, split as (lambda_+ | lambda_-).
class Weight {
public:
    Weight(int m, std::vector<int> entries) : m_(m), entries_(std::move(entries))
    {
        if (m_ < 1 || static_cast<int>(entries_.size()) <= m_) {
            throw std::invalid_argument("weight needs 1 <= m < length");
        }
    }

    static Weight zero(int m, int n) { return Weight(m, std::vector<int>(static_cast<std::size_t>(m + n), 0)); }

    int m() const { return m_; }
    int n() const { return static_cast<int>(entries_.size()) - m_; }
    std::size_t size() const { return entries_.size(); }
    const std::vector<int>& entries() const { return entries_; }
    int operator[](std::size_t k) const { return entries_[k]; }

    std::span<const int> plus() const { return std::span<const int>(entries_).first(static_cast<std::size_t>(m_)); }
    std::span<const int> minus() const { return std::span<const int>(entries_).subspan(static_cast<std::size_t>(m_)); }

    long long total() const { return std::accumulate(entries_.begin(), entries_.end(), 0LL); }

    Weight operator-() const
    {
        std::vector<int> v = entries_;
        for (int& e : v) {
            e = -e;
        }
        return Weight(m_, std::move(v));
    }

    friend Weight operator+(const Weight& a, const Weight& b)
    {
        a.require_same_shape(b);
        std::vector<int> v = a.entries_;
        for (std::size_t k = 0; k < v.size(); ++k) {
            v[k] += b.entries_[k];
        }
        return Weight(a.m_, std::move(v));
    }

    friend Weight operator-(const Weight& a, const Weight& b) { return a + (-b); }

    friend Weight operator*(int s, const Weight& a)
    {
        std::vector<int> v = a.entries_;
        for (int& e : v) {
            e *= s;
        }
        return Weight(a.m_, std::move(v));
    }

    bool operator==(const Weight&) const = default;

    void require_same_shape(const Weight& other) const
    {
        if (m_ != other.m_ || entries_.size() != other.entries_.size()) {
            throw std::invalid_argument("weights of different shapes");
        }
    }

private:
    int m_;
    std::vector<int> entries_;
};

/// Plain lexicographic order on entries, for containers and tie-breaking only.
struct LexLess {
    bool operator()(const Weight& a, const Weight& b) const
    {
        return std::pair(a.m(), a.entries()) < std::pair(b.m(), b.entries());
    }
};

inline std::string to_string(const Weight& w)
{
    std::string s = "(";
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k > 0) {
            s += static_cast<int>(k) == w.m() ? "|" : ",";
        }
        s += std::to_string(w[k]);
    }
    return s + ")";
}

/// Dominance order: lambda <= mu iff mu - lambda is a nonnegative integer
/// combination of the simple roots e_k - e_{k+1}, i.e. equal totals and
/// dominated prefix sums.
inline bool leq(const Weight& lambda, const Weight& mu)
{
    lambda.require_same_shape(mu);
    long long a = 0;
    long long b = 0;
    for (std::size_t k = 0; k < lambda.size(); ++k) {
        a += lambda[k];
        b += mu[k];
        if (a > b) {
            return false;
        }
    }
    return a == b;
}

inline bool less(const Weight& lambda, const Weight& mu) { return lambda != mu && leq(lambda, mu); }

/// e_k - e_{k+1}, k 0-based in [0, m+n-2].
inline Weight simple_root(int m, int n, int k)
{
    Weight w = Weight::zero(m, n);
    std::vector<int> v = w.entries();
    v.at(static_cast<std::size_t>(k)) = 1;
    v.at(static_cast<std::size_t>(k) + 1) = -1;
    return Weight(m, std::move(v));
}

enum class Cone {
    All,            ///< all of Z^{m+n}
    Dominant,       ///< X(T)^+: weakly decreasing in each block
    DominantNonneg, ///< X(T)^+ with all entries >= 0
};

inline bool is_block_decreasing(const Weight& w)
{
    for (std::size_t k = 1; k < w.size(); ++k) {
        if (static_cast<int>(k) != w.m() && w[k] > w[k - 1]) {
            return false;
        }
    }
    return true;
}

/// X(T)^-: weakly increasing in each block.
inline bool is_antidominant(const Weight& w) { return is_block_decreasing(-w); }

inline bool in_cone(const Weight& w, Cone cone)
{
    switch (cone) {
    case Cone::All:
        return true;
    case Cone::Dominant:
        return is_block_decreasing(w);
    case Cone::DominantNonneg:
        return is_block_decreasing(w) && std::all_of(w.entries().begin(), w.entries().end(), [](int v) { return v >= 0; });
    }
    return false;
}

/// lambda' = (lambda_1, .., lambda_m - 1 | lambda_{m+1} + 1, ..): one odd simple root below lambda.
inline Weight odd_lowering(const Weight& lambda) { return lambda - simple_root(lambda.m(), lambda.n(), lambda.m() - 1); }

/// Elements of ws not strictly below another element, in input order.
inline std::vector<Weight> maximal_elements(const std::vector<Weight>& ws)
{
    std::vector<Weight> out;
    for (const Weight& a : ws) {
        const bool dominated = std::any_of(ws.begin(), ws.end(), [&](const Weight& b) { return less(a, b); });
        if (!dominated && std::find(out.begin(), out.end(), a) == out.end()) {
            out.push_back(a);
        }
    }
    return out;
}

namespace detail {

/// Calls fn on every weakly decreasing sequence of length len with entries in
/// [lo, hi], the given sum, and prefix sums bounded by prefix_cap.
inline void for_each_dominated_block(int lo, int hi, int len, long long sum, const std::vector<long long>& prefix_cap,
                                     const std::function<void(const std::vector<int>&)>& fn)
{
    std::vector<int> seq;
    seq.reserve(static_cast<std::size_t>(len));
    std::function<void(long long)> rec = [&](long long acc) {
        const int k = static_cast<int>(seq.size());
        if (k == len) {
            if (acc == sum) {
                fn(seq);
            }
            return;
        }
        const int top = k == 0 ? hi : std::min(hi, seq.back());
        for (int v = top; v >= lo; --v) {
            const long long next = acc + v;
            if (next > prefix_cap[static_cast<std::size_t>(k)]) {
                continue;
            }
            // Remaining entries are at least lo and at most v.
            const long long left = len - k - 1;
            if (next + left * v < sum || next + left * lo > sum) {
                continue;
            }
            seq.push_back(v);
            rec(next);
            seq.pop_back();
        }
    };
    rec(0);
}

inline std::vector<long long> prefix_sums(std::span<const int> v)
{
    std::vector<long long> out;
    long long acc = 0;
    for (int e : v) {
        acc += e;
        out.push_back(acc);
    }
    return out;
}

} // namespace detail

/// {nu in X(T)^+_{>=0} : nu <= mu}. Throws if mu is not dominant and nonnegative.
inline std::vector<Weight> interval_nonneg_dominant(const Weight& mu)
{
    if (!in_cone(mu, Cone::DominantNonneg)) {
        throw std::invalid_argument("weight " + to_string(mu) + " is not in the nonnegative dominant cone");
    }
    const int m = mu.m();
    const std::size_t len = mu.size();
    const std::vector<long long> cap = detail::prefix_sums(mu.entries());
    const long long total = cap.back();
    std::vector<Weight> out;
    std::vector<int> cur;
    std::function<void(long long)> rec = [&](long long acc) {
        const std::size_t k = cur.size();
        if (k == len) {
            if (acc == total) {
                out.emplace_back(m, cur);
            }
            return;
        }
        long long top = total - acc;
        if (k != 0 && static_cast<int>(k) != m) {
            top = std::min<long long>(top, cur.back());
        }
        top = std::min(top, cap[k] - acc);
        for (long long v = top; v >= 0; --v) {
            cur.push_back(static_cast<int>(v));
            rec(acc + v);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

/// Upper bound (mu_1 + 1)^m (|mu_+| + mu_{m+1} + 1)^n on the interval size.
inline Integer interval_size_bound(const Weight& mu)
{
    long long plus_total = 0;
    for (int v : mu.plus()) {
        plus_total += v;
    }
    Integer a = mu[0] + 1;
    Integer b = plus_total + mu[static_cast<std::size_t>(mu.m())] + 1;
    return boost::multiprecision::pow(a, static_cast<unsigned>(mu.m())) *
           boost::multiprecision::pow(b, static_cast<unsigned>(mu.n()));
}

/// Maximal elements of {mu in cone : mu < lambda}.
inline std::vector<Weight> predecessors(const Weight& lambda, Cone cone)
{
    if (!in_cone(lambda, cone)) {
        throw std::invalid_argument("weight " + to_string(lambda) + " is outside the selected cone");
    }
    const int m = lambda.m();
    const int n = lambda.n();
    std::vector<Weight> candidates;
    switch (cone) {
    case Cone::All:
        for (int k = 0; k + 1 < m + n; ++k) {
            candidates.push_back(lambda - simple_root(m, n, k));
        }
        return candidates;
    case Cone::Dominant: {
        // A predecessor either uses the odd root (then it is lambda') or stays
        // below lambda blockwise, where entries are boxed by the block extremes.
        candidates.push_back(odd_lowering(lambda));
        const auto plus = lambda.plus();
        const auto minus = lambda.minus();
        std::vector<std::vector<int>> plus_blocks;
        std::vector<std::vector<int>> minus_blocks;
        const auto pcap = detail::prefix_sums(plus);
        const auto mcap = detail::prefix_sums(minus);
        detail::for_each_dominated_block(plus.back(), plus.front(), m, pcap.back(), pcap,
                                         [&](const std::vector<int>& s) { plus_blocks.push_back(s); });
        detail::for_each_dominated_block(minus.back(), minus.front(), n, mcap.back(), mcap,
                                         [&](const std::vector<int>& s) { minus_blocks.push_back(s); });
        for (const auto& p : plus_blocks) {
            for (const auto& q : minus_blocks) {
                std::vector<int> v = p;
                v.insert(v.end(), q.begin(), q.end());
                Weight mu(m, std::move(v));
                if (mu != lambda) {
                    candidates.push_back(std::move(mu));
                }
            }
        }
        break;
    }
    case Cone::DominantNonneg:
        for (Weight& mu : interval_nonneg_dominant(lambda)) {
            if (mu != lambda) {
                candidates.push_back(std::move(mu));
            }
        }
        break;
    }
    std::vector<Weight> below;
    for (Weight& mu : candidates) {
        if (in_cone(mu, cone) && less(mu, lambda)) {
            below.push_back(std::move(mu));
        }
    }
    std::vector<Weight> out = maximal_elements(below);
    std::sort(out.begin(), out.end(), [](const Weight& a, const Weight& b) { return LexLess{}(b, a); });
    return out;
}

/// Dominance order restricted to a cone of X(T).
class DominanceOrder {
public:
    using element_type = Weight;

    DominanceOrder(int m, int n, Cone cone = Cone::Dominant) : m_(m), n_(n), cone_(cone)
    {
        if (m < 1 || n < 1) {
            throw std::invalid_argument("order needs m, n >= 1");
        }
    }

    int m() const { return m_; }
    int n() const { return n_; }
    Cone cone() const { return cone_; }

    bool contains(const Weight& w) const { return w.m() == m_ && w.n() == n_ && in_cone(w, cone_); }
    bool leq(const Weight& a, const Weight& b) const { return supersym::leq(a, b); }
    std::vector<Weight> predecessors(const Weight& w) const { return supersym::predecessors(w, cone_); }
    static bool element_less(const Weight& a, const Weight& b) { return LexLess{}(a, b); }

    bool operator==(const DominanceOrder&) const = default;

private:
    int m_;
    int n_;
    Cone cone_;
};

/// Element of X(T)^- x X(T)^+.
struct WeightPair {
    Weight lower; ///< in X(T)^-
    Weight upper; ///< in X(T)^+

    bool operator==(const WeightPair&) const = default;
};

inline std::string to_string(const WeightPair& w) { return "[" + to_string(w.lower) + ", " + to_string(w.upper) + "]"; }

/// Product order on X(T)^- x X(T)^+ with the first factor reversed:
/// (a, b) <= (c, d) iff a >= c and b <= d.
///
/// Negation is an order isomorphism from (X(T)^-, >=) to (X(T)^+, <=), so
/// predecessors in the first factor come from dominant-cone predecessors.
class PairOrder {
public:
    using element_type = WeightPair;

    PairOrder(int m, int n) : m_(m), n_(n)
    {
        if (m < 1 || n < 1) {
            throw std::invalid_argument("order needs m, n >= 1");
        }
    }

    int m() const { return m_; }
    int n() const { return n_; }

    bool contains(const WeightPair& w) const
    {
        return w.lower.m() == m_ && w.lower.n() == n_ && w.upper.m() == m_ && w.upper.n() == n_ &&
               is_antidominant(w.lower) && is_block_decreasing(w.upper);
    }

    bool leq(const WeightPair& a, const WeightPair& b) const
    {
        return supersym::leq(b.lower, a.lower) && supersym::leq(a.upper, b.upper);
    }

    std::vector<WeightPair> predecessors(const WeightPair& w) const
    {
        std::vector<WeightPair> out;
        for (const Weight& p : supersym::predecessors(-w.lower, Cone::Dominant)) {
            out.push_back({-p, w.upper});
        }
        for (const Weight& q : supersym::predecessors(w.upper, Cone::Dominant)) {
            out.push_back({w.lower, q});
        }
        return out;
    }

    static bool element_less(const WeightPair& a, const WeightPair& b)
    {
        if (a.upper != b.upper) {
            return LexLess{}(a.upper, b.upper);
        }
        return LexLess{}(a.lower, b.lower);
    }

    bool operator==(const PairOrder&) const = default;

private:
    int m_;
    int n_;
};

/// Finitely generated ideal: the union of (g] over its generators.
///
/// Generators are kept pairwise incomparable and sorted, so two ideals with
/// the same generator set compare equal.
template <class Order>
class WeightIdeal {
public:
    using element_type = typename Order::element_type;

    WeightIdeal(Order order, std::vector<element_type> generators) : order_(std::move(order))
    {
        for (const element_type& g : generators) {
            if (!order_.contains(g)) {
                throw std::invalid_argument("generator outside the poset");
            }
        }
        for (const element_type& g : generators) {
            const bool below_other = std::any_of(generators.begin(), generators.end(), [&](const element_type& h) {
                return !(g == h) && order_.leq(g, h);
            });
            const bool duplicate = std::find(gens_.begin(), gens_.end(), g) != gens_.end();
            if (!below_other && !duplicate) {
                gens_.push_back(g);
            }
        }
        std::sort(gens_.begin(), gens_.end(), [](const element_type& a, const element_type& b) {
            return Order::element_less(b, a);
        });
    }

    const Order& order() const { return order_; }
    const std::vector<element_type>& generators() const { return gens_; }
    bool empty() const { return gens_.empty(); }

    /// Membership in the ideal; throws if the element is not in the poset at all.
    bool contains(const element_type& w) const
    {
        if (!order_.contains(w)) {
            throw std::invalid_argument("element outside the poset of this ideal");
        }
        return std::any_of(gens_.begin(), gens_.end(), [&](const element_type& g) { return order_.leq(w, g); });
    }

    bool operator==(const WeightIdeal&) const = default;

private:
    Order order_;
    std::vector<element_type> gens_;
};

template <class Order>
bool ideal_member(const WeightIdeal<Order>& ideal, const typename Order::element_type& w)
{
    return ideal.contains(w);
}

/// Gamma_1: the ideal generated by all predecessors of Gamma's generators.
template <class Order>
WeightIdeal<Order> chain_step(const WeightIdeal<Order>& ideal)
{
    std::vector<typename Order::element_type> preds;
    for (const auto& g : ideal.generators()) {
        for (auto& p : ideal.order().predecessors(g)) {
            preds.push_back(std::move(p));
        }
    }
    return WeightIdeal<Order>(ideal.order(), std::move(preds));
}

/// Gamma \ Gamma_k. Each layer Gamma_j \ Gamma_{j+1} is exactly the generator
/// set of Gamma_j, so the slice is the union of the first k generator sets.
template <class Order>
std::vector<typename Order::element_type> complement_slice(const WeightIdeal<Order>& ideal, int k)
{
    std::vector<typename Order::element_type> out;
    WeightIdeal<Order> current = ideal;
    for (int j = 0; j < k && !current.empty(); ++j) {
        out.insert(out.end(), current.generators().begin(), current.generators().end());
        if (j + 1 < k) {
            current = chain_step(current);
        }
    }
    return out;
}

/// Orders dominant weights so that a later entry is never strictly larger.
///
/// Sorting by total descending, then lexicographically descending, is a linear
/// extension of the reversed dominance order: lambda < mu forces equal totals
/// and mu lexicographically larger.
inline void sort_dk_order(std::vector<Weight>& ws)
{
    std::sort(ws.begin(), ws.end(), [](const Weight& a, const Weight& b) {
        if (a.total() != b.total()) {
            return a.total() > b.total();
        }
        return LexLess{}(b, a);
    });
}

/// Weights lambda with (-lambda, lambda) in Gamma \ Gamma_cutoff, each once,
/// ordered so that k < l never has lambda_k < lambda_l.
inline std::vector<Weight> dk_weight_sequence(const WeightIdeal<PairOrder>& ideal, int cutoff)
{
    if (cutoff < 1) {
        throw std::invalid_argument("cutoff must be at least 1");
    }
    std::vector<Weight> out;
    for (const WeightPair& w : complement_slice(ideal, cutoff)) {
        if (w.lower == -w.upper && std::find(out.begin(), out.end(), w.upper) == out.end()) {
            out.push_back(w.upper);
        }
    }
    sort_dk_order(out);
    return out;
}

} // namespace supersym

#endif
