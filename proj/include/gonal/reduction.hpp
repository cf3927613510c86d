#ifndef GONAL_REDUCTION_HPP
#define GONAL_REDUCTION_HPP

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "gonal/divisor.hpp"
#include "gonal/graph.hpp"

namespace gonal {

/// Outcome of the burning closure seeded at a vertex.
struct BurnResult {
    std::vector<char> burnt_mask;  // per vertex
    std::vector<int> burnt;        // sorted
    std::vector<int> unburnt;      // sorted complement

    bool all_burnt() const { return unburnt.empty(); }
};

/// Burning closure: the seed burns, and a vertex burns as soon as its burnt
/// neighbors outnumber its chips. The burnt set is the minimal set containing
/// the seed that is closed under this rule; the value at the seed itself is
/// never consulted.
inline BurnResult burn(const Graph& g, const Divisor& d, int seed) {
    int n = g.num_vertices();
    if (seed < 0 || seed >= n)
        throw std::invalid_argument("burn: seed out of range");
    BurnResult res;
    res.burnt_mask.assign(n, 0);
    std::vector<long long> burnt_neighbors(n, 0);
    std::vector<int> queue{seed};
    res.burnt_mask[seed] = 1;
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        for (int w : g.neighbors(v)) {
            if (res.burnt_mask[w])
                continue;
            if (++burnt_neighbors[w] > d[w]) {
                res.burnt_mask[w] = 1;
                queue.push_back(w);
            }
        }
    }
    for (int v = 0; v < n; ++v)
        (res.burnt_mask[v] ? res.burnt : res.unburnt).push_back(v);
    return res;
}

/// The clump centred at v: the intersection of all sets S containing v with
/// D(w) >= |N(w) cap S| for every w outside S. Equals the burnt set of the
/// closure seeded at v.
inline std::vector<int> clump(const Graph& g, const Divisor& d, int v) {
    return burn(g, d, v).burnt;
}

/// True iff no non-empty set avoiding v can be fired legally, i.e. the
/// closure from v consumes the whole graph.
inline bool is_v_reduced(const Graph& g, const Divisor& d, int v) {
    return burn(g, d, v).all_burnt();
}

namespace detail {

// Dhar loop: repeatedly fire the maximal legal set avoiding q (the unburnt
// complement) until the closure from q consumes everything. Requires all
// entries except possibly q to be non-negative.
inline Divisor dhar_reduce(const Graph& g, Divisor d, int q) {
    constexpr long long kMaxRounds = 1LL << 24;
    for (long long round = 0; round < kMaxRounds; ++round) {
        BurnResult res = burn(g, d, q);
        if (res.all_burnt())
            return d;
        d = fire_set(g, d, res.unburnt);
    }
    throw std::logic_error("dhar_reduce: firing loop exceeded round cap");
}

}  // namespace detail

/// The unique v-reduced effective divisor equivalent to an effective D.
inline Divisor v_reduce(const Graph& g, const Divisor& d, int v) {
    if (!is_connected(g))
        throw std::invalid_argument("v_reduce: graph must be connected");
    if (!d.is_effective())
        throw std::invalid_argument("v_reduce: divisor must be effective");
    return detail::dhar_reduce(g, d, v);
}

/// q-reduced form of an arbitrary integer divisor. First clears debt outside
/// q by firing balls around q from the outermost distance layer inwards (a
/// ball firing only feeds the next layer out and drains the layer below it),
/// then runs the Dhar loop. The result is >= 0 away from q; the divisor class
/// contains an effective divisor iff the value at q is also >= 0.
inline Divisor reduce_divisor(const Graph& g, const Divisor& d, int q) {
    int n = g.num_vertices();
    if (d.size() != n)
        throw std::invalid_argument("reduce_divisor: divisor size mismatch");
    if (!is_connected(g))
        throw std::invalid_argument("reduce_divisor: graph must be connected");
    Divisor r = d;
    auto dist = distances_from(g, q);
    int max_layer = *std::max_element(dist.begin(), dist.end());
    for (int layer = max_layer; layer >= 1; --layer) {
        long long fires = 0;
        for (int v = 0; v < n; ++v) {
            if (dist[v] != layer || r[v] >= 0)
                continue;
            long long inward = 0;
            for (int w : g.neighbors(v))
                if (dist[w] == layer - 1)
                    ++inward;
            fires = std::max(fires, (-r[v] + inward - 1) / inward);
        }
        if (fires == 0)
            continue;
        for (auto [u, v] : g.edges()) {
            int du = dist[u], dv = dist[v];
            if (du == layer - 1 && dv == layer) {
                r[u] -= fires;
                r[v] += fires;
            } else if (dv == layer - 1 && du == layer) {
                r[v] -= fires;
                r[u] += fires;
            }
        }
    }
    return detail::dhar_reduce(g, r, q);
}

/// True iff some effective divisor is equivalent to D.
inline bool has_effective_equivalent(const Graph& g, const Divisor& d, int q = 0) {
    return reduce_divisor(g, d, q).is_effective();
}

/// Equivalence via the exact integer firing-script witness.
inline bool equivalent(const Graph& g, const Divisor& a, const Divisor& b) {
    return firing_script(g, a, b).has_value();
}

/// max{D'(v) : D' effective, D' ~ D}: the value a v-reduced form takes at v.
inline long long max_at_vertex(const Graph& g, const Divisor& d, int v) {
    if (!d.is_effective())
        throw std::invalid_argument("max_at_vertex: divisor must be effective");
    return v_reduce(g, d, v)[v];
}

}  // namespace gonal

#endif  // GONAL_REDUCTION_HPP
