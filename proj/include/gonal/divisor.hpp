#ifndef GONAL_DIVISOR_HPP
#define GONAL_DIVISOR_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gonal/graph.hpp"

namespace gonal {

/// Integer vector indexed by the vertices of an associated graph.
struct Divisor {
    std::vector<long long> values;

    Divisor() = default;
    explicit Divisor(std::vector<long long> v) : values(std::move(v)) {}
    Divisor(std::initializer_list<long long> v) : values(v) {}

    static Divisor zero(int n) { return Divisor(std::vector<long long>(n, 0)); }

    int size() const { return static_cast<int>(values.size()); }
    long long& operator[](int v) { return values[v]; }
    long long operator[](int v) const { return values[v]; }

    long long degree() const {
        return std::accumulate(values.begin(), values.end(), 0LL);
    }

    bool is_effective() const {
        return std::all_of(values.begin(), values.end(), [](long long x) { return x >= 0; });
    }

    std::vector<int> support() const {
        std::vector<int> s;
        for (int v = 0; v < size(); ++v)
            if (values[v] != 0)
                s.push_back(v);
        return s;
    }

    bool operator==(const Divisor& o) const { return values == o.values; }
    bool operator<(const Divisor& o) const { return values < o.values; }
};

inline Divisor operator+(const Divisor& a, const Divisor& b) {
    Divisor r = a;
    for (int v = 0; v < r.size(); ++v)
        r[v] += b[v];
    return r;
}

inline Divisor operator-(const Divisor& a, const Divisor& b) {
    Divisor r = a;
    for (int v = 0; v < r.size(); ++v)
        r[v] -= b[v];
    return r;
}

inline bool is_effective(const Divisor& d) { return d.is_effective(); }

/// Integer vector S acting on divisors by D' = D - Q S.
struct FiringScript {
    std::vector<long long> values;

    FiringScript() = default;
    explicit FiringScript(std::vector<long long> v) : values(std::move(v)) {}

    int size() const { return static_cast<int>(values.size()); }
    long long& operator[](int v) { return values[v]; }
    long long operator[](int v) const { return values[v]; }

    bool operator==(const FiringScript& o) const { return values == o.values; }
};

/// Q S as a divisor.
inline Divisor laplacian_apply(const Graph& g, const FiringScript& s) {
    Divisor r = Divisor::zero(g.num_vertices());
    for (auto [u, v] : g.edges()) {
        long long diff = s[u] - s[v];
        r[u] += diff;
        r[v] -= diff;
    }
    return r;
}

namespace detail {

inline void check_vertex_set(const Graph& g, const std::vector<int>& set) {
    if (set.empty())
        throw std::invalid_argument("fire_set: empty vertex set");
    for (int v : set)
        if (v < 0 || v >= g.num_vertices())
            throw std::invalid_argument("fire_set: vertex out of range");
}

}  // namespace detail

/// Fire the subset A: one chip crosses every edge leaving A.
inline Divisor fire_set(const Graph& g, const Divisor& d, const std::vector<int>& set) {
    detail::check_vertex_set(g, set);
    std::vector<char> in_set(g.num_vertices(), 0);
    for (int v : set)
        in_set[v] = 1;
    Divisor r = d;
    for (auto [u, v] : g.edges()) {
        if (in_set[u] != in_set[v]) {
            if (in_set[u]) {
                --r[u];
                ++r[v];
            } else {
                --r[v];
                ++r[u];
            }
        }
    }
    return r;
}

/// A move is legal when every vertex keeps a non-negative chip count.
inline bool is_legal_move(const Graph& g, const Divisor& d, const std::vector<int>& set) {
    return fire_set(g, d, set).is_effective();
}

namespace detail {

// Exact solve of the grounded Laplacian system (last row/column dropped) by
// fraction-free Bareiss elimination. Intermediate entries are minors of the
// grounded Laplacian, i.e. spanning-forest counts; overflow past __int128 is
// detected and reported rather than wrapped.
using int128 = __int128;

inline int128 checked_mul(int128 a, int128 b) {
    int128 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("firing_script: intermediate value exceeds 128 bits");
    return r;
}

inline int128 checked_sub(int128 a, int128 b) {
    int128 r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("firing_script: intermediate value exceeds 128 bits");
    return r;
}

// Solves M x = rhs for the (n-1)x(n-1) grounded Laplacian. Returns false if
// some component is non-integral; otherwise fills x with the integer solution.
inline bool solve_grounded_laplacian(const Graph& g, const std::vector<long long>& rhs,
                                     std::vector<long long>& x) {
    int m = g.num_vertices() - 1;
    if (m == 0) {
        x.clear();
        return true;
    }
    std::vector<std::vector<int128>> a(m, std::vector<int128>(m + 1, 0));
    for (int i = 0; i < m; ++i) {
        a[i][i] = g.degree(i);
        a[i][m] = rhs[i];
    }
    for (auto [u, v] : g.edges())
        if (u < m && v < m) {
            a[u][v] = -1;
            a[v][u] = -1;
        }

    // Grounded Laplacians of connected graphs are positive definite, so the
    // leading pivots never vanish and no row exchange is needed.
    int128 prev = 1;
    for (int k = 0; k < m; ++k) {
        if (a[k][k] == 0)
            throw std::invalid_argument("firing_script: graph must be connected");
        for (int i = k + 1; i < m; ++i) {
            for (int j = k + 1; j <= m; ++j)
                a[i][j] = checked_sub(checked_mul(a[k][k], a[i][j]),
                                      checked_mul(a[i][k], a[k][j])) /
                          prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }

    // Back substitution over exact integers: det * x_i must divide evenly.
    int128 det = a[m - 1][m - 1];
    std::vector<int128> num(m);
    for (int i = m - 1; i >= 0; --i) {
        int128 s = checked_mul(a[i][m], det);
        for (int j = i + 1; j < m; ++j)
            s = checked_sub(s, checked_mul(a[i][j], num[j]));
        if (s % a[i][i] != 0)
            return false;
        num[i] = s / a[i][i];
        if (num[i] % det != 0)
            return false;
    }
    x.resize(m);
    for (int i = 0; i < m; ++i) {
        int128 xi = num[i] / det;
        x[i] = static_cast<long long>(xi);
        if (x[i] != xi)
            throw std::overflow_error("firing_script: solution exceeds 64 bits");
    }
    return true;
}

}  // namespace detail

/// Exact witness of equivalence: the integer script S with to = from - Q S,
/// normalized so min(S) = 0. Returns nullopt when no integer script exists.
/// On a connected graph the solution space is a line S + c*1, so pinning the
/// last coordinate to zero and shifting afterwards loses nothing.
inline std::optional<FiringScript> firing_script(const Graph& g, const Divisor& from,
                                                 const Divisor& to) {
    int n = g.num_vertices();
    if (from.size() != n || to.size() != n)
        throw std::invalid_argument("firing_script: divisor size mismatch");
    if (!is_connected(g))
        throw std::invalid_argument("firing_script: graph must be connected");
    Divisor b = from - to;
    if (b.degree() != 0)
        return std::nullopt;
    std::vector<long long> rhs(b.values.begin(), b.values.end() - 1);
    std::vector<long long> x;
    if (!detail::solve_grounded_laplacian(g, rhs, x))
        return std::nullopt;
    x.push_back(0);
    long long lo = *std::min_element(x.begin(), x.end());
    for (auto& v : x)
        v -= lo;
    return FiringScript(std::move(x));
}

/// Nested chain of set firings carrying one effective divisor to another,
/// with every intermediate divisor effective.
struct ChainDecomposition {
    std::vector<std::vector<int>> sets;  // A_1 subseteq ... subseteq A_t
    std::vector<Divisor> divisors;       // D_0, ..., D_t
};

/// The unique chain connecting equivalent effective divisors: level sets of
/// the min-normalized firing script, fired from the top level down.
inline ChainDecomposition chain_decompose(const Graph& g, const Divisor& from,
                                          const Divisor& to) {
    if (!from.is_effective() || !to.is_effective())
        throw std::invalid_argument("chain_decompose: divisors must be effective");
    auto script = firing_script(g, from, to);
    if (!script)
        throw std::invalid_argument("chain_decompose: divisors are not equivalent");
    long long t = *std::max_element(script->values.begin(), script->values.end());
    ChainDecomposition chain;
    chain.divisors.push_back(from);
    for (long long i = 1; i <= t; ++i) {
        std::vector<int> level;
        for (int v = 0; v < g.num_vertices(); ++v)
            if ((*script)[v] >= t - i + 1)
                level.push_back(v);
        Divisor next = fire_set(g, chain.divisors.back(), level);
        if (!next.is_effective())
            throw std::logic_error("chain_decompose: intermediate divisor not effective");
        chain.sets.push_back(std::move(level));
        chain.divisors.push_back(std::move(next));
    }
    if (chain.divisors.back() != to)
        throw std::logic_error("chain_decompose: chain does not reach target");
    return chain;
}

/// Visits every effective divisor of the given degree on n vertices in
/// ascending lexicographic order. The visitor returns false to stop early;
/// the function returns false if stopped.
template <class F>
bool for_each_effective_divisor(int n, long long degree, F&& visit) {
    if (n == 0)
        return degree != 0 || visit(Divisor{});
    Divisor d = Divisor::zero(n);
    // Self-recursive lambda assigning positions left to right.
    auto rec = [&](auto&& self, int pos, long long remaining) -> bool {
        if (pos == n - 1) {
            d[pos] = remaining;
            bool keep = visit(const_cast<const Divisor&>(d));
            d[pos] = 0;
            return keep;
        }
        for (long long v = 0; v <= remaining; ++v) {
            d[pos] = v;
            if (!self(self, pos + 1, remaining - v)) {
                d[pos] = 0;
                return false;
            }
        }
        d[pos] = 0;
        return true;
    };
    return rec(rec, 0, degree);
}

}  // namespace gonal

#endif  // GONAL_DIVISOR_HPP
