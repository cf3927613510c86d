#ifndef GONAL_GRAPH_HPP
#define GONAL_GRAPH_HPP

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gonal {

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;

    Graph(int n, std::vector<std::pair<int, int>> edge_list) : n_(n) {
        if (n < 0)
            throw std::invalid_argument("graph: negative vertex count");
        for (auto& [u, v] : edge_list) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw std::invalid_argument("graph: edge endpoint out of range: " +
                                            std::to_string(u) + " " + std::to_string(v));
            if (u == v)
                throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(u));
            if (u > v)
                std::swap(u, v);
        }
        std::sort(edge_list.begin(), edge_list.end());
        edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
        edges_ = std::move(edge_list);
        adj_.assign(n_, {});
        for (auto [u, v] : edges_) {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (auto& nb : adj_)
            std::sort(nb.begin(), nb.end());
    }

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    bool has_edge(int u, int v) const {
        const auto& nb = adj_[u];
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    int min_degree() const {
        int d = n_ == 0 ? 0 : degree(0);
        for (int v = 1; v < n_; ++v)
            d = std::min(d, degree(v));
        return d;
    }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

/// Square integer matrix indexed by vertex order.
struct IntMatrix {
    int n = 0;
    std::vector<long long> a;  // row-major

    explicit IntMatrix(int size = 0) : n(size), a(static_cast<size_t>(size) * size, 0) {}

    long long& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    long long at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

    bool operator==(const IntMatrix& other) const { return n == other.n && a == other.a; }
};

/// Laplacian Q = degree matrix minus adjacency matrix.
inline IntMatrix laplacian(const Graph& g) {
    IntMatrix q(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v)
        q.at(v, v) = g.degree(v);
    for (auto [u, v] : g.edges()) {
        q.at(u, v) = -1;
        q.at(v, u) = -1;
    }
    return q;
}

/// BFS distances from v; unreachable vertices get -1.
inline std::vector<int> distances_from(const Graph& g, int v) {
    std::vector<int> dist(g.num_vertices(), -1);
    std::queue<int> q;
    dist[v] = 0;
    q.push(v);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbors(u)) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

inline bool is_connected(const Graph& g) {
    if (g.num_vertices() <= 1)
        return true;
    auto dist = distances_from(g, 0);
    return std::find(dist.begin(), dist.end(), -1) == dist.end();
}

/// Genus |E| - |V| + 1 of a connected graph.
inline int genus(const Graph& g) {
    if (!is_connected(g))
        throw std::invalid_argument("genus: graph must be connected");
    return g.num_edges() - g.num_vertices() + 1;
}

namespace detail {

inline bool connected_after_deleting(const Graph& g, const std::vector<char>& deleted) {
    int n = g.num_vertices();
    int start = -1, remaining = 0;
    for (int v = 0; v < n; ++v) {
        if (!deleted[v]) {
            ++remaining;
            if (start < 0)
                start = v;
        }
    }
    if (remaining <= 1)
        return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int found = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(u)) {
            if (!deleted[w] && !seen[w]) {
                seen[w] = 1;
                ++found;
                stack.push_back(w);
            }
        }
    }
    return found == remaining;
}

template <class F>
bool for_each_subset_of_size(int n, int k, F&& fn) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i)
        idx[i] = i;
    while (true) {
        if (!fn(idx))
            return false;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i)
            --i;
        if (i < 0)
            return true;
        ++idx[i];
        for (int j = i + 1; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace detail

/// Exhaustive k-connectivity check: |V| > k and no vertex set of size < k disconnects.
inline bool is_k_connected(const Graph& g, int k) {
    if (k <= 0)
        throw std::invalid_argument("is_k_connected: k must be positive");
    int n = g.num_vertices();
    if (n <= k)
        return false;
    std::vector<char> deleted(n, 0);
    for (int size = 0; size < k; ++size) {
        bool ok = detail::for_each_subset_of_size(n, size, [&](const std::vector<int>& subset) {
            std::fill(deleted.begin(), deleted.end(), 0);
            for (int v : subset)
                deleted[v] = 1;
            return detail::connected_after_deleting(g, deleted);
        });
        if (!ok)
            return false;
    }
    return true;
}

/// Induced subgraph on `keep` (in the given order); keep[i] becomes vertex i.
/// Optionally reports the old->new index map (-1 for dropped vertices).
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& keep,
                              std::vector<int>* old_to_new = nullptr) {
    std::vector<int> map(g.num_vertices(), -1);
    for (size_t i = 0; i < keep.size(); ++i) {
        if (map[keep[i]] != -1)
            throw std::invalid_argument("induced_subgraph: duplicate vertex in keep list");
        map[keep[i]] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        if (map[u] >= 0 && map[v] >= 0)
            edges.emplace_back(map[u], map[v]);
    if (old_to_new)
        *old_to_new = map;
    return Graph(static_cast<int>(keep.size()), std::move(edges));
}

/// Blocks (biconnected components) as vertex sets, each sorted; isolated
/// vertices form no block. Standard DFS lowpoint algorithm with an edge stack.
inline std::vector<std::vector<int>> blocks(const Graph& g) {
    int n = g.num_vertices();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<std::vector<int>> result;
    int timer = 0;

    auto pop_block = [&](std::pair<int, int> until) {
        std::vector<int> verts;
        while (true) {
            auto e = edge_stack.back();
            edge_stack.pop_back();
            verts.push_back(e.first);
            verts.push_back(e.second);
            if (e == until)
                break;
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        result.push_back(std::move(verts));
    };

    // Iterative DFS; frame = (vertex, parent, neighbor index).
    struct Frame {
        int v, parent;
        size_t next;
    };
    for (int root = 0; root < n; ++root) {
        if (disc[root] != -1)
            continue;
        std::vector<Frame> stack{{root, -1, 0}};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& nb = g.neighbors(f.v);
            if (f.next < nb.size()) {
                int w = nb[f.next++];
                if (w == f.parent)
                    continue;
                if (disc[w] == -1) {
                    edge_stack.emplace_back(f.v, w);
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, f.v, 0});
                } else if (disc[w] < disc[f.v]) {
                    edge_stack.emplace_back(f.v, w);
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                int v = f.v, parent = f.parent;
                stack.pop_back();
                if (parent >= 0) {
                    low[parent] = std::min(low[parent], low[v]);
                    if (low[v] >= disc[parent])
                        pop_block({parent, v});
                }
            }
        }
    }
    return result;
}

/// Cut vertices: vertices lying in two or more blocks.
inline std::vector<int> cut_vertices(const Graph& g) {
    std::vector<int> count(g.num_vertices(), 0);
    for (const auto& block : blocks(g))
        for (int v : block)
            ++count[v];
    std::vector<int> cuts;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (count[v] >= 2)
            cuts.push_back(v);
    return cuts;
}

}  // namespace gonal

#endif  // GONAL_GRAPH_HPP
