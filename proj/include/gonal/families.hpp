#ifndef GONAL_FAMILIES_HPP
#define GONAL_FAMILIES_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gonal/graph.hpp"

namespace gonal {

/// Fan: vertex 0 universal, vertices 1..n-1 a path in index order.
inline Graph fan(int n) {
    if (n < 2)
        throw std::invalid_argument("fan: need at least 2 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
        edges.emplace_back(0, v);
    for (int v = 1; v + 1 < n; ++v)
        edges.emplace_back(v, v + 1);
    return Graph(n, std::move(edges));
}

/// Rectangular grid with `rows` x `cols` vertices; (i,j) gets index i*cols+j.
inline Graph grid(int rows, int cols) {
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("grid: dimensions must be positive");
    std::vector<std::pair<int, int>> edges;
    auto id = [cols](int i, int j) { return i * cols + j; };
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            if (j + 1 < cols)
                edges.emplace_back(id(i, j), id(i, j + 1));
            if (i + 1 < rows)
                edges.emplace_back(id(i, j), id(i + 1, j));
        }
    return Graph(rows * cols, std::move(edges));
}

/// Cycle on vertices 0..length-1 with i adjacent to i+-1 mod length.
inline Graph cycle(int length) {
    if (length < 3)
        throw std::invalid_argument("cycle: need at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < length; ++v)
        edges.emplace_back(v, (v + 1) % length);
    return Graph(length, std::move(edges));
}

/// Parameters of a chain of equal cycles whose block-cut tree is a path.
struct CycleChainSpec {
    int block_count;   // g >= 3
    int cycle_length;  // b >= 3
    int cut_distance;  // 1 <= k < b; clockwise offset between cut vertices

    void validate() const {
        if (block_count < 3)
            throw std::invalid_argument("cycle_chain: need at least 3 blocks");
        if (cycle_length < 3)
            throw std::invalid_argument("cycle_chain: cycles need at least 3 vertices");
        if (cut_distance < 1 || cut_distance >= cycle_length)
            throw std::invalid_argument("cycle_chain: cut distance must lie in [1, cycle length)");
    }
};

/// A cycle chain together with its block structure.
struct CycleChain {
    Graph graph;
    std::vector<std::vector<int>> blocks;  // cycle order, starting at the entry cut vertex
    std::vector<int> cut_vertices;         // v_1, ..., v_{g-1} in chain order
};

/// Chain of g cycles of length b glued along a path of blocks. Block 0 is the
/// plain cycle 0..b-1 with exit vertex 0; each later block starts at the
/// previous exit and runs clockwise through b-1 fresh vertices; its own exit
/// sits k steps clockwise from its entry.
inline CycleChain cycle_chain(const CycleChainSpec& spec) {
    spec.validate();
    int g = spec.block_count, b = spec.cycle_length, k = spec.cut_distance;
    CycleChain chain;
    std::vector<std::pair<int, int>> edges;

    std::vector<int> block0(b);
    for (int j = 0; j < b; ++j) {
        block0[j] = j;
        edges.emplace_back(j, (j + 1) % b);
    }
    chain.blocks.push_back(std::move(block0));
    int exit = 0;

    for (int i = 1; i < g; ++i) {
        chain.cut_vertices.push_back(exit);
        int base = b + (i - 1) * (b - 1);
        std::vector<int> block{exit};
        for (int j = 0; j < b - 1; ++j)
            block.push_back(base + j);
        for (int j = 0; j < b; ++j)
            edges.emplace_back(block[j], block[(j + 1) % b]);
        exit = block[k];
        chain.blocks.push_back(std::move(block));
    }

    chain.graph = Graph(g * (b - 1) + 1, std::move(edges));
    return chain;
}

/// Path on n-1 vertices plus k-1 universal vertices. Universal vertices come
/// first, so universal_path(n, 2) is index-identical to fan(n).
inline Graph universal_path(int n, int k) {
    if (n < 3)
        throw std::invalid_argument("universal_path: need n >= 3");
    if (k < 2)
        throw std::invalid_argument("universal_path: need k >= 2");
    int total = (k - 1) + (n - 1);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < k - 1; ++u)
        for (int v = u + 1; v < total; ++v)
            edges.emplace_back(u, v);
    for (int v = k - 1; v + 1 < total; ++v)
        edges.emplace_back(v, v + 1);
    return Graph(total, std::move(edges));
}

/// Connected graph of the given genus whose gonality is floor((g+3)/2):
/// small grids for genus <= 2, otherwise a chain of g cycles with unit cut
/// offset. With offset 1 the cycle-length term of the chain-gonality formula
/// equals the cycle length itself, so length floor((g+3)/2) pins the value.
inline Graph genus_witness(int genus) {
    if (genus < 0)
        throw std::invalid_argument("genus_witness: genus must be non-negative");
    if (genus <= 2)
        return grid(std::max(genus + 1, 2), std::min(genus + 1, 2));
    int b = std::max(3, (genus + 3) / 2);
    return cycle_chain({genus, b, 1}).graph;
}

/// Injective vertex map witnessing a subgraph embedding.
struct SubgraphCertificate {
    std::vector<int> mapping;  // pattern vertex -> host vertex
};

/// True iff the mapping is injective and carries every pattern edge to a
/// host edge.
inline bool verify_subgraph(const SubgraphCertificate& cert, const Graph& pattern,
                            const Graph& host) {
    if (static_cast<int>(cert.mapping.size()) != pattern.num_vertices())
        return false;
    std::vector<char> used(host.num_vertices(), 0);
    for (int image : cert.mapping) {
        if (image < 0 || image >= host.num_vertices() || used[image])
            return false;
        used[image] = 1;
    }
    for (auto [u, v] : pattern.edges())
        if (!host.has_edge(cert.mapping[u], cert.mapping[v]))
            return false;
    return true;
}

/// A cycle chain embedded in a 3-row grid.
struct GridEmbedding {
    Graph host;
    CycleChain pattern;
    SubgraphCertificate certificate;
};

/// Serpentine embedding of the chain of (2t0-3) cycles of length 2t0 with cut
/// offset t0-1 into the 3 x ((2t0-3)(t0-1)+1) grid. Each block occupies t0
/// consecutive columns: its entry-to-exit arc runs along the middle row and
/// the other arc loops through the bottom or top row, alternating per block.
inline GridEmbedding grid_embedding(int t0) {
    if (t0 < 4)
        throw std::invalid_argument("grid_embedding: need t0 >= 4");
    int g = 2 * t0 - 3, b = 2 * t0, k = t0 - 1;
    int cols = g * k + 1;
    GridEmbedding emb;
    emb.host = grid(3, cols);
    emb.pattern = cycle_chain({g, b, k});
    auto host_id = [cols](int row, int col) { return row * cols + col; };

    emb.certificate.mapping.assign(emb.pattern.graph.num_vertices(), -1);
    for (int i = 0; i < g; ++i) {
        const std::vector<int>& block = emb.pattern.blocks[i];
        int left = i * k, right = (i + 1) * k;
        int off_row = (i % 2 == 0) ? 2 : 0;
        if (i == 0) {
            // Mirrored: block 0's exit is at position 0 and must land on the
            // right edge of its span.
            for (int j = 0; j <= k; ++j)
                emb.certificate.mapping[block[j]] = host_id(1, right - j);
            for (int j = k + 1; j < b; ++j)
                emb.certificate.mapping[block[j]] = host_id(off_row, j - (k + 1));
        } else {
            for (int j = 0; j <= k; ++j)
                emb.certificate.mapping[block[j]] = host_id(1, left + j);
            for (int j = k + 1; j < b; ++j)
                emb.certificate.mapping[block[j]] = host_id(off_row, right - (j - (k + 1)));
        }
    }
    return emb;
}

/// Replaces every cut vertex lying in exactly two blocks by a bridge: one
/// copy per block, joined by a new edge. Edges stay within their block's
/// copy, so the block-cut tree keeps its path shape. Vertices in fewer or
/// more than two blocks are left alone.
inline Graph bridge_split(const Graph& g) {
    if (!is_connected(g))
        throw std::invalid_argument("bridge_split: graph must be connected");
    auto block_list = blocks(g);
    int n = g.num_vertices();

    std::vector<std::vector<int>> blocks_of(n);
    for (int bi = 0; bi < static_cast<int>(block_list.size()); ++bi)
        for (int v : block_list[bi])
            blocks_of[v].push_back(bi);

    // Block index of an edge: the unique block containing both endpoints.
    auto edge_block = [&](int u, int v) {
        for (int bi : blocks_of[u])
            for (int bj : blocks_of[v])
                if (bi == bj)
                    return bi;
        throw std::logic_error("bridge_split: edge in no block");
    };

    // Split vertices keep their index for the lower-numbered block's copy;
    // second copies are appended past n in increasing vertex order.
    int next_id = n;
    std::vector<std::pair<int, int>> copy_ids(n, {-1, -1});
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) {
        if (blocks_of[v].size() == 2) {
            copy_ids[v] = {v, next_id++};
            edges.emplace_back(v, copy_ids[v].second);
        }
    }

    auto image = [&](int v, int block_index) {
        if (copy_ids[v].first < 0)
            return v;
        return block_index == blocks_of[v][0] ? copy_ids[v].first : copy_ids[v].second;
    };
    for (auto [u, v] : g.edges()) {
        int bi = edge_block(u, v);
        edges.emplace_back(image(u, bi), image(v, bi));
    }
    return Graph(next_id, std::move(edges));
}

}  // namespace gonal

#endif  // GONAL_FAMILIES_HPP
