#pragma once

#include <functional>
#include <map>

#include "basex/multigraph.hpp"

namespace basex {

/// A base of the cycle matroid: edge ids of a spanning forest, sorted ascending.
using Base = std::vector<int>;

inline bool base_contains(const Base& b, int e) {
    return std::binary_search(b.begin(), b.end(), e);
}

inline Base base_swap(const Base& b, int out, int in) {
    Base r;
    r.reserve(b.size());
    for (int e : b)
        if (e != out) r.push_back(e);
    r.insert(std::upper_bound(r.begin(), r.end(), in), in);
    return r;
}

inline std::string base_to_string(const Base& b) {
    std::string s;
    for (size_t i = 0; i < b.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(b[i]);
    }
    return s;
}

inline bool is_base(const MultiGraph& g, const Base& b) {
    return detail::is_base(g, b, graph_rank(g));
}

inline int rank(const MultiGraph& g) { return graph_rank(g); }

/// Streams every spanning forest once, in lexicographic order of the sorted
/// edge-id lists. The visitor may return false to stop early.
inline void for_each_base(const MultiGraph& g, const std::function<bool(const Base&)>& visit) {
    const int r = graph_rank(g);
    const int m = g.edge_count();
    UnionFind uf(g.vertex_count);
    Base current;
    current.reserve(r);
    bool stop = false;
    auto extend = [&](auto&& self, int from) -> void {
        if (stop) return;
        if (static_cast<int>(current.size()) == r) {
            if (!visit(current)) stop = true;
            return;
        }
        int need = r - static_cast<int>(current.size());
        for (int e = from; e + need <= m && !stop; ++e) {
            auto [a, b] = g.edges[e];
            size_t mark = uf.mark();
            if (!uf.merge(a, b)) continue;
            current.push_back(e);
            self(self, e + 1);
            current.pop_back();
            uf.rollback(mark);
        }
    };
    extend(extend, 0);
}

inline std::vector<Base> enumerate_bases(const MultiGraph& g) {
    std::vector<Base> out;
    for_each_base(g, [&](const Base& b) {
        out.push_back(b);
        return true;
    });
    return out;
}

/// Spanning-tree count by the matrix-tree theorem (connected graphs);
/// independent oracle for enumerate_bases in tests.
inline long long matrix_tree_count(const MultiGraph& g) {
    int n = g.vertex_count;
    if (n <= 1) return 1;
    // Laplacian minor determinant, fraction-free Gaussian elimination.
    std::vector<std::vector<long double>> lap(n, std::vector<long double>(n, 0));
    for (auto [a, b] : g.edges) {
        if (a == b) continue;
        lap[a][a] += 1;
        lap[b][b] += 1;
        lap[a][b] -= 1;
        lap[b][a] -= 1;
    }
    int d = n - 1;
    long double det = 1;
    for (int i = 0; i < d; ++i) {
        int pivot = -1;
        for (int rrow = i; rrow < d; ++rrow)
            if (std::abs((double)lap[rrow][i]) > 1e-9) {
                pivot = rrow;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != i) {
            std::swap(lap[pivot], lap[i]);
            det = -det;
        }
        det *= lap[i][i];
        for (int rrow = i + 1; rrow < d; ++rrow) {
            long double f = lap[rrow][i] / lap[i][i];
            for (int ccol = i; ccol < d; ++ccol) lap[rrow][ccol] -= f * lap[i][ccol];
        }
    }
    return static_cast<long long>(det + (det > 0 ? 0.5 : -0.5));
}

/// Replaces edge i by multiplicity[i] parallel copies (zero copies deletes).
struct ParallelExtension {
    MultiGraph parent;
    std::vector<int> multiplicity;
    MultiGraph child;
    std::vector<int> alpha;                 // child edge id -> parent edge id
    std::vector<std::vector<int>> fibers;   // parent edge id -> child ids, ascending
};

inline ParallelExtension parallel_extension(const MultiGraph& g, const std::vector<int>& S) {
    if (static_cast<int>(S.size()) != g.edge_count())
        throw std::invalid_argument("parallel_extension: |S| != |E|");
    ParallelExtension ext;
    ext.parent = g;
    ext.multiplicity = S;
    ext.fibers.resize(g.edge_count());
    std::vector<std::pair<int, int>> child_edges;
    for (int i = 0; i < g.edge_count(); ++i) {
        if (S[i] < 0) throw std::invalid_argument("parallel_extension: negative multiplicity");
        for (int c = 0; c < S[i]; ++c) {
            ext.fibers[i].push_back(static_cast<int>(child_edges.size()));
            ext.alpha.push_back(i);
            child_edges.push_back(g.edges[i]);
        }
    }
    ext.child = MultiGraph(g.vertex_count, std::move(child_edges));
    return ext;
}

inline Base alpha_image(const ParallelExtension& ext, const Base& child_base) {
    Base img;
    img.reserve(child_base.size());
    for (int e : child_base) img.push_back(ext.alpha[e]);
    std::sort(img.begin(), img.end());
    return img;
}

/// Splits the parallel copies among the given parent bases: the j-th base
/// containing edge i (in list order) receives the j-th copy. Requires the
/// multiset union of `bases` to match the multiplicity vector exactly.
inline std::vector<Base> lift_tuple(const ParallelExtension& ext, const std::vector<Base>& bases) {
    std::vector<int> count(ext.parent.edge_count(), 0);
    for (const Base& b : bases)
        for (int e : b) ++count[e];
    for (int i = 0; i < ext.parent.edge_count(); ++i)
        if (count[i] != ext.multiplicity[i])
            throw std::invalid_argument("lift_tuple: multiset union does not match multiplicity");
    std::vector<int> used(ext.parent.edge_count(), 0);
    std::vector<Base> lifted;
    lifted.reserve(bases.size());
    for (const Base& b : bases) {
        Base x;
        x.reserve(b.size());
        for (int e : b) x.push_back(ext.fibers[e][used[e]++]);
        std::sort(x.begin(), x.end());
        lifted.push_back(std::move(x));
    }
    return lifted;
}

/// One child per connected component; isolated vertices are dropped.
struct ComponentPiece {
    MultiGraph graph;
    std::vector<int> vertex_map;  // child vertex -> parent vertex
    std::vector<int> edge_map;    // child edge -> parent edge
};

inline std::vector<ComponentPiece> split_components(const MultiGraph& g) {
    auto blocks = components(g, g.all_edges());
    std::vector<int> block_of(g.vertex_count, -1);
    for (size_t i = 0; i < blocks.size(); ++i)
        for (int v : blocks[i]) block_of[v] = static_cast<int>(i);
    std::vector<ComponentPiece> out;
    for (const auto& block : blocks) {
        if (block.size() == 1) {
            // keep only if it carries a loop
            int v = block[0];
            bool has_edge = false;
            for (auto [a, b] : g.edges)
                if (a == v && b == v) has_edge = true;
            if (!has_edge) continue;
        }
        ComponentPiece piece;
        std::vector<int> local(g.vertex_count, -1);
        for (int v : block) {
            local[v] = static_cast<int>(piece.vertex_map.size());
            piece.vertex_map.push_back(v);
        }
        std::vector<std::pair<int, int>> es;
        for (int e = 0; e < g.edge_count(); ++e) {
            auto [a, b] = g.edges[e];
            if (local[a] < 0) continue;
            es.emplace_back(local[a], local[b]);
            piece.edge_map.push_back(e);
        }
        piece.graph = MultiGraph(static_cast<int>(piece.vertex_map.size()), std::move(es));
        out.push_back(std::move(piece));
    }
    return out;
}

}  // namespace basex
