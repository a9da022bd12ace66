#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace basex {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

/// Fixed-capacity bit set over edge identifiers.
class EdgeSet {
public:
    EdgeSet() = default;
    explicit EdgeSet(int capacity) : capacity_(capacity), words_((capacity + 63) / 64, 0) {}

    static EdgeSet of(int capacity, std::initializer_list<int> ids) {
        EdgeSet s(capacity);
        for (int e : ids) s.insert(e);
        return s;
    }
    template <class Range>
    static EdgeSet from_range(int capacity, const Range& ids) {
        EdgeSet s(capacity);
        for (int e : ids) s.insert(e);
        return s;
    }

    int capacity() const { return capacity_; }
    bool contains(int e) const {
        check(e);
        return (words_[e >> 6] >> (e & 63)) & 1u;
    }
    void insert(int e) {
        check(e);
        words_[e >> 6] |= std::uint64_t(1) << (e & 63);
    }
    void erase(int e) {
        check(e);
        words_[e >> 6] &= ~(std::uint64_t(1) << (e & 63));
    }
    int size() const {
        int n = 0;
        for (auto w : words_) n += __builtin_popcountll(w);
        return n;
    }
    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    bool is_subset_of(const EdgeSet& other) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }
    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(size());
        for (int e = 0; e < capacity_; ++e)
            if (contains(e)) out.push_back(e);
        return out;
    }

    friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

private:
    void check(int e) const {
        if (e < 0 || e >= capacity_) throw std::out_of_range("edge id out of range");
    }
    int capacity_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Labeled multigraph; edge identity is the position in `edges`.
struct MultiGraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;

    MultiGraph() = default;
    MultiGraph(int n, std::vector<std::pair<int, int>> es) : vertex_count(n), edges(std::move(es)) {
        for (auto [a, b] : edges)
            if (a < 0 || a >= vertex_count || b < 0 || b >= vertex_count)
                throw std::invalid_argument("edge endpoint out of range");
    }

    int edge_count() const { return static_cast<int>(edges.size()); }
    bool has_loop() const {
        for (auto [a, b] : edges)
            if (a == b) return true;
        return false;
    }
    EdgeSet all_edges() const {
        EdgeSet s(edge_count());
        for (int e = 0; e < edge_count(); ++e) s.insert(e);
        return s;
    }

    friend bool operator==(const MultiGraph&, const MultiGraph&) = default;
};

/// Union-find with union by size; supports rollback for search kernels.
class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n), size_(n, 1), components_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) const {
        while (parent_[x] != x) x = parent_[x];
        return x;
    }
    bool same(int a, int b) const { return find(a) == find(b); }
    int components() const { return components_; }

    // Returns false (and records nothing) if a and b were already joined.
    bool merge(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        --components_;
        trail_.push_back({a, b});
        return true;
    }

    size_t mark() const { return trail_.size(); }
    void rollback(size_t mark) {
        while (trail_.size() > mark) {
            auto [a, b] = trail_.back();
            trail_.pop_back();
            size_[a] -= size_[b];
            parent_[b] = b;
            ++components_;
        }
    }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    int components_;
    std::vector<std::array<int, 2>> trail_;
};

/// Parses the edge-list format: "n m" header, then m lines "u v" (1-based).
/// Blank lines and lines starting with '#' are ignored.
inline MultiGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream ls(line);
        long long a, b;
        if (!(ls >> a >> b)) throw ParseError(lineno, "expected two integers");
        std::string rest;
        if (ls >> rest) throw ParseError(lineno, "trailing characters: '" + rest + "'");
        if (n < 0) {
            if (a < 0 || b < 0) throw ParseError(lineno, "negative counts in header");
            n = static_cast<int>(a);
            m = static_cast<int>(b);
            continue;
        }
        if (a < 1 || a > n)
            throw ParseError(lineno, "vertex id " + std::to_string(a) + " exceeds declared count " +
                                         std::to_string(n));
        if (b < 1 || b > n)
            throw ParseError(lineno, "vertex id " + std::to_string(b) + " exceeds declared count " +
                                         std::to_string(n));
        edges.emplace_back(static_cast<int>(a) - 1, static_cast<int>(b) - 1);
    }
    if (n < 0) throw ParseError(lineno, "missing header line");
    if (static_cast<int>(edges.size()) != m)
        throw ParseError(lineno, "declared " + std::to_string(m) + " edges, found " +
                                     std::to_string(edges.size()));
    return MultiGraph(n, std::move(edges));
}

inline MultiGraph parse_graph(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_graph(ss.str());
}

/// Connected components of the spanning subgraph (V, s).
/// Blocks are sorted internally and by their minimum vertex.
inline std::vector<std::vector<int>> components(const MultiGraph& g, const EdgeSet& s) {
    UnionFind uf(g.vertex_count);
    for (int e = 0; e < g.edge_count(); ++e)
        if (s.contains(e)) uf.merge(g.edges[e].first, g.edges[e].second);
    std::vector<std::vector<int>> by_root(g.vertex_count);
    for (int v = 0; v < g.vertex_count; ++v) by_root[uf.find(v)].push_back(v);
    std::vector<std::vector<int>> out;
    for (auto& block : by_root)
        if (!block.empty()) out.push_back(std::move(block));
    return out;
}

inline int component_count(const MultiGraph& g, const EdgeSet& s) {
    UnionFind uf(g.vertex_count);
    for (int e = 0; e < g.edge_count(); ++e)
        if (s.contains(e)) uf.merge(g.edges[e].first, g.edges[e].second);
    return uf.components();
}

/// Rank of the cycle matroid: |V| - #components over all edges.
inline int graph_rank(const MultiGraph& g) {
    return g.vertex_count - component_count(g, g.all_edges());
}

namespace detail {

// Acyclicity of a sorted/unsorted edge id list; no spanning requirement.
template <class Range>
bool is_forest(const MultiGraph& g, const Range& ids) {
    UnionFind uf(g.vertex_count);
    for (int e : ids) {
        auto [a, b] = g.edges[e];
        if (!uf.merge(a, b)) return false;
    }
    return true;
}

template <class Range>
bool is_base(const MultiGraph& g, const Range& ids, int rank) {
    int count = 0;
    UnionFind uf(g.vertex_count);
    for (int e : ids) {
        auto [a, b] = g.edges[e];
        if (!uf.merge(a, b)) return false;
        ++count;
    }
    return count == rank;
}

}  // namespace detail

/// True iff s is a spanning forest: acyclic with exactly rank(g) edges.
inline bool is_spanning_forest(const MultiGraph& g, const EdgeSet& s) {
    int count = 0;
    UnionFind uf(g.vertex_count);
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!s.contains(e)) continue;
        auto [a, b] = g.edges[e];
        if (!uf.merge(a, b)) return false;
        ++count;
    }
    return count == graph_rank(g);
}

inline std::vector<int> vertex_degrees(const MultiGraph& g) {
    std::vector<int> deg(g.vertex_count, 0);
    for (auto [a, b] : g.edges) {
        ++deg[a];
        ++deg[b];  // a loop counts twice
    }
    return deg;
}

/// Vertex of minimum degree, smallest id on ties.
inline int min_degree_vertex(const MultiGraph& g) {
    if (g.vertex_count == 0) throw std::invalid_argument("min_degree_vertex: empty graph");
    auto deg = vertex_degrees(g);
    return static_cast<int>(std::min_element(deg.begin(), deg.end()) - deg.begin());
}

/// Relationship between a graph and a derived graph built by unsubdivision.
/// Synthetic edges replace matched pairs of star edges; `e_star` is the
/// smallest star edge left unmatched.
struct DerivedGraphMap {
    static constexpr int kSynthetic = -1;

    MultiGraph parent;
    MultiGraph child;
    int removed_vertex = -1;
    EdgeSet cocircuit;                            // star(removed_vertex) in parent ids
    std::vector<int> edge_origin;                 // child id -> parent id, or kSynthetic
    std::vector<std::array<int, 2>> pre_edges;    // child id -> the two parent pre-edges (synthetic only)
    std::vector<int> relabel;                     // parent id -> child id, -1 if removed
    std::vector<int> vertex_map;                  // parent vertex -> child vertex, -1 for removed
    int e_star = -1;                              // parent edge id
    std::vector<int> synthetic_ids;               // child ids of synthetic edges, ascending

    bool is_synthetic(int child_edge) const { return edge_origin[child_edge] == kSynthetic; }
};

/// Edges incident to v (loops at v included).
inline EdgeSet star(const MultiGraph& g, int v) {
    EdgeSet s(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e)
        if (g.edges[e].first == v || g.edges[e].second == v) s.insert(e);
    return s;
}

/// Deletes v and its star; each matched pair of star edges is replaced by a
/// synthetic edge joining the two non-v endpoints. At least one star edge
/// must stay unmatched; the smallest such edge becomes e_star.
inline DerivedGraphMap unsubdivide(const MultiGraph& g, int v,
                                   const std::vector<std::pair<int, int>>& matching) {
    if (v < 0 || v >= g.vertex_count) throw std::invalid_argument("unsubdivide: bad vertex");
    EdgeSet c = star(g, v);
    for (int e = 0; e < g.edge_count(); ++e)
        if (c.contains(e) && g.edges[e].first == g.edges[e].second)
            throw std::invalid_argument("unsubdivide: loop at v");

    EdgeSet matched(g.edge_count());
    for (auto [a, b] : matching) {
        if (a == b) throw std::invalid_argument("unsubdivide: degenerate pair");
        for (int e : {a, b}) {
            if (!c.contains(e)) throw std::invalid_argument("unsubdivide: pair edge not in star");
            if (matched.contains(e)) throw std::invalid_argument("unsubdivide: pairs not disjoint");
            matched.insert(e);
        }
    }
    DerivedGraphMap ctx;
    ctx.parent = g;
    ctx.removed_vertex = v;
    ctx.cocircuit = c;
    ctx.e_star = -1;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (c.contains(e) && !matched.contains(e)) {
            ctx.e_star = e;
            break;
        }
    }
    if (ctx.e_star < 0) throw std::invalid_argument("unsubdivide: no unmatched star edge");

    ctx.vertex_map.assign(g.vertex_count, -1);
    int next = 0;
    for (int u = 0; u < g.vertex_count; ++u)
        if (u != v) ctx.vertex_map[u] = next++;

    ctx.relabel.assign(g.edge_count(), -1);
    std::vector<std::pair<int, int>> child_edges;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (c.contains(e)) continue;
        ctx.relabel[e] = static_cast<int>(child_edges.size());
        ctx.edge_origin.push_back(e);
        ctx.pre_edges.push_back({-1, -1});
        auto [a, b] = g.edges[e];
        child_edges.emplace_back(ctx.vertex_map[a], ctx.vertex_map[b]);
    }
    auto sorted_matching = matching;
    for (auto& p : sorted_matching)
        if (p.first > p.second) std::swap(p.first, p.second);
    std::sort(sorted_matching.begin(), sorted_matching.end());
    auto other_end = [&](int e) {
        auto [a, b] = g.edges[e];
        return a == v ? b : a;
    };
    for (auto [a, b] : sorted_matching) {
        int id = static_cast<int>(child_edges.size());
        ctx.edge_origin.push_back(DerivedGraphMap::kSynthetic);
        ctx.pre_edges.push_back({a, b});
        ctx.synthetic_ids.push_back(id);
        child_edges.emplace_back(ctx.vertex_map[other_end(a)], ctx.vertex_map[other_end(b)]);
    }
    ctx.child = MultiGraph(next, std::move(child_edges));
    return ctx;
}

}  // namespace basex
