#pragma once

#include <random>

#include "basex/ideal.hpp"

namespace basex {

/// Multigraph isomorphism by backtracking over degree-compatible vertex maps.
inline bool isomorphic(const MultiGraph& a, const MultiGraph& b) {
    if (a.vertex_count != b.vertex_count || a.edge_count() != b.edge_count()) return false;
    const int n = a.vertex_count;
    auto mat = [n](const MultiGraph& g) {
        std::vector<int> m(n * n, 0);
        for (auto [u, v] : g.edges) {
            ++m[u * n + v];
            if (u != v) ++m[v * n + u];
        }
        return m;
    };
    std::vector<int> ma = mat(a), mb = mat(b);
    std::vector<int> da = vertex_degrees(a), db = vertex_degrees(b);
    {
        auto sa = da, sb = db;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    std::vector<int> map(n, -1);
    std::vector<char> used(n, 0);
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == n) return true;
        for (int w = 0; w < n; ++w) {
            if (used[w] || da[v] != db[w] || ma[v * n + v] != mb[w * n + w]) continue;
            bool ok = true;
            for (int u = 0; u < v; ++u)
                if (ma[v * n + u] != mb[w * n + map[u]]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            map[v] = w;
            used[w] = 1;
            if (self(self, v + 1)) return true;
            used[w] = 0;
            map[v] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

/// Isomorphism-invariant bucket key: degree sequence plus sorted per-vertex
/// neighborhood profiles (multiplicity, neighbor degree).
inline std::string iso_invariant(const MultiGraph& g) {
    const int n = g.vertex_count;
    std::vector<int> deg = vertex_degrees(g);
    std::vector<std::vector<int>> mult(n, std::vector<int>(n, 0));
    for (auto [u, v] : g.edges) {
        ++mult[u][v];
        if (u != v) ++mult[v][u];
    }
    std::vector<std::string> profiles;
    for (int v = 0; v < n; ++v) {
        std::vector<std::pair<int, int>> prof;
        for (int u = 0; u < n; ++u)
            if (mult[v][u]) prof.push_back({mult[v][u], u == v ? -1 : deg[u]});
        std::sort(prof.begin(), prof.end());
        std::string s = std::to_string(deg[v]) + ":";
        for (auto [c, d] : prof) s += std::to_string(c) + "x" + std::to_string(d) + ",";
        profiles.push_back(std::move(s));
    }
    std::sort(profiles.begin(), profiles.end());
    std::string key = std::to_string(n) + "|" + std::to_string(g.edge_count()) + "|";
    for (auto& p : profiles) key += p + ";";
    return key;
}

/// All loop-free connected multigraphs on n labeled vertices with m edges,
/// in a deterministic order. With up_to_iso, one representative per class
/// (enumeration restricted to labelings where every vertex has a smaller
/// neighbor, then deduplicated by invariant bucket + isomorphism test).
inline std::vector<MultiGraph> connected_multigraphs(int n, int m, bool up_to_iso) {
    std::vector<MultiGraph> out;
    if (n <= 0) return out;
    if (n == 1) {
        if (m == 0) out.push_back(MultiGraph(1, {}));
        return out;
    }
    if (m < n - 1) return out;
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) pairs.push_back({a, b});
    std::vector<std::pair<int, int>> edges;
    std::map<std::string, std::vector<size_t>> buckets;
    auto emit = [&]() {
        MultiGraph g(n, edges);
        if (!up_to_iso) {
            if (graph_rank(g) == n - 1) out.push_back(std::move(g));
            return;
        }
        auto& bucket = buckets[iso_invariant(g)];
        for (size_t idx : bucket)
            if (isomorphic(out[idx], g)) return;
        bucket.push_back(out.size());
        out.push_back(std::move(g));
    };
    if (up_to_iso) {
        std::vector<char> covered(n, 0);
        covered[0] = 1;
        int uncovered = n - 1;
        auto rec = [&](auto&& self, size_t idx) -> void {
            if (idx == pairs.size()) {
                if (static_cast<int>(edges.size()) == m && uncovered == 0) emit();
                return;
            }
            auto [a, b] = pairs[idx];
            const int remaining = m - static_cast<int>(edges.size());
            for (int c = 0; c <= remaining; ++c) {
                if (c == 0 && a == b - 1 && !covered[b]) continue;  // last chance to cover b
                bool newly = c > 0 && !covered[b];
                for (int t = 0; t < c; ++t) edges.push_back({a, b});
                if (newly) {
                    covered[b] = 1;
                    --uncovered;
                }
                if (uncovered <= m - static_cast<int>(edges.size())) self(self, idx + 1);
                if (newly) {
                    covered[b] = 0;
                    ++uncovered;
                }
                edges.resize(edges.size() - c);
            }
        };
        rec(rec, 0);
    } else {
        auto rec = [&](auto&& self, size_t idx) -> void {
            if (idx == pairs.size()) {
                if (static_cast<int>(edges.size()) == m) emit();
                return;
            }
            const int remaining = m - static_cast<int>(edges.size());
            for (int c = 0; c <= remaining; ++c) {
                for (int t = 0; t < c; ++t) edges.push_back(pairs[idx]);
                self(self, idx + 1);
                edges.resize(edges.size() - c);
            }
        };
        rec(rec, 0);
    }
    return out;
}

struct SweepSummary {
    std::string mode;
    int max_edges = 0;
    int k = 0;
    bool up_to_iso = false;
    long long graphs = 0;
    long long instances = 0;
    long long failures = 0;
    std::vector<std::string> failure_samples;

    void fail(std::string what) {
        ++failures;
        if (failure_samples.size() < 10) failure_samples.push_back(std::move(what));
    }
};

inline std::string describe_graph(const MultiGraph& g) {
    std::string s = std::to_string(g.vertex_count) + "v";
    for (auto [u, v] : g.edges) s += " " + std::to_string(u) + "-" + std::to_string(v);
    return s;
}

/// Connectivity of the single exchange graph over all connected multigraphs
/// with |E| = 2 rank and |E| <= max_edges.
inline SweepSummary sweep_theorem7(int max_edges, bool up_to_iso) {
    SweepSummary s;
    s.mode = "theorem7";
    s.max_edges = max_edges;
    s.k = 2;
    s.up_to_iso = up_to_iso;
    for (int m = 0; m <= max_edges; m += 2) {
        int n = m / 2 + 1;
        for (const MultiGraph& g : connected_multigraphs(n, m, up_to_iso)) {
            ++s.graphs;
            ++s.instances;
            try {
                if (!is_connected(build_single_exchange_graph(g)))
                    s.fail("single exchange graph disconnected: " + describe_graph(g));
            } catch (const std::exception& e) {
                s.fail("error on " + describe_graph(g) + ": " + e.what());
            }
        }
    }
    return s;
}

/// Connectivity of the k-base graph over all connected multigraphs with
/// |E| = k rank and |E| <= max_edges.
inline SweepSummary sweep_theorem4(int max_edges, int k, bool up_to_iso) {
    if (k < 2) throw std::invalid_argument("sweep_theorem4: k must be at least 2");
    SweepSummary s;
    s.mode = "theorem4";
    s.max_edges = max_edges;
    s.k = k;
    s.up_to_iso = up_to_iso;
    for (int m = 0; m <= max_edges; m += k) {
        int n = m / k + 1;
        for (const MultiGraph& g : connected_multigraphs(n, m, up_to_iso)) {
            ++s.graphs;
            ++s.instances;
            try {
                if (!is_connected(build_k_base_graph(g, k)))
                    s.fail("k-base graph disconnected: " + describe_graph(g));
            } catch (const std::exception& e) {
                s.fail("error on " + describe_graph(g) + ": " + e.what());
            }
        }
    }
    return s;
}

namespace detail {

inline void for_each_fiber(const MultiGraph& g, const std::vector<Base>& bases, int k,
                           const std::function<void(const std::vector<int>&,
                                                    const std::vector<std::vector<int>>&)>& visit) {
    // groups k-multisets of base indices by edge exponent
    std::map<std::vector<int>, std::vector<std::vector<int>>> fibers;
    std::vector<int> expo(g.edge_count(), 0);
    std::vector<int> pick;
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(pick.size()) == k) {
            fibers[expo].push_back(pick);
            return;
        }
        for (int i = from; i < static_cast<int>(bases.size()); ++i) {
            for (int e : bases[i]) ++expo[e];
            pick.push_back(i);
            self(self, i);
            pick.pop_back();
            for (int e : bases[i]) --expo[e];
        }
    };
    rec(rec, 0);
    for (auto& [s, members] : fibers) visit(s, members);
}

}  // namespace detail

/// Fiber connectivity plus certificate round-trips over every connected
/// multigraph with at most max_edges edges.
inline SweepSummary sweep_white(int max_edges, int k, bool up_to_iso, int samples_per_fiber,
                                unsigned seed) {
    if (k < 2) throw std::invalid_argument("sweep_white: k must be at least 2");
    SweepSummary s;
    s.mode = "white";
    s.max_edges = max_edges;
    s.k = k;
    s.up_to_iso = up_to_iso;
    std::mt19937 rng(seed);
    for (int m = 1; m <= max_edges; ++m)
        for (int n = 2; n <= m + 1; ++n)
            for (const MultiGraph& g : connected_multigraphs(n, m, up_to_iso)) {
                ++s.graphs;
                auto bases = enumerate_bases(g);
                detail::for_each_fiber(
                    g, bases, k,
                    [&](const std::vector<int>& expo,
                        const std::vector<std::vector<int>>& members) {
                        ++s.instances;
                        try {
                            ExchangeGraph fg = build_multiset_fiber_graph(g, expo, k);
                            if (fg.vertices.size() != members.size()) {
                                s.fail("fiber size mismatch: " + describe_graph(g));
                                return;
                            }
                            if (!is_connected(fg)) {
                                s.fail("fiber graph disconnected: " + describe_graph(g));
                                return;
                            }
                            if (members.size() < 2) return;
                            for (int t = 0; t < samples_per_fiber; ++t) {
                                const auto& li = members[rng() % members.size()];
                                const auto& ri = members[rng() % members.size()];
                                BaseMonomial lhs, rhs;
                                for (int i : li) lhs.push_back(bases[i]);
                                for (int i : ri) rhs.push_back(bases[i]);
                                auto cert = decompose_to_quadrics(g, lhs, rhs);
                                auto vr = verify_certificate(g, cert);
                                if (!vr.ok) {
                                    s.fail("certificate failed on " + describe_graph(g) + ": " +
                                           vr.message);
                                    return;
                                }
                            }
                        } catch (const std::exception& e) {
                            s.fail("error on " + describe_graph(g) + ": " + e.what());
                        }
                    });
            }
    return s;
}

}  // namespace basex
