#pragma once

#include <map>
#include <optional>
#include <unordered_set>

#include "basex/exchange.hpp"

namespace basex {

/// Star of v, used as the cocircuit throughout the path algorithms.
inline EdgeSet cocircuit_star(const MultiGraph& g, int v) {
    EdgeSet s = star(g, v);
    for (int e : s.to_vector())
        if (g.edges[e].first == g.edges[e].second)
            throw std::invalid_argument("cocircuit_star: loop at v");
    return s;
}

/// Walk in the k-base graph; consecutive tuples share the recorded witness.
struct KPath {
    std::vector<KTuple> tuples;
    std::vector<Base> witnesses;

    void start(const KTuple& t) {
        tuples = {t};
        witnesses.clear();
    }
    const KTuple& back() const { return tuples.back(); }
    size_t length() const { return tuples.empty() ? 0 : tuples.size() - 1; }

    // Appends t unless it repeats the current endpoint.
    void push(const KTuple& t) {
        if (t == tuples.back()) return;
        Base w;
        for (const Base& b : tuples.back().bases)
            if (std::binary_search(t.bases.begin(), t.bases.end(), b)) {
                w = b;
                break;
            }
        tuples.push_back(t);
        witnesses.push_back(std::move(w));
    }
    void append(const KPath& other) {
        if (tuples.empty()) {
            *this = other;
            return;
        }
        if (!other.tuples.empty() && other.tuples.front() != tuples.back())
            throw std::logic_error("KPath::append: endpoint mismatch");
        for (size_t i = 1; i < other.tuples.size(); ++i) push(other.tuples[i]);
    }
    KPath reversed() const {
        KPath r;
        if (tuples.empty()) return r;
        r.start(tuples.back());
        for (size_t i = tuples.size(); i-- > 1;) r.push(tuples[i - 1]);
        return r;
    }
};

/// Walk in the single exchange graph; each step is one exchange on the
/// first component, recorded as (out, in).
struct PairPath {
    struct Swap {
        int out = -1;
        int in = -1;
    };
    std::vector<OrderedPair> pairs;
    std::vector<Swap> swaps;

    void start(const OrderedPair& p) {
        pairs = {p};
        swaps.clear();
    }
    const OrderedPair& back() const { return pairs.back(); }
    size_t length() const { return pairs.empty() ? 0 : pairs.size() - 1; }

    void push(const OrderedPair& p) {
        if (p == pairs.back()) return;
        Swap s;
        for (int e : pairs.back().first)
            if (!base_contains(p.first, e)) s.out = e;
        for (int e : p.first)
            if (!base_contains(pairs.back().first, e)) s.in = e;
        pairs.push_back(p);
        swaps.push_back(s);
    }
    void append(const PairPath& other) {
        if (pairs.empty()) {
            *this = other;
            return;
        }
        if (!other.pairs.empty() && other.pairs.front() != pairs.back())
            throw std::logic_error("PairPath::append: endpoint mismatch");
        for (size_t i = 1; i < other.pairs.size(); ++i) push(other.pairs[i]);
    }
    PairPath reversed() const {
        PairPath r;
        if (pairs.empty()) return r;
        r.start(pairs.back());
        for (size_t i = pairs.size(); i-- > 1;) r.push(pairs[i - 1]);
        return r;
    }
};

inline void verify_kpath(const MultiGraph& g, int k, const KPath& path, const KTuple& from,
                         const KTuple& to) {
    if (path.tuples.empty() || path.tuples.front() != from || path.back() != to)
        throw std::logic_error("kpath verification: endpoints do not match");
    for (size_t i = 0; i < path.tuples.size(); ++i)
        if (!validate_k_tuple(g, path.tuples[i], k))
            throw std::logic_error("kpath verification: invalid tuple at step " + std::to_string(i));
    for (size_t i = 0; i + 1 < path.tuples.size(); ++i)
        if (!adjacent_k(path.tuples[i], path.tuples[i + 1]))
            throw std::logic_error("kpath verification: junction " + std::to_string(i) +
                                   " not adjacent");
}

inline void verify_pair_path(const MultiGraph& g, const PairPath& path, const OrderedPair& from,
                             const OrderedPair& to) {
    if (path.pairs.empty() || path.pairs.front() != from || path.back() != to)
        throw std::logic_error("pair path verification: endpoints do not match");
    for (size_t i = 0; i < path.pairs.size(); ++i)
        if (!validate_ordered_pair(g, path.pairs[i]))
            throw std::logic_error("pair path verification: invalid pair at step " +
                                   std::to_string(i));
    for (size_t i = 0; i + 1 < path.pairs.size(); ++i)
        if (!adjacent_single(g, path.pairs[i], path.pairs[i + 1]))
            throw std::logic_error("pair path verification: junction " + std::to_string(i) +
                                   " not adjacent");
}

/// Partial matching on the cocircuit C: one edge per member meeting C twice.
struct MatchingGraph {
    std::vector<std::pair<int, int>> pairs;  // (lo, hi), sorted
    std::vector<int> owner;                  // member index, parallel to pairs
};

using PairSet = std::vector<std::pair<int, int>>;

inline std::vector<int> c_elements(const Base& b, const EdgeSet& c) {
    std::vector<int> out;
    for (int e : b)
        if (c.contains(e)) out.push_back(e);
    return out;
}

inline MatchingGraph matching_graph(const MultiGraph& g, const KTuple& t, const EdgeSet& c) {
    (void)g;
    std::vector<std::pair<std::pair<int, int>, int>> acc;
    for (int i = 0; i < t.k(); ++i) {
        auto s = c_elements(t.bases[i], c);
        if (s.size() > 2) throw std::invalid_argument("matching_graph: tuple not balanced");
        if (s.size() == 2) acc.push_back({{s[0], s[1]}, i});
    }
    std::sort(acc.begin(), acc.end());
    MatchingGraph m;
    for (auto& [p, o] : acc) {
        m.pairs.push_back(p);
        m.owner.push_back(o);
    }
    return m;
}

inline PairSet pair_set(const KTuple& t, const EdgeSet& c) {
    PairSet ps;
    for (const Base& b : t.bases) {
        auto s = c_elements(b, c);
        if (s.size() > 2) throw std::invalid_argument("pair_set: tuple not balanced");
        if (s.size() == 2) ps.push_back({s[0], s[1]});
    }
    std::sort(ps.begin(), ps.end());
    return ps;
}

/// Repeated double swaps driving every |B_i n C| down to at most 2. Each step
/// moves a C-edge from an overloaded member into one meeting C once, choosing
/// the edge outside the part of C holding the receiver's C-edge.
inline KPath balance(const MultiGraph& g, const KTuple& t, int v) {
    EdgeSet c = cocircuit_star(g, v);
    KPath path;
    path.start(t);
    KTuple cur = t;
    const int guard = 4 * g.edge_count() + 4;
    for (int iter = 0; iter <= guard; ++iter) {
        int i = -1, j = -1;
        std::vector<std::vector<int>> prof(cur.k());
        for (int m = 0; m < cur.k(); ++m) {
            prof[m] = c_elements(cur.bases[m], c);
            if (i < 0 && prof[m].size() > 2) i = m;
        }
        if (i < 0) return path;
        for (int m = 0; m < cur.k(); ++m)
            if (prof[m].size() == 1) {
                j = m;
                break;
            }
        if (j < 0) throw std::logic_error("balance: no member meets C exactly once");
        // Partition of C by the components of B_i - C.
        UnionFind uf(g.vertex_count);
        for (int e : cur.bases[i])
            if (!c.contains(e)) uf.merge(g.edges[e].first, g.edges[e].second);
        auto other_end = [&](int e) {
            auto [a, b] = g.edges[e];
            return a == v ? b : a;
        };
        int forbidden_part = uf.find(other_end(prof[j][0]));
        int swap_out = -1;
        for (int e : prof[i])
            if (uf.find(other_end(e)) != forbidden_part) {
                swap_out = e;
                break;
            }
        if (swap_out < 0) throw std::logic_error("balance: no C-edge outside receiver's part");
        auto cands = double_swap_candidates(g, cur.bases[i], cur.bases[j], swap_out);
        if (cands.empty()) throw std::logic_error("balance: symmetric exchange failed");
        int d = cands.front();
        if (c.contains(d)) throw std::logic_error("balance: swap partner lies in C");
        cur = apply_double_swap(g, cur, i, j, swap_out, d);
        path.push(cur);
    }
    throw std::logic_error("balance: did not terminate within step bound");
}

namespace detail {

// Breadth-first over double swaps exchanging one C-edge for another (these
// preserve the balance profile), up to max_depth. Returns the first path
// found to each distinct matching pair set.
inline std::map<PairSet, KPath> reachable_matchings(const MultiGraph& g, const KTuple& t,
                                                    const EdgeSet& c, int max_depth) {
    struct Node {
        KTuple tuple;
        int parent;
    };
    std::vector<Node> nodes{{t, -1}};
    std::unordered_set<KTuple, TupleHash> seen{t};
    std::map<PairSet, int> first;
    first.emplace(pair_set(t, c), 0);
    const int r = graph_rank(g);
    size_t qi = 0, level_end = 1;
    int depth = 0;
    while (qi < nodes.size() && depth < max_depth) {
        for (; qi < level_end; ++qi) {
            const KTuple cur = nodes[qi].tuple;
            for (int i = 0; i < cur.k(); ++i) {
                auto si = c_elements(cur.bases[i], c);
                for (int j = i + 1; j < cur.k(); ++j) {
                    auto sj = c_elements(cur.bases[j], c);
                    for (int b : si)
                        for (int d : sj) {
                            Base nb = base_swap(cur.bases[i], b, d);
                            Base nd = base_swap(cur.bases[j], d, b);
                            if (!is_base(g, nb, r) || !is_base(g, nd, r)) continue;
                            std::vector<Base> bs = cur.bases;
                            bs[i] = std::move(nb);
                            bs[j] = std::move(nd);
                            KTuple next(std::move(bs));
                            if (!seen.insert(next).second) continue;
                            nodes.push_back({next, static_cast<int>(qi)});
                            first.emplace(pair_set(next, c),
                                          static_cast<int>(nodes.size()) - 1);
                        }
                }
            }
        }
        level_end = nodes.size();
        ++depth;
    }
    std::map<PairSet, KPath> out;
    for (auto& [ps, idx] : first) {
        std::vector<int> chain;
        for (int x = idx; x >= 0; x = nodes[x].parent) chain.push_back(x);
        KPath p;
        p.start(nodes[chain.back()].tuple);
        for (size_t x = chain.size(); x-- > 1;) p.push(nodes[chain[x - 1]].tuple);
        out.emplace(ps, std::move(p));
    }
    return out;
}

}  // namespace detail

/// One of the six matching-graph rewrites, together with the realizing walk.
struct ValidMove {
    int kind = 0;                  // 1..6 for (i)..(vi)
    std::array<int, 5> selection;  // e1..e5, -1 where unused
    PairSet removed;
    PairSet added;
    KPath realization;
};

namespace detail {

inline PairSet rewrite(const PairSet& h, const PairSet& removed, const PairSet& added) {
    PairSet out;
    for (auto p : h)
        if (std::find(removed.begin(), removed.end(), p) == removed.end()) out.push_back(p);
    for (auto p : added) out.push_back(p);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::pair<int, int> ordered(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

}  // namespace detail

/// All realizable moves of the six shapes over all selections of matched
/// pairs and isolated C-vertices. Realizability is decided by attempting
/// actual double swaps (paths of length at most 3).
inline std::vector<ValidMove> enumerate_valid_moves(const MultiGraph& g, const KTuple& t,
                                                    const EdgeSet& c) {
    PairSet h = pair_set(t, c);
    std::vector<int> isolated;
    {
        std::vector<char> covered(g.edge_count(), 0);
        for (auto [a, b] : h) covered[a] = covered[b] = 1;
        for (int e : c.to_vector())
            if (!covered[e]) isolated.push_back(e);
    }
    auto reach = detail::reachable_matchings(g, t, c, 3);
    std::vector<ValidMove> out;
    auto emit = [&](int kind, std::array<int, 5> sel, PairSet removed, PairSet added) {
        PairSet target = detail::rewrite(h, removed, added);
        auto it = reach.find(target);
        if (it == reach.end()) return;
        out.push_back({kind, sel, std::move(removed), std::move(added), it->second});
    };
    // (i)/(ii): one pair plus an isolated vertex.
    for (auto p : h)
        for (int x : isolated) {
            emit(1, {p.first, p.second, -1, -1, x}, {p}, {detail::ordered(p.first, x)});
            emit(2, {p.first, p.second, -1, -1, x}, {p}, {detail::ordered(p.second, x)});
        }
    // (iii)-(vi): selections of two distinct pairs (plus an isolated vertex
    // for (iii)/(iv)).
    for (size_t a = 0; a < h.size(); ++a)
        for (size_t b = 0; b < h.size(); ++b) {
            if (a == b) continue;
            auto [e1, e2] = h[a];
            auto [e3, e4] = h[b];
            for (int x : isolated) {
                emit(3, {e1, e2, e3, e4, x}, {h[b]}, {detail::ordered(e3, x)});
                emit(4, {e1, e2, e3, e4, x}, {h[b]}, {detail::ordered(e4, x)});
            }
            if (a < b) {
                emit(5, {e1, e2, e3, e4, -1}, {h[a], h[b]},
                     {detail::ordered(e1, e3), detail::ordered(e2, e4)});
                emit(6, {e1, e2, e3, e4, -1}, {h[a], h[b]},
                     {detail::ordered(e1, e4), detail::ordered(e2, e3)});
            }
        }
    return out;
}

namespace detail {

struct EqualizeSide {
    KTuple cur;
    KPath path;

    void apply(const KPath& sub) {
        path.append(sub);
        cur = path.back();
    }
};

// Bounded bidirectional search over all single double swaps; meets when both
// sides realize a common matching pair set. Safety net behind the
// constructive move-sequence procedure.
inline std::pair<KPath, KPath> equalize_fallback(const MultiGraph& g, const KTuple& tb,
                                                 const KTuple& td, const EdgeSet& c) {
    struct SideState {
        std::vector<std::pair<KTuple, int>> nodes;
        std::unordered_set<KTuple, TupleHash> seen;
        std::map<PairSet, int> matched;
        size_t qi = 0;
    };
    const int r = graph_rank(g);
    auto balanced = [&](const KTuple& t) {
        for (const Base& b : t.bases)
            if (c_elements(b, c).size() > 2) return false;
        return true;
    };
    SideState A, B;
    auto init = [&](SideState& s, const KTuple& t) {
        s.nodes.push_back({t, -1});
        s.seen.insert(t);
        s.matched.emplace(pair_set(t, c), 0);
    };
    init(A, tb);
    init(B, td);
    auto extract = [&](SideState& s, int idx) {
        std::vector<int> chain;
        for (int x = idx; x >= 0; x = s.nodes[x].second) chain.push_back(x);
        KPath p;
        p.start(s.nodes[chain.back()].first);
        for (size_t x = chain.size(); x-- > 1;) p.push(s.nodes[chain[x - 1]].first);
        return p;
    };
    auto common = [&]() -> std::optional<std::pair<KPath, KPath>> {
        for (auto& [ps, ia] : A.matched) {
            auto it = B.matched.find(ps);
            if (it != B.matched.end()) return std::pair{extract(A, ia), extract(B, it->second)};
        }
        return std::nullopt;
    };
    if (auto hit = common()) return *hit;
    const size_t node_cap = 400000;
    auto step = [&](SideState& s) {
        if (s.qi >= s.nodes.size()) return;
        const KTuple cur = s.nodes[s.qi].first;
        const int parent = static_cast<int>(s.qi);
        ++s.qi;
        for (int i = 0; i < cur.k(); ++i)
            for (int j = i + 1; j < cur.k(); ++j)
                for (int b : cur.bases[i])
                    for (int d : cur.bases[j]) {
                        Base nb = base_swap(cur.bases[i], b, d);
                        Base nd = base_swap(cur.bases[j], d, b);
                        if (!is_base(g, nb, r) || !is_base(g, nd, r)) continue;
                        std::vector<Base> bs = cur.bases;
                        bs[i] = std::move(nb);
                        bs[j] = std::move(nd);
                        KTuple next(std::move(bs));
                        if (!balanced(next)) continue;
                        if (!s.seen.insert(next).second) continue;
                        s.nodes.push_back({next, parent});
                        s.matched.emplace(pair_set(next, c), static_cast<int>(s.nodes.size()) - 1);
                    }
    };
    while ((A.qi < A.nodes.size() || B.qi < B.nodes.size()) &&
           A.nodes.size() + B.nodes.size() < node_cap) {
        step(A);
        step(B);
        if (auto hit = common()) return *hit;
    }
    throw std::logic_error("equalize_matchings: fallback search exhausted");
}

}  // namespace detail

/// Drives both tuples, by sequences of valid moves, to endpoints whose
/// matching graphs have equal pair sets.
inline std::pair<KPath, KPath> equalize_matchings(const MultiGraph& g, const KTuple& tb,
                                                  const KTuple& td, const EdgeSet& c) {
    detail::EqualizeSide A{tb, {}}, B{td, {}};
    A.path.start(tb);
    B.path.start(td);
    auto run = [&]() -> bool {
        std::vector<char> active(g.edge_count(), 0);
        for (int e : c.to_vector()) active[e] = 1;
        auto active_pairs = [&](const PairSet& h) {
            PairSet out;
            for (auto p : h)
                if (active[p.first] && active[p.second]) out.push_back(p);
            return out;
        };
        auto active_isolated = [&](const PairSet& h) {
            std::vector<char> covered(g.edge_count(), 0);
            for (auto [a, b] : h) covered[a] = covered[b] = 1;
            std::vector<int> out;
            for (int e : c.to_vector())
                if (active[e] && !covered[e]) out.push_back(e);
            return out;
        };
        const int guard = 4 * c.size() + 8;
        for (int iter = 0; iter <= guard; ++iter) {
            PairSet ha = pair_set(A.cur, c), hb = pair_set(B.cur, c);
            if (ha == hb) return true;
            auto reachA = detail::reachable_matchings(g, A.cur, c, 3);
            auto reachB = detail::reachable_matchings(g, B.cur, c, 3);
            PairSet pa = active_pairs(ha), pb = active_pairs(hb);
            auto isoA = active_isolated(ha), isoB = active_isolated(hb);
            if (isoA.size() != isoB.size()) return false;
            const int t = static_cast<int>(isoA.size());
            if (t == 0) return false;
            // I = vertices isolatable in at most one valid move.
            auto isolatable = [&](const PairSet& h, const PairSet& act,
                                  const std::vector<int>& iso,
                                  const std::map<PairSet, KPath>& reach) {
                std::map<int, std::optional<PairSet>> out;  // vertex -> target (nullopt = already)
                for (int x : iso) out[x] = std::nullopt;
                for (auto p : act)
                    for (int freed : {p.first, p.second}) {
                        int kept = freed == p.first ? p.second : p.first;
                        if (out.count(freed)) continue;
                        for (int x : iso) {
                            PairSet target =
                                detail::rewrite(h, {p}, {detail::ordered(kept, x)});
                            if (reach.count(target)) {
                                out[freed] = target;
                                break;
                            }
                        }
                    }
                return out;
            };
            auto ia = isolatable(ha, pa, isoA, reachA);
            auto ib = isolatable(hb, pb, isoB, reachB);
            int x = -1;
            for (auto& [vtx, tgt] : ia)
                if (ib.count(vtx)) {
                    x = vtx;
                    break;
                }
            if (x < 0) return false;
            if (ia[x]) A.apply(reachA.at(*ia[x]));
            if (ib[x]) B.apply(reachB.at(*ib[x]));
            if (t > 1) {
                active[x] = 0;
                continue;
            }
            // t == 1: pair x with a common neighbor if possible.
            ha = pair_set(A.cur, c);
            hb = pair_set(B.cur, c);
            if (ha == hb) return true;
            reachA = detail::reachable_matchings(g, A.cur, c, 3);
            reachB = detail::reachable_matchings(g, B.cur, c, 3);
            pa = active_pairs(ha);
            pb = active_pairs(hb);
            auto neighbor_targets = [&](const PairSet& h, const PairSet& act,
                                        const std::map<PairSet, KPath>& reach) {
                std::map<int, PairSet> out;  // y -> target pairing (x, y)
                for (auto p : act)
                    for (int y : {p.first, p.second}) {
                        if (out.count(y)) continue;
                        PairSet target = detail::rewrite(h, {p}, {detail::ordered(y, x)});
                        if (reach.count(target)) out[y] = target;
                    }
                return out;
            };
            auto na = neighbor_targets(ha, pa, reachA);
            auto nb = neighbor_targets(hb, pb, reachB);
            int y = -1;
            for (auto& [vtx, tgt] : na)
                if (nb.count(vtx)) {
                    y = vtx;
                    break;
                }
            if (y >= 0) {
                A.apply(reachA.at(na[y]));
                B.apply(reachB.at(nb[y]));
                active[x] = active[y] = 0;
                continue;
            }
            // Terminal phase: x stays isolated, all other active vertices are
            // paired on both sides; the union of the two matchings decomposes
            // into cycles which are shrunk pairwise.
            const int cycle_guard = 2 * c.size() + 4;
            for (int cguard = 0; cguard <= cycle_guard; ++cguard) {
                ha = pair_set(A.cur, c);
                hb = pair_set(B.cur, c);
                pa = active_pairs(ha);
                pb = active_pairs(hb);
                // Retire common pairs.
                bool removed = false;
                for (auto p : pa)
                    if (std::find(pb.begin(), pb.end(), p) != pb.end()) {
                        active[p.first] = active[p.second] = 0;
                        removed = true;
                    }
                if (removed) continue;
                if (pa.empty() && pb.empty()) break;
                auto partner = [&](const PairSet& ps, int vtx) {
                    for (auto p : ps) {
                        if (p.first == vtx) return p.second;
                        if (p.second == vtx) return p.first;
                    }
                    return -1;
                };
                int e1 = -1;
                for (auto p : pa) {
                    e1 = p.first;
                    break;
                }
                if (e1 < 0) return false;
                int e2 = partner(pa, e1);
                int e3 = partner(pb, e2);
                int e4 = partner(pa, e3);
                int e5 = partner(pb, e4);
                if (e2 < 0 || e3 < 0 || e4 < 0 || e5 < 0) return false;
                auto reachA2 = detail::reachable_matchings(g, A.cur, c, 3);
                auto reachB2 = detail::reachable_matchings(g, B.cur, c, 3);
                PairSet ta_common = detail::rewrite(
                    ha, {detail::ordered(e1, e2), detail::ordered(e3, e4)},
                    {detail::ordered(e2, e3), detail::ordered(e1, e4)});
                PairSet tb_common = detail::rewrite(
                    hb, {detail::ordered(e2, e3), detail::ordered(e4, e5)},
                    {detail::ordered(e3, e4), detail::ordered(e2, e5)});
                if (reachA2.count(ta_common)) {
                    A.apply(reachA2.at(ta_common));
                    continue;
                }
                if (reachB2.count(tb_common)) {
                    B.apply(reachB2.at(tb_common));
                    continue;
                }
                PairSet ta_cross = detail::rewrite(
                    ha, {detail::ordered(e1, e2), detail::ordered(e3, e4)},
                    {detail::ordered(e1, e3), detail::ordered(e2, e4)});
                PairSet tb_cross = detail::rewrite(
                    hb, {detail::ordered(e2, e3), detail::ordered(e4, e5)},
                    {detail::ordered(e2, e4), detail::ordered(e3, e5)});
                if (reachA2.count(ta_cross) && reachB2.count(tb_cross)) {
                    A.apply(reachA2.at(ta_cross));
                    B.apply(reachB2.at(tb_cross));
                    continue;
                }
                return false;
            }
        }
        return pair_set(A.cur, c) == pair_set(B.cur, c);
    };
    if (run()) return {A.path, B.path};
    // Constructive procedure exhausted its cases; fall back to bounded search
    // from the original endpoints.
    return detail::equalize_fallback(g, tb, td, c);
}

/// Pull-back choices pinned per child base: child base -> the full parent
/// member to use for it (so junction-shared members survive verbatim).
using PullHints = std::map<Base, Base>;

namespace detail {

inline Base map_child_base(const DerivedGraphMap& ctx, const Base& child_base,
                           std::vector<int>* synthetic) {
    Base out;
    for (int e : child_base) {
        if (ctx.is_synthetic(e)) {
            if (synthetic) synthetic->push_back(e);
        } else {
            out.push_back(ctx.edge_origin[e]);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// The member of a parent tuple that is a pull-back of the given child base,
// or empty if none matches.
inline Base member_for_child(const DerivedGraphMap& ctx, const KTuple& t, const Base& child_base) {
    std::vector<int> synth;
    Base mapped = map_child_base(ctx, child_base, &synth);
    std::vector<char> allowed(ctx.parent.edge_count(), 0);
    for (int s : synth)
        for (int e : ctx.pre_edges[s]) allowed[e] = 1;
    for (const Base& b : t.bases) {
        Base non_c, in_c;
        for (int e : b) (ctx.cocircuit.contains(e) ? in_c : non_c).push_back(e);
        if (non_c != mapped) continue;
        if (synth.empty()) {
            if (in_c.size() == 1) return b;
        } else {
            if (static_cast<int>(in_c.size()) != static_cast<int>(synth.size()) + 1) continue;
            bool ok = true;
            for (int e : in_c)
                if (!allowed[e]) ok = false;
            if (ok) return b;
        }
    }
    return {};
}

}  // namespace detail

/// Reconstructs a vertex of the parent k-base graph from a vertex of the
/// child graph: bases meeting the synthetic edges Z receive t+1 of their
/// pre-edges (lexicographically first choice that forms a base); leftover
/// pre-edges, e_star and the other unmatched star edges go one each to the
/// Z-free bases, smallest first unless a hint pins a choice.
inline KTuple pull_back(const DerivedGraphMap& ctx, const KTuple& child_tuple,
                        const PullHints* hints = nullptr) {
    const MultiGraph& g = ctx.parent;
    const int r = graph_rank(g);
    std::vector<Base> result(child_tuple.k());
    std::vector<int> pool;  // parent C-edges not yet consumed
    {
        std::vector<char> is_pre(g.edge_count(), 0);
        for (size_t s = 0; s < ctx.pre_edges.size(); ++s)
            if (ctx.edge_origin[s] == DerivedGraphMap::kSynthetic)
                for (int e : ctx.pre_edges[s]) is_pre[e] = 1;
        for (int e : ctx.cocircuit.to_vector())
            if (!is_pre[e]) pool.push_back(e);
    }
    auto hint_for = [&](const Base& child_base) -> const Base* {
        if (!hints) return nullptr;
        auto it = hints->find(child_base);
        return it == hints->end() ? nullptr : &it->second;
    };
    std::vector<int> z_free;
    for (int m = 0; m < child_tuple.k(); ++m) {
        std::vector<int> synth;
        Base mapped = detail::map_child_base(ctx, child_tuple.bases[m], &synth);
        if (synth.empty()) {
            z_free.push_back(m);
            result[m] = std::move(mapped);
            continue;
        }
        const int t = static_cast<int>(synth.size());
        std::vector<int> pre;
        for (int s : synth)
            for (int e : ctx.pre_edges[s]) pre.push_back(e);
        std::sort(pre.begin(), pre.end());
        // A pinned member is reused verbatim when consistent with this child
        // base (same non-star part, star part drawn from its own pre-edges).
        if (const Base* h = hint_for(child_tuple.bases[m])) {
            Base non_c, in_c;
            for (int e : *h) (ctx.cocircuit.contains(e) ? in_c : non_c).push_back(e);
            bool ok = non_c == mapped && static_cast<int>(in_c.size()) == t + 1;
            for (int e : in_c)
                if (!std::binary_search(pre.begin(), pre.end(), e)) ok = false;
            if (ok && detail::is_base(g, *h, r)) {
                result[m] = *h;
                for (int e : pre)
                    if (!base_contains(*h, e)) pool.push_back(e);
                continue;
            }
        }
        // lexicographically first (t+1)-subset of the pre-edges forming a base
        std::vector<int> idx(t + 1);
        std::iota(idx.begin(), idx.end(), 0);
        bool found = false;
        while (true) {
            Base candidate = mapped;
            for (int ii : idx) candidate.push_back(pre[ii]);
            std::sort(candidate.begin(), candidate.end());
            if (detail::is_base(g, candidate, r)) {
                result[m] = candidate;
                std::vector<char> used(pre.size(), 0);
                for (int ii : idx) used[ii] = 1;
                for (size_t ii = 0; ii < pre.size(); ++ii)
                    if (!used[ii]) pool.push_back(pre[ii]);
                found = true;
                break;
            }
            // next combination
            int pos = t;
            while (pos >= 0 && idx[pos] == static_cast<int>(pre.size()) - (t + 1) + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int q = pos + 1; q <= t; ++q) idx[q] = idx[q - 1] + 1;
        }
        if (!found) throw std::logic_error("pull_back: no valid pre-edge subset");
    }
    std::sort(pool.begin(), pool.end());
    std::vector<char> pool_used(pool.size(), 0);
    auto take = [&](int edge) {
        for (size_t i = 0; i < pool.size(); ++i)
            if (!pool_used[i] && pool[i] == edge) {
                pool_used[i] = 1;
                return true;
            }
        return false;
    };
    std::vector<int> unhinted;
    for (int m : z_free) {
        int want = -1;
        if (const Base* h = hint_for(child_tuple.bases[m])) {
            for (int e : *h)
                if (ctx.cocircuit.contains(e)) want = e;
        }
        if (want >= 0 && take(want)) {
            result[m].insert(std::upper_bound(result[m].begin(), result[m].end(), want), want);
        } else {
            unhinted.push_back(m);
        }
    }
    for (int m : unhinted) {
        int got = -1;
        for (size_t i = 0; i < pool.size(); ++i)
            if (!pool_used[i]) {
                pool_used[i] = 1;
                got = pool[i];
                break;
            }
        if (got < 0) throw std::logic_error("pull_back: pool exhausted");
        result[m].insert(std::upper_bound(result[m].begin(), result[m].end(), got), got);
    }
    KTuple out(std::move(result));
    if (!validate_k_tuple(g, out, child_tuple.k()))
        throw std::logic_error("pull_back: result is not a valid tuple");
    return out;
}

namespace detail {

// Member of t equal to mapped + one C-edge; returns (member index, C-edge).
inline std::pair<int, int> locate_pulled(const DerivedGraphMap& ctx, const KTuple& t,
                                         const Base& mapped) {
    for (int m = 0; m < t.k(); ++m) {
        const Base& b = t.bases[m];
        if (b.size() != mapped.size() + 1) continue;
        int extra = -1;
        size_t i = 0, j = 0;
        bool ok = true;
        while (i < b.size()) {
            if (j < mapped.size() && b[i] == mapped[j]) {
                ++i;
                ++j;
            } else if (extra < 0) {
                extra = b[i++];
            } else {
                ok = false;
                break;
            }
        }
        if (ok && j == mapped.size() && extra >= 0 && ctx.cocircuit.contains(extra))
            return {m, extra};
    }
    return {-1, -1};
}

// Moves e_star into the pull-back of the shared Z-free child base by the
// patching swap, yielding a tuple adjacent to t whose shared member becomes
// mapped + e_star.
inline KTuple shift_e_star(const MultiGraph& g, const DerivedGraphMap& ctx, const KTuple& t,
                           const Base& mapped) {
    auto [m1, c_edge] = locate_pulled(ctx, t, mapped);
    if (m1 < 0) throw std::logic_error("patch: shared pulled member not found");
    if (c_edge == ctx.e_star) return t;
    int mj = -1;
    for (int m = 0; m < t.k(); ++m)
        if (base_contains(t.bases[m], ctx.e_star)) mj = m;
    if (mj < 0 || mj == m1) throw std::logic_error("patch: e_star not available for swap");
    const int r = graph_rank(g);
    Base n1 = base_swap(t.bases[m1], c_edge, ctx.e_star);
    Base nj = base_swap(t.bases[mj], ctx.e_star, c_edge);
    if (!is_base(g, n1, r) || !is_base(g, nj, r))
        throw std::logic_error("patch: e_star swap not base-preserving");
    std::vector<Base> bs = t.bases;
    bs[m1] = std::move(n1);
    bs[mj] = std::move(nj);
    return KTuple(std::move(bs));
}

}  // namespace detail

/// Joins consecutive pulled-back tuples: where the pulled tuples are not
/// already adjacent, at most two intermediates are inserted via the e_star
/// swap on the shared Z-free child base.
inline KPath patch_path(const MultiGraph& g, const DerivedGraphMap& ctx,
                        const std::vector<KTuple>& pulled,
                        const std::vector<KTuple>& child_tuples) {
    KPath out;
    out.start(pulled.front());
    for (size_t i = 0; i + 1 < pulled.size(); ++i) {
        const KTuple t = out.back();
        const KTuple& u = pulled[i + 1];
        if (t == u) continue;
        if (adjacent_k(t, u)) {
            out.push(u);
            continue;
        }
        bool patched = false;
        for (const Base& shared_child : child_tuples[i].bases) {
            if (!std::binary_search(child_tuples[i + 1].bases.begin(),
                                    child_tuples[i + 1].bases.end(), shared_child))
                continue;
            bool z_free = true;
            for (int e : shared_child)
                if (ctx.is_synthetic(e)) z_free = false;
            if (!z_free) continue;
            Base mapped = detail::map_child_base(ctx, shared_child, nullptr);
            try {
                KTuple p = detail::shift_e_star(g, ctx, t, mapped);
                KTuple q = detail::shift_e_star(g, ctx, u, mapped);
                if (!adjacent_k(t, p) || !adjacent_k(p, q) || !adjacent_k(q, u)) continue;
                out.push(p);
                out.push(q);
                out.push(u);
                patched = true;
                break;
            } catch (const std::logic_error&) {
                continue;
            }
        }
        if (!patched) throw std::logic_error("patch_path: patch failed to restore adjacency");
    }
    return out;
}

namespace detail {

// Connects two pull-backs of the same child tuple: breadth-first search over
// double swaps exchanging a pair of star edges between members (these keep
// every member's non-star part fixed).
inline KPath bridge_same_projection(const MultiGraph& g, const EdgeSet& c, const KTuple& from,
                                    const KTuple& to) {
    KPath out;
    out.start(from);
    if (from == to) return out;
    const int r = graph_rank(g);
    struct Node {
        KTuple tuple;
        int parent;
    };
    std::vector<Node> nodes{{from, -1}};
    std::unordered_set<KTuple, TupleHash> seen{from};
    const size_t node_cap = 200000;
    for (size_t qi = 0; qi < nodes.size() && nodes.size() < node_cap; ++qi) {
        const KTuple cur = nodes[qi].tuple;
        for (int i = 0; i < cur.k(); ++i) {
            auto si = c_elements(cur.bases[i], c);
            for (int j = i + 1; j < cur.k(); ++j) {
                auto sj = c_elements(cur.bases[j], c);
                for (int b : si)
                    for (int d : sj) {
                        Base nb = base_swap(cur.bases[i], b, d);
                        Base nd = base_swap(cur.bases[j], d, b);
                        if (!is_base(g, nb, r) || !is_base(g, nd, r)) continue;
                        std::vector<Base> bs = cur.bases;
                        bs[i] = std::move(nb);
                        bs[j] = std::move(nd);
                        KTuple next(std::move(bs));
                        if (!seen.insert(next).second) continue;
                        nodes.push_back({next, static_cast<int>(qi)});
                        if (next == to) {
                            std::vector<int> chain;
                            for (int x = static_cast<int>(nodes.size()) - 1; x >= 0;
                                 x = nodes[x].parent)
                                chain.push_back(x);
                            for (size_t x = chain.size(); x-- > 1;)
                                out.push(nodes[chain[x - 1]].tuple);
                            return out;
                        }
                    }
            }
        }
    }
    throw std::logic_error("bridge: target pull-back unreachable by star-edge swaps");
}

inline std::map<std::pair<int, int>, int> synthetic_by_pair(const DerivedGraphMap& ctx) {
    std::map<std::pair<int, int>, int> out;
    for (int s : ctx.synthetic_ids) {
        auto [a, b] = std::pair{ctx.pre_edges[s][0], ctx.pre_edges[s][1]};
        out[{std::min(a, b), std::max(a, b)}] = s;
    }
    return out;
}

inline Base project_base(const DerivedGraphMap& ctx,
                         const std::map<std::pair<int, int>, int>& synth, const Base& b) {
    auto s = c_elements(b, ctx.cocircuit);
    Base out;
    for (int e : b)
        if (!ctx.cocircuit.contains(e)) out.push_back(ctx.relabel[e]);
    if (s.size() == 2) {
        auto it = synth.find({s[0], s[1]});
        if (it == synth.end())
            throw std::logic_error("project_base: pair not in unsubdivision matching");
        out.push_back(it->second);
    } else if (s.size() != 1) {
        throw std::logic_error("project_base: base meets C in unexpected size");
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

KPath find_path_k(const MultiGraph& g, const KTuple& from, const KTuple& to, int k);

namespace detail {

// Restriction of a parent base to a component piece, in child edge ids.
inline Base restrict_base(const ComponentPiece& piece, const Base& b,
                          const std::vector<int>& parent_to_piece) {
    (void)piece;
    Base out;
    for (int e : b)
        if (parent_to_piece[e] >= 0) out.push_back(parent_to_piece[e]);
    std::sort(out.begin(), out.end());
    return out;
}

inline Base map_piece_base(const ComponentPiece& piece, const Base& b) {
    Base out;
    for (int e : b) out.push_back(piece.edge_map[e]);
    std::sort(out.begin(), out.end());
    return out;
}

// Paths on a disconnected graph: run one component at a time with the others
// frozen, then regroup members to match the requested endpoint exactly.
inline KPath interleave_components_k(const MultiGraph& g, const KTuple& from, const KTuple& to,
                                     int k) {
    auto pieces = split_components(g);
    std::vector<std::vector<int>> parent_to_piece(pieces.size(),
                                                  std::vector<int>(g.edge_count(), -1));
    for (size_t p = 0; p < pieces.size(); ++p)
        for (size_t e = 0; e < pieces[p].edge_map.size(); ++e)
            parent_to_piece[p][pieces[p].edge_map[e]] = static_cast<int>(e);

    KPath out;
    out.start(from);
    std::vector<Base> aligned = from.bases;
    auto piece_part = [&](size_t p, const Base& b) {
        return restrict_base(pieces[p], b, parent_to_piece[p]);
    };
    for (size_t p = 0; p < pieces.size(); ++p) {
        std::vector<Base> from_parts, to_parts;
        for (const Base& b : aligned) from_parts.push_back(piece_part(p, b));
        for (const Base& b : to.bases) to_parts.push_back(piece_part(p, b));
        KTuple pf{from_parts}, pt{to_parts};
        KPath sub = find_path_k(pieces[p].graph, pf, pt, k);
        for (size_t step = 1; step < sub.tuples.size(); ++step) {
            // keep members whose piece part survives; assign the rest in order
            std::vector<Base> next_parts = sub.tuples[step].bases;
            std::vector<char> part_taken(next_parts.size(), 0);
            std::vector<int> member_part(aligned.size(), -1);
            for (size_t m = 0; m < aligned.size(); ++m) {
                Base cur_part = piece_part(p, aligned[m]);
                for (size_t q = 0; q < next_parts.size(); ++q)
                    if (!part_taken[q] && next_parts[q] == cur_part) {
                        part_taken[q] = 1;
                        member_part[m] = static_cast<int>(q);
                        break;
                    }
            }
            size_t q = 0;
            for (size_t m = 0; m < aligned.size(); ++m) {
                if (member_part[m] >= 0) continue;
                while (part_taken[q]) ++q;
                part_taken[q] = 1;
                member_part[m] = static_cast<int>(q);
            }
            for (size_t m = 0; m < aligned.size(); ++m) {
                Base replaced;
                for (int e : aligned[m])
                    if (parent_to_piece[p][e] < 0) replaced.push_back(e);
                Base mapped = map_piece_base(pieces[p], next_parts[member_part[m]]);
                replaced.insert(replaced.end(), mapped.begin(), mapped.end());
                std::sort(replaced.begin(), replaced.end());
                aligned[m] = std::move(replaced);
            }
            out.push(KTuple{aligned});
        }
    }
    // Regroup piece parts so the member set equals `to` exactly.
    std::vector<char> member_done(aligned.size(), 0);
    for (const Base& target : to.bases) {
        int x = -1;
        for (size_t m = 0; m < aligned.size(); ++m)
            if (!member_done[m] && piece_part(0, aligned[m]) == piece_part(0, target)) {
                if (aligned[m] == target) {
                    x = static_cast<int>(m);
                    break;
                }
                if (x < 0) x = static_cast<int>(m);
            }
        if (x < 0) throw std::logic_error("interleave: regroup alignment failed");
        for (size_t p = 1; p < pieces.size(); ++p) {
            Base want = piece_part(p, target);
            if (piece_part(p, aligned[x]) == want) continue;
            int y = -1;
            for (size_t m = 0; m < aligned.size(); ++m)
                if (!member_done[m] && static_cast<int>(m) != x &&
                    piece_part(p, aligned[m]) == want) {
                    y = static_cast<int>(m);
                    break;
                }
            if (y < 0) throw std::logic_error("interleave: regroup part not found");
            // swap piece-p parts of members x and y
            Base xs, ys;
            for (int e : aligned[x])
                (parent_to_piece[p][e] >= 0 ? ys : xs).push_back(e);
            for (int e : aligned[y])
                (parent_to_piece[p][e] >= 0 ? xs : ys).push_back(e);
            std::sort(xs.begin(), xs.end());
            std::sort(ys.begin(), ys.end());
            aligned[x] = std::move(xs);
            aligned[y] = std::move(ys);
            out.push(KTuple{aligned});
        }
        member_done[x] = 1;
    }
    if (out.back() != to) throw std::logic_error("interleave: endpoint mismatch after regroup");
    return out;
}

}  // namespace detail

/// Explicit path between two vertices of the k-base graph, following the
/// unsubdivision recursion: balance both endpoints at a minimum-degree
/// vertex, equalize their matching graphs, recurse on the derived graph,
/// pull the child path back and patch the junctions.
inline KPath find_path_k(const MultiGraph& g, const KTuple& from, const KTuple& to, int k) {
    if (k < 3) throw std::invalid_argument("find_path_k: requires k >= 3");
    if (!validate_k_tuple(g, from, k) || !validate_k_tuple(g, to, k))
        throw std::invalid_argument("find_path_k: endpoint is not a vertex");
    KPath out;
    out.start(from);
    if (from == to) return out;
    const int r = graph_rank(g);
    if (r <= 1) throw std::logic_error("find_path_k: distinct vertices at rank <= 1");

    auto pieces = split_components(g);
    bool plain_connected =
        pieces.size() == 1 && pieces[0].graph.vertex_count == g.vertex_count;
    if (!plain_connected) {
        out = detail::interleave_components_k(g, from, to, k);
        verify_kpath(g, k, out, from, to);
        return out;
    }

    const int v = min_degree_vertex(g);
    EdgeSet c = cocircuit_star(g, v);
    if (c.size() > 2 * k - 1) throw std::logic_error("find_path_k: min degree exceeds 2k-1");

    KPath pb = balance(g, from, v);
    KPath pd = balance(g, to, v);
    auto [ea, eb] = equalize_matchings(g, pb.back(), pd.back(), c);
    KTuple tm = ea.back(), tn = eb.back();
    MatchingGraph mg = matching_graph(g, tm, c);
    if (mg.pairs != matching_graph(g, tn, c).pairs)
        throw std::logic_error("find_path_k: equalization failed");

    DerivedGraphMap ctx = unsubdivide(g, v, mg.pairs);
    auto synth = detail::synthetic_by_pair(ctx);
    std::vector<Base> bp, dp;
    for (const Base& b : tm.bases) bp.push_back(detail::project_base(ctx, synth, b));
    for (const Base& b : tn.bases) dp.push_back(detail::project_base(ctx, synth, b));
    KTuple child_from{bp}, child_to{dp};
    KPath child = find_path_k(ctx.child, child_from, child_to, k);

    KPath stitched;
    if (child.tuples.size() == 1) {
        // Same child endpoint: tm and tn are two pull-backs of one tuple.
        stitched = detail::bridge_same_projection(g, c, tm, tn);
    } else {
        std::vector<KTuple> pulled(child.tuples.size());
        pulled.front() = tm;
        pulled.back() = tn;
        for (size_t i = 1; i + 1 < child.tuples.size(); ++i) {
            PullHints hints;
            for (const Base& x : child.tuples[i].bases) {
                if (std::binary_search(child.tuples[i - 1].bases.begin(),
                                       child.tuples[i - 1].bases.end(), x)) {
                    Base member = detail::member_for_child(ctx, pulled[i - 1], x);
                    if (!member.empty()) hints.emplace(x, std::move(member));
                } else if (i + 2 == child.tuples.size() &&
                           std::binary_search(child.tuples[i + 1].bases.begin(),
                                              child.tuples[i + 1].bases.end(), x)) {
                    Base member = detail::member_for_child(ctx, tn, x);
                    if (!member.empty()) hints.emplace(x, std::move(member));
                }
            }
            pulled[i] = pull_back(ctx, child.tuples[i], &hints);
        }
        stitched = patch_path(g, ctx, pulled, child.tuples);
    }

    out = pb;
    out.append(ea);
    out.append(stitched);
    out.append(eb.reversed());
    out.append(pd.reversed());
    verify_kpath(g, k, out, from, to);
    return out;
}

PairPath find_path_single(const MultiGraph& g, const OrderedPair& from, const OrderedPair& to);

namespace detail {

// Shortest walks from `start` to each achievable 2-subset of C carried by a
// single member, over all base-preserving exchanges.
inline std::map<std::pair<int, int>, PairPath> reachable_pair_keys(const MultiGraph& g,
                                                                   const OrderedPair& start,
                                                                   const EdgeSet& c,
                                                                   int max_depth) {
    auto key_of = [&](const OrderedPair& p) -> std::pair<int, int> {
        auto s1 = c_elements(p.first, c);
        auto s2 = c_elements(p.second, c);
        const auto& two = s1.size() == 2 ? s1 : s2;
        if (two.size() != 2) throw std::logic_error("pair key: no member meets C twice");
        return {two[0], two[1]};
    };
    struct Node {
        OrderedPair pair;
        int parent;
    };
    auto pair_id = [](const OrderedPair& p) {
        std::string s = base_to_string(p.first);
        s += '|';
        s += base_to_string(p.second);
        return s;
    };
    const int r = graph_rank(g);
    std::vector<Node> nodes{{start, -1}};
    std::unordered_set<std::string> seen{pair_id(start)};
    std::map<std::pair<int, int>, int> first;
    first.emplace(key_of(start), 0);
    size_t qi = 0, level_end = 1;
    int depth = 0;
    const size_t node_cap = 200000;
    while (qi < nodes.size() && depth < max_depth && nodes.size() < node_cap) {
        for (; qi < level_end; ++qi) {
            const OrderedPair cur = nodes[qi].pair;
            for (int b : cur.first)
                for (int d : cur.second) {
                    Base nf = base_swap(cur.first, b, d);
                    Base ns = base_swap(cur.second, d, b);
                    if (!is_base(g, nf, r) || !is_base(g, ns, r)) continue;
                    OrderedPair next{std::move(nf), std::move(ns)};
                    if (!seen.insert(pair_id(next)).second) continue;
                    nodes.push_back({next, static_cast<int>(qi)});
                    first.emplace(key_of(next), static_cast<int>(nodes.size()) - 1);
                }
        }
        level_end = nodes.size();
        ++depth;
    }
    std::map<std::pair<int, int>, PairPath> out;
    for (auto& [k, idx] : first) {
        std::vector<int> chain;
        for (int x = idx; x >= 0; x = nodes[x].parent) chain.push_back(x);
        PairPath p;
        p.start(nodes[chain.back()].pair);
        for (size_t x = chain.size(); x-- > 1;) p.push(nodes[chain[x - 1]].pair);
        out.emplace(k, std::move(p));
    }
    return out;
}

// Drives both endpoints to pairs carrying the same matched 2-subset of C.
inline std::pair<PairPath, PairPath> equalize_single(const MultiGraph& g, const OrderedPair& from,
                                                     const OrderedPair& to, const EdgeSet& c) {
    auto ra = reachable_pair_keys(g, from, c, 4);
    auto rb = reachable_pair_keys(g, to, c, 4);
    std::pair<int, int> best{-1, -1};
    size_t best_len = SIZE_MAX;
    for (auto& [k, pa] : ra) {
        auto it = rb.find(k);
        if (it == rb.end()) continue;
        size_t len = pa.length() + it->second.length();
        if (len < best_len) {
            best_len = len;
            best = k;
        }
    }
    if (best.first < 0) throw std::logic_error("equalize_single: no common matched pair found");
    return {ra.at(best), rb.at(best)};
}

inline PairPath interleave_components_single(const MultiGraph& g, const OrderedPair& from,
                                             const OrderedPair& to) {
    auto pieces = split_components(g);
    std::vector<std::vector<int>> parent_to_piece(pieces.size(),
                                                  std::vector<int>(g.edge_count(), -1));
    for (size_t p = 0; p < pieces.size(); ++p)
        for (size_t e = 0; e < pieces[p].edge_map.size(); ++e)
            parent_to_piece[p][pieces[p].edge_map[e]] = static_cast<int>(e);
    PairPath out;
    out.start(from);
    OrderedPair cur = from;
    for (size_t p = 0; p < pieces.size(); ++p) {
        OrderedPair cf{restrict_base(pieces[p], cur.first, parent_to_piece[p]),
                       restrict_base(pieces[p], cur.second, parent_to_piece[p])};
        OrderedPair ct{restrict_base(pieces[p], to.first, parent_to_piece[p]),
                       restrict_base(pieces[p], to.second, parent_to_piece[p])};
        PairPath sub = find_path_single(pieces[p].graph, cf, ct);
        for (size_t step = 1; step < sub.pairs.size(); ++step) {
            auto splice = [&](const Base& whole, const Base& piece_part) {
                Base r;
                for (int e : whole)
                    if (parent_to_piece[p][e] < 0) r.push_back(e);
                Base mapped = map_piece_base(pieces[p], piece_part);
                r.insert(r.end(), mapped.begin(), mapped.end());
                std::sort(r.begin(), r.end());
                return r;
            };
            cur = OrderedPair{splice(cur.first, sub.pairs[step].first),
                              splice(cur.second, sub.pairs[step].second)};
            out.push(cur);
        }
    }
    if (out.back() != to) throw std::logic_error("interleave_single: endpoint mismatch");
    return out;
}

}  // namespace detail

/// Explicit path in the single exchange graph, by the same unsubdivision
/// recursion: at a degree-3 vertex the two endpoints are first driven to a
/// common matched pair; pull-backs are then unique and non-adjacent
/// junctions are repaired by a single inserted pair.
inline PairPath find_path_single(const MultiGraph& g, const OrderedPair& from,
                                 const OrderedPair& to) {
    if (!validate_ordered_pair(g, from) || !validate_ordered_pair(g, to))
        throw std::invalid_argument("find_path_single: endpoint is not a vertex");
    PairPath out;
    out.start(from);
    if (from == to) return out;
    const int r = graph_rank(g);
    if (r == 1 || adjacent_single(g, from, to)) {
        out.push(to);
        return out;
    }

    auto pieces = split_components(g);
    bool plain_connected =
        pieces.size() == 1 && pieces[0].graph.vertex_count == g.vertex_count;
    if (!plain_connected) {
        out = detail::interleave_components_single(g, from, to);
        verify_pair_path(g, out, from, to);
        return out;
    }

    const int v = min_degree_vertex(g);
    EdgeSet c = cocircuit_star(g, v);
    const int d = c.size();
    if (d != 2 && d != 3)
        throw std::logic_error("find_path_single: min degree outside {2,3}");

    OrderedPair tm = from, tn = to;
    PairPath ea, eb;
    ea.start(from);
    eb.start(to);
    std::vector<std::pair<int, int>> matching;
    if (d == 3) {
        std::tie(ea, eb) = detail::equalize_single(g, from, to, c);
        tm = ea.back();
        tn = eb.back();
        auto s1 = c_elements(tm.first, c);
        auto s2 = c_elements(tm.second, c);
        const auto& two = s1.size() == 2 ? s1 : s2;
        matching.push_back({two[0], two[1]});
    }
    DerivedGraphMap ctx = unsubdivide(g, v, matching);
    auto synth = detail::synthetic_by_pair(ctx);
    OrderedPair child_from{detail::project_base(ctx, synth, tm.first),
                           detail::project_base(ctx, synth, tm.second)};
    OrderedPair child_to{detail::project_base(ctx, synth, tn.first),
                         detail::project_base(ctx, synth, tn.second)};
    PairPath child = find_path_single(ctx.child, child_from, child_to);

    // Unique pull-backs.
    std::array<int, 2> ab{-1, -1};
    if (!ctx.synthetic_ids.empty()) {
        ab = ctx.pre_edges[ctx.synthetic_ids[0]];
        if (ab[0] > ab[1]) std::swap(ab[0], ab[1]);
    }
    const int c_first = d == 2 ? c_elements(tm.first, c)[0] : -1;
    const int c_second = d == 2 ? c_elements(tm.second, c)[0] : -1;
    auto pull_member = [&](const Base& child_base, bool is_first) {
        std::vector<int> synth_ids;
        Base mapped = detail::map_child_base(ctx, child_base, &synth_ids);
        if (d == 2) {
            int add = is_first ? c_first : c_second;
            mapped.insert(std::upper_bound(mapped.begin(), mapped.end(), add), add);
        } else if (!synth_ids.empty()) {
            for (int e : ab)
                mapped.insert(std::upper_bound(mapped.begin(), mapped.end(), e), e);
        } else {
            mapped.insert(std::upper_bound(mapped.begin(), mapped.end(), ctx.e_star), ctx.e_star);
        }
        return mapped;
    };
    std::vector<OrderedPair> pulled;
    for (const OrderedPair& cp : child.pairs)
        pulled.push_back({pull_member(cp.first, true), pull_member(cp.second, false)});
    if (pulled.front() != tm) throw std::logic_error("find_path_single: pull-back start mismatch");
    if (d == 3 && pulled.back() != tn)
        throw std::logic_error("find_path_single: pull-back end mismatch");

    PairPath stitched;
    stitched.start(pulled.front());
    for (size_t i = 0; i + 1 < pulled.size(); ++i) {
        const OrderedPair& m = stitched.back();
        const OrderedPair& n = pulled[i + 1];
        if (adjacent_single(g, m, n)) {
            stitched.push(n);
            continue;
        }
        // Mixed junction: the synthetic edge changes members; insert one pair
        // produced by swapping e_star with a pre-edge on the side holding it.
        auto try_patch = [&](const OrderedPair& side) -> std::optional<OrderedPair> {
            bool star_in_first = base_contains(side.first, ctx.e_star);
            const Base& holder = star_in_first ? side.first : side.second;
            const Base& other = star_in_first ? side.second : side.first;
            for (int gsel : ab) {
                if (!base_contains(other, gsel)) continue;
                Base nh = base_swap(holder, ctx.e_star, gsel);
                Base no = base_swap(other, gsel, ctx.e_star);
                if (!detail::is_base(g, nh, r) || !detail::is_base(g, no, r)) continue;
                return star_in_first ? OrderedPair{nh, no} : OrderedPair{no, nh};
            }
            return std::nullopt;
        };
        std::optional<OrderedPair> patch;
        for (const OrderedPair* side : {&m, &n}) {
            auto cand = try_patch(*side);
            if (cand && adjacent_single(g, m, *cand) && adjacent_single(g, *cand, n)) {
                patch = cand;
                break;
            }
        }
        if (!patch) throw std::logic_error("find_path_single: junction patch failed");
        stitched.push(*patch);
        stitched.push(n);
    }
    if (stitched.back() != tn) stitched.push(tn);

    out = ea;
    out.append(stitched);
    out.append(eb.reversed());
    verify_pair_path(g, out, from, to);
    return out;
}

}  // namespace basex
