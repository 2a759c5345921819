#pragma once

// Exhaustive ground-truth solvers: minimum plane augmentation of MOPs by
// branch and bound over non-interleaving chord sets, the geometric
// counterpart over visibility candidates, enumeration of minimal
// augmentations inside selected faces, and the pentagon family generator.

#include <functional>
#include <optional>

#include "parityaug/core.hpp"

namespace parityaug {

struct OracleBudget {
    int max_vertices = 12;
    int max_candidate_edges = 64;
    long long node_limit = 50'000'000;
};

namespace oracle_detail {

struct SubsetSearch {
    int n = 0;
    std::vector<VertexPair> cand;
    std::vector<std::vector<char>> conflict; // cand x cand
    std::vector<std::vector<int>> incident;  // vertex -> candidate indices
    std::vector<int> close_at;               // vertex -> last incident candidate, -1 if none
    std::vector<char> red;
    long long nodes = 0;
    long long node_limit = 0;

    void tick() {
        if (++nodes > node_limit) throw BudgetExceededError("oracle: node limit exceeded");
    }
};

// Branch and bound for the minimum; then an exhaustive count at the optimum.
// wrong = number of vertices whose current parity is off; each further edge
// fixes at most two of them.
inline void search_min(SubsetSearch& s, size_t t, int size, int wrong, std::vector<int>& deg,
                       std::vector<char>& chosen, int& best) {
    s.tick();
    if (size + (wrong + 1) / 2 >= best && best != (1 << 29)) return;
    if (t == s.cand.size()) {
        if (wrong == 0 && size < best) best = size;
        return;
    }
    // include
    bool ok = true;
    for (size_t j = 0; j < t && ok; ++j)
        if (chosen[j] && s.conflict[t][j]) ok = false;
    if (ok) {
        auto [a, b] = s.cand[t];
        int dwrong = 0;
        dwrong += ((deg[a] % 2 == 1) != (s.red[a] != 0)) ? -1 : 1;
        dwrong += ((deg[b] % 2 == 1) != (s.red[b] != 0)) ? -1 : 1;
        ++deg[a];
        ++deg[b];
        chosen[t] = 1;
        bool closed_ok = true;
        for (int v = 1; v <= s.n && closed_ok; ++v)
            if (s.close_at[v] == static_cast<int>(t) &&
                ((deg[v] % 2 == 1) != (s.red[v] != 0)))
                closed_ok = false;
        if (closed_ok) search_min(s, t + 1, size + 1, wrong + dwrong, deg, chosen, best);
        chosen[t] = 0;
        --deg[a];
        --deg[b];
    }
    // exclude
    bool closed_ok = true;
    for (int v = 1; v <= s.n && closed_ok; ++v)
        if (s.close_at[v] == static_cast<int>(t) && ((deg[v] % 2 == 1) != (s.red[v] != 0)))
            closed_ok = false;
    if (closed_ok) search_min(s, t + 1, size, wrong, deg, chosen, best);
}

inline void search_count(SubsetSearch& s, size_t t, int size, int wrong, std::vector<int>& deg,
                         std::vector<char>& chosen, int best, long long& count,
                         std::vector<VertexPair>& first, std::vector<VertexPair>& cur,
                         long long count_cap) {
    s.tick();
    if (count >= count_cap) return;
    if (size + (wrong + 1) / 2 > best) return;
    if (t == s.cand.size()) {
        if (wrong == 0 && size == best) {
            if (count == 0) first = cur;
            ++count;
        }
        return;
    }
    bool ok = true;
    for (size_t j = 0; j < t && ok; ++j)
        if (chosen[j] && s.conflict[t][j]) ok = false;
    if (ok) {
        auto [a, b] = s.cand[t];
        int dwrong = 0;
        dwrong += ((deg[a] % 2 == 1) != (s.red[a] != 0)) ? -1 : 1;
        dwrong += ((deg[b] % 2 == 1) != (s.red[b] != 0)) ? -1 : 1;
        ++deg[a];
        ++deg[b];
        chosen[t] = 1;
        cur.push_back(s.cand[t]);
        bool closed_ok = true;
        for (int v = 1; v <= s.n && closed_ok; ++v)
            if (s.close_at[v] == static_cast<int>(t) &&
                ((deg[v] % 2 == 1) != (s.red[v] != 0)))
                closed_ok = false;
        if (closed_ok)
            search_count(s, t + 1, size + 1, wrong + dwrong, deg, chosen, best, count, first,
                         cur, count_cap);
        cur.pop_back();
        chosen[t] = 0;
        --deg[a];
        --deg[b];
    }
    bool closed_ok = true;
    for (int v = 1; v <= s.n && closed_ok; ++v)
        if (s.close_at[v] == static_cast<int>(t) && ((deg[v] % 2 == 1) != (s.red[v] != 0)))
            closed_ok = false;
    if (closed_ok)
        search_count(s, t + 1, size, wrong, deg, chosen, best, count, first, cur, count_cap);
}

inline void finish_search(SubsetSearch& s, const ParityColoring& col,
                          std::optional<std::tuple<int, Augmentation, long long>>& out,
                          long long count_cap) {
    int wrong0 = 0;
    for (int v = 1; v <= s.n; ++v)
        if (col.is_red(v)) ++wrong0;
    std::vector<int> deg(s.n + 1, 0);
    std::vector<char> chosen(s.cand.size(), 0);
    int best = 1 << 29;
    search_min(s, 0, 0, wrong0, deg, chosen, best);
    if (best == (1 << 29)) {
        out = std::nullopt;
        return;
    }
    long long count = 0;
    std::vector<VertexPair> first, cur;
    search_count(s, 0, 0, wrong0, deg, chosen, best, count, first, cur, count_cap);
    Augmentation h;
    h.edges = first;
    std::sort(h.edges.begin(), h.edges.end());
    out = std::make_tuple(best, std::move(h), count);
}

} // namespace oracle_detail

// Exact minimum augmentation of a MOP by exhaustive search over antichains
// of pairwise non-interleaving candidate chords. Also reports the number of
// optimal solutions, capped at 10^6.
inline std::optional<std::tuple<int, Augmentation, long long>> oracle_mop_min(
    const CyclicMop& g, const ParityColoring& col, const OracleBudget& b = {}) {
    validate_mop(g);
    if (g.n > b.max_vertices) throw BudgetExceededError("oracle_mop_min: too many vertices");
    oracle_detail::SubsetSearch s;
    s.n = g.n;
    s.node_limit = b.node_limit;
    s.red.assign(g.n + 1, 0);
    for (int v : col.red) s.red[v] = 1;
    for (int a = 1; a <= g.n; ++a)
        for (int bb = a + 1; bb <= g.n; ++bb)
            if (!g.has_edge(a, bb)) s.cand.push_back({a, bb});
    if (static_cast<int>(s.cand.size()) > b.max_candidate_edges)
        throw BudgetExceededError("oracle_mop_min: too many candidate edges");
    auto cycle = g.boundary_cycle();
    size_t m = s.cand.size();
    s.conflict.assign(m, std::vector<char>(m, 0));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j)
            s.conflict[i][j] = s.conflict[j][i] =
                chords_interleave(s.cand[i], s.cand[j], cycle) ? 1 : 0;
    s.close_at.assign(g.n + 1, -1);
    for (size_t i = 0; i < m; ++i) {
        s.close_at[s.cand[i].first] = static_cast<int>(i);
        s.close_at[s.cand[i].second] = static_cast<int>(i);
    }
    for (int v = 1; v <= g.n; ++v)
        if (s.red[v] && s.close_at[v] < 0) return std::nullopt; // red with no candidates
    std::optional<std::tuple<int, Augmentation, long long>> out;
    oracle_detail::finish_search(s, col, out, 1'000'000);
    return out;
}

// Geometric candidates: pairs whose open segment crosses no host edge and
// contains no third vertex; endpoint contacts are allowed.
inline std::vector<VertexPair> geometric_candidates(const GeometricGraph& g) {
    validate_geometric(g);
    int n = g.n();
    std::vector<VertexPair> cand;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            if (g.has_edge(a, b)) continue;
            bool ok = true;
            for (int v = 1; v <= n && ok; ++v)
                if (v != a && v != b && in_segment_interior(g.pt(v), g.pt(a), g.pt(b))) ok = false;
            for (const auto& e : g.edges)
                if (ok && segments_conflict(g.pt(a), g.pt(b), g.pt(e.first), g.pt(e.second)))
                    ok = false;
            if (ok) cand.push_back({a, b});
        }
    return cand;
}

inline std::optional<std::pair<int, Augmentation>> oracle_geometric_min(
    const GeometricGraph& g, const OracleBudget& b = {}) {
    if (g.n() > b.max_vertices)
        throw BudgetExceededError("oracle_geometric_min: too many vertices");
    oracle_detail::SubsetSearch s;
    s.n = g.n();
    s.node_limit = b.node_limit;
    s.red.assign(s.n + 1, 0);
    for (int v : g.colors.red) s.red[v] = 1;
    s.cand = geometric_candidates(g);
    if (static_cast<int>(s.cand.size()) > b.max_candidate_edges)
        throw BudgetExceededError("oracle_geometric_min: too many candidate edges");
    size_t m = s.cand.size();
    s.conflict.assign(m, std::vector<char>(m, 0));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j) {
            auto [a, bb] = s.cand[i];
            auto [c, d] = s.cand[j];
            s.conflict[i][j] = s.conflict[j][i] =
                segments_conflict(g.pt(a), g.pt(bb), g.pt(c), g.pt(d)) ? 1 : 0;
        }
    s.close_at.assign(s.n + 1, -1);
    for (size_t i = 0; i < m; ++i) {
        s.close_at[s.cand[i].first] = static_cast<int>(i);
        s.close_at[s.cand[i].second] = static_cast<int>(i);
    }
    for (int v = 1; v <= s.n; ++v)
        if (s.red[v] && s.close_at[v] < 0) return std::nullopt;
    std::optional<std::tuple<int, Augmentation, long long>> out;
    oracle_detail::finish_search(s, g.colors, out, 1);
    if (!out) return std::nullopt;
    return std::make_pair(std::get<0>(*out), std::get<1>(*out));
}

// Maximum number of red parities fixable by a plane compatible augmentation
// that keeps every blue vertex even. Blue-blue candidates are dropped when
// no red-blue candidate exists: blue-only components are then removable.
inline std::pair<int, std::vector<VertexPair>> oracle_geometric_max_red(
    const GeometricGraph& g, const OracleBudget& b = {}) {
    if (g.n() > 40) throw BudgetExceededError("oracle_geometric_max_red: too many vertices");
    auto all = geometric_candidates(g);
    auto is_red = [&](int v) { return g.colors.is_red(v); };
    bool any_rb = false;
    for (const auto& [a, bb] : all)
        if (is_red(a) != is_red(bb)) any_rb = true;
    std::vector<VertexPair> cand;
    for (const auto& e : all)
        if (any_rb || is_red(e.first) || is_red(e.second)) cand.push_back(e);
    if (static_cast<int>(cand.size()) > b.max_candidate_edges)
        throw BudgetExceededError("oracle_geometric_max_red: too many candidates");

    size_t m = cand.size();
    std::vector<std::vector<char>> conflict(m, std::vector<char>(m, 0));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j)
            conflict[i][j] = conflict[j][i] =
                segments_conflict(g.pt(cand[i].first), g.pt(cand[i].second),
                                  g.pt(cand[j].first), g.pt(cand[j].second))
                    ? 1
                    : 0;
    std::vector<int> close_at(g.n() + 1, -1);
    for (size_t i = 0; i < m; ++i) {
        close_at[cand[i].first] = static_cast<int>(i);
        close_at[cand[i].second] = static_cast<int>(i);
    }
    std::vector<int> deg(g.n() + 1, 0);
    std::vector<char> chosen(m, 0);
    int best = -1;
    std::vector<VertexPair> best_set, cur;
    long long nodes = 0;

    std::function<void(size_t)> rec = [&](size_t t) {
        if (++nodes > b.node_limit)
            throw BudgetExceededError("oracle_geometric_max_red: node limit");
        // upper bound: reds already odd plus reds that can still change
        int fixed = 0, open = 0;
        for (int v : g.colors.red) {
            if (deg[v] % 2 == 1)
                ++fixed;
            else if (close_at[v] >= static_cast<int>(t))
                ++open;
        }
        if (fixed + open <= best) return;
        if (t == m) {
            for (int v = 1; v <= g.n(); ++v)
                if (!is_red(v) && deg[v] % 2 == 1) return; // blue broken
            if (fixed > best) {
                best = fixed;
                best_set = cur;
            }
            return;
        }
        auto closed_ok = [&]() {
            for (int v = 1; v <= g.n(); ++v)
                if (close_at[v] == static_cast<int>(t) && !is_red(v) && deg[v] % 2 == 1)
                    return false;
            return true;
        };
        bool ok = true;
        for (size_t j = 0; j < t && ok; ++j)
            if (chosen[j] && conflict[t][j]) ok = false;
        if (ok) {
            auto [a, bb] = cand[t];
            ++deg[a];
            ++deg[bb];
            chosen[t] = 1;
            cur.push_back(cand[t]);
            if (closed_ok()) rec(t + 1);
            cur.pop_back();
            chosen[t] = 0;
            --deg[a];
            --deg[bb];
        }
        if (closed_ok()) rec(t + 1);
    };
    rec(0);
    std::sort(best_set.begin(), best_set.end());
    return {best < 0 ? 0 : best, best_set};
}

// ------------------------------------------------ face-restricted enumeration

// All inclusion-minimal augmentations whose chords live in the listed faces.
// dont_care vertices may end with any parity; with matching_only each red
// must receive exactly one edge and blues none.
inline std::vector<Augmentation> enumerate_augmentations(
    const PlaneGraph& g, const ParityColoring& col, const std::vector<int>& region,
    const OracleBudget& b = {}, const std::set<int>& dont_care = {}, bool matching_only = false) {
    auto faces = faces_from_rotation(g);
    struct Cand {
        VertexPair e;
        int face;
        int p1, p2; // positions on the face walk
    };
    std::vector<Cand> cand;
    for (int f : region) {
        if (f < 0 || f >= static_cast<int>(faces.size()))
            throw InvalidInputError("enumerate_augmentations: unknown face id");
        const auto& walk = faces[f];
        int L = static_cast<int>(walk.size());
        std::set<int> uniq(walk.begin(), walk.end());
        if (static_cast<int>(uniq.size()) != L)
            throw InvalidInputError("enumerate_augmentations: face is not a simple cycle");
        for (int p = 0; p < L; ++p)
            for (int q = p + 1; q < L; ++q) {
                if ((q - p == 1) || (p == 0 && q == L - 1)) continue;
                if (g.has_edge(walk[p], walk[q])) continue;
                cand.push_back({norm_pair(walk[p], walk[q]), f, p, q});
            }
    }
    std::sort(cand.begin(), cand.end(), [](const Cand& x, const Cand& y) {
        return std::tie(x.e, x.face) < std::tie(y.e, y.face);
    });
    size_t m = cand.size();
    if (static_cast<int>(m) > b.max_candidate_edges)
        throw BudgetExceededError("enumerate_augmentations: too many candidates");
    std::vector<std::vector<char>> conflict(m, std::vector<char>(m, 0));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j) {
            bool c = false;
            if (cand[i].e == cand[j].e)
                c = true; // same chord twice
            else if (cand[i].face == cand[j].face) {
                int L = static_cast<int>(faces[cand[i].face].size());
                auto inside = [&](int x, int lo, int hi) {
                    int rl = (x - lo + L) % L, rh = (hi - lo + L) % L;
                    return rl > 0 && rl < rh;
                };
                bool in1 = inside(cand[j].p1, cand[i].p1, cand[i].p2);
                bool in2 = inside(cand[j].p2, cand[i].p1, cand[i].p2);
                bool shared = cand[i].e.first == cand[j].e.first ||
                              cand[i].e.first == cand[j].e.second ||
                              cand[i].e.second == cand[j].e.first ||
                              cand[i].e.second == cand[j].e.second;
                c = !shared && (in1 != in2);
            }
            conflict[i][j] = conflict[j][i] = c ? 1 : 0;
        }

    std::vector<int> deg(g.n + 1, 0);
    std::vector<char> chosen(m, 0);
    std::vector<Augmentation> found;
    std::vector<std::pair<VertexPair, int>> cur;
    long long nodes = 0;

    std::function<void(size_t)> rec = [&](size_t t) {
        if (++nodes > b.node_limit) throw BudgetExceededError("enumerate_augmentations: node limit");
        if (found.size() > 200000)
            throw BudgetExceededError("enumerate_augmentations: too many augmentations");
        if (t == m) {
            for (int v = 1; v <= g.n; ++v) {
                if (dont_care.count(v)) continue;
                bool odd = deg[v] % 2 == 1;
                if (matching_only) {
                    if (col.is_red(v) ? deg[v] != 1 : deg[v] != 0) return;
                } else if (odd != col.is_red(v)) {
                    return;
                }
            }
            Augmentation h;
            for (const auto& [e, f] : cur) {
                h.edges.push_back(e);
                h.placement[e] = f;
            }
            std::sort(h.edges.begin(), h.edges.end());
            found.push_back(std::move(h));
            return;
        }
        bool ok = true;
        for (size_t j = 0; j < t && ok; ++j)
            if (chosen[j] && conflict[t][j]) ok = false;
        if (ok && matching_only) {
            auto [a, bb] = cand[t].e;
            if (!col.is_red(a) || !col.is_red(bb) || deg[a] > 0 || deg[bb] > 0) ok = false;
        }
        if (ok) {
            auto [a, bb] = cand[t].e;
            ++deg[a];
            ++deg[bb];
            chosen[t] = 1;
            cur.push_back({cand[t].e, cand[t].face});
            rec(t + 1);
            cur.pop_back();
            chosen[t] = 0;
            --deg[a];
            --deg[bb];
        }
        rec(t + 1);
    };
    rec(0);

    // inclusion-minimal filter
    auto subset = [](const Augmentation& x, const Augmentation& y) {
        std::set<VertexPair> ys(y.edges.begin(), y.edges.end());
        for (const auto& e : x.edges)
            if (!ys.count(e)) return false;
        return true;
    };
    std::vector<Augmentation> minimal;
    for (size_t i = 0; i < found.size(); ++i) {
        bool is_min = true;
        for (size_t j = 0; j < found.size() && is_min; ++j)
            if (i != j && found[j].edges.size() < found[i].edges.size() &&
                subset(found[j], found[i]))
                is_min = false;
        // equal-size distinct sets never contain each other
        if (is_min) minimal.push_back(found[i]);
    }
    std::sort(minimal.begin(), minimal.end(),
              [](const Augmentation& x, const Augmentation& y) { return x.edges < y.edges; });
    return minimal;
}

// ----------------------------------------------------------- pentagon family

struct PentagonInstance {
    GeometricGraph graph;
    int blocks = 0;
    int n_total = 0;       // all vertices, frame included
    int n_red = 0;         // 5 per block
    int max_fixable = 0;   // 2 per block
};

// k empty convex pentagons of red vertices, each sealed inside a
// triangulated blue shell so that the only candidate edges touching a red
// vertex are that pentagon's diagonals. Consecutive shells are linked by a
// blue path.
inline PentagonInstance pentagon_instance(int k) {
    if (k < 1) throw InvalidInputError("pentagon_instance: k must be positive");
    PentagonInstance inst;
    inst.blocks = k;
    GeometricGraph& g = inst.graph;
    auto add_pt = [&](double x, double y, bool red) {
        g.points.push_back({x, y});
        int id = g.n();
        if (red) g.colors.red.insert(id);
        return id;
    };
    std::vector<int> prev_s2;
    for (int blk = 0; blk < k; ++blk) {
        double dx = 40.0 * blk;
        int p1 = add_pt(dx + 0, 4, true);
        int p2 = add_pt(dx - 4, 1, true);
        int p3 = add_pt(dx - 3, -3, true);
        int p4 = add_pt(dx + 3, -3, true);
        int p5 = add_pt(dx + 4, 1, true);
        int s1 = add_pt(dx - 10, -7, false);
        int s2 = add_pt(dx + 10, -7, false);
        int s3 = add_pt(dx + 0, 12, false);
        auto E = [&](int a, int b) { g.edges.push_back(norm_pair(a, b)); };
        E(p1, p2);
        E(p2, p3);
        E(p3, p4);
        E(p4, p5);
        E(p5, p1);
        E(s1, s2);
        E(s2, s3);
        E(s3, s1);
        E(p1, s3);
        E(p2, s1);
        E(p3, s1);
        E(p4, s2);
        E(p5, s2);
        E(p2, s3);
        E(p3, s2);
        E(p5, s3);
        if (!prev_s2.empty()) E(prev_s2.back(), s1);
        prev_s2.push_back(s2);
    }
    validate_geometric(g);
    // certify: every red vertex sees only reds of its own pentagon
    auto cand = geometric_candidates(g);
    for (const auto& [a, b] : cand) {
        bool ra = g.colors.is_red(a), rb = g.colors.is_red(b);
        if (!ra && !rb) continue;
        if (!(ra && rb) || (a - 1) / 8 != (b - 1) / 8)
            throw StructuralError("pentagon_instance: visibility certification failed");
    }
    inst.n_total = g.n();
    inst.n_red = 5 * k;
    inst.max_fixable = 2 * k;
    return inst;
}

} // namespace parityaug
