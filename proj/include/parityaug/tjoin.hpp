#pragma once

// Minimum T-join on a connected unit-weight graph: all-pairs BFS distances,
// exact bitmask matching over T, union of shortest paths with shared-edge
// cancellation.

#include <queue>

#include "parityaug/core.hpp"

namespace parityaug {

namespace tjoin_detail {

struct Bfs {
    std::vector<int> dist, parent;
};

inline Bfs bfs_from(int n, const std::vector<std::vector<int>>& adj, int src) {
    Bfs r;
    r.dist.assign(n + 1, -1);
    r.parent.assign(n + 1, 0);
    std::queue<int> q;
    q.push(src);
    r.dist[src] = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int u : adj[v])
            if (r.dist[u] < 0) {
                r.dist[u] = r.dist[v] + 1;
                r.parent[u] = v;
                q.push(u);
            }
    }
    return r;
}

} // namespace tjoin_detail

// Edge set whose odd-degree vertex set is exactly T, of minimum size.
// |T| must be even and at most 22 (exact matching by bitmask DP); the graph
// restricted to `edges` must connect all vertices touched by T.
inline std::vector<VertexPair> minimum_t_join(int n, const std::vector<VertexPair>& edges,
                                              const std::vector<int>& T) {
    if (T.size() % 2 != 0) throw InvalidInputError("minimum_t_join: |T| must be even");
    if (T.empty()) return {};
    if (T.size() > 22) throw BudgetExceededError("minimum_t_join: |T| above matching budget");
    std::vector<std::vector<int>> adj(n + 1);
    for (const auto& [a, b] : edges) {
        if (a < 1 || b < 1 || a > n || b > n || a == b)
            throw InvalidInputError("minimum_t_join: bad edge");
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& l : adj) std::sort(l.begin(), l.end());

    int t = static_cast<int>(T.size());
    std::vector<tjoin_detail::Bfs> bfs(t);
    for (int i = 0; i < t; ++i) {
        bfs[i] = tjoin_detail::bfs_from(n, adj, T[i]);
        for (int j = 0; j < t; ++j)
            if (bfs[i].dist[T[j]] < 0)
                throw InvalidInputError("minimum_t_join: T vertices not connected");
    }

    // dp over subsets of T: pair the lowest unmatched vertex with each other
    const int full = (1 << t) - 1;
    std::vector<int> dp(full + 1, 1 << 29), choice(full + 1, -1);
    dp[0] = 0;
    for (int mask = 0; mask <= full; ++mask) {
        if (dp[mask] >= (1 << 29)) continue;
        int i = 0;
        while (i < t && (mask >> i & 1)) ++i;
        if (i == t) continue;
        for (int j = i + 1; j < t; ++j) {
            if (mask >> j & 1) continue;
            int nm = mask | (1 << i) | (1 << j);
            int nd = dp[mask] + bfs[i].dist[T[j]];
            if (nd < dp[nm]) {
                dp[nm] = nd;
                choice[nm] = i * 32 + j;
            }
        }
    }

    // symmetric difference of the matched shortest paths
    std::set<VertexPair> join;
    auto toggle = [&](int a, int b) {
        VertexPair p = norm_pair(a, b);
        auto it = join.find(p);
        if (it == join.end())
            join.insert(p);
        else
            join.erase(it);
    };
    int mask = full;
    while (mask) {
        int i = choice[mask] / 32, j = choice[mask] % 32;
        int v = T[j];
        while (v != T[i]) {
            int p = bfs[i].parent[v];
            toggle(p, v);
            v = p;
        }
        mask &= ~((1 << i) | (1 << j));
    }

    // the symmetric difference keeps the odd set equal to T by construction
    std::vector<int> deg(n + 1, 0);
    for (const auto& [a, b] : join) {
        ++deg[a];
        ++deg[b];
    }
    std::set<int> odd, tset(T.begin(), T.end());
    for (int v = 1; v <= n; ++v)
        if (deg[v] % 2) odd.insert(v);
    if (odd != tset) throw StructuralError("minimum_t_join: odd-degree set mismatch");
    return {join.begin(), join.end()};
}

// Vertex connectivity at least 3, by removing every vertex pair. |V| >= 4.
inline bool three_connectivity_check(const PlaneGraph& g) {
    if (g.n < 4) throw InvalidInputError("three_connectivity_check: need at least 4 vertices");
    auto connected_without = [&](int x, int y) {
        int start = 0;
        for (int v = 1; v <= g.n; ++v)
            if (v != x && v != y) {
                start = v;
                break;
            }
        std::vector<char> vis(g.n + 1, 0);
        vis[start] = 1;
        std::vector<int> st{start};
        int cnt = 0;
        while (!st.empty()) {
            int v = st.back();
            st.pop_back();
            ++cnt;
            for (int u : g.rot(v))
                if (u != x && u != y && !vis[u]) {
                    vis[u] = 1;
                    st.push_back(u);
                }
        }
        return cnt == g.n - (x ? 1 : 0) - (y ? 1 : 0);
    };
    if (!connected_without(0, 0)) return false;
    for (int x = 1; x <= g.n; ++x)
        if (!connected_without(x, 0)) return false;
    for (int x = 1; x <= g.n; ++x)
        for (int y = x + 1; y <= g.n; ++y)
            if (!connected_without(x, y)) return false;
    return true;
}

} // namespace parityaug
