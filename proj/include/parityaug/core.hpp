#pragma once

// Plane-graph data model: maximal outerplane graphs on a circle, rotation
// system embeddings, parity colorings, and the augmentation verifiers.
//
// Vertex ids are 1-based everywhere.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "parityaug/errors.hpp"
#include "parityaug/geometry.hpp"

namespace parityaug {

using VertexPair = std::pair<int, int>; // normalized lo < hi

inline VertexPair norm_pair(int a, int b) {
    return a < b ? VertexPair{a, b} : VertexPair{b, a};
}

// ---------------------------------------------------------------- colorings

// Red vertices are the ones whose degree parity must change.
struct ParityColoring {
    std::set<int> red;

    bool is_red(int v) const { return red.count(v) != 0; }
    int red_count() const { return static_cast<int>(red.size()); }
};

// ------------------------------------------------------------------- mops

// Maximal outerplane graph: vertices 1..n clockwise on a circle, the n arcs
// between consecutive vertices, and n-3 pairwise non-crossing diagonals.
struct CyclicMop {
    int n = 0;
    std::set<VertexPair> diagonals;

    bool is_arc(int a, int b) const {
        auto [lo, hi] = norm_pair(a, b);
        return hi - lo == 1 || (lo == 1 && hi == n);
    }
    bool has_edge(int a, int b) const {
        if (a == b) return false;
        if (is_arc(a, b)) return true;
        return diagonals.count(norm_pair(a, b)) != 0;
    }
    int degree(int v) const {
        int d = 2;
        for (const auto& [a, b] : diagonals)
            if (a == v || b == v) ++d;
        return d;
    }
    std::vector<int> boundary_cycle() const {
        std::vector<int> c(n);
        for (int i = 0; i < n; ++i) c[i] = i + 1;
        return c;
    }
};

// Chords (a1,a2) and (b1,b2) of a cycle interleave iff their endpoints
// strictly alternate around it; interleaving chords cannot be drawn
// crossing-free in one face.
inline bool chords_interleave(VertexPair a, VertexPair b, const std::vector<int>& cycle) {
    if (a.first == a.second || b.first == b.second)
        throw InvalidInputError("chords_interleave: chord endpoints must be distinct");
    std::map<int, int> pos;
    for (int i = 0; i < static_cast<int>(cycle.size()); ++i) pos[cycle[i]] = i;
    auto lookup = [&](int v) {
        auto it = pos.find(v);
        if (it == pos.end())
            throw InvalidInputError("chords_interleave: endpoint " + std::to_string(v) +
                                    " not on cycle");
        return it->second;
    };
    int a1 = lookup(a.first), a2 = lookup(a.second);
    int b1 = lookup(b.first), b2 = lookup(b.second);
    if (norm_pair(a1, a2) == norm_pair(b1, b2))
        throw InvalidInputError("chords_interleave: pairs must be distinct");
    if (a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2) return false; // shared endpoint
    auto inside = [&](int x, int lo, int hi) { return lo < x && x < hi; };
    auto [al, ah] = norm_pair(a1, a2);
    bool b1in = inside(b1, al, ah), b2in = inside(b2, al, ah);
    return b1in != b2in;
}

inline void validate_mop(const CyclicMop& g) {
    if (g.n < 3) throw InvalidInputError("CyclicMop: n must be at least 3");
    if (static_cast<int>(g.diagonals.size()) != g.n - 3)
        throw InvalidInputError("CyclicMop: expected n-3 diagonals, got " +
                                std::to_string(g.diagonals.size()));
    auto cycle = g.boundary_cycle();
    std::vector<VertexPair> ds(g.diagonals.begin(), g.diagonals.end());
    for (const auto& d : ds) {
        if (d.first < 1 || d.second > g.n)
            throw InvalidInputError("CyclicMop: diagonal endpoint out of range");
        if (g.is_arc(d.first, d.second))
            throw InvalidInputError("CyclicMop: diagonal joins consecutive vertices");
    }
    for (size_t i = 0; i < ds.size(); ++i)
        for (size_t j = i + 1; j < ds.size(); ++j)
            if (chords_interleave(ds[i], ds[j], cycle))
                throw InvalidInputError("CyclicMop: crossing diagonals");
}

// Relabels v -> ((v-1+offset) mod n)+1, keeping the clockwise layout.
inline CyclicMop rotate_labels(const CyclicMop& g, int offset) {
    CyclicMop out;
    out.n = g.n;
    auto shift = [&](int v) { return (v - 1 + offset % g.n + g.n) % g.n + 1; };
    for (const auto& [a, b] : g.diagonals) out.diagonals.insert(norm_pair(shift(a), shift(b)));
    return out;
}

inline ParityColoring rotate_labels(const ParityColoring& col, int n, int offset) {
    ParityColoring out;
    for (int v : col.red) out.red.insert((v - 1 + offset % n + n) % n + 1);
    return out;
}

// ------------------------------------------------------------- plane graphs

// Combinatorial embedding: clockwise cyclic order of neighbors per vertex.
struct PlaneGraph {
    int n = 0;
    std::vector<std::vector<int>> rotation; // rotation[v-1]
    ParityColoring colors;
    std::optional<std::vector<Point>> coords; // coords[v-1]

    const std::vector<int>& rot(int v) const { return rotation[v - 1]; }
    bool has_edge(int a, int b) const {
        if (a < 1 || b < 1 || a > n || b > n || a == b) return false;
        const auto& r = rot(a);
        return std::find(r.begin(), r.end(), b) != r.end();
    }
    int edge_count() const {
        size_t s = 0;
        for (const auto& r : rotation) s += r.size();
        return static_cast<int>(s / 2);
    }
};

inline void validate_rotation(const PlaneGraph& g) {
    if (static_cast<int>(g.rotation.size()) != g.n)
        throw StructuralError("PlaneGraph: rotation size != n");
    for (int v = 1; v <= g.n; ++v) {
        std::set<int> seen;
        for (int u : g.rot(v)) {
            if (u < 1 || u > g.n || u == v)
                throw StructuralError("PlaneGraph: bad neighbor in rotation of " + std::to_string(v));
            if (!seen.insert(u).second)
                throw StructuralError("PlaneGraph: repeated neighbor in rotation of " + std::to_string(v));
            if (!g.has_edge(u, v))
                throw StructuralError("PlaneGraph: edge " + std::to_string(v) + "-" +
                                      std::to_string(u) + " missing from the other rotation");
        }
    }
}

inline bool graph_connected(const PlaneGraph& g) {
    if (g.n == 0) return true;
    std::vector<char> vis(g.n + 1, 0);
    std::vector<int> stack{1};
    vis[1] = 1;
    int cnt = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++cnt;
        for (int u : g.rot(v))
            if (!vis[u]) {
                vis[u] = 1;
                stack.push_back(u);
            }
    }
    return cnt == g.n;
}

// Faces by the next-edge rule: the edge after u->v leaves v toward the
// rotation successor of u. Output order is deterministic: directed edges are
// scanned by source vertex id, then rotation position.
inline std::vector<std::vector<int>> faces_from_rotation(const PlaneGraph& g) {
    validate_rotation(g);
    std::map<std::pair<int, int>, int> idx; // position of u in rot(v)
    for (int v = 1; v <= g.n; ++v) {
        const auto& r = g.rot(v);
        for (int i = 0; i < static_cast<int>(r.size()); ++i) idx[{v, r[i]}] = i;
    }
    std::set<std::pair<int, int>> used;
    std::vector<std::vector<int>> faces;
    for (int v = 1; v <= g.n; ++v) {
        const auto& r = g.rot(v);
        for (int u : r) {
            if (used.count({v, u})) continue;
            std::vector<int> walk;
            int a = v, b = u;
            while (!used.count({a, b})) {
                used.insert({a, b});
                walk.push_back(a);
                const auto& rb = g.rot(b);
                int i = idx[{b, a}];
                int c = rb[(i + 1) % rb.size()];
                a = b;
                b = c;
            }
            faces.push_back(std::move(walk));
        }
    }
    return faces;
}

inline bool euler_formula_holds(const PlaneGraph& g) {
    if (!graph_connected(g)) return false;
    auto faces = faces_from_rotation(g);
    return g.n - g.edge_count() + static_cast<int>(faces.size()) == 2;
}

// --------------------------------------------------------------- augmentation

// Added edges plus, for general plane hosts, the host face each edge is
// drawn in. For CyclicMop hosts all edges live in the unbounded face and
// placement stays empty.
struct Augmentation {
    std::vector<VertexPair> edges;
    std::map<VertexPair, int> placement;

    int size() const { return static_cast<int>(edges.size()); }
};

struct Verdict {
    bool valid = true;
    std::string violation; // first violation, empty when valid

    explicit operator bool() const { return valid; }
    static Verdict ok() { return {}; }
    static Verdict fail(std::string why) { return {false, std::move(why)}; }
};

namespace detail {

inline std::string pair_str(VertexPair e) {
    return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

inline Verdict check_parity(int n, const ParityColoring& col,
                            const std::vector<VertexPair>& edges) {
    std::vector<int> deg(n + 1, 0);
    for (const auto& [a, b] : edges) {
        ++deg[a];
        ++deg[b];
    }
    for (int v = 1; v <= n; ++v) {
        bool odd = deg[v] % 2 == 1;
        if (odd != col.is_red(v))
            return Verdict::fail("parity of vertex " + std::to_string(v) + " not met");
    }
    return Verdict::ok();
}

} // namespace detail

inline Verdict verify_augmentation(const CyclicMop& g, const ParityColoring& col,
                                   const Augmentation& h) {
    validate_mop(g);
    auto cycle = g.boundary_cycle();
    std::set<VertexPair> seen;
    for (const auto& e : h.edges) {
        auto [a, b] = e;
        if (a < 1 || b < 1 || a > g.n || b > g.n || a == b)
            throw InvalidInputError("verify_augmentation: bad edge " + detail::pair_str(e));
        VertexPair p = norm_pair(a, b);
        if (g.has_edge(a, b))
            return Verdict::fail("duplicated edge " + detail::pair_str(p));
        if (!seen.insert(p).second)
            return Verdict::fail("duplicated edge " + detail::pair_str(p));
    }
    std::vector<VertexPair> es(seen.begin(), seen.end());
    for (size_t i = 0; i < es.size(); ++i)
        for (size_t j = i + 1; j < es.size(); ++j)
            if (chords_interleave(es[i], es[j], cycle))
                return Verdict::fail("crossing chords " + detail::pair_str(es[i]) + " and " +
                                     detail::pair_str(es[j]));
    return detail::check_parity(g.n, col, h.edges);
}

// Host restricted to connected 2-connected-style embeddings whose faces are
// simple cycles; every added edge carries an explicit face placement.
inline Verdict verify_augmentation(const PlaneGraph& g, const ParityColoring& col,
                                   const Augmentation& h) {
    if (!graph_connected(g)) throw StructuralError("verify_augmentation: host not connected");
    auto faces = faces_from_rotation(g);
    if (g.n - g.edge_count() + static_cast<int>(faces.size()) != 2)
        throw StructuralError("verify_augmentation: host violates Euler's formula");
    for (const auto& f : faces) {
        std::set<int> s(f.begin(), f.end());
        if (s.size() != f.size())
            throw StructuralError("verify_augmentation: host face is not a simple cycle");
    }

    std::set<VertexPair> seen;
    for (const auto& e : h.edges) {
        auto [a, b] = e;
        if (a < 1 || b < 1 || a > g.n || b > g.n || a == b)
            throw InvalidInputError("verify_augmentation: bad edge " + detail::pair_str(e));
        VertexPair p = norm_pair(a, b);
        if (g.has_edge(a, b)) return Verdict::fail("duplicated edge " + detail::pair_str(p));
        if (!seen.insert(p).second) return Verdict::fail("duplicated edge " + detail::pair_str(p));
    }

    // Group chords per placed face, then check interleaving inside each face.
    std::map<int, std::vector<VertexPair>> per_face;
    for (const auto& e : h.edges) {
        VertexPair p = norm_pair(e.first, e.second);
        auto it = h.placement.find(p);
        if (it == h.placement.end())
            throw InvalidInputError("verify_augmentation: edge " + detail::pair_str(p) +
                                    " has no face placement");
        int f = it->second;
        if (f < 0 || f >= static_cast<int>(faces.size()))
            throw InvalidInputError("verify_augmentation: placement of " + detail::pair_str(p) +
                                    " references unknown face " + std::to_string(f));
        const auto& walk = faces[f];
        auto on = [&](int v) { return std::find(walk.begin(), walk.end(), v) != walk.end(); };
        if (!on(p.first) || !on(p.second))
            return Verdict::fail("placement of " + detail::pair_str(p) +
                                 " references a face its endpoints do not both lie on");
        per_face[f].push_back(p);
    }
    for (const auto& [f, chords] : per_face) {
        const auto& walk = faces[f];
        for (size_t i = 0; i < chords.size(); ++i)
            for (size_t j = i + 1; j < chords.size(); ++j)
                if (chords_interleave(chords[i], chords[j], walk))
                    return Verdict::fail("crossing chords " + detail::pair_str(chords[i]) +
                                         " and " + detail::pair_str(chords[j]) + " in face " +
                                         std::to_string(f));
    }
    return detail::check_parity(g.n, col, h.edges);
}

// ----------------------------------------------------------- geometric graphs

struct GeometricGraph {
    std::vector<Point> points; // points[v-1]
    std::vector<VertexPair> edges;
    ParityColoring colors;

    int n() const { return static_cast<int>(points.size()); }
    const Point& pt(int v) const { return points[v - 1]; }
    bool has_edge(int a, int b) const {
        VertexPair p = norm_pair(a, b);
        return std::find(edges.begin(), edges.end(), p) != edges.end();
    }
};

// Throws DegeneracyError/InvalidInputError when the host itself is broken.
inline void validate_geometric(const GeometricGraph& g) {
    int n = g.n();
    for (const auto& [a, b] : g.edges) {
        if (a < 1 || b < 1 || a > n || b > n || a == b)
            throw InvalidInputError("GeometricGraph: bad edge");
        for (int v = 1; v <= n; ++v)
            if (v != a && v != b && in_segment_interior(g.pt(v), g.pt(a), g.pt(b)))
                throw DegeneracyError("vertex " + std::to_string(v) +
                                      " lies on segment " + detail::pair_str({a, b}));
    }
    for (size_t i = 0; i < g.edges.size(); ++i)
        for (size_t j = i + 1; j < g.edges.size(); ++j) {
            auto [a, b] = g.edges[i];
            auto [c, d] = g.edges[j];
            auto rel = classify_segments(g.pt(a), g.pt(b), g.pt(c), g.pt(d));
            if (rel == SegRelation::Overlap)
                throw DegeneracyError("collinear overlap of " + detail::pair_str(g.edges[i]) +
                                      " and " + detail::pair_str(g.edges[j]));
            if (rel == SegRelation::ProperCross || rel == SegRelation::Touch)
                throw InvalidInputError("GeometricGraph: crossing host edges " +
                                        detail::pair_str(g.edges[i]) + " and " +
                                        detail::pair_str(g.edges[j]));
        }
}

inline Verdict verify_geometric_augmentation(const GeometricGraph& g,
                                             const std::vector<VertexPair>& h) {
    validate_geometric(g);
    int n = g.n();
    std::set<VertexPair> seen;
    for (const auto& e : h) {
        auto [a, b] = e;
        if (a < 1 || b < 1 || a > n || b > n || a == b)
            throw InvalidInputError("verify_geometric_augmentation: bad edge " +
                                    detail::pair_str(e));
        VertexPair p = norm_pair(a, b);
        if (g.has_edge(a, b)) return Verdict::fail("duplicated edge " + detail::pair_str(p));
        if (!seen.insert(p).second) return Verdict::fail("duplicated edge " + detail::pair_str(p));
    }
    std::vector<VertexPair> hs(seen.begin(), seen.end());
    for (const auto& e : hs) {
        for (int v = 1; v <= n; ++v)
            if (v != e.first && v != e.second &&
                in_segment_interior(g.pt(v), g.pt(e.first), g.pt(e.second)))
                return Verdict::fail("edge " + detail::pair_str(e) + " passes through vertex " +
                                     std::to_string(v));
        for (const auto& f : g.edges)
            if (segments_conflict(g.pt(e.first), g.pt(e.second), g.pt(f.first), g.pt(f.second)))
                return Verdict::fail("edge " + detail::pair_str(e) + " crosses host edge " +
                                     detail::pair_str(f));
    }
    for (size_t i = 0; i < hs.size(); ++i)
        for (size_t j = i + 1; j < hs.size(); ++j)
            if (segments_conflict(g.pt(hs[i].first), g.pt(hs[i].second), g.pt(hs[j].first),
                                  g.pt(hs[j].second)))
                return Verdict::fail("crossing added edges " + detail::pair_str(hs[i]) + " and " +
                                     detail::pair_str(hs[j]));
    return detail::check_parity(n, g.colors, h);
}

// A path's only odd vertices are its endpoints; it extends to a plane
// Eulerian cycle iff the closing segment avoids the path. The 2-point path
// returns false: the closing edge would duplicate the single path edge.
inline bool path_eulerian_check(const GeometricGraph& g) {
    int n = g.n();
    if (n < 2 || static_cast<int>(g.edges.size()) != n - 1)
        throw InvalidInputError("path_eulerian_check: input is not a path");
    std::vector<int> deg(n + 1, 0);
    for (const auto& [a, b] : g.edges) {
        ++deg[a];
        ++deg[b];
    }
    std::vector<int> ends;
    for (int v = 1; v <= n; ++v) {
        if (deg[v] > 2 || deg[v] == 0) throw InvalidInputError("path_eulerian_check: input is not a path");
        if (deg[v] == 1) ends.push_back(v);
    }
    if (ends.size() != 2) throw InvalidInputError("path_eulerian_check: input is not a path");
    validate_geometric(g);
    if (n == 2) return false;

    int s = ends[0], t = ends[1];
    for (int v = 1; v <= n; ++v)
        if (v != s && v != t && in_segment_interior(g.pt(v), g.pt(s), g.pt(t))) return false;
    for (const auto& [a, b] : g.edges)
        if (segments_conflict(g.pt(s), g.pt(t), g.pt(a), g.pt(b))) return false;
    return true;
}

// Convenience: the plane graph of a CyclicMop (diagonals drawn inside the
// circle, rotation read off the disc layout).
inline PlaneGraph mop_to_plane(const CyclicMop& g, const ParityColoring& col = {}) {
    validate_mop(g);
    PlaneGraph pg;
    pg.n = g.n;
    pg.colors = col;
    pg.rotation.resize(g.n);
    std::vector<Point> pts(g.n);
    const double pi = 3.14159265358979323846;
    for (int v = 1; v <= g.n; ++v) {
        // clockwise placement starting at the top
        double a = pi / 2 - 2 * pi * (v - 1) / g.n;
        pts[v - 1] = {std::cos(a), std::sin(a)};
    }
    pg.coords = pts;
    for (int v = 1; v <= g.n; ++v) {
        std::vector<int> nbrs;
        nbrs.push_back(v % g.n + 1);
        nbrs.push_back((v - 2 + g.n) % g.n + 1);
        for (const auto& [a, b] : g.diagonals) {
            if (a == v) nbrs.push_back(b);
            if (b == v) nbrs.push_back(a);
        }
        // clockwise angular sort around v
        const Point& pv = pts[v - 1];
        std::sort(nbrs.begin(), nbrs.end(), [&](int x, int y) {
            const Point& px = pts[x - 1];
            const Point& py = pts[y - 1];
            double ax = std::atan2(px.y - pv.y, px.x - pv.x);
            double ay = std::atan2(py.y - pv.y, py.x - pv.x);
            return ax > ay;
        });
        pg.rotation[v - 1] = nbrs;
    }
    return pg;
}

} // namespace parityaug
