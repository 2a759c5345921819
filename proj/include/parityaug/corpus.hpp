#pragma once

// Random and exhaustive MOP corpora. Random triangulations are sampled
// uniformly by Catalan-weighted apex choice (long double weights stay exact
// enough far beyond the sizes used here).

#include <functional>
#include <random>

#include "parityaug/core.hpp"

namespace parityaug {

namespace corpus_detail {

inline const std::vector<long double>& catalan_table(int upto) {
    static std::vector<long double> c{1.0L};
    while (static_cast<int>(c.size()) <= upto) {
        long double t = static_cast<long double>(c.size()) - 1;
        c.push_back(c.back() * 2 * (2 * t + 1) / (t + 2));
    }
    return c;
}

inline void sample_polygon(int lo, int hi, std::mt19937_64& rng,
                           std::set<VertexPair>& out) {
    if (hi - lo < 2) return;
    const auto& cat = catalan_table(hi - lo);
    long double total = 0;
    for (int a = lo + 1; a < hi; ++a) total += cat[a - lo - 1] * cat[hi - a - 1];
    std::uniform_real_distribution<long double> dist(0.0L, 1.0L);
    long double pick = dist(rng) * total, acc = 0;
    int apex = lo + 1;
    for (int a = lo + 1; a < hi; ++a) {
        acc += cat[a - lo - 1] * cat[hi - a - 1];
        if (acc >= pick) {
            apex = a;
            break;
        }
    }
    if (apex - lo >= 2) out.insert(norm_pair(lo, apex));
    if (hi - apex >= 2) out.insert(norm_pair(apex, hi));
    sample_polygon(lo, apex, rng, out);
    sample_polygon(apex, hi, rng, out);
}

} // namespace corpus_detail

// Uniform random maximal outerplane graph on n vertices.
inline CyclicMop random_mop(int n, std::mt19937_64& rng) {
    if (n < 3) throw InvalidInputError("random_mop: n must be at least 3");
    CyclicMop g;
    g.n = n;
    corpus_detail::sample_polygon(1, n, rng, g.diagonals);
    return g;
}

// Random coloring; when even_red is set and the draw is odd, vertex n's
// membership is toggled.
inline ParityColoring random_coloring(int n, std::mt19937_64& rng, bool even_red) {
    ParityColoring col;
    for (int v = 1; v <= n; ++v)
        if (rng() & 1) col.red.insert(v);
    if (even_red && col.red.size() % 2 == 1) {
        if (col.red.count(n))
            col.red.erase(n);
        else
            col.red.insert(n);
    }
    return col;
}

// Every triangulation of the convex n-gon (Catalan many).
inline std::vector<CyclicMop> enumerate_mops(int n) {
    if (n < 3) throw InvalidInputError("enumerate_mops: n must be at least 3");
    std::vector<CyclicMop> out;
    std::vector<std::pair<int, int>> stack;
    std::set<VertexPair> cur;
    // recursive lambda over polygon intervals
    std::function<void(std::vector<std::pair<int, int>>&)> rec =
        [&](std::vector<std::pair<int, int>>& work) {
            if (work.empty()) {
                CyclicMop g;
                g.n = n;
                g.diagonals = cur;
                out.push_back(g);
                return;
            }
            auto [lo, hi] = work.back();
            work.pop_back();
            if (hi - lo < 2) {
                rec(work);
                work.push_back({lo, hi});
                return;
            }
            for (int a = lo + 1; a < hi; ++a) {
                std::vector<VertexPair> added;
                if (a - lo >= 2) added.push_back(norm_pair(lo, a));
                if (hi - a >= 2) added.push_back(norm_pair(a, hi));
                for (const auto& d : added) cur.insert(d);
                work.push_back({lo, a});
                work.push_back({a, hi});
                rec(work);
                work.pop_back();
                work.pop_back();
                for (const auto& d : added) cur.erase(d);
            }
            work.push_back({lo, hi});
        };
    std::vector<std::pair<int, int>> work{{1, n}};
    rec(work);
    return out;
}

} // namespace parityaug
