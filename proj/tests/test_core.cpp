#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "parityaug/core.hpp"

using namespace parityaug;

namespace {

CyclicMop mop(int n, std::initializer_list<VertexPair> diags) {
    CyclicMop g;
    g.n = n;
    for (auto d : diags) g.diagonals.insert(norm_pair(d.first, d.second));
    return g;
}

ParityColoring reds(std::initializer_list<int> vs) {
    ParityColoring c;
    for (int v : vs) c.red.insert(v);
    return c;
}

} // namespace

TEST_CASE("chords_interleave basics") {
    std::vector<int> c4{1, 2, 3, 4};
    CHECK(chords_interleave({1, 3}, {2, 4}, c4));
    CHECK_FALSE(chords_interleave({1, 2}, {3, 4}, c4));
    std::vector<int> c6{1, 2, 3, 4, 5, 6};
    CHECK_FALSE(chords_interleave({1, 4}, {2, 3}, c6)); // nested
    CHECK_THROWS_AS(chords_interleave({1, 9}, {2, 4}, c6), InvalidInputError);
}

TEST_CASE("chords_interleave is symmetric") {
    std::mt19937_64 rng(7);
    std::vector<int> cyc(12);
    for (int i = 0; i < 12; ++i) cyc[i] = i + 1;
    for (int t = 0; t < 500; ++t) {
        int a = rng() % 12 + 1, b = rng() % 12 + 1, c = rng() % 12 + 1, d = rng() % 12 + 1;
        if (a == b || c == d) continue;
        if (norm_pair(a, b) == norm_pair(c, d)) continue;
        CHECK(chords_interleave({a, b}, {c, d}, cyc) == chords_interleave({c, d}, {a, b}, cyc));
    }
}

TEST_CASE("faces_from_rotation on small graphs") {
    PlaneGraph tri;
    tri.n = 3;
    tri.rotation = {{2, 3}, {3, 1}, {1, 2}};
    auto f = faces_from_rotation(tri);
    REQUIRE(f.size() == 2);
    CHECK(f[0].size() == 3);
    CHECK(f[1].size() == 3);

    // 4-cycle with one chord: three faces
    PlaneGraph sq;
    sq.n = 4;
    sq.rotation = {{2, 3, 4}, {3, 1}, {4, 1, 2}, {1, 3}};
    auto f2 = faces_from_rotation(sq);
    CHECK(f2.size() == 3);
    CHECK(euler_formula_holds(sq));

    // inconsistent rotation
    PlaneGraph bad;
    bad.n = 3;
    bad.rotation = {{2, 3}, {1}, {1}};
    CHECK_THROWS_AS(faces_from_rotation(bad), StructuralError);
}

TEST_CASE("mop_to_plane produces a triangulated disc") {
    auto g = mop(6, {{1, 3}, {3, 6}, {3, 5}});
    auto pg = mop_to_plane(g);
    auto faces = faces_from_rotation(pg);
    REQUIRE(faces.size() == 5); // 4 triangles + outer hexagon
    int triangles = 0, hexas = 0;
    for (const auto& w : faces) {
        if (w.size() == 3) ++triangles;
        if (w.size() == 6) ++hexas;
    }
    CHECK(triangles == 4);
    CHECK(hexas == 1);
    CHECK(euler_formula_holds(pg));
}

TEST_CASE("Euler's formula across random mop conversions") {
    // every triangulation of the 7-gon encoded by fans
    for (int apex = 1; apex <= 7; ++apex) {
        CyclicMop g;
        g.n = 7;
        for (int v = 1; v <= 7; ++v) {
            if (v == apex) continue;
            int a = apex, b = v;
            if (!g.is_arc(a, b)) g.diagonals.insert(norm_pair(a, b));
        }
        REQUIRE(static_cast<int>(g.diagonals.size()) == 4);
        CHECK(euler_formula_holds(mop_to_plane(g)));
    }
}

TEST_CASE("verify_augmentation on cyclic mops") {
    auto g = mop(4, {{1, 3}});
    auto col = reds({2, 4});

    Augmentation good;
    good.edges = {{2, 4}};
    CHECK(verify_augmentation(g, col, good).valid);

    Augmentation dup;
    dup.edges = {{1, 3}};
    auto v1 = verify_augmentation(g, col, dup);
    CHECK_FALSE(v1.valid);
    CHECK(v1.violation.find("duplicated") != std::string::npos);

    Augmentation empty;
    auto v2 = verify_augmentation(g, col, empty);
    CHECK_FALSE(v2.valid);
    CHECK(v2.violation.find("vertex 2") != std::string::npos);

    // crossing chords in the unbounded face
    auto g6 = mop(6, {{1, 3}, {1, 4}, {1, 5}});
    Augmentation crossing;
    crossing.edges = {{2, 4}, {3, 5}};
    auto v3 = verify_augmentation(g6, reds({2, 3, 4, 5}), crossing);
    CHECK_FALSE(v3.valid);
    CHECK(v3.violation.find("crossing") != std::string::npos);
}

TEST_CASE("verify_augmentation on plane graphs needs placements") {
    auto g = mop(6, {{1, 3}, {3, 6}, {3, 5}});
    auto pg = mop_to_plane(g);
    pg.colors = reds({2, 4});
    auto faces = faces_from_rotation(pg);
    int outer = -1;
    for (int i = 0; i < static_cast<int>(faces.size()); ++i)
        if (faces[i].size() == 6) outer = i;
    REQUIRE(outer >= 0);

    Augmentation h;
    h.edges = {{2, 4}};
    h.placement[{2, 4}] = outer;
    CHECK(verify_augmentation(pg, pg.colors, h).valid);

    // placing the chord in a triangle its endpoints do not share
    int tri = outer == 0 ? 1 : 0;
    h.placement[{2, 4}] = tri;
    auto v = verify_augmentation(pg, pg.colors, h);
    CHECK_FALSE(v.valid);
    CHECK(v.violation.find("face") != std::string::npos);

    Augmentation missing;
    missing.edges = {{2, 4}};
    CHECK_THROWS_AS(verify_augmentation(pg, pg.colors, missing), InvalidInputError);
}

TEST_CASE("geometric verification") {
    GeometricGraph g;
    g.points = {{0, 0}, {2, 0}, {2, 2}, {0, 2}};
    g.edges = {{1, 2}, {2, 3}, {3, 4}};
    g.colors = reds({1, 4});
    CHECK(verify_geometric_augmentation(g, {{1, 4}}).valid);

    GeometricGraph collinear;
    collinear.points = {{0, 0}, {1, 0}, {2, 0}};
    collinear.edges = {{1, 3}};
    CHECK_THROWS_AS(verify_geometric_augmentation(collinear, {{1, 2}}), DegeneracyError);

    // crossing the host
    GeometricGraph x;
    x.points = {{0, 0}, {2, 2}, {2, 0}, {0, 2}};
    x.edges = {{1, 2}};
    x.colors = reds({3, 4});
    auto v = verify_geometric_augmentation(x, {{3, 4}});
    CHECK_FALSE(v.valid);
    CHECK(v.violation.find("crosses") != std::string::npos);
}

TEST_CASE("path_eulerian_check") {
    GeometricGraph convex;
    convex.points = {{0, 0}, {2, 0}, {2, 2}, {0, 2}};
    convex.edges = {{1, 2}, {2, 3}, {3, 4}};
    CHECK(path_eulerian_check(convex));

    // spiral: the closing segment crosses an arm
    GeometricGraph spiral;
    spiral.points = {{0, 0}, {2, 0}, {2, 2}, {-2, 2}, {-2, -2}, {-4, 0}};
    spiral.edges = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}};
    CHECK_FALSE(path_eulerian_check(spiral));

    GeometricGraph two;
    two.points = {{0, 0}, {1, 0}};
    two.edges = {{1, 2}};
    CHECK_FALSE(path_eulerian_check(two));

    GeometricGraph notpath;
    notpath.points = {{0, 0}, {1, 0}, {0, 1}};
    notpath.edges = {{1, 2}, {2, 3}, {3, 1}};
    CHECK_THROWS_AS(path_eulerian_check(notpath), InvalidInputError);
}

TEST_CASE("rotate_labels keeps mop validity") {
    auto g = mop(6, {{1, 3}, {3, 6}, {3, 5}});
    for (int off = 0; off < 6; ++off) {
        auto r = rotate_labels(g, off);
        CHECK_NOTHROW(validate_mop(r));
    }
}

TEST_CASE("mop validation rejects bad inputs") {
    CHECK_THROWS_AS(validate_mop(mop(6, {{1, 3}})), InvalidInputError); // too few
    CHECK_THROWS_AS(validate_mop(mop(6, {{1, 3}, {2, 4}, {3, 6}})), InvalidInputError); // crossing
    CHECK_THROWS_AS(validate_mop(mop(4, {{1, 2}})), InvalidInputError); // arc as diagonal
}
