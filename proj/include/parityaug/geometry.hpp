#pragma once

// Segment predicates used by the geometric verifiers and oracles.
// Arithmetic is double precision; inputs are expected to be integral or
// modest rationals, so a fixed tolerance of 1e-9 decides degeneracy.

#include <cmath>
#include <utility>

namespace parityaug {

inline constexpr double kGeomEps = 1e-9;

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline bool points_equal(const Point& a, const Point& b) {
    return std::abs(a.x - b.x) <= kGeomEps && std::abs(a.y - b.y) <= kGeomEps;
}

inline double cross3(const Point& o, const Point& a, const Point& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// -1, 0, +1 for clockwise, collinear, counterclockwise.
inline int orient_sign(const Point& o, const Point& a, const Point& b) {
    double c = cross3(o, a, b);
    if (c > kGeomEps) return 1;
    if (c < -kGeomEps) return -1;
    return 0;
}

// p collinear with [a,b] and inside its bounding box (endpoints included).
inline bool on_segment_closed(const Point& p, const Point& a, const Point& b) {
    if (orient_sign(a, b, p) != 0) return false;
    return p.x >= std::min(a.x, b.x) - kGeomEps && p.x <= std::max(a.x, b.x) + kGeomEps &&
           p.y >= std::min(a.y, b.y) - kGeomEps && p.y <= std::max(a.y, b.y) + kGeomEps;
}

// p strictly inside segment [a,b].
inline bool in_segment_interior(const Point& p, const Point& a, const Point& b) {
    return on_segment_closed(p, a, b) && !points_equal(p, a) && !points_equal(p, b);
}

enum class SegRelation {
    Disjoint,       // no common point
    SharedEndpoint, // exactly one common point, an endpoint of both
    Touch,          // an endpoint of one lies in the interior of the other
    ProperCross,    // interiors cross in one point
    Overlap,        // collinear with a shared sub-segment
};

inline SegRelation classify_segments(const Point& p1, const Point& q1,
                                     const Point& p2, const Point& q2) {
    int d1 = orient_sign(p2, q2, p1);
    int d2 = orient_sign(p2, q2, q1);
    int d3 = orient_sign(p1, q1, p2);
    int d4 = orient_sign(p1, q1, q2);

    if (d1 != d2 && d3 != d4 && d1 != 0 && d2 != 0 && d3 != 0 && d4 != 0)
        return SegRelation::ProperCross;

    bool e11 = points_equal(p1, p2), e12 = points_equal(p1, q2);
    bool e21 = points_equal(q1, p2), e22 = points_equal(q1, q2);

    if (d1 == 0 && d2 == 0 && d3 == 0 && d4 == 0) {
        // Collinear: overlap unless they only share one endpoint.
        bool i1 = in_segment_interior(p1, p2, q2) || in_segment_interior(q1, p2, q2);
        bool i2 = in_segment_interior(p2, p1, q1) || in_segment_interior(q2, p1, q1);
        if (i1 || i2) return SegRelation::Overlap;
        int shared = (e11 ? 1 : 0) + (e12 ? 1 : 0) + (e21 ? 1 : 0) + (e22 ? 1 : 0);
        if (shared >= 2) return SegRelation::Overlap; // identical segments
        if (shared == 1) return SegRelation::SharedEndpoint;
        return SegRelation::Disjoint;
    }

    if (e11 || e12 || e21 || e22) return SegRelation::SharedEndpoint;

    // An endpoint resting on the other segment's interior.
    if (d1 == 0 && on_segment_closed(p1, p2, q2)) return SegRelation::Touch;
    if (d2 == 0 && on_segment_closed(q1, p2, q2)) return SegRelation::Touch;
    if (d3 == 0 && on_segment_closed(p2, p1, q1)) return SegRelation::Touch;
    if (d4 == 0 && on_segment_closed(q2, p1, q1)) return SegRelation::Touch;

    return SegRelation::Disjoint;
}

// True iff the two segments have any common point besides a shared endpoint.
inline bool segments_conflict(const Point& p1, const Point& q1,
                              const Point& p2, const Point& q2) {
    switch (classify_segments(p1, q1, p2, q2)) {
        case SegRelation::Disjoint:
        case SegRelation::SharedEndpoint:
            return false;
        default:
            return true;
    }
}

} // namespace parityaug
