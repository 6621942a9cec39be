#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "core/holonomy.hpp"
#include "core/solver.hpp"

namespace cpk {

// A marked triangle of the universal cover reached by the breadth-first
// development, with the accumulated transform from the standard interstice.
struct Interstice {
    std::string address;            // move word from the base flag
    int depth = 0;
    int vertex = 0;                 // vertex-lift id of the marked vertex
    int sector = 0;                 // link sector around it, 0-based
    Moebius transform;
    std::array<Circle, 3> circles;  // images of (real line, Im z = 1, |z-i/2| = 1/2)
};

struct PackingScene {
    int depth = 0;
    std::vector<Circle> circles;        // one per vertex lift, creation order
    std::vector<std::string> circle_addresses;
    std::vector<Interstice> interstices;

    // Audit raw data collected during the expansion.
    std::vector<double> crossing_discriminants;   // one per rotation move
    std::vector<double> revisit_mismatches;       // one per deduplicated arrival
};

// Breadth-first development to the given move-distance.  The point must
// verify in-space.
PackingScene develop(const ParamPoint& p, int depth);

// Development without the in-space gate (negative controls).
PackingScene develop_unchecked(const ParamPoint& p, int depth);

struct AuditReport {
    int crossings = 0;
    double max_discriminant = 0.0;
    double max_revisit_mismatch = 0.0;

    bool pass(double tol = kGeomTol) const {
        return max_discriminant <= tol && max_revisit_mismatch <= tol;
    }
};

// Tangency of the two circles across every crossed edge, plus consistency of
// every deduplicated arrival against the stored flag.
AuditReport tangency_audit(const PackingScene& scene);

// Targeted development along one move word; validates that each rotation's
// declared edge label matches the pattern's triangle adjacency at the flag.
struct WalkResult {
    Moebius transform;
    int corner = 0;                 // quotient corner of the final flag, 1-based
    std::array<Circle, 3> circles;
};
WalkResult walk_moves(const ParamPoint& p, std::span<const Move> moves);

// Replays an address string ('c' rotate-cw, 'a' rotate-acw, 'm' remark-acw,
// 'w' remark-cw) from the base flag, filling in the crossed edge labels.
std::vector<Move> moves_from_address(const ParamPoint& p, const std::string& address);

// Reversed, move-wise inverted word: the deck inverse of an address.
std::vector<Move> invert_moves(std::span<const Move> moves);

struct Viewport {
    Complex center{0.0, 0.0};
    double half_width = 1.0;
};

struct RenderOptions {
    double min_radius = 0.25;    // svg-pixel cutoff for circle elements
    double stroke_width = 1.0;   // svg pixels
};

// Byte-deterministic SVG: fixed 1000x1000 canvas, 12 significant digits,
// elements in scene order (circle creation order is address order).
std::string render_svg(const PackingScene& scene, const Viewport& vp,
                       const RenderOptions& opt);

} // namespace cpk
