#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core/error.hpp"

namespace cpk {

// Side-pairing pattern of the (12g-6)-gon encoding a one-vertex triangulation
// of the genus-g surface.  Sides are numbered 1..12g-6 counterclockwise and
// identified orientation-reversingly by the fixed-point-free involution mu.
//
// Corners are labelled by the side they precede: corner c sits between sides
// s_{c-1} and s_c.  Gluing induces the successor map sigma(c) = mu(c)+1; the
// pattern is valid exactly when every sigma-orbit has length 3 (the dual graph
// is trivalent with one complementary face).
struct SidePairing {
    int genus = 0;
    int sides = 0;                                // 12g-6
    std::vector<int> mu;                          // 1-based, size sides+1
    std::string name;

    // Derived on construction.
    std::vector<std::array<int, 3>> corners;      // sigma-orbits, traversal from min, sorted
    std::vector<int> side_label;                  // 1-based side -> edge label 1..6g-3

    int edge_count() const { return sides / 2; }   // 6g-3

    bool operator==(const SidePairing& o) const {
        return genus == o.genus && sides == o.sides && mu == o.mu;
    }
};

SidePairing build_pattern(int genus, const std::vector<std::pair<int, int>>& pairing,
                          std::string name = "");

enum class TripleKind { Separating, Nonseparating };

// Cyclic-order test on the three side pairs meeting at a corner cycle:
// pairwise crossing chords are separating, pairwise disjoint non-separating.
TripleKind classify_triple(const SidePairing& p, const std::array<int, 3>& corner);

// Lexicographically smallest relabeling under the dihedral group on sides.
SidePairing canonical_pattern(const SidePairing& p);

// Census of valid patterns up to the dihedral action, canonical and sorted.
std::vector<SidePairing> enumerate_patterns(int genus);

// Placement of the vertex word as x T x y U y z V z for a chosen
// non-separating corner cycle.  Positions are 1..12g-6 after rotating the
// word; original side of position p is ((p - 1 + rotation) mod sides) + 1.
struct EdgeLayout {
    int rotation = 0;
    int j = 0, i = 0;                 // x at (1, j), y at (j+1, i-1), z at (i, sides)
    int x_label = 0, y_label = 0, z_label = 0;
    std::vector<int> word;            // rotated vertex word of edge labels, size sides
    std::vector<int> free_labels;     // the 6g-6 remaining labels, ascending
};

// First non-separating corner cycle in canonical order, traversal started at
// its smallest corner.  Requires genus >= 2.
EdgeLayout select_dependent_triple(const SidePairing& p);

// Layout whose dependent labels come out as (x,y,z) = (lx,ly,lz), if any
// non-separating corner cycle realizes that assignment.
std::optional<EdgeLayout> layout_for_labels(const SidePairing& p, int lx, int ly, int lz);

// Vertex word of edge labels in the pattern's own numbering (rotation 0).
std::vector<int> vertex_word(const SidePairing& p);

} // namespace cpk
