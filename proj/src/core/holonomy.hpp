#pragma once

#include <span>
#include <utility>
#include <vector>

#include "core/moebius.hpp"
#include "core/solver.hpp"

namespace cpk {

// Marking permutation of the standard interstice: R(0)=i, R(i)=inf, R(inf)=0.
Moebius remark_matrix();   // [[0,i],[i,1]]

// Basic move on marked triangles: a rotation about the marked vertex across
// an edge, or a remarking of the triangle.
struct Move {
    enum Kind { Rotate, Remark } kind = Rotate;
    bool clockwise = true;
    int edge_label = 0;   // rotations only

    static Move rotate_cw(int label) { return {Rotate, true, label}; }
    static Move rotate_acw(int label) { return {Rotate, false, label}; }
    static Move remark_cw() { return {Remark, true, 0}; }
    static Move remark_acw() { return {Remark, false, 0}; }
};

// Rotation -> A(x_e) (clockwise) or its inverse; remark -> R (anticlockwise)
// or its inverse.
Moebius move_matrix(const Move& m, const ParamPoint& p);

// Left-to-right product over a move word.
Moebius move_word_matrix(std::span<const Move> moves, const ParamPoint& p);

// Holonomy of the deck transformation carrying the w1 flag to the w2 flag,
// both words issued from the base marked triangle: product(w2) product(w1)^-1.
Moebius holonomy_of(std::span<const Move> w1, std::span<const Move> w2, const ParamPoint& p);

// Sign normalization for PSL2 traces: flip so the first component of
// (Re, Im) away from zero is positive.
Complex normalize_trace(Complex t);

// Appendix closed forms (xz-1+(x-z)i, xy-1+(y-x)i), sign-normalized.
// The point must satisfy the torus identity xyz = x+y+z.
std::pair<Complex, Complex> torus_traces(double x, double y, double z);

// Projective commutation test: tr(g h g^-1 h^-1) = 2 within 1e-9.
bool commuting_check(const Moebius& g, const Moebius& h);

// Move words for the three side-pairing generators attached to the dependent
// triple of the layout: gamma_1 : s_1 -> s_j, gamma_2 : s_{j+1} -> s_{i-1},
// gamma_3 : s_i -> s_{2n}, as (w1, w2) pairs issued from the base flag.
struct GeneratorWords {
    std::vector<Move> w1, w2;
};
std::vector<GeneratorWords> layout_generator_words(const ParamPoint& p);

// Holonomy matrices of the layout generators (g >= 2).
std::vector<Moebius> layout_generators(const ParamPoint& p);

struct RigidityReport {
    std::vector<Complex> traces1, traces2;   // sign-normalized, per generator
    double max_difference = 0.0;
    bool equal = false;
};

// Sign-normalized trace comparison of the triple generators (appendix trace
// pair on the torus).  Both points must be in-space for the same pattern and
// dependent triple.
RigidityReport rigidity_compare(const ParamPoint& p1, const ParamPoint& p2);

} // namespace cpk
