#pragma once

#include <array>
#include <optional>
#include <vector>

#include "core/patterns.hpp"
#include "core/words.hpp"

namespace cpk {

// Assignment of a positive cross ratio to every edge of a pattern, with the
// dependent-triple layout attached for genus >= 2.
struct ParamPoint {
    SidePairing pattern;
    std::optional<EdgeLayout> layout;
    std::vector<double> values;   // indexed by edge label, slot 0 unused
};

// Entries of the cyclic vertex word at a point, in layout rotation when a
// layout is attached, natural rotation otherwise.
std::vector<double> word_values(const ParamPoint& p);

enum class Verdict { InSpace, Boundary, Out };

struct SubwordSummary {
    int length = 0;
    int strict = 0, boundary = 0, inadmissible = 0;
};

struct VerifyReport {
    double residual = 0.0;                  // max-norm of W + I, det-normalized
    Verdict verdict = Verdict::Out;
    std::vector<SubwordSummary> subwords;   // per cyclic-subword length 1..n-1
    // flags[s][l-1]: class of the cyclic subword starting at position s+1
    // with length l.
    std::vector<std::vector<Adm>> flags;

    bool in_space() const { return verdict == Verdict::InSpace; }
};

// Evaluates the full cyclic vertex word and classifies every cyclic subword.
// In-space requires residual <= 1e-9, strictness up to length n-2 and at
// least boundary at length n-1.  Reports, never throws, on mathematical
// failure.
VerifyReport verify_point(const ParamPoint& p);

// Torus closed form z = (x+y)/(xy-1); requires xy > 1.
double torus_dependent(double x, double y);

struct Thresholds {
    double alpha = 0.0, beta = 0.0, gamma = 0.0;
};

// Gap words of the layout at the given values, with the lower bounds for
// x, y, z coming from the both-sided extension threshold of T, U, V.
struct TripleSystem {
    Mat2 T, U, V;
    Thresholds thr;

    // (2,2) entries of XTXYUY, YUYZVZ and ZVZXTX; the dependent triple solves
    // h1 = v4, h2 = t4, h3 = u4.
    double h1(double x, double y) const;
    double h2(double y, double z) const;
    double h3(double z, double x) const;
};

TripleSystem make_triple_system(const EdgeLayout& lay, const std::vector<double>& values);

Thresholds dependent_thresholds(const EdgeLayout& lay, const std::vector<double>& values);

struct SolveResult {
    double x = 0.0, y = 0.0, z = 0.0;
    Thresholds thr;
    int iterations = 0;       // outer bisection steps plus Newton polish steps
    double residual = 0.0;    // max-norm of W + I at the solution
};

// The unique (x,y,z) above the thresholds closing the vertex word to -I.
// Nested monotone bisection following the existence proof, then a Newton
// polish on the word entries.
SolveResult solve_dependent_triple(const EdgeLayout& lay, std::vector<double> values);

// True iff the (2,2) entries of AB, BC, CA match those of -C^-1, -A^-1, -B^-1
// within 1e-9; the words must be strictly admissible.
bool triple_identity_check(const Word& A, const Word& B, const Word& C);

using Mat3 = std::array<std::array<double, 3>, 3>;

double det3(const Mat3& m);

// Jacobian of the word entries (a, b, c) with respect to (x, y, z) from the
// closed forms in prefix products; valid at in-space points.
Mat3 jacobian_dependent(const EdgeLayout& lay, const ParamPoint& p);

// Same formulas without the in-space precondition (solver internals, tests).
Mat3 jacobian_raw(const EdgeLayout& lay, const std::vector<double>& values);

} // namespace cpk
