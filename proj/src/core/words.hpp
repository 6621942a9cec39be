#pragma once

#include <span>
#include <vector>

#include "core/error.hpp"
#include "core/moebius.hpp"

namespace cpk {

// Real 2x2 matrix; products of associated matrices stay in SL2(R) up to
// rounding, the sign of the lift is meaningful throughout.
struct Mat2 {
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

    double det() const { return a * d - b * c; }
    double trace() const { return a + d; }

    Mat2 inverse() const { return {d, -b, -c, a}; }
    Mat2 negated() const { return {-a, -b, -c, -d}; }

    static Mat2 identity() { return {}; }
};

inline Mat2 operator*(const Mat2& m, const Mat2& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
            m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

inline Moebius to_moebius(const Mat2& m) {
    Moebius r;
    r.a = m.a; r.b = m.b; r.c = m.c; r.d = m.d;
    return r;
}

double mat2_distance(const Mat2& m, const Mat2& n);

// The unit-determinant matrix [[0,1],[-1,x]] attached to a positive cross ratio.
Mat2 assoc_matrix(double x);

// A cross-ratio word: its entries and the cached left-to-right product.
struct Word {
    std::vector<double> entries;
    Mat2 m;
};

Word word_product(std::span<const double> entries);

enum class Adm { Strict, Boundary, Inadmissible };

// Dead band for sign tests on word entries: 1e-12 floor, widened with the
// peak intermediate magnitude of the product being tested, since an entry of
// a unit-determinant product is only a zero up to that conditioning.
inline double sign_band(double peak) { return std::max(kDetTol, 1e-10 * peak); }

struct AdmReport {
    Adm cls = Adm::Strict;
    // First violating subword (1-based inclusive indices) and the entry whose
    // sign condition failed; zeros when the word is admissible.
    int vi = 0, vk = 0;
    char condition = 0;   // 'a', 'b', 'c' or 'd'
    // Smallest slack over all checked sign conditions; negative on violation.
    double margin = 0.0;
};

// Sign test over every subword W^i_k = A_i ... A_k: a <= 0 (equality only for
// i = k), b > 0, c < 0, d > 0, where on the full word d may sit inside the
// +-1e-12 dead band (boundary).  Entries must be positive.
AdmReport classify_admissibility(std::span<const double> entries);

// Tangency points p_2 .. p_{k+1} of the fan in standard position, where
// p_{j+1} = b_j / d_j of the length-j prefix; +infinity when |d_j| <= 1e-12.
std::vector<double> tangency_points(std::span<const double> entries);

enum class Side { Left, Right, Both };

// The sharp bound of the cross ratio that may be appended to a strictly
// admissible word: above it the extended word is strictly admissible, at it
// boundary.  Left -> b/d, Right -> -c/d, Both -> (b-c+sqrt((b+c)^2+4))/(2d).
double extension_threshold(const Word& w, Side side);

} // namespace cpk
