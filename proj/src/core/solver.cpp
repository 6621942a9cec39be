#include "core/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace cpk {

namespace {

constexpr double kBand = kDetTol;

void check_values(const ParamPoint& p) {
    const int edges = p.pattern.edge_count();
    if (static_cast<int>(p.values.size()) != edges + 1)
        fail("invalid-argument", "value table size does not match the edge count");
    for (int l = 1; l <= edges; ++l)
        if (!(p.values[l] > 0.0)) {
            std::ostringstream os;
            os << "edge x" << l << " must carry a positive cross ratio";
            fail("nonpositive-entry", os.str());
        }
}

std::vector<double> values_at(const std::vector<int>& word,
                              const std::vector<double>& values) {
    std::vector<double> v(word.size());
    for (std::size_t t = 0; t < word.size(); ++t) v[t] = values[word[t]];
    return v;
}

} // namespace

std::vector<double> word_values(const ParamPoint& p) {
    check_values(p);
    if (p.layout) return values_at(p.layout->word, p.values);
    return values_at(vertex_word(p.pattern), p.values);
}

VerifyReport verify_point(const ParamPoint& p) {
    const std::vector<double> w = word_values(p);
    const int n = static_cast<int>(w.size());

    VerifyReport rep;

    Mat2 full = Mat2::identity();
    for (double x : w) full = full * assoc_matrix(x);
    double det = full.det();
    if (det > 0.0) {
        double s = std::sqrt(det);
        Mat2 scaled{full.a / s, full.b / s, full.c / s, full.d / s};
        rep.residual = std::max({std::abs(scaled.a + 1.0), std::abs(scaled.b),
                                 std::abs(scaled.c), std::abs(scaled.d + 1.0)});
    } else {
        rep.residual = std::numeric_limits<double>::infinity();
    }

    // Classification of every cyclic subword, bottom-up over lengths.
    // cls[s][l]: 0 strict, 1 boundary, 2 inadmissible, for start s (0-based)
    // and length l (1..n-1).
    //
    // At a point with W = -I, a cyclic subword of length n-1 equals minus the
    // inverse of the dropped letter, so its d entry is an exact zero that is
    // only computable down to the conditioning of the product; the zero test
    // therefore scales with the peak intermediate magnitude of the subword.
    std::vector<std::vector<char>> cls(n, std::vector<char>(n, 2));
    std::vector<std::vector<Mat2>> prod(n, std::vector<Mat2>(n));
    std::vector<std::vector<double>> peak(n, std::vector<double>(n, 1.0));
    rep.subwords.resize(n - 1);
    rep.flags.assign(n, std::vector<Adm>(n - 1, Adm::Inadmissible));
    for (int l = 1; l <= n - 1; ++l) {
        auto& summary = rep.subwords[l - 1];
        summary.length = l;
        for (int s = 0; s < n; ++s) {
            Mat2 m = l == 1 ? assoc_matrix(w[s])
                            : prod[s][l - 2] * assoc_matrix(w[(s + l - 1) % n]);
            prod[s][l - 1] = m;
            double mag = std::max({1.0, std::abs(m.a), std::abs(m.b), std::abs(m.c),
                                   std::abs(m.d)});
            peak[s][l - 1] = l == 1 ? mag : std::max(peak[s][l - 2], mag);
            const double band_d = sign_band(peak[s][l - 1]);
            bool signs_ok = m.b > kBand && m.c < -kBand && (l == 1 || m.a < -kBand);
            bool sub_strict =
                l == 1 || (cls[s][l - 2] == 0 && cls[(s + 1) % n][l - 2] == 0);
            char c;
            if (!signs_ok || !sub_strict) c = 2;
            else if (m.d > band_d) c = 0;
            else if (std::abs(m.d) <= band_d) c = 1;
            else c = 2;
            cls[s][l - 1] = c;
            rep.flags[s][l - 1] = c == 0 ? Adm::Strict : c == 1 ? Adm::Boundary : Adm::Inadmissible;
            if (c == 0) ++summary.strict;
            else if (c == 1) ++summary.boundary;
            else ++summary.inadmissible;
        }
    }

    bool strict_to_n2 = true, admissible_n1 = true, all_admissible = true;
    for (int l = 1; l <= n - 1; ++l) {
        const auto& s = rep.subwords[l - 1];
        if (s.inadmissible > 0) all_admissible = false;
        if (l <= n - 2 && (s.boundary > 0 || s.inadmissible > 0)) strict_to_n2 = false;
        if (l == n - 1 && s.inadmissible > 0) admissible_n1 = false;
    }
    if (rep.residual <= kGeomTol && strict_to_n2 && admissible_n1)
        rep.verdict = Verdict::InSpace;
    else if (rep.residual <= kGeomTol && all_admissible)
        rep.verdict = Verdict::Boundary;
    else
        rep.verdict = Verdict::Out;
    return rep;
}

double torus_dependent(double x, double y) {
    if (!(x > 0.0) || !(y > 0.0))
        fail("nonpositive-entry", "torus cross ratios must be positive");
    if (!(x * y > 1.0)) {
        std::ostringstream os;
        os << "xy - 1 must be positive, got xy = " << x * y;
        fail("outside-convex-image", os.str());
    }
    return (x + y) / (x * y - 1.0);
}

namespace {

double qform(const Mat2& t, double x) {
    // (2,2) entry of X T X, the quadratic whose larger root is the threshold.
    return t.d * x * x + (t.c - t.b) * x - t.a;
}

double both_threshold(const Mat2& t) {
    return (t.b - t.c + std::sqrt((t.b + t.c) * (t.b + t.c) + 4.0)) / (2.0 * t.d);
}

Word gap_word(const EdgeLayout& lay, const std::vector<double>& values, int lo, int hi,
              const char* which) {
    std::vector<double> entries;
    for (int pos = lo; pos <= hi; ++pos) entries.push_back(values[lay.word[pos - 1]]);
    Word w = word_product(entries);
    if (classify_admissibility(w.entries).cls != Adm::Strict) {
        std::ostringstream os;
        os << "gap word " << which << " is not strictly admissible at the given free values";
        fail("free-values-inadmissible", os.str());
    }
    return w;
}

} // namespace

double TripleSystem::h1(double x, double y) const {
    return (T.b - T.d * x) * (U.c + U.d * y) + qform(T, x) * qform(U, y);
}
double TripleSystem::h2(double y, double z) const {
    return (U.b - U.d * y) * (V.c + V.d * z) + qform(U, y) * qform(V, z);
}
double TripleSystem::h3(double z, double x) const {
    return (V.b - V.d * z) * (T.c + T.d * x) + qform(V, z) * qform(T, x);
}

TripleSystem make_triple_system(const EdgeLayout& lay, const std::vector<double>& values) {
    const int n = static_cast<int>(lay.word.size());
    TripleSystem sys;
    sys.T = gap_word(lay, values, 2, lay.j - 1, "T").m;
    sys.U = gap_word(lay, values, lay.j + 2, lay.i - 2, "U").m;
    sys.V = gap_word(lay, values, lay.i + 1, n - 1, "V").m;
    sys.thr.alpha = both_threshold(sys.T);
    sys.thr.beta = both_threshold(sys.U);
    sys.thr.gamma = both_threshold(sys.V);
    return sys;
}

Thresholds dependent_thresholds(const EdgeLayout& lay, const std::vector<double>& values) {
    return make_triple_system(lay, values).thr;
}

namespace {

// Unique root of f above `lo` (f(lo) < target, quadratic growth); geometric
// bracket growth then bisection.
template <typename F>
double root_above(F&& f, double target, double lo, const char* what) {
    if (f(lo) - target >= 0.0)
        fail("bracket-not-found", std::string(what) + ": function not below target at the threshold");
    double below = lo;
    double width = 1.0;
    double hi = lo + width;
    int grow = 0;
    while (f(hi) - target <= 0.0) {
        below = hi;
        width *= 2.0;
        hi = lo + width;
        if (++grow > 200) {
            std::ostringstream os;
            os << what << ": no sign change scanning (" << lo << ", " << hi << "]";
            fail("bracket-not-found", os.str());
        }
    }
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (below + hi);
        if (mid == below || mid == hi) break;
        if (f(mid) - target <= 0.0) below = mid;
        else hi = mid;
    }
    return 0.5 * (below + hi);
}

std::vector<double> assemble_entries(const EdgeLayout& lay, const std::vector<double>& values,
                                     double x, double y, double z) {
    const int n = static_cast<int>(lay.word.size());
    std::vector<double> e(n);
    for (int pos = 1; pos <= n; ++pos) {
        int lbl = lay.word[pos - 1];
        if (lbl == lay.x_label) e[pos - 1] = x;
        else if (lbl == lay.y_label) e[pos - 1] = y;
        else if (lbl == lay.z_label) e[pos - 1] = z;
        else e[pos - 1] = values[lbl];
    }
    return e;
}

struct WordEval {
    Mat2 m;              // full product
    double residual;     // max-norm of m + I after det normalization
    std::vector<Mat2> prefix;   // prefix[k] = product of first k letters
};

WordEval eval_word(const std::vector<double>& entries) {
    WordEval ev;
    ev.prefix.resize(entries.size() + 1);
    ev.prefix[0] = Mat2::identity();
    for (std::size_t k = 0; k < entries.size(); ++k)
        ev.prefix[k + 1] = ev.prefix[k] * assoc_matrix(entries[k]);
    ev.m = ev.prefix.back();
    double det = ev.m.det();
    if (det > 0.0) {
        double s = std::sqrt(det);
        ev.residual = std::max({std::abs(ev.m.a / s + 1.0), std::abs(ev.m.b / s),
                                std::abs(ev.m.c / s), std::abs(ev.m.d / s + 1.0)});
    } else {
        ev.residual = std::numeric_limits<double>::infinity();
    }
    return ev;
}

Mat3 jacobian_from_prefixes(const EdgeLayout& lay, const std::vector<Mat2>& prefix) {
    auto mcol = [](double b, double d) {
        // d/dt of the word through one occurrence: [[-bd, b^2],[-d^2, bd]].
        return std::array<double, 3>{-b * d, b * b, -d * d};
    };
    const Mat2& wj1 = prefix[lay.j - 1];
    const Mat2& wj = prefix[lay.j];
    const Mat2& wi2 = prefix[lay.i - 2];
    const Mat2& wi1 = prefix[lay.i - 1];

    auto cx = mcol(wj1.b, wj1.d);
    cx[2] += -1.0;                       // + [[0,0],[-1,0]]
    auto cy1 = mcol(wj.b, wj.d);
    auto cy2 = mcol(wi2.b, wi2.d);
    std::array<double, 3> cy{cy1[0] + cy2[0], cy1[1] + cy2[1], cy1[2] + cy2[2]};
    auto cz = mcol(wi1.b, wi1.d);
    cz[1] += 1.0;                        // + [[0,1],[0,0]]

    // Rows are (a, b, c), columns (x, y, z).
    return Mat3{{{cx[0], cy[0], cz[0]}, {cx[1], cy[1], cz[1]}, {cx[2], cy[2], cz[2]}}};
}

} // namespace

SolveResult solve_dependent_triple(const EdgeLayout& lay, std::vector<double> values) {
    TripleSystem sys = make_triple_system(lay, values);
    const double alpha = sys.thr.alpha, beta = sys.thr.beta, gamma = sys.thr.gamma;

    int iterations = 0;

    auto x_of_z = [&](double z) {
        return root_above([&](double x) { return sys.h3(z, x); }, sys.U.d, alpha, "h3");
    };
    auto y_of_x = [&](double x) {
        return root_above([&](double y) { return sys.h1(x, y); }, sys.V.d, beta, "h1");
    };
    auto outer = [&](double z) {
        double x = x_of_z(z);
        double y = y_of_x(x);
        return sys.h2(y, z) - sys.T.d;
    };

    // Bracket the outer equation in z; F < 0 near gamma, F > 0 for large z.
    double width = 1.0;
    int guard = 0;
    if (outer(gamma + width) > 0.0) {
        while (outer(gamma + width / 2.0) > 0.0) {
            width /= 2.0;
            if (++guard > 200) {
                std::ostringstream os;
                os << "outer bisection: no negative value scanning (" << gamma << ", "
                   << gamma + width << "]";
                fail("bracket-not-found", os.str());
            }
        }
        width /= 2.0;
    } else {
        while (outer(gamma + width * 2.0) <= 0.0) {
            width *= 2.0;
            if (++guard > 200) {
                std::ostringstream os;
                os << "outer bisection: no positive value scanning (" << gamma << ", "
                   << gamma + width << "]";
                fail("bracket-not-found", os.str());
            }
        }
    }
    double zlo = gamma + width, zhi = gamma + 2.0 * width;  // F(zlo) <= 0 < F(zhi)
    for (int it = 0; it < 200; ++it) {
        ++iterations;
        double mid = 0.5 * (zlo + zhi);
        if (mid == zlo || mid == zhi) break;
        if (outer(mid) <= 0.0) zlo = mid;
        else zhi = mid;
        if (std::abs(zhi - zlo) < 1e-13 * std::max(1.0, std::abs(zlo))) break;
    }

    double z = 0.5 * (zlo + zhi);
    double x = x_of_z(z);
    double y = y_of_x(x);

    // Newton polish on the det-normalized word entries (a+1, b, c) -> 0.
    // Polishing to the rounding floor keeps subword sign tests inside the
    // dead band at boundary-touching points.
    auto entries = assemble_entries(lay, values, x, y, z);
    WordEval ev = eval_word(entries);
    for (int it = 0; it < 50 && ev.residual > 1e-15; ++it) {
        ++iterations;
        Mat3 jac = jacobian_from_prefixes(lay, ev.prefix);
        double s = std::sqrt(ev.m.det());
        double g0 = ev.m.a / s + 1.0, g1 = ev.m.b / s, g2 = ev.m.c / s;
        double det = det3(jac);
        if (det == 0.0) break;
        auto solve_col = [&](int col) {
            Mat3 m = jac;
            m[0][col] = -g0;
            m[1][col] = -g1;
            m[2][col] = -g2;
            return det3(m) / det;
        };
        double dx = solve_col(0), dy = solve_col(1), dz = solve_col(2);
        double step = 1.0;
        while (x + step * dx <= alpha || y + step * dy <= beta || z + step * dz <= gamma)
            step *= 0.5;
        bool accepted = false;
        for (int bt = 0; bt < 8 && !accepted; ++bt, step *= 0.5) {
            double nx = x + step * dx, ny = y + step * dy, nz = z + step * dz;
            auto ne = assemble_entries(lay, values, nx, ny, nz);
            WordEval nev = eval_word(ne);
            if (nev.residual < ev.residual) {
                x = nx; y = ny; z = nz;
                ev = std::move(nev);
                accepted = true;
            }
        }
        if (!accepted) break;
    }

    SolveResult res;
    res.x = x; res.y = y; res.z = z;
    res.thr = sys.thr;
    res.iterations = iterations;
    res.residual = ev.residual;
    return res;
}

bool triple_identity_check(const Word& A, const Word& B, const Word& C) {
    for (const Word* w : {&A, &B, &C})
        if (classify_admissibility(w->entries).cls != Adm::Strict)
            fail("not-strictly-admissible", "triple identity check requires strictly admissible words");
    double e1 = std::abs((A.m * B.m).d + C.m.a);
    double e2 = std::abs((B.m * C.m).d + A.m.a);
    double e3 = std::abs((C.m * A.m).d + B.m.a);
    return e1 <= kGeomTol && e2 <= kGeomTol && e3 <= kGeomTol;
}

double det3(const Mat3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Mat3 jacobian_raw(const EdgeLayout& lay, const std::vector<double>& values) {
    std::vector<double> entries = values_at(lay.word, values);
    WordEval ev = eval_word(entries);
    return jacobian_from_prefixes(lay, ev.prefix);
}

Mat3 jacobian_dependent(const EdgeLayout& lay, const ParamPoint& p) {
    if (!verify_point(p).in_space())
        fail("point-not-in-space", "Jacobian closed forms require an in-space point");
    return jacobian_raw(lay, p.values);
}

} // namespace cpk
