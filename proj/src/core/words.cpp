#include "core/words.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace cpk {

double mat2_distance(const Mat2& m, const Mat2& n) {
    return std::max({std::abs(m.a - n.a), std::abs(m.b - n.b), std::abs(m.c - n.c),
                     std::abs(m.d - n.d)});
}

Mat2 assoc_matrix(double x) {
    if (!(x > 0.0)) {
        std::ostringstream os;
        os << "cross ratio must be positive, got " << x;
        fail("nonpositive-cross-ratio", os.str());
    }
    return {0.0, 1.0, -1.0, x};
}

namespace {

void check_entries(std::span<const double> entries) {
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (!(entries[i] > 0.0)) {
            std::ostringstream os;
            os << "entry " << i + 1 << " must be positive, got " << entries[i];
            fail("nonpositive-entry", os.str());
        }
}

} // namespace

Word word_product(std::span<const double> entries) {
    check_entries(entries);
    Word w;
    w.entries.assign(entries.begin(), entries.end());
    w.m = Mat2::identity();
    for (double x : entries) w.m = w.m * assoc_matrix(x);
    return w;
}

AdmReport classify_admissibility(std::span<const double> entries) {
    check_entries(entries);
    const int n = static_cast<int>(entries.size());

    AdmReport rep;
    rep.margin = std::numeric_limits<double>::infinity();
    bool boundary = false;

    auto violate = [&](int i, int k, char cond) {
        if (rep.cls == Adm::Inadmissible) return;   // keep the first violation
        rep.cls = Adm::Inadmissible;
        rep.vi = i;
        rep.vk = k;
        rep.condition = cond;
    };
    auto note = [&](double slack) { rep.margin = std::min(rep.margin, slack); };

    for (int i = 1; i <= n; ++i) {
        Mat2 w = Mat2::identity();
        double peak = 1.0;
        for (int k = i; k <= n; ++k) {
            w = w * assoc_matrix(entries[k - 1]);
            peak = std::max({peak, std::abs(w.a), std::abs(w.b), std::abs(w.c),
                             std::abs(w.d)});
            const double band = sign_band(peak);
            const bool full = (i == 1 && k == n);
            if (i != k) {
                note(-w.a);
                if (!(w.a < -band)) violate(i, k, 'a');
            }
            note(w.b);
            if (!(w.b > band)) violate(i, k, 'b');
            note(-w.c);
            if (!(w.c < -band)) violate(i, k, 'c');
            if (full) {
                note(w.d);
                if (std::abs(w.d) <= band) boundary = true;
                else if (w.d < 0.0) violate(i, k, 'd');
            } else {
                note(w.d);
                if (!(w.d > band)) violate(i, k, 'd');
            }
        }
    }
    if (n == 0) rep.margin = 0.0;
    if (rep.cls != Adm::Inadmissible && boundary) rep.cls = Adm::Boundary;
    return rep;
}

std::vector<double> tangency_points(std::span<const double> entries) {
    check_entries(entries);
    std::vector<double> p;
    p.reserve(entries.size());
    Mat2 w = Mat2::identity();
    double peak = 1.0;
    for (double x : entries) {
        w = w * assoc_matrix(x);
        peak = std::max({peak, std::abs(w.a), std::abs(w.b), std::abs(w.c), std::abs(w.d)});
        if (std::abs(w.d) <= sign_band(peak))
            p.push_back(std::numeric_limits<double>::infinity());
        else
            p.push_back(w.b / w.d);
    }
    return p;
}

double extension_threshold(const Word& w, Side side) {
    AdmReport rep = classify_admissibility(w.entries);
    if (rep.cls != Adm::Strict)
        fail("not-strictly-admissible", "extension threshold requires a strictly admissible word");
    const Mat2& m = w.m;
    switch (side) {
        case Side::Left: return m.b / m.d;
        case Side::Right: return -m.c / m.d;
        case Side::Both: {
            double b = m.b, c = m.c, d = m.d;
            return (b - c + std::sqrt((b + c) * (b + c) + 4.0)) / (2.0 * d);
        }
    }
    fail("invalid-argument", "unknown side");
}

} // namespace cpk
