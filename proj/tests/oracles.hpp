#pragma once

// Test-side oracles, independent of the solver's nested bisection path.

#include <array>
#include <cmath>
#include <deque>
#include <vector>

#include "core/solver.hpp"

namespace cpk::oracles {

struct GridScan {
    bool ok = false;
    int coarse_cells = 0;       // flagged cells of the coarse scan
    int coarse_clusters = 0;    // connected clusters among them (must be 1)
    std::array<double, 3> root{0.0, 0.0, 0.0};
};

// Coarse sign scan of (h1 - v4, h2 - t4, h3 - u4) over a box above the
// thresholds: a cell is flagged when every equation changes sign over the
// corners of its face.  The unique root shows up as a single cluster of
// flagged cells, which recursive subdivision then shrinks onto the root;
// boxes away from the root lose one of the sign changes and die out.
inline GridScan grid_scan(const TripleSystem& sys, double width = 10.0, double step = 0.05) {
    const int m = static_cast<int>(std::lround(width / step));
    const double a = sys.thr.alpha, b = sys.thr.beta, g = sys.thr.gamma;

    auto f1 = [&](double x, double y) { return sys.h1(x, y) - sys.V.d; };
    auto f2 = [&](double y, double z) { return sys.h2(y, z) - sys.T.d; };
    auto f3 = [&](double z, double x) { return sys.h3(z, x) - sys.U.d; };

    auto mixed = [](auto&& f, double u0, double v0, double h) {
        char c = f(u0, v0) > 0.0 ? 1 : 0;
        for (auto [du, dv] : {std::pair{h, 0.0}, {0.0, h}, {h, h}})
            if ((f(u0 + du, v0 + dv) > 0.0 ? 1 : 0) != c) return true;
        return false;
    };

    auto sign_grid = [&](auto&& f, double lo1, double lo2) {
        std::vector<std::vector<char>> s(m + 1, std::vector<char>(m + 1));
        for (int i = 0; i <= m; ++i)
            for (int j = 0; j <= m; ++j)
                s[i][j] = f(lo1 + i * step, lo2 + j * step) > 0.0 ? 1 : 0;
        return s;
    };
    auto grid_mixed = [&](const std::vector<std::vector<char>>& s, int i, int j) {
        char c = s[i][j];
        return s[i + 1][j] != c || s[i][j + 1] != c || s[i + 1][j + 1] != c;
    };

    auto s1 = sign_grid(f1, a, b);
    auto s2 = sign_grid(f2, b, g);
    auto s3 = sign_grid(f3, g, a);

    std::vector<std::vector<char>> m1(m, std::vector<char>(m)), m2 = m1, m3 = m1;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            m1[i][j] = grid_mixed(s1, i, j);
            m2[i][j] = grid_mixed(s2, i, j);
            m3[i][j] = grid_mixed(s3, i, j);
        }

    GridScan out;
    std::vector<std::array<int, 3>> cells;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (!m1[i][j]) continue;
            for (int k = 0; k < m; ++k)
                if (m2[j][k] && m3[k][i]) cells.push_back({i, j, k});
        }
    out.coarse_cells = static_cast<int>(cells.size());
    if (cells.empty()) return out;

    // Cluster the flagged cells (adjacency including diagonals).
    std::vector<int> comp(cells.size(), -1);
    int clusters = 0;
    for (std::size_t s = 0; s < cells.size(); ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = clusters;
        std::deque<std::size_t> queue{s};
        while (!queue.empty()) {
            std::size_t cur = queue.front();
            queue.pop_front();
            for (std::size_t t = 0; t < cells.size(); ++t) {
                if (comp[t] >= 0) continue;
                bool adj = std::abs(cells[cur][0] - cells[t][0]) <= 1 &&
                           std::abs(cells[cur][1] - cells[t][1]) <= 1 &&
                           std::abs(cells[cur][2] - cells[t][2]) <= 1;
                if (adj) {
                    comp[t] = clusters;
                    queue.push_back(t);
                }
            }
        }
        ++clusters;
    }
    out.coarse_clusters = clusters;
    if (clusters != 1) return out;

    struct Box {
        double x, y, z;
    };
    std::vector<Box> boxes;
    for (const auto& c : cells)
        boxes.push_back({a + c[0] * step, b + c[1] * step, g + c[2] * step});
    double h = step;
    for (int level = 0; level < 45 && h > 1e-9; ++level) {
        double hh = h / 2.0;
        std::vector<Box> next;
        for (const Box& box : boxes)
            for (int dx = 0; dx < 2; ++dx)
                for (int dy = 0; dy < 2; ++dy)
                    for (int dz = 0; dz < 2; ++dz) {
                        Box sub{box.x + dx * hh, box.y + dy * hh, box.z + dz * hh};
                        if (mixed(f1, sub.x, sub.y, hh) && mixed(f2, sub.y, sub.z, hh) &&
                            mixed(f3, sub.z, sub.x, hh))
                            next.push_back(sub);
                    }
        if (next.empty() || next.size() > 4096) return out;
        boxes = std::move(next);
        h = hh;
    }

    // All survivors must sit in one tiny cluster around the root.
    double xlo = boxes[0].x, xhi = boxes[0].x, ylo = boxes[0].y, yhi = boxes[0].y,
           zlo = boxes[0].z, zhi = boxes[0].z;
    for (const Box& box : boxes) {
        xlo = std::min(xlo, box.x); xhi = std::max(xhi, box.x);
        ylo = std::min(ylo, box.y); yhi = std::max(yhi, box.y);
        zlo = std::min(zlo, box.z); zhi = std::max(zhi, box.z);
    }
    // Survivors spread a few box widths along the intersection curve; any
    // second root would sit at macroscopic distance instead.
    if (xhi - xlo > 64.0 * h || yhi - ylo > 64.0 * h || zhi - zlo > 64.0 * h) return out;
    out.root = {0.5 * (xlo + xhi + h), 0.5 * (ylo + yhi + h), 0.5 * (zlo + zhi + h)};
    out.ok = true;
    return out;
}

// Central finite differences of the word entries (a, b, c) in (x, y, z).
inline Mat3 fd_jacobian(const EdgeLayout& lay, const std::vector<double>& values,
                        double step = 1e-6) {
    auto abc = [&](double x, double y, double z) {
        Mat2 w = Mat2::identity();
        for (int lbl : lay.word) {
            double v;
            if (lbl == lay.x_label) v = x;
            else if (lbl == lay.y_label) v = y;
            else if (lbl == lay.z_label) v = z;
            else v = values[lbl];
            w = w * assoc_matrix(v);
        }
        return std::array<double, 3>{w.a, w.b, w.c};
    };
    double x = values[lay.x_label], y = values[lay.y_label], z = values[lay.z_label];
    Mat3 jac{};
    for (int col = 0; col < 3; ++col) {
        double dx = col == 0 ? step : 0.0, dy = col == 1 ? step : 0.0,
               dz = col == 2 ? step : 0.0;
        auto hi = abc(x + dx, y + dy, z + dz);
        auto lo = abc(x - dx, y - dy, z - dz);
        for (int row = 0; row < 3; ++row) jac[row][col] = (hi[row] - lo[row]) / (2.0 * step);
    }
    return jac;
}

inline double jacobian_rel_error(const Mat3& a, const Mat3& b) {
    double worst = 0.0;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            double denom = std::max(1.0, std::abs(b[r][c]));
            worst = std::max(worst, std::abs(a[r][c] - b[r][c]) / denom);
        }
    return worst;
}

} // namespace cpk::oracles
