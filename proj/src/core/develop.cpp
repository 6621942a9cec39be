#include "core/develop.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <map>
#include <sstream>

namespace cpk {

namespace {

Circle unit_interstice_disk() {
    return Circle::from_center_radius(Complex(0.0, 0.5), 0.5);
}

// Lazily built universal cover of the one-vertex triangulation: vertex lifts
// carry one link slot per word position, triangles are materialized whole so
// that rejoining paths land on the same objects.
struct Developer {
    int n = 0;
    std::vector<int> mu;        // rotated pairing, 1-based
    std::vector<int> label;     // rotated word of edge labels, index 0 = position 1
    std::vector<double> value;  // per label

    struct VertexLift {
        Circle circle;
        std::string address;       // address of the state that created it
        std::vector<int> far;      // per occurrence 1..n, vertex id or -1
    };
    std::vector<VertexLift> vertices;

    Moebius remark = remark_matrix();
    Circle line0 = Circle::real_line().canonical();
    Circle line1 = Circle::horizontal_line(1.0).canonical();
    Circle disk = unit_interstice_disk().canonical();

    explicit Developer(const ParamPoint& p) {
        const std::vector<int> natural = vertex_word(p.pattern);
        n = p.pattern.sides;
        int rot = p.layout ? p.layout->rotation : 0;
        label.resize(n);
        mu.assign(n + 1, 0);
        for (int pos = 1; pos <= n; ++pos) {
            int orig = (pos - 1 + rot) % n + 1;
            label[pos - 1] = natural[orig - 1];
            mu[pos] = (p.pattern.mu[orig] - 1 - rot + n) % n + 1;
        }
        value.assign(p.pattern.edge_count() + 1, 0.0);
        for (int l = 1; l <= p.pattern.edge_count(); ++l) value[l] = p.values[l];
        vertices.push_back({line0, "", std::vector<int>(n + 1, -1)});
    }

    int sigma(int c) const { return mu[c] % n + 1; }
    int sigma_inv(int c) const {
        // sigma^3 = id on valid patterns.
        return sigma(sigma(c));
    }

    int ensure_vertex(int from, int occ, const Circle& circle, const std::string& addr) {
        int far = vertices[from].far[occ];
        if (far >= 0) return far;
        int id = static_cast<int>(vertices.size());
        vertices.push_back({circle, addr, std::vector<int>(n + 1, -1)});
        link(from, occ, id);
        return id;
    }

    void link(int u, int occ, int v) {
        vertices[u].far[occ] = v;
        vertices[v].far[mu[occ]] = u;
    }

    // Materializes the triangle of the flag (vertex, sector): its two other
    // vertex lifts and all three edge links.  G is the flag transform.
    void materialize(int vertex, int sector, const Moebius& g, const std::string& addr) {
        int d = sector + 1;                       // corner at the flag
        int e2 = sigma(d), e3 = sigma(e2);        // corners at the other vertices
        int v2 = ensure_vertex(vertex, d, transform_circle(g, disk), addr);
        int v3 = ensure_vertex(vertex, mu[e3], transform_circle(g, line1), addr);
        if (vertices[v2].far[e2] < 0) link(v2, e2, v3);
        else if (vertices[v2].far[e2] != v3)
            fail("corner-cycle", "internal: inconsistent universal-cover links");
    }

    std::array<Circle, 3> flag_circles(int vertex, int sector) const {
        int d = sector + 1;
        int v2 = vertices[vertex].far[d];
        int v3 = vertices[vertex].far[mu[sigma(sigma(d))]];
        return {vertices[vertex].circle, vertices[v3].circle, vertices[v2].circle};
    }

    // One move from (vertex, sector, g).  Returns the target flag; for
    // rotations also reports the far vertex of the crossed edge.
    struct Step {
        int vertex = 0, sector = 0;
        Moebius g;
        int crossed_far = -1;
    };

    Step apply_move(int vertex, int sector, const Moebius& g, const Move& mv,
                    bool check_label) {
        Step st;
        if (mv.kind == Move::Rotate) {
            int occ = mv.clockwise ? sector + 1 : sector;
            if (occ == 0) occ = n;
            int lbl = label[occ - 1];
            if (check_label && mv.edge_label != lbl) {
                std::ostringstream os;
                os << "rotation declares edge x" << mv.edge_label
                   << " but the flag crosses edge x" << lbl;
                fail("unknown-edge", os.str());
            }
            Moebius a = to_moebius(assoc_matrix(value[lbl]));
            st.g = mv.clockwise ? g * a : g * a.inverse();
            st.vertex = vertex;
            st.sector = (mv.clockwise ? sector + 1 : sector - 1 + n) % n;
            st.crossed_far = vertices[vertex].far[occ];
        } else {
            int d = sector + 1;
            int target_corner = mv.clockwise ? sigma_inv(d) : sigma(d);
            int occ = mv.clockwise ? d - 1 : d;   // edge towards the new vertex
            if (occ == 0) occ = n;
            st.g = mv.clockwise ? g * remark.inverse() : g * remark;
            st.vertex = vertices[vertex].far[occ];
            st.sector = target_corner - 1;
            if (st.vertex < 0)
                fail("corner-cycle", "internal: remark before materialization");
        }
        return st;
    }
};

char move_char(const Move& mv) {
    if (mv.kind == Move::Rotate) return mv.clockwise ? 'c' : 'a';
    return mv.clockwise ? 'w' : 'm';
}

Move move_at(const Developer& dev, int sector, char ch) {
    switch (ch) {
        case 'c': return Move::rotate_cw(dev.label[sector % dev.n]);
        case 'a': return Move::rotate_acw(dev.label[(sector - 1 + dev.n) % dev.n]);
        case 'm': return Move::remark_acw();
        case 'w': return Move::remark_cw();
    }
    fail("invalid-argument", "unknown move letter");
}

PackingScene develop_impl(const ParamPoint& p, int depth) {
    if (depth < 0) fail("invalid-argument", "depth must be non-negative");
    Developer dev(p);

    PackingScene scene;
    scene.depth = depth;

    struct State {
        int vertex, sector, depth;
        Moebius g;
        std::string address;
    };
    std::map<std::pair<int, int>, int> seen;
    std::deque<State> queue;
    queue.push_back({0, 0, 0, Moebius::identity(), ""});
    seen[{0, 0}] = 0;

    while (!queue.empty()) {
        State s = queue.front();
        queue.pop_front();
        dev.materialize(s.vertex, s.sector, s.g, s.address);

        Interstice record;
        record.address = s.address;
        record.depth = s.depth;
        record.vertex = s.vertex;
        record.sector = s.sector;
        record.transform = s.g;
        record.circles = dev.flag_circles(s.vertex, s.sector);
        scene.interstices.push_back(record);

        // The three edges of the reached triangle.
        for (auto [u, v] : {std::pair{0, 1}, {0, 2}, {1, 2}})
            scene.crossing_discriminants.push_back(
                std::abs(tangency_discriminant(record.circles[u], record.circles[v])));

        if (s.depth == depth) continue;
        for (char ch : {'c', 'a', 'm', 'w'}) {
            Move mv = move_at(dev, s.sector, ch);
            Developer::Step st = dev.apply_move(s.vertex, s.sector, s.g, mv, false);
            if (mv.kind == Move::Rotate && st.crossed_far >= 0) {
                Circle marked = transform_circle(st.g, dev.line0);
                scene.crossing_discriminants.push_back(std::abs(
                    tangency_discriminant(marked, dev.vertices[st.crossed_far].circle)));
            }
            auto key = std::make_pair(st.vertex, st.sector);
            auto it = seen.find(key);
            if (it != seen.end()) {
                Circle marked = transform_circle(st.g, dev.line0);
                scene.revisit_mismatches.push_back(
                    circle_distance(marked, dev.vertices[st.vertex].circle));
                continue;
            }
            seen[key] = 1;
            queue.push_back({st.vertex, st.sector, s.depth + 1, st.g, s.address + ch});
        }
    }

    // Distinct vertex lifts may develop onto the same circle (the developing
    // map need not be injective); the scene keeps one canonical representative
    // per circle, in first-appearance order.
    for (const auto& v : dev.vertices) {
        bool fresh = true;
        for (const Circle& seen : scene.circles)
            if (circle_distance(seen, v.circle) <= kGeomTol) {
                fresh = false;
                break;
            }
        if (!fresh) continue;
        scene.circles.push_back(v.circle);
        scene.circle_addresses.push_back(v.address);
    }
    return scene;
}

} // namespace

PackingScene develop(const ParamPoint& p, int depth) {
    if (!verify_point(p).in_space())
        fail("point-not-in-space", "development requires an in-space parameter point");
    return develop_impl(p, depth);
}

PackingScene develop_unchecked(const ParamPoint& p, int depth) {
    return develop_impl(p, depth);
}

AuditReport tangency_audit(const PackingScene& scene) {
    AuditReport rep;
    rep.crossings = static_cast<int>(scene.crossing_discriminants.size());
    for (double d : scene.crossing_discriminants)
        rep.max_discriminant = std::max(rep.max_discriminant, d);
    for (double d : scene.revisit_mismatches)
        rep.max_revisit_mismatch = std::max(rep.max_revisit_mismatch, d);
    return rep;
}

std::vector<Move> moves_from_address(const ParamPoint& p, const std::string& address) {
    Developer dev(p);
    int vertex = 0, sector = 0;
    Moebius g = Moebius::identity();
    std::vector<Move> moves;
    for (char ch : address) {
        dev.materialize(vertex, sector, g, "");
        Move mv = move_at(dev, sector, ch);
        moves.push_back(mv);
        Developer::Step st = dev.apply_move(vertex, sector, g, mv, true);
        vertex = st.vertex;
        sector = st.sector;
        g = st.g;
    }
    return moves;
}

std::vector<Move> invert_moves(std::span<const Move> moves) {
    std::vector<Move> out;
    for (auto it = moves.rbegin(); it != moves.rend(); ++it) {
        Move m = *it;
        m.clockwise = !m.clockwise;
        out.push_back(m);
    }
    return out;
}

WalkResult walk_moves(const ParamPoint& p, std::span<const Move> moves) {
    Developer dev(p);
    int vertex = 0, sector = 0;
    Moebius g = Moebius::identity();
    std::string addr;
    for (const Move& mv : moves) {
        dev.materialize(vertex, sector, g, addr);
        Developer::Step st = dev.apply_move(vertex, sector, g, mv, true);
        vertex = st.vertex;
        sector = st.sector;
        g = st.g;
        addr.push_back(move_char(mv));
    }
    dev.materialize(vertex, sector, g, addr);
    WalkResult res;
    res.transform = g;
    res.corner = sector + 1;
    res.circles = dev.flag_circles(vertex, sector);
    return res;
}

std::string render_svg(const PackingScene& scene, const Viewport& vp,
                       const RenderOptions& opt) {
    if (!(vp.half_width > 0.0)) fail("invalid-argument", "viewport half-width must be positive");
    const double canvas = 1000.0;
    const double scale = canvas / (2.0 * vp.half_width);
    const double x0 = vp.center.real() - vp.half_width;
    const double y1 = vp.center.imag() + vp.half_width;

    auto fmt = [](double v) {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.12g", v == 0.0 ? 0.0 : v);
        return std::string(buf);
    };
    auto sx = [&](double re) { return (re - x0) * scale; };
    auto sy = [&](double im) { return (y1 - im) * scale; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"1000\" "
           "viewBox=\"0 0 1000 1000\">\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"1000\" height=\"1000\" fill=\"#ffffff\" "
           "stroke=\"#444444\" stroke-width=\"1\"/>\n";
    for (const Circle& c : scene.circles) {
        if (c.is_line()) {
            // Clip the line to the world box.
            Complex pt = c.line_point(), dir = c.line_direction();
            double tmin = -1e18, tmax = 1e18;
            bool ok = true;
            auto clip = [&](double p, double q) {
                // p * t <= q
                if (std::abs(p) < 1e-300) {
                    if (q < 0.0) ok = false;
                    return;
                }
                double t = q / p;
                if (p > 0.0) tmax = std::min(tmax, t);
                else tmin = std::max(tmin, t);
            };
            clip(-dir.real(), pt.real() - (vp.center.real() - vp.half_width));
            clip(dir.real(), (vp.center.real() + vp.half_width) - pt.real());
            clip(-dir.imag(), pt.imag() - (vp.center.imag() - vp.half_width));
            clip(dir.imag(), (vp.center.imag() + vp.half_width) - pt.imag());
            if (!ok || tmin > tmax) continue;
            Complex a = pt + tmin * dir, b = pt + tmax * dir;
            svg << "<line x1=\"" << fmt(sx(a.real())) << "\" y1=\"" << fmt(sy(a.imag()))
                << "\" x2=\"" << fmt(sx(b.real())) << "\" y2=\"" << fmt(sy(b.imag()))
                << "\" stroke=\"#1f6feb\" stroke-width=\"" << fmt(opt.stroke_width)
                << "\" fill=\"none\"/>\n";
        } else {
            double r = c.radius() * scale;
            if (r < opt.min_radius) continue;
            Complex ctr = c.center();
            svg << "<circle cx=\"" << fmt(sx(ctr.real())) << "\" cy=\"" << fmt(sy(ctr.imag()))
                << "\" r=\"" << fmt(r) << "\" stroke=\"#1f6feb\" stroke-width=\""
                << fmt(opt.stroke_width) << "\" fill=\"none\"/>\n";
        }
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace cpk
