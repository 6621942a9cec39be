#include "core/holonomy.hpp"

#include <cmath>
#include <sstream>

namespace cpk {

Moebius remark_matrix() {
    Moebius r;
    r.a = Complex(0, 0);
    r.b = Complex(0, 1);
    r.c = Complex(0, 1);
    r.d = Complex(1, 0);
    return r;   // det = -i*i = 1 already
}

Moebius move_matrix(const Move& m, const ParamPoint& p) {
    if (m.kind == Move::Remark)
        return m.clockwise ? remark_matrix().inverse() : remark_matrix();
    if (m.edge_label < 1 || m.edge_label > p.pattern.edge_count()) {
        std::ostringstream os;
        os << "edge label x" << m.edge_label << " does not exist in the pattern";
        fail("unknown-edge", os.str());
    }
    Mat2 a = assoc_matrix(p.values[m.edge_label]);
    Moebius r = to_moebius(a);
    return m.clockwise ? r : r.inverse();
}

Moebius move_word_matrix(std::span<const Move> moves, const ParamPoint& p) {
    Moebius w = Moebius::identity();
    for (const Move& m : moves) w = w * move_matrix(m, p);
    return w;
}

Moebius holonomy_of(std::span<const Move> w1, std::span<const Move> w2, const ParamPoint& p) {
    return move_word_matrix(w2, p) * move_word_matrix(w1, p).inverse();
}

Complex normalize_trace(Complex t) {
    if (std::abs(t.real()) > kDetTol) return t.real() > 0.0 ? t : -t;
    return t.imag() >= 0.0 ? t : -t;
}

std::pair<Complex, Complex> torus_traces(double x, double y, double z) {
    if (!(x > 0.0 && y > 0.0 && z > 0.0))
        fail("nonpositive-entry", "torus cross ratios must be positive");
    if (std::abs(x * y * z - (x + y + z)) > kGeomTol * std::max(1.0, x * y * z))
        fail("point-not-in-space", "torus traces require xyz = x+y+z");
    Complex t1(x * z - 1.0, x - z);
    Complex t2(y * x - 1.0, y - x);
    return {normalize_trace(t1), normalize_trace(t2)};
}

bool commuting_check(const Moebius& g, const Moebius& h) {
    // The commutator of lifts is independent of the sign choices, so the
    // trace-2 test is well-defined on PSL2.
    Moebius comm = g * h * g.inverse() * h.inverse();
    return std::abs(comm.trace() - Complex(2.0, 0.0)) <= kGeomTol;
}

std::vector<GeneratorWords> layout_generator_words(const ParamPoint& p) {
    if (!p.layout) fail("genus-mismatch", "layout generators require a dependent triple");
    const EdgeLayout& lay = *p.layout;
    const int n = static_cast<int>(lay.word.size());

    auto fan = [&](int count) {
        std::vector<Move> w;
        for (int pos = 1; pos <= count; ++pos)
            w.push_back(Move::rotate_cw(lay.word[pos - 1]));
        return w;
    };
    std::vector<GeneratorWords> gens(3);
    gens[0].w1 = {};
    gens[0].w2 = fan(lay.j);
    gens[0].w2.push_back(Move::remark_cw());
    gens[1].w1 = fan(lay.j);
    gens[1].w2 = fan(lay.i - 1);
    gens[1].w2.push_back(Move::remark_cw());
    gens[2].w1 = fan(lay.i - 1);
    gens[2].w2 = fan(n);
    gens[2].w2.push_back(Move::remark_cw());
    return gens;
}

std::vector<Moebius> layout_generators(const ParamPoint& p) {
    std::vector<Moebius> out;
    for (const auto& g : layout_generator_words(p))
        out.push_back(holonomy_of(g.w1, g.w2, p));
    return out;
}

RigidityReport rigidity_compare(const ParamPoint& p1, const ParamPoint& p2) {
    if (!(p1.pattern == p2.pattern))
        fail("pattern-mismatch", "rigidity comparison requires the same pattern");
    bool same_layout = p1.layout.has_value() == p2.layout.has_value() &&
                       (!p1.layout || (p1.layout->rotation == p2.layout->rotation &&
                                       p1.layout->x_label == p2.layout->x_label &&
                                       p1.layout->y_label == p2.layout->y_label &&
                                       p1.layout->z_label == p2.layout->z_label));
    if (!same_layout)
        fail("pattern-mismatch", "rigidity comparison requires the same dependent triple");
    for (const ParamPoint* p : {&p1, &p2})
        if (!verify_point(*p).in_space())
            fail("point-not-in-space", "rigidity comparison requires in-space points");

    RigidityReport rep;
    auto traces_of = [&](const ParamPoint& p) {
        std::vector<Complex> tr;
        if (p.pattern.genus == 1) {
            double x = p.values[1], y = p.values[2], z = p.values[3];
            auto [t1, t2] = torus_traces(x, y, z);
            tr = {t1, t2};
        } else {
            for (const Moebius& g : layout_generators(p))
                tr.push_back(normalize_trace(g.trace()));
        }
        return tr;
    };
    rep.traces1 = traces_of(p1);
    rep.traces2 = traces_of(p2);
    for (std::size_t t = 0; t < rep.traces1.size(); ++t)
        rep.max_difference = std::max(rep.max_difference,
                                      std::abs(rep.traces1[t] - rep.traces2[t]));
    rep.equal = rep.max_difference <= kGeomTol;
    return rep;
}

} // namespace cpk
