#include "core/moebius.hpp"

#include <algorithm>
#include <sstream>

namespace cpk {

double entry_distance(const Moebius& m, const Moebius& n) {
    return std::max({std::abs(m.a - n.a), std::abs(m.b - n.b), std::abs(m.c - n.c),
                     std::abs(m.d - n.d)});
}

double projective_distance(const Moebius& m, const Moebius& n) {
    return std::min(entry_distance(m, n), entry_distance(m, n.negated()));
}

ExtComplex apply(const Moebius& m, const ExtComplex& z) {
    if (z.infinite) {
        if (std::abs(m.c) == 0.0) return ExtComplex::inf();
        return ExtComplex(m.a / m.c);
    }
    Complex den = m.c * z.value + m.d;
    if (std::abs(den) == 0.0) return ExtComplex::inf();
    return ExtComplex((m.a * z.value + m.b) / den);
}

namespace {

// (p - q) with the convention that a factor containing inf cancels against
// another inf factor; callers arrange the cancellation explicitly.
Complex fin(const ExtComplex& z) { return z.value; }

} // namespace

Complex cross_ratio(const ExtComplex& z1, const ExtComplex& z2, const ExtComplex& z3,
                    const ExtComplex& z4) {
    const ExtComplex pts[4] = {z1, z2, z3, z4};
    for (int i = 0; i < 4; ++i)
        for (int k = i + 1; k < 4; ++k)
            if (pts[i] == pts[k]) {
                std::ostringstream os;
                os << "cross ratio of coincident points (arguments " << i + 1 << " and "
                   << k + 1 << ")";
                fail("degenerate-points", os.str());
            }

    // ((z1-z3)(z2-z4)) / ((z1-z4)(z2-z3)) with the standard limits at inf.
    if (z1.infinite) return (fin(z2) - fin(z4)) / (fin(z2) - fin(z3));
    if (z2.infinite) return (fin(z1) - fin(z3)) / (fin(z1) - fin(z4));
    if (z3.infinite) return (fin(z2) - fin(z4)) / (fin(z1) - fin(z4));
    if (z4.infinite) return (fin(z1) - fin(z3)) / (fin(z2) - fin(z3));
    return ((fin(z1) - fin(z3)) * (fin(z2) - fin(z4))) /
           ((fin(z1) - fin(z4)) * (fin(z2) - fin(z3)));
}

Circle::Circle(double a, Complex b, double d) : h11(a), h12(b), h22(d) {
    if (det() >= 0.0) fail("degenerate-circle", "Hermitian matrix is not a circle (det >= 0)");
}

Circle Circle::canonical() const {
    double norm = std::sqrt(h11 * h11 + 2.0 * std::norm(h12) + h22 * h22);
    if (norm == 0.0) fail("degenerate-circle", "zero Hermitian matrix");
    Circle c;
    c.h11 = h11 / norm;
    c.h12 = h12 / norm;
    c.h22 = h22 / norm;
    double sign = 1.0;
    if (std::abs(c.h11) > kGeomTol) {
        sign = c.h11 > 0.0 ? 1.0 : -1.0;
    } else if (std::abs(c.h12.real()) > kGeomTol) {
        sign = c.h12.real() > 0.0 ? 1.0 : -1.0;
    } else {
        sign = c.h12.imag() >= 0.0 ? 1.0 : -1.0;
    }
    c.h11 *= sign;
    c.h12 *= sign;
    c.h22 *= sign;
    return c;
}

Circle Circle::from_center_radius(Complex center, double radius) {
    if (!(radius > 0.0)) fail("degenerate-circle", "radius must be positive");
    Circle c;
    c.h11 = 1.0;
    c.h12 = -center;
    c.h22 = std::norm(center) - radius * radius;
    return c.canonical();
}

Circle Circle::from_line(Complex point, Complex direction) {
    double len = std::abs(direction);
    if (len == 0.0) fail("degenerate-circle", "line direction must be nonzero");
    // Normal n = i * direction; equation n conj(z) + conj(n) z + h22 = 0.
    Complex n = Complex(0.0, 1.0) * (direction / len);
    Circle c;
    c.h11 = 0.0;
    c.h12 = n;
    c.h22 = -2.0 * (std::conj(n) * point).real();
    return c.canonical();
}

Circle Circle::real_line() { return from_line(Complex(0, 0), Complex(1, 0)); }

Circle Circle::horizontal_line(double height) {
    return from_line(Complex(0, height), Complex(1, 0));
}

Complex Circle::center() const {
    if (is_line()) fail("degenerate-circle", "line has no center");
    return -h12 / h11;
}

double Circle::radius() const {
    if (is_line()) fail("degenerate-circle", "line has no radius");
    return std::sqrt(-det()) / std::abs(h11);
}

Complex Circle::line_point() const {
    if (!is_line()) fail("degenerate-circle", "not a line");
    return -0.5 * h22 * h12 / std::norm(h12);
}

Complex Circle::line_direction() const {
    if (!is_line()) fail("degenerate-circle", "not a line");
    Complex n = std::conj(h12);
    return Complex(0.0, 1.0) * (n / std::abs(n));
}

Circle transform_circle(const Moebius& m, const Circle& c) {
    Moebius inv = m.inverse();
    // H' = inv^* H inv, with H = [[h11, h12],[conj(h12), h22]].
    Complex col0a = c.h11 * inv.a + c.h12 * inv.c;
    Complex col0c = std::conj(c.h12) * inv.a + c.h22 * inv.c;
    Complex col1a = c.h11 * inv.b + c.h12 * inv.d;
    Complex col1c = std::conj(c.h12) * inv.b + c.h22 * inv.d;
    Circle r;
    r.h11 = (std::conj(inv.a) * col0a + std::conj(inv.c) * col0c).real();
    r.h12 = std::conj(inv.a) * col1a + std::conj(inv.c) * col1c;
    r.h22 = (std::conj(inv.b) * col1a + std::conj(inv.d) * col1c).real();
    return r.canonical();
}

double circle_distance(const Circle& a, const Circle& b) {
    Circle ca = a.canonical(), cb = b.canonical();
    return std::max({std::abs(ca.h11 - cb.h11), std::abs(ca.h12 - cb.h12),
                     std::abs(ca.h22 - cb.h22)});
}

double tangency_discriminant(const Circle& a, const Circle& b) {
    Circle ca = a.canonical(), cb = b.canonical();
    // Polar form B = det(A+B) - det(A) - det(B); tangency iff B^2 = 4 det(A) det(B).
    double polar = ca.h11 * cb.h22 + cb.h11 * ca.h22 -
                   2.0 * (ca.h12 * std::conj(cb.h12)).real();
    return polar * polar - 4.0 * ca.det() * cb.det();
}

ExtComplex tangency_point(const Circle& a, const Circle& b, double tol) {
    Circle ca = a.canonical(), cb = b.canonical();
    double disc = tangency_discriminant(ca, cb);
    if (std::abs(disc) > tol) {
        std::ostringstream os;
        os << "circles are not tangent (discriminant " << disc << ")";
        fail("not-tangent", os.str());
    }
    double polar = ca.h11 * cb.h22 + cb.h11 * ca.h22 -
                   2.0 * (ca.h12 * std::conj(cb.h12)).real();
    // Double root of det(lambda A + B): the pencil's point circle.
    double lambda = -polar / (2.0 * ca.det());
    double k11 = lambda * ca.h11 + cb.h11;
    Complex k12 = lambda * ca.h12 + cb.h12;
    double scale = std::max({std::abs(k11), std::abs(k12),
                             std::abs(lambda * ca.h22 + cb.h22)});
    if (scale == 0.0 || std::abs(k11) <= 1e-9 * scale) return ExtComplex::inf();
    return ExtComplex(-k12 / k11);
}

} // namespace cpk
