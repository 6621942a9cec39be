#pragma once

#include <array>
#include <complex>
#include <cmath>

#include "core/error.hpp"

namespace cpk {

using Complex = std::complex<double>;

inline constexpr double kDetTol = 1e-12;
inline constexpr double kGeomTol = 1e-9;

// Point on the Riemann sphere: a finite complex value or the point at infinity.
struct ExtComplex {
    Complex value{0.0, 0.0};
    bool infinite = false;

    ExtComplex() = default;
    ExtComplex(double re, double im = 0.0) : value(re, im) {}
    ExtComplex(Complex v) : value(v) {}

    static ExtComplex inf() {
        ExtComplex z;
        z.infinite = true;
        return z;
    }

    bool operator==(const ExtComplex& o) const {
        if (infinite || o.infinite) return infinite == o.infinite;
        return value == o.value;
    }
    bool operator!=(const ExtComplex& o) const { return !(*this == o); }
};

// Moebius transformation z -> (az+b)/(cz+d), normalized to determinant 1.
struct Moebius {
    Complex a{1.0}, b{0.0}, c{0.0}, d{1.0};

    Moebius() = default;
    Moebius(Complex a_, Complex b_, Complex c_, Complex d_) : a(a_), b(b_), c(c_), d(d_) {
        normalize();
    }

    Complex det() const { return a * d - b * c; }
    Complex trace() const { return a + d; }

    // Divides by a square root of the determinant; sign of the lift is the
    // principal branch, equality tests quotient it out where needed.
    void normalize() {
        Complex dt = det();
        if (std::abs(dt) == 0.0) fail("singular-map", "Moebius map has zero determinant");
        Complex s = std::sqrt(dt);
        a /= s; b /= s; c /= s; d /= s;
    }

    Moebius inverse() const {
        Moebius m;
        m.a = d; m.b = -b; m.c = -c; m.d = a;
        return m;
    }

    Moebius negated() const {
        Moebius m;
        m.a = -a; m.b = -b; m.c = -c; m.d = -d;
        return m;
    }

    static Moebius identity() { return Moebius(); }
};

inline Moebius operator*(const Moebius& m, const Moebius& n) {
    Moebius r;
    r.a = m.a * n.a + m.b * n.c;
    r.b = m.a * n.b + m.b * n.d;
    r.c = m.c * n.a + m.d * n.c;
    r.d = m.c * n.b + m.d * n.d;
    return r;
}

// Max-norm distance between the entry quadruples (no sign quotient).
double entry_distance(const Moebius& m, const Moebius& n);

// PSL2 comparison: min over the sign ambiguity of the entry distance.
double projective_distance(const Moebius& m, const Moebius& n);

ExtComplex apply(const Moebius& m, const ExtComplex& z);

// Ahlfors convention: the image of z1 under the map sending (z2,z3,z4) to
// (1,0,inf).  Requires pairwise distinct points.
Complex cross_ratio(const ExtComplex& z1, const ExtComplex& z2, const ExtComplex& z3,
                    const ExtComplex& z4);

// Circle or line {z : h11 |z|^2 + h12 conj(z) + conj(h12) z + h22 = 0} with
// h11, h22 real and det < 0.  Lines are the h11 = 0 case.
struct Circle {
    double h11 = 0.0;
    Complex h12{0.0, 0.0};
    double h22 = 0.0;

    Circle() = default;
    Circle(double a, Complex b, double d);   // validates det < 0

    double det() const { return h11 * h22 - std::norm(h12); }
    bool is_line(double tol = kGeomTol) const { return std::abs(h11) <= tol; }

    // Unit Frobenius norm; sign fixed so h11 > 0, or for lines so that the
    // first of Re(h12), Im(h12) exceeding the tolerance is positive.
    Circle canonical() const;

    static Circle from_center_radius(Complex center, double radius);
    static Circle from_line(Complex point, Complex direction);
    static Circle real_line();          // Im z = 0
    static Circle horizontal_line(double height);  // Im z = h

    Complex center() const;             // circles only
    double radius() const;              // circles only
    Complex line_point() const;         // lines only
    Complex line_direction() const;     // lines only, unit length
};

// Image circle under m, computed as (m^-1)^* H (m^-1), returned canonical.
Circle transform_circle(const Moebius& m, const Circle& c);

// Max-norm distance of canonical representatives.
double circle_distance(const Circle& a, const Circle& b);

// Vanishes exactly when the two circles are tangent; computed on canonical
// representatives so the tolerance has a fixed scale.
double tangency_discriminant(const Circle& a, const Circle& b);

// Unique common point of two tangent circles; throws "not-tangent" with the
// discriminant value otherwise.
ExtComplex tangency_point(const Circle& a, const Circle& b, double tol = kGeomTol);

} // namespace cpk
