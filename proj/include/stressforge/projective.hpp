#pragma once

#include <array>

#include "stressforge/model.hpp"

namespace stressforge {

namespace detail {

/// Canonical homogeneous triple: last nonzero coordinate scaled to 1.
inline std::array<Rational, 3> canonical_triple(std::array<Rational, 3> h) {
    if (!h[2].is_zero()) {
        return {h[0] / h[2], h[1] / h[2], Rational(1)};
    }
    if (!h[1].is_zero()) {
        return {h[0] / h[1], Rational(1), Rational(0)};
    }
    if (!h[0].is_zero()) {
        return {Rational(1), Rational(0), Rational(0)};
    }
    throw Error(ErrorKind::Schema, "zero homogeneous triple");
}

inline std::array<Rational, 3> cross3(const std::array<Rational, 3>& a,
                                      const std::array<Rational, 3>& b) {
    return {a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

} // namespace detail

/// Point of the projective plane in canonical homogeneous coordinates.
/// Z = 0 encodes directions (points on the line at infinity), so parallel
/// lines never need special-casing in intersection code.
class ProjectivePoint {
public:
    ProjectivePoint(Rational x, Rational y, Rational z)
        : h_(detail::canonical_triple({std::move(x), std::move(y), std::move(z)})) {}

    static ProjectivePoint from_affine(const Point& p) {
        return ProjectivePoint(p.at(0), p.at(1), Rational(1));
    }

    static ProjectivePoint direction(const Rational& dx, const Rational& dy) {
        return ProjectivePoint(dx, dy, Rational(0));
    }

    const Rational& x() const { return h_[0]; }
    const Rational& y() const { return h_[1]; }
    const Rational& z() const { return h_[2]; }

    bool at_infinity() const { return h_[2].is_zero(); }

    /// Affine coordinates; only valid off the line at infinity.
    Point affine() const {
        if (at_infinity()) throw Error(ErrorKind::Schema, "point at infinity has no affine form");
        return {h_[0], h_[1]};
    }

    friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
        return a.h_ == b.h_;
    }
    friend bool operator<(const ProjectivePoint& a, const ProjectivePoint& b) {
        for (int i = 0; i < 3; ++i) {
            if (a.h_[i] != b.h_[i]) return a.h_[i] < b.h_[i];
        }
        return false;
    }

    const std::array<Rational, 3>& homogeneous() const { return h_; }

private:
    std::array<Rational, 3> h_;
};

inline ProjectivePoint to_projective(const Point& p) {
    return ProjectivePoint::from_affine(p);
}

/// Line aX + bY + cZ = 0, canonicalized like a point.
class ProjectiveLine {
public:
    ProjectiveLine(Rational a, Rational b, Rational c)
        : h_(detail::canonical_triple({std::move(a), std::move(b), std::move(c)})) {}

    const Rational& a() const { return h_[0]; }
    const Rational& b() const { return h_[1]; }
    const Rational& c() const { return h_[2]; }

    bool through(const ProjectivePoint& p) const {
        return (h_[0] * p.x() + h_[1] * p.y() + h_[2] * p.z()).is_zero();
    }

    friend bool operator==(const ProjectiveLine& a, const ProjectiveLine& b) {
        return a.h_ == b.h_;
    }
    friend bool operator<(const ProjectiveLine& a, const ProjectiveLine& b) {
        for (int i = 0; i < 3; ++i) {
            if (a.h_[i] != b.h_[i]) return a.h_[i] < b.h_[i];
        }
        return false;
    }

    const std::array<Rational, 3>& homogeneous() const { return h_; }

private:
    std::array<Rational, 3> h_;
};

inline Rational det3(const std::array<Rational, 3>& r0,
                     const std::array<Rational, 3>& r1,
                     const std::array<Rational, 3>& r2) {
    return r0[0] * (r1[1] * r2[2] - r1[2] * r2[1]) -
           r0[1] * (r1[0] * r2[2] - r1[2] * r2[0]) +
           r0[2] * (r1[0] * r2[1] - r1[1] * r2[0]);
}

inline bool collinear(const ProjectivePoint& p, const ProjectivePoint& q,
                      const ProjectivePoint& r) {
    return det3(p.homogeneous(), q.homogeneous(), r.homogeneous()).is_zero();
}

inline bool collinear(const Point& p, const Point& q, const Point& r) {
    return collinear(to_projective(p), to_projective(q), to_projective(r));
}

inline ProjectiveLine line_through(const ProjectivePoint& p, const ProjectivePoint& q) {
    if (p == q) throw Error(ErrorKind::IdenticalInput, "line through a single point");
    auto c = detail::cross3(p.homogeneous(), q.homogeneous());
    return ProjectiveLine(c[0], c[1], c[2]);
}

inline ProjectivePoint intersection(const ProjectiveLine& l1, const ProjectiveLine& l2) {
    if (l1 == l2) throw Error(ErrorKind::IdenticalInput, "intersection of identical lines");
    auto c = detail::cross3(l1.homogeneous(), l2.homogeneous());
    return ProjectivePoint(c[0], c[1], c[2]);
}

inline bool concurrent(const ProjectiveLine& l1, const ProjectiveLine& l2,
                       const ProjectiveLine& l3) {
    if (l1 == l2 || l1 == l3 || l2 == l3)
        throw Error(ErrorKind::DuplicateLine, "concurrency of non-distinct lines");
    return det3(l1.homogeneous(), l2.homogeneous(), l3.homogeneous()).is_zero();
}

/// Whether six projective points lie on a common conic: vanishing of the
/// 6x6 determinant with rows (X^2, XY, Y^2, XZ, YZ, Z^2).
bool on_conic(const std::array<ProjectivePoint, 6>& pts);

/// Affine special case with rows (x^2, xy, y^2, x, y, 1).
bool on_conic(const std::array<Point, 6>& pts);

} // namespace stressforge
