#include "stressforge/projective.hpp"

#include "stressforge/matrix.hpp"

namespace stressforge {

bool on_conic(const std::array<ProjectivePoint, 6>& pts) {
    RationalMatrix m(6, 6);
    for (int i = 0; i < 6; ++i) {
        const auto& h = pts[i].homogeneous();
        m.at(i, 0) = h[0] * h[0];
        m.at(i, 1) = h[0] * h[1];
        m.at(i, 2) = h[1] * h[1];
        m.at(i, 3) = h[0] * h[2];
        m.at(i, 4) = h[1] * h[2];
        m.at(i, 5) = h[2] * h[2];
    }
    return exact_rank(m) < 6;
}

bool on_conic(const std::array<Point, 6>& pts) {
    std::array<ProjectivePoint, 6> proj = {
        to_projective(pts[0]), to_projective(pts[1]), to_projective(pts[2]),
        to_projective(pts[3]), to_projective(pts[4]), to_projective(pts[5])};
    return on_conic(proj);
}

} // namespace stressforge
