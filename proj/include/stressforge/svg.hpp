#pragma once

#include <string>

#include "stressforge/lambda4.hpp"

namespace stressforge {

/// Stereographic projection of the Lambda4 sphere from (0,0,-1): the 24
/// stratum arcs in their four condition colors, the dashed equator, and the
/// merged face labels. Deterministic output.
std::string lambda4_svg(const Lambda4Complex& complex);

void export_svg(const Lambda4Complex& complex, const std::string& path);

} // namespace stressforge
