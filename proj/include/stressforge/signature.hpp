#pragma once

#include <map>
#include <set>
#include <string>

#include "stressforge/stress.hpp"

namespace stressforge {

/// Sign vector over the edges in lexicographic order: one of '-','0','+'
/// per edge.
using SignVector = std::string;

SignVector negated(const SignVector& s);

/// Classification key of a stratum: fiber dimension plus the attainable
/// sign vectors (covectors) of W(G,P).
struct FiberSignature {
    std::vector<Edge> edges;
    int dimension = 0;
    std::set<SignVector> covectors;
    std::vector<Edge> zero_edges;

    friend bool operator==(const FiberSignature& a, const FiberSignature& b) {
        return a.edges == b.edges && a.dimension == b.dimension && a.covectors == b.covectors;
    }
};

/// All sign vectors attainable by elements of the stress space. Supports
/// k <= 3 by exact cell enumeration of the functional arrangement in
/// coefficient space, plus the coincident-components special case where the
/// signature is a full sign cube.
std::set<SignVector> covectors(const StressSpace& space);

FiberSignature fiber_signature(const Framework& f);

/// Signature equality as the operational form of fiber equivalence.
/// Requires the same underlying graph (same m and edge order).
bool fibers_equivalent(const FiberSignature& a, const FiberSignature& b);

namespace arrangement {

/// Affine functional a*x + b*y + c on the plane.
using AffineFunctional = std::array<Rational, 3>;

/// One exact rational sample point per realizable sign vector of the cell
/// decomposition induced by the functionals (cells of all dimensions).
std::map<std::string, Point> affine_sign_cells(const std::vector<AffineFunctional>& funcs);

/// Sign vectors of a central arrangement in the plane, enumerated by a
/// circular sweep of the functional kernel directions.
std::set<std::string> central_plane_signs(const std::vector<std::array<Rational, 2>>& funcs);

} // namespace arrangement

} // namespace stressforge
