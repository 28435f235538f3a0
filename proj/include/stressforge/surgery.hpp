#pragma once

#include <map>

#include "stressforge/stress.hpp"

namespace stressforge {

/// Role bindings of a surgery pattern to framework labels.
struct SurgerySite {
    std::map<std::string, int> roles;

    int at(const std::string& role) const {
        auto it = roles.find(role);
        if (it == roles.end())
            throw Error(ErrorKind::SiteMismatch, "missing surgery role " + role);
        return it->second;
    }
};

struct SurgeryVerdict {
    bool preconditions_ok = true;
    std::vector<std::pair<std::string, bool>> checks; // per-condition detail
    int dim_before = -1;
    int dim_after = -1;

    bool dims_equal() const { return dim_before == dim_after; }

    void check(const std::string& name, bool ok) {
        checks.emplace_back(name, ok);
        if (!ok) preconditions_ok = false;
    }
};

/// Edge exchange: with dim W(H,P) = 1 and the generator nonzero on e1 and
/// e2, removing either edge from G leaves stress spaces of equal dimension.
SurgeryVerdict edge_exchange_check(const Graph& g, const Graph& h, const Edge& e1,
                                   const Edge& e2, const Configuration& p);

/// 2-sum: identify edge1 of f1 with edge2 of f2 (f2 is dilated, rotated and
/// translated so the edges coincide), drop the identified edge, and union
/// the rest. The verdict checks dim = dim1 + dim2 - 1.
std::pair<Framework, SurgeryVerdict> two_sum(const Framework& f1, const Edge& edge1,
                                             const Framework& f2, const Edge& edge2);

/// Surgery I: contract the degree-3 pattern {a,b} (roles a,b,x,y,w with
/// edges a-x, b-y, a-w, b-w, a-b) to the new vertex p = line(x,a) ^
/// line(y,b). Checks the five non-collinearity preconditions.
std::pair<Framework, SurgeryVerdict> surgery1_apply(const Framework& f, const SurgerySite& site);

/// Surgery II verification on a user-supplied before/after pair: the six
/// triple preconditions plus the dimension equality claim.
SurgeryVerdict surgery2_verify(const Framework& f1, const Framework& f2,
                               const SurgerySite& site);

/// 3D plane surgery: roles v2,v3,v4 (the triangle) and e1..e6 (outer
/// endpoints of the external edge pairs at v2, v3, v4). Computes v1 as the
/// intersection of the three external planes, replaces the triangle by the
/// cone over v1, and checks the dimension equality.
std::pair<Framework, SurgeryVerdict> surgery3d_verify(const Framework& f1,
                                                      const SurgerySite& site);

} // namespace stressforge
