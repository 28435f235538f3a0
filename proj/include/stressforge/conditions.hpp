#pragma once

#include <map>
#include <optional>
#include <random>

#include "stressforge/projective.hpp"

namespace stressforge {

/// Closure of a point set under rounds of pairwise line intersections,
/// with provenance and points at infinity kept.
struct UniversalSet {
    struct Entry {
        ProjectivePoint point;
        // Either an original configuration index (construction empty) or the
        // four ancestor indices (i,j),(k,l) whose lines were intersected.
        std::optional<std::array<int, 4>> construction;

        explicit Entry(ProjectivePoint p) : point(std::move(p)) {}
        Entry(ProjectivePoint p, std::array<int, 4> c)
            : point(std::move(p)), construction(c) {}
    };

    int level = 0;
    std::vector<Entry> points;

    bool contains(const ProjectivePoint& p) const {
        for (const Entry& e : points)
            if (e.point == p) return true;
        return false;
    }
    int size() const { return static_cast<int>(points.size()); }
};

UniversalSet universal_set(const Configuration& p, int m, int cap = 2);

enum class ConditionKind {
    Collinear3,
    Concurrent3Lines,
    Conic6,
    K7ConstructedConcurrency,
    K7ConstructedConic,
};

const char* condition_name(ConditionKind k);
std::optional<ConditionKind> condition_by_name(const std::string& name);

/// Role count the condition expects (v1..vk).
int condition_arity(ConditionKind k);

/// Catalog entry: a condition kind plus injective role bindings v1..vk to
/// vertex labels.
struct ConditionId {
    ConditionKind kind;
    std::map<std::string, int> roles;

    /// Identity binding v1..vk -> 1..k.
    static ConditionId standard(ConditionKind k);
};

struct ConditionResult {
    bool holds = false;
    /// Points constructed along the way (e.g. the auxiliary intersection p).
    std::vector<std::pair<std::string, ProjectivePoint>> constructed;
};

ConditionResult check_condition(const ConditionId& id, const Configuration& p);

/// One Pascal hexagon instance: the permutation and the three opposite-side
/// intersections, or the degeneracy that prevented their construction.
struct PascalInstance {
    std::array<int, 6> permutation;
    std::optional<std::array<ProjectivePoint, 3>> triple;
    bool collinear = false;
    std::string degeneracy;
};

/// The 60 essentially distinct Pascal schemes of a hexagon: all 6!
/// orderings modulo the dihedral symmetry (12).
std::vector<PascalInstance> pascal_witnesses(const std::array<Point, 6>& pts);

/// Deterministic exact sample builders for the catalog conditions; the
/// returned configurations satisfy (resp. avoid) the condition exactly.
Configuration on_condition_sample(const ConditionId& id, int n, std::uint64_t seed);
Configuration off_condition_sample(const ConditionId& id, int n, std::uint64_t seed);

/// Uniform rational point with numerators in [-range, range] and a small
/// random denominator.
Point random_rational_point(std::mt19937_64& rng, int dim, int range = 12, int den = 4);

} // namespace stressforge
