#pragma once

#include <map>
#include <optional>

#include "stressforge/matrix.hpp"
#include "stressforge/model.hpp"

namespace stressforge {

/// Edge weights w_{i,j} = w_{j,i}; identically zero off the graph's edges.
/// w < 0 marks a cable, w > 0 a strut.
class StressAssignment {
public:
    StressAssignment() = default;
    StressAssignment(const Graph& graph, RationalVec weights)
        : edges_(graph.edges()), weights_(std::move(weights)) {
        if (edges_.size() != weights_.size())
            throw Error(ErrorKind::DimensionMismatch, "one weight per edge required");
    }

    const std::vector<Edge>& edges() const { return edges_; }
    const RationalVec& weights() const { return weights_; }

    Rational weight(int i, int j) const {
        Edge e(i, j);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        if (it == edges_.end() || !(*it == e)) return Rational(0);
        return weights_[static_cast<std::size_t>(it - edges_.begin())];
    }

    bool is_zero() const {
        for (const Rational& w : weights_)
            if (!w.is_zero()) return false;
        return true;
    }

    friend bool operator==(const StressAssignment& a, const StressAssignment& b) = default;

private:
    std::vector<Edge> edges_;
    RationalVec weights_;
};

/// W(G,P): the linear space of self stresses of a framework, with a
/// deterministic canonical basis.
struct StressSpace {
    Framework framework;
    std::vector<StressAssignment> basis;

    int dimension() const { return static_cast<int>(basis.size()); }
};

/// The unique-up-to-scale self stress of K4 on four points in general
/// position, canonically scaled.
struct Atom {
    std::array<int, 4> vertices;
    StressAssignment stress;
};

/// (d*n) x m matrix whose kernel is W(G,P). The column of edge {i,j} carries
/// p_j - p_i in the vertex-i rows and p_i - p_j in the vertex-j rows; rows
/// are vertex-major, coordinate-minor; columns in lexicographic edge order.
RationalMatrix equilibrium_matrix(const Framework& f);

StressSpace self_stress_space(const Framework& f);

/// Exact test of f_i + sum_j w_{i,j} (p_j - p_i) = 0 at every vertex.
bool resolves_load(const Framework& f, const StressAssignment& w, const Load& load);

/// Residual vectors of the above, one d-vector per vertex.
std::vector<Point> load_residual(const Framework& f, const StressAssignment& w, const Load& load);

Atom atom_stress(const std::array<Point, 4>& pts);

/// 3D analogue on coplanar points in general position within their plane.
Atom plane_atom_3d(const std::array<Point, 4>& pts);

/// Writes w as sum lambda_A * A over atoms of 4-subsets of a complete-graph
/// framework; minimal support by greedy elimination in lexicographic atom
/// order. Degenerate 4-subsets are skipped.
std::vector<std::pair<Atom, Rational>>
atom_decomposition(const Framework& f, const StressAssignment& w);

inline int stress_space_dimension(const Framework& f) {
    return f.graph.edge_count() - exact_rank(equilibrium_matrix(f));
}

} // namespace stressforge
