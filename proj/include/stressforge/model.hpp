#pragma once

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "stressforge/rational.hpp"

namespace stressforge {

/// Unordered vertex pair with 1-based labels, stored as (lo, hi).
struct Edge {
    int a = 0, b = 0;

    Edge() = default;
    Edge(int i, int j) : a(std::min(i, j)), b(std::max(i, j)) {}

    bool contains(int v) const { return a == v || b == v; }
    int other(int v) const { return a == v ? b : a; }

    friend bool operator==(const Edge& x, const Edge& y) = default;
    friend auto operator<=>(const Edge& x, const Edge& y) = default;
};

/// Loop-free simple graph on vertices 1..n. Edge order is lexicographic
/// everywhere: matrix columns, sign vectors and reports all follow it.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n) {
        if (n < 1) throw Error(ErrorKind::Schema, "graph needs at least one vertex");
    }

    static Graph complete(int n) {
        Graph g(n);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) g.add_edge(i, j);
        return g;
    }

    void add_edge(int i, int j) {
        if (i == j) throw Error(ErrorKind::Schema, "loop edge rejected");
        if (i < 1 || j < 1 || i > n_ || j > n_)
            throw Error(ErrorKind::Schema, "edge label out of range");
        edges_.insert(Edge(i, j));
    }

    bool has_edge(int i, int j) const { return edges_.count(Edge(i, j)) > 0; }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    std::vector<Edge> edges() const { return {edges_.begin(), edges_.end()}; }

    int degree(int v) const {
        int d = 0;
        for (const Edge& e : edges_)
            if (e.contains(v)) ++d;
        return d;
    }

    Graph without_edge(const Edge& e) const {
        Graph g(n_);
        for (const Edge& f : edges_)
            if (!(f == e)) g.edges_.insert(f);
        return g;
    }

    friend bool operator==(const Graph& x, const Graph& y) {
        return x.n_ == y.n_ && x.edges_ == y.edges_;
    }

private:
    int n_ = 0;
    std::set<Edge> edges_;
};

using Point = RationalVec;

/// Labeled exact point configuration in dimension 2 or 3. Coincident points
/// are allowed; they define the degenerate strata.
struct Configuration {
    int dimension = 2;
    std::vector<Point> points;

    Configuration() = default;
    Configuration(int d, std::vector<Point> pts) : dimension(d), points(std::move(pts)) {
        if (dimension != 2 && dimension != 3)
            throw Error(ErrorKind::UnsupportedDimension,
                        "only dimensions 2 and 3 are supported");
        for (const Point& p : points)
            if (static_cast<int>(p.size()) != dimension)
                throw Error(ErrorKind::DimensionMismatch, "point arity != dimension");
    }

    int size() const { return static_cast<int>(points.size()); }
    /// 1-based access to match the v_1..v_n labels used in reports.
    const Point& at(int label) const { return points.at(label - 1); }

    friend bool operator==(const Configuration& a, const Configuration& b) = default;
};

inline Configuration config2(std::initializer_list<std::pair<Rational, Rational>> pts) {
    std::vector<Point> v;
    for (const auto& [x, y] : pts) v.push_back({x, y});
    return Configuration(2, std::move(v));
}

struct Framework {
    Graph graph;
    Configuration configuration;

    int vertex_count() const { return graph.vertex_count(); }
    int dimension() const { return configuration.dimension; }
};

inline Framework make_framework(Graph graph, Configuration configuration) {
    if (configuration.dimension != 2 && configuration.dimension != 3)
        throw Error(ErrorKind::UnsupportedDimension, "only dimensions 2 and 3 are supported");
    if (configuration.size() != graph.vertex_count())
        throw Error(ErrorKind::DimensionMismatch,
                    "configuration has " + std::to_string(configuration.size()) +
                        " points but the graph has " +
                        std::to_string(graph.vertex_count()) + " vertices");
    return Framework{std::move(graph), std::move(configuration)};
}

/// One force vector per vertex.
struct Load {
    std::vector<Point> vectors;
};

inline Point sub(const Point& a, const Point& b) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline bool points_equal(const Point& a, const Point& b) { return a == b; }

} // namespace stressforge
