#include "stressforge/model_io.hpp"

#include <fstream>

namespace stressforge {

namespace {

void reject_floats(const Json& j, const std::string& where) {
    if (j.is_number_float())
        throw Error(ErrorKind::FloatRejected,
                    "floating point value at " + where + "; use \"p/q\" strings");
    if (j.is_object())
        for (auto it = j.begin(); it != j.end(); ++it)
            reject_floats(it.value(), where + "." + it.key());
    if (j.is_array())
        for (std::size_t i = 0; i < j.size(); ++i)
            reject_floats(j[i], where + "[" + std::to_string(i) + "]");
}

Rational coordinate(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw Error(ErrorKind::Schema, "coordinate at " + where + " must be integer or \"p/q\"");
}

} // namespace

ParsedModel parse_model_json(const Json& j) {
    reject_floats(j, "$");
    if (!j.is_object()) throw Error(ErrorKind::Schema, "model must be a JSON object");
    if (!j.contains("dimension") || !j["dimension"].is_number_integer())
        throw Error(ErrorKind::Schema, "missing integer field \"dimension\"");
    const int d = j["dimension"].get<int>();
    if (d != 2 && d != 3)
        throw Error(ErrorKind::UnsupportedDimension, "dimension must be 2 or 3");
    if (!j.contains("vertices") || !j["vertices"].is_array() || j["vertices"].empty())
        throw Error(ErrorKind::Schema, "missing nonempty array \"vertices\"");

    std::vector<Point> pts;
    for (std::size_t i = 0; i < j["vertices"].size(); ++i) {
        const Json& v = j["vertices"][i];
        const std::string where = "vertices[" + std::to_string(i) + "]";
        if (!v.is_array() || static_cast<int>(v.size()) != d)
            throw Error(ErrorKind::Schema, where + " must be an array of " + std::to_string(d) +
                                               " coordinates");
        Point p(d);
        for (int k = 0; k < d; ++k) p[k] = coordinate(v[k], where);
        pts.push_back(std::move(p));
    }

    Graph g(static_cast<int>(pts.size()));
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw Error(ErrorKind::Schema, "\"edges\" must be an array");
        for (std::size_t i = 0; i < j["edges"].size(); ++i) {
            const Json& e = j["edges"][i];
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
                !e[1].is_number_integer())
                throw Error(ErrorKind::Schema,
                            "edges[" + std::to_string(i) + "] must be a pair of labels");
            try {
                g.add_edge(e[0].get<int>(), e[1].get<int>());
            } catch (const Error& err) {
                throw Error(ErrorKind::Schema,
                            "edges[" + std::to_string(i) + "]: " + err.what());
            }
        }
    }

    ParsedModel m{make_framework(std::move(g), Configuration(d, std::move(pts))), {}};
    if (j.contains("roles")) {
        if (!j["roles"].is_object()) throw Error(ErrorKind::Schema, "\"roles\" must be an object");
        for (auto it = j["roles"].begin(); it != j["roles"].end(); ++it) {
            if (!it.value().is_number_integer())
                throw Error(ErrorKind::Schema, "role " + it.key() + " must be a label");
            m.roles[it.key()] = it.value().get<int>();
        }
    }
    return m;
}

ParsedModel parse_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, "cannot open model file " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::Schema, std::string("model parse error: ") + e.what());
    }
    return parse_model_json(j);
}

Json write_model(const Framework& f, const std::map<std::string, int>& roles) {
    Json j;
    j["dimension"] = f.dimension();
    Json verts = Json::array();
    for (const Point& p : f.configuration.points) {
        Json v = Json::array();
        for (const Rational& c : p) v.push_back(c.str());
        verts.push_back(std::move(v));
    }
    j["vertices"] = std::move(verts);
    Json edges = Json::array();
    for (const Edge& e : f.graph.edges()) edges.push_back(Json::array({e.a, e.b}));
    j["edges"] = std::move(edges);
    if (!roles.empty()) {
        Json r = Json::object();
        for (const auto& [k, v] : roles) r[k] = v;
        j["roles"] = std::move(r);
    }
    return j;
}

std::string dump_report(const Json& report) { return report.dump(2) + "\n"; }

Json signature_to_json(const FiberSignature& sig) {
    Json j;
    j["dimension"] = sig.dimension;
    Json cov = Json::array();
    for (const SignVector& s : sig.covectors) cov.push_back(s);
    j["covectors"] = std::move(cov);
    Json zero = Json::array();
    for (const Edge& e : sig.zero_edges) zero.push_back(Json::array({e.a, e.b}));
    j["zero_edges"] = std::move(zero);
    return j;
}

Json stress_space_to_json(const StressSpace& space) {
    Json j;
    j["dimension"] = space.dimension();
    Json basis = Json::array();
    for (const StressAssignment& w : space.basis) {
        Json vec = Json::array();
        Json labels = Json::array();
        const auto& edges = w.edges();
        for (std::size_t e = 0; e < edges.size(); ++e) {
            vec.push_back(w.weights()[e].str());
            int s = w.weights()[e].sign();
            // Negative stress marks a cable, positive a strut.
            labels.push_back(s < 0 ? "cable" : (s > 0 ? "strut" : "zero"));
        }
        basis.push_back(Json{{"weights", std::move(vec)}, {"elements", std::move(labels)}});
    }
    j["basis"] = std::move(basis);
    return j;
}

Json verdict_to_json(const SurgeryVerdict& v) {
    Json j;
    j["preconditions_ok"] = v.preconditions_ok;
    Json checks = Json::array();
    for (const auto& [name, ok] : v.checks) checks.push_back(Json{{"check", name}, {"ok", ok}});
    j["checks"] = std::move(checks);
    j["dim_before"] = v.dim_before;
    j["dim_after"] = v.dim_after;
    j["dims_equal"] = v.dims_equal();
    return j;
}

Json census_report_to_json(const CensusReport& r) {
    Json j;
    j["n"] = r.n;
    Json table = Json::object();
    for (const auto& [dim, count] : r.table.by_dimension)
        table[std::to_string(dim)] = count;
    j["table"] = std::move(table);
    Json bullets = Json::array();
    for (const CensusBullet& b : r.bullets)
        bullets.push_back(Json{{"dimension", b.dimension},
                               {"type", b.type_key},
                               {"label", b.label},
                               {"count", b.count}});
    j["bullets"] = std::move(bullets);
    return j;
}

Json error_to_json(const Error& e) {
    return Json{{"error", e.kind_name()}, {"message", e.what()}};
}

} // namespace stressforge
