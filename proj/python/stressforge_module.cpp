#include <pybind11/pybind11.h>

#include "stressforge/conditions.hpp"
#include "stressforge/lambda5.hpp"
#include "stressforge/model_io.hpp"
#include "stressforge/svg.hpp"
#include "stressforge/witness.hpp"

namespace py = pybind11;
namespace sf = stressforge;
using sf::Json;

namespace {

Json to_json(const py::handle& obj) {
    if (obj.is_none()) return nullptr;
    if (py::isinstance<py::bool_>(obj)) return obj.cast<bool>();
    if (py::isinstance<py::int_>(obj)) return obj.cast<long long>();
    if (py::isinstance<py::float_>(obj)) return obj.cast<double>();
    if (py::isinstance<py::str>(obj)) return obj.cast<std::string>();
    if (py::isinstance<py::dict>(obj)) {
        Json j = Json::object();
        for (auto item : obj.cast<py::dict>())
            j[py::str(item.first).cast<std::string>()] = to_json(item.second);
        return j;
    }
    if (py::isinstance<py::list>(obj) || py::isinstance<py::tuple>(obj)) {
        Json j = Json::array();
        for (auto item : obj.cast<py::sequence>()) j.push_back(to_json(item));
        return j;
    }
    throw py::type_error("unsupported value in model document");
}

py::object to_py(const Json& j) {
    switch (j.type()) {
    case Json::value_t::null: return py::none();
    case Json::value_t::boolean: return py::bool_(j.get<bool>());
    case Json::value_t::number_integer: return py::int_(j.get<long long>());
    case Json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
    case Json::value_t::number_float: return py::float_(j.get<double>());
    case Json::value_t::string: return py::str(j.get<std::string>());
    case Json::value_t::array: {
        py::list out;
        for (const Json& v : j) out.append(to_py(v));
        return out;
    }
    default: {
        py::dict out;
        for (auto it = j.begin(); it != j.end(); ++it)
            out[py::str(it.key())] = to_py(it.value());
        return out;
    }
    }
}

sf::ParsedModel model_from(const py::dict& model) { return sf::parse_model_json(to_json(model)); }

py::object graph_to_py(const sf::Graph& g) {
    Json edges = Json::array();
    for (const sf::Edge& e : g.edges()) edges.push_back(Json::array({e.a, e.b}));
    return to_py(Json{{"vertex_count", g.vertex_count()}, {"edges", edges}});
}

sf::ConditionId condition_from(const std::string& name, const py::object& bind) {
    auto kind = sf::condition_by_name(name);
    if (!kind) throw sf::Error(sf::ErrorKind::Schema, "unknown condition id " + name);
    sf::ConditionId id = sf::ConditionId::standard(*kind);
    if (!bind.is_none()) {
        id.roles.clear();
        for (auto item : bind.cast<py::dict>())
            id.roles[py::str(item.first).cast<std::string>()] = item.second.cast<int>();
    }
    return id;
}

} // namespace

PYBIND11_MODULE(_stressforge, m) {
    m.doc() = "exact self-stress spaces and stratification censuses for small "
              "tensegrity frameworks";

    py::register_exception<sf::Error>(m, "StressforgeError");

    m.def("stress_space", [](const py::dict& model) {
        sf::ParsedModel p = model_from(model);
        return to_py(sf::stress_space_to_json(sf::self_stress_space(p.framework)));
    });

    m.def("fiber_signature", [](const py::dict& model) {
        sf::ParsedModel p = model_from(model);
        return to_py(sf::signature_to_json(sf::fiber_signature(p.framework)));
    });

    m.def("classify_k4", [](const py::dict& model) {
        sf::ParsedModel p = model_from(model);
        sf::K4CellRef ref = sf::classify_k4(p.framework.configuration);
        return to_py(Json{{"cell", ref.cell_id},
                          {"kind", ref.kind},
                          {"condition", ref.condition},
                          {"chart", ref.chart_desc}});
    });

    m.def("census", [](int n) { return to_py(sf::census_report_to_json(sf::strata_table(n))); });

    m.def("lambda4_counts", [] {
        const sf::Lambda4Complex& c = sf::lambda4_arrangement();
        return to_py(Json{{"faces", c.merged_face_count},
                          {"arcs", c.stratum_arc_count},
                          {"arc_groups", Json::array({c.arc_group_counts[0], c.arc_group_counts[1],
                                                      c.arc_group_counts[2], c.arc_group_counts[3]})},
                          {"euler", c.euler_characteristic()}});
    });

    m.def("lambda5_counts", [] {
        const sf::Lambda5Census& c = sf::lambda5_census();
        return to_py(Json{{"top", c.top_count}, {"codim1", c.codim1_count}});
    });

    m.def("lambda4_svg", [] { return sf::lambda4_svg(sf::lambda4_arrangement()); });

    m.def(
        "check_condition",
        [](const std::string& id, const py::dict& model, const py::object& bind) {
            sf::ParsedModel p = model_from(model);
            sf::ConditionId cid = condition_from(id, bind);
            if (bind.is_none() && !p.roles.empty())
                for (const auto& [k, v] : p.roles) cid.roles[k] = v;
            sf::ConditionResult res = sf::check_condition(cid, p.framework.configuration);
            Json constructed = Json::array();
            for (const auto& [name, pt] : res.constructed)
                constructed.push_back(Json{
                    {"name", name},
                    {"point", Json::array({pt.x().str(), pt.y().str(), pt.z().str()})}});
            return to_py(Json{{"holds", res.holds}, {"constructed", constructed}});
        },
        py::arg("id"), py::arg("model"), py::arg("bind") = py::none());

    m.def(
        "on_condition_sample",
        [](const std::string& id, int n, std::uint64_t seed) {
            sf::Configuration cfg =
                sf::on_condition_sample(sf::ConditionId::standard(*sf::condition_by_name(id)), n,
                                        seed);
            return to_py(sf::write_model(sf::Framework{sf::Graph(n), cfg}));
        },
        py::arg("id"), py::arg("n"), py::arg("seed") = 1);

    m.def(
        "witness_search",
        [](int n, const std::string& id, const py::list& on, const py::list& off) {
            std::vector<sf::Configuration> on_cfg, off_cfg;
            for (auto h : on) on_cfg.push_back(model_from(h.cast<py::dict>()).framework.configuration);
            for (auto h : off)
                off_cfg.push_back(model_from(h.cast<py::dict>()).framework.configuration);
            auto found = sf::witness_subgraph_search(n, condition_from(id, py::none()), on_cfg,
                                                     off_cfg);
            py::list out;
            for (const sf::Graph& g : found) out.append(graph_to_py(g));
            return out;
        },
        py::arg("n"), py::arg("condition"), py::arg("on"), py::arg("off"));

    m.def("surgery1", [](const py::dict& model) {
        sf::ParsedModel p = model_from(model);
        sf::SurgerySite site;
        for (const char* role : {"a", "b", "x", "y", "w"}) {
            auto it = p.roles.find(role);
            if (it == p.roles.end())
                throw sf::Error(sf::ErrorKind::SiteMismatch, "missing role in model");
            site.roles[role] = it->second;
        }
        auto [out, v] = sf::surgery1_apply(p.framework, site);
        Json r = sf::verdict_to_json(v);
        r["framework"] = sf::write_model(out);
        return to_py(r);
    });

    m.def("two_sum", [](const py::dict& model1, py::sequence edge1, const py::dict& model2,
                        py::sequence edge2) {
        sf::ParsedModel p1 = model_from(model1);
        sf::ParsedModel p2 = model_from(model2);
        auto [sum, v] = sf::two_sum(p1.framework,
                                    sf::Edge(edge1[0].cast<int>(), edge1[1].cast<int>()),
                                    p2.framework,
                                    sf::Edge(edge2[0].cast<int>(), edge2[1].cast<int>()));
        Json r = sf::verdict_to_json(v);
        r["framework"] = sf::write_model(sum);
        return to_py(r);
    });

    m.attr("__version__") = "0.1.0";
}
