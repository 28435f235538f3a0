// stressforge: exact stratification toolkit for planar tensegrities.
//
// Subcommands take JSON model files (exact "p/q" coordinates) and print a
// single JSON report on standard output. Exit codes: 0 success, 1 domain
// error, 2 usage error.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

#include "stressforge/conditions.hpp"
#include "stressforge/lambda5.hpp"
#include "stressforge/model_io.hpp"
#include "stressforge/svg.hpp"
#include "stressforge/witness.hpp"

namespace sf = stressforge;
using sf::Json;

namespace {

Json report_head(const std::string& operation) {
    Json j;
    j["operation"] = operation;
    return j;
}

void emit(const Json& report) { std::cout << sf::dump_report(report); }

sf::Edge parse_edge_flag(const std::string& text) {
    auto sep = text.find_first_of("-,");
    if (sep == std::string::npos)
        throw CLI::ValidationError("edge must look like 1-2");
    try {
        return sf::Edge(std::stoi(text.substr(0, sep)), std::stoi(text.substr(sep + 1)));
    } catch (const std::exception&) {
        throw CLI::ValidationError("edge must look like 1-2");
    }
}

std::vector<sf::Edge> parse_edge_list(const std::string& text) {
    std::vector<sf::Edge> edges;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string::npos) comma = text.size();
        edges.push_back(parse_edge_flag(text.substr(start, comma - start)));
        start = comma + 1;
    }
    return edges;
}

int vertex_role(const sf::ParsedModel& m, const std::string& role) {
    auto it = m.roles.find(role);
    if (it == m.roles.end())
        throw sf::Error(sf::ErrorKind::SiteMismatch,
                        "model is missing role \"" + role + "\"");
    return it->second;
}

Json graph_to_json(const sf::Graph& g) {
    Json edges = Json::array();
    for (const sf::Edge& e : g.edges()) edges.push_back(Json::array({e.a, e.b}));
    return Json{{"vertex_count", g.vertex_count()}, {"edges", std::move(edges)}};
}

std::vector<sf::Configuration> load_sample_dir(const std::string& dir) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir))
        throw sf::Error(sf::ErrorKind::Io, "sample directory not found: " + dir);
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.path().extension() == ".json") files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());
    std::vector<sf::Configuration> out;
    for (const std::string& f : files) out.push_back(sf::parse_model(f).framework.configuration);
    return out;
}

Json projective_to_json(const sf::ProjectivePoint& p) {
    return Json::array({p.x().str(), p.y().str(), p.z().str()});
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact self-stress spaces and stratification censuses for "
                 "small tensegrity frameworks"};
    app.require_subcommand(1);

    std::string model_path, model2_path, out_path, samples_dir, condition_name, bind_spec;
    std::string h_edges, e1_text, e2_text, edge1_text, edge2_text, seed_graph_path;
    int census_n = 0, search_n = 6, batch = 0;
    bool lambda5_flag = false;
    std::uint64_t prime_seed = 0xC0FFEEULL;

    CLI::App* stress = app.add_subcommand("stress", "self stress space of a framework");
    stress->add_option("model", model_path)->required();

    CLI::App* signature = app.add_subcommand("signature", "fiber signature (k <= 3)");
    signature->add_option("model", model_path)->required();

    CLI::App* classify = app.add_subcommand("classify-k4", "locate a 4-point framework in Lambda4");
    classify->add_option("model", model_path)->required();

    CLI::App* census = app.add_subcommand("census", "stratification census");
    census->add_option("--n", census_n, "complete graph size (2..5)");
    census->add_flag("--lambda5", lambda5_flag, "fibered Lambda5 counts");

    CLI::App* condition = app.add_subcommand("condition", "evaluate a geometric condition");
    condition->add_option("--id", condition_name, "catalog id")->required();
    condition->add_option("--bind", bind_spec, "role bindings, e.g. v1=3,v2=1");
    condition->add_option("model", model_path)->required();

    CLI::App* search = app.add_subcommand("witness-search", "subgraphs identifying a stratum");
    search->add_option("--n", search_n, "6 or 7")->required();
    search->add_option("--condition", condition_name)->required();
    search->add_option("--samples", samples_dir, "directory with on/ and off/ model files")
        ->required();
    search->add_option("--seed-graph", seed_graph_path, "n=7: enumerate supersets of this model");
    search->add_option("--batch", batch, "n=7: random batch size");
    search->add_option("--prime-seed", prime_seed, "seed of the modular prefilter primes");

    CLI::App* surgery = app.add_subcommand("surgery", "surgery propositions");
    surgery->require_subcommand(1);
    CLI::App* sx = surgery->add_subcommand("edge-exchange", "dim W(G-e1) vs dim W(G-e2)");
    sx->add_option("model", model_path)->required();
    sx->add_option("--subgraph", h_edges, "edge list of the subgraph H, e.g. 1-2,2-3")->required();
    sx->add_option("--e1", e1_text)->required();
    sx->add_option("--e2", e2_text)->required();
    CLI::App* s2s = surgery->add_subcommand("two-sum", "glue two frameworks along an edge");
    s2s->add_option("model1", model_path)->required();
    s2s->add_option("model2", model2_path)->required();
    s2s->add_option("--edge1", edge1_text)->required();
    s2s->add_option("--edge2", edge2_text)->required();
    CLI::App* s1 = surgery->add_subcommand("surgery1", "contract the a,b pattern to p");
    s1->add_option("model", model_path)->required();
    CLI::App* s2 = surgery->add_subcommand("surgery2", "verify a before/after pair");
    s2->add_option("model1", model_path)->required();
    s2->add_option("model2", model2_path)->required();
    CLI::App* s3 = surgery->add_subcommand("surgery3d", "3D plane surgery");
    s3->add_option("model", model_path)->required();

    CLI::App* exporter = app.add_subcommand("export", "emit the Lambda4 stereographic diagram");
    exporter->add_option("--svg", out_path, "output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit(Json{{"error", "usage"}, {"message", e.what()}});
        std::cerr << app.help() << std::flush;
        return 2;
    }

    try {
        if (*stress) {
            sf::ParsedModel m = sf::parse_model(model_path);
            Json r = report_head("stress");
            r["inputs"] = Json{{"model", sf::write_model(m.framework, m.roles)}};
            r["results"] = sf::stress_space_to_json(sf::self_stress_space(m.framework));
            emit(r);
        } else if (*signature) {
            sf::ParsedModel m = sf::parse_model(model_path);
            Json r = report_head("signature");
            r["inputs"] = Json{{"model", sf::write_model(m.framework, m.roles)}};
            r["results"] = sf::signature_to_json(sf::fiber_signature(m.framework));
            emit(r);
        } else if (*classify) {
            sf::ParsedModel m = sf::parse_model(model_path);
            sf::K4CellRef ref = sf::classify_k4(m.framework.configuration);
            Json r = report_head("classify-k4");
            r["inputs"] = Json{{"model", sf::write_model(m.framework, m.roles)}};
            r["results"] = Json{{"cell", ref.cell_id},
                                {"kind", ref.kind},
                                {"condition", ref.condition},
                                {"chart", ref.chart_desc}};
            emit(r);
        } else if (*census) {
            Json r = report_head("census");
            if (lambda5_flag) {
                const sf::Lambda5Census& c = sf::lambda5_census();
                bool fibers_ok = true;
                for (int count : c.face_fiber_cells)
                    if (count != 18) fibers_ok = false;
                r["results"] = Json{{"top", c.top_count},
                                    {"codim1", c.codim1_count},
                                    {"generic_face_fiber_cells", 18},
                                    {"fiber_cells_uniform", fibers_ok},
                                    {"refined_faces", c.refined_faces},
                                    {"refined_arcs", c.refined_arcs},
                                    {"refined_vertices", c.refined_vertices}};
            } else {
                if (census_n < 2 || census_n > 5)
                    throw sf::Error(sf::ErrorKind::UnsupportedN,
                                    "census needs --n 2..5 or --lambda5");
                r["results"] = sf::census_report_to_json(sf::strata_table(census_n));
            }
            emit(r);
        } else if (*condition) {
            auto kind = sf::condition_by_name(condition_name);
            if (!kind)
                throw sf::Error(sf::ErrorKind::Schema, "unknown condition id " + condition_name);
            sf::ParsedModel m = sf::parse_model(model_path);
            sf::ConditionId id = sf::ConditionId::standard(*kind);
            if (!bind_spec.empty()) {
                id.roles.clear();
                std::size_t start = 0;
                while (start < bind_spec.size()) {
                    std::size_t comma = bind_spec.find(',', start);
                    if (comma == std::string::npos) comma = bind_spec.size();
                    std::string part = bind_spec.substr(start, comma - start);
                    std::size_t eq = part.find('=');
                    if (eq == std::string::npos)
                        throw sf::Error(sf::ErrorKind::Schema, "bad --bind entry " + part);
                    id.roles[part.substr(0, eq)] = std::stoi(part.substr(eq + 1));
                    start = comma + 1;
                }
            } else if (!m.roles.empty()) {
                for (const auto& [k, v] : m.roles) id.roles[k] = v;
            }
            sf::ConditionResult res = sf::check_condition(id, m.framework.configuration);
            Json constructed = Json::array();
            for (const auto& [name, pt] : res.constructed)
                constructed.push_back(Json{{"name", name}, {"point", projective_to_json(pt)}});
            Json r = report_head("condition");
            r["inputs"] = Json{{"id", condition_name},
                               {"model", sf::write_model(m.framework, m.roles)}};
            r["results"] = Json{{"holds", res.holds}, {"constructed", std::move(constructed)}};
            emit(r);
        } else if (*search) {
            auto kind = sf::condition_by_name(condition_name);
            if (!kind)
                throw sf::Error(sf::ErrorKind::Schema, "unknown condition id " + condition_name);
            auto on = load_sample_dir(samples_dir + "/on");
            auto off = load_sample_dir(samples_dir + "/off");
            sf::WitnessSearchOptions opts;
            opts.prime_seed = prime_seed;
            opts.random_batch = batch;
            if (!seed_graph_path.empty())
                opts.seed_subgraph = sf::parse_model(seed_graph_path).framework.graph;
            auto found = sf::witness_subgraph_search(search_n, sf::ConditionId::standard(*kind),
                                                     on, off, opts);
            Json graphs = Json::array();
            for (const sf::Graph& g : found) graphs.push_back(graph_to_json(g));
            Json r = report_head("witness-search");
            r["inputs"] = Json{{"n", search_n},
                               {"condition", condition_name},
                               {"on_samples", static_cast<int>(on.size())},
                               {"off_samples", static_cast<int>(off.size())}};
            r["results"] = Json{{"count", static_cast<int>(found.size())},
                                {"graphs", std::move(graphs)}};
            r["provenance"] = Json{{"prime_seed", prime_seed}};
            emit(r);
        } else if (*surgery) {
            Json r = report_head("surgery");
            if (*sx) {
                sf::ParsedModel m = sf::parse_model(model_path);
                sf::Graph h(m.framework.vertex_count());
                for (const sf::Edge& e : parse_edge_list(h_edges)) h.add_edge(e.a, e.b);
                sf::SurgeryVerdict v =
                    sf::edge_exchange_check(m.framework.graph, h, parse_edge_flag(e1_text),
                                            parse_edge_flag(e2_text),
                                            m.framework.configuration);
                r["inputs"] = Json{{"kind", "edge-exchange"},
                                   {"model", sf::write_model(m.framework, m.roles)}};
                r["results"] = sf::verdict_to_json(v);
            } else if (*s2s) {
                sf::ParsedModel m1 = sf::parse_model(model_path);
                sf::ParsedModel m2 = sf::parse_model(model2_path);
                auto [sum, v] = sf::two_sum(m1.framework, parse_edge_flag(edge1_text),
                                            m2.framework, parse_edge_flag(edge2_text));
                r["inputs"] = Json{{"kind", "two-sum"},
                                   {"model1", sf::write_model(m1.framework, m1.roles)},
                                   {"model2", sf::write_model(m2.framework, m2.roles)}};
                r["results"] = sf::verdict_to_json(v);
                r["results"]["framework"] = sf::write_model(sum);
            } else if (*s1) {
                sf::ParsedModel m = sf::parse_model(model_path);
                sf::SurgerySite site;
                for (const char* role : {"a", "b", "x", "y", "w"})
                    site.roles[role] = vertex_role(m, role);
                auto [out, v] = sf::surgery1_apply(m.framework, site);
                r["inputs"] = Json{{"kind", "surgery1"},
                                   {"model", sf::write_model(m.framework, m.roles)}};
                r["results"] = sf::verdict_to_json(v);
                r["results"]["framework"] = sf::write_model(out);
            } else if (*s2) {
                sf::ParsedModel m1 = sf::parse_model(model_path);
                sf::ParsedModel m2 = sf::parse_model(model2_path);
                sf::SurgerySite site;
                for (const char* role : {"p", "q", "v1", "v4"})
                    site.roles[role] = vertex_role(m1, role);
                for (const char* role : {"r", "s"})
                    site.roles[role] = vertex_role(m2, role);
                sf::SurgeryVerdict v = sf::surgery2_verify(m1.framework, m2.framework, site);
                r["inputs"] = Json{{"kind", "surgery2"},
                                   {"model1", sf::write_model(m1.framework, m1.roles)},
                                   {"model2", sf::write_model(m2.framework, m2.roles)}};
                r["results"] = sf::verdict_to_json(v);
            } else if (*s3) {
                sf::ParsedModel m = sf::parse_model(model_path);
                sf::SurgerySite site;
                for (const char* role : {"v2", "v3", "v4", "e1", "e2", "e3", "e4", "e5", "e6"})
                    site.roles[role] = vertex_role(m, role);
                auto [out, v] = sf::surgery3d_verify(m.framework, site);
                r["inputs"] = Json{{"kind", "surgery3d"},
                                   {"model", sf::write_model(m.framework, m.roles)}};
                r["results"] = sf::verdict_to_json(v);
                r["results"]["framework"] = sf::write_model(out);
            }
            emit(r);
        } else if (*exporter) {
            const sf::Lambda4Complex& complex = sf::lambda4_arrangement();
            sf::export_svg(complex, out_path);
            Json r = report_head("export");
            r["results"] = Json{{"svg", out_path},
                                {"faces", complex.merged_face_count},
                                {"arcs", complex.stratum_arc_count},
                                {"arc_groups", Json::array({complex.arc_group_counts[0],
                                                            complex.arc_group_counts[1],
                                                            complex.arc_group_counts[2],
                                                            complex.arc_group_counts[3]})}};
            emit(r);
        }
    } catch (const sf::Error& e) {
        emit(sf::error_to_json(e));
        return 1;
    } catch (const std::exception& e) {
        emit(Json{{"error", "internal"}, {"message", e.what()}});
        return 1;
    }
    return 0;
}
