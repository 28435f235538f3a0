#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stressforge/model_io.hpp"
#include "stressforge/svg.hpp"
#include "test_support.hpp"

using namespace stressforge;

TEST_CASE("model parse and write round trip") {
    Json j = {{"dimension", 2},
              {"vertices", Json::array({Json::array({"0", "0"}),
                                        Json::array({"1", "1/3"}),
                                        Json::array({2, -5})})},
              {"edges", Json::array({Json::array({1, 2}), Json::array({2, 3})})},
              {"roles", Json{{"a", 1}, {"b", 3}}}};
    ParsedModel m = parse_model_json(j);
    CHECK(m.framework.vertex_count() == 3);
    CHECK(m.framework.configuration.at(2)[1] == Rational(1, 3));
    CHECK(m.framework.graph.has_edge(2, 3));
    CHECK(m.roles.at("b") == 3);

    Json written = write_model(m.framework, m.roles);
    ParsedModel again = parse_model_json(written);
    CHECK(again.framework.graph == m.framework.graph);
    CHECK(again.framework.configuration == m.framework.configuration);
    CHECK(again.roles == m.roles);
    CHECK(write_model(again.framework, again.roles) == written);
}

TEST_CASE("floats are rejected, not rounded") {
    Json j = {{"dimension", 2},
              {"vertices", Json::array({Json::array({0.5, 1}), Json::array({1, 2})})},
              {"edges", Json::array({Json::array({1, 2})})}};
    CHECK_THROWS_AS(parse_model_json(j), Error);
    try {
        parse_model_json(j);
    } catch (const Error& e) {
        CHECK(std::string(e.kind_name()) == "float-rejected");
    }

    Json bad_string = {{"dimension", 2},
                       {"vertices", Json::array({Json::array({"0.5", "1"}),
                                                 Json::array({"1", "2"})})},
                       {"edges", Json::array()}};
    CHECK_THROWS_AS(parse_model_json(bad_string), Error);
}

TEST_CASE("schema errors carry field detail") {
    CHECK_THROWS_AS(parse_model_json(Json::array()), Error);
    Json missing = {{"vertices", Json::array({Json::array({"1", "2"})})}};
    CHECK_THROWS_AS(parse_model_json(missing), Error);
    Json bad_edge = {{"dimension", 2},
                     {"vertices", Json::array({Json::array({"0", "0"}),
                                               Json::array({"1", "0"})})},
                     {"edges", Json::array({Json::array({1, 1})})}};
    CHECK_THROWS_AS(parse_model_json(bad_edge), Error);
}

TEST_CASE("report serialization is byte-deterministic") {
    std::mt19937_64 rng(7);
    Framework f = make_framework(Graph::complete(4), oracle::generic_config2(rng, 4));
    Json a = signature_to_json(fiber_signature(f));
    Json b = signature_to_json(fiber_signature(f));
    CHECK(dump_report(a) == dump_report(b));
    CHECK(dump_report(a).back() == '\n');
}

TEST_CASE("lambda4 svg export") {
    const Lambda4Complex& complex = lambda4_arrangement();
    std::string svg = lambda4_svg(complex);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("stroke-dasharray") != std::string::npos); // dashed equator
    CHECK(svg.find("\"v1v2v3\":6") != std::string::npos);
    CHECK(svg.find("\"v1v2v4\":6") != std::string::npos);
    CHECK(svg.find("\"v1v3v4\":6") != std::string::npos);
    CHECK(svg.find("\"v2v3v4\":6") != std::string::npos);
    int paths = 0;
    for (std::size_t pos = 0; (pos = svg.find("<path", pos)) != std::string::npos; ++pos)
        ++paths;
    CHECK(paths == 24);
    CHECK(svg == lambda4_svg(complex)); // deterministic

    CHECK_THROWS_AS(lambda4_svg(Lambda4Complex{}), Error);
}
