#include <sstream>

#include "doctest.h"
#include "oracles.hpp"

#include "bistable/builders/builders.hpp"
#include "bistable/io/dot.hpp"
#include "bistable/io/json_io.hpp"

using namespace bistable;
using io::Json;

namespace {

SystemSpec small_spec(const BuilderInfo& info) {
    SystemSpec spec{info.kind, {}, {}, {}};
    for (const auto& p : info.params) {
        spec.params[p] = (p == "r" || p == "a" || p == "b" || p == "pin_boundary") ? 1 : 4;
    }
    return spec;
}

// Edges "wA -- wB" or "vA -- vB" of a DOT graph, as vertex pairs.
std::vector<std::pair<std::size_t, std::size_t>> dot_edges(const std::string& dot) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    std::istringstream in(dot);
    std::string line;
    while (std::getline(in, line)) {
        const auto dash = line.find(" -- ");
        if (dash == std::string::npos) {
            continue;
        }
        const auto a = line.find_first_of("vw");
        const auto b = line.find_first_of("vw", dash);
        out.emplace_back(std::stoul(line.substr(a + 1, dash - a - 1)),
                         std::stoul(line.substr(b + 1, line.find(' ', b) - b - 1)));
    }
    return out;
}

std::size_t count_lines_with(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        n += line.find(needle) != std::string::npos ? 1 : 0;
    }
    return n;
}

} // namespace

TEST_CASE("complex JSON layout") {
    const auto j = io::complex_to_json(gear_ring(3).ambient());
    CHECK(io::dump(j) == R"({
  "vertices": 3,
  "edges": [
    [
      0,
      1
    ],
    [
      1,
      2
    ],
    [
      2,
      0
    ]
  ],
  "faces": [],
  "labels": {
    "kind": "gear_ring",
    "n": "3"
  }
}
)");
}

TEST_CASE("round trip through JSON for every catalog kind") {
    for (const auto& info : builder_catalog()) {
        CAPTURE(info.kind);
        const auto sys = build_system(small_spec(info));
        const auto j = io::system_to_json(sys);
        const auto text = io::dump(j);
        CHECK(io::dump(io::system_to_json(build_system(small_spec(info)))) == text);
        const auto back = io::system_from_json(Json::parse(text));
        CHECK(back.ambient().edges() == sys.ambient().edges());
        CHECK(back.ambient().faces() == sys.ambient().faces());
        CHECK(back.ambient().labels() == sys.ambient().labels());
        CHECK(back.constraint_edges() == sys.constraint_edges());
        CHECK(back.coupling() == sys.coupling());
        CHECK(back.twist_or_zero() == sys.twist_or_zero());
        CHECK(back.pinned() == sys.pinned());
        CHECK(io::dump(io::system_to_json(back)) == text);
        CHECK(io::dump(io::classification_to_json(back, classify(back))) ==
              io::dump(io::classification_to_json(sys, classify(sys))));
    }
}

TEST_CASE("optional fields") {
    const auto mobius = io::system_to_json(mobius_ring(4));
    REQUIRE(mobius.contains("twist"));
    CHECK(mobius["twist"] == Json::parse("[0,0,0,1]"));
    CHECK_FALSE(mobius.contains("pinned"));
    const auto path = io::system_to_json(necker_path(2));
    CHECK(path["pinned"] == Json::parse(R"({"0": 0, "2": 1})"));
    CHECK_FALSE(path.contains("twist"));
    // Booleans are accepted for bits.
    auto j = path;
    j["coupling"] = Json::parse("[false, false]");
    CHECK(io::system_from_json(j).coupling().none());
}

TEST_CASE("malformed input is rejected") {
    const auto good = io::system_to_json(necker_grid(2, 2));
    auto expect_error = [](const Json& j, const std::string& fragment) {
        CAPTURE(fragment);
        CHECK_THROWS_WITH_AS((void)io::system_from_json(j), doctest::Contains(fragment.c_str()), io::FormatError);
    };
    auto j = good;
    j.erase("coupling");
    expect_error(j, "missing field \"coupling\"");
    j = good;
    j["coupling"] = Json::parse("[0, 1]");
    expect_error(j, "expected 4 bits");
    j = good;
    j["coupling"][0] = 2;
    expect_error(j, "not 0 or 1");
    j = good;
    j["constraint_edges"].push_back(17);
    expect_error(j, "out of range");
    j = good;
    j["pinned"] = Json::parse(R"({"x": 1})");
    expect_error(j, "not a vertex index");
    j = good;
    j["complex"]["faces"][0] = Json::parse("[0, 1]");
    expect_error(j, "open face walk");
    j = good;
    j["complex"]["edges"][0] = Json::parse("[0, 9]");
    expect_error(j, "endpoint out of range");
    j = good;
    j["complex"]["vertices"] = -1;
    expect_error(j, "non-negative integer");
    j = good;
    j["pinned"] = Json::parse(R"({"0": 1})");
    j["coupling"][0] = 1;
    CHECK_NOTHROW((void)io::system_from_json(j));
    CHECK_THROWS_AS((void)io::read_json_file("/nonexistent/file.json"), std::runtime_error);
}

TEST_CASE("classification JSON") {
    const auto odd = gear_ring(5);
    const auto j = io::classification_to_json(odd, classify(odd));
    CHECK(j["level"] == "Impossibility");
    CHECK(j["witness"]["kind"] == "odd_cycle");
    CHECK(j["witness"]["length"] == 5);
    CHECK(j["coupling_class"] == Json::parse("[1]"));

    const auto path = necker_path(3);
    const auto c = io::classification_to_json(path, classify(path));
    CHECK(c["level"] == "Conflict");
    CHECK(c["witness"]["kind"] == "pin_clash");
    CHECK(c["relative_class"]["degree"] == 1);
    CHECK(c["relative_class"]["coordinates"] == Json::parse("[1]"));

    const auto grid = necker_grid(3, 3);
    const auto a = io::classification_to_json(grid, classify(grid));
    CHECK(a["level"] == "Ambiguity");
    CHECK(a["witness"].is_null());
    CHECK(a["section_count_log2"] == 1);
}

TEST_CASE("trace JSON") {
    const auto r = circuit_monodromy(gear_ring(5), 2, 1);
    const auto j = io::trace_to_json(r);
    CHECK(j["flip"] == 1);
    REQUIRE(j["steps"].size() == 6);
    CHECK(j["steps"][0]["window"] == Json::parse("[0, 1]"));
    CHECK(j["steps"][0]["display"] == Json::parse("[0, 1]"));
    CHECK(j["steps"][5]["display"] == Json::parse("[1, 0]"));
}

TEST_CASE("system DOT") {
    const auto dot = io::system_to_dot(gear_ring(3));
    CHECK(dot == "graph system {\n"
                 "  node [shape=circle];\n"
                 "  v0 [label=\"0\"];\n"
                 "  v1 [label=\"1\"];\n"
                 "  v2 [label=\"2\"];\n"
                 "  v0 -- v1 [label=\"e0\", color=red];\n"
                 "  v1 -- v2 [label=\"e1\", color=red];\n"
                 "  v2 -- v0 [label=\"e2\", color=red];\n"
                 "}\n");
    CHECK(io::system_to_dot(gear_ring(3)) == dot);
    const auto pinned = io::system_to_dot(necker_path(2));
    CHECK(count_lines_with(pinned, "fillcolor") == 2);
    CHECK(count_lines_with(io::system_to_dot(p3_rosette()), "style=dashed") == 5);
}

TEST_CASE("cover DOT components") {
    const auto odd = io::cover_to_dot(build_cover(gear_ring(5)));
    CHECK(count_lines_with(odd, "[label=\"") - count_lines_with(odd, " -- ") == 10);
    const auto odd_edges = dot_edges(odd);
    CHECK(odd_edges.size() == 10);
    CHECK(oracle::component_count(10, odd_edges) == 1);
    // Every coupling opposes, so both lifts of every edge cross sheets.
    CHECK(count_lines_with(odd, "color=red") == 10);
    CHECK(count_lines_with(io::cover_to_dot(build_cover(necker_grid(2, 2))), "color=red") == 0);

    const auto even = io::cover_to_dot(build_cover(gear_ring(6)));
    const auto even_edges = dot_edges(even);
    CHECK(even_edges.size() == 12);
    CHECK(oracle::component_count(12, even_edges) == 2);
    CHECK(count_lines_with(even, "subgraph cluster_sheet") == 2);
}
