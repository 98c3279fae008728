#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <sstream>

#include "repcat/serialize.hpp"

using namespace repcat;

TEST_CASE("quiver json round trip", "[serialize]") {
  for (auto [n, p] : {std::pair{3, 1}, {3, 2}, {4, 2}}) {
    const auto gamma = build_gamma_np(n, p);
    const auto doc = make_doc(gamma);
    const std::string text = dump_json(doc_to_json(doc));
    const auto back = parse_quiver_doc(text);
    CHECK(back == doc);
    CHECK(dump_json(doc_to_json(back)) == text);  // byte-identical re-emission

    const auto circle = build_gamma_circle(n, p);
    const std::string ctext = dump_json(doc_to_json(make_doc(circle)));
    CHECK(dump_json(doc_to_json(parse_quiver_doc(ctext))) == ctext);
  }
}

TEST_CASE("quiver json shape", "[serialize]") {
  const auto j = doc_to_json(make_doc(build_gamma_np(3, 1)));
  REQUIRE(j.contains("vertices"));
  REQUIRE(j.contains("arrows"));
  REQUIRE(j.contains("tau"));
  CHECK(j["vertices"].size() == 9);
  CHECK(j["arrows"].size() == 12);
  CHECK(j["tau"].size() == 9);
  CHECK(j["arrows"][0].contains("src"));
  CHECK(j["arrows"][0].contains("tgt"));
  CHECK(j["tau"][0].contains("from"));
  CHECK(j["tau"][0].contains("to"));
}

TEST_CASE("quiver json parse failures", "[serialize]") {
  CHECK_THROWS_AS(parse_quiver_doc("not json at all"), ParseError);
  CHECK_THROWS_AS(parse_quiver_doc("[1,2,3]"), ParseError);
  CHECK_THROWS_AS(parse_quiver_doc(R"({"vertices":["a"],"arrows":[]})"), ParseError);
  CHECK_THROWS_AS(parse_quiver_doc(R"({"vertices":["a"],"arrows":[{"src":"a"}],"tau":[]})"),
                  ParseError);
  // Well-formed but inconsistent content.
  CHECK_THROWS_AS(
      parse_quiver_doc(R"({"vertices":["a","a"],"arrows":[],"tau":[]})"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      parse_quiver_doc(R"({"vertices":["a"],"arrows":[{"src":"a","tgt":"b"}],"tau":[]})"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      parse_quiver_doc(
          R"({"vertices":["a","b"],"arrows":[],"tau":[{"from":"a","to":"b"},{"from":"a","to":"a"}]})"),
      std::invalid_argument);
}

TEST_CASE("dot output", "[serialize]") {
  const auto gamma = build_gamma_np(3, 1);
  const std::string dot = quiver_to_dot(gamma);
  CHECK(dot.rfind("digraph quiver {", 0) == 0);
  CHECK(dot.find("\"0:0bar\";") != std::string::npos);
  CHECK(dot.find("\"0:1\" -> \"0:0\";") != std::string::npos);
  CHECK(dot.find("[style=dotted, constraint=false]") != std::string::npos);
  CHECK(dot.back() == '\n');
  CHECK(quiver_to_dot(gamma) == dot);  // deterministic
  // Translation edges appear once per vertex.
  std::size_t count = 0;
  for (std::size_t pos = 0; (pos = dot.find("style=dotted", pos)) != std::string::npos; ++pos)
    ++count;
  CHECK(count == gamma.quiver().vertices().size());
}

TEST_CASE("svg output", "[serialize]") {
  const std::string svg = circle_to_svg(3, 2);
  CHECK(svg.rfind("<svg ", 0) == 0);
  CHECK(svg.find("width=\"512\"") != std::string::npos);
  // One radial segment per loop plus one tick per negative tag.
  std::size_t lines = 0;
  for (std::size_t pos = 0; (pos = svg.find("<line ", pos)) != std::string::npos; ++pos)
    ++lines;
  CHECK(lines == 12 + 6);
  // One arc per non-loop.
  std::size_t paths = 0;
  for (std::size_t pos = 0; (pos = svg.find("<path ", pos)) != std::string::npos; ++pos)
    ++paths;
  CHECK(paths == 6);
  // Vertex 1 sits at angle zero: x = 256 + 200, y = 256.
  CHECK(svg.find("cx=\"456.000\" cy=\"256.000\"") != std::string::npos);
  CHECK(circle_to_svg(3, 2) == svg);
  for (const char* bad : {"\"nan", ",nan", " nan", "-nan", "inf"})
    CHECK(svg.find(bad) == std::string::npos);
}

TEST_CASE("compatibility csv", "[serialize]") {
  const HomOrbitTable table(3, 1);
  const std::string csv = compatibility_csv(table);
  CHECK(csv.rfind("edge,", 0) == 0);
  // Header plus one row per object.
  std::size_t rows = std::count(csv.begin(), csv.end(), '\n');
  CHECK(rows == 1 + table.objects().size());
  // The matrix is 0/1 with unit diagonal.
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  int r = 0;
  while (std::getline(in, line)) {
    std::size_t first = line.find(',');
    REQUIRE(first != std::string::npos);
    std::string cells = line.substr(first);
    REQUIRE(cells.size() == 2 * table.objects().size());
    CHECK(cells[2 * r + 1] == '1');
    ++r;
  }
}
