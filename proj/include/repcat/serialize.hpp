#pragma once

#include <cmath>
#include <cstdio>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cluster_tilting.hpp"

namespace repcat {

using Json = nlohmann::ordered_json;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Serialized documents keep everything in the container orders of the source
// objects, which are themselves sorted, so emission is byte-deterministic.

inline std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

struct QuiverDoc {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> arrows;
  std::vector<std::pair<std::string, std::string>> tau;

  friend bool operator==(const QuiverDoc&, const QuiverDoc&) = default;
};

template <class V>
QuiverDoc make_doc(const TranslationQuiver<V>& tq) {
  QuiverDoc doc;
  for (const auto& v : tq.quiver().vertices()) {
    doc.vertices.push_back(label(v));
    if (auto t = tq.tau_of(v)) doc.tau.push_back({label(v), label(*t)});
  }
  for (const auto& [s, t] : tq.quiver().arrows()) doc.arrows.push_back({label(s), label(t)});
  return doc;
}

inline Json doc_to_json(const QuiverDoc& doc) {
  Json j;
  j["vertices"] = doc.vertices;
  j["arrows"] = Json::array();
  for (const auto& [s, t] : doc.arrows) j["arrows"].push_back({{"src", s}, {"tgt", t}});
  j["tau"] = Json::array();
  for (const auto& [f, t] : doc.tau) j["tau"].push_back({{"from", f}, {"to", t}});
  return j;
}

// Parses and validates a quiver document. Malformed JSON or a missing/mistyped
// field is a ParseError; structurally sound JSON describing an inconsistent
// quiver (unknown endpoints, duplicate translation entries) is an
// invalid_argument, mirroring the distinction the command line makes between
// unreadable input and readable input that fails validation.
inline QuiverDoc parse_quiver_doc(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j.contains("arrows") || !j.contains("tau"))
    throw ParseError("quiver document needs vertices, arrows and tau");

  QuiverDoc doc;
  if (!j["vertices"].is_array()) throw ParseError("vertices must be an array");
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) throw ParseError("vertex entries must be strings");
    doc.vertices.push_back(v.get<std::string>());
  }
  auto read_pairs = [&](const char* key, const char* a, const char* b,
                        std::vector<std::pair<std::string, std::string>>& out) {
    if (!j[key].is_array()) throw ParseError(std::string(key) + " must be an array");
    for (const auto& e : j[key]) {
      if (!e.is_object() || !e.contains(a) || !e.contains(b) || !e[a].is_string() ||
          !e[b].is_string())
        throw ParseError(std::string(key) + " entries must be objects with " + a + " and " + b);
      out.push_back({e[a].get<std::string>(), e[b].get<std::string>()});
    }
  };
  read_pairs("arrows", "src", "tgt", doc.arrows);
  read_pairs("tau", "from", "to", doc.tau);

  std::set<std::string> known(doc.vertices.begin(), doc.vertices.end());
  if (known.size() != doc.vertices.size())
    throw std::invalid_argument("duplicate vertex labels");
  for (const auto& [s, t] : doc.arrows)
    if (!known.count(s) || !known.count(t))
      throw std::invalid_argument("arrow endpoint is not a listed vertex");
  std::set<std::string> tau_from;
  for (const auto& [f, t] : doc.tau) {
    if (!known.count(f) || !known.count(t))
      throw std::invalid_argument("translation endpoint is not a listed vertex");
    if (!tau_from.insert(f).second)
      throw std::invalid_argument("duplicate translation entry for " + f);
  }
  return doc;
}

// DOT output: plain arrows for the quiver, dotted non-constraining back edges
// for the translation.
template <class V>
std::string quiver_to_dot(const TranslationQuiver<V>& tq) {
  std::string out = "digraph quiver {\n  rankdir=LR;\n  node [shape=box, fontsize=10];\n";
  for (const auto& v : tq.quiver().vertices()) out += "  \"" + label(v) + "\";\n";
  for (const auto& [s, t] : tq.quiver().arrows())
    out += "  \"" + label(s) + "\" -> \"" + label(t) + "\";\n";
  for (const auto& v : tq.quiver().vertices())
    if (auto t = tq.tau_of(v))
      out += "  \"" + label(v) + "\" -> \"" + label(*t) +
             "\" [style=dotted, constraint=false];\n";
  out += "}\n";
  return out;
}

namespace detail {

// All SVG numbers go through one fixed-width formatter so the bytes do not
// depend on locale or printf defaults.
inline std::string fmt3(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

struct Pt {
  double x, y;
};

}  // namespace detail

// Draws the tagged edges of the punctured polygon. Boundary vertex k sits at
// angle 2*pi*(k-1)/N counterclockwise from the positive x axis; the puncture
// is the center dot. Non-loops are quadratic arcs bowing toward the center by
// an amount growing with their span, loops are radial segments to the
// puncture, and a negatively tagged loop carries a short perpendicular tick.
inline std::string circle_to_svg(int n, int p) {
  require_params(n, p);
  const int N = n * p;
  const double cx = 256, cy = 256, R = 200;
  const double pi = 3.14159265358979323846;
  auto at = [&](double turn_angle, double r) {
    return detail::Pt{cx + r * std::cos(turn_angle), cy - r * std::sin(turn_angle)};
  };
  auto vertex_angle = [&](int k) { return 2 * pi * (k - 1) / N; };
  auto xy = [&](const detail::Pt& p2) {
    return detail::fmt3(p2.x) + "," + detail::fmt3(p2.y);
  };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"512\" height=\"512\" "
         "viewBox=\"0 0 512 512\">\n";
  out += "<rect width=\"512\" height=\"512\" fill=\"white\"/>\n";
  out += "<circle cx=\"" + detail::fmt3(cx) + "\" cy=\"" + detail::fmt3(cy) + "\" r=\"" +
         detail::fmt3(R) + "\" fill=\"none\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";

  for (const auto& e : enumerate_edges(n, p)) {
    const detail::Pt pa = at(vertex_angle(e.a), R);
    if (e.loop()) {
      out += "<line x1=\"" + detail::fmt3(pa.x) + "\" y1=\"" + detail::fmt3(pa.y) +
             "\" x2=\"" + detail::fmt3(cx) + "\" y2=\"" + detail::fmt3(cy) +
             "\" stroke=\"#d29922\" stroke-width=\"1.5\"/>\n";
      if (e.tag < 0) {
        // Tick crossing the segment at 85% of the way to the puncture.
        const double th = vertex_angle(e.a);
        const detail::Pt m = at(th, 0.15 * R);
        const detail::Pt u = {6 * std::sin(th), 6 * std::cos(th)};
        out += "<line x1=\"" + detail::fmt3(m.x - u.x) + "\" y1=\"" + detail::fmt3(m.y - u.y) +
               "\" x2=\"" + detail::fmt3(m.x + u.x) + "\" y2=\"" + detail::fmt3(m.y + u.y) +
               "\" stroke=\"#d29922\" stroke-width=\"1.5\"/>\n";
      }
      continue;
    }
    // Control point halfway along the clockwise sweep from a to b, pulled
    // toward the center in proportion to the span.
    const int span = delta_length(n, p, e);
    const double tha = vertex_angle(e.a);
    const double mid = tha - pi * (span - 1) / N;
    const double rc = R * (1.0 - 0.9 * span / (N + 1));
    const detail::Pt pb = at(vertex_angle(e.b), R);
    const detail::Pt pc = at(mid, rc);
    out += "<path d=\"M " + xy(pa) + " Q " + xy(pc) + " " + xy(pb) +
           "\" fill=\"none\" stroke=\"#1f6feb\" stroke-width=\"1.5\"/>\n";
  }

  out += "<circle cx=\"" + detail::fmt3(cx) + "\" cy=\"" + detail::fmt3(cy) +
         "\" r=\"4.000\" fill=\"black\"/>\n";
  for (int k = 1; k <= N; ++k) {
    const detail::Pt pk = at(vertex_angle(k), R);
    const detail::Pt pl = at(vertex_angle(k), R + 14);
    out += "<circle cx=\"" + detail::fmt3(pk.x) + "\" cy=\"" + detail::fmt3(pk.y) +
           "\" r=\"3.000\" fill=\"black\"/>\n";
    out += "<text x=\"" + detail::fmt3(pl.x) + "\" y=\"" + detail::fmt3(pl.y) +
           "\" font-size=\"11\" text-anchor=\"middle\" dominant-baseline=\"middle\">" +
           std::to_string(k) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

// Compatibility matrix as CSV, rows and columns in object order labelled by
// the corresponding tagged edges.
inline std::string compatibility_csv(const HomOrbitTable& table) {
  const auto& objs = table.objects();
  std::vector<std::string> names;
  for (const auto& v : objs) names.push_back(label(phi_p(table.n(), table.p(), v)));
  std::string out = "edge";
  for (const auto& s : names) out += "," + s;
  out += "\n";
  for (int i = 0; i < (int)objs.size(); ++i) {
    out += names[i];
    for (int j = 0; j < (int)objs.size(); ++j)
      out += table.compatible_by_index(i, j) || i == j ? ",1" : ",0";
    out += "\n";
  }
  return out;
}

}  // namespace repcat
