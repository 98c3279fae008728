#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "repcat/serialize.hpp"

namespace {

using namespace repcat;

// Flag or format combinations that make no sense get their own error type so
// they exit with the parse-error code rather than the domain-error one.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::fwrite(content.data(), 1, content.size(), stdout);
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + out_path);
  f.write(content.data(), (std::streamsize)content.size());
}

struct Common {
  int n = 3;
  int p = 1;
  std::string format;
  std::string out;
};

void add_common(CLI::App* sub, Common& c, const std::string& default_format) {
  c.format = default_format;
  sub->add_option("--n", c.n, "rank of the Dynkin diagram (>= 3)")
      ->required()
      ->check(CLI::Range(3, 64));
  sub->add_option("--p", c.p, "repetition parameter (>= 1)")->check(CLI::Range(1, 64));
  sub->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"json", "dot", "svg", "csv", "text"}));
  sub->add_option("--out", c.out, "write output to this file instead of stdout");
}

int cmd_quiver(const Common& c, const std::string& which) {
  std::string body;
  if (which == "gamma_circle") {
    if (c.format == "svg") {
      body = circle_to_svg(c.n, c.p);
    } else if (c.format == "json") {
      body = dump_json(doc_to_json(make_doc(build_gamma_circle(c.n, c.p))));
    } else if (c.format == "dot") {
      body = quiver_to_dot(build_gamma_circle(c.n, c.p));
    } else {
      throw UsageError("format " + c.format + " is not available for " + which);
    }
  } else {
    TranslationQuiver<DVertex> q = [&] {
      if (which == "gamma_np") return build_gamma_np(c.n, c.p);
      if (which == "gamma_full") return build_gamma_np(c.n * c.p, 1);
      if (which == "a_component") {
        if (c.p < 2)
          throw std::invalid_argument("a_component is empty for p = 1; it needs p >= 2");
        return a_component(c.n, c.p);
      }
      throw UsageError("unknown quiver: " + which);
    }();
    if (c.format == "json")
      body = dump_json(doc_to_json(make_doc(q)));
    else if (c.format == "dot")
      body = quiver_to_dot(q);
    else
      throw UsageError("format " + c.format + " is not available for " + which +
                       " (svg draws gamma_circle only)");
  }
  write_output(c.out, body);
  return 0;
}

int cmd_hom(const Common& c, const std::string& from, const std::string& to, bool ext) {
  const auto ef = parse_edge_literal(from);
  const auto et = parse_edge_literal(to);
  if (!ef || !et)
    throw ParseError("edge literals look like a:b:+ or a:b:-, got \"" +
                     (ef ? to : from) + "\"");
  require_edge(c.n, c.p, *ef);
  require_edge(c.n, c.p, *et);
  const DVertex x = phi_p_inverse(c.n, c.p, *ef);
  const DVertex y = phi_p_inverse(c.n, c.p, *et);
  const long long dim = ext ? ext1_orbit(c.n, c.p, x, y) : hom_orbit(c.n, c.p, x, y);

  std::string body;
  if (c.format == "text") {
    body = std::to_string(dim) + "\n";
  } else if (c.format == "json") {
    Json j;
    j["n"] = c.n;
    j["p"] = c.p;
    j["from"] = from;
    j["to"] = to;
    j["ext"] = ext;
    j["dim"] = dim;
    body = dump_json(j);
  } else {
    throw UsageError("hom prints text or json, not " + c.format);
  }
  write_output(c.out, body);
  return 0;
}

int cmd_verify(const Common& c, const std::string& suite) {
  struct Check {
    std::string name;
    std::vector<std::string> violations;
  };
  std::vector<Check> checks;
  const bool all = suite == "all";

  if (all || suite == "iso") checks.push_back({"iso", verify_phi_iso(c.n, c.p)});
  if (all || suite == "diagram") {
    checks.push_back({"diagram", verify_commutative_diagram(c.n, c.p)});
    checks.push_back({"shift-rotation", verify_f_rho(c.n, c.p)});
  }
  if (all || suite == "decomposition") {
    const auto d = decompose(c.n, c.p);
    checks.push_back({"decomposition", d.violations});
  }
  if (all || suite == "serre") {
    Check ck{"serre", {}};
    const HomOrbitTable table(c.n, c.p);
    for (const auto& x : table.objects())
      for (const auto& y : table.objects()) {
        const DVertex nu_x = canonicalize(c.n, c.p, serre_nu(c.n, x)).rep;
        if (table.hom(x, y) != table.hom(y, nu_x))
          ck.violations.push_back("duality fails at (" + label(x) + ", " + label(y) + ")");
      }
    checks.push_back(ck);
  }
  if (all || suite == "cy") {
    Check ck{"cy", {}};
    const auto gamma = build_gamma_np(c.n, c.p);
    for (const auto& v : gamma.quiver().vertices()) {
      DVertex a = v, b = v;
      for (int k = 0; k < c.p; ++k) a = serre_nu(c.n, a);
      for (int k = 0; k < 2 * c.p; ++k) b = shift1(c.n, b);
      if (canonicalize(c.n, c.p, a).rep != canonicalize(c.n, c.p, b).rep)
        ck.violations.push_back("nu^p and [2p] disagree at " + label(v));
    }
    checks.push_back(ck);
  }
  if (checks.empty()) throw UsageError("unknown suite: " + suite);

  bool ok = true;
  for (const auto& ck : checks) ok = ok && ck.violations.empty();

  std::string body;
  if (c.format == "json") {
    Json j;
    j["n"] = c.n;
    j["p"] = c.p;
    j["suite"] = suite;
    j["ok"] = ok;
    if (all || suite == "decomposition") j["components"] = c.p == 1 ? 1 : 2;
    j["checks"] = Json::array();
    for (const auto& ck : checks)
      j["checks"].push_back({{"name", ck.name},
                             {"ok", ck.violations.empty()},
                             {"violations", ck.violations}});
    body = dump_json(j);
  } else if (c.format == "text") {
    for (const auto& ck : checks) {
      body += ck.name + ": " + (ck.violations.empty() ? "ok" : "FAIL") + "\n";
      for (const auto& v : ck.violations) body += "  " + v + "\n";
    }
  } else {
    throw UsageError("verify prints json or text, not " + c.format);
  }
  write_output(c.out, body);
  return ok ? 0 : 1;
}

int cmd_tilting(const Common& c, const std::string& action,
                std::optional<long long> budget_ms) {
  SearchLimits limits;
  limits.budget_ms = budget_ms;

  if (c.format == "csv") {
    if (action != "enumerate")
      throw UsageError("csv output is the compatibility matrix; use the enumerate action");
    write_output(c.out, compatibility_csv(HomOrbitTable(c.n, c.p)));
    return 0;
  }

  const auto sets = enumerate_tilting(c.n, c.p, limits);
  auto literal_sets = [&] {
    std::vector<std::vector<std::string>> out;
    for (const auto& T : sets) {
      std::vector<TaggedEdge> edges;
      for (const auto& v : T) edges.push_back(phi_p(c.n, c.p, v));
      std::sort(edges.begin(), edges.end());
      std::vector<std::string> row;
      for (const auto& e : edges) row.push_back(label(e));
      out.push_back(row);
    }
    return out;
  };

  std::string body;
  int rc = 0;
  if (action == "count") {
    if (c.format == "text")
      body = std::to_string(sets.size()) + "\n";
    else if (c.format == "json") {
      Json j;
      j["n"] = c.n;
      j["p"] = c.p;
      j["count"] = sets.size();
      body = dump_json(j);
    } else {
      throw UsageError("count prints text or json, not " + c.format);
    }
  } else if (action == "enumerate") {
    const auto rows = literal_sets();
    if (c.format == "text") {
      for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) body += (i ? " " : "") + row[i];
        body += "\n";
      }
    } else if (c.format == "json") {
      Json j;
      j["n"] = c.n;
      j["p"] = c.p;
      j["count"] = rows.size();
      j["sets"] = rows;
      body = dump_json(j);
    } else {
      throw UsageError("enumerate prints text or json, not " + c.format);
    }
  } else if (action == "check") {
    std::vector<std::pair<std::size_t, std::vector<std::string>>> failures;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      auto bad = check_p_triangulation(c.n, c.p, sets[i]);
      if (!bad.empty()) failures.push_back({i, bad});
    }
    rc = failures.empty() ? 0 : 1;
    if (c.format == "text") {
      if (failures.empty()) {
        body = "checked " + std::to_string(sets.size()) +
               " sets: all are p-periodic triangulation pictures\n";
      } else {
        for (const auto& [i, bad] : failures) {
          body += "set " + std::to_string(i) + ":\n";
          for (const auto& v : bad) body += "  " + v + "\n";
        }
      }
    } else if (c.format == "json") {
      Json j;
      j["n"] = c.n;
      j["p"] = c.p;
      j["checked"] = sets.size();
      j["ok"] = failures.empty();
      j["failures"] = Json::array();
      for (const auto& [i, bad] : failures)
        j["failures"].push_back({{"index", i}, {"violations", bad}});
      body = dump_json(j);
    } else {
      throw UsageError("check prints text or json, not " + c.format);
    }
  } else {
    throw UsageError("unknown action: " + action);
  }
  write_output(c.out, body);
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two constructions of the repetitive cluster category of type D"};
  app.require_subcommand(1);

  Common qc, hc, vc, tc;
  std::string which = "gamma_np", from, to, suite = "all", action;
  bool ext = false;
  long long budget_flag = -1;

  auto* quiver = app.add_subcommand("quiver", "emit a translation quiver");
  add_common(quiver, qc, "json");
  quiver->add_option("--which", which, "gamma_np, gamma_circle, gamma_full or a_component")
      ->check(CLI::IsMember({"gamma_np", "gamma_circle", "gamma_full", "a_component"}));

  auto* hom = app.add_subcommand("hom", "hom or ext dimension between two tagged edges");
  add_common(hom, hc, "text");
  hom->add_option("--from", from, "source edge literal a:b:+|-")->required();
  hom->add_option("--to", to, "target edge literal a:b:+|-")->required();
  hom->add_flag("--ext", ext, "first extension group instead of hom");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  add_common(verify, vc, "json");
  verify->add_option("--suite", suite, "iso, diagram, decomposition, serre, cy or all")
      ->check(CLI::IsMember({"iso", "diagram", "decomposition", "serre", "cy", "all"}));

  auto* tilting = app.add_subcommand("tilting", "maximal compatible sets of tagged edges");
  add_common(tilting, tc, "text");
  tilting->add_option("action", action, "enumerate, count or check")
      ->required()
      ->check(CLI::IsMember({"enumerate", "count", "check"}));
  tilting->add_option("--budget", budget_flag, "search budget in milliseconds")
      ->envname("REPCAT_BUDGET_MS")
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (quiver->parsed()) return cmd_quiver(qc, which);
    if (hom->parsed()) return cmd_hom(hc, from, to, ext);
    if (verify->parsed()) return cmd_verify(vc, suite);
    if (tilting->parsed())
      return cmd_tilting(tc, action,
                         budget_flag >= 0 ? std::optional<long long>(budget_flag)
                                          : std::nullopt);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
