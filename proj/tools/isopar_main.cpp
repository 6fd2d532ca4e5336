// Command-line front end.  Every subcommand assembles a JSON request, hands
// it to the shared library through the C gateway, writes the JSON report to
// the --out path, and maps the gateway status straight onto the exit code:
// 0 pass, 1 check failed, 2 bad request or usage, 3 budget exceeded.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "isopar.h"

using json = nlohmann::json;

namespace {

struct Options {
  // report + shared tuning
  std::string out = "report.json";
  std::string order = "grevlex";
  std::string scalar = "rational";
  long budget_basis = -1;
  long budget_degree = -1;
  long budget_pairs = -1;
  long budget_points = -1;
  // operation inputs
  std::string ring_csv;
  std::string text;
  std::string ideal_file;
  std::string poly_text;
  std::string point;
  std::string seq_file;
  std::string p_file;
  std::string q_file;
  std::string family_file;
  std::string save_path;
  std::string lambda_csv;
  int r = -1;
  int bound = 3;
  int m = -1;
  int k = -1;
  int count = -1;
  int kstage = 0;
};

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',' || c == ' ' || c == '\t') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

long scalar_d_of(const std::string& spec) {
  if (spec == "rational") return 0;
  if (spec.rfind("quadext:", 0) == 0) {
    try {
      long d = std::stol(spec.substr(8));
      if (d >= 2) return d;
    } catch (...) {
    }
  }
  throw CLI::ValidationError("--scalar",
                             "expected 'rational' or 'quadext:d' with d >= 2");
}

// "re[:im],re[:im],..." -> [[re, im], ...] with rational components
json lambda_json_of(const std::string& csv) {
  json arr = json::array();
  for (const std::string& tok : split_csv(csv)) {
    auto colon = tok.find(':');
    std::string re = tok.substr(0, colon);
    std::string im = colon == std::string::npos ? "0" : tok.substr(colon + 1);
    if (re.empty()) re = "0";
    if (im.empty()) im = "0";
    arr.push_back(json::array({re, im}));
  }
  if (arr.empty())
    throw CLI::ValidationError("--lambda",
                               "expected coefficients 're[:im],re[:im],...'");
  return arr;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  json req;
  bool have = false;

  auto put_budget = [&] {
    json b = json::object();
    if (o.budget_basis >= 0) b["max_basis"] = o.budget_basis;
    if (o.budget_degree >= 0) b["max_degree"] = o.budget_degree;
    if (o.budget_pairs >= 0) b["max_pairs"] = o.budget_pairs;
    if (o.budget_points >= 0) b["max_points"] = o.budget_points;
    if (!b.empty()) req["budget"] = std::move(b);
  };
  auto put_family = [&] {
    if (!o.family_file.empty()) {
      req["file"] = o.family_file;
      return;
    }
    if (o.m >= 0 && o.k >= 0) {
      req["m"] = o.m;
      req["k"] = o.k;
      return;
    }
    throw CLI::ValidationError(
        "family", "pass either --family FILE or both --m and --k");
  };
  auto add_common = [&](CLI::App* c) {
    c->add_option("--out", o.out, "report file path")->capture_default_str();
    c->add_option("--budget-basis", o.budget_basis,
                  "cap on Groebner basis size");
    c->add_option("--budget-degree", o.budget_degree,
                  "cap on polynomial degree during reductions");
    c->add_option("--budget-pairs", o.budget_pairs,
                  "cap on critical pairs processed");
    c->add_option("--budget-points", o.budget_points,
                  "cap on search points examined");
  };
  // Single callback per leaf: fill the shared fields, then the extras.
  auto finish = [&](CLI::App* c, const char* op,
                    std::function<void()> extra = {}) {
    c->callback([&, op, extra] {
      req["op"] = op;
      put_budget();
      if (extra) extra();
      have = true;
    });
  };

  CLI::App app{
      "exact-arithmetic workbench for polynomial ideals, regular sequences, "
      "Clifford systems, and isoparametric quartics"};
  app.require_subcommand(1);

  // ---- poly ------------------------------------------------------------
  CLI::App* poly = app.add_subcommand(
      "poly", "parse a polynomial and print its canonical form");
  poly->add_option("--ring", o.ring_csv, "comma-separated variable names")
      ->required();
  poly->add_option("--text", o.text, "polynomial expression")->required();
  poly->add_option("--order", o.order, "monomial order: grevlex or lex")
      ->capture_default_str();
  poly->add_option("--scalar", o.scalar, "scalar field: rational or quadext:d")
      ->capture_default_str();
  add_common(poly);
  finish(poly, "poly.canon", [&] {
    json names = json::array();
    for (const auto& n : split_csv(o.ring_csv)) names.push_back(n);
    req["ring"] = std::move(names);
    req["text"] = o.text;
    req["order"] = o.order;
    req["scalar_d"] = scalar_d_of(o.scalar);
  });

  // ---- ideal -----------------------------------------------------------
  CLI::App* ideal = app.add_subcommand("ideal", "ideal-theoretic computations");
  ideal->require_subcommand(1);
  auto ideal_leaf = [&](const char* name, const char* desc, const char* op,
                        bool needs_poly, std::function<void()> extra = {}) {
    CLI::App* c = ideal->add_subcommand(name, desc);
    c->add_option("--ideal,--file", o.ideal_file, "ideal file")->required();
    if (needs_poly)
      c->add_option("--poly", o.poly_text, "polynomial to test")->required();
    add_common(c);
    finish(c, op, [&, needs_poly, extra] {
      req["file"] = o.ideal_file;
      if (needs_poly) req["poly"] = o.poly_text;
      if (extra) extra();
    });
    return c;
  };
  CLI::App* gb = ideal_leaf("gb", "reduced Groebner basis", "ideal.gb", false,
                            [&] { req["order"] = o.order; });
  gb->add_option("--order", o.order, "monomial order: grevlex or lex")
      ->capture_default_str();
  ideal_leaf("member", "ideal membership test", "ideal.member", true);
  ideal_leaf("radmember", "radical membership test", "ideal.radmember", true);
  ideal_leaf("quotient", "ideal quotient I : (f)", "ideal.quotient", true);
  ideal_leaf("dim", "Krull dimension of the zero set", "ideal.dim", false);
  CLI::App* sing = ideal_leaf(
      "singular", "singular locus via Jacobian minors", "ideal.singular",
      false, [&] {
        if (o.r >= 0) req["r"] = o.r;
      });
  sing->add_option("--r", o.r, "expected codimension (minor size)");
  CLI::App* edim =
      ideal_leaf("edim", "embedding dimension at a point", "ideal.edim",
                 false, [&] { req["point"] = o.point; });
  edim->add_option("--point", o.point, "rational point 'a,b,...'")->required();

  // ---- regseq ----------------------------------------------------------
  CLI::App* regseq =
      app.add_subcommand("regseq", "regular-sequence certification");
  regseq->require_subcommand(1);
  auto regseq_leaf = [&](const char* name, const char* desc, const char* op) {
    CLI::App* c = regseq->add_subcommand(name, desc);
    c->add_option("--file", o.seq_file, "generator file")->required();
    add_common(c);
    finish(c, op, [&] { req["file"] = o.seq_file; });
    return c;
  };
  regseq_leaf("check", "direct zero-divisor pipeline", "regseq.check");
  regseq_leaf("generatereg", "dimension-based certification pipeline",
              "regseq.generatereg");
  regseq_leaf("serre-reduced", "reducedness via the singular-locus bound",
              "regseq.serre-reduced");
  regseq_leaf("serre-prime", "primeness via the codimension-two bound",
              "regseq.serre-prime");
  auto two_file_leaf = [&](const char* name, const char* desc, const char* op,
                           std::function<void()> extra = {}) {
    CLI::App* c = regseq->add_subcommand(name, desc);
    c->add_option("--p", o.p_file, "sequence file for p")->required();
    c->add_option("--q", o.q_file, "syzygy file for q")->required();
    add_common(c);
    finish(c, op, [&, extra] {
      req["p_file"] = o.p_file;
      req["q_file"] = o.q_file;
      if (extra) extra();
    });
    return c;
  };
  CLI::App* koszul = two_file_leaf(
      "koszul", "antisymmetric decomposition of a syzygy", "regseq.koszul",
      [&] { req["bound"] = o.bound; });
  koszul->add_option("--bound", o.bound, "degree cap for the search")
      ->capture_default_str();
  two_file_leaf("solve-rab", "degree-1 antisymmetric solve with self-check",
                "regseq.solve-rab");

  // ---- clifford ----------------------------------------------------------
  CLI::App* clifford =
      app.add_subcommand("clifford", "symmetric Clifford systems");
  clifford->require_subcommand(1);
  CLI::App* cbuild = clifford->add_subcommand(
      "build", "construct the system for (m, k) and verify it");
  cbuild->add_option("-m,--m", o.m, "number of anticommuting operators is m+1")
      ->required();
  cbuild->add_option("-k,--k", o.k, "multiplicity of the irreducible block")
      ->required();
  cbuild->add_option("--save", o.save_path, "write the matrices to this file");
  add_common(cbuild);
  finish(cbuild, "clifford.build", [&] {
    req["m"] = o.m;
    req["k"] = o.k;
    if (!o.save_path.empty()) req["out"] = o.save_path;
  });
  CLI::App* cverify = clifford->add_subcommand(
      "verify", "check symmetry, squares, and anticommutators from a file");
  cverify->add_option("--file", o.seq_file, "matrix file")->required();
  add_common(cverify);
  finish(cverify, "clifford.verify", [&] { req["file"] = o.seq_file; });

  // ---- fkm ---------------------------------------------------------------
  CLI::App* fkm =
      app.add_subcommand("fkm", "isoparametric quartics of Clifford type");
  fkm->require_subcommand(1);
  auto fkm_leaf = [&](const char* name, const char* desc, const char* op,
                      bool with_point, std::function<void()> extra = {}) {
    CLI::App* c = fkm->add_subcommand(name, desc);
    c->add_option("-m,--m", o.m, "Clifford system parameter m");
    c->add_option("-k,--k", o.k, "Clifford system parameter k");
    c->add_option("--family", o.family_file,
                  "quartic family file (alternative to --m/--k)");
    if (with_point)
      c->add_option("--point", o.point,
                    "focal point 'a,b,...' (default: first search hit)");
    add_common(c);
    finish(c, op, [&, with_point, extra] {
      put_family();
      if (with_point && !o.point.empty()) req["point"] = o.point;
      if (extra) extra();
    });
    return c;
  };
  CLI::App* fbuild =
      fkm_leaf("build", "construct the quartic for (m, k)", "fkm.build", false,
               [&] {
                 if (!o.save_path.empty()) req["out"] = o.save_path;
               });
  fbuild->add_option("--save", o.save_path, "write the family to this file");
  fkm_leaf("verify-munzner",
           "check the gradient and Laplacian identities exactly",
           "fkm.verify-munzner", false);
  CLI::App* focal =
      fkm_leaf("focal", "search for focal points with exact frames",
               "fkm.focal", false,
               [&] { req["count"] = o.count < 0 ? 1 : o.count; });
  focal->add_option("--count", o.count, "maximum points to return");
  fkm_leaf("shape", "shape operators at a focal point", "fkm.shape", true);
  fkm_leaf("expand", "normal-form expansion around a focal point",
           "fkm.expand", true);
  fkm_leaf("identities", "the expansion identity suite", "fkm.identities",
           true);
  fkm_leaf("rab", "antisymmetric kernel field and Clifford-like relations",
           "fkm.rab", true);
  CLI::App* conda =
      fkm_leaf("condition-a", "scan focal points for a full common kernel",
               "fkm.condition-a", false,
               [&] { req["count"] = o.count < 0 ? 25 : o.count; });
  conda->add_option("--count", o.count, "maximum points to scan");
  CLI::App* pencil =
      fkm_leaf("pencil", "complex pencil of shape operators", "fkm.pencil",
               true, [&] { req["lambda"] = lambda_json_of(o.lambda_csv); });
  pencil
      ->add_option("--lambda", o.lambda_csv,
                   "pencil coefficients 're[:im],re[:im],...'")
      ->required();
  CLI::App* codim =
      fkm_leaf("codim", "exact dimension bounds for the expansion ideal",
               "fkm.codim", true, [&] { req["kstage"] = o.kstage; });
  codim->add_option("--kstage", o.kstage, "last generator index included")
      ->capture_default_str();
  CLI::App* vall = fkm->add_subcommand(
      "verify-all", "the full verification pipeline for (m, k)");
  vall->add_option("-m,--m", o.m, "Clifford system parameter m")->required();
  vall->add_option("-k,--k", o.k, "Clifford system parameter k")->required();
  add_common(vall);
  finish(vall, "fkm.verify-all", [&] {
    req["m"] = o.m;
    req["k"] = o.k;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (!have) {
    std::cerr << "error: no operation selected\n";
    return 2;
  }

  char* report = nullptr;
  isopar_status st = isopar_execute(req.dump().c_str(), &report);
  if (st == ISOPAR_OK || st == ISOPAR_CHECK_FAILED) {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write report to " << o.out << "\n";
      isopar_free(report);
      return 2;
    }
    f << report;
    f.close();
    std::cout << (st == ISOPAR_OK ? "pass" : "fail") << ": "
              << req["op"].get<std::string>() << " (report: " << o.out
              << ")\n";
    isopar_free(report);
    return static_cast<int>(st);
  }
  std::cerr << "error: " << isopar_last_error() << "\n";
  return static_cast<int>(st);
}
