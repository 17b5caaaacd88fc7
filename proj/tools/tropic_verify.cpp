// Command-line front end: builds instances, runs the checks, prints JSON reports.
#include "tropic/checks.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace tropic;

namespace {

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks Riemann-Roch and Euler characteristic identities on tropical instances"};
  app.require_subcommand(1);
  std::uint64_t seed = 1;
  std::string json_out;
  long long max_degree = 3;
  int retries = 20;
  app.add_option("--seed", seed, "Seed for instance generation")->capture_default_str();
  app.add_option("--json-out", json_out, "Write the report here instead of stdout");
  app.add_option("--max-degree", max_degree, "Largest degree to generate")->capture_default_str();
  app.add_option("--retries", retries, "Redraws allowed for a smooth instance")->capture_default_str();

  auto* tpn = app.add_subcommand("tpn", "Hypersurfaces in TP^n: RR, lattice count, Euler calculus");
  std::size_t n = 2;
  long long degree = 0;
  tpn->add_option("--n", n, "Dimension (1..3)")->capture_default_str();
  tpn->add_option("--degree", degree, "Single degree; default runs 1..max-degree");

  auto* surface = app.add_subcommand("surface", "Smooth curve of polygon class on a toric surface");
  std::string polygon_file;
  int random_count = 0;
  surface->add_option("--polygon", polygon_file, "Polygon JSON {\"vertices\": [[x, y], ...]}");
  surface->add_option("--random", random_count, "Number of seeded random Delzant polygons");

  auto* bertini = app.add_subcommand("bertini", "Pairs of curves on TP^2 or TP^1 x TP^1");
  std::string ambient = "TP2";
  std::vector<long long> dclass, dpclass;
  int pair_count = 0;
  bertini->add_option("--ambient", ambient, "TP2 or TP1xTP1")->check(CLI::IsMember({"TP2", "TP1xTP1"}));
  bertini->add_option("--d", dclass, "Class of D: degree on TP2, bidegree on TP1xTP1");
  bertini->add_option("--dprime", dpclass, "Class of D'");
  bertini->add_option("--random", pair_count, "Number of seeded random pairs");

  auto* curve = app.add_subcommand("curve", "Curve suite on a graph with a divisor");
  std::string graph_file;
  curve->add_option("--graph", graph_file, "Graph JSON")->required();

  auto* csm = app.add_subcommand("csm", "Matroid suite: Bergman fan, CSM cycles, beta invariant");
  std::string matroid_file;
  int catalogue = 0;
  csm->add_option("--matroid", matroid_file, "Matroid JSON (1-based bases)");
  csm->add_option("--catalogue", catalogue, "Run the catalogue of matroids up to this size");

  auto* hyper = app.add_subcommand("hypersurface", "Duality and complement checks for a polynomial");
  std::string poly_file;
  hyper->add_option("--poly", poly_file, "Polynomial JSON")->required();

  auto* euler = app.add_subcommand("euler", "Euler characteristic of a hypersurface complement");
  std::string euler_file;
  euler->add_option("--poly", euler_file, "Polynomial JSON")->required();

  CLI11_PARSE(app, argc, argv);

  std::vector<VerificationReport> reports;
  try {
    if (*tpn) {
      if (degree > 0) {
        reports.push_back(check_tpn(n, degree, seed, retries));
      } else {
        for (long long d = 1; d <= max_degree; ++d) reports.push_back(check_tpn(n, d, seed + d, retries));
      }
    } else if (*surface) {
      if (!polygon_file.empty()) reports.push_back(check_surface(polygon_from_json(read_json(polygon_file)), seed, retries));
      Rng rng(seed);
      for (int i = 0; i < random_count; ++i) {
        auto inst = random_delzant_polygon(rng);
        reports.push_back(check_surface(inst.polygon, seed + 1000 + i, retries));
      }
      if (reports.empty()) throw std::invalid_argument("surface: give --polygon or --random");
    } else if (*bertini) {
      bool product = ambient == "TP1xTP1";
      auto shape = [&](const std::vector<long long>& c) {
        if (product) {
          if (c.size() != 2) throw std::invalid_argument("bertini: TP1xTP1 classes need two numbers");
          return rectangle(c[0], c[1]);
        }
        if (c.size() != 1) throw std::invalid_argument("bertini: TP2 classes need one number");
        return dilated_simplex(2, c[0]);
      };
      Polyhedron amb = product ? rectangle(1, 1) : dilated_simplex(2, 1);
      if (!dclass.empty() || !dpclass.empty()) reports.push_back(check_bertini(amb, shape(dclass), shape(dpclass), seed, retries));
      Rng rng(seed);
      for (int i = 0; i < pair_count; ++i) {
        auto p = random_bertini_pair(rng, product, max_degree, retries);
        reports.push_back(check_bertini(p.ambient, p.newton_d, p.newton_dprime, seed + 1000 + i, retries));
      }
      if (reports.empty()) throw std::invalid_argument("bertini: give --d/--dprime or --random");
    } else if (*curve) {
      auto [g, d] = graph_from_json(read_json(graph_file));
      reports.push_back(check_curve(g, d));
    } else if (*csm) {
      if (!matroid_file.empty()) reports.push_back(check_csm(matroid_from_json(read_json(matroid_file)), "input"));
      if (catalogue > 0)
        for (const auto& [name, m] : matroid_catalogue(catalogue)) reports.push_back(check_csm(m, name));
      if (reports.empty()) throw std::invalid_argument("csm: give --matroid or --catalogue");
    } else if (*hyper) {
      reports.push_back(check_hypersurface(polynomial_from_json(read_json(poly_file))));
    } else if (*euler) {
      reports.push_back(check_euler(polynomial_from_json(read_json(euler_file))));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  std::string text = reports_to_json(reports).dump(2) + "\n";
  if (json_out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(json_out);
    if (!out) {
      std::cerr << "error: cannot write " << json_out << "\n";
      return 1;
    }
    out << text;
    for (std::size_t i = 0; i < reports.size(); ++i) {
      const auto& r = reports[i];
      std::size_t failed = 0;
      for (const auto& c : r.checks) failed += c.agrees ? 0 : 1;
      std::cout << r.kind << " #" << i << " seed " << r.seed << ": ";
      if (r.exit_code() == 0) std::cout << "ok, " << r.checks.size() << " checks\n";
      else if (r.exit_code() == 2) std::cout << r.hypothesis_flags.size() << " hypothesis flags, " << failed << " checks differ\n";
      else std::cout << "FAILED, " << failed << " of " << r.checks.size() << " checks differ\n";
    }
  }
  return combined_exit_code(reports);
}
