#pragma once

#include "tropic/instances.hpp"
#include "tropic/json_io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tropic {

struct CheckLine {
  std::string name;
  json left, right;
  bool agrees = false;
};

/// One instance: every equality with both sides, plus the hypotheses that could not be confirmed.
struct VerificationReport {
  std::string kind;
  json instance;
  std::uint64_t seed = 0;
  std::vector<CheckLine> checks;
  std::vector<std::string> hypothesis_flags;

  void add(std::string name, const json& left, const json& right);
  bool all_agree() const;
  bool hypotheses_ok() const { return hypothesis_flags.empty(); }
  /// 0: everything holds; 2: hypotheses unverified; 1: an equality fails inside the hypotheses.
  int exit_code() const;
  json to_json() const;
};

/// Smooth degree-d hypersurface in TP^n: RR, lattice counts and both Euler-calculus paths.
VerificationReport check_tpn(std::size_t n, long long d, std::uint64_t seed, int retries = 20);
/// Smooth curve of class Q on the toric surface of a Delzant polygon Q.
VerificationReport check_surface(const Polyhedron& polygon, std::uint64_t seed, int retries = 20);
/// Pair of smooth curves with Newton polygons whose normal fans coincide with that of `ambient`.
VerificationReport check_bertini(const Polyhedron& ambient, const Polyhedron& newton_d, const Polyhedron& newton_dprime,
                                 std::uint64_t seed, int retries = 20);
/// Engine intersection degree of two curves against the ring's intersection number. The fan of
/// `polygon` must refine the normal fan of `second`.
VerificationReport check_pairing(const Polyhedron& polygon, const Polyhedron& second, std::uint64_t seed,
                                 int retries = 20);
VerificationReport check_curve(const CurveGraph& g, const CurveDivisor& d);
VerificationReport check_csm(const Matroid& m, const std::string& name);
VerificationReport check_hypersurface(const TropicalPolynomial& f);
/// chi_complement of the hypersurface in the toric variety of its Newton polytope.
VerificationReport check_euler(const TropicalPolynomial& f);

/// Reports sorted by (kind, instance) and wrapped as { "reports": [...] }.
json reports_to_json(std::vector<VerificationReport> reports);
int combined_exit_code(const std::vector<VerificationReport>& reports);

}  // namespace tropic
