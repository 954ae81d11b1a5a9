#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bundles.hpp"
#include "koszul.hpp"
#include "wps.hpp"

namespace fanohyp::catalog {

enum class Verdict { NotHyperbolic, Unknown, Hyperbolic };
std::string to_string(Verdict v);

// One containment case inside a degree-bound argument. The genus bound it
// yields is linear in deg O(1) with the rational coefficient produced by
// branch_coefficient.
enum class BranchKind {
  Mukai,        // generic surjection from M_{O(L)}: (a-r) - L
  ScrollFixed,  // scroll not inside a degree-k hypersurface:
                //   (a-r) + e(1/k - 1)
  ScrollInX,    // scroll inside X, cut down by the degree-a surface:
                //   (a-r) + e(e/a - 1)
  HalfTwist,    // nef half-twisted quotient: (a-r) - 1/2
  ChainStep,    // descent through multiplication maps: (a-r) - 1
};

struct Branch {
  std::string name;
  BranchKind kind = BranchKind::Mukai;
  long long param = 0;  // Mukai: L, ScrollFixed: k
};

// A complete case analysis valid for min_a <= a (<= max_a when bounded):
// some case always applies, so the argument proves the minimum of its
// cases' coefficients.
struct Argument {
  std::string name;
  long long min_a = 1;
  long long max_a = 0;  // 0 = unbounded
  std::vector<Branch> cases;
};

enum class AmbientKind { Weighted, Grassmann };

enum class FactSource { Machine, Asserted };

// A single named nonvanishing-free claim H^degree(symbol) = 0 that the
// audit recomputes.
struct VanishFact {
  std::string name;
  bundles::BundleSymbol symbol;
  int degree = 0;
};

struct FanoModel {
  std::string id;
  std::string description;
  int r = 1;       // Fano index: -K_X = r O(1)
  long long e = 1;  // degree of the embedding bundle the scrolls live in
  AmbientKind ambient = AmbientKind::Grassmann;
  bool weighted_rule = false;  // verdict Unknown at a = r + 1

  // Grassmannian data: the ambient and the structural bundle F with
  // X = Z(section of F). Absent for weighted hypersurfaces.
  std::optional<bundles::Grassmannian> grassmann;
  std::optional<bundles::BundleSum> structural;

  // Weighted model of the ambient carrying the exact section-domination
  // check: the space itself for weighted hypersurfaces, the matching
  // straight projective space for the complete intersections.
  std::optional<wps::WeightedSpace> weighted;
  long long sd_degree = 0;  // dominating degree d of the machine SD check
  long long sd_min_a = 0;   // the check is claimed from this degree on

  std::vector<std::string> asserted_facts;
  std::vector<VanishFact> support_vanishings;

  bool has_tables = false;       // koszul::fano_scan_tables carries data
  bool has_ideal_check = false;  // image ideal generated by quadrics
  long long ideal_m = 0;
  bool has_sharpness_witness = false;

  std::vector<Argument> arguments;
};

const FanoModel& family(const std::string& id);
const std::vector<std::string>& family_ids();

Rat branch_coefficient(const FanoModel& m, const Branch& b, long long a);

// min over the cases, when a lies in the argument's range.
std::optional<Rat> argument_bound(const FanoModel& m, const Argument& arg,
                                  long long a);

struct BestBound {
  Rat value;
  std::string argument;
};

// max over the applicable arguments of their case minima.
std::optional<BestBound> best_bound(const FanoModel& m, long long a);

struct Classification {
  std::string id;
  long long a = 0;
  Verdict verdict = Verdict::Unknown;
  std::optional<Rat> coefficient;  // genus-bound slope, when Hyperbolic
  std::string argument;
};

// Verdict for the very general degree-a surface in family id. Throws
// std::logic_error when the encoded arguments contradict the verdict.
Classification classify(const std::string& id, long long a);

struct Check {
  std::string name;
  bool passed = false;
  FactSource source = FactSource::Machine;
  std::string detail;
};

struct AuditReport {
  Classification classification;
  std::vector<Check> checks;
  bool consistent = false;  // every machine check passed
};

// Recompute everything backing the verdict that admits exact machine
// verification, and list the residual asserted facts.
AuditReport audit(const std::string& id, long long a);

}  // namespace fanohyp::catalog
