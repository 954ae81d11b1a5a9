#include "catalog.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace fanohyp::catalog {

namespace bd = fanohyp::bundles;

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::NotHyperbolic: return "NotHyperbolic";
    case Verdict::Unknown: return "Unknown";
    case Verdict::Hyperbolic: return "Hyperbolic";
  }
  throw std::logic_error("bad verdict");
}

namespace {

Branch mukai(long long L) {
  return {"mukai-O(" + std::to_string(L) + ")", BranchKind::Mukai, L};
}
Branch scroll_k(const std::string& name, long long k) {
  return {name, BranchKind::ScrollFixed, k};
}
Branch scroll_in_x() { return {"inside-X", BranchKind::ScrollInX, 0}; }
Branch half_twist() { return {"half-twist", BranchKind::HalfTwist, 0}; }
Branch chain_step() { return {"chain-descent", BranchKind::ChainStep, 0}; }

bd::BundleSymbol line(const bd::Grassmannian& g, long long t) {
  return bd::BundleSymbol::make(g, {}, {}, t);
}

bd::BundleSum lines(const bd::Grassmannian& g, long long t, long long mult) {
  return bd::BundleSum::of(line(g, t), mult);
}

std::vector<FanoModel> build_families() {
  std::vector<FanoModel> fs;

  {  // 1-1
    FanoModel m;
    m.id = "1-1";
    m.description = "degree-6 hypersurface in P(1,1,1,1,3)";
    m.r = 1;
    m.e = 3;
    m.ambient = AmbientKind::Weighted;
    m.weighted_rule = true;
    m.weighted = wps::WeightedSpace(4, {3});
    m.sd_degree = 3;
    m.sd_min_a = 3;
    m.has_ideal_check = true;
    m.ideal_m = 3;
    m.arguments = {
        {"mukai", 3, 0, {mukai(3)}},
        {"scroll", 3, 0, {scroll_k("quadric-section", 2), scroll_in_x()}},
    };
    fs.push_back(std::move(m));
  }
  {  // 1-2
    FanoModel m;
    m.id = "1-2";
    m.description = "quartic threefold in P^4";
    m.r = 1;
    m.e = 1;
    bd::Grassmannian g(1, 5);
    m.grassmann = g;
    m.structural = lines(g, 4, 1);
    m.weighted = wps::WeightedSpace(5, {});
    m.sd_degree = 1;
    m.sd_min_a = 1;
    m.arguments = {
        {"mukai", 1, 0, {mukai(1)}},
        {"scroll", 1, 0, {scroll_k("quartic", 4), scroll_in_x()}},
    };
    fs.push_back(std::move(m));
  }
  {  // 1-3
    FanoModel m;
    m.id = "1-3";
    m.description = "(2,3) complete intersection in P^5";
    m.r = 1;
    m.e = 1;
    bd::Grassmannian g(1, 6);
    m.grassmann = g;
    bd::BundleSum f = lines(g, 2, 1);
    f.add(line(g, 3));
    m.structural = f;
    m.weighted = wps::WeightedSpace(6, {});
    m.sd_degree = 1;
    m.sd_min_a = 1;
    m.arguments = {
        {"mukai", 1, 0, {mukai(1)}},
        {"scroll", 1, 0,
         {scroll_k("quadric", 2), scroll_k("cubic", 3), scroll_in_x()}},
    };
    fs.push_back(std::move(m));
  }
  {  // 1-4
    FanoModel m;
    m.id = "1-4";
    m.description = "(2,2,2) complete intersection in P^6";
    m.r = 1;
    m.e = 1;
    bd::Grassmannian g(1, 7);
    m.grassmann = g;
    m.structural = lines(g, 2, 3);
    m.weighted = wps::WeightedSpace(7, {});
    m.sd_degree = 1;
    m.sd_min_a = 1;
    m.arguments = {
        {"mukai", 1, 0, {mukai(1)}},
        {"scroll", 1, 0, {scroll_k("quadric", 2), scroll_in_x()}},
    };
    fs.push_back(std::move(m));
  }
  {  // 1-5
    FanoModel m;
    m.id = "1-5";
    m.description = "Gr(2,5) cut by O(2)+O(1)^2";
    m.r = 1;
    m.e = 1;
    bd::Grassmannian g(2, 5);
    m.grassmann = g;
    bd::BundleSum f = lines(g, 2, 1);
    f.add(line(g, 1), 2);
    m.structural = f;
    m.asserted_facts = {"plucker-projective-normality"};
    m.arguments = {
        {"mukai", 1, 0, {mukai(1)}},
        {"scroll", 1, 0,
         {scroll_k("plucker-quadrics", 2), scroll_k("hyperplane", 1),
          scroll_in_x()}},
    };
    fs.push_back(std::move(m));
  }
  {  // 1-6
    FanoModel m;
    m.id = "1-6";
    m.description = "Gr(2,5) cut by U*(1)+O(1)";
    m.r = 1;
    m.e = 1;
    bd::Grassmannian g(2, 5);
    m.grassmann = g;
    bd::BundleSum f = bd::BundleSum::of(bd::BundleSymbol::make(g, {1}, {}, 1));
    f.add(line(g, 1));
    m.structural = f;
    m.asserted_facts = {"plucker-projective-normality", "O(1)-dominates-U*(1)"};
    m.support_vanishings = {
        {"H1(Q*(1))", bd::BundleSymbol::make(g, {}, {1}, 1), 1},
    };
    m.arguments = {
        {"mukai", 1, 0, {mukai(1)}},
        {"scroll", 1, 0,
         {scroll_k("plucker-quadrics", 2), scroll_k("hyperplane", 1),
          scroll_in_x()}},
    };
    fs.push_back(std::move(m));
  }
  {  // 1-7
    FanoModel m;
    m.id = "1-7";
    m.description = "Gr(2,6) cut by O(1)^5";
    m.r = 1;
    m.e = 1;
    bd::Grassmannian g(2, 6);
    m.grassmann = g;
    m.structural = lines(g, 1, 5);
    m.asserted_facts = {"plucker-projective-normality"};
    m.arguments = {
        {"mukai", 1, 0, {mukai(1)}},
        {"scroll", 1, 0,
         {scroll_k("plucker-quadrics", 2), scroll_k("hyperplane", 1),
          scroll_in_x()}},
    };
    fs.push_back(std::move(m));
  }
  {  // 1-8
    FanoModel m;
    m.id = "1-8";
    m.description = "Gr(3,6) cut by L2U*+O(1)^3";
    m.r = 1;
    m.e = 1;
    bd::Grassmannian g(3, 6);
    m.grassmann = g;
    bd::BundleSum f =
        bd::BundleSum::of(bd::BundleSymbol::make(g, {1, 1}, {}, 0));
    f.add(line(g, 1), 3);
    m.structural = f;
    m.asserted_facts = {"plucker-projective-normality", "U*-dominates-L2U*"};
    m.support_vanishings = {
        {"H1(O)", line(g, 0), 1},
        {"H2(Sym2Q*)", bd::BundleSymbol::make(g, {}, {2}, 0), 2},
    };
    m.has_tables = true;
    m.arguments = {
        {"mukai", 1, 0, {half_twist(), mukai(1)}},
        {"scroll", 1, 0,
         {half_twist(), scroll_k("plucker-quadrics", 2),
          scroll_k("hyperplane", 1), scroll_in_x()}},
    };
    fs.push_back(std::move(m));
  }
  {  // 1-9
    FanoModel m;
    m.id = "1-9";
    m.description = "Gr(2,7) cut by Q*(1)+O(1)^2";
    m.r = 1;
    m.e = 1;
    bd::Grassmannian g(2, 7);
    m.grassmann = g;
    bd::BundleSum f = bd::BundleSum::of(bd::BundleSymbol::make(g, {}, {1}, 1));
    f.add(line(g, 1), 2);
    m.structural = f;
    m.asserted_facts = {"plucker-projective-normality", "Q-dominates-L4Q"};
    m.support_vanishings = {
        {"H1(L2Q)", bd::BundleSymbol::make(g, {}, {1, 1, 1}, 1), 1},
        {"H2(Q)", bd::BundleSymbol::make(g, {}, {1, 1, 1, 1}, 1), 2},
        {"H3(O)", line(g, 0), 3},
        {"H4(Sym4U)", bd::BundleSymbol::make(g, {4}, {}, -4), 4},
    };
    m.has_tables = true;
    m.arguments = {
        {"mukai", 1, 0, {half_twist(), mukai(1)}},
        {"scroll", 1, 0,
         {half_twist(), scroll_k("plucker-quadrics", 2),
          scroll_k("hyperplane", 1), scroll_in_x()}},
    };
    fs.push_back(std::move(m));
  }
  {  // 1-10
    FanoModel m;
    m.id = "1-10";
    m.description = "Gr(3,7) cut by (L2U*)^3";
    m.r = 1;
    m.e = 1;
    bd::Grassmannian g(3, 7);
    m.grassmann = g;
    m.structural =
        bd::BundleSum::of(bd::BundleSymbol::make(g, {1, 1}, {}, 0), 3);
    m.asserted_facts = {"plucker-projective-normality", "U*-dominates-L2U*"};
    m.support_vanishings = {
        {"H1(O)", line(g, 0), 1},
        {"H2(Sym2Q*)", bd::BundleSymbol::make(g, {}, {2}, 0), 2},
    };
    m.has_tables = true;
    m.arguments = {
        {"mukai", 1, 0, {half_twist(), mukai(1)}},
        {"scroll", 1, 0,
         {half_twist(), scroll_k("plucker-quadrics", 2), scroll_in_x()}},
    };
    fs.push_back(std::move(m));
  }
  {  // 1-11
    FanoModel m;
    m.id = "1-11";
    m.description = "degree-6 hypersurface in P(1,1,1,2,3)";
    m.r = 2;
    m.e = 6;
    m.ambient = AmbientKind::Weighted;
    m.weighted_rule = true;
    m.weighted = wps::WeightedSpace(3, {2, 3});
    m.sd_degree = 6;
    m.sd_min_a = 8;
    m.has_sharpness_witness = true;
    m.asserted_facts = {"multiplication-chain"};
    m.arguments = {
        {"mukai", 8, 0, {mukai(6)}},
        {"chain", 4, 8, {chain_step()}},
    };
    fs.push_back(std::move(m));
  }
  {  // 1-12
    FanoModel m;
    m.id = "1-12";
    m.description = "degree-4 hypersurface in P(1,1,1,1,2)";
    m.r = 2;
    m.e = 2;
    m.ambient = AmbientKind::Weighted;
    m.weighted_rule = true;
    m.weighted = wps::WeightedSpace(4, {2});
    m.sd_degree = 2;
    m.sd_min_a = 2;
    m.has_ideal_check = true;
    m.ideal_m = 2;
    m.arguments = {
        {"mukai", 2, 0, {mukai(2)}},
        {"scroll", 2, 0, {scroll_k("quadric-section", 2), scroll_in_x()}},
    };
    fs.push_back(std::move(m));
  }
  {  // 1-13
    FanoModel m;
    m.id = "1-13";
    m.description = "cubic threefold in P^4";
    m.r = 2;
    m.e = 1;
    bd::Grassmannian g(1, 5);
    m.grassmann = g;
    m.structural = lines(g, 3, 1);
    m.weighted = wps::WeightedSpace(5, {});
    m.sd_degree = 1;
    m.sd_min_a = 1;
    m.arguments = {
        {"mukai", 1, 0, {mukai(1)}},
        {"scroll", 1, 0, {scroll_k("cubic", 3), scroll_in_x()}},
    };
    fs.push_back(std::move(m));
  }
  {  // 1-14
    FanoModel m;
    m.id = "1-14";
    m.description = "(2,2) complete intersection in P^5";
    m.r = 2;
    m.e = 1;
    bd::Grassmannian g(1, 6);
    m.grassmann = g;
    m.structural = lines(g, 2, 2);
    m.weighted = wps::WeightedSpace(6, {});
    m.sd_degree = 1;
    m.sd_min_a = 1;
    m.arguments = {
        {"mukai", 1, 0, {mukai(1)}},
        {"scroll", 1, 0, {scroll_k("quadric", 2), scroll_in_x()}},
    };
    fs.push_back(std::move(m));
  }
  {  // 1-15
    FanoModel m;
    m.id = "1-15";
    m.description = "Gr(2,5) cut by O(1)^3";
    m.r = 2;
    m.e = 1;
    bd::Grassmannian g(2, 5);
    m.grassmann = g;
    m.structural = lines(g, 1, 3);
    m.asserted_facts = {"plucker-projective-normality"};
    m.arguments = {
        {"mukai", 1, 0, {mukai(1)}},
        {"scroll", 1, 0,
         {scroll_k("plucker-quadrics", 2), scroll_k("hyperplane", 1),
          scroll_in_x()}},
    };
    fs.push_back(std::move(m));
  }
  {  // 1-16
    FanoModel m;
    m.id = "1-16";
    m.description = "quadric threefold in P^4";
    m.r = 3;
    m.e = 1;
    bd::Grassmannian g(1, 5);
    m.grassmann = g;
    m.structural = lines(g, 2, 1);
    m.weighted = wps::WeightedSpace(5, {});
    m.sd_degree = 1;
    m.sd_min_a = 1;
    m.arguments = {
        {"mukai", 1, 0, {mukai(1)}},
        {"scroll", 1, 0, {scroll_k("quadric", 2), scroll_in_x()}},
    };
    fs.push_back(std::move(m));
  }
  {  // 1-17
    FanoModel m;
    m.id = "1-17";
    m.description = "P^3";
    m.r = 4;
    m.e = 1;
    bd::Grassmannian g(1, 4);
    m.grassmann = g;
    m.structural = bd::BundleSum(g);
    m.weighted = wps::WeightedSpace(4, {});
    m.sd_degree = 1;
    m.sd_min_a = 1;
    m.arguments = {
        {"mukai", 1, 0, {mukai(1)}},
        {"scroll", 1, 0, {scroll_in_x()}},
    };
    fs.push_back(std::move(m));
  }

  return fs;
}

const std::vector<FanoModel>& all_families() {
  static const std::vector<FanoModel> fs = build_families();
  return fs;
}

}  // namespace

const FanoModel& family(const std::string& id) {
  for (const auto& m : all_families())
    if (m.id == id) return m;
  throw std::invalid_argument("unknown family: " + id);
}

const std::vector<std::string>& family_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& m : all_families()) out.push_back(m.id);
    return out;
  }();
  return ids;
}

Rat branch_coefficient(const FanoModel& m, const Branch& b, long long a) {
  if (a < 1) throw std::invalid_argument("degree must be positive");
  Rat base(a - m.r);
  switch (b.kind) {
    case BranchKind::Mukai:
      return base - b.param;
    case BranchKind::ScrollFixed:
      if (b.param < 1) throw std::logic_error("scroll degree must be positive");
      return base + Rat(m.e) * (Rat(1, b.param) - 1);
    case BranchKind::ScrollInX:
      return base + Rat(m.e) * (Rat(m.e, a) - 1);
    case BranchKind::HalfTwist:
      return base - Rat(1, 2);
    case BranchKind::ChainStep:
      return base - 1;
  }
  throw std::logic_error("bad branch kind");
}

std::optional<Rat> argument_bound(const FanoModel& m, const Argument& arg,
                                  long long a) {
  if (a < arg.min_a) return std::nullopt;
  if (arg.max_a > 0 && a > arg.max_a) return std::nullopt;
  if (arg.cases.empty()) throw std::logic_error("argument without cases");
  std::optional<Rat> worst;
  for (const auto& b : arg.cases) {
    Rat c = branch_coefficient(m, b, a);
    if (!worst || c < *worst) worst = c;
  }
  return worst;
}

std::optional<BestBound> best_bound(const FanoModel& m, long long a) {
  std::optional<BestBound> best;
  for (const auto& arg : m.arguments) {
    auto bound = argument_bound(m, arg, a);
    if (!bound) continue;
    if (!best || *bound > best->value) best = BestBound{*bound, arg.name};
  }
  return best;
}

Classification classify(const std::string& id, long long a) {
  const FanoModel& m = family(id);
  if (a < 1) throw std::invalid_argument("degree must be positive");
  Classification out;
  out.id = m.id;
  out.a = a;
  auto best = best_bound(m, a);
  bool positive = best && best->value > 0;
  if (a <= m.r) {
    out.verdict = Verdict::NotHyperbolic;
    if (positive)
      throw std::logic_error(m.id + ": positive genus slope on a surface of"
                             " nonpositive canonical degree");
  } else if (m.weighted_rule && a == m.r + 1) {
    out.verdict = Verdict::Unknown;
    if (positive)
      throw std::logic_error(m.id + ": positive genus slope in the open case");
  } else {
    out.verdict = Verdict::Hyperbolic;
    if (!positive)
      throw std::logic_error(m.id + ": no positive genus slope at degree " +
                             std::to_string(a));
    out.coefficient = best->value;
    out.argument = best->argument;
  }
  return out;
}

namespace {

std::string witness_detail(const koszul::NonvanishingWitness& w) {
  return "H^" + std::to_string(w.degree) + "(" + w.summand.to_string() +
         ") != 0 at Koszul index " + std::to_string(w.koszul_index);
}

void check_restriction(const FanoModel& m, long long a,
                       std::vector<Check>& cs) {
  if (m.ambient == AmbientKind::Grassmann) {
    bd::BundleSum e = *m.structural;
    e.add(line(*m.grassmann, a));
    bool ok = true;
    std::string detail =
        "H^0 of O(0)..O(6) restricts onto the surface (Koszul criterion)";
    for (long long d = 0; d <= 6 && ok; ++d) {
      auto obs = koszul::restriction_obstruction(e, line(*m.grassmann, d));
      if (obs) {
        ok = false;
        detail = "O(" + std::to_string(d) + "): " + witness_detail(*obs);
      }
    }
    cs.push_back({"restriction-surjective", ok, FactSource::Machine, detail});
  } else {
    // Two line-bundle Koszul stages; both sit strictly between 0 and the
    // ambient dimension, where twisted structure sheaves have no
    // cohomology on a weighted projective space.
    int dim = m.weighted->dim();
    bool ok = dim > 2;
    cs.push_back({"restriction-surjective", ok, FactSource::Machine,
                  "Koszul stages 1,2 lie strictly inside dimension " +
                      std::to_string(dim)});
  }
}

void check_section_domination(const FanoModel& m, long long a,
                              std::vector<Check>& cs) {
  if (!m.weighted) return;
  auto tb = wps::theorem_bound(*m.weighted);
  bool tb_ok =
      tb.applicable && tb.d == m.sd_degree && tb.a_min == m.sd_min_a;
  cs.push_back({"sd-theorem-bound", tb_ok, FactSource::Machine,
                "O(" + std::to_string(tb.d) + ") dominates O(a) for a >= " +
                    std::to_string(tb.a_min) + " on " +
                    m.weighted->to_string()});
  if (a >= m.sd_min_a) {
    auto r = wps::section_dominating_check(*m.weighted, m.sd_degree, a);
    cs.push_back(
        {"section-dominating", r.surjective, FactSource::Machine,
         "rank " + std::to_string(r.rank) + " of " +
             std::to_string(r.target_dim) + " at degree " + std::to_string(a)});
  }
}

void check_tables(const FanoModel& m, long long a, Verdict verdict,
                  std::vector<Check>& cs) {
  if (!m.has_tables) return;
  const auto& t = koszul::fano_scan_tables(m.id);
  auto violations = koszul::verify_vanishing_rows(t, t.region.n_max);
  std::string vdetail = std::to_string(t.vanishing.size()) +
                        " vanishing rows swept to twist " +
                        std::to_string(t.region.n_max);
  if (!violations.empty()) {
    const auto& v = violations.front();
    vdetail = "row " + std::to_string(v.row) + " hit at H^" +
              std::to_string(v.hit.i) + ", twist " + std::to_string(v.hit.N);
  }
  cs.push_back({"vanishing-table", violations.empty(), FactSource::Machine,
                vdetail});

  auto computed = koszul::compute_exception_rows(t);
  bool match = computed.size() == t.exceptions.size();
  for (std::size_t i = 0; match && i < computed.size(); ++i) {
    const auto& expected = t.exceptions[i].expected;
    match = computed[i].size() == expected.size();
    for (std::size_t j = 0; match && j < expected.size(); ++j)
      match = computed[i][j].i == expected[j].first &&
              computed[i][j].N == expected[j].second;
  }
  cs.push_back({"exception-table", match, FactSource::Machine,
                std::to_string(t.exceptions.size()) +
                    " exceptional hit sets recomputed"});

  if (verdict == Verdict::Hyperbolic) {
    bool ok = true;
    std::string detail = "curve classes d=1..4 at degree " + std::to_string(a);
    for (long long d = 1; d <= 4 && ok; ++d) {
      auto obs = koszul::run_curve_check(m.id, a, d);
      if (obs) {
        ok = false;
        detail = "d=" + std::to_string(d) + ", target " +
                 obs->target.to_string() + ": " + witness_detail(obs->witness);
      }
    }
    cs.push_back({"curve-vanishing", ok, FactSource::Machine, detail});
  }
}

void check_ideal(const FanoModel& m, std::vector<Check>& cs) {
  if (!m.has_ideal_check) return;
  auto rep = wps::ideal_generation_check(*m.weighted, m.ideal_m, 3);
  wps::GradedRing ring(*m.weighted);
  bool onto = rep.rank2 == ring.h0(2 * m.ideal_m);
  cs.push_back({"quadric-section-exists", onto, FactSource::Machine,
                "degree-" + std::to_string(2 * m.ideal_m) +
                    " sections are products of degree-" +
                    std::to_string(m.ideal_m) + " ones"});
  cs.push_back({"image-cut-by-quadrics", rep.generated, FactSource::Machine,
                "degree-3 ideal part: span " + std::to_string(rep.span_rank) +
                    " of " + std::to_string(rep.kt)});
}

void check_sharpness(const FanoModel& m, std::vector<Check>& cs) {
  if (!m.has_sharpness_witness) return;
  auto w = wps::optimality_witness(*m.weighted);
  bool ok = !w.in_image && w.a == m.sd_min_a - 1;
  cs.push_back({"sd-bound-sharp", ok, FactSource::Machine,
                "escaping section at degree " + std::to_string(w.a)});
}

void check_support(const FanoModel& m, std::vector<Check>& cs) {
  for (const auto& f : m.support_vanishings) {
    Int dim = bd::h(f.symbol, f.degree);
    cs.push_back({f.name + "=0", dim == 0, FactSource::Machine,
                  f.symbol.to_string()});
  }
  for (const auto& name : m.asserted_facts)
    cs.push_back({name, true, FactSource::Asserted, ""});
}

}  // namespace

AuditReport audit(const std::string& id, long long a) {
  const FanoModel& m = family(id);
  AuditReport rep;
  rep.classification = classify(id, a);
  check_restriction(m, a, rep.checks);
  check_section_domination(m, a, rep.checks);
  check_support(m, rep.checks);
  check_tables(m, a, rep.classification.verdict, rep.checks);
  check_ideal(m, rep.checks);
  check_sharpness(m, rep.checks);
  rep.consistent = std::all_of(rep.checks.begin(), rep.checks.end(),
                               [](const Check& c) { return c.passed; });
  return rep;
}

}  // namespace fanohyp::catalog
