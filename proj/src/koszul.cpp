#include "koszul.hpp"

#include <map>
#include <stdexcept>

namespace fanohyp::koszul {

namespace {

using weights::Entry;
using weights::Partition;

Partition P(std::initializer_list<Entry> v) {
  return Partition(std::vector<Entry>(v));
}

}  // namespace

ScanReport scan(const Grassmannian& g, const Partition& u, const Partition& q,
                const ScanRegion& region) {
  ScanReport r{g, u, q, region, {}};
  auto base = BundleSymbol::make(g, u.parts(), q.parts(), 0);
  for (long long N = region.n_min; N <= region.n_max; ++N) {
    auto c = bundles::cohomology(base.twisted(-N));
    if (!c.vanishes && c.degree <= region.i_max)
      r.hits.push_back({c.degree, N, c.dim});
  }
  return r;
}

std::optional<NonvanishingWitness> restriction_obstruction(
    const BundleSum& f, const BundleSymbol& target) {
  auto powers = bundles::exterior_powers_of_sum(f.dual());
  for (std::size_t i = 1; i < powers.size(); ++i) {
    auto term = tensor(powers[i], BundleSum::of(target));
    for (const auto& [s, mult] : term.terms()) {
      auto c = bundles::cohomology(s);
      if (!c.vanishes && c.degree == static_cast<int>(i))
        return NonvanishingWitness{s, static_cast<int>(i), c.degree, c.dim};
    }
  }
  return std::nullopt;
}

std::optional<CurveObstruction> curve_obstruction(
    const BundleSum& e, const std::vector<BundleSymbol>& targets) {
  auto powers = bundles::exterior_powers_of_sum(e.dual());
  for (const auto& target : targets) {
    auto c0 = bundles::cohomology(target);
    if (!c0.vanishes && c0.degree == 0)
      return CurveObstruction{target, {target, 0, 0, c0.dim}};
    for (std::size_t i = 1; i < powers.size(); ++i) {
      auto term = tensor(powers[i], BundleSum::of(target));
      for (const auto& [s, mult] : term.terms()) {
        auto c = bundles::cohomology(s);
        if (c.vanishes) continue;
        int ii = static_cast<int>(i);
        if (c.degree == ii - 1 || c.degree == ii)
          return CurveObstruction{target, {s, ii, c.degree, c.dim}};
      }
    }
  }
  return std::nullopt;
}

ClosedForm closed_form(const Grassmannian& g, const Partition& w, long long d,
                       Side side) {
  int k = g.k;
  int m = g.quot_rank();
  int top = g.dim();
  long long cap = (side == Side::Sub) ? m : k;
  std::size_t max_rows = (side == Side::Sub) ? k - 1 : m - 1;
  long long d_min = (side == Side::Sub) ? 1 : 0;
  if (d < d_min || w.rows() > max_rows || w.part(0) > cap)
    throw std::invalid_argument("weight or twist outside the closed form");

  bool saturated = true;
  for (std::size_t i = 0; i < w.rows(); ++i)
    if (w.part(i) != cap) saturated = false;

  ClosedForm cf;
  if (side == Side::Sub) {
    if (saturated) {
      long long l = static_cast<long long>(w.rows());
      if (l > 0 && d == g.n - l) {
        cf = {true, static_cast<int>(m * (k - l)), true};
      } else if (l == 0 && d == g.n) {
        cf = {true, top, true};
      } else if (d >= g.n + w.part(0)) {
        cf = {true, top, false};
      }
    } else if (d >= g.n + w.part(0)) {
      cf = {true, top, false};
    }
  } else {
    if (saturated) {
      long long l = static_cast<long long>(w.rows());
      if (d == l) {
        cf = {true, static_cast<int>(k * l), true};
      } else if (d >= g.n) {
        cf = {true, top, false};
      }
    } else if (d >= g.n) {
      cf = {true, top, false};
    }
  }
  return cf;
}

namespace {

// All weakly decreasing tuples of the given length with entries in
// [0, bound], as partitions.
std::vector<Partition> bounded_weights(int length, Entry bound) {
  std::vector<Partition> out;
  std::vector<Entry> cur;
  auto dfs = [&](auto&& self, int pos, Entry hi) -> void {
    if (pos == length) {
      out.emplace_back(cur);
      return;
    }
    for (Entry v = hi; v >= 0; --v) {
      cur.push_back(v);
      self(self, pos + 1, v);
      cur.pop_back();
    }
  };
  dfs(dfs, 0, bound);
  return out;
}

}  // namespace

long long closed_form_mismatches(const Grassmannian& g, long long d_max) {
  long long mismatches = 0;
  auto compare = [&](const Partition& w, long long d, Side side) {
    auto cf = closed_form(g, w, d, side);
    auto symbol = (side == Side::Sub)
                      ? BundleSymbol::make(g, w.parts(), {}, -d)
                      : BundleSymbol::make(g, {}, w.parts(), -d);
    auto c = bundles::cohomology(symbol);
    if (c.vanishes == cf.nonzero) {
      ++mismatches;
    } else if (cf.nonzero) {
      if (c.degree != cf.degree)
        ++mismatches;
      else if (cf.dim_one && c.dim != 1)
        ++mismatches;
    }
  };
  for (const auto& w : bounded_weights(g.k - 1, g.quot_rank()))
    for (long long d = 1; d <= d_max; ++d) compare(w, d, Side::Sub);
  for (const auto& w : bounded_weights(g.quot_rank() - 1, g.k))
    for (long long d = 0; d <= d_max; ++d) compare(w, d, Side::Quot);
  return mismatches;
}

namespace {

std::map<std::string, FamilyTables> build_tables() {
  std::map<std::string, FamilyTables> out;

  {
    FamilyTables t{"1-8", Grassmannian(3, 6)};
    t.region = {8, 0, 12};
    t.vanishing = {
        {P({}), P({1}), 8, 0, {}},
        {P({}), P({2, 2}), 8, -1, {}},
        {P({1}), P({1}), 6, 1, {}},
        {P({1}), P({2, 2}), 6, 0, {}},
        {P({1, 1}), P({1}), 7, 2, {}},
        {P({1, 1}), P({2, 2}), 7, 1, {{7, 7}}},
    };
    t.exceptions = {
        {P({1}), P({1}), {}},
        {P({1}), P({2, 2}), {{8, 5}}},
        {P({1, 1}), P({1}), {{1, 1}}},
        {P({1, 1}), P({2, 2}), {{7, 4}}},
    };
    out.emplace(t.id, std::move(t));
  }

  {
    FamilyTables t{"1-9", Grassmannian(2, 7)};
    t.region = {9, 0, 12};
    t.vanishing = {
        {P({2}), P({}), 9, 1, {}},
        {P({2}), P({1, 1, 1, 1}), 5, 1, {}},
        {P({2}), P({1, 1, 1}), 6, 2, {}},
        {P({2}), P({1, 1}), 7, 3, {}},
        {P({2}), P({1}), 8, 4, {}},
    };
    t.exceptions = {
        {P({2}), P({1, 1, 1, 1}), {{9, 7}}},
        {P({2}), P({1, 1, 1}), {{8, 6}}},
        {P({2}), P({1, 1}), {{2, 2}}},
        {P({2}), P({1}), {{1, 1}}},
    };
    out.emplace(t.id, std::move(t));
  }

  {
    FamilyTables t{"1-10", Grassmannian(3, 7)};
    t.region = {11, 0, 12};
    t.vanishing = {
        {P({}), P({2, 2, 2}), 11, -1, {}},
        {P({}), P({1, 1}), 11, 0, {}},
        {P({1}), P({2, 2, 2}), 9, 0, {}},
        {P({1}), P({1, 1}), 9, 1, {}},
        {P({1, 1}), P({2, 2, 2}), 10, 1, {{10, 7}}},
        {P({1, 1}), P({1, 1}), 10, 2, {}},
        {P({2}), P({2, 2, 2}), 7, 1, {}},
        {P({2}), P({1, 1}), 7, 2, {}},
        {P({2, 1}), P({2, 2, 2}), 8, 2, {}},
        {P({2, 1}), P({1, 1}), 8, 3, {}},
        {P({2, 2}), P({2, 2, 2}), 9, 3, {}},
        {P({2, 2}), P({1, 1}), 9, 4, {}},
        {P({3}), P({2, 2, 2}), 5, 2, {}},
        {P({3}), P({1, 1}), 5, 3, {}},
        {P({3, 1}), P({2, 2, 2}), 6, 3, {}},
        {P({3, 1}), P({1, 1}), 6, 4, {}},
        {P({3, 2}), P({2, 2, 2}), 7, 4, {}},
        {P({3, 2}), P({1, 1}), 7, 5, {}},
        {P({3, 3}), P({2, 2, 2}), 8, 5, {}},
        {P({3, 3}), P({1, 1}), 8, 6, {}},
    };
    t.exceptions = {
        {P({1}), P({2, 2, 2}), {{11, 6}}},
        {P({1}), P({1, 1}), {}},
        {P({1, 1}), P({2, 2, 2}), {{10, 5}}},
        {P({1, 1}), P({1, 1}), {}},
        {P({2}), P({2, 2, 2}), {{11, 6}, {11, 7}}},
        {P({2}), P({1, 1}), {{10, 6}}},
        {P({2, 1}), P({2, 2, 2}), {{11, 7}}},
        {P({2, 1}), P({1, 1}), {}},
        {P({2, 2}), P({2, 2, 2}), {{10, 6}}},
        {P({2, 2}), P({1, 1}), {{2, 2}}},
        {P({3}), P({2, 2, 2}), {{6, 3}, {11, 7}, {11, 8}}},
        {P({3}), P({1, 1}), {{10, 7}}},
        {P({3, 1}), P({2, 2, 2}), {{11, 7}, {11, 8}}},
        {P({3, 1}), P({1, 1}), {{10, 7}}},
        {P({3, 2}), P({2, 2, 2}), {{11, 8}}},
        {P({3, 2}), P({1, 1}), {{2, 2}}},
        {P({3, 3}), P({2, 2, 2}), {{3, 2}, {10, 7}}},
        {P({3, 3}), P({1, 1}), {{2, 2}}},
    };
    out.emplace(t.id, std::move(t));
  }

  return out;
}

const std::map<std::string, FamilyTables>& tables() {
  static const std::map<std::string, FamilyTables> t = build_tables();
  return t;
}

}  // namespace

const FamilyTables& fano_scan_tables(const std::string& id) {
  const auto& t = tables();
  auto it = t.find(id);
  if (it == t.end())
    throw std::invalid_argument("no cohomology tables for family " + id);
  return it->second;
}

const std::vector<std::string>& fano_table_ids() {
  static const std::vector<std::string> ids = {"1-8", "1-9", "1-10"};
  return ids;
}

std::vector<RowViolation> verify_vanishing_rows(const FamilyTables& t,
                                                long long n_max) {
  std::vector<RowViolation> out;
  for (std::size_t r = 0; r < t.vanishing.size(); ++r) {
    const auto& row = t.vanishing[r];
    ScanRegion region{row.i_max, row.n_min, n_max};
    auto report = scan(t.space, row.u, row.q, region);
    for (const auto& hit : report.hits) {
      long long required = row.n_min;
      for (const auto& [deg, bound] : row.caveats)
        if (deg == hit.i) required = bound;
      if (hit.N >= required) out.push_back({r, hit});
    }
  }
  return out;
}

std::vector<std::vector<ScanHit>> compute_exception_rows(
    const FamilyTables& t) {
  std::vector<std::vector<ScanHit>> out;
  out.reserve(t.exceptions.size());
  for (const auto& row : t.exceptions)
    out.push_back(scan(t.space, row.u, row.q, t.region).hits);
  return out;
}

namespace {

std::map<std::string, CurveCheckData> build_curve_data() {
  std::map<std::string, CurveCheckData> out;

  {
    Grassmannian g(3, 6);
    BundleSum f(g);
    f.add(BundleSymbol::make(g, {1, 1}, {}, 0));      // Lambda^2 U*
    f.add(BundleSymbol::make(g, {}, {}, 1), 3);       // O(1)^3
    std::vector<BundleSymbol> targets = {
        BundleSymbol::make(g, {}, {1}, 0),            // Q*
        BundleSymbol::make(g, {}, {2, 2}, 1),
    };
    out.emplace("1-8", CurveCheckData{g, std::move(f), std::move(targets)});
  }

  {
    Grassmannian g(2, 7);
    BundleSum f(g);
    f.add(BundleSymbol::make(g, {}, {1}, 1));         // Q*(1)
    f.add(BundleSymbol::make(g, {}, {}, 1), 2);       // O(1)^2
    std::vector<BundleSymbol> targets = {
        BundleSymbol::make(g, {2}, {}, -1),
    };
    out.emplace("1-9", CurveCheckData{g, std::move(f), std::move(targets)});
  }

  {
    Grassmannian g(3, 7);
    BundleSum f(g);
    f.add(BundleSymbol::make(g, {1, 1}, {}, 0), 3);   // (Lambda^2 U*)^3
    std::vector<BundleSymbol> targets = {
        BundleSymbol::make(g, {}, {2, 2, 2}, 1),
        BundleSymbol::make(g, {}, {1, 1}, 0),
    };
    out.emplace("1-10", CurveCheckData{g, std::move(f), std::move(targets)});
  }

  return out;
}

}  // namespace

const CurveCheckData& curve_check_data(const std::string& id) {
  static const std::map<std::string, CurveCheckData> data = build_curve_data();
  auto it = data.find(id);
  if (it == data.end())
    throw std::invalid_argument("no curve check data for family " + id);
  return it->second;
}

std::optional<CurveObstruction> run_curve_check(const std::string& id,
                                                long long a, long long d) {
  if (a < 1 || d < 1)
    throw std::invalid_argument("curve check needs a >= 1 and d >= 1");
  const auto& data = curve_check_data(id);
  BundleSum e = data.structural;
  e.add(BundleSymbol::make(data.space, {}, {}, a));
  e.add(BundleSymbol::make(data.space, {}, {}, d));
  return curve_obstruction(e, data.targets);
}

}  // namespace fanohyp::koszul
