#include "fanohyp.h"

#include <limits>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "bundles.hpp"
#include "catalog.hpp"
#include "koszul.hpp"
#include "wps.hpp"

using nlohmann::json;
namespace bd = fanohyp::bundles;
namespace ko = fanohyp::koszul;
namespace wp = fanohyp::wps;
namespace ct = fanohyp::catalog;
using fanohyp::Int;
using fanohyp::Rat;

struct fanohyp_result {
  std::string kind;
  json data;
  std::map<int, std::string> rendered;
};

namespace {

constexpr const char* kVersion = "fanohyp 0.1.0";

thread_local std::string g_last_error;

json int_json(const Int& v) {
  // exact as a JSON integer when it fits, decimal string otherwise
  static const Int lo = std::numeric_limits<long long>::min();
  static const Int hi = std::numeric_limits<long long>::max();
  if (v >= lo && v <= hi) return static_cast<long long>(v);
  return v.str();
}

json rat_json(const Rat& v) {
  return json{{"num", static_cast<long long>(numerator(v))},
              {"den", static_cast<long long>(denominator(v))}};
}

std::string rat_str(const Rat& v) {
  std::string s = numerator(v).str();
  if (denominator(v) != 1) s += "/" + denominator(v).str();
  return s;
}

std::string int_str(const json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

fanohyp::weights::Weight to_weight(const long long* w, size_t len) {
  if (len == 0) return {};
  if (!w) throw std::invalid_argument("null weight with entries");
  return fanohyp::weights::Weight(w, w + len);
}

json weight_json(const fanohyp::weights::Weight& w) {
  return json(std::vector<long long>(w.begin(), w.end()));
}

std::string join_ll(const json& arr, const char* sep) {
  std::string out;
  for (const auto& v : arr) {
    if (!out.empty()) out += sep;
    out += v.dump();
  }
  return out;
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ",";
    out += csv_cell(cells[i]);
  }
  return out + "\n";
}

std::string md_row(const std::vector<std::string>& cells) {
  std::string out = "|";
  for (const auto& c : cells) out += " " + c + " |";
  return out + "\n";
}

std::string md_rule(std::size_t n) {
  std::string out = "|";
  for (std::size_t i = 0; i < n; ++i) out += "---|";
  return out + "\n";
}

std::string hit_str(const json& h) {
  return "(" + h["i"].dump() + ", " + h["N"].dump() + ", " +
         int_str(h["dim"]) + ")";
}

std::string hits_cell(const json& hits, const char* sep) {
  if (hits.empty()) return "-";
  std::string out;
  for (const auto& h : hits) {
    if (!out.empty()) out += sep;
    out += hit_str(h);
  }
  return out;
}

// --- markdown -------------------------------------------------------------

std::string md_bott(const json& d) {
  std::string out = d["bundle"].get<std::string>() + " on Gr(" +
                    d["space"]["k"].dump() + "," + d["space"]["n"].dump() +
                    ")\n";
  if (d["vanishes"].get<bool>()) return out + "all cohomology vanishes\n";
  return out + "H^" + d["degree"].dump() + ": dimension " +
         int_str(d["dim"]) + "\n";
}

std::string md_scan(const json& d) {
  std::string out =
      d["bundle"].get<std::string>() + " (-N) on Gr(" +
      d["space"]["k"].dump() + "," + d["space"]["n"].dump() + "), " +
      d["region"]["n_min"].dump() + " <= N <= " + d["region"]["n_max"].dump() +
      ", degrees i <= " + d["region"]["i_max"].dump() + "\n\n";
  if (d["hits"].empty()) return out + "no hits\n";
  out += md_row({"i", "N", "dim"});
  out += md_rule(3);
  for (const auto& h : d["hits"])
    out += md_row({h["i"].dump(), h["N"].dump(), int_str(h["dim"])});
  return out;
}

std::string md_tables(const json& d) {
  std::string out = "# Fano " + d["id"].get<std::string>() + " tables on Gr(" +
                    d["space"]["k"].dump() + "," + d["space"]["n"].dump() +
                    ")\n\nTwists swept to N = " + d["n_max"].dump() +
                    ".\n\n## Vanishing regions\n\n";
  out += md_row({"bundle", "claim", "verified"});
  out += md_rule(3);
  for (const auto& r : d["vanishing"]) {
    std::string claim = "i <= " + r["i_max"].dump() + ": N >= " +
                        r["n_min"].dump();
    for (const auto& c : r["caveats"])
      claim += " (i = " + c["i"].dump() + ": N >= " + c["n_min"].dump() + ")";
    out += md_row({r["bundle"].get<std::string>(), claim,
                   r["verified"].get<bool>() ? "yes" : "NO"});
  }
  out += "\n## Nonvanishing exceptions\n\n";
  out += md_row({"bundle", "hits (i, N, dim)"});
  out += md_rule(2);
  for (const auto& r : d["exceptions"])
    out += md_row({r["bundle"].get<std::string>(), hits_cell(r["hits"], ", ")});
  return out;
}

std::string md_koszul(const json& d) {
  std::string out = "Fano " + d["id"].get<std::string>() + " tables: ";
  out += d["violations"].empty()
             ? "vanishing verified (" + d["vanishing_rows"].dump() + " rows)"
             : "vanishing VIOLATED in " +
                   std::to_string(d["violations"].size()) + " rows";
  out += d["exceptions_match"].get<bool>() ? ", exceptions match"
                                           : ", exceptions DIFFER";
  out += " (" + std::to_string(d["exceptions"].size()) + " rows)\n";
  for (const auto& r : d["exceptions"])
    out += "- " + r["bundle"].get<std::string>() + ": " +
           hits_cell(r["hits"], ", ") + "\n";
  if (!d["curve"].is_null()) {
    const auto& c = d["curve"];
    out += "curve check a=" + c["a"].dump() + " d=" + c["d"].dump() + ": ";
    if (c["ok"].get<bool>()) {
      out += "ok\n";
    } else {
      const auto& w = c["witness"];
      out += "H^" + w["degree"].dump() + "(" +
             w["summand"].get<std::string>() + ") != 0 against target " +
             w["target"].get<std::string>() + "\n";
    }
  }
  return out;
}

std::string md_closed_form(const json& d) {
  return "closed form vs direct computation on Gr(" + d["space"]["k"].dump() +
         "," + d["space"]["n"].dump() + "), twists to " + d["d_max"].dump() +
         ": " + d["mismatches"].dump() + " mismatches\n";
}

std::string md_wps(const json& d) {
  std::string space = "P(1^" + d["space"]["units"].dump();
  for (const auto& h : d["space"]["heavy"]) space += "," + h.dump();
  space += ")";
  return space + ": sections of O(" + d["d"].dump() +
         ") dominate O(" + d["a"].dump() + "): " +
         (d["surjective"].get<bool>() ? "yes" : "no") + " (rank " +
         d["rank"].dump() + " of " + d["target_dim"].dump() + ")\n";
}

std::string md_fano(const json& d) {
  std::string out = "Fano " + d["id"].get<std::string>() + " (" +
                    d["description"].get<std::string>() + "), a = " +
                    d["a"].dump() + ": " + d["status"].get<std::string>() +
                    "\n";
  if (!d["coefficient"].is_null()) {
    Rat c(d["coefficient"]["num"].get<long long>(),
          d["coefficient"]["den"].get<long long>());
    out += "genus slope " + rat_str(c) + " via " +
           d["argument"].get<std::string>() + "\n";
  }
  out += "\narguments:\n";
  for (const auto& arg : d["arguments"]) {
    out += "- " + arg["name"].get<std::string>() + " (a >= " +
           arg["min_a"].dump();
    if (!arg["max_a"].is_null()) out += ", a <= " + arg["max_a"].dump();
    out += "): ";
    if (arg["bound"].is_null()) {
      out += "not applicable";
    } else {
      Rat b(arg["bound"]["num"].get<long long>(),
            arg["bound"]["den"].get<long long>());
      out += "bound " + rat_str(b);
    }
    std::string cases;
    for (const auto& c : arg["cases"]) {
      if (!cases.empty()) cases += ", ";
      Rat v(c["coefficient"]["num"].get<long long>(),
            c["coefficient"]["den"].get<long long>());
      cases += c["name"].get<std::string>() + ": " + rat_str(v);
    }
    out += " [" + cases + "]\n";
  }
  if (!d["checks"].empty()) {
    out += "\nchecks:\n";
    for (const auto& c : d["checks"]) {
      out += std::string("- [") + c["source"].get<std::string>() + "] " +
             (c["result"].get<bool>() ? "pass" : "FAIL") + " " +
             c["name"].get<std::string>();
      std::string detail = c["detail"].get<std::string>();
      if (!detail.empty()) out += ": " + detail;
      out += "\n";
    }
  }
  return out;
}

// --- csv ------------------------------------------------------------------

std::string csv_bott(const json& d) {
  std::string out = csv_row({"k", "n", "u_weight", "q_weight", "twist",
                             "bundle", "vanishes", "degree", "dim"});
  out += csv_row({d["space"]["k"].dump(), d["space"]["n"].dump(),
                  join_ll(d["u_weight"], ";"), join_ll(d["q_weight"], ";"),
                  d["twist"].dump(), d["bundle"].get<std::string>(),
                  d["vanishes"].dump(),
                  d["degree"].is_null() ? "" : d["degree"].dump(),
                  d["dim"].is_null() ? "" : int_str(d["dim"])});
  return out;
}

std::string csv_scan(const json& d) {
  std::string out = csv_row({"k", "n", "u_weight", "q_weight", "i_max",
                             "n_min", "n_max", "i", "N", "dim"});
  for (const auto& h : d["hits"])
    out += csv_row({d["space"]["k"].dump(), d["space"]["n"].dump(),
                    join_ll(d["u_weight"], ";"), join_ll(d["q_weight"], ";"),
                    d["region"]["i_max"].dump(), d["region"]["n_min"].dump(),
                    d["region"]["n_max"].dump(), h["i"].dump(), h["N"].dump(),
                    int_str(h["dim"])});
  return out;
}

std::string csv_tables(const json& d) {
  std::string out = csv_row(
      {"id", "table", "bundle", "u_weight", "q_weight", "claim", "hits"});
  for (const auto& r : d["vanishing"]) {
    std::string claim = "i<=" + r["i_max"].dump() + ";N>=" + r["n_min"].dump();
    for (const auto& c : r["caveats"])
      claim += ";i=" + c["i"].dump() + ":N>=" + c["n_min"].dump();
    out += csv_row({d["id"].get<std::string>(), "vanishing",
                    r["bundle"].get<std::string>(), join_ll(r["u"], ";"),
                    join_ll(r["q"], ";"), claim,
                    r["verified"].get<bool>() ? "verified" : "violated"});
  }
  for (const auto& r : d["exceptions"])
    out += csv_row({d["id"].get<std::string>(), "exception",
                    r["bundle"].get<std::string>(), join_ll(r["u"], ";"),
                    join_ll(r["q"], ";"), "", hits_cell(r["hits"], ";")});
  return out;
}

std::string csv_koszul(const json& d) {
  std::string out =
      csv_row({"id", "vanishing_rows", "violations", "exceptions_match",
               "curve_a", "curve_d", "curve_ok"});
  bool curve = !d["curve"].is_null();
  out += csv_row({d["id"].get<std::string>(), d["vanishing_rows"].dump(),
                  std::to_string(d["violations"].size()),
                  d["exceptions_match"].dump(),
                  curve ? d["curve"]["a"].dump() : "",
                  curve ? d["curve"]["d"].dump() : "",
                  curve ? d["curve"]["ok"].dump() : ""});
  return out;
}

std::string csv_closed_form(const json& d) {
  return csv_row({"k", "n", "d_max", "mismatches"}) +
         csv_row({d["space"]["k"].dump(), d["space"]["n"].dump(),
                  d["d_max"].dump(), d["mismatches"].dump()});
}

std::string csv_wps(const json& d) {
  return csv_row({"units", "heavy", "d", "a", "surjective", "rank",
                  "target_dim"}) +
         csv_row({d["space"]["units"].dump(), join_ll(d["space"]["heavy"], ";"),
                  d["d"].dump(), d["a"].dump(), d["surjective"].dump(),
                  d["rank"].dump(), d["target_dim"].dump()});
}

std::string csv_fano(const json& d) {
  std::string out =
      csv_row({"id", "a", "status", "coefficient_num", "coefficient_den",
               "argument", "check_name", "check_result", "check_source"});
  std::vector<std::string> base = {
      d["id"].get<std::string>(), d["a"].dump(), d["status"].get<std::string>(),
      d["coefficient"].is_null() ? "" : d["coefficient"]["num"].dump(),
      d["coefficient"].is_null() ? "" : d["coefficient"]["den"].dump(),
      d["argument"].get<std::string>()};
  if (d["checks"].empty()) {
    auto row = base;
    row.insert(row.end(), {"", "", ""});
    out += csv_row(row);
    return out;
  }
  for (const auto& c : d["checks"]) {
    auto row = base;
    row.insert(row.end(), {c["name"].get<std::string>(), c["result"].dump(),
                           c["source"].get<std::string>()});
    out += csv_row(row);
  }
  return out;
}

std::string render(fanohyp_result& r, fanohyp_format f) {
  if (f == FANOHYP_FORMAT_JSON) return r.data.dump(2) + "\n";
  if (f == FANOHYP_FORMAT_CSV) {
    if (r.kind == "bott") return csv_bott(r.data);
    if (r.kind == "scan") return csv_scan(r.data);
    if (r.kind == "tables") return csv_tables(r.data);
    if (r.kind == "koszul") return csv_koszul(r.data);
    if (r.kind == "closed_form") return csv_closed_form(r.data);
    if (r.kind == "wps") return csv_wps(r.data);
    if (r.kind == "fano") return csv_fano(r.data);
  }
  if (f == FANOHYP_FORMAT_MARKDOWN) {
    if (r.kind == "bott") return md_bott(r.data);
    if (r.kind == "scan") return md_scan(r.data);
    if (r.kind == "tables") return md_tables(r.data);
    if (r.kind == "koszul") return md_koszul(r.data);
    if (r.kind == "closed_form") return md_closed_form(r.data);
    if (r.kind == "wps") return md_wps(r.data);
    if (r.kind == "fano") return md_fano(r.data);
  }
  throw std::invalid_argument("unknown render format");
}

template <typename F>
fanohyp_status guarded(fanohyp_result** out, F&& fn) {
  if (!out) {
    g_last_error = "null result handle";
    return FANOHYP_ERR_INVALID_ARGUMENT;
  }
  try {
    auto res = std::make_unique<fanohyp_result>();
    fn(*res);
    *out = res.release();
    g_last_error.clear();
    return FANOHYP_OK;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return FANOHYP_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return FANOHYP_ERR_INTERNAL;
  }
}

json scan_hits_json(const std::vector<ko::ScanHit>& hits) {
  json out = json::array();
  for (const auto& h : hits)
    out.push_back({{"i", h.i}, {"N", h.N}, {"dim", int_json(h.dim)}});
  return out;
}

json tables_json(const ko::FamilyTables& t, long long n_max) {
  json vanishing = json::array();
  for (std::size_t row = 0; row < t.vanishing.size(); ++row) {
    const auto& r = t.vanishing[row];
    json caveats = json::array();
    for (const auto& [deg, bound] : r.caveats)
      caveats.push_back({{"i", deg}, {"n_min", bound}});
    vanishing.push_back(
        {{"bundle",
          bd::BundleSymbol::make(t.space, r.u.parts(), r.q.parts(), 0)
              .to_string()},
         {"u", weight_json(r.u.parts())},
         {"q", weight_json(r.q.parts())},
         {"i_max", r.i_max},
         {"n_min", r.n_min},
         {"caveats", caveats},
         {"verified", true}});
  }
  for (const auto& v : ko::verify_vanishing_rows(t, n_max))
    vanishing[v.row]["verified"] = false;

  auto computed = ko::compute_exception_rows(t);
  json exceptions = json::array();
  for (std::size_t row = 0; row < t.exceptions.size(); ++row) {
    const auto& r = t.exceptions[row];
    exceptions.push_back(
        {{"bundle",
          bd::BundleSymbol::make(t.space, r.u.parts(), r.q.parts(), 0)
              .to_string()},
         {"u", weight_json(r.u.parts())},
         {"q", weight_json(r.q.parts())},
         {"hits", scan_hits_json(computed[row])}});
  }
  return json{{"id", t.id},
              {"space", {{"k", t.space.k}, {"n", t.space.n}}},
              {"region",
               {{"i_max", t.region.i_max},
                {"n_min", t.region.n_min},
                {"n_max", t.region.n_max}}},
              {"n_max", n_max},
              {"vanishing", vanishing},
              {"exceptions", exceptions}};
}

}  // namespace

extern "C" {

const char* fanohyp_version(void) { return kVersion; }

const char* fanohyp_last_error(void) { return g_last_error.c_str(); }

fanohyp_status fanohyp_bott(int k, int n, const long long* u, size_t u_len,
                            const long long* q, size_t q_len, long long twist,
                            fanohyp_result** out) {
  return guarded(out, [&](fanohyp_result& r) {
    bd::Grassmannian g(k, n);
    auto sym =
        bd::BundleSymbol::make(g, to_weight(u, u_len), to_weight(q, q_len),
                               twist);
    auto c = bd::cohomology(sym);
    r.kind = "bott";
    r.data = {{"space", {{"k", k}, {"n", n}}},
              {"u_weight", weight_json(sym.u().parts())},
              {"q_weight", weight_json(sym.q().parts())},
              {"twist", sym.twist()},
              {"bundle", sym.to_string()},
              {"vanishes", c.vanishes},
              {"degree", c.vanishes ? json(nullptr) : json(c.degree)},
              {"dim", c.vanishes ? json(nullptr) : int_json(c.dim)}};
  });
}

fanohyp_status fanohyp_scan(int k, int n, const long long* u, size_t u_len,
                            const long long* q, size_t q_len, int i_max,
                            long long n_min, long long n_max,
                            fanohyp_result** out) {
  return guarded(out, [&](fanohyp_result& r) {
    if (n_min > n_max) throw std::invalid_argument("empty twist range");
    bd::Grassmannian g(k, n);
    fanohyp::weights::Partition pu(to_weight(u, u_len));
    fanohyp::weights::Partition pq(to_weight(q, q_len));
    auto rep = ko::scan(g, pu, pq, {i_max, n_min, n_max});
    r.kind = "scan";
    r.data = {
        {"space", {{"k", k}, {"n", n}}},
        {"u_weight", weight_json(pu.parts())},
        {"q_weight", weight_json(pq.parts())},
        {"bundle",
         bd::BundleSymbol::make(g, pu.parts(), pq.parts(), 0).to_string()},
        {"region", {{"i_max", i_max}, {"n_min", n_min}, {"n_max", n_max}}},
        {"hits", scan_hits_json(rep.hits)}};
  });
}

fanohyp_status fanohyp_tables(const char* id, long long n_max,
                              fanohyp_result** out) {
  return guarded(out, [&](fanohyp_result& r) {
    if (!id) throw std::invalid_argument("null family id");
    const auto& t = ko::fano_scan_tables(id);
    if (n_max <= 0) n_max = t.region.n_max;
    r.kind = "tables";
    r.data = tables_json(t, n_max);
  });
}

fanohyp_status fanohyp_koszul_verify(const char* id, long long a, long long d,
                                     fanohyp_result** out) {
  return guarded(out, [&](fanohyp_result& r) {
    if (!id) throw std::invalid_argument("null family id");
    const auto& t = ko::fano_scan_tables(id);
    auto violations = ko::verify_vanishing_rows(t, t.region.n_max);
    json vio = json::array();
    for (const auto& v : violations)
      vio.push_back({{"row", v.row}, {"i", v.hit.i}, {"N", v.hit.N}});

    auto computed = ko::compute_exception_rows(t);
    bool match = true;
    json exceptions = json::array();
    for (std::size_t row = 0; row < t.exceptions.size(); ++row) {
      const auto& e = t.exceptions[row];
      exceptions.push_back(
          {{"bundle",
            bd::BundleSymbol::make(t.space, e.u.parts(), e.q.parts(), 0)
                .to_string()},
           {"hits", scan_hits_json(computed[row])}});
      match = match && computed[row].size() == e.expected.size();
      for (std::size_t j = 0; match && j < e.expected.size(); ++j)
        match = computed[row][j].i == e.expected[j].first &&
                computed[row][j].N == e.expected[j].second;
    }

    json curve = nullptr;
    if (a > 0 && d > 0) {
      auto obs = ko::run_curve_check(id, a, d);
      curve = {{"a", a}, {"d", d}, {"ok", !obs.has_value()}};
      if (obs) {
        curve["witness"] = {{"target", obs->target.to_string()},
                            {"summand", obs->witness.summand.to_string()},
                            {"index", obs->witness.koszul_index},
                            {"degree", obs->witness.degree},
                            {"dim", int_json(obs->witness.dim)}};
      } else {
        curve["witness"] = nullptr;
      }
    }

    r.kind = "koszul";
    r.data = {{"id", t.id},
              {"space", {{"k", t.space.k}, {"n", t.space.n}}},
              {"vanishing_rows", t.vanishing.size()},
              {"violations", vio},
              {"exceptions_match", match},
              {"exceptions", exceptions},
              {"curve", curve}};
  });
}

fanohyp_status fanohyp_closed_form(int k, int n, long long d_max,
                                   fanohyp_result** out) {
  return guarded(out, [&](fanohyp_result& r) {
    bd::Grassmannian g(k, n);
    long long mismatches = ko::closed_form_mismatches(g, d_max);
    r.kind = "closed_form";
    r.data = {{"space", {{"k", k}, {"n", n}}},
              {"d_max", d_max},
              {"mismatches", mismatches}};
  });
}

fanohyp_status fanohyp_wps_check(int units, const long long* heavy,
                                 size_t heavy_len, long long d, long long a,
                                 fanohyp_result** out) {
  return guarded(out, [&](fanohyp_result& r) {
    std::vector<long long> hv;
    if (heavy_len > 0) {
      if (!heavy) throw std::invalid_argument("null heavy weights");
      hv.assign(heavy, heavy + heavy_len);
    }
    wp::WeightedSpace sp(units, hv);
    auto rep = wp::section_dominating_check(sp, d, a);
    r.kind = "wps";
    r.data = {{"space", {{"units", sp.units}, {"heavy", sp.heavy}}},
              {"d", rep.d},
              {"a", rep.a},
              {"surjective", rep.surjective},
              {"rank", rep.rank},
              {"target_dim", rep.target_dim}};
  });
}

fanohyp_status fanohyp_fano(const char* id, long long a, int audit,
                            fanohyp_result** out) {
  return guarded(out, [&](fanohyp_result& r) {
    if (!id) throw std::invalid_argument("null family id");
    const auto& m = ct::family(id);

    json checks = json::array();
    ct::Classification cls;
    if (audit) {
      auto rep = ct::audit(id, a);
      cls = rep.classification;
      for (const auto& c : rep.checks) {
        checks.push_back(
            {{"name", c.name},
             {"result", c.passed},
             {"source",
              c.source == ct::FactSource::Machine ? "machine" : "asserted"},
             {"detail", c.detail}});
      }
    } else {
      cls = ct::classify(id, a);
    }

    json arguments = json::array();
    for (const auto& arg : m.arguments) {
      auto bound = ct::argument_bound(m, arg, a);
      json cases = json::array();
      for (const auto& b : arg.cases)
        cases.push_back(
            {{"name", b.name},
             {"coefficient", rat_json(ct::branch_coefficient(m, b, a))}});
      arguments.push_back(
          {{"name", arg.name},
           {"min_a", arg.min_a},
           {"max_a", arg.max_a > 0 ? json(arg.max_a) : json(nullptr)},
           {"bound", bound ? rat_json(*bound) : json(nullptr)},
           {"cases", cases}});
    }

    r.kind = "fano";
    r.data = {{"id", cls.id},
              {"a", cls.a},
              {"description", m.description},
              {"r", m.r},
              {"status", ct::to_string(cls.verdict)},
              {"coefficient",
               cls.coefficient ? rat_json(*cls.coefficient) : json(nullptr)},
              {"argument", cls.argument},
              {"arguments", arguments},
              {"checks", checks}};
  });
}

fanohyp_status fanohyp_result_render(fanohyp_result* res,
                                     fanohyp_format format, const char** out) {
  if (!res || !out) {
    g_last_error = "null argument";
    return FANOHYP_ERR_INVALID_ARGUMENT;
  }
  try {
    auto it = res->rendered.find(format);
    if (it == res->rendered.end())
      it = res->rendered.emplace(format, render(*res, format)).first;
    *out = it->second.c_str();
    g_last_error.clear();
    return FANOHYP_OK;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return FANOHYP_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return FANOHYP_ERR_INTERNAL;
  }
}

void fanohyp_result_free(fanohyp_result* res) { delete res; }

}  // extern "C"
