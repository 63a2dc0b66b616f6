#pragma once

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "horopack/coxeter.hpp"
#include "horopack/horoball.hpp"
#include "horopack/inball.hpp"
#include "horopack/montecarlo.hpp"
#include "horopack/reference.hpp"
#include "horopack/volume.hpp"

// Case reports: every number carries its provenance (computed value, printed
// reference value when one exists, and their difference), plus the list of
// reference cells the computation disagrees with.
namespace horopack {

struct Quantity {
  double computed = 0.0;
  std::optional<double> printed;
  std::optional<double> printed_fraction;
  std::optional<double> delta;  // |computed - printed|
  bool consistent = true;       // within print tolerance of every printed form
};

struct Discrepancy {
  std::string id;
  double computed = 0.0;
  std::optional<double> printed;
  std::optional<double> adopted;
  std::string note;
  bool known = false;  // listed in the bundled adjudications
};

namespace detail {

inline std::string fmt12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

// All serialized floats carry 12 significant digits.
inline double round12(double v) { return std::strtod(fmt12(v).c_str(), nullptr); }

}  // namespace detail

class ReportBuilder {
 public:
  explicit ReportBuilder(std::vector<Discrepancy>* sink) : sink_(sink) {}

  /// Attaches reference data for table cell (table,symbol,vertex,column) and
  /// records a discrepancy when the computed value disagrees with any printed
  /// representation.
  Quantity quantity(double computed, int table, const std::string& symbol,
                    int vertex, const std::string& column) const {
    Quantity q;
    q.computed = computed;
    const auto cell = ReferenceData::instance().cell(table, symbol, vertex, column);
    if (!cell) return q;
    q.printed = cell->printed;
    q.printed_fraction = cell->printed_fraction;
    if (q.printed) q.delta = std::abs(computed - *q.printed);
    bool ok = true;
    if (q.printed && !matches_printed(computed, *q.printed)) ok = false;
    if (q.printed_fraction && !matches_printed(computed, *q.printed_fraction))
      ok = false;
    q.consistent = ok;
    if (!ok && sink_) {
      Discrepancy d;
      d.id = ReferenceData::cell_id(table, symbol, vertex, column);
      d.computed = computed;
      d.printed = q.printed ? q.printed : q.printed_fraction;
      if (const Adjudication* a = ReferenceData::instance().find_adjudication(d.id)) {
        d.known = true;
        d.adopted = a->adopted;
        d.note = a->note;
      } else {
        d.note = "not in the bundled adjudication list";
      }
      sink_->push_back(d);
    }
    return q;
  }

 private:
  std::vector<Discrepancy>* sink_;
};

struct OneHoroballReport {
  int vertex = -1;
  double s = 0.0;
  int tangent_facet = -1;
  Quantity piece;
  Quantity density;
};

struct TwoHoroballReport {
  int vertex_first = -1, vertex_second = -1;
  double s_first = 0.0, s_second = 0.0;
  std::string relation;
  double t_first = 0.0, t_second = 0.0;
  Quantity piece_sum;
  Quantity density;
};

struct PackingReport {
  SchlafliSymbol symbol;
  int dim = 0;
  std::vector<std::string> vertex_classes;
  std::string volume_method;
  Quantity volume;
  std::string inball_type;
  std::vector<int> inball_touched;
  std::vector<double> inball_center_klein;
  Quantity inradius, ball_volume_q, inball_density;
  std::vector<OneHoroballReport> one_horoball;
  std::optional<TwoHoroballReport> two_horoball;
  std::vector<Discrepancy> discrepancies;

  bool all_known() const {
    return std::all_of(discrepancies.begin(), discrepancies.end(),
                       [](const Discrepancy& d) { return d.known; });
  }
  std::string status() const {
    if (discrepancies.empty()) return "ok";
    return all_known() ? "deviations_known" : "tolerance_failure";
  }
};

/// Full pipeline for one case: volume, inball, one-horoball packing per ideal
/// vertex, and the two-horoball packing when two ideal vertices exist.
inline PackingReport run_case(const SchlafliSymbol& symbol,
                              RealizeMode mode = RealizeMode::Strict) {
  const RealizedOrthoscheme orth = realize(symbol, mode);
  const int n = orth.n;
  const std::string sym = symbol.str();
  const int inball_table = (n == 4) ? 3 : (n == 5 ? 4 : 5);
  const int one_table = (n == 4) ? 6 : (n == 5 ? 7 : 9);
  const int two_table = (n == 5) ? 8 : (n == 6 ? 10 : -1);

  PackingReport rep;
  rep.symbol = symbol;
  rep.dim = n;
  for (auto c : orth.vertex_class) rep.vertex_classes.push_back(to_string(c));
  ReportBuilder qb(&rep.discrepancies);

  VolumeResult vol;
  if (in_catalog(symbol)) {
    vol = vol_truncated_orthoscheme(symbol);
  } else {
    McOptions mc_opts;  // no closed form outside the catalog
    vol = mc_volume(orth, default_cusp_cut(orth), mc_opts);
  }
  rep.volume_method = to_string(vol.method);
  rep.volume = qb.quantity(vol.value, 2, sym, -1, "volume");
  // The per-table volume columns repeat the same number; scan them too so
  // every printed cell is accounted for.
  qb.quantity(vol.value, inball_table, sym, -1, "volume");

  const InballResult ib = inball_truncated(orth);
  rep.inball_type = to_string(ib.type);
  rep.inball_touched = ib.touched_faces;
  const Vec ck = klein_coords(ib.center);
  rep.inball_center_klein.assign(ck.data(), ck.data() + ck.size());
  rep.inradius = qb.quantity(ib.radius, inball_table, sym, -1, "inradius");
  const double vb = ball_volume(ib.radius, n);
  rep.ball_volume_q = qb.quantity(vb, inball_table, sym, -1, "ball_volume");
  rep.inball_density = qb.quantity(vb / vol.value, inball_table, sym, -1, "density");

  const std::vector<int> ideals = orth.ideal_vertices();
  for (int v : ideals) {
    const AdmissibleHoroball mb = max_admissible_horoball(orth, v);
    OneHoroballReport one;
    one.vertex = v;
    one.s = mb.ball.s;
    one.tangent_facet = mb.tangent_facet;
    const double piece = horoball_piece_volume(orth, mb.ball);
    one.piece = qb.quantity(piece, one_table, sym, v, "piece");
    qb.quantity(vol.value, one_table, sym, v, "volume");
    one.density = qb.quantity(piece / vol.value, one_table, sym, v, "density");
    rep.one_horoball.push_back(one);
  }

  if (ideals.size() == 2) {
    const TwoHoroballPacking two =
        optimize_two_horoballs(orth, ideals[0], ideals[1], vol.value);
    TwoHoroballReport tr;
    tr.vertex_first = ideals[0];
    tr.vertex_second = ideals[1];
    tr.s_first = two.first.s;
    tr.s_second = two.second.s;
    tr.relation = to_string(two.relation);
    tr.t_first = two.t_first;
    tr.t_second = two.t_second;
    if (two_table >= 0) {  // only dimensions 5 and 6 have a reference table
      tr.piece_sum = qb.quantity(two.piece_first + two.piece_second, two_table,
                                 sym, -1, "piece_sum");
      qb.quantity(vol.value, two_table, sym, -1, "volume");
      tr.density = qb.quantity(two.density, two_table, sym, -1, "density");
    } else {
      tr.piece_sum.computed = two.piece_first + two.piece_second;
      tr.density.computed = two.density;
    }
    rep.two_horoball = tr;
  }
  return rep;
}

// ---- serialization ----------------------------------------------------

inline void to_json(nlohmann::json& j, const Quantity& q) {
  j = nlohmann::json{{"computed", detail::round12(q.computed)}};
  if (q.printed) j["printed"] = detail::round12(*q.printed);
  if (q.printed_fraction) j["printed_fraction"] = detail::round12(*q.printed_fraction);
  if (q.delta) j["delta"] = detail::round12(*q.delta);
  j["consistent"] = q.consistent;
}

inline void to_json(nlohmann::json& j, const Discrepancy& d) {
  j = nlohmann::json{{"id", d.id},
                     {"computed", detail::round12(d.computed)},
                     {"known", d.known},
                     {"note", d.note}};
  if (d.printed) j["printed"] = detail::round12(*d.printed);
  if (d.adopted) j["adopted"] = detail::round12(*d.adopted);
}

inline nlohmann::json report_to_json(const PackingReport& r) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["symbol"] = r.symbol.str();
  j["dim"] = r.dim;
  j["vertex_classes"] = r.vertex_classes;
  j["volume"] = r.volume;
  j["volume"]["method"] = r.volume_method;
  std::vector<double> center;
  for (double c : r.inball_center_klein) center.push_back(detail::round12(c));
  j["inball"] = {{"type", r.inball_type},
                 {"touched_faces", r.inball_touched},
                 {"center_klein", center},
                 {"inradius", r.inradius},
                 {"ball_volume", r.ball_volume_q},
                 {"density", r.inball_density}};
  nlohmann::json ones = nlohmann::json::array();
  for (const auto& o : r.one_horoball)
    ones.push_back({{"vertex", o.vertex},
                    {"s", detail::round12(o.s)},
                    {"tangent_facet", o.tangent_facet},
                    {"piece", o.piece},
                    {"density", o.density}});
  j["horoballs"]["one"] = ones;
  if (r.two_horoball) {
    const auto& t = *r.two_horoball;
    j["horoballs"]["two"] = {
        {"vertices", {t.vertex_first, t.vertex_second}},
        {"s", {detail::round12(t.s_first), detail::round12(t.s_second)}},
        {"relation", t.relation},
        {"edge_t", {detail::round12(t.t_first), detail::round12(t.t_second)}},
        {"piece_sum", t.piece_sum},
        {"density", t.density}};
  }
  j["discrepancies"] = r.discrepancies;
  j["status"] = r.status();
  return j;
}

/// Flat CSV rows "field,computed,printed,delta,consistent" for one report.
inline std::string report_to_csv(const PackingReport& r) {
  std::string out = "field,computed,printed,delta,consistent\n";
  auto row = [&](const std::string& name, const Quantity& q) {
    out += name + ',' + detail::fmt12(q.computed) + ',';
    out += q.printed ? detail::fmt12(*q.printed) : std::string();
    out += ',';
    out += q.delta ? detail::fmt12(*q.delta) : std::string();
    out += ',';
    out += q.consistent ? "true" : "false";
    out += '\n';
  };
  row("volume", r.volume);
  row("inball.inradius", r.inradius);
  row("inball.ball_volume", r.ball_volume_q);
  row("inball.density", r.inball_density);
  for (const auto& o : r.one_horoball) {
    const std::string p = "horoball.v" + std::to_string(o.vertex);
    Quantity s;
    s.computed = o.s;
    row(p + ".s", s);
    row(p + ".piece", o.piece);
    row(p + ".density", o.density);
  }
  if (r.two_horoball) {
    row("two_horoball.piece_sum", r.two_horoball->piece_sum);
    row("two_horoball.density", r.two_horoball->density);
  }
  return out;
}

// ---- table reproduction ------------------------------------------------

struct TableSummary {
  int table = 0;
  int rows = 0;
  double max_consistent_delta = 0.0;  // over cells not under adjudication
  int flagged_cells = 0;
  bool clean = true;  // every flagged cell is a known adjudication
};

/// Reproduces reference tables 3..10 as csv or json files in out_dir.
inline std::vector<TableSummary> reproduce_tables(const std::vector<int>& ids,
                                                  const std::string& out_dir,
                                                  const std::string& format) {
  std::map<std::string, PackingReport> cache;
  auto report_for = [&](const SchlafliSymbol& s) -> const PackingReport& {
    auto it = cache.find(s.str());
    if (it == cache.end())
      it = cache.emplace(s.str(), run_case(s)).first;
    return it->second;
  };

  std::vector<TableSummary> summaries;
  for (int id : ids) {
    if (id < 3 || id > 10)
      throw std::invalid_argument("reproduce_tables: table id out of range 3..10");
    TableSummary sum;
    sum.table = id;
    nlohmann::json jrows = nlohmann::json::array();
    std::string csv;

    auto emit = [&](const std::string& symbol, int vertex,
                    const std::vector<std::pair<std::string, Quantity>>& cols) {
      ++sum.rows;
      nlohmann::json jr;
      jr["symbol"] = symbol;
      if (vertex >= 0) jr["vertex"] = vertex;
      std::string line = symbol;
      if (vertex >= 0) line += "," + std::to_string(vertex);
      for (const auto& [name, q] : cols) {
        jr[name] = q;
        line += ',' + detail::fmt12(q.computed);
        line += ',' + (q.printed ? detail::fmt12(*q.printed) : std::string());
        line += ',' + (q.delta ? detail::fmt12(*q.delta) : std::string());
        if (!q.consistent) {
          ++sum.flagged_cells;
          const std::string cid =
              ReferenceData::cell_id(id, symbol, vertex, name);
          if (!ReferenceData::instance().find_adjudication(cid)) sum.clean = false;
        } else if (q.delta) {
          sum.max_consistent_delta = std::max(sum.max_consistent_delta, *q.delta);
        }
      }
      jrows.push_back(jr);
      csv += line + '\n';
    };

    for (const SchlafliSymbol& s : catalog()) {
      const int n = s.dim();
      const std::string sym = s.str();
      const PackingReport& r = report_for(s);
      if ((id == 3 && n == 4) || (id == 4 && n == 5) || (id == 5 && n == 6)) {
        emit(sym, -1,
             {{"inradius", r.inradius},
              {"ball_volume", r.ball_volume_q},
              {"volume", r.volume},
              {"density", r.inball_density}});
      } else if ((id == 6 && n == 4) || (id == 7 && n == 5) || (id == 9 && n == 6)) {
        // one row per ideal vertex, larger index first as in the reference
        std::vector<OneHoroballReport> ones = r.one_horoball;
        std::sort(ones.begin(), ones.end(),
                  [](const auto& a, const auto& b) { return a.vertex > b.vertex; });
        ReportBuilder qb(nullptr);
        for (const auto& o : ones)
          emit(sym, o.vertex,
               {{"piece", o.piece},
                {"volume", qb.quantity(r.volume.computed, id, sym, o.vertex, "volume")},
                {"density", o.density}});
      } else if ((id == 8 && n == 5) || (id == 10 && n == 6)) {
        if (r.two_horoball)
          emit(sym, -1,
               {{"piece_sum", r.two_horoball->piece_sum},
                {"volume", r.volume},
                {"density", r.two_horoball->density}});
      }
    }

    const std::string base = out_dir + "/table" + std::to_string(id);
    if (format == "json") {
      nlohmann::json jt = {{"schema_version", 1}, {"table", id}, {"rows", jrows}};
      std::ofstream(base + ".json") << jt.dump(1) << '\n';
    } else {
      std::string header = "symbol,";
      if (id == 6 || id == 7 || id == 9) header += "vertex,";
      const char* cols3 = "inradius,inradius_printed,inradius_delta,"
                          "ball_volume,ball_volume_printed,ball_volume_delta,"
                          "volume,volume_printed,volume_delta,"
                          "density,density_printed,density_delta";
      const char* colsH = "piece,piece_printed,piece_delta,"
                          "volume,volume_printed,volume_delta,"
                          "density,density_printed,density_delta";
      const char* colsS = "piece_sum,piece_sum_printed,piece_sum_delta,"
                          "volume,volume_printed,volume_delta,"
                          "density,density_printed,density_delta";
      header += (id <= 5) ? cols3 : (id == 8 || id == 10 ? colsS : colsH);
      std::ofstream(base + ".csv") << header << '\n' << csv;
    }
    summaries.push_back(sum);
  }
  return summaries;
}

// ---- Monte Carlo verification -------------------------------------------

struct McVerifyRow {
  std::string symbol;
  double analytic = 0.0, estimate = 0.0, stderror = 0.0, z = 0.0;
  double seconds = 0.0;
};

inline McVerifyRow mc_verify_case(const SchlafliSymbol& symbol,
                                  const McOptions& opts) {
  const RealizedOrthoscheme orth = realize(symbol);
  const double analytic = vol_truncated_orthoscheme(symbol).value;
  const auto cuts = default_cusp_cut(orth);
  const auto t0 = std::chrono::steady_clock::now();
  const VolumeResult mc = mc_volume(orth, cuts, opts);
  const auto t1 = std::chrono::steady_clock::now();
  McVerifyRow row;
  row.symbol = symbol.str();
  row.analytic = analytic;
  row.estimate = mc.value;
  row.stderror = mc.stderror;
  row.z = (mc.value - analytic) / mc.stderror;
  row.seconds = std::chrono::duration<double>(t1 - t0).count();
  return row;
}

}  // namespace horopack
