#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "horopack/reference_values_json.hpp"

// Bundled reference values: the printed table entries this tool reproduces,
// plus the adjudication list for cells whose printed content disagrees with
// the computed geometry.
namespace horopack {

struct RefCell {
  std::optional<double> printed;           // numeral as printed
  std::optional<double> printed_fraction;  // value of a printed closed form
};

struct Adjudication {
  std::string id;
  std::optional<double> printed;
  std::optional<double> adopted;
  std::string note;
};

class ReferenceData {
 public:
  static const ReferenceData& instance() {
    static ReferenceData d;
    return d;
  }

  /// Cell lookup; vertex < 0 means the row has no vertex column.
  std::optional<RefCell> cell(int table, const std::string& symbol, int vertex,
                              const std::string& column) const {
    const auto it = cells_.find(key(table, symbol, vertex, column));
    if (it == cells_.end()) return std::nullopt;
    return it->second;
  }

  const std::vector<Adjudication>& adjudications() const { return adj_; }

  const Adjudication* find_adjudication(const std::string& id) const {
    for (const auto& a : adj_)
      if (a.id == id) return &a;
    return nullptr;
  }

  int schema_version() const { return schema_version_; }

  static std::string cell_id(int table, const std::string& symbol, int vertex,
                             const std::string& column) {
    return key(table, symbol, vertex, column);
  }

 private:
  static std::string key(int table, const std::string& symbol, int vertex,
                         const std::string& column) {
    std::string k = "table" + std::to_string(table) + ":" + symbol;
    if (vertex >= 0) k += ":" + std::to_string(vertex);
    return k + ":" + column;
  }

  ReferenceData() {
    const nlohmann::json j = nlohmann::json::parse(detail::kReferenceValuesJson);
    schema_version_ = j.at("schema_version").get<int>();
    for (const auto& [tname, tbl] : j.at("tables").items()) {
      const int tid = std::stoi(tname);
      for (const auto& row : tbl.at("rows")) {
        const std::string symbol = row.at("symbol").get<std::string>();
        const int vertex = row.contains("vertex") ? row.at("vertex").get<int>() : -1;
        for (const auto& [col, val] : row.items()) {
          if (col == "symbol" || col == "vertex") continue;
          RefCell c;
          if (val.contains("printed") && !val.at("printed").is_null())
            c.printed = val.at("printed").get<double>();
          if (val.contains("printed_fraction"))
            c.printed_fraction = val.at("printed_fraction").get<double>();
          cells_[key(tid, symbol, vertex, col)] = c;
        }
      }
    }
    for (const auto& a : j.at("adjudications")) {
      Adjudication ad;
      ad.id = a.at("id").get<std::string>();
      if (a.contains("printed") && !a.at("printed").is_null())
        ad.printed = a.at("printed").get<double>();
      if (a.contains("adopted") && !a.at("adopted").is_null())
        ad.adopted = a.at("adopted").get<double>();
      ad.note = a.at("note").get<std::string>();
      adj_.push_back(ad);
    }
  }

  std::map<std::string, RefCell> cells_;
  std::vector<Adjudication> adj_;
  int schema_version_ = 0;
};

/// Print-precision comparison: 5e-5 absolute or relative, whichever is looser.
inline bool matches_printed(double computed, double printed) {
  const double tol = std::max(5e-5, 5e-5 * std::abs(printed));
  return std::abs(computed - printed) <= tol;
}

}  // namespace horopack
