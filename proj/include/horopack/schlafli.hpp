#pragma once

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace horopack {

// Marker for an infinite edge weight in a Schlafli symbol.
inline constexpr int kInfWeight = -1;

/// Schlafli symbol of a simply truncated orthoscheme with parallel faces:
/// n finite weights followed by a trailing infinity mark, e.g. {4,4,3,4,inf}.
struct SchlafliSymbol {
  std::vector<int> weights;  // length n+1, last entry kInfWeight

  int dim() const { return static_cast<int>(weights.size()) - 1; }

  std::vector<int> finite_weights() const {
    return {weights.begin(), weights.end() - 1};
  }

  void validate() const {
    if (weights.size() < 2)
      throw std::invalid_argument("symbol: needs at least one weight plus inf");
    if (weights.back() != kInfWeight)
      throw std::invalid_argument("symbol: last entry must be inf");
    for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
      if (weights[i] == kInfWeight) continue;
      if (weights[i] < 2)
        throw std::invalid_argument("symbol: finite weights must be >= 2");
    }
  }

  std::string str() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (i) os << ',';
      if (weights[i] == kInfWeight)
        os << "inf";
      else
        os << weights[i];
    }
    os << '}';
    return os.str();
  }

  bool operator==(const SchlafliSymbol& o) const { return weights == o.weights; }
};

/// Accepts "{4,4,3,4,inf}", "4 4 3 4 inf", and unicode infinity for "inf".
inline SchlafliSymbol parse_symbol(const std::string& text) {
  std::string t;
  t.reserve(text.size());
  for (char c : text) {
    if (c == '{' || c == '}' || c == ',') {
      t += ' ';
    } else {
      t += c;
    }
  }
  // UTF-8 infinity sign
  for (std::string::size_type p; (p = t.find("\xe2\x88\x9e")) != std::string::npos;)
    t.replace(p, 3, " inf ");

  SchlafliSymbol s;
  std::istringstream is(t);
  std::string tok;
  while (is >> tok) {
    std::string low = tok;
    std::transform(low.begin(), low.end(), low.begin(), ::tolower);
    if (low == "inf" || low == "infinity" || low == "oo") {
      s.weights.push_back(kInfWeight);
      continue;
    }
    try {
      std::size_t used = 0;
      const int w = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      s.weights.push_back(w);
    } catch (const std::exception&) {
      throw std::invalid_argument("symbol: bad token '" + tok + "'");
    }
  }
  s.validate();
  return s;
}

/// The nine simply truncated orthoschemes with parallel faces, n = 4, 5, 6.
inline const std::vector<SchlafliSymbol>& catalog() {
  static const std::vector<SchlafliSymbol> cases = {
      {{4, 4, 3, 3, kInfWeight}},
      {{4, 4, 3, 4, kInfWeight}},
      {{6, 3, 3, 3, kInfWeight}},
      {{6, 3, 3, 4, kInfWeight}},
      {{6, 3, 3, 5, kInfWeight}},
      {{6, 3, 4, 3, kInfWeight}},
      {{4, 3, 4, 3, 3, kInfWeight}},
      {{3, 4, 3, 3, 3, 3, kInfWeight}},
      {{3, 4, 3, 3, 3, 4, kInfWeight}},
  };
  return cases;
}

inline bool in_catalog(const SchlafliSymbol& s) {
  const auto& c = catalog();
  return std::find(c.begin(), c.end(), s) != c.end();
}

}  // namespace horopack
