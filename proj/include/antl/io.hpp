#pragma once

#include <json.hpp>

#include "antl/center.hpp"
#include "antl/fock.hpp"

/// Text and JSON rendering at the user boundary. Configurations and index
/// sets are printed with circle labels 0..n-1 (internal position n prints
/// as 0); words print with the leftmost algebraic factor first. JSON
/// objects keep a fixed key order and sorted entries so output is
/// byte-reproducible.
namespace antl {

using json = nlohmann::ordered_json;

inline std::string format_config(const Config& c) {
  std::string out = "(";
  const auto labels = c.circle_labels();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(labels[i]);
  }
  return out + ")";
}

/// Parses "5 0" or "5,0" as circle labels.
inline Config parse_config(Rank rank, const std::string& text) {
  std::string s = text;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::replace(s.begin(), s.end(), '(', ' ');
  std::replace(s.begin(), s.end(), ')', ' ');
  std::istringstream in(s);
  std::vector<int> labels;
  int x;
  while (in >> x) labels.push_back(x);
  if (!in.eof()) throw std::invalid_argument("parse_config: bad token");
  return Config::from_circle(rank, std::move(labels));
}

/// "+1·[2 1 0] -1·[0 2 1]"; the zero element is "0".
inline std::string format_element(const Element& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [letters, coeff] : e.terms()) {
    if (!out.empty()) out += ' ';
    out += (coeff < 0 ? "-" : "+");
    out += std::to_string(coeff < 0 ? -coeff : coeff);
    out += "·[";
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(letters[i]);
    }
    out += ']';
  }
  return out;
}

inline Element parse_element(Rank rank, const std::string& text) {
  Element e(rank);
  if (text == "0") return e;
  std::size_t pos = 0;
  const std::string dot = "·";
  while (pos < text.size()) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos == text.size()) break;
    const char sign_char = text[pos];
    if (sign_char != '+' && sign_char != '-')
      throw std::invalid_argument("parse_element: expected sign");
    ++pos;
    std::size_t dot_at = text.find(dot, pos);
    if (dot_at == std::string::npos)
      throw std::invalid_argument("parse_element: missing coefficient separator");
    long long coeff = std::stoll(text.substr(pos, dot_at - pos));
    if (sign_char == '-') coeff = -coeff;
    pos = dot_at + dot.size();
    if (pos >= text.size() || text[pos] != '[')
      throw std::invalid_argument("parse_element: expected '['");
    std::size_t close = text.find(']', pos);
    if (close == std::string::npos)
      throw std::invalid_argument("parse_element: missing ']'");
    std::istringstream in(text.substr(pos + 1, close - pos - 1));
    std::vector<int> letters;
    int x;
    while (in >> x) letters.push_back(x);
    e.accumulate(Word(rank, letters), coeff);
    pos = close + 1;
  }
  return e;
}

/// "k=2 l=1 I=(0,2) J=(0,1)" with circle labels.
inline std::string format_basis_label(const BasisLabel& label) {
  auto set_text = [](const Config& c) {
    std::string out = "(";
    const auto labels = c.circle_labels();
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(labels[i]);
    }
    return out + ")";
  };
  return "k=" + std::to_string(label.k) + " l=" + std::to_string(label.ell) +
         " I=" + set_text(label.i_out) + " J=" + set_text(label.i_in);
}

inline BasisLabel parse_basis_label(Rank rank, const std::string& text) {
  int k = 0;
  long long ell = 0;
  std::string iset, jset;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    if (token.rfind("k=", 0) == 0) k = std::stoi(token.substr(2));
    else if (token.rfind("l=", 0) == 0) ell = std::stoll(token.substr(2));
    else if (token.rfind("I=", 0) == 0) iset = token.substr(2);
    else if (token.rfind("J=", 0) == 0) jset = token.substr(2);
    else throw std::invalid_argument("parse_basis_label: bad token");
  }
  return BasisLabel{k, ell, parse_config(rank, iset), parse_config(rank, jset)};
}

inline json qpoly_json(const QPoly& p) {
  json out = json::array();
  for (const auto& [exp, coeff] : p.terms()) out.push_back({exp, coeff});
  return out;
}

inline QPoly qpoly_from_json(const json& j) {
  QPoly out;
  for (const auto& term : j)
    out = out + QPoly::monomial(term.at(1).get<long long>(), term.at(0).get<int>());
  return out;
}

/// {"n":..,"k":..,"entries":[{"row":[..],"col":[..],"poly":[[exp,coef],..]},..]}
/// with circle labels, entries sorted by (row, col).
inline json repmatrix_json(const RepMatrix& m) {
  std::vector<std::tuple<std::vector<int>, std::vector<int>, const QPoly*>> rows;
  for (const auto& [key, poly] : m.entries)
    rows.emplace_back(key.first.circle_labels(), key.second.circle_labels(), &poly);
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
    return std::get<1>(a) < std::get<1>(b);
  });
  json entries = json::array();
  for (const auto& [row, col, poly] : rows)
    entries.push_back({{"row", row}, {"col", col}, {"poly", qpoly_json(*poly)}});
  return json{{"n", m.rank.n()}, {"k", m.k}, {"entries", entries}};
}

inline RepMatrix repmatrix_from_json(const json& j) {
  Rank rank(j.at("n").get<int>());
  RepMatrix m{rank, j.at("k").get<int>(), {}};
  for (const auto& entry : j.at("entries")) {
    Config row = Config::from_circle(rank, entry.at("row").get<std::vector<int>>());
    Config col = Config::from_circle(rank, entry.at("col").get<std::vector<int>>());
    m.entries.emplace(std::make_pair(row, col), qpoly_from_json(entry.at("poly")));
  }
  return m;
}

/// "-1·q^1 · (1 5)" for an action result.
inline std::string format_action(const QPoly& scalar, const Config& c) {
  return format_qpoly(scalar) + " · " + format_config(c);
}

}  // namespace antl
