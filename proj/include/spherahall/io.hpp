#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "spherahall/hall.hpp"
#include "spherahall/ncpoly.hpp"
#include "spherahall/object.hpp"

namespace spherahall {

using json = nlohmann::json;

inline json to_json(const ObjClass& x) {
  json summands = json::array();
  for (const auto& l : x.summands()) {
    json s{{"shift", l.shift}, {"len", l.len}};
    if (x.dim().d == 0) s["branch"] = l.branch;
    summands.push_back(std::move(s));
  }
  return json{{"d", x.dim().d}, {"summands", std::move(summands)}};
}

inline ObjClass object_from_json(const json& j) {
  if (!j.is_object() || !j.contains("d") || !j.contains("summands") || !j["d"].is_number_integer() ||
      !j["summands"].is_array())
    throw InvalidArgument("object descriptor needs integer d and a summands array");
  SphereDim dim{j["d"].get<int>()};
  std::vector<IndecLabel> labels;
  for (const auto& s : j["summands"]) {
    if (!s.is_object() || !s.contains("shift") || !s.contains("len") || !s["shift"].is_number_integer() ||
        !s["len"].is_number_integer())
      throw InvalidArgument("summand needs integer shift and len");
    IndecLabel l{s["shift"].get<int>(), s["len"].get<int>(), 1};
    if (s.contains("branch")) {
      if (!s["branch"].is_number_integer()) throw InvalidArgument("branch must be an integer");
      l.branch = s["branch"].get<int>();
    }
    labels.push_back(l);
  }
  return ObjClass(dim, std::move(labels));
}

inline json to_json(const HallElement& e) {
  json terms = json::array();
  for (const auto& [x, c] : e.terms()) terms.push_back(json{{"coeff", c.str()}, {"obj", to_json(x)}});
  return json{{"q", e.q()}, {"terms", std::move(terms)}};
}

inline HallElement element_from_json(const json& j) {
  if (!j.is_object() || !j.contains("q") || !j.contains("terms") || !j["terms"].is_array())
    throw InvalidArgument("element descriptor needs q and a terms array");
  const long q = j["q"].get<long>();
  std::vector<std::pair<ObjClass, Rational>> parts;
  for (const auto& t : j["terms"]) {
    if (!t.contains("coeff") || !t["coeff"].is_string() || !t.contains("obj"))
      throw InvalidArgument("term needs a string coeff and an obj");
    parts.emplace_back(object_from_json(t["obj"]), Rational::parse(t["coeff"].get<std::string>()));
  }
  if (parts.empty()) throw InvalidArgument("an element with no terms does not determine d");
  HallElement e(parts.front().first.dim(), q);
  for (const auto& [x, c] : parts) e.add(x, c);
  return e;
}

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

inline int parse_int(const std::string& s) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    throw InvalidArgument("not an integer: '" + s + "'");
  }
  if (pos != s.size()) throw InvalidArgument("not an integer: '" + s + "'");
  return v;
}

// "[k]" suffix -> k, absent -> 0
inline int parse_shift_suffix(const std::string& rest, const std::string& whole) {
  if (rest.empty()) return 0;
  if (rest.front() != '[' || rest.back() != ']') throw InvalidArgument("bad summand '" + whole + "'");
  return parse_int(rest.substr(1, rest.size() - 2));
}

inline IndecLabel parse_summand(const std::string& s) {
  if (s.empty()) throw InvalidArgument("empty summand");
  if (std::isdigit(static_cast<unsigned char>(s[0])) || s[0] == '-') {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i)
      if (i == s.size() || s[i] == ':') {
        parts.push_back(s.substr(start, i - start));
        start = i + 1;
      }
    if (parts.size() < 2 || parts.size() > 3) throw InvalidArgument("expected shift:len[:branch], got '" + s + "'");
    return {parse_int(parts[0]), parse_int(parts[1]), parts.size() == 3 ? parse_int(parts[2]) : 1};
  }
  if (s.rfind("T'", 0) == 0) return {parse_shift_suffix(s.substr(2), s), 1, 2};
  if (s[0] == 'T') return {parse_shift_suffix(s.substr(1), s), 1, 1};
  if (s[0] == 'S') return {parse_shift_suffix(s.substr(1), s), 1, 1};
  if (s[0] == 'M') {
    std::size_t i = 1;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == 1) throw InvalidArgument("M needs a length, as in M2[-1]");
    return {parse_shift_suffix(s.substr(i), s), parse_int(s.substr(1, i - 1)), 1};
  }
  throw InvalidArgument("cannot parse summand '" + s + "'");
}

}  // namespace detail

/// Parses an object: a JSON descriptor, "0", or summands joined by '+', each
/// optionally prefixed by a count "n*". Summands: S[k] (Σ^k S), Mn[k]
/// (Σ^k Γ/t^n), T[k] and T'[k] (d = 0), or shift:len[:branch].
inline ObjClass parse_object(std::string_view text, SphereDim dim) {
  std::string s = detail::trim(text);
  if (!s.empty() && s.front() == '{') {
    json j;
    try {
      j = json::parse(s);
    } catch (const json::exception& e) {
      throw InvalidArgument(std::string("malformed object JSON: ") + e.what());
    }
    return object_from_json(j);
  }
  // accept the direct-sum sign as a separator
  for (std::size_t pos; (pos = s.find("\xE2\x8A\x95")) != std::string::npos;) s.replace(pos, 3, "+");
  if (s == "0") return ObjClass::zero(dim);
  std::vector<IndecLabel> labels;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i < s.size() && s[i] != '+') continue;
    std::string part = detail::trim(std::string_view(s).substr(start, i - start));
    start = i + 1;
    int count = 1;
    if (auto star = part.find('*'); star != std::string::npos) {
      count = detail::parse_int(detail::trim(part.substr(0, star)));
      part = detail::trim(part.substr(star + 1));
      if (count < 0) throw InvalidArgument("negative multiplicity");
    }
    IndecLabel l = detail::parse_summand(part);
    for (int k = 0; k < count; ++k) labels.push_back(l);
  }
  return ObjClass(dim, std::move(labels));
}

/// Writes p with coefficients evaluated at q, e.g. "-2 + 2*x0*y0".
inline std::string format_at_q(const NCPolynomial& p, long q) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [word, c] : p.terms()) {
    Rational v = rf_eval_at_q(c, q);
    if (v.is_zero()) continue;
    std::string term;
    if (word.empty()) {
      term = v.str();
    } else {
      if (v == Rational(-1)) term = "-";
      else if (v != Rational(1)) term = v.str() + "*";
      for (std::size_t k = 0; k < word.size(); ++k) term += (k ? "*" : "") + word[k].str();
    }
    if (out.empty()) out = term;
    else if (term.front() == '-') out += " - " + term.substr(1);
    else out += " + " + term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace spherahall
