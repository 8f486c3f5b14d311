#include <cctype>
#include <sstream>

#include "flopcalc/coeff/text.hpp"
#include "flopcalc/errors.hpp"
#include "flopcalc/flops/pipeline.hpp"

namespace flopcalc::flops {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'')) return false;
  return true;
}

ParamRing parse_target(const std::string& value, std::size_t line) {
  std::vector<std::string> names;
  std::vector<int> degrees;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto s = trim(item);
    if (s.empty()) continue;
    int deg = 2;
    auto open = s.find('(');
    if (open != std::string::npos) {
      auto close = s.find(')', open);
      std::istringstream is(s.substr(open + 1, close == std::string::npos ? std::string::npos : close - open - 1));
      std::string word;
      if (close == std::string::npos || close + 1 != s.size() || !(is >> word >> deg) || word != "deg" || deg <= 0)
        throw ParseError("expected '(deg N)' with positive N", line, open + 1);
      s = trim(s.substr(0, open));
    }
    if (!identifier(s)) throw ParseError("bad target variable '" + s + "'", line, 1);
    names.push_back(s);
    degrees.push_back(deg);
  }
  return ParamRing(names, degrees);
}

}  // namespace

ClassifyingMap parse_classifying_map(std::string_view text) {
  ClassifyingMap m;
  struct Image {
    std::string text;
    std::size_t line, column;
  };
  std::vector<std::pair<std::string, Image>> images;
  bool have_target = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t n = 0;
  while (std::getline(in, raw)) {
    ++n;
    auto hash = raw.find('#');
    auto s = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (s.empty()) continue;
    auto colon = s.find(':');
    auto eq = s.find('=');
    if (colon != std::string::npos && (eq == std::string::npos || colon < eq)) {
      auto key = trim(s.substr(0, colon));
      auto value = trim(s.substr(colon + 1));
      if (key == "name") {
        m.name = value;
      } else if (key == "length") {
        try {
          std::size_t used = 0;
          m.length = std::stoi(value, &used);
          if (used != value.size()) throw std::invalid_argument(value);
        } catch (const std::exception&) {
          throw ParseError("bad length '" + value + "'", n, colon + 2);
        }
      } else if (key == "target") {
        m.target = parse_target(value, n);
        have_target = true;
      } else {
        throw ParseError("unknown key '" + key + "'", n, 1);
      }
    } else if (eq != std::string::npos) {
      auto lhs = trim(s.substr(0, eq));
      if (!identifier(lhs)) throw ParseError("bad parameter name '" + lhs + "'", n, 1);
      images.push_back({lhs, {s.substr(eq + 1), n, raw.find('=') + 2}});
    } else {
      throw ParseError("expected 'key: value' or 'param = polynomial'", n, 1);
    }
  }
  if (!have_target) throw ParseError("missing 'target:' line", n, 1);
  for (const auto& [k, v] : images) {
    if (m.images.count(k)) throw ParseError("parameter '" + k + "' mapped twice", v.line, 1);
    try {
      m.images[k] = coeff::parse_poly(v.text, m.target);
    } catch (const ParseError& e) {
      std::string what = e.what();
      throw ParseError(what.substr(what.find(": ") + 2), v.line, v.column + e.column() - 1);
    }
  }
  return m;
}

std::string print_classifying_map(const ClassifyingMap& map) {
  std::ostringstream os;
  if (!map.name.empty()) os << "name: " << map.name << "\n";
  if (map.length) os << "length: " << map.length << "\n";
  os << "target:";
  for (std::size_t i = 0; i < map.target.size(); ++i) {
    os << (i ? ", " : " ") << map.target.name(i);
    if (map.target.degree(i) != 2) os << " (deg " << map.target.degree(i) << ")";
  }
  os << "\n";
  for (const auto& [k, v] : map.images) os << k << " = " << coeff::to_string(v, map.target) << "\n";
  return os.str();
}

}  // namespace flopcalc::flops
