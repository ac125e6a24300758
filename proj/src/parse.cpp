#include "umbral/parse.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "umbral/errors.hpp"

namespace umbral {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

long parse_count(const std::string& text, const std::string& context, long min_value) {
  const std::string t = trim(text);
  if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw ParseError("expected a non-negative integer in '" + context + "', got '" + t + "'");
  }
  if (t.size() > 6) throw ParseError("number too large in '" + context + "'");
  long v = std::stol(t);
  if (v < min_value) throw ParseError("value " + t + " too small in '" + context + "'");
  return v;
}

// Splits "body^k" into body and k (1 when absent).
std::pair<std::string, long> split_repeat(const std::string& item, const std::string& context) {
  const auto caret = item.find('^');
  if (caret == std::string::npos) return {trim(item), 1};
  if (item.find('^', caret + 1) != std::string::npos) throw ParseError("repeated '^' in '" + context + "'");
  return {trim(item.substr(0, caret)), parse_count(item.substr(caret + 1), context, 1)};
}

std::vector<std::string> split(const std::string& s, const std::string& separators) {
  std::vector<std::string> out;
  std::string current;
  for (char c : s) {
    if (separators.find(c) != std::string::npos) {
      out.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  out.push_back(current);
  return out;
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

bool starts_with_letter(const std::string& s) {
  const std::string t = trim(s);
  return !t.empty() && (std::isalpha(static_cast<unsigned char>(t[0])) || t[0] == '_');
}

}  // namespace

std::vector<ExpVec> parse_vector_list(const std::string& text) {
  std::string body = trim(text);
  if (!body.empty() && body.front() == '[' && body.back() == ']') body = body.substr(1, body.size() - 2);
  if (trim(body).empty()) throw ParseError("empty exponent-vector list");

  std::vector<ExpVec> out;
  for (const std::string& raw : split(body, "; \t")) {
    if (trim(raw).empty()) continue;
    auto [vec, repeat] = split_repeat(raw, text);
    std::vector<int> coords;
    for (const std::string& c : split(vec, ",")) {
      coords.push_back(static_cast<int>(parse_count(c, text, 0)));
    }
    if (coords.size() > kMaxArity) throw ParseError("more than " + std::to_string(kMaxArity) + " coordinates in '" + text + "'");
    if (std::all_of(coords.begin(), coords.end(), [](int x) { return x == 0; })) {
      throw ParseError("zero exponent vector in '" + text + "'");
    }
    if (std::any_of(coords.begin(), coords.end(), [](int x) { return x > std::numeric_limits<std::uint16_t>::max(); })) {
      throw ParseError("exponent too large in '" + text + "'");
    }
    ExpVec v(coords);
    if (!out.empty() && out.front().arity() != v.arity()) {
      throw ParseError("exponent vectors of different length in '" + text + "'");
    }
    out.insert(out.end(), static_cast<std::size_t>(repeat), v);
  }
  if (out.empty()) throw ParseError("empty exponent-vector list");
  return out;
}

std::vector<std::string> parse_symbol_list(const std::string& text) {
  std::vector<std::string> out;
  for (const std::string& raw : split(text, ",")) {
    auto [name, repeat] = split_repeat(raw, text);
    if (!is_identifier(name)) throw ParseError("expected a symbol name in '" + text + "', got '" + name + "'");
    out.insert(out.end(), static_cast<std::size_t>(repeat), name);
  }
  return out;
}

MultisetInput parse_multisets(const std::vector<std::string>& args) {
  if (args.empty()) throw ParseError("expected at least one multiset");
  MultisetInput in;
  const bool symbolic = starts_with_letter(args.front());
  for (const std::string& a : args) {
    if (starts_with_letter(a) != symbolic) throw ParseError("cannot mix symbols and exponent vectors");
  }
  if (!symbolic) {
    for (const std::string& a : args) in.groups.push_back(parse_vector_list(a));
    for (const auto& g : in.groups) {
      if (g.front().arity() != in.groups.front().front().arity()) {
        throw ParseError("exponent vectors of different length across arguments");
      }
    }
    return in;
  }
  std::vector<std::vector<std::string>> named;
  for (const std::string& a : args) {
    named.push_back(parse_symbol_list(a));
    for (const std::string& s : named.back()) {
      if (std::find(in.symbols.begin(), in.symbols.end(), s) == in.symbols.end()) in.symbols.push_back(s);
    }
  }
  if (in.symbols.size() > kMaxArity) {
    throw ParseError("at most " + std::to_string(kMaxArity) + " distinct symbols are supported");
  }
  for (const auto& names : named) {
    std::vector<ExpVec> group;
    for (const std::string& s : names) {
      auto pos = static_cast<std::size_t>(std::find(in.symbols.begin(), in.symbols.end(), s) - in.symbols.begin());
      group.push_back(ExpVec::unit(in.symbols.size(), pos));
    }
    in.groups.push_back(std::move(group));
  }
  return in;
}

int parse_positive_int(const std::string& text, const std::string& what) {
  return static_cast<int>(parse_count(text, what, 1));
}

}  // namespace umbral
