#include "umbral/format.hpp"

#include <json.hpp>

#include "umbral/errors.hpp"

namespace umbral {

using nlohmann::json;

OutputFormat parse_output_format(const std::string& name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "latex") return OutputFormat::Latex;
  if (name == "json") return OutputFormat::Json;
  throw ParseError("unknown output format '" + name + "' (expected text, latex or json)");
}

// ------------------------------------------------------------------- text

namespace {

std::string shift_text(int j) {
  return j > 0 ? "(n-" + std::to_string(j) + ")" : "(n+" + std::to_string(-j) + ")";
}

// Renders a sum of terms; `atom_text` renders one atom raised to `power`.
template <class AtomRenderer, class CoeffRenderer>
std::string render_sum(const SymExpr& e, const std::string& joiner, AtomRenderer atom_text,
                       CoeffRenderer coeff_text) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [t, c] : e.terms()) {
    bool negative = c < 0;
    Rational mag = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string atoms;
    for (const auto& [a, p] : t.factors()) {
      if (!atoms.empty()) atoms += joiner;
      atoms += atom_text(a, p);
    }
    if (atoms.empty()) {
      out += coeff_text(mag);
    } else if (mag == 1) {
      out += atoms;
    } else {
      out += coeff_text(mag) + joiner + atoms;
    }
  }
  return out;
}

bool needs_parens(const SymExpr& e) {
  if (e.size() > 1) return true;
  if (e.is_zero()) return false;
  const auto& [t, c] = *e.terms().begin();
  if (c < 0) return true;
  if (t.is_unit()) return false;
  return c != 1 || t.factors().size() > 1;
}

std::string text_power(const std::string& base, int p) {
  return p == 1 ? base : base + "^" + std::to_string(p);
}

std::string latex_coeff(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return "\\frac{" + q.get_num().get_str() + "}{" + q.get_den().get_str() + "}";
}

std::string latex_power(const std::string& base, int p) {
  return p == 1 ? base : base + "^{" + std::to_string(p) + "}";
}

std::string latex_vector_set(const ExpVec& v) { return "\\{" + v.to_string() + "\\}"; }

}  // namespace

std::string to_text(const Atom& a) {
  switch (a.kind()) {
    case AtomKind::SampleSize:
      return "n";
    case AtomKind::FallingFactorial:
      return "(n)_" + std::to_string(a.parameter());
    case AtomKind::ShiftedSampleSize:
      return shift_text(a.parameter());
    case AtomKind::Moment:
      return "m[" + a.index().to_string() + "]";
    case AtomKind::PowerSum:
      return "S[" + a.index().to_string() + "]";
    case AtomKind::Bracket: {
      std::string s = "AUG[";
      bool first = true;
      for (const ExpVec& v : a.bracket().parts()) {
        if (!first) s += ",";
        first = false;
        s += "{" + v.to_string() + "}";
      }
      return s + "]";
    }
  }
  return "?";
}

std::string to_text(const SymExpr& e) {
  return render_sum(
      e, "*", [](const Atom& a, int p) { return text_power(to_text(a), p); },
      [](const Rational& q) { return q.get_str(); });
}

std::string to_text(const Fraction& f) {
  auto den_value = f.denominator.constant_value();
  if (den_value && *den_value == 1) return to_text(f.numerator);
  std::string num = to_text(f.numerator);
  std::string den = to_text(f.denominator);
  const bool wrap_num = needs_parens(f.numerator);
  const bool wrap_den = needs_parens(f.denominator);
  if (wrap_num) num = "(" + num + ")";
  if (wrap_den) den = "(" + den + ")";
  return num + (wrap_num || wrap_den ? " / " : "/") + den;
}

// ------------------------------------------------------------------ LaTeX

std::string to_latex(const Atom& a) {
  switch (a.kind()) {
    case AtomKind::SampleSize:
      return "n";
    case AtomKind::FallingFactorial:
      return "(n)_{" + std::to_string(a.parameter()) + "}";
    case AtomKind::ShiftedSampleSize:
      return shift_text(a.parameter());
    case AtomKind::Moment:
      return "m_{" + a.index().to_string() + "}";
    case AtomKind::PowerSum:
      if (a.index().arity() == 1) return "S_{" + a.index().to_string() + "}";
      return "S_{\\{" + latex_vector_set(a.index()) + "\\}}";
    case AtomKind::Bracket: {
      const auto& parts = a.bracket().parts();
      if (a.bracket().arity() == 1) {
        // [1^{r_1} 2^{r_2} ...]
        std::string s = "[";
        bool first = true;
        const Multiset<ExpVec> runs = a.bracket().as_multiset();
        for (const auto& [v, count] : runs.entries()) {
          if (!first) s += "\\,";
          first = false;
          s += latex_power(v.to_string(), static_cast<int>(count));
        }
        return s + "]";
      }
      std::string s = "S_{\\{";
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += latex_vector_set(parts[i]);
      }
      return s + "\\}}";
    }
  }
  return "?";
}

std::string to_latex(const SymExpr& e) {
  return render_sum(
      e, " ", [](const Atom& a, int p) { return latex_power(to_latex(a), p); }, latex_coeff);
}

std::string to_latex(const Fraction& f) {
  auto den_value = f.denominator.constant_value();
  if (den_value && *den_value == 1) return to_latex(f.numerator);
  return "\\frac{" + to_latex(f.numerator) + "}{" + to_latex(f.denominator) + "}";
}

// ------------------------------------------------------------------- JSON

namespace {

json atom_to_json(const Atom& a, int power) {
  json j;
  switch (a.kind()) {
    case AtomKind::SampleSize:
      j["kind"] = "n";
      break;
    case AtomKind::FallingFactorial:
      j["kind"] = "ff";
      j["depth"] = a.parameter();
      break;
    case AtomKind::ShiftedSampleSize:
      j["kind"] = "shift";
      j["shift"] = a.parameter();
      break;
    case AtomKind::Moment:
      j["kind"] = "m";
      j["index"] = a.index().to_vector();
      break;
    case AtomKind::PowerSum:
      j["kind"] = "S";
      j["index"] = a.index().to_vector();
      break;
    case AtomKind::Bracket: {
      j["kind"] = "aug";
      json parts = json::array();
      for (const ExpVec& v : a.bracket().parts()) parts.push_back(v.to_vector());
      j["parts"] = parts;
      break;
    }
  }
  j["power"] = power;
  return j;
}

json expr_to_json(const SymExpr& e) {
  json terms = json::array();
  for (const auto& [t, c] : e.terms()) {
    json atoms = json::array();
    for (const auto& [a, p] : t.factors()) atoms.push_back(atom_to_json(a, p));
    terms.push_back({{"coeff", c.get_str()}, {"atoms", atoms}});
  }
  return {{"terms", terms}};
}

ExpVec vector_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("exponent vector must be a non-empty array");
  std::vector<int> v;
  for (const json& x : j) {
    if (!x.is_number_integer()) throw ParseError("exponent entries must be integers");
    v.push_back(x.get<int>());
  }
  return ExpVec(v);
}

Atom atom_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "n") return Atom::sample_size();
  if (kind == "ff") return Atom::falling_factorial(j.at("depth").get<int>());
  if (kind == "shift") return Atom::shifted_sample_size(j.at("shift").get<int>());
  if (kind == "m") return Atom::moment(vector_from_json(j.at("index")));
  if (kind == "S") return Atom::power_sum(vector_from_json(j.at("index")));
  if (kind == "aug") {
    std::vector<ExpVec> parts;
    for (const json& p : j.at("parts")) parts.push_back(vector_from_json(p));
    return Atom::bracket(Bracket(std::move(parts)));
  }
  throw ParseError("unknown atom kind '" + kind + "'");
}

SymExpr expr_from_json(const json& j) {
  SymExpr out;
  for (const json& term : j.at("terms")) {
    std::vector<std::pair<Atom, int>> factors;
    for (const json& a : term.at("atoms")) {
      int power = a.at("power").get<int>();
      if (power < 1) throw ParseError("atom powers must be positive");
      factors.emplace_back(atom_from_json(a), power);
    }
    out.add_term(Term(std::move(factors)), parse_rational(term.at("coeff").get<std::string>()));
  }
  return out;
}

template <class F>
auto guarded_parse(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& ex) {
    throw ParseError(std::string("malformed expression JSON: ") + ex.what());
  }
}

}  // namespace

std::string to_json(const SymExpr& e) { return expr_to_json(e).dump(); }

std::string to_json(const Fraction& f) {
  return json{{"numerator", expr_to_json(f.numerator)}, {"denominator", expr_to_json(f.denominator)}}
      .dump();
}

SymExpr sym_expr_from_json(const std::string& text) {
  return guarded_parse([&] { return expr_from_json(json::parse(text)); });
}

Fraction fraction_from_json(const std::string& text) {
  return guarded_parse([&] {
    json j = json::parse(text);
    return Fraction{expr_from_json(j.at("numerator")), expr_from_json(j.at("denominator"))};
  });
}

std::string format(const SymExpr& e, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::Latex:
      return to_latex(e);
    case OutputFormat::Json:
      return to_json(e);
    case OutputFormat::Text:
      break;
  }
  return to_text(e);
}

std::string format(const Fraction& f, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::Latex:
      return to_latex(f);
    case OutputFormat::Json:
      return to_json(f);
    case OutputFormat::Text:
      break;
  }
  return to_text(f);
}

}  // namespace umbral
