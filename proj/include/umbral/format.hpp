#pragma once

#include <string>

#include "umbral/fraction.hpp"
#include "umbral/sym_expr.hpp"

namespace umbral {

enum class OutputFormat { Text, Latex, Json };

/// Parses "text", "latex" or "json"; throws ParseError otherwise.
OutputFormat parse_output_format(const std::string& name);

// Plain text uses S[2,1] for power sums, m[2,1] for moments,
// AUG[{2,0},{1,0}] for augmented brackets, (n)_3 for falling factorials and
// (n-1) for shifted sample sizes.
std::string to_text(const Atom& a);
std::string to_text(const SymExpr& e);
std::string to_text(const Fraction& f);

// LaTeX mirrors the usual notation: S_{3}, S_{\{\{2,1\}\}},
// [1^{2}\,3], S_{\{\{2,0\},\{1,0\}\}}, m_{2,1}, (n)_{3}.
std::string to_latex(const Atom& a);
std::string to_latex(const SymExpr& e);
std::string to_latex(const Fraction& f);

// JSON: {"terms":[{"coeff":"-3","atoms":[{"kind":"S","index":[1],"power":1}]}]}
// Atom kinds: "n", "ff" (depth), "shift", "m" (index), "S" (index),
// "aug" (parts). Coefficients are exact "p" or "p/q" strings. Fractions are
// {"numerator":..., "denominator":...}.
std::string to_json(const SymExpr& e);
std::string to_json(const Fraction& f);

/// Inverse of to_json; throws ParseError on malformed input.
SymExpr sym_expr_from_json(const std::string& text);
Fraction fraction_from_json(const std::string& text);

std::string format(const SymExpr& e, OutputFormat fmt);
std::string format(const Fraction& f, OutputFormat fmt);

}  // namespace umbral
