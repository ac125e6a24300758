#include "umbral/bench.hpp"

#include <chrono>
#include <cstdio>
#include <json.hpp>

#include "umbral/conversion.hpp"
#include "umbral/errors.hpp"
#include "umbral/estimators.hpp"
#include "umbral/parse.hpp"
#include "umbral/subdivisions.hpp"

namespace umbral {

namespace {

Bracket univariate_bracket(const std::string& text) { return Bracket(parse_vector_list(text)); }

BenchCase aug_to_ps_case(const std::string& label, const std::string& text) {
  return {label, [text](const ComputeOptions& o, ComputeStats& s) {
            return aug_to_ps_poly(univariate_bracket(text), o, &s).size();
          }};
}

BenchCase kstat_case(int i) {
  return {"k_" + std::to_string(i), [i](const ComputeOptions& o, ComputeStats& s) {
            return k_statistic(i, o, &s).numerator.content_term_count();
          }};
}

BenchCase polykay_case(int r, int t) {
  return {"k_" + std::to_string(r) + "," + std::to_string(t), [r, t](const ComputeOptions& o, ComputeStats& s) {
            return polykay({r, t}, o, &s).numerator.content_term_count();
          }};
}

// Groups given as symbol multisets sharing one symbol table.
BenchCase mpolykay_case(const std::string& label, std::vector<std::string> groups) {
  return {label, [groups](const ComputeOptions& o, ComputeStats& s) {
            std::vector<Multiset<ExpVec>> parsed;
            for (const auto& g : parse_multisets(groups).groups) parsed.push_back(Multiset<ExpVec>::from_items(g));
            return multivariate_polykay(parsed, o, &s).numerator.content_term_count();
          }};
}

BenchCase product_case(std::vector<std::string> brackets) {
  std::string label;
  for (const auto& b : brackets) label += "[" + b + "]";
  return {label, [brackets](const ComputeOptions& o, ComputeStats& s) {
            std::vector<Bracket> parsed;
            for (const auto& b : brackets) parsed.push_back(univariate_bracket(b));
            return aug_product(parsed, o, &s).size();
          }};
}

}  // namespace

const std::vector<std::string>& bench_profiles() {
  static const std::vector<std::string> names{"table5", "table6", "table7", "quick"};
  return names;
}

std::vector<BenchCase> bench_cases(const std::string& profile) {
  if (profile == "quick") return {kstat_case(8)};
  if (profile == "table5") {
    return {aug_to_ps_case("[1^5 2^3 3^2]", "1^5 2^3 3^2"), aug_to_ps_case("[1^6 2^3]", "1^6 2^3"),
            aug_to_ps_case("[2^10]", "2^10"), aug_to_ps_case("[1^5 2^7 3]", "1^5 2^7 3"),
            aug_to_ps_case("[1^2 2^2 3^2 4^2]", "1^2 2^2 3^2 4^2")};
  }
  if (profile == "table6") {
    std::vector<BenchCase> out;
    for (int i = 8; i <= 18; i += 2) out.push_back(kstat_case(i));
    out.push_back(polykay_case(6, 6));
    out.push_back(polykay_case(9, 3));
    out.push_back(polykay_case(9, 6));
    out.push_back(polykay_case(9, 9));
    out.push_back(mpolykay_case("k_3,3 k_2,2", {"x^3,y^3", "x^2,y^2"}));
    out.push_back(mpolykay_case("k_3,3 k_3,3", {"x^3,y^3", "x^3,y^3"}));
    out.push_back(mpolykay_case("k_2,1,1 k_2,1,1", {"x^2,y,z", "x^2,y,z"}));
    return out;
  }
  if (profile == "table7") {
    return {product_case({"5^3 9 10", "1 2 3 4 5"}),
            product_case({"5^3 8 9 10", "1 2 3 4 5"}),
            product_case({"6 7 8 9 10", "1 2 3 4 5"}),
            product_case({"6 7 8 9 10", "1 2", "3 4 5"}),
            product_case({"6 7", "8 9 10", "1 2", "3 4 5"}),
            product_case({"5 6 7 8 9 10", "1 2 3 4 5"}),
            product_case({"5 6 7 8 9 10", "1 2 3 4 5 6"}),
            product_case({"6 7 8 9 10", "6 7", "3 4 5", "1 2"})};
  }
  throw ParseError("unknown bench profile '" + profile + "' (expected table5, table6, table7 or quick)");
}

BenchRow run_bench_case(const BenchCase& c, const ComputeOptions& options) {
  clear_pattern_cache();
  ComputeStats stats;
  const auto start = std::chrono::steady_clock::now();
  const std::size_t terms = c.run(options, stats);
  const auto stop = std::chrono::steady_clock::now();
  return {c.label, std::chrono::duration<double, std::milli>(stop - start).count(), terms,
          stats.peak_subdivisions()};
}

std::vector<BenchRow> run_bench(const std::string& profile, const ComputeOptions& options,
                                const std::function<void(const BenchRow&)>& on_row) {
  std::vector<BenchRow> rows;
  for (const BenchCase& c : bench_cases(profile)) {
    rows.push_back(run_bench_case(c, options));
    if (on_row) on_row(rows.back());
  }
  return rows;
}

std::string bench_csv_header() { return "input_label,wall_ms,term_count,peak_subdivisions"; }

std::string bench_csv_row(const BenchRow& row) {
  char ms[32];
  std::snprintf(ms, sizeof ms, "%.3f", row.wall_ms);
  return "\"" + row.label + "\"," + ms + "," + std::to_string(row.term_count) + "," +
         std::to_string(row.peak_subdivisions);
}

std::string bench_json(const std::string& profile, const std::vector<BenchRow>& rows) {
  nlohmann::json out{{"profile", profile}, {"rows", nlohmann::json::array()}};
  for (const BenchRow& r : rows) {
    out["rows"].push_back({{"input_label", r.label},
                           {"wall_ms", r.wall_ms},
                           {"term_count", r.term_count},
                           {"peak_subdivisions", r.peak_subdivisions}});
  }
  return out.dump(2);
}

}  // namespace umbral
