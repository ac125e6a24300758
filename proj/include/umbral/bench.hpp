#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "umbral/compute.hpp"

namespace umbral {

/// One benchmark input. `run` returns the number of terms in the result.
struct BenchCase {
  std::string label;
  std::function<std::size_t(const ComputeOptions&, ComputeStats&)> run;
};

struct BenchRow {
  std::string label;
  double wall_ms = 0;
  std::size_t term_count = 0;
  std::size_t peak_subdivisions = 0;
};

/// "table5", "table6", "table7" and "quick".
const std::vector<std::string>& bench_profiles();

/// Inputs of a profile; throws ParseError for an unknown name.
std::vector<BenchCase> bench_cases(const std::string& profile);

/// Runs one case with a cold subdivision memo.
BenchRow run_bench_case(const BenchCase& c, const ComputeOptions& options);

/// Runs every case of a profile; `on_row` sees each row as it finishes.
std::vector<BenchRow> run_bench(const std::string& profile, const ComputeOptions& options,
                                const std::function<void(const BenchRow&)>& on_row = {});

/// CSV with header input_label,wall_ms,term_count,peak_subdivisions.
std::string bench_csv_header();
std::string bench_csv_row(const BenchRow& row);
std::string bench_json(const std::string& profile, const std::vector<BenchRow>& rows);

}  // namespace umbral
