#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "umbral/cli.hpp"
#include "umbral/estimators.hpp"
#include "umbral/format.hpp"

using namespace umbral;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("kstat output") {
  const Result k3 = run({"kstat", "3", "--format", "text"});
  CHECK(k3.status == cli::kExitOk);
  CHECK(k3.out == "(n^2*S[3] - 3*n*S[1]*S[2] + 2*S[1]^3) / (n*(n-1)*(n-2))\n");
  CHECK(run({"kstat", "1"}).out == "S[1]/n\n");
  CHECK(run({"--format", "latex", "kstat", "2"}).out == "\\frac{n S_{2} - S_{1}^{2}}{n (n-1)}\n");
}

TEST_CASE("subdivisions in the table layout") {
  const Result r = run({"subdivisions", "a,a,b"});
  CHECK(r.status == cli::kExitOk);
  CHECK(r.out == "{{a,a,b}}\t1\n{{a},{a,b}}\t2\n{{b},{a,a}}\t1\n{{a},{a},{b}}\t1\n");
}

TEST_CASE("exit codes") {
  CHECK(run({"kstat", "x"}).status == cli::kExitParseError);
  CHECK(run({"nosuch"}).status == cli::kExitParseError);
  CHECK(run({"pstoaug", "a,,b"}).status == cli::kExitParseError);
  CHECK(run({"--format", "xml", "kstat", "2"}).status == cli::kExitParseError);
  CHECK(run({"bench", "table9"}).status == cli::kExitParseError);
  const Result guard = run({"kstat", "25"});
  CHECK(guard.status == cli::kExitGuardViolation);
  CHECK(guard.err.find("--max-order") != std::string::npos);
  CHECK(run({"--max-order", "25", "kstat", "21"}).status == cli::kExitOk);
  CHECK(run({"--max-order", "3", "polykay", "2", "2"}).status == cli::kExitGuardViolation);
  CHECK(run({"--help"}).status == cli::kExitOk);
}

TEST_CASE("json output round trips") {
  const Result r = run({"--format", "json", "kstat", "5"});
  CHECK(r.status == cli::kExitOk);
  CHECK(fraction_from_json(r.out) == k_statistic(5));
  const Result p = run({"--format", "json", "augtops", "1,0;1,0;0,1"});
  CHECK(to_json(sym_expr_from_json(p.out)) + "\n" == p.out);
}

TEST_CASE("thread count does not change output") {
  const std::string one = run({"--threads", "1", "kstat", "9"}).out;
  CHECK(run({"--threads", "3", "kstat", "9"}).out == one);
  const std::string mp = run({"mpolykay", "a,a,b", "a,b"}).out;
  CHECK(run({"--threads", "4", "mpolykay", "a,a,b", "a,b"}).out == mp);
}

TEST_CASE("format from the environment") {
  setenv("UMBRAL_FORMAT", "latex", 1);
  const std::string latex = run({"kstat", "2"}).out;
  const std::string text = run({"--format", "text", "kstat", "2"}).out;
  unsetenv("UMBRAL_FORMAT");
  CHECK(latex == "\\frac{n S_{2} - S_{1}^{2}}{n (n-1)}\n");
  CHECK(text == run({"kstat", "2"}).out);
}

TEST_CASE("expectation of a power-sum product") {
  CHECK(run({"pstoaug", "a,a,b", "--expectation"}).out ==
        "n*m[2,1] + 2*(n)_2*m[1,0]*m[1,1] + (n)_2*m[0,1]*m[2,0] + (n)_3*m[1,0]^2*m[0,1]\n");
}

TEST_CASE("expanded falling factorials") {
  const Result r = run({"--expand-factorials", "ustat", "1^2"});
  CHECK(r.status == cli::kExitOk);
  CHECK(r.out.find("(n)_") == std::string::npos);
}

TEST_CASE("verify subcommand") {
  const Result k = run({"verify", "kstat", "3"});
  CHECK(k.status == cli::kExitOk);
  CHECK(k.out == "n=3: ok\nn=4: ok\nn=5: ok\nverified\n");
  CHECK(run({"verify", "mkstat", "a,b,b"}).status == cli::kExitOk);
  CHECK(run({"verify", "augprod", "2,0;1,0", "2,1", "2,1"}).status == cli::kExitOk);
  CHECK(run({"verify", "pstoaug", "a^2,b"}).status == cli::kExitOk);
  CHECK(run({"verify", "kstat", "9"}).status == cli::kExitGuardViolation);
}

TEST_CASE("bench quick profile") {
  const Result r = run({"bench", "quick"});
  CHECK(r.status == cli::kExitOk);
  CHECK(r.out.rfind("input_label,wall_ms,term_count,peak_subdivisions\n\"k_8\",", 0) == 0);
}
