#include "umbral/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <functional>
#include <json.hpp>
#include <sstream>

#include "umbral/bench.hpp"
#include "umbral/conversion.hpp"
#include "umbral/errors.hpp"
#include "umbral/estimators.hpp"
#include "umbral/format.hpp"
#include "umbral/oracle.hpp"
#include "umbral/parse.hpp"
#include "umbral/subdivisions.hpp"

namespace umbral::cli {

namespace {

constexpr const char* kGrammar = R"(Input grammar:
  vector list   items separated by ';' or blanks, coordinates by ',',
                "^k" repeats an item: "2,0;1,0"  "1^5;2^3;3^2"  "[1^2 3]"
  symbol set    comma-separated names with "^k" repeats: "a^3,g^2"  "a,a,b"
                symbol j (first appearance) is the j-th variable
Outputs: S[v] power sum, m[v] moment, AUG[{v},...] augmented bracket,
(n)_k falling factorial, (n-j) shifted sample size.
The environment variable UMBRAL_FORMAT sets the default --format.)";

struct Settings {
  std::string format = "text";
  bool expand_factorials = false;
  int max_order = 20;
  unsigned threads = 1;

  ComputeOptions options() const { return {threads, max_order}; }
  OutputFormat output() const { return parse_output_format(format); }
};

std::vector<Multiset<ExpVec>> to_groups(const MultisetInput& in) {
  std::vector<Multiset<ExpVec>> out;
  for (const auto& g : in.groups) out.push_back(Multiset<ExpVec>::from_items(g));
  return out;
}

std::vector<int> parse_orders(const std::vector<std::string>& args) {
  std::vector<int> out;
  for (const auto& a : args) out.push_back(parse_positive_int(a, "order"));
  return out;
}

bool is_plain_integer(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::string render(const Fraction& f, const Settings& s) {
  return format(s.expand_factorials ? falling_factorial_expand(f) : f, s.output());
}

std::string render(const SymExpr& e, const Settings& s) {
  return format(s.expand_factorials ? falling_factorial_expand(e) : e, s.output());
}

std::vector<Bracket> parse_brackets(const std::vector<std::string>& args) {
  std::vector<Bracket> out;
  for (const auto& a : args) out.emplace_back(parse_vector_list(a));
  return out;
}

Multiset<Monomial> single_multiset(const std::string& arg) {
  MultisetInput in = parse_multisets({arg});
  Multiset<Monomial> m;
  for (const ExpVec& v : in.groups.front()) m.insert(Monomial(v));
  return m;
}

// ------------------------------------------------------------ estimators

struct EstimatorJob {
  Fraction estimator;
  SymExpr target;  // in moments
  int degree = 0;
  std::size_t arity = 1;
};

EstimatorJob estimator_job(const std::string& command, const std::vector<std::string>& args,
                           const Settings& s, bool want_power_sums = false) {
  const ComputeOptions o = s.options();
  EstimatorJob job;
  if (command == "kstat") {
    if (args.size() != 1) throw ParseError("kstat takes exactly one order");
    const int i = parse_positive_int(args[0], "order");
    check_order(i, o, "order");
    job.estimator = k_statistic(i, o);
    job.target = cumulants_from_moments(i);
    job.degree = i;
  } else if (command == "polykay") {
    if (args.empty()) throw ParseError("polykay takes one or more orders");
    const std::vector<int> orders = parse_orders(args);
    job.estimator = polykay(orders, o);
    job.target = SymExpr(1);
    for (int r : orders) {
      job.target *= cumulants_from_moments(r);
      job.degree += r;
    }
  } else if (command == "mkstat" || command == "mpolykay") {
    if (args.empty()) throw ParseError(command + " takes at least one multiset");
    if (command == "mkstat" && args.size() != 1) throw ParseError("mkstat takes exactly one multiset");
    const auto groups = to_groups(parse_multisets(args));
    job.estimator = multivariate_polykay(groups, o);
    job.target = cumulant_product(groups);
    job.degree = total_degree(groups);
    job.arity = groups.front().entries().front().first.arity();
  } else if (command == "ustat") {
    if (args.size() != 1) throw ParseError("ustat takes exactly one vector list");
    const std::vector<ExpVec> parts = parse_vector_list(args[0]);
    job.estimator = u_statistic(parts, want_power_sums, o);
    job.target = SymExpr(1);
    for (const ExpVec& v : parts) {
      job.target *= SymExpr::of(Atom::moment(v));
      job.degree += v.degree();
    }
    job.arity = parts.front().arity();
  } else {
    throw ParseError("unknown estimator '" + command + "'");
  }
  return job;
}

// ---------------------------------------------------------------- verify

struct Identity {
  SymExpr lhs;
  SymExpr rhs;
  std::size_t arity = 1;
};

Identity conversion_identity(const std::string& command, const std::vector<std::string>& args,
                             const Settings& s) {
  const ComputeOptions o = s.options();
  Identity id;
  if (command == "augtops") {
    if (args.size() != 1) throw ParseError("augtops takes exactly one bracket");
    Bracket b(parse_vector_list(args[0]));
    id.lhs = SymExpr::of(Atom::bracket(b));
    id.rhs = aug_to_ps(b, o);
    id.arity = b.arity();
  } else if (command == "pstoaug") {
    if (args.size() != 1) throw ParseError("pstoaug takes exactly one multiset");
    const Multiset<Monomial> m = single_multiset(args[0]);
    id.lhs = SymExpr(1);
    for (const auto& [mono, c] : m.entries()) id.lhs *= SymExpr::of(Atom::power_sum(mono.exponents()), static_cast<int>(c));
    id.rhs = ps_to_aug(m, o);
    id.arity = m.entries().front().first.arity();
  } else if (command == "augprod") {
    if (args.empty()) throw ParseError("augprod takes one or more brackets");
    const std::vector<Bracket> bs = parse_brackets(args);
    id.lhs = SymExpr(1);
    for (const Bracket& b : bs) id.lhs *= SymExpr::of(Atom::bracket(b));
    id.rhs = aug_product(bs, o);
    id.arity = bs.front().arity();
  } else {
    throw ParseError("verify does not support '" + command + "'");
  }
  return id;
}

int verify(const std::vector<std::string>& tokens, const Settings& s, std::ostream& out) {
  if (tokens.empty()) throw ParseError("verify needs a subcommand, e.g. verify kstat 3");
  const std::string command = tokens.front();
  const std::vector<std::string> args(tokens.begin() + 1, tokens.end());
  bool all_ok = true;

  if (command == "augtops" || command == "pstoaug" || command == "augprod") {
    const Identity id = conversion_identity(command, args, s);
    for (int n = 3; n <= 5; ++n) {
      const FormalSample sample(n, id.arity);
      const bool ok = expand_over_sample(id.lhs, sample) == expand_over_sample(id.rhs, sample);
      out << "n=" << n << ": " << (ok ? "ok" : "MISMATCH") << "\n";
      all_ok = all_ok && ok;
    }
  } else {
    const EstimatorJob job = estimator_job(command, args, s, true);
    if (job.degree > kMaxOracleSampleSize) {
      throw GuardViolation("oracle checks need degree <= " + std::to_string(kMaxOracleSampleSize));
    }
    for (int n = job.degree; n <= std::min(job.degree + 2, kMaxOracleSampleSize); ++n) {
      const FormalSample sample(n, job.arity);
      const bool ok = oracle_expectation(job.estimator, sample) == job.target;
      out << "n=" << n << ": " << (ok ? "ok" : "MISMATCH") << "\n";
      all_ok = all_ok && ok;
    }
  }
  out << (all_ok ? "verified" : "verification FAILED") << "\n";
  return all_ok ? kExitOk : kExitFailure;
}

// ----------------------------------------------------------- subdivisions

std::string element_name(const ExpVec& v, const std::vector<std::string>& symbols) {
  if (!symbols.empty()) {
    for (std::size_t i = 0; i < v.arity(); ++i) {
      if (v[i] == 1) return symbols[i];
    }
  }
  return v.arity() == 1 ? v.to_string() : "(" + v.to_string() + ")";
}

void print_subdivisions(const std::string& arg, const Settings& s, std::ostream& out) {
  const MultisetInput in = parse_multisets({arg});
  Multiset<Monomial> m;
  for (const ExpVec& v : in.groups.front()) m.insert(Monomial(v));
  check_order(static_cast<long>(m.size()), s.options(), "multiset of size");
  const std::vector<Subdivision> list = subdivisions(m);

  auto block_names = [&](const Multiset<Monomial>& block) {
    std::vector<std::string> names;
    for (const Monomial& mono : block.items()) names.push_back(element_name(mono.exponents(), in.symbols));
    return names;
  };

  const OutputFormat fmt = s.output();
  if (fmt == OutputFormat::Json) {
    nlohmann::json rows = nlohmann::json::array();
    for (const Subdivision& sub : list) {
      nlohmann::json blocks = nlohmann::json::array();
      for (const auto& [block, rep] : sub.blocks) {
        for (std::size_t r = 0; r < rep; ++r) blocks.push_back(block_names(block));
      }
      rows.push_back({{"blocks", blocks}, {"multiplicity", sub.multiplicity.get_str()}});
    }
    out << rows.dump() << "\n";
    return;
  }
  const bool latex = fmt == OutputFormat::Latex;
  const std::string open = latex ? "\\{" : "{";
  const std::string close = latex ? "\\}" : "}";
  for (const Subdivision& sub : list) {
    std::string text = open;
    bool first_block = true;
    for (const auto& [block, rep] : sub.blocks) {
      for (std::size_t r = 0; r < rep; ++r) {
        if (!first_block) text += ",";
        first_block = false;
        text += open;
        const auto names = block_names(block);
        for (std::size_t i = 0; i < names.size(); ++i) text += (i ? "," : "") + names[i];
        text += close;
      }
    }
    text += close;
    out << text << (latex ? " & " : "\t") << sub.multiplicity.get_str() << (latex ? " \\\\" : "") << "\n";
  }
}

// ------------------------------------------------------------------ bench

void bench(const std::string& profile, const Settings& s, std::ostream& out) {
  const bool json = s.output() == OutputFormat::Json;
  const auto cases = bench_cases(profile);
  if (!json) out << bench_csv_header() << "\n" << std::flush;
  std::vector<BenchRow> rows;
  for (const BenchCase& c : cases) {
    rows.push_back(run_bench_case(c, s.options()));
    if (!json) out << bench_csv_row(rows.back()) << "\n" << std::flush;
  }
  if (json) out << bench_json(profile, rows) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Symbolic power sums, augmented symmetric functions, k-statistics and polykays.", "umbral"};
  app.footer(kGrammar);
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", s.format, "Output format")
      ->check(CLI::IsMember({"text", "latex", "json"}))
      ->envname("UMBRAL_FORMAT");
  app.add_flag("--expand-factorials", s.expand_factorials, "Expand (n)_k and (n-j) into powers of n");
  app.add_option("--max-order", s.max_order, "Largest accepted order (default 20)")->check(CLI::PositiveNumber);
  app.add_option("--threads", s.threads, "Worker threads (default 1)")->check(CLI::PositiveNumber);

  std::vector<std::string> positional;
  bool expectation = false;
  bool power_sums = false;
  std::function<void()> action;

  auto sub = [&](const std::string& name, const std::string& help, const std::string& what, bool many) {
    CLI::App* c = app.add_subcommand(name, help);
    auto* opt = c->add_option(what, positional, what)->required();
    if (!many) opt->expected(1);
    return c;
  };

  auto print = [&](const std::string& text) { out << text << "\n"; };

  sub("kstat", "k-statistic of order i", "order", false)->callback([&] {
    action = [&] { print(render(estimator_job("kstat", positional, s).estimator, s)); };
  });
  sub("polykay", "polykay of orders r t ...", "orders", true)->callback([&] {
    action = [&] { print(render(estimator_job("polykay", positional, s).estimator, s)); };
  });
  sub("mkstat", "multivariate k-statistic of a multiset", "multiset", false)->callback([&] {
    action = [&] { print(render(estimator_job("mkstat", positional, s).estimator, s)); };
  });
  sub("mpolykay", "multivariate polykay, one multiset per cumulant", "multisets", true)->callback([&] {
    action = [&] { print(render(estimator_job("mpolykay", positional, s).estimator, s)); };
  });
  CLI::App* ustat = sub("ustat", "U-statistic of a product of moments", "vectors", false);
  ustat->add_flag("--power-sums", power_sums, "Rewrite the bracket in power sums");
  ustat->callback([&] {
    action = [&] { print(render(estimator_job("ustat", positional, s, power_sums).estimator, s)); };
  });
  sub("cumulant", "cumulant in moments: an order i or one multiset per factor", "index", true)->callback([&] {
    action = [&] {
      if (positional.size() == 1 && is_plain_integer(positional[0])) {
        print(render(cumulants_from_moments(parse_positive_int(positional[0], "order")), s));
      } else {
        print(render(cumulant_product(to_groups(parse_multisets(positional))), s));
      }
    };
  });
  sub("augtops", "augmented bracket in power sums", "bracket", false)->callback([&] {
    action = [&] { print(render(aug_to_ps(Bracket(parse_vector_list(positional[0])), s.options()), s)); };
  });
  CLI::App* pstoaug = sub("pstoaug", "product of power sums in augmented brackets", "multiset", false);
  pstoaug->add_flag("--expectation", expectation, "Take the expectation of the result");
  pstoaug->callback([&] {
    action = [&] {
      SymExpr e = ps_to_aug(single_multiset(positional[0]), s.options());
      print(render(expectation ? expectation_of_brackets(e) : e, s));
    };
  });
  CLI::App* augprod = sub("augprod", "product of augmented brackets", "brackets", true);
  augprod->add_flag("--expectation", expectation, "Take the expectation of the result");
  augprod->callback([&] {
    action = [&] {
      SymExpr e = aug_product(parse_brackets(positional), s.options());
      print(render(expectation ? expectation_of_brackets(e) : e, s));
    };
  });
  sub("subdivisions", "subdivisions of a multiset with multiplicities", "multiset", false)->callback([&] {
    action = [&] { print_subdivisions(positional[0], s, out); };
  });
  int verify_status = kExitOk;
  sub("verify", "check a command against the brute-force oracle", "command", true)->callback([&] {
    action = [&] { verify_status = verify(positional, s, out); };
  });
  sub("bench", "timing run: table5, table6, table7 or quick", "profile", false)->callback([&] {
    action = [&] { bench(positional[0], s, out); };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitParseError;
  }

  try {
    action();
    return verify_status;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const GuardViolation& e) {
    err << "guard violation: " << e.what() << "\n";
    return kExitGuardViolation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace umbral::cli
