#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "sumclust/constraint.hpp"
#include "sumclust/metric.hpp"

namespace sumclust {

// Instance JSON: {"points": [[x,...],...], "metric": "euclidean"} or
// {"matrix": [[...],...]}; optional "k" and "constraints". Euclidean
// distances are rounded to 10^-precision_digits fixed point and closed under
// shortest paths (rounding can break the triangle inequality in the last
// digit); matrix entries are rounded the same way and validated as given.
struct ParsedInstance {
  MetricSpace space;
  std::optional<int> k;
  Constraint constraint = Constraint::none();
  bool has_constraint = false;
};

// Errors carry "<name>:<line>: message" anchors where a line is known.
ParsedInstance parse_instance_text(const std::string& text, const std::string& name,
                                   int precision_digits);
ParsedInstance parse_instance_file(const std::string& path, int precision_digits);

// {"type":"min_size","value":m} or
// {"type":"exact_fairness","colors":[...],"ratios":[...]} or {"type":"none"};
// accepts inline JSON (leading '{') or a file path.
Constraint parse_constraint_spec(const std::string& inline_json_or_path);

// Exact decimal or fraction text ("0.75", "3/4", "1") to a reduced rational.
void parse_epsilon(const std::string& text, long long& num, long long& den);

// Command line front end; returns the process exit code. Subcommands:
// run (exit 0; 2 parse/validation, 3 infeasible constraint),
// verify (exit 1 on a violated bound), bench (CSV).
int run_cli(int argc, const char* const* argv);

}  // namespace sumclust
