#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "uncrossed/graph.hpp"
#include "uncrossed/numeric.hpp"
#include "uncrossed/oracle.hpp"

namespace uncrossed::cli {

// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kGateFailure = 2,
  kBudgetExceeded = 3,
  kIntegrityFailure = 4,
};

// "complete:N", "bipartite:A,B", "wheel:N", "path:N", "cycle:N", "cube",
// "gnm:N:M:SEED".
Graph generate_graph(const std::string& spec);
// Reads --in FILE (edge list) or builds --gen SPEC; exactly one must be set.
Graph load_graph(const std::optional<std::string>& in, const std::optional<std::string>& gen);

std::vector<std::string> split_list(const std::string& list);

struct BoundsOptions {
  bool triangle_free_check = false;
  std::optional<std::string> csv_path;
  std::optional<std::string> json_path;
};
int cmd_bounds(const Graph& g, const BoundsOptions& opt, std::ostream& out, std::ostream& err);

struct ConstructOptions {
  Rational epsilon;
  int n = 0;
  std::string out_dir;
  bool svg = false;
};
int cmd_construct(const ConstructOptions& opt, std::ostream& out, std::ostream& err);

enum class OracleKind { kH, kUnc };
int cmd_oracle(OracleKind kind, const Graph& g, const SearchLimits& limits,
               const std::optional<std::string>& out_path, std::ostream& out, std::ostream& err);

int cmd_verify_tightness(const std::vector<Rational>& epsilons, const std::vector<int>& ns,
                         const std::optional<std::string>& out_path, std::ostream& out,
                         std::ostream& err);

// Epsilon tokens: a rational density, "K" (complete graph) or "tree" (m = n-1).
int cmd_compare_bounds(const std::vector<int>& ns, const std::vector<std::string>& epsilons,
                       const std::optional<std::string>& out_path, std::ostream& out,
                       std::ostream& err);

int cmd_render(const std::string& in_path, const std::string& out_path, std::ostream& err);

// Parses argv and dispatches; maps library errors onto exit codes.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace uncrossed::cli
