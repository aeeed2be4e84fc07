#pragma once

#include <cstdint>
#include <optional>
#include <string>

// Exit codes shared by every subcommand.
enum Exit : int {
  kOk = 0,
  kNegative = 1,    // verified negative or a solver stage failed
  kUsage = 2,       // bad arguments or malformed input
  kHypothesis = 3,  // a hypothesis audit failed
  kBudget = 4,      // exhaustive search ran out of budget
};

struct OutputOptions {
  std::string out;  // empty: stdout
  std::string dot;
  std::optional<std::uint64_t> seed;
};

struct GenOptions {
  std::string family;
  std::size_t n = 0;
  double p = 0.5;
  std::string sizes;
  std::string style = "arcless";
  double p_internal = 0.5;
  int k = 3;
  std::uint64_t seed = 1;
};

struct CheckOptions {
  std::string input;
  bool kappa = false;
  bool strong = false;
  bool semicomplete = false;
  bool tournament = false;
  int lqt = 0;
  bool nid = false;
  int cmax = 0;
  int vertex = -1;
  int king = -1;
  int profile = -1;
  std::string local;
};

struct SolveOptions {
  std::string input;
  std::string klass = "semicomplete";
  std::string pairs;
  int l = 2;
  std::int64_t threshold = 0;
  std::size_t anchor_budget = 200'000;
  bool skip_audit = false;
  std::string aux_out;
  bool menger = false;
  bool min_vertex = false;
  std::string from;
  std::string to;
  std::string avoid;
};

struct VerifyOptions {
  std::string digraph;
  std::string paths;
  std::string pairs;
};

struct OracleOptions {
  std::string input;
  int k = 0;
  std::string pairs;
  std::size_t budget = 10'000'000;
  bool all = false;
};

struct BenchOptions {
  std::string suite = "acceptance";
  std::uint64_t seed = 20240601;
};

int run_gen(const GenOptions& options, const OutputOptions& output);
int run_check(const CheckOptions& options, const OutputOptions& output);
int run_solve(const SolveOptions& options, const OutputOptions& output);
int run_verify(const VerifyOptions& options, const OutputOptions& output);
int run_oracle(const OracleOptions& options, const OutputOptions& output);
int run_bench(const BenchOptions& options, const std::string& self);
