#include <filesystem>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "dilink/error.hpp"

namespace {

void add_output(CLI::App* app, OutputOptions& output, bool with_dot) {
  app->add_option("--out,-o", output.out, "Write the JSON result to this file");
  if (with_dot) app->add_option("--dot", output.dot, "Also write a DOT rendering");
  app->add_option("--seed", output.seed, "Seed to record in the output");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-linkage toolkit for semicomplete digraphs, compositions and l-quasi-transitive digraphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "dilink 0.1.0");

  GenOptions gen;
  OutputOptions gen_out;
  auto* g = app.add_subcommand("gen", "Generate a digraph");
  g->add_option("--family,-f", gen.family,
                "tournament | circulant | transitive | complete | path | cycle | semicomplete | "
                "digraph | composition | quasi-transitive | non-linked")
      ->required();
  g->add_option("--n,-n", gen.n, "Number of vertices (or parts for compositions)");
  g->add_option("--p", gen.p, "2-cycle probability (arc probability for --family digraph)");
  g->add_option("--sizes", gen.sizes, "Part sizes, comma separated");
  g->add_option("--style", gen.style, "Part style: arcless | random | transitive");
  g->add_option("--p-internal", gen.p_internal, "Arc probability inside random parts");
  g->add_option("--k", gen.k, "Linkage size for the non-linked family");
  g->add_option("--seed", gen.seed, "RNG seed");
  g->add_option("--out,-o", gen_out.out, "Write the digraph to this file");
  g->add_option("--dot", gen_out.dot, "Also write a DOT rendering");

  CheckOptions check;
  OutputOptions check_out;
  auto* c = app.add_subcommand("check", "Evaluate predicates and invariants of a digraph");
  c->add_option("input", check.input, "Digraph JSON file")->required();
  c->add_flag("--kappa", check.kappa, "Vertex strong connectivity");
  c->add_flag("--strong", check.strong, "Strong connectivity");
  c->add_flag("--semicomplete", check.semicomplete, "Semicompleteness");
  c->add_flag("--tournament", check.tournament, "Tournament");
  c->add_option("--lqt", check.lqt, "l-quasi-transitivity for this l");
  c->add_flag("--nid", check.nid, "Nearly in-dominating check");
  c->add_option("--cmax", check.cmax, "Largest c for --nid (default n)");
  c->add_option("--vertex", check.vertex, "Vertex for --nid (default: the selected one)");
  c->add_option("--king", check.king, "In-king test for this vertex");
  c->add_option("--profile", check.profile, "Goodness profile towards this vertex");
  c->add_option("--local", check.local, "Local connectivity x:y");
  add_output(c, check_out, false);

  SolveOptions solve;
  OutputOptions solve_out;
  auto* s = app.add_subcommand("solve", "Find a linkage, or disjoint paths with --menger");
  s->add_option("input", solve.input, "Digraph JSON file")->required();
  s->add_option("--class", solve.klass, "semicomplete | composition | lqt");
  s->add_option("--pairs", solve.pairs, "Terminal pairs x:y,...");
  s->add_option("--l", solve.l, "l for --class lqt");
  s->add_option("--threshold", solve.threshold, "Available-path threshold override for lqt");
  s->add_option("--anchor-budget", solve.anchor_budget, "Short-anchor search budget for lqt");
  s->add_flag("--skip-audit", solve.skip_audit, "Skip the hypothesis audit");
  s->add_option("--aux", solve.aux_out, "Write the auxiliary digraph (lqt) to this file");
  s->add_flag("--menger", solve.menger, "Disjoint paths from --from onto --to");
  s->add_flag("--min-vertex", solve.min_vertex, "With --menger: minimum total vertex count");
  s->add_option("--from", solve.from, "Source set for --menger");
  s->add_option("--to", solve.to, "Target set for --menger");
  s->add_option("--avoid", solve.avoid, "Vertices to avoid for --menger");
  add_output(s, solve_out, true);

  VerifyOptions verify;
  OutputOptions verify_out;
  auto* v = app.add_subcommand("verify", "Certify a path system against a digraph");
  v->add_option("digraph", verify.digraph, "Digraph JSON file")->required();
  v->add_option("paths", verify.paths, "Path system or solve report JSON file")->required();
  v->add_option("--pairs", verify.pairs, "Terminal pairs x:y,... (default: from the file)");
  add_output(v, verify_out, false);

  OracleOptions oracle;
  OutputOptions oracle_out;
  auto* o = app.add_subcommand("oracle", "Exhaustive linkage search on small digraphs");
  o->add_option("input", oracle.input, "Digraph JSON file")->required();
  o->add_option("--k", oracle.k, "Decide k-linkedness");
  o->add_option("--pairs", oracle.pairs, "Search disjoint paths for these pairs instead");
  o->add_option("--budget", oracle.budget, "Search-node expansion budget");
  o->add_flag("--all", oracle.all, "Collect every failing assignment");
  add_output(o, oracle_out, false);

  BenchOptions bench;
  auto* b = app.add_subcommand("bench", "Run a named suite and print a summary table");
  b->add_option("--suite", bench.suite, "acceptance");
  b->add_option("--seed", bench.seed, "Base seed of the suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*g) return run_gen(gen, gen_out);
    if (*c) return run_check(check, check_out);
    if (*s) return run_solve(solve, solve_out);
    if (*v) return run_verify(verify, verify_out);
    if (*o) return run_oracle(oracle, oracle_out);
    std::error_code ec;
    auto self = std::filesystem::read_symlink("/proc/self/exe", ec);
    return run_bench(bench, ec ? std::string(argv[0]) : self.string());
  } catch (const dilink::Error& e) {
    std::cerr << "error: " << dilink::to_string(e.code()) << ": " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
