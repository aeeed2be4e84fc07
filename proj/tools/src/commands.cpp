#include "commands.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "acceptance.hpp"
#include "dilink/composition.hpp"
#include "dilink/composition_linkage.hpp"
#include "dilink/connectivity.hpp"
#include "dilink/dominators.hpp"
#include "dilink/error.hpp"
#include "dilink/generators.hpp"
#include "dilink/io.hpp"
#include "dilink/lqt_linkage.hpp"
#include "dilink/oracle.hpp"
#include "dilink/semicomplete_linkage.hpp"

using namespace dilink;

namespace {

[[noreturn]] void usage(const std::string& message) {
  throw Error(ErrorCode::InvalidArgument, message);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Format, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Format, "cannot write " + path);
  out << text;
}

// JSON goes to --out when given (stdout gets a one-line summary), else stdout.
void emit(const Json& j, const OutputOptions& output, const std::string& summary) {
  Json doc = j;
  if (output.seed) doc["seed"] = *output.seed;
  if (output.out.empty()) {
    std::cout << dump(doc);
  } else {
    write_file(output.out, dump(doc));
    std::cout << summary << "\n";
  }
}

DigraphDocument load(const std::string& path) { return parse_digraph(read_file(path)); }

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const long value = std::stol(item, &used);
      if (used != item.size() || value <= 0) throw std::invalid_argument(item);
      out.push_back(static_cast<std::size_t>(value));
    } catch (const std::logic_error&) {
      usage("--sizes: '" + item + "' is not a positive integer");
    }
  }
  return out;
}

// Vertex lists may contain 0, which parse_sizes rejects.
VertexList parse_vertex_list(const std::string& text) {
  VertexList out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const int value = std::stoi(item, &used);
      if (used != item.size() || value < 0) throw std::invalid_argument(item);
      out.push_back(value);
    } catch (const std::logic_error&) {
      usage("'" + item + "' is not a vertex");
    }
  }
  return out;
}

Json pairs_json(const std::vector<TerminalPair>& pairs) {
  Json out = Json::array();
  for (const auto& p : pairs) out.push_back({p.source, p.target});
  return out;
}

int exit_for(const SolveReport& r) {
  switch (r.outcome) {
    case Outcome::Linked: return kOk;
    case Outcome::HypothesisViolated: return kHypothesis;
    case Outcome::StageFailed: return kNegative;
  }
  return kNegative;
}

}  // namespace

int run_gen(const GenOptions& o, const OutputOptions& output) {
  Json meta{{"family", o.family}, {"seed", o.seed}};
  std::vector<VertexList> parts;
  Digraph d;
  const std::string& f = o.family;
  auto need_n = [&] {
    if (o.n == 0) usage("--family " + f + " needs --n");
    meta["n_requested"] = o.n;
  };
  if (f == "tournament") {
    need_n();
    d = random_tournament(o.n, o.seed);
  } else if (f == "circulant") {
    need_n();
    d = circulant_tournament(o.n);
  } else if (f == "transitive") {
    need_n();
    d = transitive_tournament(o.n);
  } else if (f == "complete") {
    need_n();
    d = complete_digraph(o.n);
  } else if (f == "path") {
    need_n();
    d = directed_path(o.n);
  } else if (f == "cycle") {
    need_n();
    d = directed_cycle(o.n);
  } else if (f == "semicomplete") {
    need_n();
    meta["p"] = o.p;
    d = random_semicomplete(o.n, o.p, o.seed);
  } else if (f == "digraph") {
    need_n();
    meta["p"] = o.p;
    d = random_digraph(o.n, o.p, o.seed);
  } else if (f == "composition" || f == "quasi-transitive") {
    const auto sizes = parse_sizes(o.sizes);
    if (sizes.size() < 2) usage("--family " + f + " needs --sizes with at least two parts");
    CompositionSpec spec;
    if (f == "composition") {
      CompositionOptions co;
      if (o.style == "arcless") {
        co.style = PartStyle::Arcless;
      } else if (o.style == "random") {
        co.style = PartStyle::Random;
      } else if (o.style == "transitive") {
        co.style = PartStyle::Transitive;
      } else {
        usage("--style must be arcless, random or transitive");
      }
      co.p_internal = o.p_internal;
      meta["p"] = o.p;
      meta["style"] = o.style;
      spec = random_composition(sizes.size(), sizes, o.p, o.seed, co);
    } else {
      spec = random_quasi_transitive(sizes, o.seed);
    }
    meta["sizes"] = sizes;
    d = compose(spec);
    parts = spec.part_sets();
  } else if (f == "non-linked") {
    NonLinkedFamily family = non_linked_composition_family(o.k, default_family_core());
    meta.erase("seed");
    meta["k"] = o.k;
    meta["bad_pairs"] = pairs_json(family.bad_pairs);
    d = compose(family.spec);
    parts = family.spec.part_sets();
  } else {
    usage("unknown family '" + f + "'");
  }
  Json j = to_json(d, parts, meta);
  if (!output.dot.empty()) write_file(output.dot, to_dot(d));
  emit(j, output, "n=" + std::to_string(d.order()) + " arcs=" + std::to_string(d.arc_count()));
  return kOk;
}

int run_check(const CheckOptions& o, const OutputOptions& output) {
  const DigraphDocument doc = load(o.input);
  const Digraph& d = doc.digraph;
  Json j{{"n", d.order()}, {"arcs", d.arc_count()},
         {"min_out_degree", d.min_out_degree()}, {"min_in_degree", d.min_in_degree()}};
  bool all = true;
  auto predicate = [&](const char* name, bool value) {
    j[name] = value;
    all = all && value;
  };
  if (o.kappa) j["kappa"] = kappa(d);
  if (o.strong) predicate("strong", is_strong(d));
  if (o.semicomplete) predicate("semicomplete", is_semicomplete(d));
  if (o.tournament) predicate("tournament", is_tournament(d));
  if (o.lqt > 0) {
    const bool ok = is_l_quasi_transitive(d, o.lqt);
    j["l"] = o.lqt;
    predicate("l_quasi_transitive", ok);
    if (!ok) {
      const auto bad = l_quasi_transitivity_violation(d, o.lqt);
      if (bad) j["l_quasi_transitive_witness"] = {bad->tail, bad->head};
    }
  }
  if (o.nid) {
    const Vertex u = o.vertex >= 0 ? o.vertex : nearly_in_dominating_vertex(d);
    const int c_max = o.cmax > 0 ? o.cmax : static_cast<int>(d.order());
    auto result = verify_nearly_in_dominating(d, u, c_max);
    Json r = to_json(result);
    r["vertex"] = u;
    r["c_max"] = c_max;
    j["nearly_in_dominating"] = r;
    all = all && result.holds;
  }
  if (o.king >= 0) {
    if (!d.contains(o.king)) usage("--king: no vertex " + std::to_string(o.king));
    predicate("in_king", is_in_king(d, o.king));
  }
  if (o.profile >= 0) j["profile"] = to_json(goodness_profile(d, o.profile));
  if (!o.local.empty()) {
    const auto pair = parse_pairs(o.local);
    if (pair.size() != 1) usage("--local expects one pair x:y");
    j["local_connectivity"] = {{"x", pair[0].source}, {"y", pair[0].target},
                               {"value", local_connectivity(d, pair[0].source, pair[0].target)}};
  }
  emit(j, output, all ? "all predicates hold" : "some predicate fails");
  return all ? kOk : kNegative;
}

int run_solve(const SolveOptions& o, const OutputOptions& output) {
  const DigraphDocument doc = load(o.input);
  const Digraph& d = doc.digraph;

  if (o.menger) {
    const VertexList from = parse_vertex_list(o.from);
    const VertexList to = parse_vertex_list(o.to);
    const VertexList avoid = parse_vertex_list(o.avoid);
    MengerResult r = o.min_vertex ? min_vertex_menger(d, from, to, avoid)
                                  : menger_set_paths(d, from, to, avoid);
    Json j{{"mode", o.min_vertex ? "min_vertex_menger" : "menger"}, {"feasible", r.feasible}};
    if (r.feasible) {
      j["paths"] = to_json(r.paths);
      j["total_vertices"] = r.total_vertices;
    } else {
      j["separator"] = r.separator;
    }
    if (!output.dot.empty()) write_file(output.dot, to_dot(d, r.feasible ? &r.paths : nullptr));
    emit(j, output, r.feasible ? "feasible" : "infeasible");
    return r.feasible ? kOk : kNegative;
  }

  const auto pairs = parse_pairs(o.pairs);
  if (pairs.empty()) usage("--pairs is required");
  SolveReport report;
  Json extra = Json::object();
  if (o.klass == "semicomplete") {
    report = solve_semicomplete(d, pairs, {!o.skip_audit});
  } else if (o.klass == "composition") {
    if (doc.parts.empty()) usage("--class composition needs \"parts\" in the input");
    report = solve_composition(d, doc.parts, pairs, {!o.skip_audit});
  } else if (o.klass == "lqt") {
    LqtOptions lo;
    lo.threshold = o.threshold;
    lo.anchor_budget = o.anchor_budget;
    lo.audit = !o.skip_audit;
    report = solve_lqt(d, pairs, o.l, lo);
    extra["l"] = o.l;
    if (!o.aux_out.empty()) {
      const std::int64_t threshold = o.threshold > 0 ? o.threshold
                                                     : available_path_threshold(
                                                           static_cast<int>(pairs.size()), o.l);
      const auto aux = build_auxiliary(d, sources_of(pairs), targets_of(pairs), o.l, threshold);
      write_file(o.aux_out, dump(to_json(aux)));
    }
  } else {
    usage("--class must be semicomplete, composition or lqt");
  }
  Json j{{"class", o.klass},
         {"pairs", pairs_json(pairs)},
         {"input", {{"n", d.order()}, {"arcs", d.arc_count()}, {"min_out_degree", d.min_out_degree()}}},
         {"report", to_json(report)}};
  for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
  if (!output.dot.empty()) write_file(output.dot, to_dot(d, report.linked() ? &report.paths : nullptr));
  std::string summary(to_string(report.outcome));
  if (!report.hypothesis.empty()) summary += " " + report.hypothesis;
  if (!report.stage.empty()) summary += " " + report.stage;
  emit(j, output, summary);
  return exit_for(report);
}

int run_verify(const VerifyOptions& o, const OutputOptions& output) {
  const DigraphDocument doc = load(o.digraph);
  Json input = parse_json(read_file(o.paths));
  std::vector<TerminalPair> pairs;
  // Accept a solve report as well as a bare path system.
  if (input.is_object() && input.contains("report")) {
    for (const Json& p : input.value("pairs", Json::array())) {
      pairs.push_back({p.at(0).get<int>(), p.at(1).get<int>()});
    }
    input = input["report"].value("paths", Json{{"paths", Json::array()}});
  }
  PathSystem system = path_system_from_json(input);
  if (!o.pairs.empty()) {
    pairs = parse_pairs(o.pairs);
  } else if (pairs.empty()) {
    pairs = system.pairs;
  }
  VerifyReport r = verify_linkage(doc.digraph, pairs, system);
  emit(to_json(r), output, r.passed ? "pass" : "fail " + std::string(to_string(r.clause)));
  return r.passed ? kOk : kNegative;
}

int run_oracle(const OracleOptions& o, const OutputOptions& output) {
  const DigraphDocument doc = load(o.input);
  if (!o.pairs.empty()) {
    const auto pairs = parse_pairs(o.pairs);
    auto r = brute_force_disjoint_paths(doc.digraph, pairs, o.budget);
    Json j{{"status", std::string(to_string(r.status))}, {"expansions", r.expansions}};
    if (r.status == SearchStatus::Found) j["paths"] = to_json(r.paths);
    emit(j, output, std::string(to_string(r.status)));
    return r.status == SearchStatus::Found ? kOk
           : r.status == SearchStatus::Infeasible ? kNegative
                                                  : kBudget;
  }
  if (o.k <= 0) usage("oracle needs --k or --pairs");
  auto r = brute_force_k_linked(doc.digraph, o.k, o.budget, o.all);
  Json j{{"k", o.k},
         {"status", std::string(to_string(r.status))},
         {"assignments", r.assignments},
         {"expansions", r.expansions}};
  if (!r.witness.empty()) j["witness"] = pairs_json(r.witness);
  if (o.all) {
    Json failing = Json::array();
    for (const auto& w : r.failing) failing.push_back(pairs_json(w));
    j["failing"] = failing;
  }
  emit(j, output, std::string(to_string(r.status)));
  return r.status == LinkedStatus::Linked ? kOk
         : r.status == LinkedStatus::NotLinked ? kNegative
                                               : kBudget;
}

int run_bench(const BenchOptions& o, const std::string& self) {
  if (o.suite != "acceptance") usage("unknown suite '" + o.suite + "'");
  acceptance::Config config;
  config.cli_path = self;
  config.seed = o.seed;
  auto results = acceptance::run_all(config, [](const acceptance::CriterionResult& r) {
    std::cout << acceptance::format_line(r) << std::endl;
  });
  std::cout << "\n" << std::left << std::setw(4) << "#" << std::setw(32) << "criterion" << std::setw(8)
            << "result" << "seconds\n";
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    std::cout << std::setw(4) << r.id << std::setw(32) << r.name << std::setw(8)
              << (r.passed ? "PASS" : "FAIL") << std::fixed << std::setprecision(2) << r.seconds << "\n";
  }
  return all ? kOk : kNegative;
}
