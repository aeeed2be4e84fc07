#include "dilink/composition_linkage.hpp"

#include <algorithm>
#include <string>

#include "dilink/connectivity.hpp"
#include "dilink/error.hpp"
#include "dilink/oracle.hpp"
#include "dilink/semicomplete_linkage.hpp"

namespace dilink {

namespace {

std::vector<int> checked_part_index(const Digraph& d, const std::vector<VertexList>& parts) {
  std::vector<int> index(d.capacity(), -1);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (Vertex v : parts[i]) {
      if (!d.contains(v)) {
        throw Error(ErrorCode::NotAPartition, "vertex " + std::to_string(v) + " is not in D", {v});
      }
      if (index[v] >= 0) {
        throw Error(ErrorCode::NotAPartition, "vertex " + std::to_string(v) + " is in two parts", {v});
      }
      index[v] = static_cast<int>(i);
    }
  }
  for (Vertex v : d.vertices()) {
    if (index[v] < 0) {
      throw Error(ErrorCode::NotAPartition, "vertex " + std::to_string(v) + " is in no part", {v});
    }
  }
  return index;
}

}  // namespace

Digraph strip_intra_part_arcs(const Digraph& d, const std::vector<VertexList>& parts) {
  const auto index = checked_part_index(d, parts);
  DigraphBuilder b(d);
  for (const Arc& a : d.arcs()) {
    if (index[a.tail] == index[a.head]) b.remove_arc(a.tail, a.head);
  }
  return b.build();
}

Digraph saturate_parts(const Digraph& d0, const std::vector<VertexList>& parts,
                       std::span<const Vertex> y) {
  const auto in_y = vertex_mask(d0.capacity(), y);
  DigraphBuilder b(d0);
  for (const VertexList& part : parts) {
    for (Vertex u : part) {
      for (Vertex v : part) {
        if (u == v) continue;
        // Within Y, within the rest, and from Y to the rest.
        if (in_y[u] || !in_y[v]) b.ensure_arc(u, v);
      }
    }
  }
  return b.build();
}

Path minimalize_path(const Digraph& d, const Path& p) {
  Path current = p;
  while (current.size() > 2) {
    auto shorter = shortest_path(induced(d, current), current.front(), current.back());
    if (!shorter || shorter->size() >= current.size()) break;
    current = std::move(*shorter);
  }
  return current;
}

SolveReport solve_composition(const Digraph& d, const std::vector<VertexList>& parts,
                              std::span<const TerminalPair> pairs,
                              const CompositionSolveOptions& options) {
  check_terminal_pairs(d, pairs);
  checked_part_index(d, parts);
  const int k = static_cast<int>(pairs.size());
  if (parts.size() < 2) throw Error(ErrorCode::ArityMismatch, "a composition needs >= 2 parts");
  const CompositionSpec spec = composition_from_partition(d, parts);

  SolveReport report;
  const bool outer_semicomplete = is_semicomplete(spec.outer);
  report.audit.push_back({"outer_semicomplete", "true", outer_semicomplete ? "true" : "false",
                          outer_semicomplete});
  if (!outer_semicomplete) {
    report.outcome = Outcome::HypothesisViolated;
    report.hypothesis = "semicomplete";
    report.detail = "the outer digraph is not semicomplete";
    return report;
  }

  const bool singletons = std::all_of(parts.begin(), parts.end(),
                                      [](const VertexList& p) { return p.size() == 1; });
  if (singletons) {
    SolveReport inner = solve_semicomplete(d, pairs, {options.audit});
    inner.audit.insert(inner.audit.begin(), report.audit.begin(), report.audit.end());
    return inner;
  }

  auto co_size = [](const Digraph& g, const std::vector<VertexList>& ps) {
    std::size_t smallest = g.order();
    for (const VertexList& p : ps) smallest = std::min(smallest, g.order() - p.size());
    return smallest;
  };

  const std::size_t min_out = d.min_out_degree();
  if (options.audit) {
    const bool strong = is_k_strong(d, 3 * k);
    const std::string bound = std::to_string(3 * k);
    report.audit.push_back({"kappa", ">= " + bound, (strong ? ">= " : "< ") + bound, strong});
    const bool degree = min_out >= static_cast<std::size_t>(23 * k);
    report.audit.push_back(
        {"min_out_degree", ">= " + std::to_string(23 * k), std::to_string(min_out), degree});
    const long long smallest = static_cast<long long>(co_size(d, parts));
    const bool co = smallest >= 2LL * k - 3;
    report.audit.push_back(
        {"part_co_size", ">= " + std::to_string(2 * k - 3), std::to_string(smallest), co});
    if (!strong || !degree || !co) {
      report.outcome = Outcome::HypothesisViolated;
      report.hypothesis = !strong ? "kappa" : !degree ? "min_out_degree" : "part_co_size";
      report.detail = !strong ? "kappa < " + bound
                      : !degree ? "min out-degree " + std::to_string(min_out) + " < " +
                                      std::to_string(23 * k)
                                : "|D - S_i| = " + std::to_string(smallest) + " < " +
                                      std::to_string(2 * k - 3);
      return report;
    }
  } else {
    report.audit.push_back({"kappa", ">= " + std::to_string(3 * k), "skipped", true, true});
    report.audit.push_back({"min_out_degree", ">= " + std::to_string(23 * k),
                            std::to_string(min_out), min_out >= static_cast<std::size_t>(23 * k),
                            true});
  }

  std::vector<Path> found(pairs.size());
  std::vector<std::size_t> active(pairs.size());
  for (std::size_t i = 0; i < active.size(); ++i) active[i] = i;
  DigraphBuilder shrinking(d);
  std::vector<VertexList> current_parts = parts;
  int depth = 0;

  auto failed = [&](const std::string& stage, const std::string& detail, VertexList witness) {
    report.outcome = Outcome::StageFailed;
    report.stage = stage;
    report.detail = detail;
    report.witness = std::move(witness);
    return report;
  };
  auto remove = [&](std::span<const Vertex> vs) {
    for (Vertex v : vs) shrinking.remove_vertex(v);
    for (VertexList& p : current_parts) {
      std::erase_if(p, [&](Vertex v) { return std::find(vs.begin(), vs.end(), v) != vs.end(); });
    }
    std::erase_if(current_parts, [](const VertexList& p) { return p.empty(); });
  };

  for (;; ++depth) {
    Digraph current = shrinking.build();
    // Pairs joined by an arc are linked directly.
    std::vector<std::size_t> rest;
    VertexList peeled;
    for (std::size_t i : active) {
      const auto& p = pairs[i];
      if (current.has_arc(p.source, p.target)) {
        found[i] = {p.source, p.target};
        peeled.push_back(p.source);
        peeled.push_back(p.target);
      } else {
        rest.push_back(i);
      }
    }
    active = std::move(rest);
    if (active.empty()) break;
    if (!peeled.empty()) {
      remove(peeled);
      current = shrinking.build();
    }

    const int k_now = static_cast<int>(active.size());
    if (options.audit) {
      const long long smallest = static_cast<long long>(co_size(current, current_parts));
      if (smallest < 2LL * k_now - 3) {
        report.outcome = Outcome::HypothesisViolated;
        report.hypothesis = "part_co_size";
        report.detail = "|D - S_i| = " + std::to_string(smallest) + " < " +
                        std::to_string(2 * k_now - 3) + " at depth " + std::to_string(depth);
        return report;
      }
    }

    if (k_now == 1) {
      const auto& p = pairs[active[0]];
      auto path = shortest_path(current, p.source, p.target);
      if (!path) return failed("single_pair", "no path left for the last pair", {p.source, p.target});
      found[active[0]] = std::move(*path);
      break;
    }
    if (current_parts.size() < 2) {
      return failed("single_part", "all remaining vertices lie in one part", {});
    }

    if (current_parts.size() == 2) {
      // Two parts: some pair has a 2-path through a non-terminal vertex.
      auto is_terminal = vertex_mask(d.capacity(), {});
      for (std::size_t i : active) is_terminal[pairs[i].source] = is_terminal[pairs[i].target] = 1;
      bool placed = false;
      for (std::size_t i : active) {
        const auto& p = pairs[i];
        for (Vertex v : current.out_neighbours(p.source)) {
          if (is_terminal[v] || !current.has_arc(v, p.target)) continue;
          found[i] = {p.source, v, p.target};
          const VertexList used{p.source, v, p.target};
          remove(used);
          std::erase(active, i);
          placed = true;
          break;
        }
        if (placed) break;
      }
      if (!placed) return failed("two_parts", "no pair has a free 2-path", {});
      continue;
    }

    // At least three parts: solve in the saturated digraph, then shrink the
    // paths to minimal ones, which use only arcs between parts.
    std::vector<TerminalPair> sub_pairs;
    VertexList ys;
    for (std::size_t i : active) {
      sub_pairs.push_back(pairs[i]);
      ys.push_back(pairs[i].target);
    }
    const Digraph d0 = strip_intra_part_arcs(current, current_parts);
    const Digraph saturated = saturate_parts(d0, current_parts, ys);
    SolveReport inner = solve_semicomplete(saturated, sub_pairs, {options.audit});
    for (AuditEntry entry : inner.audit) {
      entry.name = "saturated." + entry.name;
      report.audit.push_back(std::move(entry));
    }
    if (!inner.linked()) {
      report.outcome = inner.outcome;
      report.hypothesis = inner.hypothesis.empty() ? "" : "saturated." + inner.hypothesis;
      report.stage = inner.stage.empty() ? "" : "saturated." + inner.stage;
      report.detail = inner.detail;
      report.witness = inner.witness;
      return report;
    }
    for (std::size_t j = 0; j < active.size(); ++j) {
      Path p = minimalize_path(saturated, inner.paths.paths[j]);
      for (std::size_t t = 0; t + 1 < p.size(); ++t) {
        if (!current.has_arc(p[t], p[t + 1])) {
          return failed("new_arc_leak", "minimal path uses an added arc", {p[t], p[t + 1]});
        }
      }
      found[active[j]] = std::move(p);
    }
    break;
  }

  PathSystem linkage;
  for (Path& p : found) linkage.add(std::move(p));
  linkage.provenance = "composition";
  VerifyReport check = verify_linkage(d, pairs, linkage);
  if (!check.passed) return failed("verify", check.message, check.vertices);
  report.outcome = Outcome::Linked;
  report.paths = std::move(linkage);
  return report;
}

SolveReport solve_composition(const CompositionSpec& spec, std::span<const TerminalPair> pairs,
                              const CompositionSolveOptions& options) {
  return solve_composition(compose(spec), spec.part_sets(), pairs, options);
}

}  // namespace dilink
