#include "dilink/semicomplete_linkage.hpp"

#include <algorithm>
#include <string>

#include "dilink/connectivity.hpp"
#include "dilink/dominators.hpp"
#include "dilink/error.hpp"
#include "dilink/oracle.hpp"

namespace dilink {

namespace {

using Mask = std::vector<std::uint8_t>;

void mark(Mask& mask, std::span<const Vertex> vs) {
  for (Vertex v : vs) mask[v] = 1;
}

// i-th vertices (1-based) of all paths of Q.
VertexList layer(const PathSystem& q, std::size_t i) {
  VertexList out;
  for (const Path& p : q.paths) {
    if (p.size() >= i) out.push_back(p[i - 1]);
  }
  return out;
}

int count_in(const Digraph& d, Vertex v, const Mask& set, Direction direction) {
  int count = 0;
  auto nbrs = direction == Direction::Out ? d.out_neighbours(v) : d.in_neighbours(v);
  for (Vertex w : nbrs) count += set[w];
  return count;
}

}  // namespace

void check_terminal_pairs(const Digraph& d, std::span<const TerminalPair> pairs) {
  Mask seen(d.capacity(), 0);
  for (const auto& p : pairs) {
    for (Vertex v : {p.source, p.target}) {
      if (!d.contains(v)) {
        throw Error(ErrorCode::InvalidPairs, "terminal " + std::to_string(v) + " not in digraph", {v});
      }
      if (seen[v]) {
        throw Error(ErrorCode::InvalidPairs, "terminal " + std::to_string(v) + " used twice", {v});
      }
      seen[v] = 1;
    }
  }
}

PathSystem anchor_short_paths(const Digraph& d, const AnchorContext& context,
                              std::span<const Vertex> a, std::span<const Vertex> s,
                              std::span<const Vertex> w, const AnchorOptions& options) {
  const auto n = d.capacity();
  const int k = static_cast<int>(context.x.size());
  const int size_a = static_cast<int>(a.size());
  const int size_w = static_cast<int>(w.size());
  PathSystem result;
  result.provenance = "anchor";
  if (a.empty()) return result;

  const VertexList ini = context.q.initial_vertices();
  const VertexList y2 = layer(context.q, 2);
  const VertexList y3 = layer(context.q, 3);
  Mask in_x(n, 0), in_y(n, 0), in_u(n, 0), in_ini(n, 0), in_w(n, 0), in_a(n, 0), in_y23(n, 0);
  mark(in_x, context.x);
  mark(in_y, context.y);
  mark(in_u, context.u);
  mark(in_ini, ini);
  mark(in_w, w);
  mark(in_a, a);
  mark(in_y23, y2);
  mark(in_y23, y3);
  Mask in_y2(n, 0);
  mark(in_y2, y2);
  Mask on_q(n, 0);
  for (const Path& p : context.q.paths) mark(on_q, p);

  Mask rest_u(n, 0);  // U \ Ini(Q)
  for (Vertex v : context.u) rest_u[v] = !in_ini[v];

  if (options.check_precondition) {
    auto fail = [](const std::string& what, VertexList witness) {
      throw Error(ErrorCode::PreconditionViolated, what, std::move(witness));
    };
    if (size_a > k) fail("|A| = " + std::to_string(size_a) + " exceeds k", {});
    if (s.size() != a.size()) fail("|S| differs from |A|", {});
    for (Vertex v : a) {
      if (in_w[v] || in_ini[v]) fail("A meets W ∪ Ini(Q) at " + std::to_string(v), {v});
    }
    for (Vertex v : s) {
      if (!in_ini[v] || in_w[v]) fail("S is not inside Ini(Q) \\ W at " + std::to_string(v), {v});
    }
    const int need = 7 * k + 3 * size_w + 7 * size_a;
    for (Vertex v : a) {
      int qualifying = 0;
      for (Vertex out : d.out_neighbours(v)) {
        if (in_x[out] || in_y[out] || in_u[out]) continue;
        if (count_in(d, out, rest_u, Direction::In) >= 1) ++qualifying;
      }
      if (qualifying < need) {
        fail("vertex " + std::to_string(v) + " has " + std::to_string(qualifying) +
                 " qualifying out-neighbours, needs " + std::to_string(need),
             {v});
      }
    }
  } else if (s.size() != a.size()) {
    throw Error(ErrorCode::SizeMismatch, "|S| differs from |A|");
  }

  // Goodness is measured in D - (X ∪ Y).
  DigraphBuilder trimmed(d);
  for (auto set : {std::span<const Vertex>(context.x), std::span<const Vertex>(context.y)}) {
    for (Vertex v : set) trimmed.remove_vertex(v);
  }
  const Digraph d_xy = trimmed.build();
  const int c = 3 * k + size_w + 3 * size_a;

  Mask used(n, 0);
  VertexList plus(a.size(), -1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Vertex q = s[i];
    Vertex fallback = -1;
    int fallback_rank = 3;
    for (Vertex v : d.out_neighbours(a[i])) {
      if (in_x[v] || in_y[v] || in_u[v] || in_y2[v] || on_q[v] || in_w[v] || in_a[v] || used[v]) {
        continue;
      }
      if (count_in(d, v, rest_u, Direction::In) < 1) continue;
      const bool good = d_xy.has_arc(v, q) || two_path_width(d_xy, v, q) >= c;
      if (options.check_precondition) {
        if (good) {
          plus[i] = v;
          break;
        }
        continue;
      }
      // Without the precondition prefer a direct hit, then a good vertex.
      const int rank = d.has_arc(v, q) ? 0 : good ? 1 : 2;
      if (rank < fallback_rank) {
        fallback = v;
        fallback_rank = rank;
      }
      if (rank == 0) break;
    }
    if (plus[i] < 0) plus[i] = fallback;
    if (plus[i] < 0) {
      throw Error(ErrorCode::ConstructionFailed,
                  "no out-neighbour of " + std::to_string(a[i]) + " qualifies as a+", {a[i]});
    }
    used[plus[i]] = 1;
  }

  for (std::size_t i = 0; i < a.size(); ++i) {
    const Vertex q = s[i];
    if (d.has_arc(plus[i], q)) {
      result.add({a[i], plus[i], q});
      continue;
    }
    Vertex mid = -1;
    for (Vertex v : d.out_neighbours(plus[i])) {
      if (in_x[v] || in_y[v] || in_a[v] || in_y23[v] || on_q[v] || in_w[v] || used[v]) continue;
      if (d.has_arc(v, q)) {
        mid = v;
        break;
      }
    }
    if (mid < 0) {
      throw Error(ErrorCode::ConstructionFailed,
                  "no free 2-path from " + std::to_string(plus[i]) + " to " + std::to_string(q),
                  {plus[i], q});
    }
    used[mid] = 1;
    result.add({a[i], plus[i], mid, q});
  }

  // The anchor paths must stay clear of Q outside S, of W and of X.
  Mask allowed_q(n, 0);
  mark(allowed_q, s);
  for (const Path& p : result.paths) {
    for (std::size_t j = 1; j + 1 < p.size(); ++j) {
      const Vertex v = p[j];
      if ((on_q[v] && !allowed_q[v]) || in_w[v] || in_x[v]) {
        throw Error(ErrorCode::ConstructionFailed,
                    "anchor path meets a forbidden vertex " + std::to_string(v), {v});
      }
    }
  }
  return result;
}

TerminalPartition partition_terminals(const Digraph& d, std::span<const Vertex> x,
                                      std::span<const Vertex> y, std::span<const Vertex> u) {
  const auto n = d.capacity();
  const int k = static_cast<int>(x.size());
  Mask blocked(n, 0), in_u(n, 0);
  mark(blocked, x);
  mark(blocked, y);
  mark(blocked, u);
  mark(in_u, u);

  auto candidates = [&](Vertex v) {
    VertexList out;
    for (Vertex w : d.out_neighbours(v)) {
      if (!blocked[w] && count_in(d, w, in_u, Direction::Out) >= 2 * k) out.push_back(w);
    }
    return out;
  };

  TerminalPartition part;
  Mask taken(n, 0);
  for (Vertex v : x) {
    VertexList options = candidates(v);
    if (static_cast<int>(options.size()) < k) {
      part.x2.push_back(v);
      continue;
    }
    auto it = std::find_if(options.begin(), options.end(), [&](Vertex w) { return !taken[w]; });
    // |X1| <= k and each member has >= k options, so this never runs dry.
    if (it == options.end()) {
      throw Error(ErrorCode::ConstructionFailed, "matching from X1 ran dry", {v});
    }
    taken[*it] = 1;
    part.x1.push_back(v);
    part.x1_plus.push_back(*it);
  }
  return part;
}

SolveReport solve_semicomplete(const Digraph& d, std::span<const TerminalPair> pairs,
                               const SemicompleteOptions& options) {
  check_terminal_pairs(d, pairs);
  const int k = static_cast<int>(pairs.size());
  const auto n = d.capacity();
  SolveReport report;

  const bool semicomplete = is_semicomplete(d);
  report.audit.push_back({"semicomplete", "true", semicomplete ? "true" : "false", semicomplete});
  const std::size_t min_out = d.min_out_degree();
  bool audit_ok = semicomplete;
  std::string failed_hypothesis = semicomplete ? "" : "semicomplete";
  std::string failed_detail = semicomplete ? "" : "digraph is not semicomplete";
  if (options.audit) {
    const bool strong = is_k_strong(d, 3 * k);
    const std::string bound = std::to_string(3 * k);
    report.audit.push_back({"kappa", ">= " + bound, (strong ? ">= " : "< ") + bound, strong});
    const bool degree = min_out >= static_cast<std::size_t>(22 * k);
    report.audit.push_back(
        {"min_out_degree", ">= " + std::to_string(22 * k), std::to_string(min_out), degree});
    if (audit_ok && !strong) {
      failed_hypothesis = "kappa";
      failed_detail = "kappa < " + bound;
    } else if (audit_ok && !degree) {
      failed_hypothesis = "min_out_degree";
      failed_detail = "min out-degree " + std::to_string(min_out) + " < " + std::to_string(22 * k);
    }
    audit_ok = audit_ok && strong && degree;
  } else {
    report.audit.push_back({"kappa", ">= " + std::to_string(3 * k), "skipped", true, true});
    report.audit.push_back({"min_out_degree", ">= " + std::to_string(22 * k),
                            std::to_string(min_out), min_out >= static_cast<std::size_t>(22 * k),
                            true});
  }

  // Pairs that are arcs need no machinery at all.
  if (std::all_of(pairs.begin(), pairs.end(),
                  [&](const TerminalPair& p) { return d.has_arc(p.source, p.target); })) {
    report.outcome = Outcome::Linked;
    for (const auto& p : pairs) report.paths.add({p.source, p.target});
    report.paths.provenance = "direct";
    return report;
  }
  if (!audit_ok) {
    report.outcome = Outcome::HypothesisViolated;
    report.hypothesis = failed_hypothesis;
    report.detail = failed_detail;
    return report;
  }

  const VertexList x = sources_of(pairs);
  const VertexList y = targets_of(pairs);
  std::string stage = "dominating_set";
  auto failed = [&](const std::string& detail, VertexList witness) {
    report.outcome = Outcome::StageFailed;
    report.stage = stage;
    report.detail = detail;
    report.witness = std::move(witness);
    return report;
  };

  try {
    const VertexList u = nearly_in_dominating_set(d, x, y, static_cast<std::size_t>(3 * k));

    if (min_out >= static_cast<std::size_t>(22 * k)) {
      const long long slack = static_cast<long long>(min_out) - 5LL * k - (k - 1);
      const bool ok = slack >= 16LL * k;
      report.audit.push_back({"out_degree_slack", ">= " + std::to_string(16 * k),
                              std::to_string(slack), ok});
      if (!ok) return failed("out-degree arithmetic guard failed", {});
    }

    stage = "partition";
    const TerminalPartition part = partition_terminals(d, x, y, u);

    stage = "menger";
    VertexList avoid = x;
    avoid.insert(avoid.end(), part.x1_plus.begin(), part.x1_plus.end());
    MengerResult q = min_vertex_menger(d, u, y, avoid);
    if (!q.feasible) return failed("no k disjoint U -> Y paths", q.separator);
    Mask in_u(n, 0);
    mark(in_u, u);
    for (const Path& p : q.paths.paths) {
      for (std::size_t j = 1; j < p.size(); ++j) {
        if (in_u[p[j]]) return failed("minimum system revisits U", {p[j]});
      }
    }
    // Path i of Q ends at y_i; its start is q_i.
    const VertexList ini = q.paths.initial_vertices();

    stage = "two_paths";
    Mask in_ini(n, 0), taken(n, 0);
    mark(in_ini, ini);
    std::vector<Path> first(n);  // x -> x+ -> p for x in X1
    VertexList p_list;
    for (std::size_t i = 0; i < part.x1.size(); ++i) {
      const Vertex xp = part.x1_plus[i];
      Vertex p = -1;
      for (Vertex v : d.out_neighbours(xp)) {
        if (in_u[v] && !in_ini[v] && !taken[v]) {
          p = v;
          break;
        }
      }
      if (p < 0) return failed("no free U-vertex after " + std::to_string(xp), {part.x1[i], xp});
      taken[p] = 1;
      first[part.x1[i]] = {part.x1[i], xp, p};
      p_list.push_back(p);
    }

    std::vector<Vertex> q_of(n, -1);
    for (int i = 0; i < k; ++i) q_of[x[i]] = ini[i];

    AnchorContext context{x, y, u, q.paths};
    AnchorOptions anchor_options;
    anchor_options.check_precondition = options.audit;

    stage = "anchor_sources";
    VertexList s2;
    for (Vertex v : part.x2) s2.push_back(q_of[v]);
    VertexList w2 = part.x1_plus;
    w2.insert(w2.end(), p_list.begin(), p_list.end());
    PathSystem second = anchor_short_paths(d, context, part.x2, s2, w2, anchor_options);

    stage = "anchor_returns";
    VertexList s1;
    for (Vertex v : part.x1) s1.push_back(q_of[v]);
    VertexList w1 = part.x1_plus;
    const VertexList inner = second.interior_vertices();
    w1.insert(w1.end(), inner.begin(), inner.end());
    PathSystem returns = anchor_short_paths(d, context, p_list, s1, w1, anchor_options);

    stage = "concatenate";
    std::vector<Path> to_q(n);
    for (std::size_t i = 0; i < part.x2.size(); ++i) to_q[part.x2[i]] = second.paths[i];
    for (std::size_t i = 0; i < part.x1.size(); ++i) {
      to_q[part.x1[i]] = concatenate(first[part.x1[i]], returns.paths[i]);
    }
    PathSystem linkage;
    for (int i = 0; i < k; ++i) linkage.add(concatenate(to_q[x[i]], q.paths.paths[i]));
    linkage.provenance = "semicomplete";

    stage = "verify";
    VerifyReport check = verify_linkage(d, pairs, linkage);
    if (!check.passed) return failed(check.message, check.vertices);
    report.outcome = Outcome::Linked;
    report.paths = std::move(linkage);
    return report;
  } catch (const Error& e) {
    return failed(e.what(), e.witness());
  }
}

}  // namespace dilink
