#include "dilink/lqt_linkage.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "dilink/connectivity.hpp"
#include "dilink/dominators.hpp"
#include "dilink/error.hpp"
#include "dilink/oracle.hpp"
#include "dilink/semicomplete_linkage.hpp"

namespace dilink {

namespace {

using Mask = std::vector<std::uint8_t>;

std::string arc_name(Vertex a, Vertex b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

// BFS over the live, unremoved part of d; the arc skip_tail -> skip_head is
// ignored when skip_tail >= 0. Returns a shortest path (smallest ids first)
// or nothing.
std::optional<Path> bfs_path(const Digraph& d, const Mask& removed, Vertex s, Vertex t,
                             Vertex skip_tail, Vertex skip_head) {
  std::vector<Vertex> parent(d.capacity(), -2);
  std::vector<Vertex> queue{s};
  parent[s] = -1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex at = queue[head];
    for (Vertex w : d.out_neighbours(at)) {
      if (parent[w] != -2 || removed[w]) continue;
      if (at == skip_tail && w == skip_head) continue;
      parent[w] = at;
      if (w == t) {
        Path path{t};
        for (Vertex p = at; p != -1; p = parent[p]) path.push_back(p);
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(w);
    }
  }
  return std::nullopt;
}

int arcs_of(const std::optional<Path>& p) {
  return p ? static_cast<int>(p->size()) - 1 : -1;
}

// The distance check of independent_short_paths for the current leftover.
void check_return_distance(const std::optional<Path>& there, const std::optional<Path>& back,
                           Vertex u, Vertex v, int l) {
  const int forward = arcs_of(there);
  const int backward = arcs_of(back);
  const bool bad = (forward >= l && (backward < 0 || backward > l + 1)) ||
                   (backward >= l && (forward < 0 || forward > l + 1));
  if (bad) {
    throw Error(ErrorCode::NotLQuasiTransitive,
                "d" + arc_name(u, v) + " = " + std::to_string(forward) + " but d" +
                    arc_name(v, u) + " = " + std::to_string(backward),
                {u, v});
  }
}

void retire(Mask& removed, const Path& p) {
  for (std::size_t i = 1; i + 1 < p.size(); ++i) removed[p[i]] = 1;
}

// All simple paths s -> t of at most max_arcs arcs avoiding `blocked`,
// shortest first, then lexicographic.
std::vector<Path> short_paths(const Digraph& d, Vertex s, Vertex t, int max_arcs,
                              const Mask& blocked) {
  std::vector<Path> out;
  Path current{s};
  Mask on_path(d.capacity(), 0);
  on_path[s] = 1;
  auto extend = [&](auto& self) -> void {
    const Vertex at = current.back();
    if (at == t) {
      out.push_back(current);
      return;
    }
    if (static_cast<int>(current.size()) > max_arcs) return;
    for (Vertex w : d.out_neighbours(at)) {
      if (on_path[w] || (blocked[w] && w != t)) continue;
      current.push_back(w);
      on_path[w] = 1;
      self(self);
      on_path[w] = 0;
      current.pop_back();
    }
  };
  extend(extend);
  std::stable_sort(out.begin(), out.end(),
                   [](const Path& a, const Path& b) { return a.size() < b.size(); });
  return out;
}

bool link_from(const Digraph& d, std::span<const TerminalPair> pairs, std::size_t i, int max_arcs,
               Mask& blocked, std::vector<Path>& chosen) {
  if (i == pairs.size()) return true;
  for (const Path& p : short_paths(d, pairs[i].source, pairs[i].target, max_arcs, blocked)) {
    for (std::size_t j = 1; j + 1 < p.size(); ++j) blocked[p[j]] = 1;
    chosen.push_back(p);
    if (link_from(d, pairs, i + 1, max_arcs, blocked, chosen)) return true;
    chosen.pop_back();
    for (std::size_t j = 1; j + 1 < p.size(); ++j) blocked[p[j]] = 0;
  }
  return false;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::int64_t binomial2(std::int64_t m) { return m * (m - 1) / 2; }

}  // namespace

std::int64_t available_path_threshold(int k, int l) {
  if (k < 1 || l < 2) {
    throw Error(ErrorCode::InvalidArgument, "threshold needs k >= 1 and l >= 2");
  }
  const std::int64_t kk = k, ll = l;
  return binomial2(9 * kk - 6) * (ll + 2) + (2 * ll + 5) * kk + 9 * kk;
}

ShortPathFamily independent_short_paths(const Digraph& d, Vertex u, Vertex v, int l,
                                        std::size_t limit, bool check_distances) {
  if (u == v) throw Error(ErrorCode::SameVertex, "u and v coincide", {u});
  if (!d.contains(u) || !d.contains(v)) {
    throw Error(ErrorCode::VertexOutOfRange, "endpoint not in digraph", {u, v});
  }
  ShortPathFamily family;
  Mask removed(d.capacity(), 0);
  const bool adjacent = d.adjacent(u, v);
  bool forward_arc_used = false, backward_arc_used = false;
  while (family.total() < limit) {
    auto there = bfs_path(d, removed, u, v, forward_arc_used ? u : -1, v);
    auto back = bfs_path(d, removed, v, u, backward_arc_used ? v : -1, u);
    // Deleting vertices keeps the digraph induced, so the distance property
    // must keep holding; with a spent arc it no longer applies.
    if (check_distances && !adjacent) {
      check_return_distance(there, back, u, v, l);
      ++family.distance_checks;
    }
    const int a = arcs_of(there), b = arcs_of(back);
    const bool take_forward = a >= 1 && a <= l + 1 && (b < 1 || b > l + 1 || a <= b);
    const bool take_backward = !take_forward && b >= 1 && b <= l + 1;
    if (take_forward) {
      if (a == 1) forward_arc_used = true;
      retire(removed, *there);
      family.forward.push_back(std::move(*there));
    } else if (take_backward) {
      if (b == 1) backward_arc_used = true;
      retire(removed, *back);
      family.backward.push_back(std::move(*back));
    } else {
      break;
    }
  }
  return family;
}

std::vector<Path> independent_short_paths_one_way(const Digraph& d, Vertex u, Vertex v, int l,
                                                  std::size_t limit) {
  if (u == v) throw Error(ErrorCode::SameVertex, "u and v coincide", {u});
  std::vector<Path> out;
  Mask removed(d.capacity(), 0);
  bool arc_used = false;
  while (out.size() < limit) {
    auto p = bfs_path(d, removed, u, v, arc_used ? u : -1, v);
    const int a = arcs_of(p);
    if (a < 1 || a > l + 1) break;
    if (a == 1) arc_used = true;
    retire(removed, *p);
    out.push_back(std::move(*p));
  }
  return out;
}

const NewArc* AuxiliaryDigraph::find(Vertex tail, Vertex head) const {
  const Arc key{tail, head};
  auto it = std::lower_bound(new_arcs.begin(), new_arcs.end(), key,
                             [](const NewArc& a, const Arc& b) { return a.arc < b; });
  return it != new_arcs.end() && it->arc == key ? &*it : nullptr;
}

AuxiliaryDigraph build_auxiliary(const Digraph& d, std::span<const Vertex> x,
                                 std::span<const Vertex> y, int l, std::int64_t threshold) {
  if (l < 2) throw Error(ErrorCode::InvalidArgument, "l must be at least 2");
  if (threshold < 1) throw Error(ErrorCode::InvalidArgument, "threshold must be positive");
  if (!is_strong(d)) throw Error(ErrorCode::NotStrong, "input digraph is not strong");

  VertexList terminals(x.begin(), x.end());
  terminals.insert(terminals.end(), y.begin(), y.end());
  const Digraph d0 = remove_vertices(d, terminals);
  const auto need = static_cast<std::size_t>(threshold);

  AuxiliaryDigraph aux;
  DigraphBuilder b(d);
  const VertexList vs = d0.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      const Vertex u = vs[i], v = vs[j];
      if (d0.adjacent(u, v)) continue;
      ShortPathFamily family = independent_short_paths(d0, u, v, l, 2 * need, true);
      aux.distance_checks += family.distance_checks;
      NewArc added;
      if (family.forward.size() >= need && family.forward.size() >= family.backward.size()) {
        added = {{u, v}, std::move(family.forward)};
      } else if (family.backward.size() >= need) {
        added = {{v, u}, std::move(family.backward)};
      } else {
        // Mixed extraction can split the pool; try each direction alone.
        auto there = independent_short_paths_one_way(d0, u, v, l, 2 * need);
        auto back = independent_short_paths_one_way(d0, v, u, l, 2 * need);
        if (there.size() >= need && there.size() >= back.size()) {
          added = {{u, v}, std::move(there)};
        } else if (back.size() >= need) {
          added = {{v, u}, std::move(back)};
        } else {
          throw Error(ErrorCode::ThresholdUnreachable,
                      "pair " + arc_name(u, v) + ": " + std::to_string(there.size()) +
                          " forward and " + std::to_string(back.size()) +
                          " backward independent short paths, need " + std::to_string(need),
                      {u, v});
        }
      }
      b.add_arc(added.arc.tail, added.arc.head);
      aux.new_arcs.push_back(std::move(added));
    }
  }
  std::sort(aux.new_arcs.begin(), aux.new_arcs.end(),
            [](const NewArc& a, const NewArc& c) { return a.arc < c.arc; });

  // Revalidate every pool against D.
  const Mask is_terminal = vertex_mask(d.capacity(), terminals);
  for (const NewArc& arc : aux.new_arcs) {
    Mask seen(d.capacity(), 0);
    for (const Path& p : arc.available) {
      bool ok = p.size() >= 2 && p.size() <= static_cast<std::size_t>(l) + 2 &&
                p.front() == arc.arc.tail && p.back() == arc.arc.head;
      for (std::size_t t = 0; ok && t + 1 < p.size(); ++t) ok = d.has_arc(p[t], p[t + 1]);
      for (std::size_t t = 1; ok && t + 1 < p.size(); ++t) {
        ok = !seen[p[t]] && !is_terminal[p[t]];
        seen[p[t]] = 1;
      }
      if (!ok) {
        throw Error(ErrorCode::ConstructionFailed,
                    "invalid available path for " + arc_name(arc.arc.tail, arc.arc.head),
                    {arc.arc.tail, arc.arc.head});
      }
    }
  }

  for (Vertex t : x) {
    for (Vertex w : d.vertices()) {
      if (w != t && b.ensure_arc(w, t)) aux.terminal_arcs.push_back({w, t});
    }
  }
  for (Vertex t : y) {
    for (Vertex w : d.vertices()) {
      if (w != t && b.ensure_arc(t, w)) aux.terminal_arcs.push_back({t, w});
    }
  }
  std::sort(aux.terminal_arcs.begin(), aux.terminal_arcs.end());
  aux.augmented = b.build();
  if (!is_semicomplete(aux.augmented)) {
    throw Error(ErrorCode::ConstructionFailed, "auxiliary digraph is not semicomplete");
  }
  return aux;
}

std::optional<PathSystem> short_linkage(const Digraph& d, std::span<const TerminalPair> pairs,
                                        int max_arcs) {
  Mask blocked(d.capacity(), 0);
  for (const auto& p : pairs) {
    if (!d.contains(p.source) || !d.contains(p.target)) return std::nullopt;
    blocked[p.source] = blocked[p.target] = 1;
  }
  std::vector<Path> chosen;
  if (!link_from(d, pairs, 0, max_arcs, blocked, chosen)) return std::nullopt;
  PathSystem system;
  for (Path& p : chosen) system.add(std::move(p));
  system.provenance = "short-linkage";
  return system;
}

bool verify_short_anchor(const Digraph& t, std::span<const Vertex> u1,
                         std::span<const Vertex> u2) {
  if (u1.size() != u2.size()) throw Error(ErrorCode::SizeMismatch, "|U1| differs from |U2|");
  Mask seen(t.capacity(), 0);
  for (auto set : {u1, u2}) {
    for (Vertex v : set) {
      if (!t.contains(v)) throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v), {v});
      if (seen[v]) throw Error(ErrorCode::SetOverlap, "vertex " + std::to_string(v) + " repeats", {v});
      seen[v] = 1;
    }
  }
  VertexList targets(u2.begin(), u2.end());
  std::sort(targets.begin(), targets.end());
  do {
    std::vector<TerminalPair> pairs;
    for (std::size_t i = 0; i < u1.size(); ++i) pairs.push_back({u1[i], targets[i]});
    if (!short_linkage(t, pairs, 3)) return false;
  } while (std::next_permutation(targets.begin(), targets.end()));
  return true;
}

AnchorSearchResult find_short_anchor_pair(const Digraph& t, int k,
                                          const AnchorSearchOptions& options) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be positive");
  const VertexList vs = t.vertices();
  const std::size_t n = vs.size();
  if (static_cast<long long>(n) < 9LL * k - 6 && !options.allow_small) {
    throw Error(ErrorCode::PreconditionViolated,
                "|T| = " + std::to_string(n) + " < 9k-6 = " + std::to_string(9 * k - 6));
  }
  AnchorSearchResult result;
  const auto kk = static_cast<std::size_t>(k);
  if (n < 2 * kk) return result;

  auto attempt = [&](const VertexList& a, const VertexList& b) {
    ++result.examined;
    if (verify_short_anchor(t, a, b)) result.pair = AnchorPair{a, b};
    return result.pair.has_value();
  };

  // Strong senders against strong receivers.
  VertexList by_out = vs;
  std::stable_sort(by_out.begin(), by_out.end(),
                   [&](Vertex a, Vertex b) { return t.out_degree(a) > t.out_degree(b); });
  VertexList u1(by_out.begin(), by_out.begin() + static_cast<std::ptrdiff_t>(kk));
  VertexList rest;
  for (Vertex v : vs) {
    if (std::find(u1.begin(), u1.end(), v) == u1.end()) rest.push_back(v);
  }
  std::stable_sort(rest.begin(), rest.end(),
                   [&](Vertex a, Vertex b) { return t.in_degree(a) > t.in_degree(b); });
  VertexList u2(rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(kk));
  if (attempt(u1, u2)) return result;

  std::vector<std::size_t> first(kk);
  std::iota(first.begin(), first.end(), 0);
  do {
    VertexList a;
    for (std::size_t i : first) a.push_back(vs[i]);
    VertexList others;
    for (Vertex v : vs) {
      if (std::find(a.begin(), a.end(), v) == a.end()) others.push_back(v);
    }
    std::vector<std::size_t> second(kk);
    std::iota(second.begin(), second.end(), 0);
    do {
      if (result.examined >= options.budget) {
        result.budget_exceeded = true;
        return result;
      }
      VertexList b;
      for (std::size_t i : second) b.push_back(others[i]);
      if (attempt(a, b)) return result;
    } while (next_combination(second, others.size()));
  } while (next_combination(first, n));
  return result;
}

SolveReport solve_lqt(const Digraph& d, std::span<const TerminalPair> pairs, int l,
                      const LqtOptions& options) {
  check_terminal_pairs(d, pairs);
  if (l < 2) throw Error(ErrorCode::InvalidArgument, "l must be at least 2");
  const int k = static_cast<int>(pairs.size());
  const auto n = d.capacity();
  SolveReport report;
  auto violated = [&](const std::string& hypothesis, const std::string& detail,
                      VertexList witness) {
    report.outcome = Outcome::HypothesisViolated;
    report.hypothesis = hypothesis;
    report.detail = detail;
    report.witness = std::move(witness);
    return report;
  };
  std::string stage = "audit";
  auto failed = [&](const std::string& detail, VertexList witness) {
    report.outcome = Outcome::StageFailed;
    report.stage = stage;
    report.detail = detail;
    report.witness = std::move(witness);
    return report;
  };

  if (k == 0) {
    report.outcome = Outcome::Linked;
    return report;
  }

  const bool strong = is_strong(d);
  report.audit.push_back({"strong", "true", strong ? "true" : "false", strong});
  if (!strong) return violated("strong", "NotStrong: the digraph is not strong", {});
  if (options.audit) {
    auto bad = l_quasi_transitivity_violation(d, l);
    report.audit.push_back({"l_quasi_transitive", "l = " + std::to_string(l),
                            bad ? "violated" : "true", !bad});
    if (bad) {
      return violated("l_quasi_transitive",
                      "path of length " + std::to_string(l) + " joins non-adjacent " +
                          arc_name(bad->tail, bad->head),
                      {bad->tail, bad->head});
    }
  } else {
    report.audit.push_back({"l_quasi_transitive", "l = " + std::to_string(l), "skipped", true, true});
  }
  const std::int64_t f = available_path_threshold(k, l);
  const std::int64_t kappa_bound = 81LL * k * k * (l + 2) * (l + 2);
  const bool meets_bound = is_k_strong(d, static_cast<int>(std::min<std::int64_t>(kappa_bound, n + 1)));
  report.audit.push_back({"kappa", ">= " + std::to_string(kappa_bound) + " (recorded only)",
                          (meets_bound ? ">= " : "< ") + std::to_string(kappa_bound),
                          meets_bound, !meets_bound});
  const std::int64_t slack = kappa_bound - 2LL * k - 2 * f * (l + 2);
  report.audit.push_back({"threshold_slack", "> 0", std::to_string(slack), slack > 0});
  if (slack <= 0) return failed("connectivity bound does not cover the threshold", {});

  const std::int64_t threshold = options.threshold > 0 ? options.threshold : f;
  report.audit.push_back({"threshold", std::to_string(f), std::to_string(threshold), true,
                          threshold != f});

  const VertexList x = sources_of(pairs);
  const VertexList y = targets_of(pairs);
  try {
    stage = "auxiliary";
    AuxiliaryDigraph aux;
    try {
      aux = build_auxiliary(d, x, y, l, threshold);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::NotLQuasiTransitive) {
        return violated("l_quasi_transitive", e.what(), e.witness());
      }
      throw;
    }
    const Digraph& dp = aux.augmented;
    report.audit.push_back({"new_arcs", "", std::to_string(aux.new_arcs.size()), true});

    stage = "dominating_set";
    const auto m = static_cast<std::size_t>(9 * k - 6);
    const VertexList u = nearly_in_dominating_set(dp, x, y, m);
    const Digraph t_u = spanning_tournament(induced(dp, u));

    stage = "anchor_pair";
    AnchorSearchOptions search;
    search.budget = options.anchor_budget;
    search.allow_small = true;
    AnchorSearchResult anchors = find_short_anchor_pair(t_u, k, search);
    if (!anchors.pair) {
      return failed(anchors.budget_exceeded ? "search budget exhausted" : "no anchoring pair in U",
                    u);
    }
    const VertexList& u1 = anchors.pair->u1;
    const VertexList& u2 = anchors.pair->u2;

    Mask reserved(n, 0);
    for (auto set : {std::span<const Vertex>(u), std::span<const Vertex>(x),
                     std::span<const Vertex>(y)}) {
      for (Vertex v : set) reserved[v] = 1;
    }

    // Replaces a new arc by a pool path avoiding everything reserved so far.
    auto replace = [&](Vertex a, Vertex b, Path& out) -> bool {
      const NewArc* arc = aux.find(a, b);
      if (!arc) return false;
      for (const Path& p : arc->available) {
        bool free = true;
        for (std::size_t j = 1; free && j + 1 < p.size(); ++j) free = !reserved[p[j]];
        if (!free) continue;
        for (std::size_t j = 1; j + 1 < p.size(); ++j) reserved[p[j]] = 1;
        out = p;
        return true;
      }
      throw Error(ErrorCode::ConstructionFailed,
                  "AvailablePathExhausted: no free available path for new arc " + arc_name(a, b),
                  {a, b});
    };
    auto realize = [&](const Path& planned) {
      Path real{planned.front()};
      for (std::size_t j = 0; j + 1 < planned.size(); ++j) {
        const Vertex a = planned[j], b = planned[j + 1];
        Path piece;
        if (d.has_arc(a, b)) {
          piece = {a, b};
        } else if (!replace(a, b, piece)) {
          throw Error(ErrorCode::ConstructionFailed, "arc " + arc_name(a, b) + " is neither in D nor new",
                      {a, b});
        }
        real = concatenate(real, piece);
      }
      return real;
    };

    stage = "sources";
    DigraphBuilder trim(dp);
    for (Vertex v : x) trim.remove_vertex(v);
    for (Vertex v : y) trim.remove_vertex(v);
    const Digraph dp0 = trim.build();
    const int good = 11 * k;
    VertexList plus(k, -1);
    for (int i = 0; i < k; ++i) {
      const Vertex target = u1[i];
      int best_rank = 4;
      for (Vertex v : d.out_neighbours(x[i])) {
        if (reserved[v]) continue;
        const int rank = d.has_arc(v, target)                  ? 0
                         : dp.has_arc(v, target)               ? 1
                         : two_path_width(dp0, v, target) >= good ? 2
                                                                  : 3;
        if (rank < best_rank) {
          best_rank = rank;
          plus[i] = v;
        }
        if (rank == 0) break;
      }
      if (plus[i] < 0) return failed("no free out-neighbour of " + std::to_string(x[i]), {x[i]});
      reserved[plus[i]] = 1;
    }
    std::vector<Path> planned(k);
    for (int i = 0; i < k; ++i) {
      const Vertex target = u1[i];
      if (dp.has_arc(plus[i], target)) {
        planned[i] = {x[i], plus[i], target};
        continue;
      }
      Vertex mid = -1;
      int best = 3;
      for (Vertex v : dp0.out_neighbours(plus[i])) {
        if (reserved[v] || !dp0.has_arc(v, target)) continue;
        const int fresh = !d.has_arc(plus[i], v) + !d.has_arc(v, target);
        if (fresh < best) {
          best = fresh;
          mid = v;
        }
        if (fresh == 0) break;
      }
      if (mid < 0) return failed("no free 2-path into U1", {plus[i], target});
      reserved[mid] = 1;
      planned[i] = {x[i], plus[i], mid, target};
    }
    std::vector<Path> head(k);
    for (int i = 0; i < k; ++i) {
      head[i] = realize(planned[i]);
      if (head[i].size() > static_cast<std::size_t>(2 * l + 5)) {
        return failed("source path longer than 2l+5 vertices", head[i]);
      }
    }

    stage = "reserve_anchor_arcs";
    std::map<Arc, Path> inside;
    for (const Arc& a : t_u.arcs()) {
      if (d.has_arc(a.tail, a.head)) continue;
      Path piece;
      if (!replace(a.tail, a.head, piece)) {
        return failed("arc " + arc_name(a.tail, a.head) + " of U is neither in D nor new",
                      {a.tail, a.head});
      }
      inside[a] = std::move(piece);
    }
    std::size_t reserved_inside = u.size();
    for (const auto& [arc, piece] : inside) reserved_inside += piece.size() - 2;
    const std::int64_t inside_bound = binomial2(9LL * k - 6) * (l + 2);
    report.audit.push_back({"reserved_in_u", "<= " + std::to_string(inside_bound),
                            std::to_string(reserved_inside),
                            static_cast<std::int64_t>(reserved_inside) <= inside_bound});
    if (static_cast<std::int64_t>(reserved_inside) > inside_bound) {
      return failed("U* ∪ U exceeds its budget", {});
    }

    stage = "targets";
    VertexList avoid;
    const Mask in_u2 = vertex_mask(n, u2);
    const Mask in_y = vertex_mask(n, y);
    for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
      if (reserved[v] && !in_u2[v] && !in_y[v]) avoid.push_back(v);
    }
    const bool rest_strong = is_k_strong(remove_vertices(d, avoid), k);
    report.audit.push_back({"rest_k_strong", ">= " + std::to_string(k),
                            rest_strong ? "true" : "false", rest_strong, !rest_strong});
    MengerResult r = menger_set_paths(d, u2, y, avoid);
    if (!r.feasible) return failed("no disjoint U2 -> Y paths outside B", r.separator);
    std::vector<Path> tail(n);
    for (const Path& p : r.paths.paths) tail[p.back()] = p;

    stage = "anchor_linkage";
    std::vector<TerminalPair> middle_pairs;
    for (int i = 0; i < k; ++i) middle_pairs.push_back({u1[i], tail[y[i]].front()});
    auto middle = short_linkage(t_u, middle_pairs, 3);
    if (!middle) return failed("U1 does not short anchor U2 for this matching", u1);

    stage = "concatenate";
    PathSystem linkage;
    for (int i = 0; i < k; ++i) {
      Path through{middle->paths[i].front()};
      const Path& planned_mid = middle->paths[i];
      for (std::size_t j = 0; j + 1 < planned_mid.size(); ++j) {
        const Arc a{planned_mid[j], planned_mid[j + 1]};
        auto it = inside.find(a);
        through = concatenate(through, it == inside.end() ? Path{a.tail, a.head} : it->second);
      }
      linkage.add(concatenate(concatenate(head[i], through), tail[y[i]]));
    }
    linkage.provenance = "lqt";

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
