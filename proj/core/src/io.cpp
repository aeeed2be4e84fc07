#include "dilink/io.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

#include "dilink/error.hpp"

namespace dilink {

namespace {

[[noreturn]] void format_error(const std::string& message) {
  throw Error(ErrorCode::Format, message);
}

int as_int(const Json& j, const std::string& field) {
  if (!j.is_number_integer()) format_error(field + ": expected an integer");
  const auto value = j.get<long long>();
  if (value < std::numeric_limits<int>::min() || value > std::numeric_limits<int>::max()) {
    format_error(field + ": integer out of range");
  }
  return static_cast<int>(value);
}

VertexList as_list(const Json& j, const std::string& field) {
  if (!j.is_array()) format_error(field + ": expected an array");
  VertexList out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(as_int(j[i], field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

Json pairs_json(std::span<const TerminalPair> pairs) {
  Json out = Json::array();
  for (const auto& p : pairs) out.push_back({p.source, p.target});
  return out;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    format_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                 ": malformed JSON");
  }
}

Json to_json(const Digraph& d, const std::vector<VertexList>& parts, const Json& meta) {
  Json j = meta.is_object() ? meta : Json::object();
  j["n"] = d.capacity();
  Json arcs = Json::array();
  for (const Arc& a : d.arcs()) arcs.push_back({a.tail, a.head});
  j["arcs"] = std::move(arcs);
  if (!parts.empty()) {
    Json ps = Json::array();
    for (const VertexList& p : parts) ps.push_back(p);
    j["parts"] = std::move(ps);
  } else {
    j.erase("parts");
  }
  return j;
}

DigraphDocument digraph_from_json(const Json& j) {
  if (!j.is_object()) format_error("digraph: expected a JSON object");
  if (!j.contains("n")) format_error("n: missing field");
  if (!j.contains("arcs")) format_error("arcs: missing field");
  const int n = as_int(j["n"], "n");
  if (n < 0) format_error("n: must be non-negative");
  const Json& arcs = j["arcs"];
  if (!arcs.is_array()) format_error("arcs: expected an array");
  std::vector<Arc> list;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const std::string field = "arcs[" + std::to_string(i) + "]";
    if (!arcs[i].is_array() || arcs[i].size() != 2) format_error(field + ": expected [u, v]");
    list.push_back({as_int(arcs[i][0], field + "[0]"), as_int(arcs[i][1], field + "[1]")});
  }
  DigraphDocument doc;
  doc.digraph = build_digraph(static_cast<std::size_t>(n), list);
  if (j.contains("parts")) {
    const Json& parts = j["parts"];
    if (!parts.is_array()) format_error("parts: expected an array");
    for (std::size_t i = 0; i < parts.size(); ++i) {
      doc.parts.push_back(as_list(parts[i], "parts[" + std::to_string(i) + "]"));
    }
  }
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key() != "n" && it.key() != "arcs" && it.key() != "parts") doc.meta[it.key()] = it.value();
  }
  return doc;
}

DigraphDocument parse_digraph(const std::string& text) { return digraph_from_json(parse_json(text)); }

Json to_json(const PathSystem& system) {
  Json paths = Json::array();
  for (const Path& p : system.paths) paths.push_back(p);
  Json j{{"paths", std::move(paths)}, {"pairs", pairs_json(system.pairs)}};
  if (!system.provenance.empty()) j["provenance"] = system.provenance;
  return j;
}

PathSystem path_system_from_json(const Json& j) {
  if (!j.is_object()) format_error("path system: expected a JSON object");
  if (!j.contains("paths")) format_error("paths: missing field");
  const Json& paths = j["paths"];
  if (!paths.is_array()) format_error("paths: expected an array");
  PathSystem system;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    system.paths.push_back(as_list(paths[i], "paths[" + std::to_string(i) + "]"));
  }
  if (j.contains("pairs")) {
    const Json& pairs = j["pairs"];
    if (!pairs.is_array()) format_error("pairs: expected an array");
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const std::string field = "pairs[" + std::to_string(i) + "]";
      if (!pairs[i].is_array() || pairs[i].size() != 2) format_error(field + ": expected [s, t]");
      system.pairs.push_back({as_int(pairs[i][0], field + "[0]"), as_int(pairs[i][1], field + "[1]")});
    }
  } else {
    for (const Path& p : system.paths) {
      if (p.empty()) format_error("paths: empty path needs explicit pairs");
      system.pairs.push_back({p.front(), p.back()});
    }
  }
  if (j.contains("provenance") && j["provenance"].is_string()) {
    system.provenance = j["provenance"].get<std::string>();
  }
  return system;
}

PathSystem parse_path_system(const std::string& text) {
  return path_system_from_json(parse_json(text));
}

Json to_json(const SolveReport& report) {
  Json audit = Json::array();
  for (const AuditEntry& e : report.audit) {
    audit.push_back({{"name", e.name},
                     {"requirement", e.requirement},
                     {"observed", e.observed},
                     {"passed", e.passed},
                     {"skipped", e.skipped}});
  }
  Json j{{"outcome", std::string(to_string(report.outcome))}, {"audit", std::move(audit)}};
  if (report.linked()) j["paths"] = to_json(report.paths);
  if (!report.hypothesis.empty()) j["hypothesis"] = report.hypothesis;
  if (!report.stage.empty()) j["stage"] = report.stage;
  if (!report.detail.empty()) j["detail"] = report.detail;
  if (!report.witness.empty()) j["witness"] = report.witness;
  return j;
}

Json to_json(const VerifyReport& report) {
  Json j{{"passed", report.passed}};
  if (!report.passed) {
    j["clause"] = std::string(to_string(report.clause));
    j["path_index"] = report.path_index;
    j["vertices"] = report.vertices;
    j["message"] = report.message;
  }
  return j;
}

Json to_json(const AuxiliaryDigraph& aux) {
  Json arcs = Json::array();
  for (const NewArc& a : aux.new_arcs) {
    Json pool = Json::array();
    for (const Path& p : a.available) pool.push_back(p);
    arcs.push_back({{"arc", {a.arc.tail, a.arc.head}},
                    {"pool_size", a.available.size()},
                    {"available", std::move(pool)}});
  }
  Json terminal = Json::array();
  for (const Arc& a : aux.terminal_arcs) terminal.push_back({a.tail, a.head});
  return {{"new_arcs", std::move(arcs)},
          {"terminal_arcs", std::move(terminal)},
          {"distance_checks", aux.distance_checks},
          {"semicomplete", is_semicomplete(aux.augmented)}};
}

Json to_json(const GoodnessProfile& profile) {
  Json widths = Json::object();
  for (std::size_t v = 0; v < profile.width.size(); ++v) {
    if (profile.width[v] >= 0) widths[std::to_string(v)] = profile.width[v];
  }
  return {{"target", profile.target},
          {"width", std::move(widths)},
          {"dominators", profile.dominators}};
}

Json to_json(const NearlyInDominatingCheck& check) {
  Json j{{"holds", check.holds}};
  if (!check.holds) {
    j["worst_c"] = check.worst_c;
    j["bad_count"] = check.bad_count;
    j["bad"] = check.bad;
  }
  return j;
}

std::vector<TerminalPair> parse_pairs(const std::string& text) {
  std::vector<TerminalPair> pairs;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) format_error("pairs: '" + item + "' is not of the form x:y");
    try {
      std::size_t used_a = 0, used_b = 0;
      const std::string a = item.substr(0, colon), b = item.substr(colon + 1);
      const int x = std::stoi(a, &used_a);
      const int y = std::stoi(b, &used_b);
      if (used_a != a.size() || used_b != b.size()) throw std::invalid_argument(item);
      pairs.push_back({x, y});
    } catch (const std::logic_error&) {
      format_error("pairs: '" + item + "' is not of the form x:y");
    }
  }
  return pairs;
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

std::string to_dot(const Digraph& d, const PathSystem* highlight) {
  std::set<Arc> bold;
  if (highlight) {
    for (const Path& p : highlight->paths) {
      for (std::size_t i = 0; i + 1 < p.size(); ++i) bold.insert({p[i], p[i + 1]});
    }
  }
  std::ostringstream out;
  out << "digraph D {\n";
  for (Vertex v : d.vertices()) out << "  " << v << ";\n";
  for (const Arc& a : d.arcs()) {
    out << "  " << a.tail << " -> " << a.head;
    if (bold.count(a)) out << " [penwidth=3]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace dilink
