#include "hasse/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hasse/oracle.hpp"

namespace hasse {
namespace {

using nlohmann::json;

// 1-based line/column of a byte offset, for parse diagnostics.
std::pair<std::size_t, std::size_t> line_of(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

std::string quote(const std::string& s) { return json(s).dump(); }

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  // A trailing newline yields one empty tail segment; drop it.
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

std::size_t parse_count(const std::string& line, std::size_t line_no, const char* what) {
  if (line.empty() || !std::all_of(line.begin(), line.end(),
                                   [](unsigned char c) { return std::isdigit(c); })) {
    throw SyntaxError(std::string("expected ") + what + " count, got \"" + line + "\"", line_no);
  }
  return std::stoull(line);
}

std::vector<std::pair<std::string, std::string>> sorted_name_edges(const Diagram& h,
                                                                   const Lattice& l) {
  std::vector<std::pair<std::string, std::string>> edges;
  edges.reserve(h.edge_count());
  for (Element lower = 0; lower < h.node_count(); ++lower) {
    for (Element upper : h.upper_covers(lower)) {
      edges.emplace_back(l.name(lower), l.name(upper));
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace

OrderRelation parse_lattice_relation(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_of(text, e.byte > 0 ? e.byte - 1 : 0);
    throw SyntaxError(e.what(), line, col);
  }
  if (!doc.is_object()) throw SyntaxError("top level must be an object");
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (key != "elements" && key != "order" && key != "pairs") {
      throw SyntaxError("unknown key \"" + key + "\"");
    }
  }
  if (!doc.contains("elements") || !doc["elements"].is_array()) {
    throw SyntaxError("missing \"elements\" array");
  }
  if (!doc.contains("order") || !doc["order"].is_string()) {
    throw SyntaxError("missing \"order\" string");
  }
  if (!doc.contains("pairs") || !doc["pairs"].is_array()) {
    throw SyntaxError("missing \"pairs\" array");
  }

  std::vector<std::string> names;
  for (const auto& e : doc["elements"]) {
    if (!e.is_string()) throw SyntaxError("element names must be strings");
    names.push_back(e.get<std::string>());
  }
  const std::string order = doc["order"].get<std::string>();
  RelationKind kind;
  if (order == "covers") {
    kind = RelationKind::covers;
  } else if (order == "leq") {
    kind = RelationKind::leq;
  } else {
    throw SyntaxError("\"order\" must be \"covers\" or \"leq\", got \"" + order + "\"");
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& p : doc["pairs"]) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string()) {
      throw SyntaxError("pairs must be [lower, upper] name arrays");
    }
    pairs.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
  }
  return make_relation(std::move(names), pairs, kind);
}

std::shared_ptr<ExplicitLattice> parse_lattice_json(const std::string& text) {
  return ExplicitLattice::build(parse_lattice_relation(text));
}

std::string emit_lattice_json(const Lattice& l) {
  Diagram h = oracle_hasse(l);
  auto edges = sorted_name_edges(h, l);
  std::ostringstream os;
  os << "{\n  \"elements\": [";
  for (Element x = 0; x < l.size(); ++x) {
    if (x > 0) os << ", ";
    os << quote(l.name(x));
  }
  os << "],\n  \"order\": \"covers\",\n  \"pairs\": [";
  if (edges.empty()) {
    os << "]\n}\n";
    return os.str();
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    os << (i == 0 ? "\n" : ",\n");
    os << "    [" << quote(edges[i].first) << ", " << quote(edges[i].second) << "]";
  }
  os << "\n  ]\n}\n";
  return os.str();
}

FormalContext parse_cxt(const std::string& text) {
  if (text.find('\r') != std::string::npos) {
    throw SyntaxError("carriage returns are not part of the CXT format");
  }
  std::vector<std::string> lines = split_lines(text);
  std::size_t at = 0;
  auto need = [&](const char* what) -> const std::string& {
    if (at >= lines.size()) throw SyntaxError(std::string("unexpected end of file, expected ") + what,
                                              lines.size() + 1);
    return lines[at++];
  };
  if (need("header \"B\"") != "B") throw SyntaxError("first line must be \"B\"", 1);
  if (!need("blank line").empty()) throw SyntaxError("second line must be blank", 2);
  std::size_t object_count = parse_count(need("object"), 3, "object");
  std::size_t attribute_count = parse_count(need("attribute"), 4, "attribute");
  if (attribute_count > 63) throw ParameterTooLarge("CXT attribute count above 63");
  if (!need("blank line").empty()) throw SyntaxError("line before the names must be blank", 5);

  FormalContext ctx;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < object_count; ++i) {
    const std::string& name = need("object name");
    if (!seen.insert(name).second) throw SyntaxError("duplicate object name: " + name, at);
    ctx.objects.push_back(name);
  }
  seen.clear();
  for (std::size_t i = 0; i < attribute_count; ++i) {
    const std::string& name = need("attribute name");
    if (!seen.insert(name).second) throw SyntaxError("duplicate attribute name: " + name, at);
    ctx.attributes.push_back(name);
  }
  for (std::size_t i = 0; i < object_count; ++i) {
    const std::string& row = need("incidence row");
    if (row.size() != attribute_count) {
      throw SyntaxError("incidence row length differs from the attribute count", at);
    }
    AttrMask mask = 0;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] == 'X') {
        mask |= AttrMask{1} << j;
      } else if (row[j] != '.') {
        throw SyntaxError("incidence rows may only contain '.' and 'X'", at, j + 1);
      }
    }
    ctx.rows.push_back(mask);
  }
  if (at != lines.size()) throw SyntaxError("trailing content after the incidence rows", at + 1);
  return ctx;
}

std::string emit_cxt(const FormalContext& ctx) {
  std::ostringstream os;
  os << "B\n\n" << ctx.objects.size() << "\n" << ctx.attributes.size() << "\n\n";
  for (const auto& name : ctx.objects) os << name << "\n";
  for (const auto& name : ctx.attributes) os << name << "\n";
  for (AttrMask row : ctx.rows) {
    for (std::size_t j = 0; j < ctx.attributes.size(); ++j) {
      os << ((row & (AttrMask{1} << j)) != 0 ? 'X' : '.');
    }
    os << "\n";
  }
  return os.str();
}

FormalContext parse_transactions(const std::string& text) {
  std::vector<std::string> lines = split_lines(text);
  std::vector<std::vector<std::string>> transactions;
  std::set<std::string> items;
  for (const auto& line : lines) {
    std::istringstream is(line);
    std::vector<std::string> tokens;
    std::string token;
    while (is >> token) {
      items.insert(token);
      tokens.push_back(std::move(token));
    }
    transactions.push_back(std::move(tokens));
  }
  if (items.size() > 63) throw ParameterTooLarge("transaction item universe above 63");

  FormalContext ctx;
  ctx.attributes.assign(items.begin(), items.end());
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < ctx.attributes.size(); ++i) index[ctx.attributes[i]] = i;
  for (std::size_t t = 0; t < transactions.size(); ++t) {
    ctx.objects.push_back(std::to_string(t + 1));
    AttrMask mask = 0;
    for (const auto& token : transactions[t]) mask |= AttrMask{1} << index[token];
    ctx.rows.push_back(mask);
  }
  return ctx;
}

std::string emit_dot(const Diagram& h, const Lattice& l) {
  std::ostringstream os;
  os << "digraph hasse {\n";
  for (const auto& [lower, upper] : sorted_name_edges(h, l)) {
    os << quote(lower) << " -> " << quote(upper) << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string emit_edges_json(const Diagram& h, const Lattice& l) {
  auto edges = sorted_name_edges(h, l);
  if (edges.empty()) return "[]\n";
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    os << (i == 0 ? "\n" : ",\n");
    os << "  [" << quote(edges[i].first) << ", " << quote(edges[i].second) << "]";
  }
  os << "\n]\n";
  return os.str();
}

namespace {

std::string name_set(std::span<const Element> elements, const Lattice& l) {
  std::vector<std::string> names;
  names.reserve(elements.size());
  for (Element e : elements) names.push_back(l.name(e));
  std::sort(names.begin(), names.end());
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i > 0) out += ",";
    out += names[i];
  }
  out += "}";
  return out;
}

std::string emit_trace_impl(std::span<const TraceRecord> records, const Lattice& l,
                            const Lattice* codomain) {
  std::ostringstream os;
  for (const auto& rec : records) {
    os << "x=" << l.name(rec.x);
    os << " | B=" << name_set(rec.border, l);
    os << " | cand=" << name_set(rec.candidates, l);
    std::vector<std::pair<std::string, std::string>> added;
    for (const Edge& e : rec.edges_added) added.emplace_back(l.name(e.lower), l.name(e.upper));
    std::sort(added.begin(), added.end());
    os << " | add={";
    for (std::size_t i = 0; i < added.size(); ++i) {
      if (i > 0) os << ",";
      os << "(" << added[i].first << "," << added[i].second << ")";
    }
    os << "}";
    if (!rec.lc.empty() && codomain != nullptr) {
      os << " | LC:";
      for (Element e = 0; e < l.size(); ++e) {
        os << " " << l.name(e) << "=";
        if (rec.lc[e].has_value()) {
          os << codomain->name(*rec.lc[e]);
        } else {
          os << "-";
        }
      }
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace

std::string emit_trace(std::span<const TraceRecord> records, const Lattice& l,
                       const Lattice& codomain) {
  return emit_trace_impl(records, l, &codomain);
}

std::string emit_trace(std::span<const TraceRecord> records, const Lattice& l) {
  return emit_trace_impl(records, l, nullptr);
}

namespace {

void stats_object(std::ostringstream& os, const RunStats& stats, const std::string& pad) {
  char wall[32];
  std::snprintf(wall, sizeof(wall), "%.3f", stats.wall_ms);
  os << pad << "{\n";
  os << pad << "  \"algo\": " << quote(stats.algo) << ",\n";
  os << pad << "  \"n\": " << stats.n << ",\n";
  os << pad << "  \"width\": " << stats.width << ",\n";
  os << pad << "  \"edges\": " << stats.edges << ",\n";
  os << pad << "  \"max_border\": " << stats.max_border << ",\n";
  os << pad << "  \"counters\": {\n";
  os << pad << "    \"leq\": " << stats.counters.leq_calls << ",\n";
  os << pad << "    \"join\": " << stats.counters.join_calls << ",\n";
  os << pad << "    \"meet\": " << stats.counters.meet_calls << ",\n";
  os << pad << "    \"f\": " << stats.counters.f_calls << "\n";
  os << pad << "  },\n";
  os << pad << "  \"wall_ms\": " << wall << "\n";
  os << pad << "}";
}

}  // namespace

std::string emit_stats(const RunStats& stats) {
  std::ostringstream os;
  stats_object(os, stats, "");
  os << "\n";
  return os.str();
}

std::string emit_bench_stats(const std::string& suite, std::size_t repeat,
                             std::span<const RunStats> runs) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"suite\": " << quote(suite) << ",\n";
  os << "  \"repeat\": " << repeat << ",\n";
  os << "  \"runs\": [";
  for (std::size_t i = 0; i < runs.size(); ++i) {
    os << (i == 0 ? "\n" : ",\n");
    stats_object(os, runs[i], "    ");
  }
  os << (runs.empty() ? "]" : "\n  ]") << "\n}\n";
  return os.str();
}

}  // namespace hasse
