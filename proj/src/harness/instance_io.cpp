#include "fwdarc/harness/instance_io.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include <json.hpp>

namespace fwdarc::harness {
namespace {

using nlohmann::json;

std::vector<std::string_view> tokens(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long to_int(std::string_view tok, int line, const char* what) {
  long long v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size()) {
    throw ParseError(line, std::string("expected integer ") + what + ", got '" + std::string(tok) + "'");
  }
  return v;
}

Vertex vertex_id(long long v, int n, int line) {
  if (v < 0 || v >= n) {
    throw ParseError(line, "vertex " + std::to_string(v) + " out of range [0, " + std::to_string(n) + ")");
  }
  return static_cast<Vertex>(v);
}

// The annotation must be a partition whose parts are exactly the maximal
// independent classes: no arc inside a part, every cross-part pair adjacent.
void check_parts(const std::vector<VertexSeq>& parts, const std::vector<int>& lines, const Digraph& d) {
  const int n = d.order();
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].empty()) throw ParseError(lines[i], "empty part");
    for (Vertex v : parts[i]) {
      if (seen[static_cast<std::size_t>(v)] != 0) {
        throw ParseError(lines[i], "vertex " + std::to_string(v) + " appears in more than one part");
      }
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (seen[static_cast<std::size_t>(v)] == 0) {
      throw ParseError(lines.empty() ? 0 : lines.back(), "vertex " + std::to_string(v) + " belongs to no part");
    }
  }
  std::vector<std::size_t> part_of(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (Vertex v : parts[i]) part_of[static_cast<std::size_t>(v)] = i;
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const std::size_t pu = part_of[static_cast<std::size_t>(u)], pv = part_of[static_cast<std::size_t>(v)];
      const std::string pair = "pair (" + std::to_string(u) + "," + std::to_string(v) + ")";
      if (pu == pv && d.adjacent(u, v)) throw ParseError(lines[pu], pair + " is adjacent inside one part");
      if (pu != pv && !d.adjacent(u, v)) {
        throw ParseError(lines[std::max(pu, pv)], pair + " spans two parts but is nonadjacent");
      }
    }
  }
}

void add_arc(std::vector<Arc>& arcs, std::set<Arc>& seen, Arc a, int line, const std::string& where,
             std::vector<std::string>& warnings) {
  if (a.tail == a.head) throw ParseError(line, where + "self-loop at vertex " + std::to_string(a.tail));
  if (!seen.insert(a).second) {
    warnings.push_back((line > 0 ? "line " + std::to_string(line) + ": " : std::string()) + where +
                       "duplicate arc " + to_string(a) + " ignored");
    return;
  }
  arcs.push_back(a);
}

Instance parse_text(std::string_view text) {
  Instance inst;
  std::optional<int> n;
  long long m = 0;
  std::vector<Arc> arcs;
  std::set<Arc> seen;
  long long arc_lines = 0;
  std::vector<VertexSeq> parts;
  std::vector<int> part_lines;
  int line_no = 0;
  int last_line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto tok = tokens(line);
    if (tok.empty()) {
      if (end == text.size()) break;
      continue;
    }
    last_line = line_no;
    if (!n) {
      if (tok.size() != 2) throw ParseError(line_no, "header must be 'n m'");
      const long long nv = to_int(tok[0], line_no, "vertex count");
      m = to_int(tok[1], line_no, "arc count");
      if (nv < 0 || nv > 1'000'000) throw ParseError(line_no, "vertex count out of range");
      if (m < 0) throw ParseError(line_no, "arc count must be non-negative");
      n = static_cast<int>(nv);
      continue;
    }
    if (tok[0] == "part") {
      VertexSeq part;
      for (std::size_t i = 1; i < tok.size(); ++i) part.push_back(vertex_id(to_int(tok[i], line_no, "vertex"), *n, line_no));
      parts.push_back(std::move(part));
      part_lines.push_back(line_no);
      continue;
    }
    if (tok.size() != 2) throw ParseError(line_no, "arc line must be 'u v'");
    if (!parts.empty()) throw ParseError(line_no, "arc line after part lines");
    if (arc_lines == m) throw ParseError(line_no, "more than the declared " + std::to_string(m) + " arcs");
    ++arc_lines;
    const Arc a{vertex_id(to_int(tok[0], line_no, "tail"), *n, line_no),
                vertex_id(to_int(tok[1], line_no, "head"), *n, line_no)};
    add_arc(arcs, seen, a, line_no, "", inst.warnings);
  }
  if (!n) throw ParseError(line_no, "missing header 'n m'");
  if (arc_lines != m) {
    throw ParseError(last_line, "expected " + std::to_string(m) + " arcs, found " + std::to_string(arc_lines));
  }
  inst.graph = Digraph::build(*n, arcs);
  if (!parts.empty()) {
    check_parts(parts, part_lines, inst.graph);
    inst.parts = std::move(parts);
  }
  return inst;
}

Instance parse_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(0, e.what());
  }
  if (!doc.is_object()) throw ParseError(0, "instance must be a JSON object");
  if (!doc.contains("n") || !doc["n"].is_number_integer()) throw ParseError(0, "field 'n' must be an integer");
  const long long nv = doc["n"].get<long long>();
  if (nv < 0 || nv > 1'000'000) throw ParseError(0, "field 'n' out of range");
  const int n = static_cast<int>(nv);
  Instance inst;
  std::vector<Arc> arcs;
  std::set<Arc> seen;
  if (doc.contains("arcs")) {
    if (!doc["arcs"].is_array()) throw ParseError(0, "field 'arcs' must be an array");
    for (std::size_t i = 0; i < doc["arcs"].size(); ++i) {
      const json& a = doc["arcs"][i];
      const std::string where = "arcs[" + std::to_string(i) + "]: ";
      if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() || !a[1].is_number_integer()) {
        throw ParseError(0, where + "expected [u, v]");
      }
      try {
        add_arc(arcs, seen, {vertex_id(a[0].get<long long>(), n, 0), vertex_id(a[1].get<long long>(), n, 0)}, 0,
                where, inst.warnings);
      } catch (const ParseError& e) {
        if (std::string_view(e.what()).starts_with(where)) throw;
        throw ParseError(0, where + e.what());
      }
    }
  }
  inst.graph = Digraph::build(n, arcs);
  if (doc.contains("parts") && !doc["parts"].is_null()) {
    if (!doc["parts"].is_array()) throw ParseError(0, "field 'parts' must be an array");
    std::vector<VertexSeq> parts;
    for (std::size_t i = 0; i < doc["parts"].size(); ++i) {
      const json& p = doc["parts"][i];
      const std::string where = "parts[" + std::to_string(i) + "]: ";
      if (!p.is_array()) throw ParseError(0, where + "expected an array of vertices");
      VertexSeq part;
      for (const json& v : p) {
        if (!v.is_number_integer()) throw ParseError(0, where + "expected integer vertex");
        try {
          part.push_back(vertex_id(v.get<long long>(), n, 0));
        } catch (const ParseError& e) {
          throw ParseError(0, where + e.what());
        }
      }
      parts.push_back(std::move(part));
    }
    try {
      check_parts(parts, std::vector<int>(parts.size(), 0), inst.graph);
    } catch (const ParseError& e) {
      throw ParseError(0, std::string("parts: ") + e.what());
    }
    inst.parts = std::move(parts);
  }
  return inst;
}

}  // namespace

InstanceFormat parse_format_name(std::string_view name) {
  if (name == "auto") return InstanceFormat::Auto;
  if (name == "text") return InstanceFormat::Text;
  if (name == "json") return InstanceFormat::Json;
  throw InputError("unknown format '" + std::string(name) + "' (expected auto, text or json)");
}

Instance parse_instance(std::string_view text, InstanceFormat format) {
  if (format == InstanceFormat::Auto) {
    const auto first = text.find_first_not_of(" \t\r\n");
    format = (first != std::string_view::npos && text[first] == '{') ? InstanceFormat::Json : InstanceFormat::Text;
  }
  return format == InstanceFormat::Json ? parse_json(text) : parse_text(text);
}

std::string serialize_instance(const Instance& inst, InstanceFormat format) {
  const auto arcs = inst.graph.arcs();
  if (format == InstanceFormat::Json) {
    json doc;
    doc["n"] = inst.graph.order();
    doc["arcs"] = json::array();
    for (const Arc& a : arcs) doc["arcs"].push_back({a.tail, a.head});
    if (inst.parts) doc["parts"] = *inst.parts;
    return doc.dump() + "\n";
  }
  std::ostringstream out;
  out << inst.graph.order() << ' ' << arcs.size() << '\n';
  for (const Arc& a : arcs) out << a.tail << ' ' << a.head << '\n';
  if (inst.parts) {
    for (const VertexSeq& p : *inst.parts) {
      out << "part";
      for (Vertex v : p) out << ' ' << v;
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace fwdarc::harness
