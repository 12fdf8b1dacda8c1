#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "convexoid/error.hpp"
#include "convexoid/graph_topos.hpp"
#include "convexoid/instance.hpp"
#include "convexoid/rational.hpp"
#include "convexoid/structural_gallery.hpp"

namespace convexoid {

// ---------------------------------------------------------------------------
// Text helpers
// ---------------------------------------------------------------------------

namespace io {

/// Whitespace-separated tokens; parentheses and braces group so "(1, 0)" stays whole.
inline std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : s) {
    if (ch == '(' || ch == '{' || ch == '[') ++depth;
    if (ch == ')' || ch == '}' || ch == ']') --depth;
    if (depth <= 0 && (ch == ' ' || ch == '\t')) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
      continue;
    }
    if (depth > 0 && (ch == ' ' || ch == '\t')) continue;
    cur += ch;
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

/// Comma-separated cells at bracket depth zero, each trimmed.
inline std::vector<std::string> split_csv(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : s) {
    if (ch == '(' || ch == '{' || ch == '[') ++depth;
    if (ch == ')' || ch == '}' || ch == ']') --depth;
    if (depth == 0 && ch == ',') {
      out.emplace_back(detail::trim(cur));
      cur.clear();
      continue;
    }
    cur += ch;
  }
  out.emplace_back(detail::trim(cur));
  return out;
}

inline std::vector<std::pair<int, std::string>> numbered_lines(std::string_view text) {
  std::vector<std::pair<int, std::string>> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    out.emplace_back(n, std::move(line));
  }
  return out;
}

inline std::string strip_comment(std::string_view s) {
  const auto hash = s.find('#');
  return std::string(detail::trim(hash == std::string_view::npos ? s : s.substr(0, hash)));
}

}  // namespace io

// ---------------------------------------------------------------------------
// Sectioned documents
// ---------------------------------------------------------------------------

struct DocLine {
  int line = 0;
  std::string text;
};

struct DocEntry {
  int line = 0;
  std::string key;
  std::string value;
};

/// "[kind arg]" followed by "key = value" entries and raw lines.
struct DocSection {
  int line = 0;
  std::string kind;
  std::string arg;
  std::vector<DocEntry> entries;
  std::vector<DocLine> raw;

  const DocEntry* find(std::string_view key) const {
    for (const auto& e : entries) {
      if (e.key == key) return &e;
    }
    return nullptr;
  }
  std::string get(std::string_view key, std::string fallback = "") const {
    const auto* e = find(key);
    return e ? e->value : fallback;
  }
  const DocEntry& require(std::string_view key) const {
    const auto* e = find(key);
    if (!e) throw InputError("section [" + kind + "] needs '" + std::string(key) + "'", line);
    return *e;
  }
};

struct Document {
  std::vector<DocSection> sections;

  const DocSection* find(std::string_view kind, std::string_view arg = {}) const {
    for (const auto& s : sections) {
      if (s.kind == kind && (arg.empty() || s.arg == arg)) return &s;
    }
    return nullptr;
  }
  std::vector<const DocSection*> all(std::string_view kind) const {
    std::vector<const DocSection*> out;
    for (const auto& s : sections) {
      if (s.kind == kind) out.push_back(&s);
    }
    return out;
  }
};

/// '#' starts a comment. A line is an entry when it has '=' outside brackets
/// and its key is a bare word; otherwise it is kept raw for the section owner.
inline Document parse_document(std::string_view text) {
  Document doc;
  for (const auto& [n, full] : io::numbered_lines(text)) {
    const auto s = io::strip_comment(full);
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']') throw InputError("unterminated section header", n);
      const auto words = io::split_words(std::string_view(s).substr(1, s.size() - 2));
      if (words.empty() || words.size() > 2) throw InputError("section header needs a kind and at most one name", n);
      doc.sections.push_back(DocSection{n, words[0], words.size() == 2 ? words[1] : "", {}, {}});
      continue;
    }
    if (doc.sections.empty()) throw InputError("content before the first section", n);
    auto& sec = doc.sections.back();
    const auto eq = s.find('=');
    if (eq != std::string::npos) {
      const auto key = std::string(detail::trim(std::string_view(s).substr(0, eq)));
      const bool bare = !key.empty() && key.find_first_of(" ,(){}[]") == std::string::npos;
      if (bare) {
        if (sec.find(key)) throw InputError("duplicate key '" + key + "'", n);
        sec.entries.push_back({n, key, std::string(detail::trim(std::string_view(s).substr(eq + 1)))});
        continue;
      }
    }
    sec.raw.push_back({n, s});
  }
  return doc;
}

// ---------------------------------------------------------------------------
// FuncTable CSV
// ---------------------------------------------------------------------------

/// Two columns, element name then value, in declaration order.
template <Codomain C>
std::string table_to_csv(const Instance<C>& inst, const FuncTable<typename C::value_type>& f) {
  check_side(inst, f, f.side);
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) out += inst.name(f.side, i) + "," + inst.codomain().format(f[i]) + "\n";
  return out;
}

/// Every element of the side exactly once, in any order.
template <Codomain C>
FuncTable<typename C::value_type> table_from_rows(const Instance<C>& inst, Side side, const std::vector<DocLine>& rows) {
  using V = typename C::value_type;
  std::vector<std::optional<V>> vals(inst.size(side));
  for (const auto& row : rows) {
    const auto cells = io::split_csv(row.text);
    if (cells.size() != 2) throw InputError("expected 'element, value'", row.line);
    std::size_t i = 0;
    try {
      i = inst.index_of(side, cells[0]);
    } catch (const Error& e) {
      throw InputError(e.what(), row.line);
    }
    if (vals[i]) throw InputError("element '" + cells[0] + "' listed twice", row.line);
    try {
      vals[i] = inst.codomain().parse(cells[1]);
    } catch (const std::exception& e) {
      throw InputError(e.what(), row.line);
    }
  }
  FuncTable<V> f{side, {}};
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (!vals[i]) throw InputError("no value for element '" + inst.name(side, i) + "'", rows.empty() ? 0 : rows.front().line);
    f.values.push_back(*vals[i]);
  }
  return f;
}

template <Codomain C>
FuncTable<typename C::value_type> table_from_csv(const Instance<C>& inst, Side side, std::string_view text) {
  std::vector<DocLine> rows;
  for (const auto& [n, s] : io::numbered_lines(text)) {
    const auto t = io::strip_comment(s);
    if (!t.empty()) rows.push_back({n, t});
  }
  return table_from_rows(inst, side, rows);
}

// ---------------------------------------------------------------------------
// Set systems
// ---------------------------------------------------------------------------

/// One subset per line in rank order.
inline std::string system_to_lines(const SetSystem& pi) {
  std::string out;
  for (auto m : pi.members()) out += format_subset(m) + "\n";
  return out;
}

inline SetSystem system_from_lines(std::string_view text, int n) {
  SetSystem pi(n);
  for (const auto& [line, s] : io::numbered_lines(text)) {
    const auto t = io::strip_comment(s);
    if (t.empty()) continue;
    try {
      pi.insert(parse_subset(t, n));
    } catch (const InputError& e) {
      throw InputError(e.what(), line);
    }
  }
  return pi;
}

/// A space-separated list of subsets, e.g. "{1} {1,2}".
inline SetSystem system_from_words(std::string_view text, int n, int line = 0) {
  SetSystem pi(n);
  for (const auto& w : io::split_words(text)) {
    try {
      pi.insert(parse_subset(w, n));
    } catch (const InputError& e) {
      throw InputError(e.what(), line);
    }
  }
  return pi;
}

// ---------------------------------------------------------------------------
// Graphs
// ---------------------------------------------------------------------------

/// "vertices: a b c" then "edge <name> <src> <dst>" lines.
inline DiGraph graph_from_lines(const std::vector<DocLine>& lines) {
  std::optional<DiGraph> g;
  for (const auto& [n, s] : lines) {
    if (s.rfind("vertices:", 0) == 0) {
      if (g) throw InputError("vertices declared twice", n);
      try {
        g.emplace(io::split_words(std::string_view(s).substr(9)));
      } catch (const Error& e) {
        throw InputError(e.what(), n);
      }
      continue;
    }
    const auto w = io::split_words(s);
    if (w.size() != 4 || w[0] != "edge") throw InputError("expected 'edge <name> <src> <dst>'", n);
    if (!g) throw InputError("edge before the vertices line", n);
    try {
      g->add_edge(w[1], w[2], w[3]);
    } catch (const Error& e) {
      throw InputError(e.what(), n);
    }
  }
  if (!g) throw InputError("graph has no vertices line");
  return std::move(*g);
}

inline DiGraph parse_graph(std::string_view text) {
  std::vector<DocLine> lines;
  for (const auto& [n, s] : io::numbered_lines(text)) {
    const auto t = io::strip_comment(s);
    if (!t.empty()) lines.push_back({n, t});
  }
  return graph_from_lines(lines);
}

inline std::string format_graph(const DiGraph& g) {
  std::string out = "vertices:";
  for (const auto& v : g.vertices()) out += " " + v;
  out += "\n";
  for (const auto& e : g.edges()) out += "edge " + e.name + " " + g.vertices()[e.src] + " " + g.vertices()[e.dst] + "\n";
  return out;
}

/// Subgraph from "vertices = ..." and "edges = ..." entries of a section.
inline Subgraph subgraph_from_section(const GraphPtr& g, const DocSection& sec) {
  try {
    return make_subgraph(g, io::split_words(sec.get("vertices")), io::split_words(sec.get("edges")));
  } catch (const Error& e) {
    throw InputError(e.what(), sec.line);
  }
}

}  // namespace convexoid
