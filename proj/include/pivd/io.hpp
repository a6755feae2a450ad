#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "pivd/errors.hpp"
#include "pivd/graph.hpp"
#include "pivd/kernel.hpp"

namespace pivd {

enum class GraphFormat { edgelist, graph6, dimacs };

inline const char* graph_format_name(GraphFormat f) {
  switch (f) {
    case GraphFormat::edgelist: return "edgelist";
    case GraphFormat::graph6: return "graph6";
    case GraphFormat::dimacs: return "dimacs";
  }
  return "?";
}

inline std::optional<GraphFormat> graph_format_from_name(std::string_view name) {
  if (name == "edgelist") return GraphFormat::edgelist;
  if (name == "graph6") return GraphFormat::graph6;
  if (name == "dimacs") return GraphFormat::dimacs;
  return std::nullopt;
}

/// Parsed instance file: the graph (ids 0..n-1) plus the optional budget
/// carried by the format (edgelist "k=" header, DIMACS "c k" comment).
struct ParsedInstance {
  Graph graph;
  std::optional<int> k;
};

namespace detail {

inline bool parse_int(std::string_view s, long long& out) {
  if (s.empty()) return false;
  std::size_t i = s[0] == '-' ? 1 : 0;
  if (i == s.size()) return false;
  long long v = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
    v = v * 10 + (s[i] - '0');
    if (v > 2000000000LL) return false;
  }
  out = s[0] == '-' ? -v : v;
  return true;
}

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline ParsedInstance parse_edgelist(std::string_view bytes) {
  std::optional<long long> header_n;
  std::optional<long long> header_k;
  std::vector<std::pair<VertexId, VertexId>> edges;
  long long max_seen = -1;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= bytes.size()) {
    std::size_t end = bytes.find('\n', pos);
    if (end == std::string_view::npos) end = bytes.size();
    std::string_view line = bytes.substr(pos, end - pos);
    pos = end + 1;
    ++lineno;
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0][0] == '#') {
      if (pos > bytes.size()) break;
      continue;
    }
    if (tokens[0].substr(0, 2) == "n=" || tokens[0].substr(0, 2) == "k=") {
      for (auto tok : tokens) {
        long long v;
        if (tok.substr(0, 2) == "n=" && parse_int(tok.substr(2), v) && v >= 0)
          header_n = v;
        else if (tok.substr(0, 2) == "k=" && parse_int(tok.substr(2), v) && v >= 0)
          header_k = v;
        else
          throw ParseError("bad header token '" + std::string(tok) + "'", lineno);
      }
      if (pos > bytes.size()) break;
      continue;
    }
    long long u, v;
    if (tokens.size() != 2 || !parse_int(tokens[0], u) || !parse_int(tokens[1], v) || u < 0 || v < 0)
      throw ParseError("expected edge line 'u v'", lineno);
    edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    max_seen = std::max({max_seen, u, v});
    if (pos > bytes.size()) break;
  }
  long long n = header_n ? *header_n : max_seen + 1;
  if (max_seen >= n) throw ParseError("edge endpoint beyond declared n=" + std::to_string(n), lineno);
  ParsedInstance out{Graph::from_edges(static_cast<int>(n), edges), std::nullopt};
  if (header_k) out.k = static_cast<int>(*header_k);
  return out;
}

inline std::string serialize_edgelist(const Graph& g, std::optional<int> k) {
  std::ostringstream out;
  out << "n=" << g.vertex_count() << '\n';
  if (k) out << "k=" << *k << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

inline ParsedInstance parse_graph6(std::string_view bytes) {
  std::string_view s = bytes;
  if (s.substr(0, 10) == ">>graph6<<") s.remove_prefix(10);
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.remove_suffix(1);
  if (s.empty()) throw ParseError("empty graph6 payload", 1);
  std::size_t at = 0;
  long long n = 0;
  auto sixbits = [&](std::size_t i) -> int {
    if (i >= s.size()) throw ParseError("graph6 payload truncated", 1, i + 1);
    int c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126) throw ParseError("graph6 byte out of range", 1, i + 1);
    return c - 63;
  };
  if (s[0] == '~') {
    if (s.size() >= 2 && s[1] == '~')
      throw ParseError("graph6 graphs beyond 258047 vertices are not supported", 1, 2);
    n = (static_cast<long long>(sixbits(1)) << 12) | (sixbits(2) << 6) | sixbits(3);
    at = 4;
  } else {
    n = sixbits(0);
    at = 1;
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  int have = 0;
  int bits = 0;
  for (long long j = 1; j < n; ++j) {
    for (long long i = 0; i < j; ++i) {
      if (have == 0) {
        bits = sixbits(at++);
        have = 6;
      }
      if (bits & (1 << (have - 1)))
        edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
      --have;
    }
  }
  if (at != s.size() && n > 1) throw ParseError("trailing bytes after graph6 payload", 1, at + 1);
  return ParsedInstance{Graph::from_edges(static_cast<int>(n), edges), std::nullopt};
}

inline std::string serialize_graph6(const Graph& g) {
  const long long n = static_cast<long long>(g.vertex_count());
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  } else {
    throw std::invalid_argument("graph6: more than 258047 vertices");
  }
  int have = 0;
  int bits = 0;
  for (long long j = 1; j < n; ++j) {
    for (long long i = 0; i < j; ++i) {
      bits = (bits << 1) | (g.has_edge(static_cast<VertexId>(i), static_cast<VertexId>(j)) ? 1 : 0);
      if (++have == 6) {
        out.push_back(static_cast<char>(bits + 63));
        have = 0;
        bits = 0;
      }
    }
  }
  if (have > 0) out.push_back(static_cast<char>((bits << (6 - have)) + 63));
  out.push_back('\n');
  return out;
}

inline ParsedInstance parse_dimacs(std::string_view bytes) {
  std::optional<long long> n;
  std::optional<int> k;
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= bytes.size()) {
    std::size_t end = bytes.find('\n', pos);
    if (end == std::string_view::npos) end = bytes.size();
    std::string_view line = bytes.substr(pos, end - pos);
    pos = end + 1;
    ++lineno;
    auto tokens = split_ws(line);
    if (tokens.empty()) {
      if (pos > bytes.size()) break;
      continue;
    }
    if (tokens[0] == "c") {
      long long v;
      if (tokens.size() == 3 && tokens[1] == "k" && parse_int(tokens[2], v) && v >= 0)
        k = static_cast<int>(v);
    } else if (tokens[0] == "p") {
      long long nn, mm;
      if (n) throw ParseError("duplicate problem line", lineno);
      if (tokens.size() != 4 || tokens[1] != "edge" || !parse_int(tokens[2], nn) ||
          !parse_int(tokens[3], mm) || nn < 0 || mm < 0)
        throw ParseError("expected 'p edge n m'", lineno);
      n = nn;
    } else if (tokens[0] == "e") {
      long long u, v;
      if (!n) throw ParseError("edge before problem line", lineno);
      if (tokens.size() != 3 || !parse_int(tokens[1], u) || !parse_int(tokens[2], v))
        throw ParseError("expected 'e u v'", lineno);
      if (u < 1 || v < 1 || u > *n || v > *n)
        throw ParseError("edge endpoint out of range 1.." + std::to_string(*n), lineno);
      edges.emplace_back(static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1));
    } else {
      throw ParseError("unknown line type '" + std::string(tokens[0]) + "'", lineno);
    }
    if (pos > bytes.size()) break;
  }
  if (!n) throw ParseError("missing problem line", lineno == 0 ? 1 : lineno);
  return ParsedInstance{Graph::from_edges(static_cast<int>(*n), edges), k};
}

inline std::string serialize_dimacs(const Graph& g, std::optional<int> k) {
  std::ostringstream out;
  out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  if (k) out << "c k " << *k << '\n';
  for (auto [u, v] : g.edges()) out << "e " << (u + 1) << ' ' << (v + 1) << '\n';
  return out.str();
}

inline void require_dense_ids(const Graph& g, const char* what) {
  const VertexSet& vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (vs[i] != static_cast<VertexId>(i))
      throw std::invalid_argument(std::string(what) + ": vertex ids must be dense 0-based");
}

}  // namespace detail

inline ParsedInstance parse_graph(std::string_view bytes, GraphFormat format) {
  switch (format) {
    case GraphFormat::edgelist: return detail::parse_edgelist(bytes);
    case GraphFormat::graph6: return detail::parse_graph6(bytes);
    case GraphFormat::dimacs: return detail::parse_dimacs(bytes);
  }
  throw std::invalid_argument("parse_graph: unknown format");
}

/// Serializes a graph with dense 0-based ids. The budget k is carried by
/// the edgelist and DIMACS forms; graph6 has no room for it.
inline std::string serialize_graph(const Graph& g, GraphFormat format, std::optional<int> k = {}) {
  detail::require_dense_ids(g, "serialize_graph");
  switch (format) {
    case GraphFormat::edgelist: return detail::serialize_edgelist(g, k);
    case GraphFormat::graph6: return detail::serialize_graph6(g);
    case GraphFormat::dimacs: return detail::serialize_dimacs(g, k);
  }
  throw std::invalid_argument("serialize_graph: unknown format");
}

/// Graph with ids renumbered to 0..n-1 in ascending old-id order, plus the
/// old-to-new mapping.
struct DenseRenumbering {
  Graph graph;
  std::vector<std::pair<VertexId, int>> mapping;  // (old, new), ascending old
};

inline DenseRenumbering renumber_dense(const Graph& g) {
  DenseRenumbering out;
  const VertexSet& vs = g.vertices();
  std::unordered_map<VertexId, int> to_new;
  to_new.reserve(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i) {
    to_new[vs[i]] = static_cast<int>(i);
    out.mapping.emplace_back(vs[i], static_cast<int>(i));
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(g.edge_count());
  for (auto [u, v] : g.edges()) edges.emplace_back(to_new.at(u), to_new.at(v));
  out.graph = Graph::from_edges(static_cast<int>(vs.size()), edges);
  return out;
}

namespace detail {

inline std::string join_ids(const VertexSet& ids) {
  std::ostringstream out;
  for (std::size_t i = 0; i < ids.size(); ++i) out << (i ? "," : "") << ids[i];
  return out.str();
}

inline VertexSet parse_id_list(std::string_view csv, std::size_t lineno) {
  VertexSet out;
  std::size_t i = 0;
  while (i < csv.size()) {
    std::size_t j = csv.find(',', i);
    if (j == std::string_view::npos) j = csv.size();
    long long v;
    if (!parse_int(csv.substr(i, j - i), v)) throw ParseError("bad id list", lineno);
    out.push_back(static_cast<VertexId>(v));
    i = j + 1;
  }
  return out;
}

}  // namespace detail

/// Line-oriented trace text: a header line, then one record per step with
/// a stable field order. Empty lists serialize as an empty value.
inline std::string emit_trace(const ReductionTrace& trace) {
  std::ostringstream out;
  out << "pivd-trace v1\n";
  for (const TraceStep& s : trace.steps) {
    out << "rule=" << s.rule << " witness=" << detail::join_ids(s.witness)
        << " clique=" << detail::join_ids(s.spliced_clique)
        << " left=" << detail::join_ids(s.attach_left)
        << " right=" << detail::join_ids(s.attach_right) << " v_before=" << s.v_before
        << " v_after=" << s.v_after << " k_before=" << s.k_before << " k_after=" << s.k_after
        << '\n';
  }
  return out.str();
}

inline std::string format_verdict_line(const KernelOutcome& outcome) {
  std::ostringstream out;
  out << "verdict=" << kernel_verdict_name(outcome.verdict);
  if (outcome.verdict == KernelVerdict::no) out << " reason=" << outcome.no_reason;
  out << " k=" << outcome.final_k << '\n';
  return out.str();
}

inline std::string format_renumber_line(const std::vector<std::pair<VertexId, int>>& mapping) {
  std::ostringstream out;
  out << "renumber=";
  for (std::size_t i = 0; i < mapping.size(); ++i)
    out << (i ? "," : "") << mapping[i].first << ':' << mapping[i].second;
  out << '\n';
  return out.str();
}

/// Trace file contents: the steps plus any verdict and renumbering lines.
struct TraceFile {
  ReductionTrace trace;
  std::optional<std::string> verdict;
  std::optional<std::string> no_reason;
  std::optional<int> final_k;
  std::vector<std::pair<VertexId, int>> renumber;
};

inline TraceFile parse_trace(std::string_view bytes) {
  TraceFile out;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  bool saw_header = false;
  while (pos <= bytes.size()) {
    std::size_t end = bytes.find('\n', pos);
    if (end == std::string_view::npos) end = bytes.size();
    std::string_view line = bytes.substr(pos, end - pos);
    pos = end + 1;
    ++lineno;
    auto tokens = detail::split_ws(line);
    if (tokens.empty()) {
      if (pos > bytes.size()) break;
      continue;
    }
    if (!saw_header) {
      if (tokens.size() != 2 || tokens[0] != "pivd-trace" || tokens[1] != "v1")
        throw ParseError("expected 'pivd-trace v1' header", lineno);
      saw_header = true;
      if (pos > bytes.size()) break;
      continue;
    }
    auto value_of = [&](std::string_view tok, std::string_view key) -> std::optional<std::string_view> {
      if (tok.substr(0, key.size()) == key && tok.size() > key.size() && tok[key.size()] == '=')
        return tok.substr(key.size() + 1);
      if (tok.substr(0, key.size()) == key && tok.size() == key.size() + 1 && tok[key.size()] == '=')
        return std::string_view{};
      return std::nullopt;
    };
    if (tokens[0].substr(0, 5) == "rule=") {
      TraceStep step;
      step.rule = std::string(tokens[0].substr(5));
      for (auto tok : tokens) {
        long long v;
        if (auto x = value_of(tok, "witness"))
          step.witness = detail::parse_id_list(*x, lineno);
        else if (auto x2 = value_of(tok, "clique"))
          step.spliced_clique = detail::parse_id_list(*x2, lineno);
        else if (auto x3 = value_of(tok, "left"))
          step.attach_left = detail::parse_id_list(*x3, lineno);
        else if (auto x4 = value_of(tok, "right"))
          step.attach_right = detail::parse_id_list(*x4, lineno);
        else if (auto x5 = value_of(tok, "v_before")) {
          if (!detail::parse_int(*x5, v)) throw ParseError("bad v_before", lineno);
          step.v_before = static_cast<std::size_t>(v);
        } else if (auto x6 = value_of(tok, "v_after")) {
          if (!detail::parse_int(*x6, v)) throw ParseError("bad v_after", lineno);
          step.v_after = static_cast<std::size_t>(v);
        } else if (auto x7 = value_of(tok, "k_before")) {
          if (!detail::parse_int(*x7, v)) throw ParseError("bad k_before", lineno);
          step.k_before = static_cast<int>(v);
        } else if (auto x8 = value_of(tok, "k_after")) {
          if (!detail::parse_int(*x8, v)) throw ParseError("bad k_after", lineno);
          step.k_after = static_cast<int>(v);
        }
      }
      out.trace.steps.push_back(std::move(step));
    } else if (tokens[0].substr(0, 8) == "verdict=") {
      out.verdict = std::string(tokens[0].substr(8));
      for (auto tok : tokens) {
        if (auto x = value_of(tok, "reason")) out.no_reason = std::string(*x);
        if (auto x2 = value_of(tok, "k")) {
          long long v;
          if (detail::parse_int(*x2, v)) out.final_k = static_cast<int>(v);
        }
      }
    } else if (tokens[0].substr(0, 9) == "renumber=") {
      std::string_view body = tokens[0].substr(9);
      std::size_t i = 0;
      while (i < body.size()) {
        std::size_t j = body.find(',', i);
        if (j == std::string_view::npos) j = body.size();
        std::string_view pair = body.substr(i, j - i);
        std::size_t colon = pair.find(':');
        long long a, b;
        if (colon == std::string_view::npos || !detail::parse_int(pair.substr(0, colon), a) ||
            !detail::parse_int(pair.substr(colon + 1), b))
          throw ParseError("bad renumber pair", lineno);
        out.renumber.emplace_back(static_cast<VertexId>(a), static_cast<int>(b));
        i = j + 1;
      }
    } else {
      throw ParseError("unknown trace line", lineno);
    }
    if (pos > bytes.size()) break;
  }
  if (!saw_header) throw ParseError("empty trace", 1);
  return out;
}

}  // namespace pivd
