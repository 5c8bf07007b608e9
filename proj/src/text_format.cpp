#include "hypermatch/text_format.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace hypermatch {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

// Non-empty, non-comment lines split on blanks.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    pos = end + 1;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t') ++j;
      if (j > i) line.tokens.push_back(raw.substr(i, j - i));
      i = j;
    }
    if (line.tokens.empty() || line.tokens.front().front() == '#') continue;
    lines.push_back(std::move(line));
  }
  return lines;
}

template <typename T>
T parse_number(std::string_view token, std::size_t line) {
  T value{};
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || token.front() == '+' || ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected integer, got '" + std::string(token) + "'");
  }
  return value;
}

void expect_tokens(const Line& line, std::size_t count, const char* what) {
  if (line.tokens.size() != count) {
    throw ParseError(line.number, std::string("expected ") + what + " (" + std::to_string(count) + " fields), got " +
                                      std::to_string(line.tokens.size()) + " fields");
  }
}

template <typename Fn>
auto wrap_build(std::size_t line, Fn&& fn) {
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    throw ParseError(line, e.what());
  }
}

}  // namespace

bool looks_like_graph(std::string_view text) {
  const auto lines = tokenize(text);
  return !lines.empty() && lines.front().tokens.front() == "gr";
}

Hypergraph parse_hypergraph(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(0, "empty input, expected 'hgr <n> <m> <r>' header");
  const Line& header = lines.front();
  if (header.tokens.front() != "hgr") throw ParseError(header.number, "expected 'hgr' header");
  expect_tokens(header, 4, "'hgr <n> <m> <r>'");
  const auto n = parse_number<std::uint32_t>(header.tokens[1], header.number);
  const auto m = parse_number<std::uint32_t>(header.tokens[2], header.number);
  const auto r = parse_number<std::uint32_t>(header.tokens[3], header.number);
  if (lines.size() - 1 != m) {
    throw ParseError(lines.back().number, "header declares " + std::to_string(m) + " hyperedges, found " +
                                              std::to_string(lines.size() - 1));
  }
  std::vector<std::vector<VertexId>> edges;
  edges.reserve(m);
  std::size_t rank = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::vector<VertexId> vs;
    for (auto tok : lines[i].tokens) vs.push_back(parse_number<std::uint32_t>(tok, lines[i].number));
    if (vs.size() > r) {
      throw ParseError(lines[i].number, "hyperedge has " + std::to_string(vs.size()) + " vertices, rank is " +
                                            std::to_string(r));
    }
    // Per-edge checks (range, repeats) so errors carry the line number.
    wrap_build(lines[i].number, [&] { return Hypergraph::build(n, {vs}); });
    rank = std::max(rank, vs.size());
    edges.push_back(std::move(vs));
  }
  if (rank != r && m > 0) {
    throw ParseError(header.number, "declared rank " + std::to_string(r) + " but largest hyperedge has " +
                                        std::to_string(rank) + " vertices");
  }
  return wrap_build(0, [&] { return Hypergraph::build(n, std::move(edges)); });
}

Graph parse_graph(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(0, "empty input, expected 'gr <n> <m>' header");
  const Line& header = lines.front();
  if (header.tokens.front() != "gr") throw ParseError(header.number, "expected 'gr' header");
  expect_tokens(header, 3, "'gr <n> <m>'");
  const auto n = parse_number<std::uint32_t>(header.tokens[1], header.number);
  const auto m = parse_number<std::uint32_t>(header.tokens[2], header.number);
  if (lines.size() - 1 != m) {
    throw ParseError(lines.back().number, "header declares " + std::to_string(m) + " edges, found " +
                                              std::to_string(lines.size() - 1));
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(m);
  std::set<std::pair<VertexId, VertexId>> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    expect_tokens(lines[i], 2, "'<u> <v>'");
    const auto u = parse_number<std::uint32_t>(lines[i].tokens[0], lines[i].number);
    const auto v = parse_number<std::uint32_t>(lines[i].tokens[1], lines[i].number);
    wrap_build(lines[i].number, [&] { return Graph::build(n, {{u, v}}); });
    if (!seen.insert(std::minmax(u, v)).second) {
      throw ParseError(lines[i].number, "edge " + std::to_string(u) + " " + std::to_string(v) + " listed twice");
    }
    edges.emplace_back(u, v);
  }
  return wrap_build(0, [&] { return Graph::build(n, edges); });
}

Hypergraph parse_any_as_hypergraph(std::string_view text) {
  if (looks_like_graph(text)) return parse_graph(text).as_hypergraph();
  return parse_hypergraph(text);
}

std::string format_hypergraph(const Hypergraph& h) {
  std::ostringstream out;
  out << "hgr " << h.num_vertices() << ' ' << h.num_edges() << ' ' << h.rank() << '\n';
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << '\n';
  }
  return out.str();
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << "gr " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::vector<std::uint32_t> parse_id_list(std::string_view text) {
  std::vector<std::uint32_t> ids;
  for (const auto& line : tokenize(text)) {
    for (auto tok : line.tokens) ids.push_back(parse_number<std::uint32_t>(tok, line.number));
  }
  return ids;
}

std::string format_id_list(const std::vector<std::uint32_t>& ids) {
  std::string out;
  for (auto id : ids) out += std::to_string(id) + '\n';
  return out;
}

std::vector<std::int64_t> parse_id_values(std::string_view text, std::size_t count) {
  std::vector<std::int64_t> values(count);
  std::vector<char> seen(count, 0);
  for (const auto& line : tokenize(text)) {
    expect_tokens(line, 2, "'<id> <value>'");
    const auto id = parse_number<std::uint32_t>(line.tokens[0], line.number);
    if (id >= count) throw ParseError(line.number, "id " + std::to_string(id) + " out of range");
    if (seen[id]) throw ParseError(line.number, "id " + std::to_string(id) + " listed twice");
    seen[id] = 1;
    values[id] = parse_number<std::int64_t>(line.tokens[1], line.number);
  }
  for (std::size_t i = 0; i < count; ++i) {
    if (!seen[i]) throw ParseError(0, "id " + std::to_string(i) + " missing");
  }
  return values;
}

std::string format_id_values(const std::vector<std::int64_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += std::to_string(i) + ' ' + std::to_string(values[i]) + '\n';
  return out;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> parse_pairs(std::string_view text) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (const auto& line : tokenize(text)) {
    expect_tokens(line, 2, "'<u> <v>'");
    pairs.emplace_back(parse_number<std::uint32_t>(line.tokens[0], line.number),
                       parse_number<std::uint32_t>(line.tokens[1], line.number));
  }
  return pairs;
}

std::string format_pairs(const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs) {
  std::string out;
  for (auto [u, v] : pairs) out += std::to_string(u) + ' ' + std::to_string(v) + '\n';
  return out;
}

EdgeLists parse_edge_lists(std::string_view text, std::size_t count) {
  EdgeLists lists(count);
  std::vector<char> seen(count, 0);
  for (const auto& line : tokenize(text)) {
    std::string_view head = line.tokens.front();
    if (head.size() < 2 || head.back() != ':') throw ParseError(line.number, "expected '<edge-id>:'");
    head.remove_suffix(1);
    const auto id = parse_number<std::uint32_t>(head, line.number);
    if (id >= count) throw ParseError(line.number, "id " + std::to_string(id) + " out of range");
    if (seen[id]) throw ParseError(line.number, "id " + std::to_string(id) + " listed twice");
    seen[id] = 1;
    for (std::size_t i = 1; i < line.tokens.size(); ++i) {
      const auto c = parse_number<std::int64_t>(line.tokens[i], line.number);
      if (c < 0) throw ParseError(line.number, "negative color " + std::to_string(c));
      lists[id].push_back(c);
    }
  }
  for (std::size_t i = 0; i < count; ++i) {
    if (!seen[i]) throw ParseError(0, "list for id " + std::to_string(i) + " missing");
  }
  return lists;
}

std::string format_edge_lists(const EdgeLists& lists) {
  std::string out;
  for (std::size_t i = 0; i < lists.size(); ++i) {
    out += std::to_string(i) + ':';
    for (auto c : lists[i]) out += ' ' + std::to_string(c);
    out += '\n';
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
}

}  // namespace hypermatch
