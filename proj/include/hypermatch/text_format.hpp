#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hypermatch/hypergraph.hpp"

namespace hypermatch {

/// Malformed instance or solution text. `line` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Instance formats.
//
//   hgr <n> <m> <r>        gr <n> <m>
//   <v1> <v2> ... (m lines) <u> <v>    (m lines)
//
// Blank lines and lines starting with '#' are ignored. The declared rank must
// equal the true maximum hyperedge size.
Hypergraph parse_hypergraph(std::string_view text);
Graph parse_graph(std::string_view text);
std::string format_hypergraph(const Hypergraph& h);
std::string format_graph(const Graph& g);

/// Either format; a graph file is read as a rank-2 hypergraph.
Hypergraph parse_any_as_hypergraph(std::string_view text);
bool looks_like_graph(std::string_view text);

using EdgeLists = std::vector<std::vector<std::int64_t>>;

// Solution formats, one record per line.
std::vector<std::uint32_t> parse_id_list(std::string_view text);
std::string format_id_list(const std::vector<std::uint32_t>& ids);

/// `<id> <value>` lines; every id in 0..count-1 must appear exactly once.
std::vector<std::int64_t> parse_id_values(std::string_view text, std::size_t count);
std::string format_id_values(const std::vector<std::int64_t>& values);

/// `<u> <v>` lines.
std::vector<std::pair<std::uint32_t, std::uint32_t>> parse_pairs(std::string_view text);
std::string format_pairs(const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs);

/// `<edge-id>: c1 c2 ...` lines; every edge in 0..count-1 exactly once.
EdgeLists parse_edge_lists(std::string_view text, std::size_t count);
std::string format_edge_lists(const EdgeLists& lists);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace hypermatch
