// SPDX-License-Identifier: Apache-2.0
#include "graphopt/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "graphopt/error.hpp"

namespace graphopt {

namespace {

// Parses exactly two non-negative integers separated by a single space.
bool parse_two(std::string_view line, long long& a, long long& b) {
  if (!line.empty() && line.back() == '\r') return false;
  auto space = line.find(' ');
  if (space == std::string_view::npos) return false;
  auto first = line.substr(0, space);
  auto second = line.substr(space + 1);
  if (first.empty() || second.empty()) return false;
  auto r1 = std::from_chars(first.data(), first.data() + first.size(), a);
  if (r1.ec != std::errc() || r1.ptr != first.data() + first.size()) return false;
  auto r2 = std::from_chars(second.data(), second.data() + second.size(), b);
  if (r2.ec != std::errc() || r2.ptr != second.data() + second.size()) return false;
  return a >= 0 && b >= 0;
}

std::string at_line(std::size_t line_no) { return "line " + std::to_string(line_no) + ": "; }

}  // namespace

Graph parse_graph(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  std::size_t pos = 0, line_no = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    auto line = text.substr(pos, end - pos);
    if (!line.empty() && line.front() != '#') lines.emplace_back(line_no, line);
    pos = end + 1;
  }
  if (lines.empty()) throw Error(Errc::MalformedHeader, "line 1: missing \"n m\" header");

  long long n = 0, m = 0;
  auto [header_no, header] = lines.front();
  if (!parse_two(header, n, m) || n < 1 || n > (1 << 30)) {
    throw Error(Errc::MalformedHeader, at_line(header_no) + "expected \"n m\" with n >= 1, got \"" +
                                           std::string(header) + "\"");
  }
  if (static_cast<long long>(lines.size()) - 1 != m) {
    throw Error(Errc::MalformedHeader, at_line(header_no) + "header declares " + std::to_string(m) +
                                           " edges but " + std::to_string(lines.size() - 1) +
                                           " edge lines follow");
  }

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  std::vector<std::size_t> origin;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto [no, line] = lines[i];
    long long u = 0, v = 0;
    if (!parse_two(line, u, v)) {
      throw Error(Errc::MalformedEdgeLine, at_line(no) + "expected \"u v\", got \"" + std::string(line) + "\"");
    }
    if (u >= n || v >= n) {
      throw Error(Errc::MalformedEdgeLine, at_line(no) + "vertex " + std::to_string(u >= n ? u : v) +
                                               " out of range for n = " + std::to_string(n));
    }
    if (u == v) throw Error(Errc::MalformedEdgeLine, at_line(no) + "self-loop on vertex " + std::to_string(u));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    origin.push_back(no);
  }
  try {
    return Graph(static_cast<int>(n), edges);
  } catch (const Error& e) {
    if (e.code() != Errc::DuplicateEdge) throw;
    // Locate the second occurrence for the message.
    std::vector<std::pair<Edge, std::size_t>> seen;
    for (std::size_t i = 0; i < edges.size(); ++i) seen.emplace_back(edges[i], origin[i]);
    std::stable_sort(seen.begin(), seen.end(), [](auto& a, auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < seen.size(); ++i) {
      if (seen[i].first == seen[i - 1].first) {
        throw Error(Errc::MalformedEdgeLine, at_line(std::max(seen[i].second, seen[i - 1].second)) +
                                                 "duplicate edge " + std::to_string(seen[i].first.u) + " " +
                                                 std::to_string(seen[i].first.v));
      }
    }
    throw;
  }
}

std::string serialize_graph(const Graph& g) {
  std::string out = std::to_string(g.n()) + " " + std::to_string(g.m()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::InvalidArgument, "cannot open graph file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

void write_graph_file(const std::string& path, const Graph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::InvalidArgument, "cannot write graph file '" + path + "'");
  out << serialize_graph(g);
}

}  // namespace graphopt
