#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace motifclust {

// Unordered vertex triple, a < b < c.
struct Triple {
  int a, b, c;
  friend bool operator==(const Triple&, const Triple&) = default;
};

// Simple undirected graph on dense ids 0..n-1 with bitset adjacency rows.
// label_base records the id base of the original input (0 or 1) so output
// can use the labels the user wrote.
class Graph {
 public:
  explicit Graph(int n);
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return m_; }
  bool has_edge(int u, int v) const {
    return (rows_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v >> 6)] >>
            (v & 63)) & 1;
  }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }

  const uint64_t* row(int v) const { return rows_.data() + static_cast<std::size_t>(v) * words_; }
  int words() const { return words_; }

  // Edges in lexicographic order, u < v.
  std::vector<std::pair<int, int>> edges() const;

  int label_base = 0;
  int64_t label(int v) const { return v + label_base; }

 private:
  void add_edge(int u, int v);

  int n_;
  int m_ = 0;
  int words_;
  std::vector<uint64_t> rows_;
  std::vector<std::vector<int>> adj_;
};

struct ParseOptions {
  bool one_based = false;
  // Sets the vertex count above max id + 1 (allows isolated vertices).
  std::optional<int> n_override;
};

// Lines hold two whitespace-separated non-negative integer ids; '#' starts a
// comment; blank lines are skipped. Duplicate edges (either orientation)
// collapse to one; self-loops are an error. Throws ParseError with a line
// number, or ConfigError for a bad n_override.
Graph parse_edge_list(std::istream& in, const ParseOptions& opt = {});
Graph load_edge_list_file(const std::string& path, const ParseOptions& opt = {});

// Inverse of parse_edge_list for round-trips; emits original labels.
std::string to_edge_list(const Graph& g);

// All triangles in lexicographic order.
std::vector<Triple> enumerate_triangles(const Graph& g);

// Complete multipartite graph with parts of near-equal size (parts = 2 or 3);
// vertex v joins part v mod parts.
Graph turan_graph(int n, int parts);

// All maximal cliques (Bron-Kerbosch with pivoting), each ascending, the list
// ordered lexicographically. Intended for small graphs (n up to ~50).
std::vector<std::vector<int>> maximal_cliques(const Graph& g);

}  // namespace motifclust
