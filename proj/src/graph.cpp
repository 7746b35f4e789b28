#include "motifclust/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "motifclust/errors.hpp"

namespace motifclust {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
  if (n < 1) throw ConfigError("graph needs at least one vertex");
  rows_.assign(static_cast<std::size_t>(n_) * words_, 0);
  adj_.resize(n_);
}

void Graph::add_edge(int u, int v) {
  if (has_edge(u, v)) return;
  rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= uint64_t{1} << (v & 63);
  rows_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= uint64_t{1} << (u & 63);
  adj_[u].push_back(v);
  adj_[v].push_back(u);
  ++m_;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop");
    g.add_edge(u, v);
  }
  for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph parse_edge_list(std::istream& in, const ParseOptions& opt) {
  std::vector<std::pair<int, int>> edges;
  std::string line;
  int lineno = 0;
  long long max_id = -1;
  const int base = opt.one_based ? 1 : 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    long long a, b;
    if (!(ls >> a)) continue;  // blank or comment-only line
    if (!(ls >> b))
      throw ParseError("line " + std::to_string(lineno) + ": expected two vertex ids");
    std::string extra;
    if (ls >> extra)
      throw ParseError("line " + std::to_string(lineno) + ": trailing token '" + extra + "'");
    if (a < base || b < base)
      throw ParseError("line " + std::to_string(lineno) + ": vertex id below " +
                       std::to_string(base));
    a -= base;
    b -= base;
    if (a == b)
      throw ParseError("line " + std::to_string(lineno) + ": self-loop at vertex " +
                       std::to_string(a + base));
    if (a > 1000000 || b > 1000000)
      throw ParseError("line " + std::to_string(lineno) + ": vertex id too large");
    edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    max_id = std::max({max_id, a, b});
  }
  int n = static_cast<int>(max_id + 1);
  if (opt.n_override) {
    if (*opt.n_override < n)
      throw ConfigError("vertex count override " + std::to_string(*opt.n_override) +
                        " is below max id + 1 = " + std::to_string(n));
    n = *opt.n_override;
  }
  if (n < 1) throw ParseError("empty edge list and no vertex count override");
  Graph g = Graph::from_edges(n, edges);
  g.label_base = base;
  return g;
}

Graph load_edge_list_file(const std::string& path, const ParseOptions& opt) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_edge_list(in, opt);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  for (auto [u, v] : g.edges()) out << g.label(u) << ' ' << g.label(v) << '\n';
  return out.str();
}

std::vector<Triple> enumerate_triangles(const Graph& g) {
  std::vector<Triple> tris;
  const int n = g.num_vertices();
  const int words = g.words();
  for (int u = 0; u < n; ++u) {
    for (int v : g.neighbors(u)) {
      if (v <= u) continue;
      const uint64_t* ru = g.row(u);
      const uint64_t* rv = g.row(v);
      for (int w = v >> 6; w < words; ++w) {
        uint64_t common = ru[w] & rv[w];
        if (w == v >> 6) common &= ~((uint64_t{2} << (v & 63)) - 1);
        while (common != 0) {
          int bit = __builtin_ctzll(common);
          common &= common - 1;
          tris.push_back({u, v, (w << 6) + bit});
        }
      }
    }
  }
  return tris;
}

Graph turan_graph(int n, int parts) {
  if (parts != 2 && parts != 3) throw ConfigError("turan_graph supports 2 or 3 parts");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (u % parts != v % parts) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

namespace {

struct CliqueState {
  const Graph* g;
  int words;
  std::vector<std::vector<int>>* out;
  std::vector<int> stack;

  void expand(std::vector<uint64_t>& p, std::vector<uint64_t>& x) {
    bool p_empty = true, x_empty = true;
    for (uint64_t w : p) p_empty &= (w == 0);
    for (uint64_t w : x) x_empty &= (w == 0);
    if (p_empty && x_empty) {
      out->push_back(stack);
      return;
    }
    if (p_empty) return;
    // pivot: vertex of P|X maximizing |P & N(pivot)|
    int pivot = -1, best = -1;
    for (int w = 0; w < words; ++w) {
      uint64_t cand = p[w] | x[w];
      while (cand != 0) {
        int v = (w << 6) + __builtin_ctzll(cand);
        cand &= cand - 1;
        int deg = 0;
        const uint64_t* rv = g->row(v);
        for (int k = 0; k < words; ++k) deg += __builtin_popcountll(p[k] & rv[k]);
        if (deg > best) {
          best = deg;
          pivot = v;
        }
      }
    }
    const uint64_t* rp = g->row(pivot);
    for (int w = 0; w < words; ++w) {
      uint64_t cand = p[w] & ~rp[w];
      while (cand != 0) {
        int v = (w << 6) + __builtin_ctzll(cand);
        cand &= cand - 1;
        const uint64_t* rv = g->row(v);
        std::vector<uint64_t> np(words), nx(words);
        for (int k = 0; k < words; ++k) {
          np[k] = p[k] & rv[k];
          nx[k] = x[k] & rv[k];
        }
        stack.push_back(v);
        expand(np, nx);
        stack.pop_back();
        p[w] &= ~(uint64_t{1} << (v & 63));
        x[w] |= uint64_t{1} << (v & 63);
      }
    }
  }
};

}  // namespace

std::vector<std::vector<int>> maximal_cliques(const Graph& g) {
  const int n = g.num_vertices();
  const int words = g.words();
  std::vector<uint64_t> p(words, 0), x(words, 0);
  for (int v = 0; v < n; ++v) p[v >> 6] |= uint64_t{1} << (v & 63);
  std::vector<std::vector<int>> out;
  CliqueState st{&g, words, &out, {}};
  st.expand(p, x);
  for (auto& c : out) std::sort(c.begin(), c.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace motifclust
