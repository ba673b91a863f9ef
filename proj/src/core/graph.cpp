#include "graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace w1plus {

namespace {

std::vector<std::int32_t> all_pairs_bfs(int n, const std::vector<std::vector<int>>& adj) {
  std::vector<std::int32_t> dist(static_cast<std::size_t>(n) * n, -1);
  std::deque<int> queue;
  for (int s = 0; s < n; ++s) {
    auto* row = dist.data() + static_cast<std::size_t>(s) * n;
    row[s] = 0;
    queue.clear();
    queue.push_back(s);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : adj[v]) {
        if (row[w] < 0) {
          row[w] = row[v] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  for (std::int32_t v : dist)
    if (v < 0) fail(ErrorCode::invalid_argument, "graph is not connected");
  return dist;
}

} // namespace

Graph Graph::build(int n, std::vector<std::pair<int, int>> edges, std::vector<Factor> factors,
                   int top_split, std::vector<std::int64_t> labels) {
  if (n <= 0) fail(ErrorCode::invalid_argument, "empty vertex set");
  if (n > max_vertices) fail(ErrorCode::invalid_argument, "graph exceeds the vertex cap");
  auto data = std::make_shared<Data>();
  data->n = n;
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u == v) fail(ErrorCode::invalid_argument, "loop edge");
    if (u < 0 || v < 0 || u >= n || v >= n) fail(ErrorCode::invalid_argument, "edge endpoint out of range");
    auto key = std::minmax(u, v);
    if (!seen.insert(key).second) continue; // drop duplicates
    data->edges.emplace_back(key.first, key.second);
  }
  std::sort(data->edges.begin(), data->edges.end());
  data->adj.resize(n);
  for (auto [u, v] : data->edges) {
    data->adj[u].push_back(v);
    data->adj[v].push_back(u);
  }
  for (auto& nb : data->adj) std::sort(nb.begin(), nb.end());
  data->dist = all_pairs_bfs(n, data->adj);
  if (factors.empty()) factors.push_back(Factor{n, n == 2});
  data->factors = std::move(factors);
  data->top_split = top_split;
  data->labels = std::move(labels);
  Graph g;
  g.d_ = std::move(data);
  return g;
}

Graph Graph::path(int n) {
  if (n < 1) fail(ErrorCode::invalid_argument, "path needs at least one vertex");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return build(n, std::move(edges), {}, 0, {});
}

Graph Graph::cycle(int n) {
  if (n < 3) fail(ErrorCode::invalid_argument, "cycle length must be at least 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return build(n, std::move(edges), {}, 0, {});
}

Graph Graph::complete(int n) {
  if (n < 1) fail(ErrorCode::invalid_argument, "complete graph needs at least one vertex");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return build(n, std::move(edges), {}, 0, {});
}

Graph Graph::hypercube(int d) {
  if (d < 1) fail(ErrorCode::invalid_argument, "hypercube dimension must be positive");
  Graph g = path(2);
  for (int i = 1; i < d; ++i) g = product(g, path(2));
  return g;
}

Graph Graph::product(const Graph& a, const Graph& b) {
  int na = a.vertex_count(), nb = b.vertex_count();
  long long n = static_cast<long long>(na) * nb;
  if (n > max_vertices) fail(ErrorCode::invalid_argument, "product exceeds the vertex cap");
  // id = i * |V_b| + j, consistent with mixed-radix coordinates.
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : a.edges())
    for (int j = 0; j < nb; ++j) edges.emplace_back(u * nb + j, v * nb + j);
  for (auto [u, v] : b.edges())
    for (int i = 0; i < na; ++i) edges.emplace_back(i * nb + u, i * nb + v);
  std::vector<Factor> factors = a.factors();
  factors.insert(factors.end(), b.factors().begin(), b.factors().end());
  return build(static_cast<int>(n), std::move(edges), std::move(factors),
               static_cast<int>(a.factors().size()), {});
}

Graph Graph::from_edge_list_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::pair<std::int64_t, std::int64_t>> raw;
  std::set<std::int64_t> verts;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::int64_t u, v;
    if (!(ls >> u)) continue; // blank
    if (!(ls >> v)) fail(ErrorCode::parse_error, "edge list line " + std::to_string(lineno) + ": expected two integers");
    std::int64_t extra;
    if (ls >> extra) fail(ErrorCode::parse_error, "edge list line " + std::to_string(lineno) + ": trailing tokens");
    if (u < 0 || v < 0) fail(ErrorCode::parse_error, "edge list line " + std::to_string(lineno) + ": negative vertex");
    raw.emplace_back(u, v);
    verts.insert(u);
    verts.insert(v);
  }
  if (verts.empty()) fail(ErrorCode::invalid_argument, "empty vertex set");
  std::vector<std::int64_t> labels(verts.begin(), verts.end());
  std::map<std::int64_t, int> id;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) id[labels[i]] = i;
  std::vector<std::pair<int, int>> edges;
  edges.reserve(raw.size());
  for (auto [u, v] : raw) edges.emplace_back(id[u], id[v]);
  bool identity = true;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i)
    if (labels[i] != i) { identity = false; break; }
  return build(static_cast<int>(labels.size()), std::move(edges), {}, 0,
               identity ? std::vector<std::int64_t>{} : labels);
}

Graph Graph::factor_block(const Graph& product, int from, int to) {
  const auto& fs = product.factors();
  if (from < 0 || to > static_cast<int>(fs.size()) || from >= to)
    fail(ErrorCode::invalid_argument, "factor block range out of bounds");
  // Suffix weights of the mixed-radix encoding.
  std::vector<long long> w(fs.size(), 1);
  for (int i = static_cast<int>(fs.size()) - 2; i >= 0; --i) w[i] = w[i + 1] * fs[i + 1].size;
  long long n_block = 1;
  for (int i = from; i < to; ++i) n_block *= fs[i].size;

  auto outside_zero = [&](int v) {
    auto c = product.coords(v);
    for (int i = 0; i < static_cast<int>(fs.size()); ++i)
      if ((i < from || i >= to) && c[i] != 0) return false;
    return true;
  };
  auto to_block = [&](int v) {
    auto c = product.coords(v);
    long long b = 0;
    for (int i = from; i < to; ++i) b = b * fs[i].size + c[i];
    return static_cast<int>(b);
  };

  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : product.edges())
    if (outside_zero(u) && outside_zero(v)) edges.emplace_back(to_block(u), to_block(v));
  std::vector<Factor> factors(fs.begin() + from, fs.begin() + to);
  int split = (to - from >= 2) ? 1 : 0;
  return build(static_cast<int>(n_block), std::move(edges), std::move(factors), split, {});
}

Graph Graph::from_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::parse_error, "cannot open edge list file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_edge_list_text(ss.str());
}

const std::vector<int>& Graph::neighbors(int v) const {
  if (v < 0 || v >= d_->n) fail(ErrorCode::invalid_argument, "vertex out of range");
  return d_->adj[v];
}

int Graph::dist(int u, int v) const {
  if (u < 0 || v < 0 || u >= d_->n || v >= d_->n)
    fail(ErrorCode::invalid_argument, "vertex out of range");
  return d_->dist[static_cast<std::size_t>(u) * d_->n + v];
}

std::int64_t Graph::label(int v) const {
  if (v < 0 || v >= d_->n) fail(ErrorCode::invalid_argument, "vertex out of range");
  return d_->labels.empty() ? v : d_->labels[v];
}

int Graph::vertex_of_label(std::int64_t lbl) const {
  if (d_->labels.empty()) return (lbl >= 0 && lbl < d_->n) ? static_cast<int>(lbl) : -1;
  auto it = std::lower_bound(d_->labels.begin(), d_->labels.end(), lbl);
  if (it == d_->labels.end() || *it != lbl) return -1;
  return static_cast<int>(it - d_->labels.begin());
}

std::vector<int> Graph::coords(int v) const {
  if (v < 0 || v >= d_->n) fail(ErrorCode::invalid_argument, "vertex out of range");
  std::vector<int> c(d_->factors.size());
  for (int i = static_cast<int>(d_->factors.size()) - 1; i >= 0; --i) {
    c[i] = v % d_->factors[i].size;
    v /= d_->factors[i].size;
  }
  return c;
}

int Graph::vertex_at(const std::vector<int>& coords) const {
  if (coords.size() != d_->factors.size())
    fail(ErrorCode::invalid_argument, "coordinate arity mismatch");
  long long v = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] < 0 || coords[i] >= d_->factors[i].size)
      fail(ErrorCode::invalid_argument, "coordinate out of range");
    v = v * d_->factors[i].size + coords[i];
  }
  return static_cast<int>(v);
}

bool Graph::is_geodesic(const Curve& c) const {
  if (c.points.empty()) return false;
  for (std::size_t i = 0; i + 1 < c.points.size(); ++i)
    if (!adjacent(c.points[i], c.points[i + 1])) return false;
  return dist(c.points.front(), c.points.back()) == c.length();
}

std::vector<Curve> Graph::geodesics(int x, int y) const {
  std::vector<Curve> out;
  std::vector<int> stack{x};
  // Extend only toward neighbors one step closer to y.
  auto dfs = [&](auto&& self, int v) -> void {
    if (v == y) {
      if (static_cast<long>(out.size()) >= max_geodesics)
        fail(ErrorCode::invalid_argument, "geodesic enumeration cap exceeded");
      out.push_back(Curve{stack});
      return;
    }
    int dvy = dist(v, y);
    for (int w : d_->adj[v]) {
      if (dist(w, y) == dvy - 1) {
        stack.push_back(w);
        self(self, w);
        stack.pop_back();
      }
    }
  };
  dfs(dfs, x);
  return out;
}

long Graph::geodesic_count(int x, int y) const {
  // DP over distance levels; cheaper than materializing curves.
  int d = dist(x, y);
  std::vector<long> count(d_->n, 0);
  count[y] = 1;
  // process vertices by decreasing dist(.,y) along geodesic cone
  std::vector<std::vector<int>> by_level(d + 1);
  for (int v = 0; v < d_->n; ++v) {
    int dv = dist(v, y);
    if (dv <= d && dist(x, v) + dv == d) by_level[dv].push_back(v);
  }
  for (int lev = 1; lev <= d; ++lev) {
    for (int v : by_level[lev]) {
      long acc = 0;
      for (int w : d_->adj[v])
        if (dist(w, y) == lev - 1) {
          acc += count[w];
          if (acc > max_geodesics) fail(ErrorCode::invalid_argument, "geodesic enumeration cap exceeded");
        }
      count[v] = acc;
    }
  }
  return count[x];
}

} // namespace w1plus
