#include "cnkit/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>

namespace cnkit {

Graph::Graph(std::size_t vertex_count, std::vector<std::pair<int, int>> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  for (auto& [u, w] : edges_) {
    if (u < 0 || w < 0 || static_cast<std::size_t>(u) >= vertex_count_ ||
        static_cast<std::size_t>(w) >= vertex_count_) {
      throw Error(Errc::precondition, "edge endpoint out of range");
    }
    if (u == w) {
      throw Error(Errc::precondition,
                  "loop at vertex " + std::to_string(u) + " not allowed");
    }
    if (u > w) std::swap(u, w);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw Error(Errc::precondition, "duplicate edge not allowed");
  }
  adjacency_.resize(vertex_count_);
  for (const auto& [u, w] : edges_) {
    adjacency_[u].push_back(w);
    adjacency_[w].push_back(u);
  }
}

Graph parse_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  long vertex_count = -1, edge_count = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag[0] == '#') continue;
    if (tag == "p") {
      if (vertex_count >= 0) {
        throw Error(Errc::parse, "graph line " + std::to_string(line_no) +
                                     ": duplicate p line");
      }
      if (!(ls >> vertex_count >> edge_count) || vertex_count < 0 ||
          edge_count < 0) {
        throw Error(Errc::parse, "graph line " + std::to_string(line_no) +
                                     ": expected \"p <vertices> <edges>\"");
      }
    } else if (tag == "e") {
      int u, w;
      if (vertex_count < 0) {
        throw Error(Errc::parse, "graph line " + std::to_string(line_no) +
                                     ": edge before p line");
      }
      if (!(ls >> u >> w)) {
        throw Error(Errc::parse, "graph line " + std::to_string(line_no) +
                                     ": expected \"e <u> <w>\"");
      }
      edges.emplace_back(u, w);
    } else {
      throw Error(Errc::parse, "graph line " + std::to_string(line_no) +
                                   ": unknown tag \"" + tag + "\"");
    }
  }
  if (vertex_count < 0) {
    throw Error(Errc::parse, "graph file has no p line");
  }
  if (edges.size() != static_cast<std::size_t>(edge_count)) {
    throw Error(Errc::parse,
                "graph file declares " + std::to_string(edge_count) +
                    " edges but lists " + std::to_string(edges.size()));
  }
  try {
    return Graph(static_cast<std::size_t>(vertex_count), std::move(edges));
  } catch (const Error& e) {
    throw Error(Errc::parse, std::string("bad graph: ") + e.what());
  }
}

Graph parse_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(Errc::io, "cannot open graph file \"" + path + "\"");
  }
  return parse_graph(in);
}

Bipartition check_bipartite(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> side(n, -1);
  std::vector<int> parent(n, -1);
  std::vector<int> depth(n, 0);

  for (std::size_t root = 0; root < n; ++root) {
    if (side[root] != -1) continue;
    side[root] = 0;
    std::deque<int> queue{static_cast<int>(root)};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(u)) {
        if (side[w] == -1) {
          side[w] = 1 - side[u];
          parent[w] = u;
          depth[w] = depth[u] + 1;
          queue.push_back(w);
          continue;
        }
        if (side[w] != side[u]) continue;
        // Same side: walk both endpoints up to their meeting point; the
        // two paths plus the edge (u, w) close an odd cycle.
        std::vector<int> up_u{u}, up_w{w};
        int a = u, b = w;
        while (depth[a] > depth[b]) up_u.push_back(a = parent[a]);
        while (depth[b] > depth[a]) up_w.push_back(b = parent[b]);
        while (a != b) {
          up_u.push_back(a = parent[a]);
          up_w.push_back(b = parent[b]);
        }
        std::vector<int> cycle(up_u.begin(), up_u.end());
        cycle.pop_back();  // drop the shared apex from one side
        std::reverse(up_w.begin(), up_w.end());
        cycle.insert(cycle.end(), up_w.begin(), up_w.end());
        std::string text;
        for (int v : cycle) text += (text.empty() ? "" : " ") + std::to_string(v);
        throw NotBipartiteError("graph is not bipartite; odd cycle: " + text,
                                std::move(cycle));
      }
    }
  }

  Bipartition result;
  result.side = side;
  for (std::size_t v = 0; v < n; ++v) {
    result.parts[static_cast<std::size_t>(side[v])].push_back(
        static_cast<int>(v));
  }
  return result;
}

int Orientation::max_outdegree() const {
  int m = 0;
  for (int d : outdegree) m = std::max(m, d);
  return m;
}

namespace {

// Dinic's algorithm on a tiny layered network. Deterministic: arcs are
// explored in insertion order.
class MaxFlow {
public:
  explicit MaxFlow(std::size_t nodes) : head_(nodes) {}

  void add_arc(int from, int to, int capacity) {
    arcs_.push_back({to, capacity, 0});
    head_[from].push_back(static_cast<int>(arcs_.size()) - 1);
    arcs_.push_back({from, 0, 0});
    head_[to].push_back(static_cast<int>(arcs_.size()) - 1);
  }

  int flow_on(int arc_index) const { return arcs_[arc_index * 2].flow; }

  int run(int source, int sink) {
    int total = 0;
    while (build_levels(source, sink)) {
      progress_.assign(head_.size(), 0);
      while (int pushed = augment(source, sink, 1 << 30)) total += pushed;
    }
    return total;
  }

  /// Nodes reachable from `source` in the residual graph (valid after run).
  std::vector<bool> residual_reachable(int source) const {
    std::vector<bool> seen(head_.size(), false);
    std::deque<int> queue{source};
    seen[source] = true;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int a : head_[u]) {
        const Arc& arc = arcs_[a];
        if (arc.capacity - arc.flow > 0 && !seen[arc.to]) {
          seen[arc.to] = true;
          queue.push_back(arc.to);
        }
      }
    }
    return seen;
  }

private:
  struct Arc {
    int to;
    int capacity;
    int flow;
  };

  bool build_levels(int source, int sink) {
    level_.assign(head_.size(), -1);
    level_[source] = 0;
    std::deque<int> queue{source};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int a : head_[u]) {
        const Arc& arc = arcs_[a];
        if (arc.capacity - arc.flow > 0 && level_[arc.to] == -1) {
          level_[arc.to] = level_[u] + 1;
          queue.push_back(arc.to);
        }
      }
    }
    return level_[sink] != -1;
  }

  int augment(int u, int sink, int limit) {
    if (u == sink) return limit;
    for (int& i = progress_[u]; i < static_cast<int>(head_[u].size()); ++i) {
      int a = head_[u][i];
      Arc& arc = arcs_[a];
      if (arc.capacity - arc.flow <= 0 || level_[arc.to] != level_[u] + 1) {
        continue;
      }
      int pushed = augment(arc.to, sink, std::min(limit, arc.capacity - arc.flow));
      if (pushed > 0) {
        arc.flow += pushed;
        arcs_[a ^ 1].flow -= pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> head_;
  std::vector<int> level_;
  std::vector<int> progress_;
};

}  // namespace

Orientation orient_bounded_outdegree(const Graph& g, int k) {
  if (k < 0) {
    throw Error(Errc::precondition, "outdegree bound must be nonnegative");
  }
  const std::size_t m = g.edge_count();
  const std::size_t n = g.vertex_count();
  // Node layout: 0 source, 1..m edge nodes, m+1..m+n vertex nodes, m+n+1 sink.
  const int source = 0;
  const int sink = static_cast<int>(m + n) + 1;
  auto edge_node = [](std::size_t j) { return static_cast<int>(j) + 1; };
  auto vertex_node = [m](int v) { return static_cast<int>(m) + 1 + v; };

  MaxFlow net(m + n + 2);
  std::vector<int> tail_arc(m), head_arc(m);
  for (std::size_t j = 0; j < m; ++j) {
    net.add_arc(source, edge_node(j), 1);
  }
  for (std::size_t j = 0; j < m; ++j) {
    const auto& [u, w] = g.edges()[j];
    // Arc index into arcs_ is 2 * (number of add_arc calls so far).
    tail_arc[j] = static_cast<int>(m + 2 * j);
    net.add_arc(edge_node(j), vertex_node(u), 1);
    head_arc[j] = static_cast<int>(m + 2 * j + 1);
    net.add_arc(edge_node(j), vertex_node(w), 1);
  }
  for (std::size_t v = 0; v < n; ++v) {
    net.add_arc(vertex_node(static_cast<int>(v)), sink, k);
  }

  int flow = net.run(source, sink);
  if (flow != static_cast<int>(m)) {
    auto reachable = net.residual_reachable(source);
    std::string vertices;
    std::size_t count = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (reachable[static_cast<std::size_t>(vertex_node(static_cast<int>(v)))]) {
        vertices += (count++ ? " " : "") + std::to_string(v);
      }
    }
    throw Error(Errc::infeasible,
                "no orientation with outdegree <= " + std::to_string(k) +
                    "; the subgraph induced by vertices {" + vertices +
                    "} has more than " + std::to_string(k) +
                    " edges per vertex");
  }

  Orientation result;
  result.directed.reserve(m);
  result.outdegree.assign(n, 0);
  for (std::size_t j = 0; j < m; ++j) {
    const auto& [u, w] = g.edges()[j];
    // The endpoint that received the edge's unit of flow pays for it as tail.
    bool u_is_tail = net.flow_on(tail_arc[j]) > 0;
    int tail = u_is_tail ? u : w;
    int head = u_is_tail ? w : u;
    result.directed.emplace_back(tail, head);
    ++result.outdegree[tail];
  }
  return result;
}

}  // namespace cnkit
