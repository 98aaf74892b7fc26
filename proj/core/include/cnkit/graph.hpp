#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "cnkit/error.hpp"

namespace cnkit {

/// A simple undirected graph on vertices 0..n-1. Edges are stored with
/// the smaller endpoint first and sorted, which fixes factor order and
/// orientation output everywhere downstream.
class Graph {
public:
  Graph(std::size_t vertex_count, std::vector<std::pair<int, int>> edges);

  std::size_t vertex_count() const { return vertex_count_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  std::size_t degree(int v) const { return adjacency_[v].size(); }
  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }

private:
  std::size_t vertex_count_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adjacency_;
};

/// Reads the text format:
///   p <vertex_count> <edge_count>
///   e <u> <w>          (one line per edge, 0-based)
/// Lines starting with '#' are comments.
Graph parse_graph(std::istream& in);
Graph parse_graph_file(const std::string& path);

struct Bipartition {
  std::vector<int> side;                    // 0 or 1 per vertex
  std::array<std::vector<int>, 2> parts;    // sorted vertex lists
};

/// Two-colors the graph by breadth-first traversal, component by
/// component. Throws NotBipartiteError carrying an odd cycle when the
/// graph is not bipartite.
Bipartition check_bipartite(const Graph& g);

/// An orientation: directed[j] = (tail, head) for the j-th edge of the
/// graph, plus the resulting outdegree per vertex.
struct Orientation {
  std::vector<std::pair<int, int>> directed;
  std::vector<int> outdegree;

  int max_outdegree() const;
};

/// Finds an orientation with every outdegree at most k, or proves none
/// exists. Feasibility is decided exactly by maximum flow: a unit of
/// flow per edge must reach the sink through its chosen tail vertex,
/// whose capacity is k. On failure throws an infeasibility error naming
/// a vertex set whose induced subgraph has more than k edges per vertex.
Orientation orient_bounded_outdegree(const Graph& g, int k);

}  // namespace cnkit
