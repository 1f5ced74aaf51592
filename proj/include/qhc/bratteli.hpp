#pragma once

#include "qhc/partitions.hpp"
#include "qhc/tableaux.hpp"

#include <nlohmann/json_fwd.hpp>

#include <optional>
#include <vector>

namespace qhc {

// Layered branching graph: row -1 holds the staircase alpha, row 0 the
// L-shape summands of L(alpha) (x) L(beta), and row i+1 the Pieri successors
// of row i, all of length exactly n.
class BratteliGraph {
 public:
  BratteliGraph(int n, int p, int depth);

  int n() const { return n_; }
  int p() const { return p_; }
  int depth() const { return depth_; }

  // row in -1..depth
  const std::vector<StrictPartition>& row(int r) const {
    return rows_.at(r + 1);
  }
  // edges out of vertex i of row r, as indices into row r+1
  const std::vector<int>& edges_from(int r, int i) const {
    return adj_.at(r + 1).at(i);
  }
  bool has_edge(int r, int from, int to) const;
  int find_vertex(int r, const StrictPartition& v) const;  // -1 if absent

  nlohmann::json to_json() const;

 private:
  int n_, p_, depth_;
  std::vector<std::vector<StrictPartition>> rows_;
  std::vector<std::vector<std::vector<int>>> adj_;
};

// Directed path alpha -> ... -> lambda, recorded by its vertex indices and
// equivalently by the standard skew tableau placing i in T(i) \ T(i-1).
class PathTableau {
 public:
  PathTableau(const BratteliGraph& g, std::vector<int> vertex_indices);

  const BratteliGraph& graph() const { return *graph_; }
  // row in -1..d
  const StrictPartition& partition_at(int row) const;
  int vertex_index(int row) const { return vertex_.at(row + 1); }

  int d() const { return graph_->depth(); }
  // Box added at step i (1 <= i <= d), i.e. T(i) \ T(i-1).
  Box box_of(int i) const { return boxes_.at(i - 1); }
  int content_of(int i) const { return content(box_of(i)); }
  // Number of boxes in the first row of T(0).
  int first_row_length() const { return partition_at(0).part(1); }

  StandardSkewTableau tableau() const;

  friend bool operator==(const PathTableau& a, const PathTableau& b) {
    return a.graph_ == b.graph_ && a.vertex_ == b.vertex_;
  }

 private:
  const BratteliGraph* graph_;
  std::vector<int> vertex_;  // per row -1..d
  std::vector<Box> boxes_;   // per step 1..d
};

// A path or the absorbing symbol star; star swallows every s_i action and
// carries the zero vector downstream.
using PathOrStar = std::optional<PathTableau>;

BratteliGraph build_graph(int n, int p, int d);

// All paths from alpha to lambda (lambda must be a row-d vertex).
std::vector<PathTableau> paths_to(const BratteliGraph& g,
                                  const StrictPartition& lambda);

// s_i action on paths: for i >= 1 swap entries i and i+1 when the result is
// standard, else star; for i = 0 switch to the unique other row-0 partition
// under T(1) when it exists, else star.
PathOrStar s_action(int i, const PathOrStar& t);

// Same skew shape, entries 1..d filled left to right, top row to bottom row.
PathTableau row_reading_tableau(const PathTableau& t);

}  // namespace qhc
