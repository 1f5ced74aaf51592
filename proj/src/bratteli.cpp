#include "qhc/bratteli.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace qhc {

BratteliGraph::BratteliGraph(int n, int p, int depth)
    : n_(n), p_(p), depth_(depth) {
  if (n < 1 || p < 1 || depth < 0)
    throw std::invalid_argument("bratteli graph needs n >= 1, p >= 1, d >= 0");
  rows_.push_back({staircase(n)});
  rows_.push_back(l_shape_successors(staircase(n), p));
  for (int r = 1; r <= depth; ++r) {
    std::set<StrictPartition, std::greater<>> next;
    for (const StrictPartition& v : rows_.back())
      for (const StrictPartition& s : pieri_successors(v, n)) next.insert(s);
    rows_.emplace_back(next.begin(), next.end());
  }
  adj_.resize(rows_.size() - 1);
  // alpha connects to every row-0 vertex.
  adj_[0].resize(1);
  for (int j = 0; j < static_cast<int>(rows_[1].size()); ++j)
    adj_[0][0].push_back(j);
  for (std::size_t layer = 1; layer + 1 < rows_.size(); ++layer) {
    adj_[layer].resize(rows_[layer].size());
    for (std::size_t i = 0; i < rows_[layer].size(); ++i)
      for (const StrictPartition& s : pieri_successors(rows_[layer][i], n_)) {
        int j = find_vertex(static_cast<int>(layer), s);
        if (j >= 0) adj_[layer][i].push_back(j);
      }
  }
}

bool BratteliGraph::has_edge(int r, int from, int to) const {
  const auto& e = edges_from(r, from);
  return std::find(e.begin(), e.end(), to) != e.end();
}

int BratteliGraph::find_vertex(int r, const StrictPartition& v) const {
  const auto& row_vec = rows_.at(r + 1);
  for (std::size_t i = 0; i < row_vec.size(); ++i)
    if (row_vec[i] == v) return static_cast<int>(i);
  return -1;
}

nlohmann::json BratteliGraph::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row_vec : rows_) {
    nlohmann::json jr = nlohmann::json::array();
    for (const StrictPartition& v : row_vec) jr.push_back(v.parts());
    rows.push_back(jr);
  }
  nlohmann::json edges = nlohmann::json::array();
  for (std::size_t layer = 0; layer < adj_.size(); ++layer)
    for (std::size_t i = 0; i < adj_[layer].size(); ++i)
      for (int j : adj_[layer][i])
        edges.push_back({static_cast<int>(layer) - 1, static_cast<int>(i), j});
  return {{"n", n_},       {"p", p_},       {"depth", depth_},
          {"rows", rows},  {"edges", edges}};
}

PathTableau::PathTableau(const BratteliGraph& g, std::vector<int> vertex)
    : graph_(&g), vertex_(std::move(vertex)) {
  if (static_cast<int>(vertex_.size()) != g.depth() + 2)
    throw std::invalid_argument("path has wrong number of vertices");
  for (int r = -1; r < g.depth(); ++r)
    if (!g.has_edge(r, vertex_[r + 1], vertex_[r + 2]))
      throw std::invalid_argument("path uses a missing edge");
  for (int i = 1; i <= g.depth(); ++i) {
    std::vector<Box> diff =
        partition_at(i).skew_boxes(partition_at(i - 1));
    if (diff.size() != 1)
      throw std::invalid_argument("consecutive path vertices differ badly");
    boxes_.push_back(diff[0]);
  }
}

const StrictPartition& PathTableau::partition_at(int row) const {
  return graph_->row(row)[vertex_.at(row + 1)];
}

StandardSkewTableau PathTableau::tableau() const {
  const StrictPartition& outer = partition_at(d());
  const StrictPartition& inner = partition_at(0);
  std::vector<Box> cells = outer.skew_boxes(inner);
  std::vector<int> entries(cells.size(), 0);
  for (int i = 1; i <= d(); ++i) {
    auto it = std::find(cells.begin(), cells.end(), box_of(i));
    entries[it - cells.begin()] = i;
  }
  return {outer, inner, cells, entries};
}

BratteliGraph build_graph(int n, int p, int d) {
  return BratteliGraph(n, p, d);
}

std::vector<PathTableau> paths_to(const BratteliGraph& g,
                                  const StrictPartition& lambda) {
  int target = g.find_vertex(g.depth(), lambda);
  if (target < 0)
    throw std::invalid_argument("partition " + lambda.str() +
                                " is not a row-" + std::to_string(g.depth()) +
                                " vertex");
  std::vector<PathTableau> out;
  std::vector<int> vertex(g.depth() + 2, 0);
  std::function<void(int)> walk = [&](int row) {
    if (row == g.depth()) {
      if (vertex[row + 1] == target) out.emplace_back(g, vertex);
      return;
    }
    for (int j : g.edges_from(row, vertex[row + 1])) {
      vertex[row + 2] = j;
      walk(row + 1);
    }
  };
  walk(-1);
  return out;
}

PathOrStar s_action(int i, const PathOrStar& t) {
  if (!t) return std::nullopt;
  const BratteliGraph& g = t->graph();
  const int d = g.depth();
  if (i < 0 || i > d - 1)
    throw std::invalid_argument("s_" + std::to_string(i) +
                                " needs graph depth >= " + std::to_string(i + 1));
  std::vector<int> vertex(d + 2);
  for (int r = -1; r <= d; ++r) vertex[r + 1] = t->vertex_index(r);

  if (i == 0) {
    const StrictPartition& mu = t->partition_at(1);
    const auto& row0 = g.row(0);
    for (int j = 0; j < static_cast<int>(row0.size()); ++j) {
      if (j == t->vertex_index(0)) continue;
      if (!mu.contains(row0[j])) continue;
      if (!g.has_edge(0, j, t->vertex_index(1))) continue;
      vertex[1] = j;
      return PathTableau(g, vertex);
    }
    return std::nullopt;
  }

  // Swapping entries i and i+1 replaces T(i) by T(i-1) + box(i+1); the swap
  // is standard exactly when the two boxes share no row or column.
  Box bi = t->box_of(i);
  Box bj = t->box_of(i + 1);
  if (bi.row == bj.row || bi.col == bj.col) return std::nullopt;
  StrictPartition swapped = t->partition_at(i - 1).with_box_added(bj.row);
  int idx = g.find_vertex(i, swapped);
  if (idx < 0) throw std::logic_error("swapped path left the graph");
  vertex[i + 1] = idx;
  return PathTableau(g, vertex);
}

PathTableau row_reading_tableau(const PathTableau& t) {
  const BratteliGraph& g = t.graph();
  const StrictPartition& outer = t.partition_at(g.depth());
  const StrictPartition& inner = t.partition_at(0);
  std::vector<Box> cells = outer.skew_boxes(inner);  // row-major already
  std::vector<int> vertex(g.depth() + 2);
  vertex[0] = 0;
  vertex[1] = t.vertex_index(0);
  StrictPartition shape = inner;
  for (int k = 1; k <= g.depth(); ++k) {
    shape = shape.with_box_added(cells[k - 1].row);
    int idx = g.find_vertex(k, shape);
    if (idx < 0)
      throw std::logic_error("row reading chain left the graph");
    vertex[k + 1] = idx;
  }
  return PathTableau(g, vertex);
}

}  // namespace qhc
