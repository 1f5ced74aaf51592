#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qhc/bratteli.hpp"

#include <nlohmann/json.hpp>

#include <set>

using namespace qhc;

namespace {

StrictPartition sp(std::vector<int> parts) {
  return StrictPartition(std::move(parts));
}

std::set<StrictPartition> successors(const BratteliGraph& g, int row,
                                     const StrictPartition& v) {
  std::set<StrictPartition> out;
  int idx = g.find_vertex(row, v);
  REQUIRE(idx >= 0);
  for (int j : g.edges_from(row, idx)) out.insert(g.row(row + 1)[j]);
  return out;
}

}  // namespace

TEST_CASE("bratteli graph of the n=5 p=3 example") {
  BratteliGraph g = build_graph(5, 3, 2);
  CHECK(g.row(-1).size() == 1);
  CHECK(g.row(0).size() == 3);
  CHECK(g.row(1).size() == 5);
  CHECK(g.row(2).size() == 7);

  StrictPartition a1 = sp({8, 4, 3, 2, 1});
  StrictPartition a2 = sp({7, 5, 3, 2, 1});
  StrictPartition a3 = sp({6, 5, 4, 2, 1});
  StrictPartition b1 = sp({9, 4, 3, 2, 1});
  StrictPartition b2 = sp({8, 5, 3, 2, 1});
  StrictPartition b3 = sp({7, 6, 3, 2, 1});
  StrictPartition b4 = sp({7, 5, 4, 2, 1});
  StrictPartition b5 = sp({6, 5, 4, 3, 1});
  CHECK(successors(g, -1, staircase(5)) ==
        std::set<StrictPartition>{a1, a2, a3});
  CHECK(successors(g, 0, a1) == std::set<StrictPartition>{b1, b2});
  CHECK(successors(g, 0, a2) == std::set<StrictPartition>{b2, b3, b4});
  CHECK(successors(g, 0, a3) == std::set<StrictPartition>{b4, b5});

  // Every partition in rows >= 0 has length exactly n.
  for (int r = 0; r <= 2; ++r)
    for (const auto& v : g.row(r)) CHECK(v.length() == 5);
}

TEST_CASE("degenerate depth-zero graph") {
  BratteliGraph g = build_graph(2, 1, 0);
  CHECK(g.row(-1) == std::vector<StrictPartition>{staircase(2)});
  CHECK(g.row(0) == std::vector<StrictPartition>{sp({3, 1})});
  auto paths = paths_to(g, sp({3, 1}));
  CHECK(paths.size() == 1);
}

TEST_CASE("paths to C5 and the printed tableau") {
  BratteliGraph g = build_graph(5, 3, 2);
  StrictPartition c5 = sp({7, 6, 4, 2, 1});
  auto paths = paths_to(g, c5);
  REQUIRE(paths.size() == 3);

  // The printed path alpha -> A2 -> B3 -> C5 places 1 at (2,7), 2 at (3,6).
  bool found = false;
  for (const auto& t : paths) {
    if (t.partition_at(0) == sp({7, 5, 3, 2, 1}) &&
        t.partition_at(1) == sp({7, 6, 3, 2, 1})) {
      found = true;
      CHECK(t.box_of(1) == Box{2, 7});
      CHECK(t.box_of(2) == Box{3, 6});
      CHECK(t.content_of(1) == 5);
      CHECK(t.content_of(2) == 3);
    }
  }
  CHECK(found);

  CHECK_THROWS(paths_to(g, sp({9, 6, 4, 2, 1})));
}

TEST_CASE("s0 action switches the row-0 vertex when possible") {
  // n = 4, p = 3 reproduces the s0 example: the two row-0 partitions under
  // T(1) have first rows differing by one box.
  BratteliGraph g = build_graph(4, 3, 4);
  for (const auto& lambda : g.row(4)) {
    for (const auto& t : paths_to(g, lambda)) {
      PathOrStar s = s_action(0, t);
      if (!s) continue;
      CHECK(s->partition_at(0) != t.partition_at(0));
      for (int r = 1; r <= 4; ++r)
        CHECK(s->partition_at(r) == t.partition_at(r));
      int m1 = t.partition_at(0).part(1);
      int m2 = s->partition_at(0).part(1);
      CHECK(std::abs(m1 - m2) == 1);
      // involution
      PathOrStar back = s_action(0, s);
      REQUIRE(back.has_value());
      CHECK(*back == t);
    }
  }
}

TEST_CASE("s_i actions are involutions fixing other rows") {
  BratteliGraph g = build_graph(3, 2, 3);
  for (const auto& lambda : g.row(3)) {
    for (const auto& t : paths_to(g, lambda)) {
      for (int i = 1; i <= 2; ++i) {
        PathOrStar s = s_action(i, t);
        if (!s) continue;
        for (int r = -1; r <= 3; ++r)
          if (r != i)
            CHECK(s->partition_at(r) == t.partition_at(r));
        PathOrStar back = s_action(i, s);
        REQUIRE(back.has_value());
        CHECK(*back == t);
      }
      // star absorbs everything
      CHECK(!s_action(1, PathOrStar{}));
    }
  }
}

TEST_CASE("transitivity of s0..s_{d-1} on paths") {
  for (auto [n, p, d] : {std::tuple{2, 2, 3}, {3, 2, 2}, {4, 3, 2}}) {
    BratteliGraph g = build_graph(n, p, d);
    for (const auto& lambda : g.row(d)) {
      auto paths = paths_to(g, lambda);
      std::vector<bool> reached(paths.size(), false);
      std::vector<std::size_t> queue{0};
      reached[0] = true;
      while (!queue.empty()) {
        std::size_t at = queue.back();
        queue.pop_back();
        for (int i = 0; i <= d - 1; ++i) {
          PathOrStar s = s_action(i, paths[at]);
          if (!s) continue;
          for (std::size_t j = 0; j < paths.size(); ++j)
            if (paths[j] == *s && !reached[j]) {
              reached[j] = true;
              queue.push_back(j);
            }
        }
      }
      for (bool r : reached) CHECK(r);
    }
  }
}

TEST_CASE("row reading tableau is reachable and shape-preserving") {
  BratteliGraph g = build_graph(3, 2, 3);
  for (const auto& lambda : g.row(3)) {
    for (const auto& t : paths_to(g, lambda)) {
      PathTableau row = row_reading_tableau(t);
      CHECK(row.partition_at(0) == t.partition_at(0));
      CHECK(row.partition_at(3) == t.partition_at(3));
      CHECK(row_reading_tableau(row) == row);
      // row-reading fills cells in row-major order with 1..d
      auto tab = row.tableau();
      for (std::size_t i = 0; i < tab.cells.size(); ++i)
        CHECK(tab.entries[i] == static_cast<int>(i) + 1);
      // reachable from t by adjacent transpositions: breadth-first search
      // over s_1..s_{d-1}
      auto paths = paths_to(g, lambda);
      std::vector<bool> reached(paths.size(), false);
      std::vector<std::size_t> queue;
      for (std::size_t j = 0; j < paths.size(); ++j)
        if (paths[j] == t) {
          reached[j] = true;
          queue.push_back(j);
        }
      bool found = false;
      while (!queue.empty()) {
        std::size_t at = queue.back();
        queue.pop_back();
        if (paths[at] == row) found = true;
        for (int i = 1; i <= 2; ++i) {
          PathOrStar s = s_action(i, paths[at]);
          if (!s) continue;
          for (std::size_t j = 0; j < paths.size(); ++j)
            if (paths[j] == *s && !reached[j]) {
              reached[j] = true;
              queue.push_back(j);
            }
        }
      }
      CHECK(found);
    }
  }
}

TEST_CASE("paths biject with standard skew tableaux over row-0 shapes") {
  for (auto [n, p, d] : {std::tuple{2, 2, 3}, {4, 3, 2}}) {
    BratteliGraph g = build_graph(n, p, d);
    for (const auto& lambda : g.row(d)) {
      std::size_t total = 0;
      for (const auto& mu : g.row(0))
        if (lambda.contains(mu))
          total += standard_skew_tableaux(lambda, mu).size();
      CHECK(paths_to(g, lambda).size() == total);
      for (const auto& t : paths_to(g, lambda)) {
        auto tab = t.tableau();
        // entries strictly increase along rows and columns
        for (std::size_t i = 0; i < tab.cells.size(); ++i)
          for (std::size_t j = 0; j < tab.cells.size(); ++j) {
            if (tab.cells[i].row == tab.cells[j].row &&
                tab.cells[i].col < tab.cells[j].col)
              CHECK(tab.entries[i] < tab.entries[j]);
            if (tab.cells[i].col == tab.cells[j].col &&
                tab.cells[i].row < tab.cells[j].row)
              CHECK(tab.entries[i] < tab.entries[j]);
          }
      }
    }
  }
}

TEST_CASE("json export shape") {
  BratteliGraph g = build_graph(2, 1, 1);
  nlohmann::json j = g.to_json();
  CHECK(j["n"] == 2);
  CHECK(j["p"] == 1);
  CHECK(j["depth"] == 1);
  CHECK(j["rows"].size() == 3);
  CHECK(j["rows"][0][0] == nlohmann::json::array({2, 1}));
  for (const auto& e : j["edges"]) {
    CHECK(e.size() == 3);
    CHECK(e[0].get<int>() >= -1);
  }
}
