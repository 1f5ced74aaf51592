#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace qhc {

struct Box {
  int row = 0;  // 1-based
  int col = 0;  // 1-based; row i of a shifted diagram occupies cols i..i+len-1
  friend bool operator==(const Box&, const Box&) = default;
  friend auto operator<=>(const Box&, const Box&) = default;
};

inline int content(const Box& b) { return b.col - b.row; }

// Strictly decreasing sequence of positive integers (trailing zeros implied).
class StrictPartition {
 public:
  StrictPartition() = default;
  explicit StrictPartition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  int part(int row) const;  // 1-based, 0 beyond the last row

  bool contains(const StrictPartition& inner) const;
  StrictPartition with_box_added(int row) const;  // throws if not strict

  // Boxes of the shifted diagram, row-major.
  std::vector<Box> boxes() const;
  // Boxes of *this not in inner, row-major.
  std::vector<Box> skew_boxes(const StrictPartition& inner) const;

  std::string str() const;  // "7,5,3,2,1" ("-" for the empty partition)

  friend bool operator==(const StrictPartition&, const StrictPartition&) =
      default;
  // Lexicographic on parts; rows of the Bratteli graph sort descending.
  friend auto operator<=>(const StrictPartition&, const StrictPartition&) =
      default;

 private:
  std::vector<int> parts_;
};

StrictPartition staircase(int n);
bool is_staircase(const StrictPartition& p);

// All strict mu with |mu| = |lambda| + 1, lambda in mu, length(mu) <= n.
std::vector<StrictPartition> pieri_successors(const StrictPartition& lambda,
                                              int n);

// Partitions obtained from the staircase alpha by pasting an
// upside-down L of p boxes (s0 >= 1 in row 1, then one box in each of rows
// 2..k+1), keeping the result strict of length <= n.
std::vector<StrictPartition> l_shape_successors(const StrictPartition& alpha,
                                                int p);

// Number of marked shifted semistandard tableaux of straight shape lambda
// with entries 1' < 1 < ... < n' < n and no primed entries on the main
// diagonal; P_lambda(1,...,1) with n ones.
std::int64_t count_marked_shifted_tableaux(const StrictPartition& lambda,
                                           int n);

// dim L(lambda) for q(n): 2^floor((len+1)/2) * P_lambda(1^n).
std::int64_t simple_module_dimension(const StrictPartition& lambda, int n);

}  // namespace qhc
