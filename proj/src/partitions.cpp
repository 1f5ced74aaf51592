#include "qhc/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qhc {

StrictPartition::StrictPartition(std::vector<int> parts)
    : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw std::invalid_argument("partition parts must be positive");
    if (i + 1 < parts_.size() && parts_[i] <= parts_[i + 1])
      throw std::invalid_argument("partition is not strictly decreasing");
  }
}

int StrictPartition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int StrictPartition::part(int row) const {
  return (row >= 1 && row <= length()) ? parts_[row - 1] : 0;
}

bool StrictPartition::contains(const StrictPartition& inner) const {
  if (inner.length() > length()) return false;
  for (int i = 1; i <= inner.length(); ++i)
    if (inner.part(i) > part(i)) return false;
  return true;
}

StrictPartition StrictPartition::with_box_added(int row) const {
  std::vector<int> p = parts_;
  if (row == length() + 1)
    p.push_back(1);
  else if (row >= 1 && row <= length())
    p[row - 1] += 1;
  else
    throw std::invalid_argument("cannot add a box in row " +
                                std::to_string(row));
  return StrictPartition(p);  // throws if the result is not strict
}

std::vector<Box> StrictPartition::boxes() const {
  std::vector<Box> out;
  for (int r = 1; r <= length(); ++r)
    for (int c = r; c < r + part(r); ++c) out.push_back({r, c});
  return out;
}

std::vector<Box> StrictPartition::skew_boxes(
    const StrictPartition& inner) const {
  if (!contains(inner))
    throw std::invalid_argument("inner partition not contained in outer");
  std::vector<Box> out;
  for (int r = 1; r <= length(); ++r)
    for (int c = r + inner.part(r); c < r + part(r); ++c) out.push_back({r, c});
  return out;
}

std::string StrictPartition::str() const {
  if (parts_.empty()) return "-";
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ",";
    os << parts_[i];
  }
  return os.str();
}

StrictPartition staircase(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = n - i;
  return StrictPartition(p);
}

bool is_staircase(const StrictPartition& p) {
  return p == staircase(p.length());
}

std::vector<StrictPartition> pieri_successors(const StrictPartition& lambda,
                                              int n) {
  std::vector<StrictPartition> out;
  for (int row = 1; row <= std::min(lambda.length() + 1, n); ++row) {
    try {
      out.push_back(lambda.with_box_added(row));
    } catch (const std::invalid_argument&) {
      // not strict; skip
    }
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<StrictPartition> l_shape_successors(const StrictPartition& alpha,
                                                int p) {
  if (p < 1) throw std::invalid_argument("l_shape_successors requires p >= 1");
  if (!is_staircase(alpha))
    throw std::invalid_argument("alpha must be a staircase");
  const int n = alpha.length();
  std::vector<StrictPartition> out;
  // k boxes go one each into rows 2..k+1, the remaining s0 = p-k into row 1.
  for (int k = 0; k <= std::min(p - 1, n - 1); ++k) {
    std::vector<int> parts = alpha.parts();
    parts[0] += p - k;
    for (int r = 2; r <= k + 1; ++r) parts[r - 1] += 1;
    out.emplace_back(parts);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

namespace {

// Entry codes for marked tableaux: 2v for v unprimed, 2v-1 for v'.
// Order 1' < 1 < 2' < 2 < ... is the natural order on codes.
bool marked_fill(const std::vector<Box>& cells, std::size_t at,
                 std::vector<int>& entry, int n, std::int64_t& count) {
  if (at == cells.size()) {
    ++count;
    return true;
  }
  const Box& b = cells[at];
  for (int v = 1; v <= n; ++v) {
    for (int primed = 1; primed >= 0; --primed) {
      if (primed && b.row == b.col) continue;  // no primes on the diagonal
      int code = 2 * v - primed;
      bool ok = true;
      for (std::size_t j = 0; j < at && ok; ++j) {
        const Box& a = cells[j];
        int ca = entry[j];
        if (a.row == b.row) {
          if (a.col == b.col - 1 && ca > code) ok = false;     // row weak
          if (primed && ca == code) ok = false;                // v' once a row
        }
        if (a.col == b.col) {
          if (a.row == b.row - 1 && ca > code) ok = false;     // column weak
          if (!primed && ca == code) ok = false;               // v once a col
        }
      }
      if (!ok) continue;
      entry[at] = code;
      marked_fill(cells, at + 1, entry, n, count);
    }
  }
  return false;
}

}  // namespace

std::int64_t count_marked_shifted_tableaux(const StrictPartition& lambda,
                                           int n) {
  std::vector<Box> cells = lambda.boxes();
  std::vector<int> entry(cells.size(), 0);
  std::int64_t count = 0;
  marked_fill(cells, 0, entry, n, count);
  return count;
}

std::int64_t simple_module_dimension(const StrictPartition& lambda, int n) {
  if (lambda.length() > n)
    throw std::invalid_argument("partition longer than n");
  std::int64_t factor = 1;
  for (int i = 0; i < (lambda.length() + 1) / 2; ++i) factor *= 2;
  return factor * count_marked_shifted_tableaux(lambda, n);
}

}  // namespace qhc
