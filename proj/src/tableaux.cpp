#include "qhc/tableaux.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qhc {

namespace {

std::string entry_str(const PrimedEntry& e) {
  return std::to_string(e.value) + (e.primed ? "'" : "");
}

}  // namespace

std::string SemistandardShiftedTableau::str() const {
  std::ostringstream os;
  int row = 0;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].row != row) {
      if (row) os << " / ";
      row = cells[i].row;
    } else {
      os << " ";
    }
    os << entry_str(entries[i]);
  }
  return os.str();
}

std::vector<PrimedEntry> reading_word(const SemistandardShiftedTableau& t) {
  std::vector<PrimedEntry> w;
  int max_row = 0;
  for (const Box& b : t.cells) max_row = std::max(max_row, b.row);
  for (int r = max_row; r >= 1; --r)
    for (std::size_t i = 0; i < t.cells.size(); ++i)
      if (t.cells[i].row == r) w.push_back(t.entries[i]);
  return w;
}

bool lattice_word_check(const std::vector<PrimedEntry>& w) {
  const int t = static_cast<int>(w.size());
  if (t == 0) return true;
  int maxv = 0;
  for (const PrimedEntry& e : w) maxv = std::max(maxv, e.value);
  std::vector<int> m(maxv + 2, 0);  // m[i] for 0 <= i <= maxv+1

  // The counters m_i are compared for i >= 1, and each letter is guarded by
  // the counts just before it is absorbed; the worked example and the
  // single-box and single-column Pieri fillings force this reading.
  auto violates = [&](const PrimedEntry& next, bool phase_one) {
    for (int i = 1; i <= maxv; ++i) {
      if (m[i] != m[i + 1]) continue;
      if (phase_one) {
        if (next.value == i + 1) return true;  // i+1 or (i+1)'
      } else {
        if (!next.primed && next.value == i) return true;
        if (next.primed && next.value == i + 1) return true;
      }
    }
    return false;
  };

  // Phase one: unprimed counts over growing suffixes, scanned right to left.
  for (int k = t - 1; k >= 0; --k) {
    if (violates(w[k], true)) return false;
    if (!w[k].primed) ++m[w[k].value];
  }
  // Phase two: primed counts over growing prefixes, on top of m_i(t).
  for (int k = 0; k < t; ++k) {
    if (violates(w[k], false)) return false;
    if (w[k].primed) ++m[w[k].value];
  }
  return true;
}

bool first_letter_unprimed(const std::vector<PrimedEntry>& w) {
  std::map<int, bool> seen;
  for (const PrimedEntry& e : w) {
    if (!seen.count(e.value)) {
      if (e.primed) return false;
      seen[e.value] = true;
    }
  }
  return true;
}

namespace {

struct CandidateSearch {
  const std::vector<Box>& cells;
  std::vector<PrimedEntry>& entry;
  std::vector<int> remaining;  // per absolute value, 1-based
  std::vector<SemistandardShiftedTableau>* out;
  const StrictPartition* outer;
  const StrictPartition* inner;

  void fill(std::size_t at) {
    if (at == cells.size()) {
      out->push_back({*outer, *inner, cells, entry});
      return;
    }
    for (int v = 1; v < static_cast<int>(remaining.size()); ++v) {
      if (remaining[v] == 0) continue;
      for (int primed = 1; primed >= 0; --primed) {
        PrimedEntry e{v, primed != 0};
        if (!admissible(at, e)) continue;
        entry[at] = e;
        --remaining[v];
        fill(at + 1);
        ++remaining[v];
      }
    }
  }

  bool admissible(std::size_t at, const PrimedEntry& e) const {
    const Box& b = cells[at];
    for (std::size_t j = 0; j < at; ++j) {
      const Box& a = cells[j];
      const PrimedEntry& f = entry[j];
      if (a.row == b.row) {
        if (a.col + 1 == b.col && e.code() < f.code()) return false;
        if (e.primed && f == e) return false;  // primed once per row
      }
      if (a.col == b.col) {
        if (a.row + 1 == b.row && e.code() < f.code()) return false;
        if (!e.primed && f == e) return false;  // unprimed once per column
      }
    }
    return true;
  }
};

}  // namespace

std::vector<SemistandardShiftedTableau> stembridge_candidates(
    const StrictPartition& lambda, const StrictPartition& mu,
    const StrictPartition& gamma) {
  std::vector<SemistandardShiftedTableau> out;
  if (!gamma.contains(lambda)) return out;
  if (gamma.size() != lambda.size() + mu.size()) return out;
  std::vector<Box> cells = gamma.skew_boxes(lambda);
  std::vector<PrimedEntry> entry(cells.size());
  std::vector<int> remaining(mu.length() + 1, 0);
  for (int v = 1; v <= mu.length(); ++v) remaining[v] = mu.part(v);
  CandidateSearch search{cells, entry, remaining, &out, &gamma, &lambda};
  search.fill(0);
  return out;
}

std::vector<SemistandardShiftedTableau> stembridge_witnesses(
    const StrictPartition& lambda, const StrictPartition& mu,
    const StrictPartition& gamma) {
  std::vector<SemistandardShiftedTableau> out;
  for (const auto& t : stembridge_candidates(lambda, mu, gamma)) {
    std::vector<PrimedEntry> w = reading_word(t);
    if (first_letter_unprimed(w) && lattice_word_check(w)) out.push_back(t);
  }
  return out;
}

std::int64_t stembridge_coeff(const StrictPartition& lambda,
                              const StrictPartition& mu,
                              const StrictPartition& gamma) {
  return static_cast<std::int64_t>(stembridge_witnesses(lambda, mu, gamma).size());
}

std::int64_t multiplicity(const StrictPartition& lambda,
                          const StrictPartition& mu,
                          const StrictPartition& gamma) {
  std::int64_t f = stembridge_coeff(lambda, mu, gamma);
  if (f == 0) return 0;
  int exponent = (lambda.length() + 1) / 2 + (mu.length() + 1) / 2 -
                 (gamma.length() + 1) / 2;
  if (exponent < 0)
    throw std::domain_error(
        "multiplicity: negative power of two with nonzero structure constant");
  return f << exponent;
}

Box StandardSkewTableau::box_of(int entry) const {
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i] == entry) return cells[i];
  throw std::out_of_range("entry " + std::to_string(entry) +
                          " not in tableau");
}

int StandardSkewTableau::entry_at(const Box& b) const {
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (cells[i] == b) return entries[i];
  return 0;
}

std::string StandardSkewTableau::str() const {
  std::ostringstream os;
  int row = 0;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].row != row) {
      if (row) os << " / ";
      row = cells[i].row;
    } else {
      os << " ";
    }
    os << entries[i];
  }
  return os.str();
}

namespace {

void standard_fill(const std::vector<Box>& cells, std::size_t at,
                   std::vector<int>& entry, unsigned used,
                   const StrictPartition& outer, const StrictPartition& inner,
                   std::vector<StandardSkewTableau>& out) {
  if (at == cells.size()) {
    out.push_back({outer, inner, cells, entry});
    return;
  }
  const Box& b = cells[at];
  for (int v = 1; v <= static_cast<int>(cells.size()); ++v) {
    if (used & (1u << v)) continue;
    bool ok = true;
    for (std::size_t j = 0; j < at && ok; ++j) {
      const Box& a = cells[j];
      if (a.row == b.row && a.col + 1 == b.col && entry[j] > v) ok = false;
      if (a.col == b.col && a.row + 1 == b.row && entry[j] > v) ok = false;
    }
    if (!ok) continue;
    entry[at] = v;
    standard_fill(cells, at + 1, entry, used | (1u << v), outer, inner, out);
  }
}

}  // namespace

std::vector<StandardSkewTableau> standard_skew_tableaux(
    const StrictPartition& outer, const StrictPartition& inner) {
  std::vector<Box> cells = outer.skew_boxes(inner);
  if (cells.size() >= 31)
    throw std::invalid_argument("skew shape too large to enumerate");
  std::vector<int> entry(cells.size(), 0);
  std::vector<StandardSkewTableau> out;
  standard_fill(cells, 0, entry, 0, outer, inner, out);
  return out;
}

}  // namespace qhc
