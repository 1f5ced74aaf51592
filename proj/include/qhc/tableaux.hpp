#pragma once

#include "qhc/partitions.hpp"

#include <cstdint>
#include <vector>

namespace qhc {

// Marked alphabet 1' < 1 < 2' < 2 < ...; encoded as 2*value - primed so the
// natural order on codes is the alphabet order.
struct PrimedEntry {
  int value = 0;
  bool primed = false;
  int code() const { return 2 * value - (primed ? 1 : 0); }
  friend bool operator==(const PrimedEntry&, const PrimedEntry&) = default;
};

inline bool operator<(const PrimedEntry& a, const PrimedEntry& b) {
  return a.code() < b.code();
}

// Skew filling with marked entries; cells stored row-major.
struct SemistandardShiftedTableau {
  StrictPartition outer;
  StrictPartition inner;
  std::vector<Box> cells;
  std::vector<PrimedEntry> entries;

  std::string str() const;
};

// Reading word: bottom row to top row, left to right within a row.
std::vector<PrimedEntry> reading_word(const SemistandardShiftedTableau& t);

// Two-phase lattice condition on a word in the marked alphabet.  Phase one
// counts unprimed i over growing suffixes, phase two adds primed i over
// growing prefixes on top of the full suffix counts; letter checks whose
// index falls outside the word are skipped.
bool lattice_word_check(const std::vector<PrimedEntry>& w);

// Every value that occurs must occur unprimed before any of its primes.
bool first_letter_unprimed(const std::vector<PrimedEntry>& w);

// All semistandard fillings of gamma/lambda with content mu (mu_v letters of
// absolute value v), before the lattice and first-letter filters.
std::vector<SemistandardShiftedTableau> stembridge_candidates(
    const StrictPartition& lambda, const StrictPartition& mu,
    const StrictPartition& gamma);

// Candidates whose reading word is a lattice word with unprimed first
// letters; the Schur P structure constant f^gamma_{lambda,mu} counts them.
std::vector<SemistandardShiftedTableau> stembridge_witnesses(
    const StrictPartition& lambda, const StrictPartition& mu,
    const StrictPartition& gamma);

std::int64_t stembridge_coeff(const StrictPartition& lambda,
                              const StrictPartition& mu,
                              const StrictPartition& gamma);

// Multiplicity of L(gamma) in L(lambda) (x) L(mu):
//   f^gamma_{lambda,mu} * 2^(fl((len(lambda)+1)/2)+fl((len(mu)+1)/2)
//                            -fl((len(gamma)+1)/2)).
// Throws if the exponent is negative while f is nonzero.
std::int64_t multiplicity(const StrictPartition& lambda,
                          const StrictPartition& mu,
                          const StrictPartition& gamma);

// Standard skew tableau: entries 1..d each exactly once, strictly increasing
// along rows and columns.
struct StandardSkewTableau {
  StrictPartition outer;
  StrictPartition inner;
  std::vector<Box> cells;    // row-major
  std::vector<int> entries;  // parallel to cells

  int entry_count() const { return static_cast<int>(entries.size()); }
  Box box_of(int entry) const;
  int entry_at(const Box& b) const;  // 0 if b is not a cell
  std::string str() const;

  friend bool operator==(const StandardSkewTableau&,
                         const StandardSkewTableau&) = default;
};

std::vector<StandardSkewTableau> standard_skew_tableaux(
    const StrictPartition& outer, const StrictPartition& inner);

}  // namespace qhc
