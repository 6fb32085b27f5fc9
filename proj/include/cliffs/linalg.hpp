#pragma once

#include <gmpxx.h>

#include <chrono>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace cliffs {

// Sorted by column, no zero entries.
using SparseRow = std::vector<std::pair<std::uint32_t, mpz_class>>;

class Deadline {
 public:
  Deadline() = default;
  explicit Deadline(double seconds);

  bool expired() const;
  // Throws TimeBudgetExceeded once expired.
  void check(const char* stage) const;

 private:
  std::optional<std::chrono::steady_clock::time_point> end_;
};

// Divides by the content and makes the leading entry positive.
void normalize(SparseRow& row);

// Row echelon form by fraction-free elimination. Rows are bucketed by leading
// column and processed column by column; the pivot of a bucket is its row with
// the smallest leading magnitude (earliest on ties).
std::vector<SparseRow> echelon(std::vector<SparseRow> rows, std::size_t ncols, const Deadline& deadline = {});
std::size_t rank(std::vector<SparseRow> rows, std::size_t ncols, const Deadline& deadline = {});

// Basis of {y : y M = 0}; vectors are indexed by row number.
std::vector<SparseRow> left_kernel(const std::vector<SparseRow>& rows, std::size_t ncols,
                                   const Deadline& deadline = {});

}  // namespace cliffs
