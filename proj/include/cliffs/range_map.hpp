#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cliffs/word.hpp"

namespace cliffs {

// An eventually constant map N_{>0} -> N stored as prefix + tail with the
// last prefix entry different from the tail. Truncated arithmetic maps also
// carry a horizon: words longer than the horizon are rejected.
class RangeMap {
 public:
  RangeMap() = default;

  static RangeMap constant(Letter c);
  static RangeMap arithmetic(Letter m, std::size_t horizon);
  static RangeMap from_values(std::vector<Letter> prefix, Letter tail);

  // delta(i), 1-based.
  Letter operator()(std::size_t i) const;

  const std::vector<Letter>& prefix() const noexcept { return prefix_; }
  Letter tail() const noexcept { return tail_; }
  std::optional<std::size_t> horizon() const noexcept { return horizon_; }
  // Step of an arithmetic map, when the map was built as one.
  std::optional<Letter> arithmetic_step() const noexcept { return step_; }

  bool is_constant() const noexcept { return prefix_.empty(); }

  // Throws HorizonExceeded when a word of this length is not covered.
  void check_length(std::size_t length) const;

  friend bool operator==(const RangeMap&, const RangeMap&) = default;

 private:
  std::vector<Letter> prefix_;
  Letter tail_ = 0;
  std::optional<std::size_t> horizon_;
  std::optional<Letter> step_;
};

RangeMap parse_range_map(std::string_view text);
std::string to_string(const RangeMap& delta);

bool is_unimodal(const RangeMap& delta);
bool is_weakly_increasing(const RangeMap& delta);
bool is_one_dominated(const RangeMap& delta);
RangeMap closure_bar(const RangeMap& delta);
std::optional<std::size_t> first_change_index(const RangeMap& delta);
std::size_t domination_index(const RangeMap& delta);

// For a non-unimodal map, indices i1 < i2 < i3 with delta(i1) > delta(i2) < delta(i3).
struct UnimodalityWitness {
  std::size_t i1, i2, i3;
};
std::optional<UnimodalityWitness> unimodality_witness(const RangeMap& delta);

}  // namespace cliffs
