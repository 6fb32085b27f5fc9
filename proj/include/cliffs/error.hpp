#pragma once

#include <stdexcept>
#include <string>

namespace cliffs {

enum class Errc {
  horizon_exceeded,
  not_dominated,
  length_mismatch,
  not_comparable,
  slot_out_of_range,
  basis_mismatch,
  not_unimodal,
  not_closed,
  not_a_sublattice,
  not_weakly_increasing,
  parse_error,
  time_budget_exceeded,
  expansion_limit,
  not_binary_word,
  empty_part,
  not_a_cliff,
  not_a_permutation,
  malformed_tree,
  not_a_hill,
  bad_endpoint,
  path_below_axis,
  invalid_argument,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Resource-type failures map to a distinct CLI exit code.
bool is_resource_error(Errc code);

}  // namespace cliffs
