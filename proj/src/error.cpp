#include "cliffs/error.hpp"

namespace cliffs {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::horizon_exceeded: return "HorizonExceeded";
    case Errc::not_dominated: return "NotDominated";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::not_comparable: return "NotComparable";
    case Errc::slot_out_of_range: return "SlotOutOfRange";
    case Errc::basis_mismatch: return "BasisMismatch";
    case Errc::not_unimodal: return "NotUnimodal";
    case Errc::not_closed: return "NotClosed";
    case Errc::not_a_sublattice: return "NotASublattice";
    case Errc::not_weakly_increasing: return "NotWeaklyIncreasing";
    case Errc::parse_error: return "ParseError";
    case Errc::time_budget_exceeded: return "TimeBudgetExceeded";
    case Errc::expansion_limit: return "ExpansionLimit";
    case Errc::not_binary_word: return "NotBinaryWord";
    case Errc::empty_part: return "EmptyPart";
    case Errc::not_a_cliff: return "NotACliff";
    case Errc::not_a_permutation: return "NotAPermutation";
    case Errc::malformed_tree: return "MalformedTree";
    case Errc::not_a_hill: return "NotAHill";
    case Errc::bad_endpoint: return "BadEndpoint";
    case Errc::path_below_axis: return "PathBelowAxis";
    case Errc::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

bool is_resource_error(Errc code) {
  return code == Errc::horizon_exceeded || code == Errc::time_budget_exceeded ||
         code == Errc::expansion_limit;
}

}  // namespace cliffs
