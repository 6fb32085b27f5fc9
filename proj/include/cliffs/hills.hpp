#pragma once

#include <string>
#include <vector>

#include "cliffs/operad.hpp"
#include "cliffs/order.hpp"

namespace cliffs {

// A quotient Cl_delta / span{F_w : w not in S} for a graded subset S closed
// under subword reduction. The F basis is always available; the E and H bases
// need unique minima of up-sets and maxima of down-sets in S.
class QuotientContext {
 public:
  // Validates closure under subword reduction for sizes <= validation_cap.
  QuotientContext(OperadContext base, Membership in_s, std::string name, std::size_t validation_cap);

  // Hi_delta; delta must be weakly increasing.
  static QuotientContext hills(OperadContext base);

  const OperadContext& base() const noexcept { return base_; }
  const RangeMap& delta() const noexcept { return base_.delta(); }
  const std::string& name() const noexcept { return name_; }
  bool has_closed_forms() const noexcept { return hill_forms_; }

  bool contains(const CliffWord& w) const;
  std::vector<CliffWord> basis_words(std::size_t size) const;

  // Minimum of {w' in S : w <= w'}; nullopt when empty.
  std::optional<CliffWord> meet_closure(const CliffWord& w) const;
  // Maximum of {w' in S : w' <= w}; nullopt when empty.
  std::optional<CliffWord> join_closure(const CliffWord& w) const;

 private:
  OperadContext base_;
  Membership in_s_;
  std::string name_;
  bool hill_forms_ = false;
};

struct ClosureViolation {
  CliffWord word, subword, reduced;
};

// Subwords of members of S whose reduction leaves S, for sizes <= cap.
std::vector<ClosureViolation> validate_closed_by_subword_reduction(const OperadContext& ctx, const Membership& in_s,
                                                                   std::size_t cap);

// theta_S: keeps the F-terms whose word lies in S. Input in any basis of Cl_delta.
OperadElement project(const QuotientContext& q, const OperadElement& x);

OperadElement q_compose_F(const QuotientContext& q, const CliffWord& u, Slot i, const CliffWord& v);
std::optional<CliffWord> q_compose_E(const QuotientContext& q, const CliffWord& u, Slot i, const CliffWord& v);
std::optional<CliffWord> q_compose_H(const QuotientContext& q, const CliffWord& u, Slot i, const CliffWord& v);

OperadElement compose(const QuotientContext& q, const OperadElement& x, Slot i, const OperadElement& y);
// Basis changes inside the quotient by triangular peeling.
OperadElement convert(const QuotientContext& q, const OperadElement& x, Basis target);
void validate(const QuotientContext& q, const OperadElement& x);

AxiomReport check_axioms(const QuotientContext& q, Basis basis, std::size_t cap, std::size_t sample_budget = 0,
                         unsigned jobs = 1);

}  // namespace cliffs
