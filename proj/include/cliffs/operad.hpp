#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cliffs/compose.hpp"
#include "cliffs/order.hpp"
#include "cliffs/range_map.hpp"
#include "cliffs/word.hpp"

namespace cliffs {

enum class Basis { E, F, H };

char basis_letter(Basis b);
Basis parse_basis(std::string_view text);

// A finite linear combination of basis elements of one arity with exact
// rational coefficients, kept in lexicographic word order.
class OperadElement {
 public:
  using Terms = std::map<CliffWord, mpq_class>;

  OperadElement(Basis basis, std::size_t arity) : basis_(basis), arity_(arity) {}
  static OperadElement monomial(Basis basis, const CliffWord& w, const mpq_class& coefficient = 1);

  Basis basis() const noexcept { return basis_; }
  std::size_t arity() const noexcept { return arity_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add(const CliffWord& w, const mpq_class& coefficient);
  OperadElement& operator+=(const OperadElement& other);
  OperadElement& operator-=(const OperadElement& other);
  OperadElement& operator*=(const mpq_class& scalar);

  friend bool operator==(const OperadElement&, const OperadElement&) = default;

 private:
  Basis basis_;
  std::size_t arity_;
  Terms terms_;
};

OperadElement operator+(OperadElement a, const OperadElement& b);
OperadElement operator-(OperadElement a, const OperadElement& b);
OperadElement operator*(const mpq_class& scalar, OperadElement a);

// Human-readable form: "E_00102 + 2*E_011 - F_1".
std::string to_string(const OperadElement& x);
// Deterministic JSON: {"basis","arity","terms":[{"word","num","den"}]}, plus
// a "quotient" field when given.
std::string to_json(const OperadElement& x, const std::string& quotient = "");
OperadElement element_from_json(const std::string& text);

// The operad Cl_delta for a unimodal delta.
class OperadContext {
 public:
  static constexpr std::size_t default_expansion_threshold = 1'000'000;

  explicit OperadContext(RangeMap delta, std::size_t arity_cap = 0,
                         std::size_t expansion_threshold = default_expansion_threshold);

  const RangeMap& delta() const noexcept { return delta_; }
  // 0 means no cap beyond the horizon of delta.
  std::size_t arity_cap() const noexcept { return arity_cap_; }
  std::size_t expansion_threshold() const noexcept { return expansion_threshold_; }

  void check_size(std::size_t size) const;
  bool contains(const CliffWord& w) const;
  std::vector<CliffWord> basis_words(std::size_t size) const;
  // delta(1) ... delta(length)
  CliffWord top(std::size_t length) const;

 private:
  RangeMap delta_;
  std::size_t arity_cap_;
  std::size_t expansion_threshold_;
};

// Monomial compositions. Inputs must be delta-cliffs.
std::optional<CliffWord> compose_E(const OperadContext& ctx, const CliffWord& u, Slot i, const CliffWord& v);
// The box [u white v, u black v] when chi(u white v) = 1; F_u o_i F_v is the sum over it.
std::optional<Interval> compose_F_interval(const OperadContext& ctx, const CliffWord& u, Slot i, const CliffWord& v);
// Expanded form of the above; ExpansionLimit past the context threshold.
OperadElement compose_F(const OperadContext& ctx, const CliffWord& u, Slot i, const CliffWord& v);
CliffWord compose_H(const OperadContext& ctx, const CliffWord& u, Slot i, const CliffWord& v);

OperadElement compose(const OperadContext& ctx, const OperadElement& x, Slot i, const OperadElement& y);
OperadElement convert(const OperadContext& ctx, const OperadElement& x, Basis target);
// Unit of the operad in the given basis.
OperadElement unit(Basis basis);

// Requires every word of x to be a delta-cliff.
void validate(const OperadContext& ctx, const OperadElement& x);

struct AxiomViolation {
  std::string axiom;
  CliffWord f1, f2, f3;
  std::size_t i = 0, j = 0;
};

struct AxiomReport {
  std::size_t checked = 0;
  // Triples whose composite would pass the horizon of delta.
  std::size_t skipped = 0;
  std::vector<AxiomViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

std::string to_string(const AxiomViolation& v);

// Sequential, parallel and unit axioms over all basis words of size <= cap.
// With sample_budget > 0 and more triples than that, a seeded random sample
// of sample_budget triples is checked instead.
AxiomReport check_axioms(const OperadContext& ctx, Basis basis, std::size_t cap, std::size_t sample_budget = 0,
                         unsigned jobs = 1);

// For delta not unimodal: the triple (u, 1, v) with E_u o_1 E_v = E_w leaving the
// ideal spanned by non-cliffs inside Cl_{closure_bar(delta)}.
struct IdealWitness {
  CliffWord u, v, w;
  std::size_t slot = 1;
};
std::optional<IdealWitness> unimodality_counterexample(const RangeMap& delta);
std::string to_string(const IdealWitness& w);

// Checks whether E_u o_i E_v, computed in the free operad on all words, leaves
// the span of non-delta-cliffs although u or v is not a delta-cliff.
std::optional<IdealWitness> direct_quotient_violation(const RangeMap& delta, const CliffWord& u, Slot i,
                                                      const CliffWord& v);
// Smallest such violation with |u| + |v| - 1 <= max_size, letters bounded by
// max(delta) + 1.
std::optional<IdealWitness> find_direct_quotient_violation(const RangeMap& delta, std::size_t max_size);

}  // namespace cliffs
