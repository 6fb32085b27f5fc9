#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <string>
#include <unordered_map>
#include <vector>

namespace cliffs {

// A syntax tree over a graded alphabet, stored in preorder: a generator index
// followed by its children, -1 for a leaf.
struct FreeTerm {
  std::vector<std::int32_t> nodes;

  static FreeTerm leaf() { return FreeTerm{{-1}}; }
  std::size_t arity() const;
  friend bool operator==(const FreeTerm&, const FreeTerm&) = default;
  friend auto operator<=>(const FreeTerm&, const FreeTerm&) = default;
};

struct FreeTermHash {
  std::size_t operator()(const FreeTerm& t) const noexcept;
};

// Replaces the i-th leaf (1-based, left to right) of outer by inner.
FreeTerm graft(const FreeTerm& outer, std::size_t i, const FreeTerm& inner);

// Generator arities; every generator has arity >= 2.
struct Alphabet {
  std::vector<std::size_t> arities;
};

// "a(b(_,_),_)" rendering with the given generator labels.
std::string to_string(const FreeTerm& t, const Alphabet& alphabet, const std::vector<std::string>& labels);

// All trees of each arity, in a fixed order: root generator index, then the
// arity composition of the children (lexicographic), then the product of the
// child lists.
class FreeTermTable {
 public:
  explicit FreeTermTable(Alphabet alphabet);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<FreeTerm>& terms(std::size_t arity);
  // Position of t among terms(t.arity()); requires terms() to have been built.
  std::size_t index_of(const FreeTerm& t) const;
  std::size_t count(std::size_t arity) { return terms(arity).size(); }

 private:
  void build(std::size_t arity);

  Alphabet alphabet_;
  std::deque<std::vector<FreeTerm>> by_arity_;  // stable references across growth
  std::vector<std::unordered_map<FreeTerm, std::size_t, FreeTermHash>> index_;
  std::vector<bool> built_;
};

std::vector<FreeTerm> free_terms(const Alphabet& alphabet, std::size_t arity);

}  // namespace cliffs
