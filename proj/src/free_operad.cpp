#include "cliffs/free_operad.hpp"

#include <algorithm>
#include <functional>

#include "cliffs/error.hpp"

namespace cliffs {

std::size_t FreeTerm::arity() const { return static_cast<std::size_t>(std::count(nodes.begin(), nodes.end(), -1)); }

std::size_t FreeTermHash::operator()(const FreeTerm& t) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (auto x : t.nodes) {
    h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(x));
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h);
}

FreeTerm graft(const FreeTerm& outer, std::size_t i, const FreeTerm& inner) {
  std::size_t seen = 0;
  for (std::size_t k = 0; k < outer.nodes.size(); ++k) {
    if (outer.nodes[k] != -1 || ++seen != i) continue;
    FreeTerm out;
    out.nodes.reserve(outer.nodes.size() + inner.nodes.size() - 1);
    out.nodes.insert(out.nodes.end(), outer.nodes.begin(), outer.nodes.begin() + static_cast<std::ptrdiff_t>(k));
    out.nodes.insert(out.nodes.end(), inner.nodes.begin(), inner.nodes.end());
    out.nodes.insert(out.nodes.end(), outer.nodes.begin() + static_cast<std::ptrdiff_t>(k) + 1, outer.nodes.end());
    return out;
  }
  throw Error(Errc::slot_out_of_range, "tree has no leaf " + std::to_string(i));
}

std::string to_string(const FreeTerm& t, const Alphabet& alphabet, const std::vector<std::string>& labels) {
  std::size_t pos = 0;
  std::function<std::string()> walk = [&]() -> std::string {
    std::int32_t g = t.nodes.at(pos++);
    if (g < 0) return "_";
    auto k = static_cast<std::size_t>(g);
    std::string out = k < labels.size() ? labels[k] : "g" + std::to_string(g);
    out += '(';
    for (std::size_t c = 0; c < alphabet.arities.at(k); ++c) {
      if (c) out += ',';
      out += walk();
    }
    return out + ')';
  };
  return walk();
}

FreeTermTable::FreeTermTable(Alphabet alphabet) : alphabet_(std::move(alphabet)) {
  for (auto a : alphabet_.arities)
    if (a < 2) throw Error(Errc::invalid_argument, "generators must have arity at least 2");
}

const std::vector<FreeTerm>& FreeTermTable::terms(std::size_t arity) {
  if (arity == 0) throw Error(Errc::invalid_argument, "arities start at 1");
  if (arity >= built_.size()) {
    built_.resize(arity + 1, false);
    by_arity_.resize(arity + 1);
    index_.resize(arity + 1);
  }
  if (!built_[arity]) build(arity);
  return by_arity_[arity];
}

std::size_t FreeTermTable::index_of(const FreeTerm& t) const {
  std::size_t n = t.arity();
  if (n >= index_.size() || !built_[n]) throw Error(Errc::invalid_argument, "arity not tabulated");
  auto it = index_[n].find(t);
  if (it == index_[n].end()) throw Error(Errc::invalid_argument, "tree not in table");
  return it->second;
}

void FreeTermTable::build(std::size_t n) {
  std::vector<FreeTerm> out;
  if (n == 1) {
    out.push_back(FreeTerm::leaf());
  } else {
    for (std::size_t g = 0; g < alphabet_.arities.size(); ++g) {
      std::size_t k = alphabet_.arities[g];
      if (k > n) continue;
      for (std::size_t child = 1; child < n; ++child) terms(child);
      // Compositions of n into k positive parts, lexicographic.
      std::vector<std::size_t> parts(k, 1);
      parts[k - 1] = n - (k - 1);
      while (true) {
        std::vector<const std::vector<FreeTerm>*> lists;
        for (auto p : parts) lists.push_back(&by_arity_[p]);
        std::vector<std::size_t> pick(k, 0);
        while (true) {
          FreeTerm t;
          t.nodes.push_back(static_cast<std::int32_t>(g));
          for (std::size_t c = 0; c < k; ++c) {
            const auto& sub = (*lists[c])[pick[c]].nodes;
            t.nodes.insert(t.nodes.end(), sub.begin(), sub.end());
          }
          out.push_back(std::move(t));
          std::size_t c = k;
          while (c > 0 && pick[c - 1] + 1 == lists[c - 1]->size()) pick[--c] = 0;
          if (c == 0) break;
          ++pick[c - 1];
        }
        // Next composition in lexicographic order.
        std::size_t j = k - 1;
        while (j > 0 && parts[j] == 1) --j;
        if (j == 0) break;
        // Move one unit from parts[j] to parts[j-1] and gather the rest at the end.
        std::size_t rest = 0;
        for (std::size_t r = j; r < k; ++r) rest += parts[r];
        ++parts[j - 1];
        rest -= 1;
        for (std::size_t r = j; r < k; ++r) parts[r] = 1;
        parts[k - 1] += rest - (k - j);
      }
    }
  }
  by_arity_[n] = std::move(out);
  auto& idx = index_[n];
  idx.clear();
  idx.reserve(by_arity_[n].size());
  for (std::size_t p = 0; p < by_arity_[n].size(); ++p) idx.emplace(by_arity_[n][p], p);
  built_[n] = true;
}

std::vector<FreeTerm> free_terms(const Alphabet& alphabet, std::size_t arity) {
  FreeTermTable table(alphabet);
  return table.terms(arity);
}

}  // namespace cliffs
