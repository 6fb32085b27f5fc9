#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cliffs/operad.hpp"
#include "cliffs/range_map.hpp"
#include "cliffs/word.hpp"

namespace test {

// Digit form: W("00102").
inline cliffs::CliffWord W(std::string_view digits) {
  std::vector<cliffs::Letter> letters;
  for (char ch : digits) letters.push_back(static_cast<cliffs::Letter>(ch - '0'));
  return cliffs::CliffWord(std::move(letters));
}

// Periodic-tail map from digits: D("1232") is 1232^omega (last digit repeats).
inline cliffs::RangeMap D(std::string_view digits) {
  std::vector<cliffs::Letter> letters;
  for (char ch : digits) letters.push_back(static_cast<cliffs::Letter>(ch - '0'));
  cliffs::Letter tail = letters.back();
  letters.pop_back();
  return cliffs::RangeMap::from_values(letters, tail);
}

// Sum of basis elements with coefficient 1, or given signs via a leading '-'.
inline cliffs::OperadElement sum(cliffs::Basis b, std::size_t arity, const std::vector<std::string>& words) {
  cliffs::OperadElement x(b, arity);
  for (const auto& w : words) {
    if (!w.empty() && w[0] == '-') x.add(W(std::string_view(w).substr(1)), -1);
    else x.add(W(w), 1);
  }
  return x;
}

}  // namespace test
