#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cliffs/word.hpp"

namespace cliffs {

// Binary words <-> compositions: w = 0^{l1 - 1} 1 0^{l2 - 1} 1 ... 0^{lk - 1}.
std::vector<std::size_t> to_composition(const CliffWord& w);
CliffWord from_composition(const std::vector<std::size_t>& parts);

// arith:1 cliffs of length n <-> permutations of n: value i is inserted at
// position (i - 1) - w(i) from the left.
std::vector<std::size_t> to_permutation(const CliffWord& w);
CliffWord from_permutation(const std::vector<std::size_t>& perm);

// Increasing (m + 1)-ary trees. Node i is grafted on leaf w(i) + 1 of the tree
// built from nodes 1..i-1, leaves counted left to right.
struct IncreasingTree {
  struct Node {
    std::size_t label = 0;
    std::vector<int> children;  // node index, -1 for a leaf
  };
  std::size_t arity = 2;
  std::vector<Node> nodes;  // nodes[0] is the root when nonempty
  int root = -1;
};
IncreasingTree to_tree(Letter m, const CliffWord& w);
CliffWord from_tree(Letter m, const IncreasingTree& t);
// "(1 (2 . .) .)", a leaf is "."; the empty tree is ".".
std::string to_string(const IncreasingTree& t);
IncreasingTree parse_tree(Letter m, std::string_view text);

// const:c hills <-> paths E^{a0} N E^{a1} ... N E^{ac}, a_k = number of letters k.
std::string to_rect_path(Letter c, const CliffWord& w);
CliffWord from_rect_path(Letter c, std::string_view path);

// arith:m hills <-> m-Dyck paths: D^{w(i) - w(i-1)} U for each i, then
// D^{mk - w(k)}; U raises by m, D lowers by 1.
std::string to_dyck_path(Letter m, const CliffWord& w);
CliffWord from_dyck_path(Letter m, std::string_view path);

// Digits when every value is at most 9, comma-separated otherwise.
std::string format_sequence(const std::vector<std::size_t>& values);
std::vector<std::size_t> parse_sequence(std::string_view text);

}  // namespace cliffs
