#include "cliffs/bijections.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

#include "cliffs/error.hpp"

namespace cliffs {

std::vector<std::size_t> to_composition(const CliffWord& w) {
  std::vector<std::size_t> parts;
  std::size_t run = 1;
  for (Letter a : w) {
    if (a > 1) throw Error(Errc::not_binary_word, "'" + to_string(w) + "' is not a binary word");
    if (a == 1) {
      parts.push_back(run);
      run = 1;
    } else {
      ++run;
    }
  }
  parts.push_back(run);
  return parts;
}

CliffWord from_composition(const std::vector<std::size_t>& parts) {
  if (parts.empty()) throw Error(Errc::empty_part, "a composition has at least one part");
  std::vector<Letter> out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (parts[k] == 0) throw Error(Errc::empty_part, "part " + std::to_string(k + 1) + " is zero");
    out.insert(out.end(), parts[k] - 1, 0);
    if (k + 1 < parts.size()) out.push_back(1);
  }
  return CliffWord(std::move(out));
}

std::vector<std::size_t> to_permutation(const CliffWord& w) {
  std::vector<std::size_t> perm;
  for (std::size_t i = 1; i <= w.length(); ++i) {
    if (w[i - 1] > i - 1)
      throw Error(Errc::not_a_cliff, "'" + to_string(w) + "' is not an arith:1 cliff");
    perm.insert(perm.begin() + static_cast<std::ptrdiff_t>(i - 1 - w[i - 1]), i);
  }
  return perm;
}

CliffWord from_permutation(const std::vector<std::size_t>& perm) {
  std::size_t n = perm.size();
  std::vector<bool> seen(n + 1, false);
  for (auto v : perm) {
    if (v < 1 || v > n || seen[v]) throw Error(Errc::not_a_permutation, "'" + format_sequence(perm) + "'");
    seen[v] = true;
  }
  std::vector<Letter> w(n);
  for (std::size_t i = 1; i <= n; ++i) {
    std::size_t pos = 0;
    for (auto v : perm) {
      if (v == i) break;
      if (v < i) ++pos;
    }
    w[i - 1] = static_cast<Letter>(i - 1 - pos);
  }
  return CliffWord(std::move(w));
}

namespace {

// Leaf slots in left-to-right order: (node index, child position).
void collect_leaves(const IncreasingTree& t, int node, std::vector<std::pair<int, std::size_t>>& out) {
  const auto& n = t.nodes[static_cast<std::size_t>(node)];
  for (std::size_t c = 0; c < n.children.size(); ++c) {
    if (n.children[c] < 0) out.emplace_back(node, c);
    else collect_leaves(t, n.children[c], out);
  }
}

std::vector<std::pair<int, std::size_t>> leaves_below(const IncreasingTree& t, std::size_t limit) {
  // Leaves of the subtree made of nodes with label < limit.
  std::vector<std::pair<int, std::size_t>> out;
  std::function<void(int)> walk = [&](int node) {
    const auto& n = t.nodes[static_cast<std::size_t>(node)];
    for (std::size_t c = 0; c < n.children.size(); ++c) {
      int child = n.children[c];
      if (child < 0 || t.nodes[static_cast<std::size_t>(child)].label >= limit) out.emplace_back(node, c);
      else walk(child);
    }
  };
  if (t.root >= 0 && t.nodes[static_cast<std::size_t>(t.root)].label < limit) walk(t.root);
  return out;
}

}  // namespace

IncreasingTree to_tree(Letter m, const CliffWord& w) {
  IncreasingTree t;
  t.arity = static_cast<std::size_t>(m) + 1;
  for (std::size_t i = 1; i <= w.length(); ++i) {
    if (w[i - 1] > (i - 1) * m)
      throw Error(Errc::not_a_cliff, "'" + to_string(w) + "' is not an arith:" + std::to_string(m) + " cliff");
    IncreasingTree::Node node{i, std::vector<int>(t.arity, -1)};
    int index = static_cast<int>(t.nodes.size());
    if (t.root < 0) {
      t.nodes.push_back(node);
      t.root = index;
      continue;
    }
    std::vector<std::pair<int, std::size_t>> leaves;
    collect_leaves(t, t.root, leaves);
    auto [parent, slot] = leaves.at(w[i - 1]);
    t.nodes.push_back(node);
    t.nodes[static_cast<std::size_t>(parent)].children[slot] = index;
  }
  return t;
}

CliffWord from_tree(Letter m, const IncreasingTree& t) {
  std::size_t k = t.nodes.size();
  if (t.arity != static_cast<std::size_t>(m) + 1) throw Error(Errc::malformed_tree, "wrong node arity");
  std::vector<int> by_label(k + 1, -1);
  for (std::size_t x = 0; x < k; ++x) {
    auto label = t.nodes[x].label;
    if (label < 1 || label > k || by_label[label] >= 0) throw Error(Errc::malformed_tree, "labels must be 1..n");
    by_label[label] = static_cast<int>(x);
  }
  for (const auto& n : t.nodes) {
    if (n.children.size() != t.arity) throw Error(Errc::malformed_tree, "wrong node arity");
    for (int c : n.children)
      if (c >= 0 && t.nodes[static_cast<std::size_t>(c)].label <= n.label)
        throw Error(Errc::malformed_tree, "labels do not increase from the root");
  }
  std::vector<Letter> w(k);
  for (std::size_t i = 1; i <= k; ++i) {
    if (i == 1) {
      if (t.root != by_label[1]) throw Error(Errc::malformed_tree, "the root must carry label 1");
      w[0] = 0;
      continue;
    }
    auto leaves = leaves_below(t, i);
    std::size_t found = leaves.size();
    for (std::size_t p = 0; p < leaves.size(); ++p) {
      auto [node, slot] = leaves[p];
      if (t.nodes[static_cast<std::size_t>(node)].children[slot] == by_label[i]) found = p;
    }
    if (found == leaves.size()) throw Error(Errc::malformed_tree, "labels do not increase from the root");
    w[i - 1] = static_cast<Letter>(found);
  }
  return CliffWord(std::move(w));
}

std::string to_string(const IncreasingTree& t) {
  std::function<std::string(int)> walk = [&](int node) -> std::string {
    if (node < 0) return ".";
    const auto& n = t.nodes[static_cast<std::size_t>(node)];
    std::string out = "(" + std::to_string(n.label);
    for (int c : n.children) out += " " + walk(c);
    return out + ")";
  };
  return walk(t.root);
}

IncreasingTree parse_tree(Letter m, std::string_view text) {
  IncreasingTree t;
  t.arity = static_cast<std::size_t>(m) + 1;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  std::function<int()> node = [&]() -> int {
    skip();
    if (pos >= text.size()) throw Error(Errc::malformed_tree, "unexpected end of tree");
    if (text[pos] == '.') {
      ++pos;
      return -1;
    }
    if (text[pos] != '(') throw Error(Errc::malformed_tree, "expected '(' or '.'");
    ++pos;
    skip();
    std::size_t label = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), label);
    if (ec != std::errc()) throw Error(Errc::malformed_tree, "expected a label");
    pos = static_cast<std::size_t>(ptr - text.data());
    int index = static_cast<int>(t.nodes.size());
    t.nodes.push_back({label, {}});
    std::vector<int> children;
    for (std::size_t c = 0; c < t.arity; ++c) children.push_back(node());
    skip();
    if (pos >= text.size() || text[pos] != ')')
      throw Error(Errc::malformed_tree, "node " + std::to_string(label) + " needs " + std::to_string(t.arity) +
                                            " children");
    ++pos;
    t.nodes[static_cast<std::size_t>(index)].children = std::move(children);
    return index;
  };
  t.root = node();
  skip();
  if (pos != text.size()) throw Error(Errc::malformed_tree, "trailing characters");
  return t;
}

std::string to_rect_path(Letter c, const CliffWord& w) {
  std::vector<std::size_t> alpha(static_cast<std::size_t>(c) + 1, 0);
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (w[i] > c || (i > 0 && w[i] < w[i - 1]))
      throw Error(Errc::not_a_hill, "'" + to_string(w) + "' is not a const:" + std::to_string(c) + " hill");
    ++alpha[w[i]];
  }
  std::string path;
  for (std::size_t a = 0; a <= c; ++a) {
    if (a) path += 'N';
    path.append(alpha[a], 'E');
  }
  return path;
}

CliffWord from_rect_path(Letter c, std::string_view path) {
  std::vector<Letter> w;
  Letter level = 0;
  for (char step : path) {
    if (step == 'E') w.push_back(level);
    else if (step == 'N') ++level;
    else throw Error(Errc::parse_error, std::string("unknown step '") + step + "'");
    if (level > c) throw Error(Errc::bad_endpoint, "path leaves the rectangle");
  }
  if (level != c) throw Error(Errc::bad_endpoint, "path ends at height " + std::to_string(level));
  return CliffWord(std::move(w));
}

std::string to_dyck_path(Letter m, const CliffWord& w) {
  std::string path;
  Letter prev = 0;
  for (std::size_t i = 1; i <= w.length(); ++i) {
    Letter a = w[i - 1];
    if (a < prev || a > (i - 1) * m)
      throw Error(Errc::not_a_hill, "'" + to_string(w) + "' is not an arith:" + std::to_string(m) + " hill");
    path.append(a - prev, 'D');
    path += 'U';
    prev = a;
  }
  path.append(static_cast<std::size_t>(m) * w.length() - prev, 'D');
  return path;
}

CliffWord from_dyck_path(Letter m, std::string_view path) {
  std::vector<Letter> w;
  long long height = 0;
  Letter downs = 0;
  for (char step : path) {
    if (step == 'U') {
      w.push_back(downs);
      height += m;
    } else if (step == 'D') {
      ++downs;
      if (--height < 0) throw Error(Errc::path_below_axis, "path goes below the axis");
    } else {
      throw Error(Errc::parse_error, std::string("unknown step '") + step + "'");
    }
  }
  if (height != 0) throw Error(Errc::bad_endpoint, "path ends at height " + std::to_string(height));
  return CliffWord(std::move(w));
}

std::string format_sequence(const std::vector<std::size_t>& values) {
  bool digits = std::all_of(values.begin(), values.end(), [](std::size_t v) { return v <= 9; });
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (!digits && k) out += ',';
    out += std::to_string(values[k]);
  }
  return out;
}

std::vector<std::size_t> parse_sequence(std::string_view text) {
  std::vector<std::size_t> out;
  if (text.find(',') == std::string_view::npos) {
    for (char ch : text) {
      if (ch < '0' || ch > '9') throw Error(Errc::parse_error, "bad sequence '" + std::string(text) + "'");
      out.push_back(static_cast<std::size_t>(ch - '0'));
    }
    return out;
  }
  std::size_t pos = 0;
  while (true) {
    auto comma = text.find(',', pos);
    auto part = text.substr(pos, comma == text.npos ? text.npos : comma - pos);
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size())
      throw Error(Errc::parse_error, "bad sequence '" + std::string(text) + "'");
    out.push_back(v);
    if (comma == text.npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace cliffs
