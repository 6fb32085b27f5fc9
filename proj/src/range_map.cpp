#include "cliffs/range_map.hpp"

#include <algorithm>
#include <charconv>

#include "cliffs/error.hpp"

namespace cliffs {

namespace {

template <typename T>
T parse_number(std::string_view text, std::string_view context) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    throw Error(Errc::parse_error, "bad number '" + std::string(text) + "' in '" + std::string(context) + "'");
  return value;
}

}  // namespace

RangeMap RangeMap::constant(Letter c) {
  RangeMap d;
  d.tail_ = c;
  return d;
}

RangeMap RangeMap::arithmetic(Letter m, std::size_t horizon) {
  if (m == 0) return constant(0);
  if (horizon == 0) throw Error(Errc::invalid_argument, "horizon must be positive");
  RangeMap d;
  for (std::size_t i = 1; i < horizon; ++i) d.prefix_.push_back(static_cast<Letter>((i - 1) * m));
  d.tail_ = static_cast<Letter>((horizon - 1) * m);
  d.horizon_ = horizon;
  d.step_ = m;
  return d;
}

RangeMap RangeMap::from_values(std::vector<Letter> prefix, Letter tail) {
  while (!prefix.empty() && prefix.back() == tail) prefix.pop_back();
  RangeMap d;
  d.prefix_ = std::move(prefix);
  d.tail_ = tail;
  return d;
}

Letter RangeMap::operator()(std::size_t i) const {
  if (i == 0) throw Error(Errc::invalid_argument, "range maps are 1-indexed");
  return i <= prefix_.size() ? prefix_[i - 1] : tail_;
}

void RangeMap::check_length(std::size_t length) const {
  if (horizon_ && length > *horizon_)
    throw Error(Errc::horizon_exceeded, "word length " + std::to_string(length) + " exceeds horizon " +
                                            std::to_string(*horizon_) + " of " + to_string(*this));
}

RangeMap parse_range_map(std::string_view text) {
  for (char ch : text)
    if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r')
      throw Error(Errc::parse_error, "whitespace in range map '" + std::string(text) + "'");
  if (text.starts_with("const:")) return RangeMap::constant(parse_number<Letter>(text.substr(6), text));
  if (text.starts_with("arith:")) {
    std::string_view rest = text.substr(6);
    auto at = rest.find('@');
    if (at == std::string_view::npos) {
      Letter m = parse_number<Letter>(rest, text);
      if (m != 0) throw Error(Errc::parse_error, "arith:<m> with m > 0 needs a horizon, as in arith:1@8");
      return RangeMap::constant(0);
    }
    Letter m = parse_number<Letter>(rest.substr(0, at), text);
    auto horizon = parse_number<std::size_t>(rest.substr(at + 1), text);
    if (horizon == 0) throw Error(Errc::parse_error, "horizon must be positive in '" + std::string(text) + "'");
    return RangeMap::arithmetic(m, horizon);
  }
  auto semi = text.find(';');
  if (semi == std::string_view::npos || text.find(';', semi + 1) != std::string_view::npos)
    throw Error(Errc::parse_error, "expected const:<c>, arith:<m>@<h> or p1,...,pk;tail, got '" + std::string(text) + "'");
  std::vector<Letter> prefix;
  std::string_view head = text.substr(0, semi);
  if (!head.empty()) {
    std::size_t pos = 0;
    while (true) {
      auto comma = head.find(',', pos);
      prefix.push_back(parse_number<Letter>(head.substr(pos, comma == head.npos ? head.npos : comma - pos), text));
      if (comma == head.npos) break;
      pos = comma + 1;
    }
  }
  return RangeMap::from_values(std::move(prefix), parse_number<Letter>(text.substr(semi + 1), text));
}

std::string to_string(const RangeMap& delta) {
  if (delta.horizon() && delta.arithmetic_step())
    return "arith:" + std::to_string(*delta.arithmetic_step()) + "@" + std::to_string(*delta.horizon());
  if (delta.is_constant()) return "const:" + std::to_string(delta.tail());
  std::string out;
  for (std::size_t i = 0; i < delta.prefix().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(delta.prefix()[i]);
  }
  return out + ";" + std::to_string(delta.tail());
}

std::optional<UnimodalityWitness> unimodality_witness(const RangeMap& delta) {
  // A pattern needs its middle index inside the prefix; its right end can be
  // taken at prefix length + 1.
  std::size_t last = delta.prefix().size() + 2;
  std::vector<Letter> v(last + 1);
  for (std::size_t i = 1; i <= last; ++i) v[i] = delta(i);
  std::vector<std::size_t> argmax_left(last + 1, 0);
  for (std::size_t i = 2; i <= last; ++i) {
    std::size_t prev = argmax_left[i - 1];
    argmax_left[i] = (prev == 0 || v[i - 1] > v[prev]) ? i - 1 : prev;
  }
  for (std::size_t i2 = 2; i2 < last; ++i2) {
    std::size_t i1 = argmax_left[i2];
    if (v[i1] <= v[i2]) continue;
    for (std::size_t i3 = i2 + 1; i3 <= last; ++i3)
      if (v[i3] > v[i2]) return UnimodalityWitness{i1, i2, i3};
  }
  return std::nullopt;
}

bool is_unimodal(const RangeMap& delta) { return !unimodality_witness(delta).has_value(); }

bool is_weakly_increasing(const RangeMap& delta) {
  for (std::size_t i = 1; i <= delta.prefix().size(); ++i)
    if (delta(i) > delta(i + 1)) return false;
  return true;
}

bool is_one_dominated(const RangeMap& delta) { return delta(1) >= delta.tail(); }

RangeMap closure_bar(const RangeMap& delta) {
  std::vector<Letter> prefix = delta.prefix();
  Letter running = 0;
  for (auto& a : prefix) {
    running = std::max(running, a);
    a = running;
  }
  RangeMap out = RangeMap::from_values(prefix, std::max(running, delta.tail()));
  if (delta.horizon()) {
    // Arithmetic maps are already increasing; keep the horizon.
    if (out == RangeMap::from_values(delta.prefix(), delta.tail())) return delta;
  }
  return out;
}

std::optional<std::size_t> first_change_index(const RangeMap& delta) {
  for (std::size_t k = 1; k <= delta.prefix().size(); ++k)
    if (delta(k) != delta(k + 1)) return k;
  return std::nullopt;
}

std::size_t domination_index(const RangeMap& delta) {
  if (!is_one_dominated(delta))
    throw Error(Errc::not_dominated, to_string(delta) + " is not 1-dominated");
  std::size_t last_above = 0;
  for (std::size_t i = 1; i <= delta.prefix().size(); ++i)
    if (delta(i) > delta(1)) last_above = i;
  return last_above + 1;
}

}  // namespace cliffs
