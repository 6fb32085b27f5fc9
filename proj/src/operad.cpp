#include "cliffs/operad.hpp"

#include <algorithm>
#include <climits>
#include <json.hpp>
#include <sstream>

#include "cliffs/cliffs.hpp"
#include "cliffs/detail/axioms.hpp"
#include "cliffs/error.hpp"

namespace cliffs {

char basis_letter(Basis b) {
  switch (b) {
    case Basis::E: return 'E';
    case Basis::F: return 'F';
    case Basis::H: return 'H';
  }
  return '?';
}

Basis parse_basis(std::string_view text) {
  if (text == "E") return Basis::E;
  if (text == "F") return Basis::F;
  if (text == "H") return Basis::H;
  throw Error(Errc::parse_error, "unknown basis '" + std::string(text) + "', expected E, F or H");
}

OperadElement OperadElement::monomial(Basis basis, const CliffWord& w, const mpq_class& coefficient) {
  OperadElement x(basis, w.size());
  x.add(w, coefficient);
  return x;
}

void OperadElement::add(const CliffWord& w, const mpq_class& coefficient) {
  if (w.size() != arity_)
    throw Error(Errc::length_mismatch, "word '" + to_string(w) + "' in an element of arity " + std::to_string(arity_));
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

namespace {

void same_space(const OperadElement& a, const OperadElement& b) {
  if (a.basis() != b.basis())
    throw Error(Errc::basis_mismatch, std::string("cannot combine ") + basis_letter(a.basis()) + " and " +
                                          basis_letter(b.basis()) + " elements");
  if (a.arity() != b.arity()) throw Error(Errc::length_mismatch, "cannot add elements of different arities");
}

}  // namespace

OperadElement& OperadElement::operator+=(const OperadElement& other) {
  same_space(*this, other);
  for (const auto& [w, c] : other.terms_) add(w, c);
  return *this;
}

OperadElement& OperadElement::operator-=(const OperadElement& other) {
  same_space(*this, other);
  for (const auto& [w, c] : other.terms_) add(w, -c);
  return *this;
}

OperadElement& OperadElement::operator*=(const mpq_class& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= scalar;
  return *this;
}

OperadElement operator+(OperadElement a, const OperadElement& b) { return a += b; }
OperadElement operator-(OperadElement a, const OperadElement& b) { return a -= b; }
OperadElement operator*(const mpq_class& scalar, OperadElement a) { return a *= scalar; }

std::string to_string(const OperadElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : x.terms()) {
    mpq_class magnitude = abs(c);
    if (first) out += c < 0 ? "-" : "";
    else out += c < 0 ? " - " : " + ";
    first = false;
    if (magnitude != 1) out += magnitude.get_str() + "*";
    out += basis_letter(x.basis());
    out += "_" + (w.empty() ? std::string("eps") : to_compact(w));
  }
  return out;
}

namespace {

nlohmann::json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

mpz_class integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw Error(Errc::parse_error, "coefficient must be an integer or a decimal string");
}

}  // namespace

std::string to_json(const OperadElement& x, const std::string& quotient) {
  nlohmann::ordered_json j;
  j["basis"] = std::string(1, basis_letter(x.basis()));
  j["arity"] = x.arity();
  if (!quotient.empty()) j["quotient"] = quotient;
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [w, c] : x.terms()) {
    nlohmann::ordered_json t;
    t["word"] = to_string(w);
    t["num"] = integer_json(c.get_num());
    t["den"] = integer_json(c.get_den());
    terms.push_back(t);
  }
  j["terms"] = terms;
  return j.dump();
}

OperadElement element_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    OperadElement x(parse_basis(j.at("basis").get<std::string>()), j.at("arity").get<std::size_t>());
    for (const auto& t : j.at("terms")) {
      mpq_class c(integer_from_json(t.at("num")), integer_from_json(t.at("den")));
      c.canonicalize();
      x.add(parse_word(t.at("word").get<std::string>()), c);
    }
    return x;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, std::string("bad element JSON: ") + e.what());
  }
}

OperadContext::OperadContext(RangeMap delta, std::size_t arity_cap, std::size_t expansion_threshold)
    : delta_(std::move(delta)), arity_cap_(arity_cap), expansion_threshold_(expansion_threshold) {
  if (auto witness = unimodality_counterexample(delta_))
    throw Error(Errc::not_unimodal, to_string(delta_) + " is not unimodal: " + to_string(*witness));
}

void OperadContext::check_size(std::size_t size) const {
  delta_.check_length(size - 1);
  if (arity_cap_ && size > arity_cap_)
    throw Error(Errc::horizon_exceeded, "size " + std::to_string(size) + " exceeds the arity cap " +
                                            std::to_string(arity_cap_));
}

bool OperadContext::contains(const CliffWord& w) const { return is_cliff(delta_, w); }

std::vector<CliffWord> OperadContext::basis_words(std::size_t size) const {
  check_size(size);
  return enumerate(delta_, size);
}

CliffWord OperadContext::top(std::size_t length) const {
  delta_.check_length(length);
  std::vector<Letter> t(length);
  for (std::size_t j = 0; j < length; ++j) t[j] = delta_(j + 1);
  return CliffWord(std::move(t));
}

std::optional<CliffWord> compose_E(const OperadContext& ctx, const CliffWord& u, Slot i, const CliffWord& v) {
  CliffWord w = white_square(u, i, v);
  ctx.check_size(w.size());
  if (!chi(ctx.delta(), w)) return std::nullopt;
  return w;
}

std::optional<Interval> compose_F_interval(const OperadContext& ctx, const CliffWord& u, Slot i,
                                           const CliffWord& v) {
  auto low = compose_E(ctx, u, i, v);
  if (!low) return std::nullopt;
  return Interval(*low, black_square(ctx.delta(), u, i, v));
}

namespace {

void expand_into(const OperadContext& ctx, const Interval& box, const mpq_class& c, OperadElement& out) {
  if (box.cardinality() > ctx.expansion_threshold())
    throw Error(Errc::expansion_limit, "interval [" + to_string(box.low()) + ", " + to_string(box.high()) +
                                           "] has " + box.cardinality().get_str() + " terms");
  box.for_each([&](const CliffWord& w) {
    out.add(w, c);
    return true;
  });
}

}  // namespace

OperadElement compose_F(const OperadContext& ctx, const CliffWord& u, Slot i, const CliffWord& v) {
  OperadElement out(Basis::F, u.size() + v.size() - 1);
  if (auto box = compose_F_interval(ctx, u, i, v)) expand_into(ctx, *box, 1, out);
  return out;
}

CliffWord compose_H(const OperadContext& ctx, const CliffWord& u, Slot i, const CliffWord& v) {
  CliffWord w = black_square(ctx.delta(), u, i, v);
  ctx.check_size(w.size());
  return reduce(ctx.delta(), w);
}

OperadElement compose(const OperadContext& ctx, const OperadElement& x, Slot i, const OperadElement& y) {
  if (x.basis() != y.basis())
    throw Error(Errc::basis_mismatch, std::string("cannot compose ") + basis_letter(x.basis()) + " with " +
                                          basis_letter(y.basis()));
  if (i.index() < 1 || i.index() > x.arity())
    throw Error(Errc::slot_out_of_range, "slot " + std::to_string(i.index()) + " outside [1, " +
                                             std::to_string(x.arity()) + "]");
  OperadElement out(x.basis(), x.arity() + y.arity() - 1);
  for (const auto& [u, a] : x.terms()) {
    for (const auto& [v, b] : y.terms()) {
      mpq_class c = a * b;
      switch (x.basis()) {
        case Basis::E:
          if (auto w = compose_E(ctx, u, i, v)) out.add(*w, c);
          break;
        case Basis::F:
          if (auto box = compose_F_interval(ctx, u, i, v)) expand_into(ctx, *box, c, out);
          break;
        case Basis::H:
          out.add(compose_H(ctx, u, i, v), c);
          break;
      }
    }
  }
  return out;
}

namespace {

// Adds sign * c over the cube between low and high (high - low in {0,1}^n),
// sign = (-1)^(number of coordinates where the visited word differs from base).
void signed_cube(const CliffWord& low, const CliffWord& high, const CliffWord& base, const mpq_class& c,
                 OperadElement& out) {
  Interval(low, high).for_each([&](const CliffWord& w) {
    std::size_t flips = 0;
    for (std::size_t j = 0; j < w.length(); ++j) flips += w[j] != base[j];
    out.add(w, flips % 2 ? mpq_class(-c) : c);
    return true;
  });
}

OperadElement to_F(const OperadContext& ctx, const OperadElement& x) {
  OperadElement out(Basis::F, x.arity());
  for (const auto& [w, c] : x.terms()) {
    CliffWord low = x.basis() == Basis::E ? w : CliffWord(std::vector<Letter>(w.length(), 0));
    CliffWord high = x.basis() == Basis::E ? ctx.top(w.length()) : w;
    Interval(low, high).for_each([&](const CliffWord& v) {
      out.add(v, c);
      return true;
    });
  }
  return out;
}

OperadElement from_F(const OperadContext& ctx, const OperadElement& x, Basis target) {
  OperadElement out(target, x.arity());
  for (const auto& [w, c] : x.terms()) {
    CliffWord low = w, high = w;
    if (target == Basis::E) {
      CliffWord t = ctx.top(w.length());
      for (std::size_t j = 0; j < w.length(); ++j) high[j] = std::min<Letter>(w[j] + 1, t[j]);
    } else {
      for (std::size_t j = 0; j < w.length(); ++j) low[j] = w[j] == 0 ? 0 : w[j] - 1;
    }
    signed_cube(low, high, w, c, out);
  }
  return out;
}

}  // namespace

OperadElement convert(const OperadContext& ctx, const OperadElement& x, Basis target) {
  if (x.basis() == target) return x;
  OperadElement f = x.basis() == Basis::F ? x : to_F(ctx, x);
  if (target == Basis::F) return f;
  return from_F(ctx, f, target);
}

OperadElement unit(Basis basis) { return OperadElement::monomial(basis, CliffWord{}); }

void validate(const OperadContext& ctx, const OperadElement& x) {
  ctx.check_size(x.arity());
  for (const auto& [w, c] : x.terms()) require_cliff(ctx.delta(), w);
}

std::string to_string(const AxiomViolation& v) {
  std::ostringstream os;
  os << v.axiom << " f1=" << to_string(v.f1) << " f2=" << to_string(v.f2) << " f3=" << to_string(v.f3)
     << " i=" << v.i << " j=" << v.j;
  return os.str();
}

AxiomReport check_axioms(const OperadContext& ctx, Basis basis, std::size_t cap, std::size_t sample_budget,
                         unsigned jobs) {
  std::vector<std::vector<CliffWord>> words(cap + 1);
  for (std::size_t s = 1; s <= cap; ++s) words[s] = ctx.basis_words(s);
  auto comp = [&](const OperadElement& x, std::size_t i, const OperadElement& y) {
    return compose(ctx, x, Slot(i), y);
  };
  return detail::run_axioms(basis, words, ctx.delta().horizon(), comp, sample_budget, jobs);
}

std::optional<IdealWitness> unimodality_counterexample(const RangeMap& delta) {
  auto pattern = unimodality_witness(delta);
  if (!pattern) return std::nullopt;
  Letter a = delta(pattern->i2) + 1;
  std::vector<Letter> u(pattern->i2 - 1, 0), v(pattern->i3 - pattern->i2, 0), w(pattern->i3 - 1, 0);
  u.push_back(a);
  w.push_back(a);
  return IdealWitness{CliffWord(u), CliffWord(v), CliffWord(w), 1};
}

std::string to_string(const IdealWitness& w) {
  auto name = [](const CliffWord& x) { return "E_{" + (x.empty() ? std::string("eps") : to_compact(x)) + "}"; };
  return name(w.u) + " o_" + std::to_string(w.slot) + " " + name(w.v) + " = " + name(w.w);
}

std::optional<IdealWitness> direct_quotient_violation(const RangeMap& delta, const CliffWord& u, Slot i,
                                                      const CliffWord& v) {
  if (is_cliff(delta, u) && is_cliff(delta, v)) return std::nullopt;
  CliffWord w = white_square(u, i, v);
  if (!is_cliff(delta, w)) return std::nullopt;
  return IdealWitness{u, v, w, i.index()};
}

std::optional<IdealWitness> find_direct_quotient_violation(const RangeMap& delta, std::size_t max_size) {
  Letter bound = delta.tail();
  for (Letter a : delta.prefix()) bound = std::max(bound, a);
  RangeMap free_map = RangeMap::constant(bound + 1);
  for (std::size_t s = 2; s <= max_size; ++s) {
    for (std::size_t a = 2; a <= s; ++a) {
      std::size_t b = s + 1 - a;
      for (const auto& u : enumerate(free_map, a))
        for (const auto& v : enumerate(free_map, b))
          for (std::size_t i = 1; i <= u.size(); ++i)
            if (auto found = direct_quotient_violation(delta, u, Slot(i), v)) return found;
    }
  }
  return std::nullopt;
}

}  // namespace cliffs
