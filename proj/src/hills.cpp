#include "cliffs/hills.hpp"

#include <algorithm>

#include "cliffs/cliffs.hpp"
#include "cliffs/detail/axioms.hpp"
#include "cliffs/error.hpp"

namespace cliffs {

QuotientContext::QuotientContext(OperadContext base, Membership in_s, std::string name, std::size_t validation_cap)
    : base_(std::move(base)), in_s_(std::move(in_s)), name_(std::move(name)) {
  auto bad = validate_closed_by_subword_reduction(base_, in_s_, validation_cap);
  if (!bad.empty())
    throw Error(Errc::not_closed, "subword '" + to_string(bad.front().subword) + "' of '" +
                                      to_string(bad.front().word) + "' reduces to '" +
                                      to_string(bad.front().reduced) + "' outside " + name_);
}

QuotientContext QuotientContext::hills(OperadContext base) {
  if (!is_weakly_increasing(base.delta()))
    throw Error(Errc::not_weakly_increasing, to_string(base.delta()) + " is not weakly increasing");
  RangeMap d = base.delta();
  QuotientContext q(std::move(base), [d](const CliffWord& w) { return is_hill(d, w); }, "hills", 0);
  q.hill_forms_ = true;
  return q;
}

bool QuotientContext::contains(const CliffWord& w) const { return base_.contains(w) && in_s_(w); }

std::vector<CliffWord> QuotientContext::basis_words(std::size_t size) const {
  base_.check_size(size);
  if (hill_forms_) return enumerate(delta(), size, true);
  std::vector<CliffWord> out;
  for (auto& w : enumerate(delta(), size))
    if (in_s_(w)) out.push_back(std::move(w));
  return out;
}

std::optional<CliffWord> QuotientContext::meet_closure(const CliffWord& w) const {
  if (hill_forms_) return running_max(w);
  return minimal_above(w, base_.top(w.length()), [this](const CliffWord& x) { return in_s_(x); });
}

std::optional<CliffWord> QuotientContext::join_closure(const CliffWord& w) const {
  if (hill_forms_) return suffix_min(w);
  return maximal_below(w, [this](const CliffWord& x) { return in_s_(x); });
}

std::vector<ClosureViolation> validate_closed_by_subword_reduction(const OperadContext& ctx, const Membership& in_s,
                                                                   std::size_t cap) {
  std::vector<ClosureViolation> out;
  for (std::size_t size = 1; size <= cap; ++size) {
    for (const auto& w : ctx.basis_words(size)) {
      if (!in_s(w)) continue;
      std::size_t len = w.length();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
        std::vector<Letter> sub;
        for (std::size_t j = 0; j < len; ++j)
          if (mask >> j & 1) sub.push_back(w[j]);
        CliffWord s(std::move(sub));
        CliffWord r = reduce(ctx.delta(), s);
        if (!in_s(r)) out.push_back({w, s, r});
      }
    }
  }
  return out;
}

OperadElement project(const QuotientContext& q, const OperadElement& x) {
  OperadElement f = convert(q.base(), x, Basis::F);
  OperadElement out(Basis::F, f.arity());
  for (const auto& [w, c] : f.terms())
    if (q.contains(w)) out.add(w, c);
  return out;
}

namespace {

// F-expansion of the S-part of a box.
void add_box(const QuotientContext& q, const Interval& box, const mpq_class& c, OperadElement& out) {
  if (box.cardinality() > q.base().expansion_threshold())
    throw Error(Errc::expansion_limit, "interval of " + box.cardinality().get_str() + " terms");
  box.for_each([&](const CliffWord& w) {
    if (q.contains(w)) out.add(w, c);
    return true;
  });
}

}  // namespace

namespace {

void require_members(const QuotientContext& q, const CliffWord& u, const CliffWord& v) {
  for (const CliffWord* w : {&u, &v})
    if (!q.contains(*w)) throw Error(Errc::not_a_hill, "'" + to_string(*w) + "' is not in " + q.name());
}

}  // namespace

OperadElement q_compose_F(const QuotientContext& q, const CliffWord& u, Slot i, const CliffWord& v) {
  require_members(q, u, v);
  OperadElement out(Basis::F, u.size() + v.size() - 1);
  if (auto box = compose_F_interval(q.base(), u, i, v)) add_box(q, *box, 1, out);
  return out;
}

std::optional<CliffWord> q_compose_E(const QuotientContext& q, const CliffWord& u, Slot i, const CliffWord& v) {
  require_members(q, u, v);
  auto w = compose_E(q.base(), u, i, v);
  if (!w) return std::nullopt;
  return q.meet_closure(*w);
}

std::optional<CliffWord> q_compose_H(const QuotientContext& q, const CliffWord& u, Slot i, const CliffWord& v) {
  require_members(q, u, v);
  return q.join_closure(compose_H(q.base(), u, i, v));
}

OperadElement compose(const QuotientContext& q, const OperadElement& x, Slot i, const OperadElement& y) {
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
          if (auto w = q_compose_E(q, u, i, v)) out.add(*w, c);
          break;
        case Basis::F:
          if (auto box = compose_F_interval(q.base(), u, i, v)) add_box(q, *box, c, out);
          break;
        case Basis::H:
          if (auto w = q_compose_H(q, u, i, v)) out.add(*w, c);
          break;
      }
    }
  }
  return out;
}

namespace {

// F-expansion of E_w (up-set) or H_w (down-set) in the quotient.
void expand_in_F(const QuotientContext& q, Basis basis, const CliffWord& w, const mpq_class& c, OperadElement& out) {
  Interval box = basis == Basis::E ? Interval(w, q.base().top(w.length()))
                                   : Interval(CliffWord(std::vector<Letter>(w.length(), 0)), w);
  add_box(q, box, c, out);
}

}  // namespace

OperadElement convert(const QuotientContext& q, const OperadElement& x, Basis target) {
  if (x.basis() == target) return x;
  OperadElement f(Basis::F, x.arity());
  if (x.basis() == Basis::F) {
    f = x;
  } else {
    for (const auto& [w, c] : x.terms()) expand_in_F(q, x.basis(), w, c, f);
  }
  if (target == Basis::F) return f;
  // E_w has leading term F_w for the lexicographic order (smallest word of the
  // up-set), H_w for the reverse order; peel leading terms off.
  OperadElement out(target, x.arity());
  while (!f.is_zero()) {
    auto it = target == Basis::E ? f.terms().begin() : std::prev(f.terms().end());
    CliffWord w = it->first;
    mpq_class c = it->second;
    out.add(w, c);
    OperadElement sub(Basis::F, x.arity());
    expand_in_F(q, target, w, c, sub);
    f -= sub;
  }
  return out;
}

void validate(const QuotientContext& q, const OperadElement& x) {
  q.base().check_size(x.arity());
  for (const auto& [w, c] : x.terms()) {
    require_cliff(q.delta(), w);
    if (!q.contains(w)) throw Error(Errc::not_a_hill, "'" + to_string(w) + "' is not in " + q.name());
  }
}

AxiomReport check_axioms(const QuotientContext& q, Basis basis, std::size_t cap, std::size_t sample_budget,
                         unsigned jobs) {
  std::vector<std::vector<CliffWord>> words(cap + 1);
  for (std::size_t s = 1; s <= cap; ++s) words[s] = q.basis_words(s);
  auto comp = [&](const OperadElement& x, std::size_t i, const OperadElement& y) {
    return compose(q, x, Slot(i), y);
  };
  return detail::run_axioms(basis, words, q.delta().horizon(), comp, sample_budget, jobs);
}

}  // namespace cliffs
