#include "cliffs/presentation.hpp"

#include <algorithm>
#include <exception>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "cliffs/cliffs.hpp"
#include "cliffs/error.hpp"
#include "cliffs/linalg.hpp"

namespace cliffs {

std::string Target::describe() const {
  return (q_ ? q_->name() + " of " : std::string("cliffs of ")) + to_string(delta());
}

std::vector<CliffWord> Target::basis_words(std::size_t size) const {
  return q_ ? q_->basis_words(size) : ctx_->basis_words(size);
}

bool Target::contains(const CliffWord& w) const { return q_ ? q_->contains(w) : ctx_->contains(w); }

std::optional<CliffWord> Target::compose(const CliffWord& u, std::size_t i, const CliffWord& v) const {
  return q_ ? q_compose_E(*q_, u, Slot(i), v) : compose_E(*ctx_, u, Slot(i), v);
}

bool is_prime(const OperadContext& ctx, const CliffWord& w) {
  require_cliff(ctx.delta(), w);
  std::size_t len = w.length();
  if (len == 0) return false;
  for (std::size_t start = 0; start < len; ++start) {
    for (std::size_t lv = 1; start + lv <= len; ++lv) {
      if (lv == len) continue;
      std::vector<Letter> u, v;
      for (std::size_t j = 0; j < len; ++j) (j >= start && j < start + lv ? v : u).push_back(w[j]);
      if (is_cliff(ctx.delta(), CliffWord(u)) && is_cliff(ctx.delta(), CliffWord(v))) return false;
    }
  }
  return true;
}

bool is_prime_arithmetic_fast(Letter m, const CliffWord& w) {
  if (m == 0) throw Error(Errc::invalid_argument, "the recursive prime test needs m >= 1");
  bool prime = false;  // status of the prefix read so far; the empty word is not prime
  for (std::size_t len = 1; len <= w.length(); ++len) {
    long long a = w[len - 1];
    long long bound = (static_cast<long long>(len) - 2) * m + 1;
    prime = prime ? a != 0 : a >= bound;
  }
  return prime;
}

GradedWords generating_set(const Target& target, std::size_t max_arity) {
  GradedWords gens(max_arity + 1);
  std::vector<std::vector<CliffWord>> words(max_arity + 1);
  for (std::size_t n = 2; n <= max_arity; ++n) words[n] = target.basis_words(n);
  for (std::size_t n = 2; n <= max_arity; ++n) {
    std::unordered_set<CliffWord> decomposable;
    for (std::size_t a = 2; a < n; ++a) {
      std::size_t b = n + 1 - a;
      for (const auto& u : words[a])
        for (const auto& v : words[b])
          for (std::size_t i = 1; i <= a; ++i)
            if (auto w = target.compose(u, i, v)) decomposable.insert(*w);
    }
    for (const auto& w : words[n])
      if (!decomposable.count(w)) gens[n].push_back(w);
  }
  return gens;
}

std::vector<std::size_t> generator_counts(const Target& target, std::size_t max_arity) {
  auto gens = generating_set(target, max_arity);
  std::vector<std::size_t> counts;
  for (std::size_t n = 1; n <= max_arity; ++n) counts.push_back(gens[n].size());
  return counts;
}

Generators flatten(const GradedWords& graded) {
  Generators g;
  for (std::size_t n = 0; n < graded.size(); ++n)
    for (const auto& w : graded[n]) {
      g.words.push_back(w);
      g.alphabet.arities.push_back(n);
      g.labels.push_back("E" + to_compact(w));
    }
  return g;
}

namespace {

std::optional<CliffWord> eval_at(const Target& target, const Generators& gens, const FreeTerm& t, std::size_t& pos) {
  std::int32_t g = t.nodes.at(pos++);
  if (g < 0) return CliffWord{};
  auto k = static_cast<std::size_t>(g);
  std::size_t arity = gens.alphabet.arities.at(k);
  std::vector<std::optional<CliffWord>> children;
  children.reserve(arity);
  bool zero = false;
  for (std::size_t c = 0; c < arity; ++c) {
    children.push_back(eval_at(target, gens, t, pos));
    zero = zero || !children.back();
  }
  if (zero) return std::nullopt;
  std::optional<CliffWord> w = gens.words[k];
  for (std::size_t j = arity; j >= 1 && w; --j) w = target.compose(*w, j, *children[j - 1]);
  return w;
}

}  // namespace

std::optional<CliffWord> evaluate_word(const Target& target, const Generators& gens, const FreeTerm& t) {
  std::size_t pos = 0;
  auto w = eval_at(target, gens, t, pos);
  if (pos != t.nodes.size()) throw Error(Errc::invalid_argument, "malformed tree");
  return w;
}

OperadElement evaluate(const Target& target, const Generators& gens, const FreeTerm& t) {
  OperadElement out(Basis::E, t.arity());
  if (auto w = evaluate_word(target, gens, t)) out.add(*w, 1);
  return out;
}

namespace {

// Runs f(k) for k in [0, n) across jobs threads and concatenates the per-k
// outputs in order.
template <typename F>
std::vector<SparseRow> parallel_rows(std::size_t n, unsigned jobs, F f) {
  std::vector<std::vector<SparseRow>> parts(n);
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (jobs == 1) {
    for (std::size_t k = 0; k < n; ++k) parts[k] = f(k);
  } else {
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t)
      pool.emplace_back([&, t] {
        try {
          for (std::size_t k = t; k < n; k += jobs) parts[k] = f(k);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  std::vector<SparseRow> out;
  for (auto& p : parts)
    for (auto& r : p) out.push_back(std::move(r));
  return out;
}

SparseRow sorted_row(std::vector<std::pair<std::uint32_t, mpz_class>> entries) {
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseRow out;
  for (auto& [c, x] : entries) {
    if (!out.empty() && out.back().first == c) out.back().second += x;
    else out.emplace_back(c, std::move(x));
    if (out.back().second == 0) out.pop_back();
  }
  return out;
}

}  // namespace

RelationProfile relation_profile(const Target& target, std::size_t max_arity, const RelationProfileOptions& options) {
  Deadline deadline = options.budget_seconds > 0 ? Deadline(options.budget_seconds) : Deadline();
  RelationProfile profile;
  GradedWords graded = generating_set(target, max_arity);
  for (std::size_t n = 1; n <= max_arity; ++n) profile.generator_counts.push_back(graded[n].size());
  Generators gens = flatten(graded);
  FreeTermTable table(gens.alphabet);

  // Column of each tree; reversed when asked, to check order independence.
  auto column = [&](std::size_t n, std::size_t idx) {
    return static_cast<std::uint32_t>(options.reverse_order ? table.count(n) - 1 - idx : idx);
  };
  std::vector<std::vector<SparseRow>> kernels(max_arity + 1);

  try {
    for (std::size_t n = 1; n <= max_arity; ++n) {
      const auto& trees = table.terms(n);
      std::vector<CliffWord> words = target.basis_words(n);
      std::unordered_map<CliffWord, std::uint32_t> word_col;
      for (std::size_t k = 0; k < words.size(); ++k) word_col.emplace(words[k], static_cast<std::uint32_t>(k));

      std::vector<SparseRow> eval(trees.size());
      for (std::size_t k = 0; k < trees.size(); ++k) {
        if ((k & 255) == 0) deadline.check("evaluation");
        if (auto w = evaluate_word(target, gens, trees[k])) eval[column(n, k)] = {{word_col.at(*w), mpz_class(1)}};
      }
      kernels[n] = left_kernel(eval, words.size(), deadline);

      std::vector<std::pair<std::size_t, std::size_t>> sources;  // (b, kernel vector index)
      for (std::size_t b = 2; b < n; ++b)
        for (std::size_t y = 0; y < kernels[b].size(); ++y) sources.emplace_back(b, y);
      for (std::size_t b = 1; b <= n; ++b) table.terms(b);

      auto rows = parallel_rows(sources.size(), options.jobs, [&](std::size_t s) {
        deadline.check("ideal generation");
        auto [b, y] = sources[s];
        const SparseRow& vec = kernels[b][y];
        const auto& inner = table.terms(n - b + 1);
        const auto& lower = table.terms(b);
        std::vector<SparseRow> out;
        for (const auto& t : inner) {
          for (std::size_t i = 1; i <= b; ++i) {
            std::vector<std::pair<std::uint32_t, mpz_class>> e;
            for (const auto& [c, x] : vec) {
              std::size_t src = options.reverse_order ? lower.size() - 1 - c : c;
              e.emplace_back(column(n, table.index_of(graft(lower[src], i, t))), x);
            }
            out.push_back(sorted_row(std::move(e)));
          }
          for (std::size_t i = 1; i <= n - b + 1; ++i) {
            std::vector<std::pair<std::uint32_t, mpz_class>> e;
            for (const auto& [c, x] : vec) {
              std::size_t src = options.reverse_order ? lower.size() - 1 - c : c;
              e.emplace_back(column(n, table.index_of(graft(t, i, lower[src]))), x);
            }
            out.push_back(sorted_row(std::move(e)));
          }
        }
        return out;
      });
      std::size_t ideal = rank(std::move(rows), trees.size(), deadline);

      RelationProfileRow row;
      row.arity = n;
      row.dim_free = trees.size();
      row.dim_target = words.size();
      row.dim_kernel = kernels[n].size();
      row.dim_ideal = ideal;
      row.dim_minimal = row.dim_kernel - ideal;
      if (row.dim_free - row.dim_kernel != row.dim_target)
        throw Error(Errc::invalid_argument, "generators do not span arity " + std::to_string(n));
      profile.rows.push_back(row);
    }
  } catch (const Error& e) {
    if (e.code() != Errc::time_budget_exceeded) throw;
    profile.complete = false;
    profile.stopped_reason = e.what();
  }
  return profile;
}

}  // namespace cliffs
