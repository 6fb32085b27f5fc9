#pragma once

#include <exception>
#include <optional>
#include <random>
#include <thread>
#include <vector>

#include "cliffs/operad.hpp"

namespace cliffs::detail {

// words[s] lists the basis words of size s (index 0 unused). compose(x, i, y)
// composes elements in the given basis.
template <typename Compose>
AxiomReport run_axioms(Basis basis, const std::vector<std::vector<CliffWord>>& words,
                       std::optional<std::size_t> horizon, Compose compose, std::size_t sample_budget,
                       unsigned jobs) {
  std::vector<CliffWord> all;
  for (const auto& level : words) all.insert(all.end(), level.begin(), level.end());
  const std::size_t n = all.size();

  auto mono = [&](const CliffWord& w) { return OperadElement::monomial(basis, w); };
  auto fits = [&](const CliffWord& a, const CliffWord& b, const CliffWord& c) {
    return !horizon || a.length() + b.length() + c.length() <= *horizon;
  };

  auto check_triple = [&](const CliffWord& a, const CliffWord& b, const CliffWord& c,
                          const std::vector<OperadElement>& ab, AxiomReport& rep) {
    OperadElement ea = mono(a), eb = mono(b), ec = mono(c);
    for (std::size_t i = 1; i <= a.size(); ++i) {
      for (std::size_t j = 1; j <= b.size(); ++j) {
        ++rep.checked;
        auto lhs = compose(ab[i - 1], i + j - 1, ec);
        auto rhs = compose(ea, i, compose(eb, j, ec));
        if (!(lhs == rhs)) rep.violations.push_back({"sequential", a, b, c, i, j});
      }
      for (std::size_t j = i + 1; j <= a.size(); ++j) {
        ++rep.checked;
        auto lhs = compose(ab[i - 1], j + b.size() - 1, ec);
        auto rhs = compose(compose(ea, j, ec), i, eb);
        if (!(lhs == rhs)) rep.violations.push_back({"parallel", a, b, c, i, j});
      }
    }
  };
  auto first_products = [&](const CliffWord& a, const CliffWord& b) {
    std::vector<OperadElement> ab;
    for (std::size_t i = 1; i <= a.size(); ++i) ab.push_back(compose(mono(a), i, mono(b)));
    return ab;
  };

  AxiomReport report;
  OperadElement one = unit(basis);
  for (const auto& f : all) {
    ++report.checked;
    if (!(compose(one, 1, mono(f)) == mono(f))) report.violations.push_back({"left unit", f, {}, {}, 1, 0});
    for (std::size_t i = 1; i <= f.size(); ++i) {
      ++report.checked;
      if (!(compose(mono(f), i, one) == mono(f))) report.violations.push_back({"right unit", f, {}, {}, i, 0});
    }
  }

  double total = static_cast<double>(n) * n * n;
  if (sample_budget > 0 && total > static_cast<double>(sample_budget)) {
    std::mt19937_64 rng(0x5eedULL);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t s = 0; s < sample_budget; ++s) {
      const auto& a = all[pick(rng)];
      const auto& b = all[pick(rng)];
      const auto& c = all[pick(rng)];
      if (!fits(a, b, c)) {
        ++report.skipped;
        continue;
      }
      check_triple(a, b, c, first_products(a, b), report);
    }
    return report;
  }

  jobs = std::max(1u, jobs);
  std::vector<AxiomReport> per_first(n);
  auto worker = [&](unsigned t) {
    for (std::size_t x = t; x < n; x += jobs) {
      AxiomReport& rep = per_first[x];
      for (std::size_t y = 0; y < n; ++y) {
        std::optional<std::vector<OperadElement>> ab;
        for (std::size_t z = 0; z < n; ++z) {
          if (!fits(all[x], all[y], all[z])) {
            ++rep.skipped;
            continue;
          }
          if (!ab) ab = first_products(all[x], all[y]);
          check_triple(all[x], all[y], all[z], *ab, rep);
        }
      }
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t)
      pool.emplace_back([&, t] {
        try {
          worker(t);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  for (auto& rep : per_first) {
    report.checked += rep.checked;
    report.skipped += rep.skipped;
    report.violations.insert(report.violations.end(), rep.violations.begin(), rep.violations.end());
  }
  return report;
}

}  // namespace cliffs::detail
