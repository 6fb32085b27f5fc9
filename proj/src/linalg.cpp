#include "cliffs/linalg.hpp"

#include <algorithm>

#include "cliffs/error.hpp"

namespace cliffs {

Deadline::Deadline(double seconds)
    : end_(std::chrono::steady_clock::now() +
           std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(seconds))) {}

bool Deadline::expired() const { return end_ && std::chrono::steady_clock::now() >= *end_; }

void Deadline::check(const char* stage) const {
  if (expired()) throw Error(Errc::time_budget_exceeded, std::string("time budget exhausted during ") + stage);
}

void normalize(SparseRow& row) {
  if (row.empty()) return;
  mpz_class g = 0;
  for (const auto& [c, x] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g != 1)
    for (auto& [c, x] : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

namespace {

// a * x - b * y
SparseRow combine(const mpz_class& a, const SparseRow& x, const mpz_class& b, const SparseRow& y) {
  SparseRow out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  mpz_class t;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.emplace_back(x[i].first, a * x[i].second);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, -(b * y[j].second));
      ++j;
    } else {
      t = a * x[i].second - b * y[j].second;
      if (t != 0) out.emplace_back(x[i].first, t);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

std::vector<SparseRow> echelon(std::vector<SparseRow> rows, std::size_t ncols, const Deadline& deadline) {
  std::vector<std::vector<SparseRow>> buckets(ncols);
  for (auto& r : rows) {
    if (r.empty()) continue;
    if (r.front().first >= ncols) throw Error(Errc::invalid_argument, "column index out of range");
    normalize(r);
    buckets[r.front().first].push_back(std::move(r));
  }
  std::vector<SparseRow> out;
  std::size_t work = 0;
  for (std::size_t col = 0; col < ncols; ++col) {
    auto bucket = std::move(buckets[col]);
    if (bucket.empty()) continue;
    std::size_t p = 0;
    for (std::size_t k = 1; k < bucket.size(); ++k)
      if (mpz_cmpabs(bucket[k].front().second.get_mpz_t(), bucket[p].front().second.get_mpz_t()) < 0) p = k;
    SparseRow pivot = std::move(bucket[p]);
    mpz_class g, a, b;
    for (std::size_t k = 0; k < bucket.size(); ++k) {
      if (k == p) continue;
      if ((++work & 1023) == 0) deadline.check("elimination");
      const mpz_class& lp = pivot.front().second;
      const mpz_class& lr = bucket[k].front().second;
      mpz_gcd(g.get_mpz_t(), lp.get_mpz_t(), lr.get_mpz_t());
      a = lp / g;
      b = lr / g;
      SparseRow r = combine(a, bucket[k], b, pivot);
      if (r.empty()) continue;
      normalize(r);
      buckets[r.front().first].push_back(std::move(r));
    }
    out.push_back(std::move(pivot));
  }
  return out;
}

std::size_t rank(std::vector<SparseRow> rows, std::size_t ncols, const Deadline& deadline) {
  return echelon(std::move(rows), ncols, deadline).size();
}

std::vector<SparseRow> left_kernel(const std::vector<SparseRow>& rows, std::size_t ncols, const Deadline& deadline) {
  std::vector<SparseRow> augmented;
  augmented.reserve(rows.size());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    SparseRow r = rows[k];
    r.emplace_back(static_cast<std::uint32_t>(ncols + k), 1);
    augmented.push_back(std::move(r));
  }
  std::vector<SparseRow> kernel;
  for (auto& r : echelon(std::move(augmented), ncols + rows.size(), deadline)) {
    if (r.front().first < ncols) continue;
    for (auto& [c, x] : r) c -= static_cast<std::uint32_t>(ncols);
    kernel.push_back(std::move(r));
  }
  return kernel;
}

}  // namespace cliffs
