#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace cliffs {

// Power series with exact rational coefficients, truncated after t^order.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1, 0) {}
  TruncatedSeries(std::size_t order, const std::vector<mpq_class>& coeffs);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const mpq_class& operator[](std::size_t k) const { return coeffs_.at(k); }
  mpq_class& operator[](std::size_t k) { return coeffs_.at(k); }
  const std::vector<mpq_class>& coefficients() const noexcept { return coeffs_; }

  TruncatedSeries operator+(const TruncatedSeries& other) const;
  TruncatedSeries operator-(const TruncatedSeries& other) const;
  TruncatedSeries operator*(const TruncatedSeries& other) const;
  TruncatedSeries operator-() const;
  // f(-t)
  TruncatedSeries negate_argument() const;
  // f(g(t)); g must have no constant term.
  TruncatedSeries compose(const TruncatedSeries& g) const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<mpq_class> coeffs_;
};

}  // namespace cliffs
