#include "cliffs/series.hpp"

#include <algorithm>

#include "cliffs/error.hpp"

namespace cliffs {

TruncatedSeries::TruncatedSeries(std::size_t order, const std::vector<mpq_class>& coeffs) : coeffs_(order + 1, 0) {
  for (std::size_t k = 0; k < std::min(coeffs.size(), coeffs_.size()); ++k) coeffs_[k] = coeffs[k];
}

namespace {

void same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order()) throw Error(Errc::invalid_argument, "series truncated at different orders");
}

}  // namespace

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& other) const {
  same_order(*this, other);
  TruncatedSeries out = *this;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out.coeffs_[k] += other.coeffs_[k];
  return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& other) const { return *this + (-other); }

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& other) const {
  same_order(*this, other);
  TruncatedSeries out(order());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j < coeffs_.size(); ++j) out.coeffs_[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  return out;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries out = *this;
  for (auto& x : out.coeffs_) x = -x;
  return out;
}

TruncatedSeries TruncatedSeries::negate_argument() const {
  TruncatedSeries out = *this;
  for (std::size_t k = 1; k < coeffs_.size(); k += 2) out.coeffs_[k] = -out.coeffs_[k];
  return out;
}

TruncatedSeries TruncatedSeries::compose(const TruncatedSeries& g) const {
  same_order(*this, g);
  if (g.coeffs_[0] != 0) throw Error(Errc::invalid_argument, "inner series has a constant term");
  // Horner: f0 + g (f1 + g (f2 + ...))
  TruncatedSeries out(order());
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    out = out * g;
    out.coeffs_[0] += coeffs_[k];
  }
  return out;
}

}  // namespace cliffs
