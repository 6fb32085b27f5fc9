#include "cliffs/dual.hpp"

#include <json.hpp>

#include "cliffs/cliffs.hpp"
#include "cliffs/error.hpp"
#include "cliffs/linalg.hpp"

namespace cliffs {

namespace {

std::vector<std::string> labels(const std::string& stem, Letter c) {
  std::vector<std::string> out;
  for (Letter a = 0; a <= c; ++a) out.push_back(stem + std::to_string(a));
  return out;
}

void add(QuadraticRelation& r, std::size_t x, std::size_t slot, std::size_t y, const mpq_class& coef) {
  auto& v = r[ArityThreeTerm{x, slot, y}];
  v += coef;
  if (v == 0) r.erase(ArityThreeTerm{x, slot, y});
}

// Integer coordinate row of a relation.
SparseRow to_row(const QuadraticRelation& r, std::size_t g) {
  mpz_class scale = 1;
  for (const auto& [t, q] : r) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q.get_den_mpz_t());
  std::map<std::uint32_t, mpz_class> entries;
  for (const auto& [t, q] : r) {
    mpq_class v = q * scale;
    entries[static_cast<std::uint32_t>(coordinate(t, g))] += v.get_num();
  }
  SparseRow row;
  for (auto& [c, x] : entries)
    if (x != 0) row.emplace_back(c, x);
  return row;
}

nlohmann::ordered_json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

std::vector<SparseRow> rows_of(const BinaryPresentation& p) {
  std::vector<SparseRow> rows;
  for (const auto& r : p.relations) rows.push_back(to_row(r, p.generators()));
  return rows;
}

}  // namespace

BinaryPresentation hi_c_presentation(Letter c) {
  BinaryPresentation p{labels("E", c), {}};
  for (Letter b = 0; b <= c; ++b)
    for (Letter a = 0; a <= b; ++a)
      for (Letter a2 = 0; a2 <= b; ++a2) {
        QuadraticRelation r;
        add(r, a, 1, b, 1);
        add(r, b, 2, a2, -1);
        p.relations.push_back(r);
      }
  for (Letter b = 0; b <= c; ++b)
    for (Letter a = 0; a < b; ++a) {
      QuadraticRelation r;
      add(r, b, 1, a, 1);
      add(r, a, 2, b, -1);
      p.relations.push_back(r);
    }
  return p;
}

BinaryPresentation dual_presentation(Letter c) {
  BinaryPresentation p{labels("E*", c), {}};
  for (Letter b = 0; b <= c; ++b) {
    QuadraticRelation r;
    for (Letter a = 0; a <= b; ++a) {
      add(r, a, 1, b, 1);
      add(r, b, 2, a, -1);
    }
    p.relations.push_back(r);
  }
  for (Letter b = 0; b <= c; ++b)
    for (Letter a = 0; a < b; ++a) {
      QuadraticRelation r;
      add(r, b, 1, a, 1);
      add(r, a, 2, b, -1);
      p.relations.push_back(r);
    }
  return p;
}

BinaryPresentation kstar_presentation(Letter c) {
  BinaryPresentation p{labels("E*", c), {}};
  for (Letter b = 0; b <= c; ++b)
    for (Letter a = 0; a <= b; ++a) {
      QuadraticRelation r;
      for (Letter b2 = 0; b2 <= b; ++b2)
        for (Letter a2 = 0; a2 <= a; ++a2) {
          add(r, b2, 1, a2, 1);
          add(r, a2, 2, b2, -1);
        }
      p.relations.push_back(r);
    }
  return p;
}

std::size_t coordinate(const ArityThreeTerm& t, std::size_t generators) {
  if (t.outer >= generators || t.inner >= generators || t.slot < 1 || t.slot > 2)
    throw Error(Errc::invalid_argument, "bad arity-3 term");
  return (t.outer * generators + t.inner) * 2 + (t.slot - 1);
}

BinaryPresentation annihilator_presentation(const BinaryPresentation& p) {
  std::size_t g = p.generators();
  std::size_t dim = 2 * g * g;
  // Columns of the relation matrix, signed by the pairing; their left kernel is the orthogonal.
  std::vector<std::map<std::uint32_t, mpz_class>> columns(dim);
  auto rows = rows_of(p);
  for (std::size_t j = 0; j < rows.size(); ++j)
    for (const auto& [k, x] : rows[j]) columns[k][static_cast<std::uint32_t>(j)] = (k % 2 == 0) ? x : mpz_class(-x);
  std::vector<SparseRow> transposed;
  for (auto& col : columns) {
    SparseRow r;
    for (auto& [j, x] : col) r.emplace_back(j, x);
    transposed.push_back(std::move(r));
  }
  BinaryPresentation out{p.labels, {}};
  for (auto& label : out.labels) label += "!";
  for (const auto& v : left_kernel(transposed, rows.size())) {
    QuadraticRelation r;
    for (const auto& [k, x] : v) {
      std::size_t slot = k % 2 + 1, pair = k / 2;
      add(r, pair / g, slot, pair % g, mpq_class(x));
    }
    out.relations.push_back(r);
  }
  return out;
}

FreeTerm to_free_term(const ArityThreeTerm& t) {
  auto x = static_cast<std::int32_t>(t.outer), y = static_cast<std::int32_t>(t.inner);
  if (t.slot == 1) return FreeTerm{{x, y, -1, -1, -1}};
  return FreeTerm{{x, -1, y, -1, -1}};
}

std::size_t relation_rank(const BinaryPresentation& p) { return rank(rows_of(p), 2 * p.generators() * p.generators()); }

bool span_equal(const BinaryPresentation& a, const BinaryPresentation& b) {
  if (a.generators() != b.generators()) return false;
  auto ra = rows_of(a), rb = rows_of(b);
  std::size_t dim = 2 * a.generators() * a.generators();
  std::size_t rank_a = rank(ra, dim), rank_b = rank(rb, dim);
  ra.insert(ra.end(), rb.begin(), rb.end());
  return rank_a == rank_b && rank(ra, dim) == rank_a;
}

std::vector<std::size_t> quotient_dimensions(const BinaryPresentation& p, std::size_t max_arity,
                                             double budget_seconds) {
  Deadline deadline = budget_seconds > 0 ? Deadline(budget_seconds) : Deadline();
  FreeTermTable table(Alphabet{std::vector<std::size_t>(p.generators(), 2)});
  std::vector<std::vector<SparseRow>> ideal(max_arity + 1);
  std::vector<std::size_t> dims;
  for (std::size_t n = 1; n <= max_arity; ++n) {
    const auto& trees = table.terms(n);
    std::vector<SparseRow> rows;
    if (n == 3) {
      for (const auto& r : p.relations) {
        std::map<std::uint32_t, mpz_class> entries;
        for (const auto& [c, x] : to_row(r, p.generators())) {
          std::size_t pair = c / 2;
          ArityThreeTerm t{pair / p.generators(), c % 2 + 1, pair % p.generators()};
          entries[static_cast<std::uint32_t>(table.index_of(to_free_term(t)))] += x;
        }
        SparseRow row;
        for (auto& [c, x] : entries)
          if (x != 0) row.emplace_back(c, x);
        rows.push_back(std::move(row));
      }
    }
    for (std::size_t b = 3; b < n; ++b) {
      const auto& lower = table.terms(b);
      const auto& inner = table.terms(n - b + 1);
      for (const auto& y : ideal[b]) {
        deadline.check("ideal generation");
        for (const auto& s : inner) {
          auto push = [&](auto make) {
            std::map<std::uint32_t, mpz_class> entries;
            for (const auto& [c, x] : y) entries[static_cast<std::uint32_t>(table.index_of(make(lower[c])))] += x;
            SparseRow row;
            for (auto& [c, x] : entries)
              if (x != 0) row.emplace_back(c, x);
            rows.push_back(std::move(row));
          };
          for (std::size_t i = 1; i <= b; ++i) push([&](const FreeTerm& t) { return graft(t, i, s); });
          for (std::size_t i = 1; i <= n - b + 1; ++i) push([&](const FreeTerm& t) { return graft(s, i, t); });
        }
      }
    }
    ideal[n] = echelon(std::move(rows), trees.size(), deadline);
    dims.push_back(trees.size() - ideal[n].size());
  }
  return dims;
}

TruncatedSeries hill_series(Letter c, std::size_t order) {
  TruncatedSeries s(order);
  for (std::size_t n = 1; n <= order; ++n) s[n] = mpq_class(binomial(n + c - 1, c));
  return s;
}

TruncatedSeries dual_series(Letter c, std::size_t order) {
  TruncatedSeries s(order);
  for (std::size_t n = 1; n <= order; ++n) s[n] = mpq_class(fuss_catalan(c, n));
  return s;
}

TruncatedSeries inversion_check(Letter c, std::size_t order) {
  TruncatedSeries g = hill_series(c, order);
  return dual_series(c, order).compose(-g.negate_argument());
}

std::string to_string(const BinaryPresentation& p) {
  std::string out;
  for (const auto& r : p.relations) {
    bool first = true;
    for (const auto& [t, q] : r) {
      mpq_class m = abs(q);
      out += first ? (q < 0 ? "-" : "") : (q < 0 ? " - " : " + ");
      first = false;
      if (m != 1) out += m.get_str() + "*";
      out += p.labels[t.outer] + " o" + std::to_string(t.slot) + " " + p.labels[t.inner];
    }
    out += "\n";
  }
  return out;
}

std::string to_json(const BinaryPresentation& p) {
  nlohmann::ordered_json j;
  j["generators"] = p.labels;
  nlohmann::ordered_json rels = nlohmann::ordered_json::array();
  for (const auto& r : p.relations) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [t, q] : r) {
      nlohmann::ordered_json e;
      e["outer"] = p.labels[t.outer];
      e["slot"] = t.slot;
      e["inner"] = p.labels[t.inner];
      e["num"] = integer_json(q.get_num());
      e["den"] = integer_json(q.get_den());
      terms.push_back(e);
    }
    rels.push_back(terms);
  }
  j["relations"] = rels;
  return j.dump();
}

}  // namespace cliffs
