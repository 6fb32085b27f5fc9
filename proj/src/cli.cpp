#include "cliffs/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "cliffs/bijections.hpp"
#include "cliffs/cliffs.hpp"
#include "cliffs/dual.hpp"
#include "cliffs/error.hpp"
#include "cliffs/hills.hpp"
#include "cliffs/operad.hpp"
#include "cliffs/presentation.hpp"

namespace cliffs {

namespace {

constexpr double default_budget_seconds = 600;

std::string csv_field(const std::string& s) {
  if (s.find(',') == std::string::npos && s.find('"') == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string join(const std::vector<std::size_t>& xs) {
  std::string out;
  for (std::size_t k = 0; k < xs.size(); ++k) out += (k ? "," : "") + std::to_string(xs[k]);
  return out;
}

double budget_from(double flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("CLIFF_OPERADS_BUDGET_SECS")) {
    try {
      double v = std::stod(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
    throw Error(Errc::parse_error, std::string("bad CLIFF_OPERADS_BUDGET_SECS '") + env + "'");
  }
  return default_budget_seconds;
}

// Truncated arithmetic maps get a horizon large enough for the requested size.
RangeMap widen(const RangeMap& d, std::size_t max_size) {
  if (d.horizon() && d.arithmetic_step() && max_size > 0 && *d.horizon() < max_size - 1)
    return RangeMap::arithmetic(*d.arithmetic_step(), max_size - 1);
  return d;
}

struct Common {
  std::string format;  // empty: the subcommand default
  bool no_header = false;
};

void add_format(CLI::App* sub, Common& c, std::vector<std::string> choices) {
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember(choices));
  sub->add_flag("--no-header", c.no_header, "Omit the CSV header");
}

OperadElement build_element(Basis basis, const CliffWord& w) { return OperadElement::monomial(basis, w); }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Operads of cliffs and hills: enumeration, compositions, presentations, duals"};
  app.name("cliff-operads");
  app.require_subcommand(1);

  std::string delta_text, word_text, word2_text, basis_text, target_text, kind, input;
  std::size_t size = 0, slot = 0, cap = 4, samples = 0, gen_max = 6, rel_max = 5, dual_max = 4;
  bool hills = false, inverse = false, show = false, check = false, reverse = false;
  double budget = 0;
  unsigned jobs = 1;
  Letter param = 1, c_value = 0;
  std::string presentation = "dual";
  Common fmt;

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List the cliffs (or hills) of a size");
  enumerate_cmd->add_option("delta", delta_text, "Range map")->required();
  enumerate_cmd->add_option("size", size, "Size (length + 1)")->required();
  enumerate_cmd->add_flag("--hills", hills, "Hills only");
  add_format(enumerate_cmd, fmt, {"plain", "csv", "json"});

  auto* count_cmd = app.add_subcommand("count", "Count the cliffs (or hills) of a size");
  count_cmd->add_option("delta", delta_text)->required();
  count_cmd->add_option("size", size)->required();
  count_cmd->add_flag("--hills", hills);
  add_format(count_cmd, fmt, {"plain", "json"});

  auto* compose_cmd = app.add_subcommand("compose", "Partial composition of two basis elements");
  compose_cmd->add_option("delta", delta_text)->required();
  compose_cmd->add_option("basis", basis_text, "E, F or H")->required();
  compose_cmd->add_option("u", word_text)->required();
  compose_cmd->add_option("slot", slot)->required();
  compose_cmd->add_option("v", word2_text)->required();
  compose_cmd->add_flag("--hills", hills, "Compose in the hill quotient");
  add_format(compose_cmd, fmt, {"plain", "json"});

  auto* convert_cmd = app.add_subcommand("convert", "Express a basis element in another basis");
  convert_cmd->add_option("delta", delta_text)->required();
  convert_cmd->add_option("basis", basis_text)->required();
  convert_cmd->add_option("word", word_text)->required();
  convert_cmd->add_option("target", target_text)->required();
  convert_cmd->add_flag("--hills", hills);
  add_format(convert_cmd, fmt, {"plain", "json"});

  auto* generators_cmd = app.add_subcommand("generators", "Minimal generating set, graded");
  generators_cmd->add_option("delta", delta_text)->required();
  generators_cmd->add_option("--max-arity", gen_max, "Largest arity");
  generators_cmd->add_flag("--hills", hills);
  generators_cmd->add_flag("--list", show, "List the generators");
  add_format(generators_cmd, fmt, {"csv", "plain", "json"});

  auto* relations_cmd = app.add_subcommand("relations", "Dimensions of the relation spaces, graded");
  relations_cmd->add_option("delta", delta_text)->required();
  relations_cmd->add_option("--max-arity", rel_max, "Largest arity");
  relations_cmd->add_flag("--hills", hills);
  relations_cmd->add_option("--budget", budget, "Time budget in seconds");
  relations_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  relations_cmd->add_flag("--reverse-order", reverse, "Enumerate trees in reverse order");
  add_format(relations_cmd, fmt, {"csv", "plain", "json"});

  auto* dual_cmd = app.add_subcommand("dual", "Quadratic presentations of the hill operads of const:c and their duals");
  dual_cmd->add_option("c", c_value)->required();
  dual_cmd->add_option("--max-arity", dual_max, "Largest arity");
  dual_cmd->add_option("--presentation", presentation)->check(CLI::IsMember({"hi", "dual", "kstar", "annihilator"}));
  dual_cmd->add_flag("--show", show, "Print the relations");
  dual_cmd->add_flag("--check", check, "Print the rank, span and series checks");
  dual_cmd->add_option("--budget", budget);
  add_format(dual_cmd, fmt, {"csv", "plain", "json"});

  auto* biject_cmd = app.add_subcommand("biject", "Bijections: comp, perm, tree, path, dyck");
  biject_cmd->add_option("kind", kind)->required()->check(CLI::IsMember({"comp", "perm", "tree", "path", "dyck"}));
  biject_cmd->add_option("input", input)->required();
  biject_cmd->add_flag("--inverse", inverse);
  biject_cmd->add_option("--param", param, "m for tree/dyck, c for path")->default_val(1);

  auto* axioms_cmd = app.add_subcommand("axioms", "Check the operad axioms");
  axioms_cmd->add_option("delta", delta_text)->required();
  axioms_cmd->add_option("--cap", cap)->default_val(4);
  axioms_cmd->add_option("--samples", samples, "Random triples instead of all (0: all)")->default_val(0);
  axioms_cmd->add_option("--basis", basis_text, "E, F, H or all")->default_val("all");
  axioms_cmd->add_flag("--hills", hills);
  axioms_cmd->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

  auto* info_cmd = app.add_subcommand("info", "Properties of a range map");
  info_cmd->add_option("delta", delta_text)->required();

  auto* prime_cmd = app.add_subcommand("prime", "Primality of a cliff");
  prime_cmd->add_option("delta", delta_text)->required();
  prime_cmd->add_option("word", word_text)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }

  if (fmt.format.empty())
    fmt.format = generators_cmd->parsed() || relations_cmd->parsed() || dual_cmd->parsed() ? "csv" : "plain";

  try {
    if (enumerate_cmd->parsed()) {
      RangeMap d = parse_range_map(delta_text);
      auto words = enumerate(d, size, hills);
      if (fmt.format == "json") {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const auto& w : words) j.push_back(to_string(w));
        out << j.dump() << "\n";
      } else {
        if (fmt.format == "csv" && !fmt.no_header) out << "word\n";
        for (const auto& w : words) out << (fmt.format == "csv" ? csv_field(to_string(w)) : to_string(w)) << "\n";
      }
      return exit_ok;
    }
    if (count_cmd->parsed()) {
      RangeMap d = parse_range_map(delta_text);
      mpz_class n = count(d, size, hills);
      if (fmt.format == "json") out << "{\"size\":" << size << ",\"count\":\"" << n.get_str() << "\"}\n";
      else out << n.get_str() << "\n";
      return exit_ok;
    }
    if (compose_cmd->parsed() || convert_cmd->parsed()) {
      RangeMap d = parse_range_map(delta_text);
      OperadContext ctx(d);
      Basis basis = parse_basis(basis_text);
      OperadElement result(basis, 1);
      std::string quotient;
      auto run = [&](auto& context) {
        OperadElement x = build_element(basis, parse_word(word_text));
        validate(context, x);
        if (compose_cmd->parsed()) {
          OperadElement y = build_element(basis, parse_word(word2_text));
          validate(context, y);
          result = compose(context, x, Slot(slot), y);
        } else {
          result = convert(context, x, parse_basis(target_text));
        }
      };
      if (hills) {
        QuotientContext q = QuotientContext::hills(ctx);
        quotient = q.name();
        run(q);
      } else {
        run(ctx);
      }
      if (fmt.format == "json") out << to_json(result, quotient) << "\n";
      else out << to_string(result) << "\n";
      return exit_ok;
    }
    if (generators_cmd->parsed() || relations_cmd->parsed()) {
      std::size_t max_arity = generators_cmd->parsed() ? gen_max : rel_max;
      RangeMap d = widen(parse_range_map(delta_text), max_arity);
      OperadContext ctx(d);
      std::optional<QuotientContext> q;
      if (hills) q.emplace(QuotientContext::hills(ctx));
      Target target = q ? Target(*q) : Target(ctx);
      if (generators_cmd->parsed()) {
        auto gens = generating_set(target, max_arity);
        std::vector<std::size_t> counts;
        for (std::size_t n = 1; n <= max_arity; ++n) counts.push_back(gens[n].size());
        if (fmt.format == "plain") {
          out << join(counts) << "\n";
          if (show)
            for (std::size_t n = 1; n <= max_arity; ++n)
              for (const auto& w : gens[n]) out << to_string(w) << "\n";
        } else if (fmt.format == "json") {
          nlohmann::ordered_json j;
          j["delta"] = to_string(d);
          j["quotient"] = hills ? "hills" : "";
          j["counts"] = counts;
          if (show) {
            nlohmann::ordered_json lists = nlohmann::ordered_json::array();
            for (std::size_t n = 1; n <= max_arity; ++n) {
              nlohmann::ordered_json level = nlohmann::ordered_json::array();
              for (const auto& w : gens[n]) level.push_back(to_string(w));
              lists.push_back(level);
            }
            j["generators"] = lists;
          }
          out << j.dump() << "\n";
        } else {
          if (!fmt.no_header) out << (show ? "arity,word\n" : "arity,count\n");
          for (std::size_t n = 1; n <= max_arity; ++n) {
            if (show)
              for (const auto& w : gens[n]) out << n << "," << csv_field(to_string(w)) << "\n";
            else
              out << n << "," << counts[n - 1] << "\n";
          }
        }
        return exit_ok;
      }
      RelationProfileOptions options;
      options.budget_seconds = budget_from(budget);
      options.reverse_order = reverse;
      options.jobs = jobs;
      RelationProfile profile = relation_profile(target, max_arity, options);
      if (fmt.format == "plain") {
        std::vector<std::size_t> minimal;
        for (const auto& r : profile.rows) minimal.push_back(r.dim_minimal);
        out << join(minimal) << "\n";
      } else if (fmt.format == "json") {
        nlohmann::ordered_json j;
        j["delta"] = to_string(d);
        j["quotient"] = hills ? "hills" : "";
        j["complete"] = profile.complete;
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const auto& r : profile.rows)
          rows.push_back({{"arity", r.arity},
                          {"generators", profile.generator_counts[r.arity - 1]},
                          {"dim_free", r.dim_free},
                          {"dim_target", r.dim_target},
                          {"dim_kernel", r.dim_kernel},
                          {"dim_ideal", r.dim_ideal},
                          {"dim_minimal", r.dim_minimal}});
        j["rows"] = rows;
        out << j.dump() << "\n";
      } else {
        if (!fmt.no_header) out << "arity,dim_free,dim_target,dim_kernel,dim_ideal,dim_minimal\n";
        for (const auto& r : profile.rows)
          out << r.arity << "," << r.dim_free << ","
              << r.dim_target << "," << r.dim_kernel << "," << r.dim_ideal << "," << r.dim_minimal << "\n";
      }
      if (hills && d.arithmetic_step() == 1u && profile.rows.size() >= 3) {
        // Observation only: compared with C(2n - 5, n - 2) (OEIS A001700), never enforced.
        bool same = true;
        for (const auto& r : profile.rows)
          if (r.arity >= 3) same &= binomial(2 * r.arity - 5, r.arity - 2) == r.dim_minimal;
        err << "note: minimal relation counts from arity 3 " << (same ? "agree with" : "differ from")
            << " C(2n-5, n-2) (OEIS A001700) up to arity " << profile.rows.back().arity << "\n";
      }
      if (!profile.complete) {
        err << "error: " << profile.stopped_reason << "\n";
        return exit_resource;
      }
      return exit_ok;
    }
    if (dual_cmd->parsed()) {
      BinaryPresentation p = presentation == "hi"      ? hi_c_presentation(c_value)
                             : presentation == "kstar" ? kstar_presentation(c_value)
                             : presentation == "annihilator"
                                 ? annihilator_presentation(hi_c_presentation(c_value))
                                 : dual_presentation(c_value);
      if (show) {
        out << (fmt.format == "json" ? to_json(p) + "\n" : to_string(p));
        if (!check) return exit_ok;
      }
      if (check) {
        out << "relations," << p.relations.size() << "\n";
        out << "relation_rank," << relation_rank(p) << "\n";
        out << "span_equal_kstar," << (span_equal(dual_presentation(c_value), kstar_presentation(c_value)) ? 1 : 0)
            << "\n";
        out << "span_equal_annihilator,"
            << (span_equal(dual_presentation(c_value), annihilator_presentation(hi_c_presentation(c_value))) ? 1 : 0)
            << "\n";
        TruncatedSeries s = inversion_check(c_value, 6);
        TruncatedSeries t(6);
        t[1] = 1;
        out << "series_identity_order_6," << (s == t ? 1 : 0) << "\n";
        return exit_ok;
      }
      auto dims = quotient_dimensions(p, dual_max, budget > 0 ? budget : 0);
      if (fmt.format == "plain") {
        out << join(dims) << "\n";
      } else if (fmt.format == "json") {
        nlohmann::ordered_json j;
        j["c"] = c_value;
        j["presentation"] = presentation;
        j["dimensions"] = dims;
        out << j.dump() << "\n";
      } else {
        if (!fmt.no_header) out << "arity,dimension\n";
        for (std::size_t n = 1; n <= dims.size(); ++n) out << n << "," << dims[n - 1] << "\n";
      }
      return exit_ok;
    }
    if (biject_cmd->parsed()) {
      if (kind == "comp") {
        if (inverse) out << to_string(from_composition(parse_sequence(input))) << "\n";
        else out << join(to_composition(parse_word(input))) << "\n";
      } else if (kind == "perm") {
        if (inverse) out << to_string(from_permutation(parse_sequence(input))) << "\n";
        else out << format_sequence(to_permutation(parse_word(input))) << "\n";
      } else if (kind == "tree") {
        if (inverse) out << to_string(from_tree(param, parse_tree(param, input))) << "\n";
        else out << to_string(to_tree(param, parse_word(input))) << "\n";
      } else if (kind == "path") {
        if (inverse) out << to_string(from_rect_path(param, input)) << "\n";
        else out << to_rect_path(param, parse_word(input)) << "\n";
      } else {
        if (inverse) out << to_string(from_dyck_path(param, input)) << "\n";
        else out << to_dyck_path(param, parse_word(input)) << "\n";
      }
      return exit_ok;
    }
    if (axioms_cmd->parsed()) {
      RangeMap d = parse_range_map(delta_text);
      OperadContext ctx(d);
      std::vector<Basis> bases;
      if (basis_text == "all") bases = {Basis::E, Basis::F, Basis::H};
      else bases = {parse_basis(basis_text)};
      bool ok = true;
      for (Basis b : bases) {
        AxiomReport rep = hills ? check_axioms(QuotientContext::hills(ctx), b, cap, samples, jobs)
                                : check_axioms(ctx, b, cap, samples, jobs);
        for (const auto& v : rep.violations) {
          ok = false;
          out << basis_letter(b) << ": " << to_string(v) << "\n";
        }
      }
      if (!ok) return exit_internal;
      out << "ok\n";
      return exit_ok;
    }
    if (info_cmd->parsed()) {
      RangeMap d = parse_range_map(delta_text);
      out << "delta," << csv_field(to_string(d)) << "\n";
      out << "unimodal," << (is_unimodal(d) ? 1 : 0) << "\n";
      out << "weakly_increasing," << (is_weakly_increasing(d) ? 1 : 0) << "\n";
      out << "one_dominated," << (is_one_dominated(d) ? 1 : 0) << "\n";
      out << "closure_bar," << csv_field(to_string(closure_bar(d))) << "\n";
      auto c = first_change_index(d);
      out << "first_change_index," << (c ? std::to_string(*c) : "") << "\n";
      out << "domination_index," << (is_one_dominated(d) ? std::to_string(domination_index(d)) : "") << "\n";
      return exit_ok;
    }
    if (prime_cmd->parsed()) {
      RangeMap d = parse_range_map(delta_text);
      OperadContext ctx(d);
      out << (is_prime(ctx, parse_word(word_text)) ? "prime" : "not prime") << "\n";
      return exit_ok;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_resource_error(e.code()) ? exit_resource : exit_usage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_internal;
  }
  return exit_usage;
}

}  // namespace cliffs
