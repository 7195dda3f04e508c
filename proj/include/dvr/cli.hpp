#pragma once

// Command-line front end. Every subcommand prints deterministic key=value
// lines (or a flat JSON object with --json). Exit codes: 0 success, 1 a check
// found a violation (or a FAIL-LITERAL clause under --strict), 2 usage,
// parse or domain error.

#include <algorithm>
#include <cstdint>
#include <exception>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dvr/dvr.hpp"

namespace dvr::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitError = 2;

/// Accumulates one invocation's result in both output modes.
class Output {
 public:
  void put(const std::string& key, const std::string& value) {
    lines_.push_back(key + "=" + value);
    json_[key] = value;
  }
  void put(const std::string& key, bool value) {
    lines_.push_back(key + "=" + (value ? "true" : "false"));
    json_[key] = value;
  }
  void put(const std::string& key, long value) { put(key, std::to_string(value)); }

  void report(const CheckReport& r) {
    for (const auto& l : r.lines()) lines_.push_back(l);
    for (const auto& t : r.tallies) {
      json_[t.name + ".pass"] = std::to_string(t.passed);
      json_[t.name + ".total"] = std::to_string(t.total);
      if (t.counterexample) json_[t.name + ".counterexample"] = *t.counterexample;
    }
  }

  void report(const StatusReport& r) {
    for (const auto& l : r.lines()) lines_.push_back(l);
    for (const auto& c : r.clauses) {
      json_[c.id + ".status"] = to_string(c.status);
      if (c.witness) json_[c.id + ".witness"] = *c.witness;
    }
  }

  void write(std::ostream& out, bool as_json) const {
    if (as_json) {
      out << json_.dump() << "\n";
      return;
    }
    for (const auto& l : lines_) out << l << "\n";
  }

 private:
  std::vector<std::string> lines_;
  nlohmann::ordered_json json_ = nlohmann::ordered_json::object();
};

namespace detail {

struct Options {
  std::string field;
  std::optional<std::uint64_t> seed;
  long samples = 1000;
  long max_level = 10;
  bool json = false;
  bool strict = false;
  std::string shifts_src;
  std::string shifts_dst;
  std::vector<std::string> args;
  std::string op;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline ValuationSpec field_of(const Options& o) {
  if (o.field.empty()) throw UsageError("--field is required");
  return ValuationSpec::parse(o.field);
}

inline std::uint64_t seed_of(const Options& o) {
  if (!o.seed) throw UsageError("--seed is required for sampling subcommands");
  return *o.seed;
}

inline void need_args(const Options& o, std::size_t lo, std::size_t hi, const std::string& usage) {
  if (o.args.size() < lo || o.args.size() > hi) throw UsageError("usage: " + usage);
}

inline long to_long(const std::string& s) {
  long v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end) throw ParseError("expected an integer, got '" + s + "'");
  return v;
}

inline std::vector<FieldElement> element_list(const std::string& text, const FieldSpec& field) {
  return parse_vector(text, field);
}

inline FracIdeal ideal_arg(const ValuationSpec& spec, const std::string& text) {
  const auto gens = element_list(text, spec.field());
  return ideal_from_generators(spec, gens);
}

inline std::string join(const std::vector<long>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

inline SpecPrime prime_arg(const std::string& s) {
  if (s == "m" || s == "maximal") return SpecPrime::maximal_ideal;
  if (s == "0" || s == "(0)" || s == "zero") return SpecPrime::zero_ideal;
  throw ParseError("unknown prime '" + s + "' (expected m or 0)");
}

inline int run_val(const Options& o, Output& out) {
  need_args(o, 1, 1, "val --field F <x>");
  const auto spec = field_of(o);
  out.put("v", valuation(spec, parse_element(o.args[0], spec.field())).str());
  return kExitOk;
}

inline int run_residue(const Options& o, Output& out) {
  need_args(o, 1, 1, "residue --field F <x>");
  const auto spec = field_of(o);
  out.put("residue", residue(spec, parse_element(o.args[0], spec.field())).str());
  out.put("field", spec.residue_name());
  return kExitOk;
}

inline int run_arith(const Options& o, Output& out) {
  need_args(o, 2, 3, "arith --field F <add|sub|mul|div|neg|inv> <a> [b]");
  const auto spec = field_of(o);
  const ArithOp op = parse_arith_op(o.args[0]);
  const FieldElement a = parse_element(o.args[1], spec.field());
  if (is_binary(op) != (o.args.size() == 3)) throw UsageError("wrong operand count for " + o.args[0]);
  std::optional<FieldElement> b;
  if (o.args.size() == 3) b = parse_element(o.args[2], spec.field());
  out.put("result", field_arith(op, a, b ? &*b : nullptr).str());
  return kExitOk;
}

inline int run_upow(const Options& o, Output& out) {
  need_args(o, 1, 1, "upow --field F <n>");
  const auto spec = field_of(o);
  const FieldElement p = uniformizer_power(spec, to_long(o.args[0]));
  out.put("power", p.str());
  out.put("v", valuation(spec, p).str());
  return kExitOk;
}

inline int run_symbol(const Options& o, Output& out) {
  need_args(o, 1, 1, "symbol --field F <x>");
  const auto spec = field_of(o);
  const GradedElement s = symbol(spec, parse_element(o.args[0], spec.field()));
  out.put("degree", s.degree());
  out.put("coeff", s.coeff(s.degree()).str());
  out.put("symbol", s.str());
  return kExitOk;
}

inline int run_grmul(const Options& o, Output& out) {
  need_args(o, 2, 2, "grmul --field F <x> <y>");
  const auto spec = field_of(o);
  const FieldElement x = parse_element(o.args[0], spec.field());
  const FieldElement y = parse_element(o.args[1], spec.field());
  const GradedElement sx = symbol(spec, x);
  const GradedElement sy = symbol(spec, y);
  const GradedElement prod = gr_arith(GrOp::mul, sx, sy);
  out.put("symbol_x", sx.str());
  out.put("symbol_y", sy.str());
  out.put("sum", gr_arith(GrOp::add, sx, sy).str());
  out.put("product", prod.str());
  out.put("product_poly", gr_to_poly(prod).str("T"));
  const GradedElement sxy = symbol(spec, x * y);
  out.put("symbol_xy", sxy.str());
  out.put("multiplicative", sxy == prod);
  return sxy == prod ? kExitOk : kExitViolation;
}

inline int finish(const CheckReport& r, Output& out) {
  out.report(r);
  return r.ok() ? kExitOk : kExitViolation;
}

inline int finish(const StatusReport& r, const Options& o, Output& out) {
  out.report(r);
  return (o.strict && !r.all_pass()) ? kExitViolation : kExitOk;
}

inline int run_axioms(const Options& o, Output& out) {
  need_args(o, 0, 0, "axioms --field F --seed S [--samples N]");
  return finish(check_valuation_axioms(field_of(o), seed_of(o), o.samples), out);
}

inline int run_filt_check(const Options& o, Output& out) {
  need_args(o, 0, 0, "filt-check --field F --seed S [--samples N] [--max-level L]");
  return finish(check_filtration_axioms(field_of(o), seed_of(o), o.samples, o.max_level), out);
}

inline int run_strong_split(const Options& o, Output& out) {
  need_args(o, 3, 3, "strong-split --field F <c> <n> <m>");
  const auto spec = field_of(o);
  const StrongSplit s = strong_split(spec, parse_element(o.args[0], spec.field()), to_long(o.args[1]), to_long(o.args[2]));
  out.put("a", s.a.str());
  out.put("b", s.b.str());
  out.put("witness", s.str());
  return kExitOk;
}

inline int run_adic_check(const Options& o, Output& out) {
  need_args(o, 1, 1, "adic-check --field F --seed S [--samples N] <n>");
  const auto spec = field_of(o);
  const long n = to_long(o.args[0]);
  const AdicCheck c = adic_vs_valuation(spec, n, seed_of(o), o.samples);
  const int code = finish(c.report, out);
  const std::string pi_n = uniformizer_power(spec, n).str();
  for (std::size_t i = 0; i < std::min<std::size_t>(3, c.witnesses.size()); ++i)
    out.put("witness." + std::to_string(i), c.witnesses[i].x.str() + " = " + pi_n + " * " + c.witnesses[i].r.str());
  return code;
}

inline int run_principal(const Options& o, Output& out) {
  need_args(o, 1, 1, "principal --field F <g1,g2,...>");
  const auto spec = field_of(o);
  const auto gens = element_list(o.args[0], spec.field());
  const auto e = principal_generator(spec, gens);
  out.put("e", e ? std::to_string(*e) : std::string("zero"));
  return kExitOk;
}

inline int run_ideal(const Options& o, Output& out) {
  const std::string usage = "ideal <gen|prod|sum|cap|inv|power|denom> --field F <gens> [gens]";
  const auto spec = field_of(o);
  const std::string& op = o.op;
  if (op == "prod" || op == "sum" || op == "cap") {
    need_args(o, 2, 2, usage);
    const IdealOp which = op == "prod" ? IdealOp::product : op == "sum" ? IdealOp::sum : IdealOp::intersect;
    out.put("ideal", ideal_op(which, ideal_arg(spec, o.args[0]), ideal_arg(spec, o.args[1])).str());
    return kExitOk;
  }
  need_args(o, 1, 1, usage);
  const FracIdeal i = ideal_arg(spec, o.args[0]);
  if (op == "gen") {
    out.put("ideal", i.str());
  } else if (op == "inv") {
    out.put("ideal", ideal_inverse(i).str());
  } else if (op == "power") {
    const long n = as_power_of_m(i);
    out.put("n", n);
    out.put("ideal", "m^" + std::to_string(n));
  } else if (op == "denom") {
    out.put("a", denominator_witness(i).str());
  } else {
    throw UsageError("unknown ideal op '" + op + "'; " + usage);
  }
  return kExitOk;
}

inline int run_snf(const Options& o, Output& out) {
  need_args(o, 1, 1, "snf --field F <matrix>");
  const auto spec = field_of(o);
  const SmithForm s = snf(spec, parse_matrix(o.args[0], spec.field()));
  out.put("U", format_element_matrix(s.u));
  out.put("D", format_element_matrix(s.d));
  out.put("V", format_element_matrix(s.v));
  out.put("exponents", join(s.exponents));
  return kExitOk;
}

inline int run_grmap(const Options& o, Output& out) {
  const std::string usage =
      "grmap <compat|leading|gr-injective|injective|escape> --field F [--shifts-src S] [--shifts-dst T] <matrix> [vector]";
  const auto spec = field_of(o);
  const std::string& op = o.op;
  need_args(o, 1, op == "escape" ? 2 : 1, usage);
  ElementMatrix a = parse_matrix(o.args[0], spec.field());
  const auto shifts = [](const std::string& text, std::size_t n) {
    return text.empty() ? std::vector<long>(n, 0) : parse_shifts(text);
  };
  FilteredFreeModule source(spec, shifts(o.shifts_src, a.cols()));
  FilteredFreeModule target(spec, shifts(o.shifts_dst, a.rows()));

  if (op == "escape") {
    if (o.args.size() != 2) throw UsageError(usage);
    out.put("escape", escape_level(source, parse_vector(o.args[1], spec.field())));
    return kExitOk;
  }
  if (op == "compat") {
    try {
      make_filtered_map(source, target, a);
      out.put("compatible", true);
      return kExitOk;
    } catch (const CompatibilityError& e) {
      out.put("compatible", false);
      out.put("violation", "(" + std::to_string(e.row()) + "," + std::to_string(e.col()) + ")");
      return kExitViolation;
    }
  }
  const FilteredMap f = make_filtered_map(source, target, a);
  if (op == "leading") {
    out.put("leading", format_leading_matrix(leading_matrix(f)));
  } else if (op == "gr-injective") {
    out.put("gr_injective", gr_injective(f));
  } else if (op == "injective") {
    out.put("injective", map_injective(f));
  } else {
    throw UsageError("unknown grmap op '" + op + "'; " + usage);
  }
  return kExitOk;
}

inline int run_specf(const Options& o, Output& out) {
  const std::string usage = "specf <f|upper|lower|lemma32|branched|prop36|spec> --field F ...";
  const FiltFn ff(field_of(o));
  const auto& field = ff.spec().field();
  const std::string& op = o.op;
  if (op == "f") {
    need_args(o, 1, 1, "specf f --field F <x>");
    out.put("f", f_value(ff, parse_element(o.args[0], field)).str());
  } else if (op == "upper" || op == "lower") {
    need_args(o, 2, 2, "specf " + op + " --field F <x> <g>");
    const FieldElement x = parse_element(o.args[0], field);
    const long g = to_long(o.args[1]);
    out.put("member", op == "upper" ? upper_member(ff, x, g) : lower_member(ff, x, g));
  } else if (op == "lemma32") {
    need_args(o, 0, 0, "specf lemma32 --field F --seed S [--samples N]");
    return finish(lemma32_report(ff, seed_of(o), o.samples), o, out);
  } else if (op == "branched") {
    need_args(o, 1, 1, "specf branched --field F <m|0>");
    out.put("branched", branched(ff, prime_arg(o.args[0])));
  } else if (op == "prop36") {
    need_args(o, 1, 1, "specf prop36 --field F --seed S [--samples N] <x>");
    return finish(prop36_check(ff, parse_element(o.args[0], field), seed_of(o), o.samples), o, out);
  } else if (op == "spec") {
    need_args(o, 0, 0, "specf spec --field F");
    std::string primes;
    for (SpecPrime p : spec_f(ff)) primes += (primes.empty() ? "" : ",") + to_string(p);
    out.put("spec", primes);
  } else {
    throw UsageError("unknown specf op '" + op + "'; " + usage);
  }
  return kExitOk;
}

}  // namespace detail

/// Runs one invocation; argv excludes the program name.
inline int dispatch(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  using detail::Options;
  Options opts;
  CLI::App app{"Exact computations in discrete valuation rings", "dvr"};
  app.require_subcommand(1, 1);

  struct Command {
    const char* name;
    const char* help;
    int (*run)(const Options&, Output&);
    bool has_op;
  };
  const std::vector<Command> commands{
      {"val", "valuation of an element", detail::run_val, false},
      {"residue", "image of an element of R in the residue field", detail::run_residue, false},
      {"arith", "field arithmetic: add|sub|mul|div|neg|inv", detail::run_arith, false},
      {"upow", "power of the uniformizer", detail::run_upow, false},
      {"symbol", "leading form in the associated graded ring", detail::run_symbol, false},
      {"grmul", "sum and product of two symbols in gr(R)", detail::run_grmul, false},
      {"filt-check", "randomized check of the valuation filtration", detail::run_filt_check, false},
      {"strong-split", "factor c in R_{n+m} as a*b with a in R_n, b in R_m", detail::run_strong_split, false},
      {"adic-check", "randomized check that m^n equals R_n", detail::run_adic_check, false},
      {"principal", "exponent of the principal generator of an ideal of R", detail::run_principal, false},
      {"ideal", "fractional ideals: gen|prod|sum|cap|inv|power|denom", detail::run_ideal, true},
      {"snf", "Smith normal form of a matrix over R", detail::run_snf, false},
      {"grmap", "filtered maps: compat|leading|gr-injective|injective|escape", detail::run_grmap, true},
      {"specf", "filtration ideals: f|upper|lower|lemma32|branched|prop36|spec", detail::run_specf, true},
      {"axioms", "randomized check of the valuation axioms", detail::run_axioms, false},
  };

  std::vector<std::pair<CLI::App*, const Command*>> subs;
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--field", opts.field, "padic:<p>, tadic:<p> or tadic:0");
    sub->add_option("--seed", opts.seed, "PRNG seed (mt19937_64)");
    sub->add_option("--samples", opts.samples, "number of random samples")->check(CLI::PositiveNumber);
    sub->add_option("--max-level", opts.max_level, "largest filtration level checked")->check(CLI::PositiveNumber);
    sub->add_option("--shifts-src", opts.shifts_src, "source module shifts, e.g. 0,1");
    sub->add_option("--shifts-dst", opts.shifts_dst, "target module shifts");
    sub->add_flag("--json", opts.json, "emit one flat JSON object");
    sub->add_flag("--strict", opts.strict, "exit 1 when a clause is FAIL-LITERAL");
    if (c.has_op) sub->add_option("op", opts.op, "operation")->required();
    sub->add_option("args", opts.args, "operands");
    sub->positionals_at_end(false);
    subs.emplace_back(sub, &c);
  }

  try {
    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::string what = e.what();
    err << "error: " << (what.empty() ? e.get_name() : what) << "\n";
    return kExitError;
  }

  for (const auto& [sub, cmd] : subs) {
    if (!sub->parsed()) continue;
    Output result;
    try {
      const int code = cmd->run(opts, result);
      result.write(out, opts.json);
      return code;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return kExitError;
    }
  }
  err << "error: no subcommand\n";
  return kExitError;
}

}  // namespace dvr::cli
