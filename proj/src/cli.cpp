#include "halfrep/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "halfrep/cyclotomic.hpp"
#include "halfrep/errors.hpp"
#include "halfrep/fibonacci.hpp"
#include "halfrep/output.hpp"
#include "halfrep/representation.hpp"
#include "halfrep/verify.hpp"

namespace halfrep::cli {

namespace {

struct Globals {
  std::string format = "human";
  unsigned jobs = 1;

  Format fmt() const { return *parse_format(format); }
};

Integer parse_positive(const std::string& text, const char* name) {
  Integer v = parse_natural(text);
  if (v < 1) throw DomainError(std::string(name) + " must be positive");
  return v;
}

int cmd_solve(const Globals& g, const std::string& a_text, const std::string& b_text,
              std::ostream& out) {
  const auto pair = CoprimePair::make(parse_positive(a_text, "a"), parse_positive(b_text, "b"));
  const Integer k = half_product(pair);
  const Representation rep = solve_representation(pair);
  switch (g.fmt()) {
    case Format::json:
      out << OutputRecord("representation")
                 .add("a", pair.a())
                 .add("b", pair.b())
                 .add("k", k)
                 .add("delta", static_cast<long>(rep.delta))
                 .add("x", rep.x)
                 .add("y", rep.y)
                 .to_json_line()
          << '\n';
      break;
    case Format::csv:
      out << "a,b,k,delta,x,y\n"
          << csv_line({to_string(pair.a()), to_string(pair.b()), to_string(k),
                       std::to_string(rep.delta), to_string(rep.x), to_string(rep.y)})
          << '\n';
      break;
    case Format::human:
      out << k << " = " << rep.x << '*' << pair.a() << " + " << rep.y << '*' << pair.b() << " + "
          << rep.delta << '\n';
      break;
  }
  return kSuccess;
}

int cmd_fib_table(const Globals& g, const std::string& kind_text, long from, long to,
                  std::ostream& out) {
  const PairKind kind = parse_pair_kind(kind_text);
  const auto rows = generate_table(kind, from, to);
  if (rows.empty()) return kSuccess;
  const std::string right = kind == PairKind::consecutive ? "F(n+1)" : "F(n+2)";
  switch (g.fmt()) {
    case Format::json:
      for (const auto& r : rows) {
        out << OutputRecord("fib-table-row")
                   .add("pair_kind", std::string(to_string(kind)))
                   .add("n", Integer(r.n))
                   .add("f_left", r.f_left)
                   .add("f_right", r.f_right)
                   .add("equation", static_cast<long>(r.equation))
                   .add("x", r.x)
                   .add("y", r.y)
                   .to_json_line()
            << '\n';
      }
      break;
    case Format::csv:
      out << "n,f_left,f_right,equation,x,y\n";
      for (const auto& r : rows) {
        out << csv_line({std::to_string(r.n), to_string(r.f_left), to_string(r.f_right),
                         std::to_string(r.equation), to_string(r.x), to_string(r.y)})
            << '\n';
      }
      break;
    case Format::human: {
      std::size_t w = 8;
      for (const auto& r : rows) w = std::max(w, to_string(r.f_right).size() + 2);
      out << std::left << std::setw(6) << "n" << std::setw(w) << "F(n)" << std::setw(w) << right
          << std::setw(10) << "equation" << std::setw(w) << "x" << "y\n";
      for (const auto& r : rows) {
        out << std::setw(6) << r.n << std::setw(w) << to_string(r.f_left) << std::setw(w)
            << to_string(r.f_right) << std::setw(10) << r.equation << std::setw(w)
            << to_string(r.x) << to_string(r.y) << '\n';
      }
      out << std::right;
      break;
    }
  }
  return kSuccess;
}

int cmd_verify(const Globals& g, const std::string& scope_text, std::optional<long> max,
               std::ostream& out) {
  std::vector<Scope> scopes;
  if (scope_text == "all") {
    scopes = all_scopes();
  } else if (auto s = parse_scope(scope_text)) {
    scopes.push_back(*s);
  } else {
    throw DomainError("unknown scope '" + scope_text + "'");
  }

  bool ok = true;
  if (g.fmt() == Format::csv) out << "scope,max,cases,pass,fail\n";
  for (Scope scope : scopes) {
    const VerifySummary s = verify(scope, max.value_or(default_max(scope)), g.jobs);
    ok = ok && s.ok();
    switch (g.fmt()) {
      case Format::json: {
        OutputRecord rec("verify");
        rec.add("scope", std::string(to_string(scope)))
            .add("max", Integer(s.max))
            .add(std::string(s.unit()), Integer(static_cast<unsigned long>(s.cases)))
            .add("pass", Integer(static_cast<unsigned long>(s.passed)))
            .add("fail", Integer(static_cast<unsigned long>(s.failed)));
        if (s.first_counterexample) rec.add("counterexample", *s.first_counterexample);
        out << rec.to_json_line() << '\n';
        break;
      }
      case Format::csv:
        out << csv_line({std::string(to_string(scope)), std::to_string(s.max),
                         std::to_string(s.cases), std::to_string(s.passed),
                         std::to_string(s.failed)})
            << '\n';
        break;
      case Format::human:
        out << to_string(scope) << ' ' << s.unit() << '=' << s.cases << " pass=" << s.passed
            << " fail=" << s.failed << '\n';
        if (s.first_counterexample) out << "counterexample: " << *s.first_counterexample << '\n';
        break;
    }
  }
  return ok ? kSuccess : kViolation;
}

std::uint64_t parse_small_prime_candidate(const std::string& text) {
  const Integer v = parse_natural(text);
  if (!mpz_fits_ulong_p(v.get_mpz_t())) throw DomainError(text + " is too large");
  return v.get_ui();
}

int cmd_cyclo(const Globals& g, const std::string& p_text, const std::string& q_text,
              bool with_coeffs, std::ostream& out) {
  const std::uint64_t p = parse_small_prime_candidate(p_text);
  const std::uint64_t q = parse_small_prime_candidate(q_text);
  if (p >= 2 && q >= 2 && (p - 1) > kMaxCyclotomicDegree / (q - 1)) {
    throw DomainError("degree (p-1)(q-1) exceeds the supported bound " +
                      std::to_string(kMaxCyclotomicDegree));
  }
  const MidtermReport r = midterm_report(PrimePair::make(p, q));
  const Representation& d = r.decomposition;
  switch (g.fmt()) {
    case Format::json: {
      OutputRecord rec("cyclotomic");
      rec.add("p", Integer(static_cast<unsigned long>(p)))
          .add("q", Integer(static_cast<unsigned long>(q)))
          .add("degree", Integer(static_cast<unsigned long>(r.degree)))
          .add("mid_degree", Integer(static_cast<unsigned long>(r.mid_degree)))
          .add("mid_coeff", r.mid_coeff)
          .add("alpha", d.x)
          .add("beta", d.y)
          .add("delta", static_cast<long>(d.delta));
      if (with_coeffs) rec.add("coeffs", coeff_string(r.polynomial));
      out << rec.to_json_line() << '\n';
      break;
    }
    case Format::csv:
      out << "p,q,degree,mid_degree,mid_coeff,alpha,beta,delta\n"
          << csv_line({std::to_string(p), std::to_string(q), std::to_string(r.degree),
                       std::to_string(r.mid_degree), to_string(r.mid_coeff), to_string(d.x),
                       to_string(d.y), std::to_string(d.delta)})
          << '\n';
      break;
    case Format::human:
      out << "p=" << p << " q=" << q << '\n'
          << "degree " << r.degree << '\n'
          << "midterm degree " << r.mid_degree << '\n'
          << "midterm coefficient " << r.mid_coeff << '\n'
          << r.mid_degree << " = " << d.x << '*' << q << " + " << d.y << '*' << p << " + "
          << d.delta << "  (alpha=" << d.x << " beta=" << d.y << " delta=" << d.delta << ")\n";
      if (with_coeffs) out << coeff_string(r.polynomial) << '\n';
      break;
  }
  return kSuccess;
}

int cmd_representable(const Globals& g, const std::string& n_text, const std::string& a_text,
                      const std::string& b_text, std::ostream& out) {
  const Integer n = parse_natural(n_text);
  const Integer a = parse_positive(a_text, "a");
  const Integer b = parse_positive(b_text, "b");
  const auto w = has_nonnegative_solution(a, b, n);
  switch (g.fmt()) {
    case Format::json: {
      OutputRecord rec("representable");
      rec.add("n", n).add("a", a).add("b", b);
      rec.add("status", std::string(w ? "representable" : "not-representable"));
      if (w) rec.add("x", w->first).add("y", w->second);
      out << rec.to_json_line() << '\n';
      break;
    }
    case Format::csv:
      out << "n,a,b,representable,x,y\n"
          << csv_line({to_string(n), to_string(a), to_string(b), w ? "true" : "false",
                       w ? to_string(w->first) : "", w ? to_string(w->second) : ""})
          << '\n';
      break;
    case Format::human:
      if (w) {
        out << n << " = " << w->first << '*' << a << " + " << w->second << '*' << b << '\n';
      } else {
        out << "not representable\n";
      }
      break;
  }
  return kSuccess;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Representations of (a-1)(b-1)/2 as x*a + y*b + delta", "halfrep"};
  app.fallthrough();
  app.require_subcommand(1);

  Globals g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"human", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--jobs", g.jobs, "Worker threads for verify")
      ->check(CLI::Range(1u, 1024u))
      ->capture_default_str();

  std::string a, b, n;
  auto* solve = app.add_subcommand("solve", "Solve x*a + y*b + delta = (a-1)(b-1)/2");
  solve->add_option("a", a)->required();
  solve->add_option("b", b)->required();

  std::string kind;
  long from = 0, to = 0;
  auto* table = app.add_subcommand("fib-table", "Representations for Fibonacci pairs");
  table->add_option("--kind", kind)->required()->check(CLI::IsMember({"consecutive", "skip"}));
  table->add_option("--from", from)->required();
  table->add_option("--to", to)->required();

  std::string scope = "all";
  std::optional<long> max;
  auto* ver = app.add_subcommand("verify", "Run invariant sweeps");
  ver->add_option("--scope", scope)
      ->check(CLI::IsMember(
          {"theorem1", "closed-forms", "identities", "cyclotomic", "representability", "all"}))
      ->capture_default_str();
  ver->add_option("--max", max, "Sweep bound (default depends on scope)");

  bool coeffs = false;
  auto* cyclo = app.add_subcommand("cyclo", "Midterm coefficient of Phi_pq");
  cyclo->add_option("p", a)->required();
  cyclo->add_option("q", b)->required();
  cyclo->add_flag("--coeffs", coeffs, "Print all coefficients in ascending degree");

  auto* repr = app.add_subcommand("representable", "Is n = x*a + y*b with x, y >= 0?");
  repr->add_option("n", n)->required();
  repr->add_option("a", a)->required();
  repr->add_option("b", b)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (solve->parsed()) return cmd_solve(g, a, b, out);
    if (table->parsed()) {
      const PairKind k = parse_pair_kind(kind);
      if (from < min_index(k)) {
        err << "error: --from must be at least " << min_index(k) << " for " << kind
            << " pairs\n";
        return kUsage;
      }
      return cmd_fib_table(g, kind, from, to, out);
    }
    if (ver->parsed()) {
      if (max && *max < 0) throw DomainError("--max must be nonnegative");
      return cmd_verify(g, scope, max, out);
    }
    if (cyclo->parsed()) return cmd_cyclo(g, a, b, coeffs, out);
    if (repr->parsed()) return cmd_representable(g, n, a, b, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << '\n';
    return kViolation;
  }
  return kUsage;
}

} // namespace halfrep::cli
