#include "topvert/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "topvert/dt.hpp"
#include "topvert/identities.hpp"
#include "topvert/partitions.hpp"
#include "topvert/products.hpp"
#include "topvert/report.hpp"
#include "topvert/schur.hpp"
#include "topvert/traces.hpp"

namespace topvert {

HalfExp parse_exponent(const std::string& text) {
  Rational r;
  if (const auto dot = text.find('.'); dot != std::string::npos) {
    std::string whole = text.substr(0, dot);
    const std::string frac = text.substr(dot + 1);
    if (frac != "0" && frac != "5") throw std::invalid_argument("exponent '" + text + "' is not a multiple of 1/2");
    const bool negative = !whole.empty() && whole[0] == '-';
    if (whole.empty() || whole == "-") whole += "0";
    r = parse_rational(whole);
    if (frac == "5") r += negative ? Rational(-1, 2) : Rational(1, 2);
  } else {
    r = parse_rational(text);
  }
  const Rational twice = r * 2;
  if (twice.get_den() != 1) throw std::invalid_argument("exponent '" + text + "' is not a multiple of 1/2");
  return HalfExp::from_twice(twice.get_num().get_si());
}

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

template <class T>
const T& need(const std::optional<T>& v, const std::string& flag) {
  if (!v) throw UsageError(flag + " is required");
  return *v;
}

struct Window {
  std::optional<std::string> pmin, pmax;
  HalfExp lo() const { return parse_exponent(need(pmin, "--pmin")); }
  HalfExp hi() const { return parse_exponent(need(pmax, "--pmax")); }
  void check() const {
    if (pmin && pmax && lo() > hi()) throw UsageError("--pmin exceeds --pmax");
  }
};

void add_window(CLI::App* sub, Window& w) {
  sub->add_option("--pmin", w.pmin, "lowest p-exponent compared");
  sub->add_option("--pmax", w.pmax, "highest p-exponent compared");
}

int nonnegative(const std::optional<int>& v, const std::string& flag) {
  const int x = need(v, flag);
  if (x < 0) throw UsageError(flag + " must be nonnegative");
  return x;
}

QSeries single(const PSeries& s) { return QSeries::constant(s, 0); }

Report run_vertex(const std::string& legs_text, const std::string& method, HalfExp top, int jobs) {
  const LegTriple legs = LegTriple::parse(legs_text);
  Report rep;
  rep.check = "vertex";
  rep.param("legs", legs.to_string()).param("method", method).param("pmax", top);
  auto attach = [&](Report& r, const PSeries& s) {
    r.series = single(s);
    r.series_lo = s.is_zero() ? top : s.valuation();
    r.series_hi = top;
  };
  std::optional<PSeries> box, orv;
  if (method == "box" || method == "both") box = vertex_box_counting(legs, top, {0, jobs});
  if (method == "orv" || method == "both") orv = vertex_orv(legs, top);
  if (method == "both") {
    Report b, o;
    b.check = "box";
    o.check = "orv";
    attach(b, *box);
    attach(o, *orv);
    const HalfExp lo = min(b.series_lo, o.series_lo);
    rep.record(compare(*box, *orv, lo, top));
    rep.parts.push_back(std::move(b));
    rep.parts.push_back(std::move(o));
  } else {
    attach(rep, box ? *box : *orv);
  }
  return rep;
}

Report run_enumerate(const std::string& legs_text, int budget, int box, int jobs) {
  const LegTriple legs = LegTriple::parse(legs_text);
  Report rep;
  rep.check = "enumerate3d";
  const int b = box > 0 ? box : default_bounding_box(legs, budget);
  rep.param("legs", legs.to_string()).param("budget", static_cast<long>(budget)).param("box", static_cast<long>(b));
  rep.counts = enumerate_asymptotic(legs, budget, {b, jobs});
  rep.expect(enumerate_asymptotic(legs, budget, {b + 2, jobs}) == *rep.counts, "counts change when the box grows by 2");
  return rep;
}

Report run_bo(const std::string& point, int order, HalfExp lo, HalfExp hi) {
  if (point == "one") {
    Report rep;
    rep.check = "bo";
    rep.param("point", point).param("qorder", static_cast<long>(order)).param("pmin", lo).param("pmax", hi);
    rep.parts.push_back(verify_correlator(CorrelatorPoint::one_inverse, order, lo, hi));
    rep.parts.push_back(verify_correlator(CorrelatorPoint::one, order, lo, hi));
    rep.parts.push_back(log_deriv_theta_check(order, lo, hi));
    return rep;
  }
  if (point == "two") return verify_correlator(CorrelatorPoint::two, order, lo, hi);
  throw UsageError("--point must be one or two");
}

Report run_dt(const std::string& name, std::optional<int> genus, int order, HalfExp lo, HalfExp hi, bool quotients) {
  const DtCase c = DtCase::make(DtCase::parse_kind(name), genus);
  Report rep;
  rep.check = "dt";
  rep.param("case", c.name()).param("qorder", static_cast<long>(order)).param("pmin", lo).param("pmax", hi);
  if (genus) rep.param("genus", static_cast<long>(*genus));
  rep.series = dt_series(c, order, hi);
  rep.series_lo = lo;
  rep.series_hi = hi;
  if (quotients) {
    if (genus) {
      rep.parts.push_back(dt_quotient_checks(order, lo, hi, *genus));
    } else {
      for (int g : {0, 1, 2}) rep.parts.push_back(dt_quotient_checks(order, lo, hi, g));
    }
    rep.parts.push_back(dt_consistency_checks(order, lo, hi));
  }
  return rep;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Topological vertex series and their identities", "topvert"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  std::string format = "text";
  int jobs = 1;
  std::optional<std::string> out_file;
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--out", out_file, "write the report here instead of stdout");

  std::optional<int> id, qmax, emax, awin, budget, genus;
  int box = 0;
  std::string legs, method = "both", check, point, dt_case;
  bool quotients = false;
  Window w;

  auto* identity = app.add_subcommand("identity", "compare a vertex sum with its product");
  identity->add_option("--id", id, "2, 3, 4 or 5")->check(CLI::IsMember({2, 3, 4, 5}));
  identity->add_option("--qmax", qmax, "q-order");
  add_window(identity, w);

  auto* vertex = app.add_subcommand("vertex", "vertex series for a leg triple");
  vertex->add_option("--legs", legs, "\"lambda;mu;nu\", e.g. \"2,1;1;-\"")->required();
  vertex->add_option("--method", method, "box, orv or both")->check(CLI::IsMember({"box", "orv", "both"}));
  vertex->add_option("--pmax", w.pmax, "window top");

  auto* enumerate = app.add_subcommand("enumerate3d", "count 3D partitions by renormalized volume");
  enumerate->add_option("--legs", legs, "\"lambda;mu;nu\"")->required();
  enumerate->add_option("--budget", budget, "volumes above the minimum to count");
  enumerate->add_option("--box", box, "side of the search cube (default: budget + extent + 1)");

  auto* fock = app.add_subcommand("fock", "Fock space operator checks");
  fock->add_option("--check", check, "commutation, matrix-coeff, traces, lemma51 or lemma52")
      ->required()
      ->check(CLI::IsMember({"commutation", "matrix-coeff", "traces", "lemma51", "lemma52"}));
  fock->add_option("--emax", emax, "largest state energy");
  fock->add_option("--qmax", qmax, "q-order of traces");
  fock->add_option("--awin", awin, "a-window radius");
  add_window(fock, w);

  auto* bo = app.add_subcommand("bo", "one- and two-point correlators");
  bo->add_option("--point", point, "one or two")->required()->check(CLI::IsMember({"one", "two"}));
  bo->add_option("--qmax", qmax, "q-order");
  add_window(bo, w);

  auto* dt = app.add_subcommand("dt", "DT series of an elliptic fibration");
  dt->add_option("--case", dt_case, "F, BF, N, BN or BpF")->required();
  dt->add_option("--genus", genus, "genus of the section");
  dt->add_option("--qmax", qmax, "q-order");
  dt->add_flag("--check-quotients", quotients, "verify the quotient identities");
  add_window(dt, w);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  Report rep;
  try {
    w.check();
    if (*identity) {
      rep = verify_identity(need(id, "--id"), nonnegative(qmax, "--qmax"), w.lo(), w.hi(), jobs);
    } else if (*vertex) {
      rep = run_vertex(legs, method, w.hi(), jobs);
    } else if (*enumerate) {
      rep = run_enumerate(legs, nonnegative(budget, "--budget"), box, jobs);
    } else if (*fock) {
      if (check == "commutation")
        rep = commutation_checks(nonnegative(emax, "--emax"), w.lo(), w.hi(), awin.value_or(3));
      else if (check == "matrix-coeff")
        rep = matrix_coefficient_checks(nonnegative(emax, "--emax"));
      else if (check == "traces")
        rep = trace_checks(nonnegative(qmax, "--qmax"), w.lo(), w.hi(), jobs);
      else if (check == "lemma51")
        rep = e0_trace_check(nonnegative(qmax, "--qmax"), w.lo(), w.hi(), awin.value_or(0), jobs);
      else
        rep = ea_trace_check(nonnegative(qmax, "--qmax"), w.lo(), w.hi(), nonnegative(awin, "--awin"), jobs);
    } else if (*bo) {
      rep = run_bo(point, nonnegative(qmax, "--qmax"), w.lo(), w.hi());
    } else if (*dt) {
      rep = run_dt(dt_case, genus, nonnegative(qmax, "--qmax"), w.lo(), w.hi(), quotients);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  const OutputFormat fmt = format == "json" ? OutputFormat::json : OutputFormat::text;
  if (out_file) {
    std::ofstream file(*out_file);
    if (!file) {
      err << "error: cannot open " << *out_file << '\n';
      return 2;
    }
    write_report(file, rep, fmt);
  } else {
    write_report(out, rep, fmt);
  }
  return rep.pass() ? 0 : 1;
}

}  // namespace topvert
