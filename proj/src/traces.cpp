#include "topvert/traces.hpp"

#include <stdexcept>

#include "topvert/identities.hpp"
#include "topvert/parallel.hpp"
#include "topvert/products.hpp"

namespace topvert {

namespace {

const RationalLaurent kOne(Rational(1));

FockVector basis(const MayaState& s) { return FockVector::basis(s, kOne); }

struct Entry {
  MayaState lambda;
  MayaState mu;
  int r = 0;
  RationalLaurent c;
};

HalfExp min_var_exponent(const VarList& vars) {
  HalfExp m = vars.exponent(1);
  for (int i = 2; i <= vars.shape.length() + 1; ++i) m = min(m, vars.exponent(i));
  return m;
}

bool is_principal(const VarList& v) { return v.shape.empty() && v.scale_exp == HalfExp{} && v.direction > 0; }

std::vector<Entry> trace_entries(const TraceRequest& req) {
  std::vector<Entry> out;
  for (const auto& lambda : partitions_up_to(req.order)) {
    const MayaState vl = MayaState::from_partition(lambda);
    switch (req.insert) {
      case TraceInsert::none:
        out.push_back({vl, vl, 0, kOne});
        break;
      case TraceInsert::E0:
        out.push_back({vl, vl, 0, e0_eigenvalue(vl)});
        break;
      case TraceInsert::Ea:
        for (int r = -req.a_radius; r <= req.a_radius; ++r)
          for (const auto& mu : partitions_of(lambda.size() + r)) {
            const MayaState vm = MayaState::from_partition(mu);
            RationalLaurent c = apply_E(r, basis(vm)).coefficient(vl);
            if (!c.is_zero()) out.push_back({vl, vm, r, std::move(c)});
          }
        break;
    }
  }
  return out;
}

// (v_mu, Gamma_+(x) Gamma_-(y) v_lambda) for every entry, each to its own top.
std::vector<PSeries> gram_direct(const TraceRequest& req, const std::vector<Entry>& entries,
                                 const std::vector<HalfExp>& tops) {
  const HalfExp m = min_var_exponent(req.plus_vars);
  if (min_var_exponent(req.minus_vars) != m)
    throw std::invalid_argument("direct trace evaluation needs lists with equal smallest exponents");
  const bool shared = req.plus_vars.shape == req.minus_vars.shape && req.plus_vars.scale_coeff == req.minus_vars.scale_coeff &&
                      req.plus_vars.scale_exp == req.minus_vars.scale_exp && req.plus_vars.direction == req.minus_vars.direction;

  // Start tops: K_a >= T + (|b| - |a|) m for every pair (a, b).
  std::map<std::pair<int, MayaState>, HalfExp> need;
  auto require = [&](int side, const MayaState& s, HalfExp t) {
    auto [it, fresh] = need.try_emplace({side, s}, t);
    if (!fresh) it->second = max(it->second, t);
  };
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    const long lm = e.mu.energy(), ll = e.lambda.energy();
    require(shared ? 1 : 0, e.mu, tops[i] + (ll - lm) * m);
    require(1, e.lambda, tops[i] + (lm - ll) * m);
  }
  std::vector<std::pair<std::pair<int, MayaState>, HalfExp>> jobs(need.begin(), need.end());
  std::vector<WindowedFockVector> vectors(jobs.size());
  parallel_for(jobs.size(), req.jobs, [&](std::size_t i) {
    const auto& [key, top] = jobs[i];
    const VarList& vars = key.first == 0 ? req.plus_vars : req.minus_vars;
    vectors[i] = apply_gamma_minus_window(vars, key.second, {top, req.energy_slack, std::nullopt});
  });
  std::map<std::pair<int, MayaState>, const WindowedFockVector*> lookup;
  for (std::size_t i = 0; i < jobs.size(); ++i) lookup[jobs[i].first] = &vectors[i];

  std::vector<PSeries> out(entries.size());
  parallel_for(entries.size(), req.jobs, [&](std::size_t i) {
    const auto& e = entries[i];
    const WindowedFockVector& a = *lookup.at({shared ? 1 : 0, e.mu});
    const WindowedFockVector& b = *lookup.at({1, e.lambda});
    PSeries g = PSeries::zero(tops[i]);
    g += inner(a, b);
    out[i] = g.truncated(tops[i]);
  });
  return out;
}

std::vector<PSeries> gram_reordered(const TraceRequest& req, const std::vector<Entry>& entries,
                                    const std::vector<HalfExp>& tops) {
  if (!is_principal(req.plus_vars) || !is_principal(req.minus_vars))
    throw std::invalid_argument("reordered trace evaluation needs principal lists");
  const Rational uv = req.plus_vars.scale_coeff * req.minus_vars.scale_coeff;
  HalfExp max_top = HalfExp{};
  for (const auto& t : tops) max_top = max(max_top, t);
  const FactorSource m_uv = [uv](HalfExp max_p) {
    std::vector<EulerFactor> f;
    for (long k = 1; k <= max_p.floor(); ++k) f.push_back({HalfExp::from_int(k), 0, -k, uv});
    return f;
  };
  const PSeries factor = euler_product(m_uv, 0, max_top)[0];
  std::vector<PSeries> out(entries.size());
  parallel_for(entries.size(), req.jobs, [&](std::size_t i) {
    const auto& e = entries[i];
    const FockVector a = apply_gamma(GammaSign::plus, req.minus_vars, basis(e.mu), 0);
    const FockVector b = apply_gamma(GammaSign::plus, req.plus_vars, basis(e.lambda), 0);
    const RationalLaurent s = inner(a, b);
    out[i] = (s.expand(tops[i]) * factor.truncated(tops[i] - s.valuation())).truncated(tops[i]);
  });
  return out;
}

}  // namespace

ATrace graded_trace(const TraceRequest& req) {
  if (req.order < 0) throw std::invalid_argument("negative q-order");
  const std::vector<Entry> entries = trace_entries(req);
  // Each Gram entry is needed up to top - val(c).
  std::vector<HalfExp> tops(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) tops[i] = req.top - entries[i].c.valuation();

  std::vector<PSeries> gram;
  switch (req.gammas) {
    case GammaOrder::none:
      for (std::size_t i = 0; i < entries.size(); ++i)
        gram.push_back(entries[i].mu == entries[i].lambda ? PSeries::constant(1) : PSeries());
      break;
    case GammaOrder::direct:
      gram = gram_direct(req, entries, tops);
      break;
    case GammaOrder::reordered:
      gram = gram_reordered(req, entries, tops);
      break;
  }

  ATrace out;
  const int radius = req.insert == TraceInsert::Ea ? req.a_radius : 0;
  for (int r = -radius; r <= radius; ++r) out[r] = QSeries(req.order, PSeries::zero(req.top));
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    if (gram[i].is_zero() && gram[i].is_exact()) continue;
    const PSeries c = e.c.expand(req.top - gram[i].valuation());
    out[e.r][static_cast<int>(e.lambda.energy())] += (c * gram[i]).truncated(req.top);
  }
  return out;
}

namespace {

bool same(const FockVector& a, const FockVector& b) {
  const FockVector d = a - b;
  return d.empty();
}

std::string entry_label(const std::string& what, const MayaState& a, const MayaState& b) {
  std::string s = what + " at (";
  s += a.charge() == 0 ? a.to_partition().to_string() : a.to_string();
  s += ", ";
  s += b.charge() == 0 ? b.to_partition().to_string() : b.to_string();
  return s + ")";
}

std::vector<MayaState> states_up_to(int n) {
  std::vector<MayaState> out;
  for (const auto& p : partitions_up_to(n)) out.push_back(MayaState::from_partition(p));
  return out;
}

VarList scaled_principal(const Rational& u) { return VarList::principal(u); }

}  // namespace

Report commutation_checks(int emax, HalfExp lo, HalfExp hi, int a_radius) {
  if (emax < 2) throw std::invalid_argument("commutation checks need emax >= 2");
  Report rep;
  rep.check = "fock-commutation";
  rep.param("emax", static_cast<long>(emax)).param("pmin", lo).param("pmax", hi).param("awin", static_cast<long>(a_radius));
  const auto states = states_up_to(emax);

  // Gamma_+(x) Gamma_-(y) = M(p, uv) Gamma_-(y) Gamma_+(x)
  {
    Report part;
    part.check = "gamma-plus-gamma-minus";
    for (const auto& [u, v] : std::vector<std::pair<Rational, Rational>>{{1, 1}, {Rational(1, 2), 3}}) {
      const VarList x = scaled_principal(u), y = scaled_principal(v);
      const Rational uv = u * v;
      const FactorSource m_uv = [uv](HalfExp max_p) {
        std::vector<EulerFactor> f;
        for (long k = 1; k <= max_p.floor(); ++k) f.push_back({HalfExp::from_int(k), 0, -k, uv});
        return f;
      };
      const PSeries factor = euler_product(m_uv, 0, hi)[0];
      const HalfExp start_top = hi + emax * HalfExp::half();
      std::vector<std::string> failures(states.size());
      std::vector<std::vector<Mismatch>> found(states.size());
      parallel_for(states.size(), 1, [&](std::size_t i) {
        const MayaState& mu = states[i];
        const WindowedFockVector w = apply_gamma_minus_window(y, mu, {start_top, 0, std::nullopt});
        const WindowedFockVector lhs = apply_gamma_plus_window(x, w, hi);
        const FockVector right =
            apply_gamma(GammaSign::minus, y, apply_gamma(GammaSign::plus, x, basis(mu), 0), 2L * emax);
        for (const auto& lambda : states) {
          PSeries l = PSeries::zero(hi);
          if (const PSeries* c = lhs.find(lambda)) l += *c;
          const PSeries r = (right.coefficient(lambda).expand(hi) * factor).truncated(hi);
          for (const auto& m : compare(l, r, lo, hi))
            found[i].push_back({entry_label("u=" + to_string(u) + " v=" + to_string(v), lambda, mu), m});
        }
      });
      for (auto& f : found) part.mismatches.insert(part.mismatches.end(), f.begin(), f.end());
    }
    rep.parts.push_back(std::move(part));
  }

  // Gamma_+(u) E_r = E_r Gamma_+ - u E_{r+1} Gamma_+ and E_r Gamma_-(u) = Gamma_- E_r - u Gamma_- E_{r-1}
  {
    Report part;
    part.check = "gamma-E";
    for (const Rational& u : {Rational(1), Rational(2, 3)}) {
      const VarList x = scaled_principal(u);
      for (const auto& mu : states) {
        const FockVector v = basis(mu);
        const FockVector gp = apply_gamma(GammaSign::plus, x, v, 0);
        const long big = 2L * (emax + a_radius + 1);
        const FockVector gm = apply_gamma(GammaSign::minus, x, v, big);
        for (int r = -a_radius; r < a_radius; ++r) {
          const FockVector lhs = apply_gamma(GammaSign::plus, x, apply_E(r, v), 0);
          const FockVector rhs = apply_E(r, gp) - apply_E(r + 1, gp).scaled(u);
          part.expect(same(lhs, rhs), "Gamma_+ E_" + std::to_string(r) + " on " + mu.to_partition().to_string() +
                                          " u=" + to_string(u));
        }
        for (int r = -a_radius + 1; r <= a_radius; ++r) {
          const long cut = 2L * emax;
          const FockVector lhs = apply_E(r, gm).energy_slice(0, cut);
          const FockVector er = apply_E(r, v).energy_slice(0, cut);
          const FockVector er1 = apply_E(r - 1, v).energy_slice(0, cut);
          const FockVector rhs = apply_gamma(GammaSign::minus, x, er, cut) -
                                 apply_gamma(GammaSign::minus, x, er1, cut).scaled(u);
          part.expect(same(lhs, rhs), "E_" + std::to_string(r) + " Gamma_- on " + mu.to_partition().to_string() +
                                          " u=" + to_string(u));
        }
      }
    }
    rep.parts.push_back(std::move(part));
  }

  // Gamma_-(x) q^H = q^H Gamma_-(x/q), Gamma_+(x) q^H = q^H Gamma_+(q x), numerical q.
  {
    Report part;
    part.check = "gamma-qH";
    const VarList x = VarList::principal();
    for (const Rational& q : {Rational(2), Rational(3)}) {
      const VarList down = scaled_principal(1 / q), up = scaled_principal(q);
      for (const auto& mu : states) {
        const FockVector v = basis(mu);
        const long cut = 2L * emax;
        part.expect(same(apply_gamma(GammaSign::minus, x, apply_q_energy(q, v), cut),
                         apply_q_energy(q, apply_gamma(GammaSign::minus, down, v, cut))),
                    "Gamma_- q^H on " + mu.to_partition().to_string() + " q=" + to_string(q));
        part.expect(same(apply_gamma(GammaSign::plus, x, apply_q_energy(q, v), cut),
                         apply_q_energy(q, apply_gamma(GammaSign::plus, up, v, cut))),
                    "Gamma_+ q^H on " + mu.to_partition().to_string() + " q=" + to_string(q));
      }
    }
    rep.parts.push_back(std::move(part));
  }
  return rep;
}

Report matrix_coefficient_checks(int emax) {
  Report rep;
  rep.check = "fock-matrix-coefficients";
  rep.param("emax", static_cast<long>(emax));
  const auto states = states_up_to(emax);
  const auto parts = partitions_up_to(emax);

  {
    Report part;
    part.check = "anticommutation";
    for (const auto& s : states) {
      const FockVector v = basis(s);
      for (int j = -13; j <= 13; j += 2)
        for (int k = -13; k <= 13; k += 2) {
          const FockVector a = apply_psi(j, apply_psi_star(k, v)) + apply_psi_star(k, apply_psi(j, v));
          const FockVector b = apply_psi(j, apply_psi(k, v)) + apply_psi(k, apply_psi(j, v));
          const FockVector c = apply_psi_star(j, apply_psi_star(k, v)) + apply_psi_star(k, apply_psi_star(j, v));
          const std::string where = " j=" + HalfExp::from_twice(j).to_string() + " k=" +
                                    HalfExp::from_twice(k).to_string() + " on " + s.to_partition().to_string();
          part.expect(same(a, j == k ? v : FockVector()), "{psi_j, psi*_k}" + where);
          part.expect(b.empty(), "{psi_j, psi_k}" + where);
          part.expect(c.empty(), "{psi*_j, psi*_k}" + where);
        }
    }
    rep.parts.push_back(std::move(part));
  }

  {
    Report part;
    part.check = "gamma-skew-schur";
    const VarList x = VarList::principal();
    for (const auto& mu : parts) {
      const FockVector v = basis(MayaState::from_partition(mu));
      const FockVector down = apply_gamma(GammaSign::minus, x, v, 2L * emax);
      const FockVector up = apply_gamma(GammaSign::plus, x, v, 0);
      for (const auto& lambda : parts) {
        const MayaState vl = MayaState::from_partition(lambda);
        part.expect(down.coefficient(vl) == skew_schur_exact(lambda, mu, x),
                    "Gamma_- entry (" + lambda.to_string() + ", " + mu.to_string() + ")");
        part.expect(up.coefficient(vl) == skew_schur_exact(mu, lambda, x),
                    "Gamma_+ entry (" + lambda.to_string() + ", " + mu.to_string() + ")");
      }
    }
    rep.parts.push_back(std::move(part));
  }

  {
    Report part;
    part.check = "gamma-adjoint";
    for (const Rational& u : {Rational(1), Rational(2, 3)}) {
      const VarList x = scaled_principal(u);
      std::map<MayaState, FockVector> down, up;
      for (const auto& s : states) {
        down[s] = apply_gamma(GammaSign::minus, x, basis(s), 2L * emax);
        up[s] = apply_gamma(GammaSign::plus, x, basis(s), 0);
      }
      for (const auto& a : states)
        for (const auto& b : states)
          part.expect(down[a].coefficient(b) == up[b].coefficient(a), entry_label("adjoint u=" + to_string(u), a, b));
    }
    rep.parts.push_back(std::move(part));
  }

  {
    Report part;
    part.check = "E-operators";
    const int radius = 3;
    for (const auto& lambda : parts) {
      const MayaState s = MayaState::from_partition(lambda);
      const RationalLaurent e = e0_eigenvalue(s);
      part.expect(e == descending_sum(lambda), "E_0 eigenvalue on " + lambda.to_string());
      part.expect(e == -ratio_box(lambda.conjugate()), "E_0 conjugate form on " + lambda.to_string());
      const FockVector v = basis(s);
      for (int r = -radius; r <= radius; ++r) {
        if (r == 0) continue;
        const FockVector moved = apply_E(r, v);
        for (const auto& [t, c] : moved.terms())
          part.expect(t.energy() == lambda.size() - r, "E_" + std::to_string(r) + " grading on " + lambda.to_string());
      }
      const auto a = apply_E_a(v, radius);
      const auto b = apply_psi_pair_generating(v, radius, 2 * (emax + radius) + 5);
      for (int r = -radius; r <= radius; ++r)
        part.expect(same(a.at(r), b.at(r)), "E(a,p) factorization a^" + std::to_string(r) + " on " + lambda.to_string());
    }
    rep.parts.push_back(std::move(part));
  }
  return rep;
}

Report trace_checks(int order, HalfExp lo, HalfExp hi, int jobs) {
  Report rep;
  rep.check = "fock-traces";
  rep.param("qorder", static_cast<long>(order)).param("pmin", lo).param("pmax", hi);

  TraceRequest req;
  req.order = order;
  req.top = hi;
  req.jobs = jobs;

  const QSeries partitions = euler_product(q_pochhammer_factors(order, -1), order, hi);
  rep.parts.push_back(compare_report("trace-qH", graded_trace(req)[0], partitions, lo, hi));

  req.insert = TraceInsert::Ea;
  req.a_radius = 2;
  const ATrace ea = graded_trace(req);
  QSeries e0_sum(order, PSeries::zero(hi));
  for (const auto& lambda : partitions_up_to(order)) e0_sum[lambda.size()] += descending_sum(lambda).expand(hi);
  Report diag = compare_report("trace-E-qH", ea.at(0), e0_sum, lo, hi);
  for (const auto& [r, s] : ea)
    if (r != 0) diag.record(compare(s, QSeries(order, PSeries::zero(hi)), lo, hi), "a^" + std::to_string(r));
  rep.parts.push_back(std::move(diag));

  req.insert = TraceInsert::none;
  req.a_radius = 0;
  req.gammas = GammaOrder::direct;
  const QSeries direct = graded_trace(req)[0];
  req.energy_slack = 2;
  const QSeries slack = graded_trace(req)[0];
  req.energy_slack = 0;
  req.gammas = GammaOrder::reordered;
  const QSeries reordered = graded_trace(req)[0];
  rep.parts.push_back(compare_report("trace-gammas-orders", direct, reordered, lo, hi));
  rep.parts.push_back(compare_report("trace-gammas-cutoff-stability", direct, slack, lo, hi));
  const QSeries schur = QSeries::constant(macmahon(hi), order) * two_leg_schur_sum(order, hi);
  rep.parts.push_back(compare_report("trace-gammas-skew-schur", direct, schur, lo, hi));
  return rep;
}

Report e0_trace_check(int order, HalfExp lo, HalfExp hi, int a_radius, int jobs) {
  Report rep;
  rep.check = "e0-trace";
  rep.param("qorder", static_cast<long>(order)).param("pmin", lo).param("pmax", hi);

  const QSeries direct = identity_lhs(5, order, hi, jobs);
  auto finish = [&](const QSeries& trace) {
    // -p^(-1/2) times the trace
    QSeries out(order);
    for (int d = 0; d <= order; ++d) out[d] = -trace[d].shifted(-HalfExp::half());
    return out.truncated(hi);
  };
  TraceRequest req;
  req.gammas = GammaOrder::direct;
  req.order = order;
  req.top = hi + HalfExp::half();
  req.jobs = jobs;
  req.insert = TraceInsert::E0;
  const QSeries via_e0 = finish(graded_trace(req)[0]);
  req.insert = TraceInsert::Ea;
  req.a_radius = a_radius;
  const QSeries via_ea = finish(graded_trace(req).at(0));
  const QSeries closed = finish(ea_trace_closed_form(order, hi + HalfExp::half(), 0).at(0));

  rep.parts.push_back(compare_report("direct-vs-trace-E0", direct, via_e0, lo, hi));
  rep.parts.push_back(compare_report("trace-E0-vs-trace-Ea", via_e0, via_ea, lo, hi));
  rep.parts.push_back(compare_report("direct-vs-closed-form", direct, closed, lo, hi));
  rep.parts.push_back(compare_report("closed-form-vs-product", closed, identity_rhs(5, order, hi), lo, hi));
  return rep;
}

ATrace ea_trace_closed_form(int order, HalfExp top, int a_radius) {
  const TripleProductReport tp = jacobi_triple_product_a(order, a_radius);
  // X = prod M(p, q^m) / ((1 - p q^m)(1 - q^m / p)); its q^d part reaches down to p^-d.
  const auto fixed = p_pair_factors(order, -1);
  const FactorSource family = macmahon_q_family(order);
  const FactorSource source = [&](HalfExp max_p) {
    auto f = family(max_p);
    f.insert(f.end(), fixed.begin(), fixed.end());
    return f;
  };
  // M(p) / (p^1/2 - p^-1/2) = -p^1/2 M(p) / (1 - p), valuation 1/2.
  const HalfExp inner_top = top - HalfExp::half();
  const QSeries x = euler_product(source, order, inner_top);
  const PSeries prefactor =
      macmahon(top + HalfExp::from_int(order)) * half_difference_power(-1).expand(top + HalfExp::from_int(order));
  ATrace out;
  for (int r = -a_radius; r <= a_radius; ++r) {
    QSeries t(order, PSeries());
    if (auto it = tp.product.find(r); it != tp.product.end())
      for (int d = 0; d <= order; ++d) t[d] = PSeries::constant(it->second[static_cast<std::size_t>(d)]);
    const QSeries body = t * x;
    QSeries res(order);
    for (int d = 0; d <= order; ++d) res[d] = (prefactor * body[d]).truncated(top);
    out[r] = res;
  }
  return out;
}

Report ea_trace_check(int order, HalfExp lo, HalfExp hi, int a_radius, int jobs) {
  Report rep;
  rep.check = "ea-trace";
  rep.param("qorder", static_cast<long>(order)).param("pmin", lo).param("pmax", hi).param("awin", static_cast<long>(a_radius));
  TraceRequest req;
  req.insert = TraceInsert::Ea;
  req.gammas = GammaOrder::direct;
  req.order = order;
  req.top = hi;
  req.a_radius = a_radius;
  req.jobs = jobs;
  const ATrace lhs = graded_trace(req);
  const ATrace rhs = ea_trace_closed_form(order, hi, a_radius);
  for (int r = -a_radius; r <= a_radius; ++r) rep.record(compare(lhs.at(r), rhs.at(r), lo, hi), "a^" + std::to_string(r));

  const TripleProductReport tp = jacobi_triple_product_a(order, a_radius);
  rep.expect(tp.pass(), "triple product disagrees with its sum form");
  return rep;
}

}  // namespace topvert
