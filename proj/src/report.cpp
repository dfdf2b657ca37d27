#include "topvert/report.hpp"

#include <json.hpp>

namespace topvert {

bool Report::pass() const {
  if (!mismatches.empty() || !failures.empty()) return false;
  for (const auto& p : parts)
    if (!p.pass()) return false;
  return true;
}

Report& Report::param(const std::string& key, const std::string& value) {
  params.emplace_back(key, value);
  return *this;
}

void Report::record(const std::vector<CoeffMismatch>& found, const std::string& part) {
  for (const auto& m : found) mismatches.push_back({part, m});
}

void Report::expect(bool ok, const std::string& what) {
  if (!ok) failures.push_back(what);
}

Report compare_report(const std::string& check, const QSeries& lhs, const QSeries& rhs, HalfExp lo, HalfExp hi) {
  Report r;
  r.check = check;
  r.param("qorder", static_cast<long>(lhs.order())).param("pmin", lo).param("pmax", hi);
  r.record(compare(lhs, rhs, lo, hi));
  return r;
}

namespace {

using nlohmann::json;

json series_to_json(const QSeries& s, HalfExp lo, HalfExp hi) {
  json coeffs = json::array();
  for (int d = 0; d <= s.order(); ++d) {
    json terms = json::array();
    for (const auto& [e, c] : s[d].clipped(hi).terms())
      if (e >= lo) terms.push_back(json::array({e.twice(), to_string(c)}));
    coeffs.push_back(json::array({d, terms}));
  }
  return json{{"qorder", s.order()}, {"pwindow", json::array({lo.twice(), hi.twice()})}, {"coeffs", coeffs}};
}

json to_json(const Report& r) {
  json params = json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  json mismatches = json::array();
  for (const auto& m : r.mismatches)
    mismatches.push_back(json{{"part", m.part},
                              {"q", m.coeff.q},
                              {"p2", m.coeff.p.twice()},
                              {"lhs", to_string(m.coeff.lhs)},
                              {"rhs", to_string(m.coeff.rhs)}});
  json out{{"check", r.check},
           {"params", params},
           {"status", r.pass() ? "PASS" : "FAIL"},
           {"mismatches", mismatches},
           {"series", r.series ? series_to_json(*r.series, r.series_lo, r.series_hi) : json(nullptr)},
           {"version", kVersion}};
  if (!r.failures.empty()) out["failures"] = r.failures;
  if (r.counts) {
    json counts = json::array();
    for (const auto& [v, n] : *r.counts) counts.push_back(json::array({v, to_string(n)}));
    out["counts"] = counts;
  }
  if (!r.parts.empty()) {
    json parts = json::array();
    for (const auto& p : r.parts) parts.push_back(to_json(p));
    out["parts"] = parts;
  }
  return out;
}

void write_text(std::ostream& out, const Report& r, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  out << pad << (r.pass() ? "PASS " : "FAIL ") << r.check;
  for (const auto& [k, v] : r.params) out << ' ' << k << '=' << v;
  out << '\n';
  constexpr std::size_t kShown = 10;
  for (std::size_t i = 0; i < r.mismatches.size() && i < kShown; ++i) {
    const auto& m = r.mismatches[i];
    out << pad << "  mismatch";
    if (!m.part.empty()) out << ' ' << m.part;
    out << " q^" << m.coeff.q << " p^" << m.coeff.p.to_string() << ": " << to_string(m.coeff.lhs)
        << " != " << to_string(m.coeff.rhs) << '\n';
  }
  if (r.mismatches.size() > kShown) out << pad << "  ... " << r.mismatches.size() - kShown << " more\n";
  for (const auto& f : r.failures) out << pad << "  " << f << '\n';
  if (r.counts) {
    out << pad << "  {";
    bool first = true;
    for (const auto& [v, n] : *r.counts) {
      out << (first ? "" : ", ") << v << ": " << to_string(n);
      first = false;
    }
    out << "}\n";
  }
  for (const auto& p : r.parts) write_text(out, p, indent + 2);
  if (r.series) {
    const QSeries& s = *r.series;
    for (int d = 0; d <= s.order(); ++d) {
      out << pad << "  q^" << d << ":";
      bool any = false;
      for (const auto& [e, c] : s[d].clipped(r.series_hi).terms()) {
        if (e < r.series_lo) continue;
        out << ' ' << (sgn(c) < 0 ? "" : "+") << to_string(c) << "*p^" << e.to_string();
        any = true;
      }
      if (!any) out << " 0";
      out << '\n';
    }
  }
}

}  // namespace

std::string series_json(const QSeries& s, HalfExp lo, HalfExp hi) { return series_to_json(s, lo, hi).dump(); }

std::string report_json(const Report& r) { return to_json(r).dump(2); }

void write_report(std::ostream& out, const Report& r, OutputFormat format) {
  if (format == OutputFormat::json)
    out << report_json(r) << '\n';
  else
    write_text(out, r, 0);
}

}  // namespace topvert
