#include "tasep/emit.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace tasep::emit {

Format parse_format(std::string_view name) {
  if (name == "json") return Format::kJson;
  if (name == "csv") return Format::kCsv;
  throw std::invalid_argument("unknown format '" + std::string(name) + "' (json, csv)");
}

Json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) { return parse_rational(j.get<std::string>()); }

Json to_json(const poly::MultiPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(Json{{"coef", to_string(c)}, {"exps", e}});
  return Json{{"vars", p.nvars()}, {"terms", terms}};
}

poly::MultiPoly poly_from_json(const Json& j) {
  poly::MultiPoly p(j.at("vars").get<int>());
  for (const auto& t : j.at("terms")) {
    auto e = t.at("exps").get<poly::Exponents>();
    if (static_cast<int>(e.size()) != p.nvars()) throw std::invalid_argument("exponent vector has wrong length");
    p.add_term(e, rational_from_json(t.at("coef")));
  }
  return p;
}

Json to_json(const continuum::PermDist& d) {
  Json p = Json::object();
  for (const auto& [perm, prob] : d.p) p[to_string(perm)] = to_string(prob);
  return Json{{"n", d.n}, {"p", p}};
}

continuum::PermDist perm_dist_from_json(const Json& j) {
  continuum::PermDist d;
  d.n = j.at("n").get<int>();
  for (const auto& [key, value] : j.at("p").items()) d.p.emplace(parse_permutation(key), rational_from_json(value));
  return d;
}

Json to_json(const continuum::CorrTable& c) {
  Json rows = Json::array();
  for (const auto& row : c.c) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(to_string(x));
    rows.push_back(r);
  }
  return Json{{"n", c.n}, {"c", rows}};
}

continuum::CorrTable corr_table_from_json(const Json& j) {
  continuum::CorrTable c;
  c.n = j.at("n").get<int>();
  for (const auto& row : j.at("c")) {
    std::vector<Rational> r;
    for (const auto& x : row) r.push_back(rational_from_json(x));
    c.c.push_back(std::move(r));
  }
  return c;
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Json to_json(const continuum::CorrEstimate& c) {
  Json cells = Json::array();
  for (int i = 1; i <= c.n; ++i)
    for (int j = 1; j <= c.n; ++j) {
      if (i == j) continue;
      cells.push_back(Json{{"i", i},
                           {"j", j},
                           {"estimate", c.estimate[i - 1][j - 1]},
                           {"stderr", c.stderr_[i - 1][j - 1]},
                           {"conjecture", to_string(continuum::conj_correlation(i, j, c.n))}});
    }
  return Json{{"n", c.n}, {"samples", c.samples}, {"cells", cells}};
}

Json to_json(const markov::StationaryDist& d, const TypeVector& type) {
  Json p = Json::object();
  for (const auto& [w, prob] : d.prob) p[to_string(w)] = to_string(prob);
  return Json{{"type", type.counts()}, {"N", type.ring_size()}, {"p", p}};
}

Json to_json(const markov::EmpiricalDist& d) {
  Json cells = Json::array();
  for (const auto& [w, f] : d.frequency)
    cells.push_back(Json{{"word", to_string(w)}, {"frequency", f}, {"stderr", d.standard_error.at(w)}});
  return Json{{"samples", d.samples}, {"cells", cells}};
}

Json to_json(const rs::RsStationary& s) {
  Json p = Json::object();
  for (std::size_t i = 0; i < s.states.size() && i < s.prob.size(); ++i)
    p[rs::to_string(s.states[i])] = to_string(s.prob[i]);
  return Json{{"n", s.n}, {"k", s.k}, {"unique", s.unique}, {"p", p}};
}

Json to_json(const tab::Tableau& t) { return Json{{"rows", t.rows}, {"text", tab::to_string(t)}}; }

std::string corr_table_csv(const continuum::CorrTable& c) {
  std::ostringstream out;
  out << "i,j,value,conjecture\n";
  for (int i = 1; i <= c.n; ++i)
    for (int j = 1; j <= c.n; ++j) {
      if (i == j) continue;
      out << i << ',' << j << ',' << to_string(c.at(i, j)) << ',' << to_string(continuum::conj_correlation(i, j, c.n))
          << '\n';
    }
  return out.str();
}

std::string corr_estimate_csv(const continuum::CorrEstimate& c) {
  std::ostringstream out;
  out << "i,j,estimate,stderr,conjecture\n";
  for (int i = 1; i <= c.n; ++i)
    for (int j = 1; j <= c.n; ++j) {
      if (i == j) continue;
      out << i << ',' << j << ',' << format_double(c.estimate[i - 1][j - 1]) << ','
          << format_double(c.stderr_[i - 1][j - 1]) << ',' << to_string(continuum::conj_correlation(i, j, c.n)) << '\n';
    }
  return out.str();
}

std::string perm_dist_csv(const continuum::PermDist& d) {
  std::ostringstream out;
  out << "perm,p\n";
  for (const auto& [perm, prob] : d.p) out << to_string(perm) << ',' << to_string(prob) << '\n';
  return out.str();
}

std::string stationary_csv(const markov::StationaryDist& d) {
  std::ostringstream out;
  out << "word,p\n";
  for (const auto& [w, prob] : d.prob) out << '"' << to_string(w) << "\"," << to_string(prob) << '\n';
  return out.str();
}

std::string rs_stationary_csv(const rs::RsStationary& s) {
  std::ostringstream out;
  out << "pattern,p\n";
  for (std::size_t i = 0; i < s.states.size() && i < s.prob.size(); ++i)
    out << rs::to_string(s.states[i]) << ',' << to_string(s.prob[i]) << '\n';
  return out.str();
}

}  // namespace tasep::emit
