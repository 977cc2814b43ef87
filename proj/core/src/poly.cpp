#include "tasep/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace tasep::poly {

using tasep::to_string;

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(Exponents(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int i) {
  if (i < 1 || i > nvars) throw std::out_of_range("variable index " + std::to_string(i));
  Exponents e(static_cast<std::size_t>(nvars), 0);
  e[i - 1] = 1;
  return monomial(1, std::move(e));
}

MultiPoly MultiPoly::monomial(const Rational& c, Exponents e) {
  MultiPoly p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

Rational MultiPoly::coefficient(const Exponents& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("exponent vector has the wrong arity");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

void MultiPoly::check_arity(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) {
    throw std::invalid_argument("polynomials in " + std::to_string(nvars_) + " and " + std::to_string(o.nvars_) +
                                " variables");
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_arity(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_arity(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_arity(b);
  MultiPoly out(a.nvars_);
  Exponents e(static_cast<std::size_t>(a.nvars_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly pow(const MultiPoly& p, int k) {
  if (k < 0) throw std::invalid_argument("negative power");
  MultiPoly out = MultiPoly::constant(p.nvars(), 1);
  for (int i = 0; i < k; ++i) out = out * p;
  return out;
}

MultiPoly homogeneous_part(const MultiPoly& p, int d) {
  MultiPoly out(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    if (std::accumulate(e.begin(), e.end(), 0) == d) out.add_term(e, c);
  }
  return out;
}

Rational evaluate(const MultiPoly& p, const std::vector<Rational>& point) {
  if (static_cast<int>(point.size()) != p.nvars()) throw std::invalid_argument("evaluation point has the wrong arity");
  Rational sum = 0;
  for (const auto& [e, c] : p.terms()) {
    Rational t = c;
    for (int i = 0; i < p.nvars(); ++i) {
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    }
    sum += t;
  }
  return sum;
}

MultiPoly substitute(const MultiPoly& p, const std::vector<MultiPoly>& images) {
  if (static_cast<int>(images.size()) != p.nvars()) throw std::invalid_argument("need one image per variable");
  if (images.empty()) return p;
  const int m = images.front().nvars();
  // powers[i][k] = images[i]^k, built on demand.
  std::vector<std::vector<MultiPoly>> powers(images.size());
  auto power = [&](int i, int k) -> const MultiPoly& {
    auto& v = powers[i];
    if (v.empty()) v.push_back(MultiPoly::constant(m, 1));
    while (static_cast<int>(v.size()) <= k) v.push_back(v.back() * images[i]);
    return v[k];
  };
  MultiPoly out(m);
  for (const auto& [e, c] : p.terms()) {
    MultiPoly t = MultiPoly::constant(m, c);
    for (int i = 0; i < p.nvars(); ++i) {
      if (e[i] > 0) t = t * power(i, e[i]);
    }
    out += t;
  }
  return out;
}

MultiPoly vandermonde(int n) {
  if (n < 1) throw std::invalid_argument("vandermonde needs n >= 1");
  MultiPoly out = MultiPoly::constant(n, 1);
  for (int l = 2; l <= n; ++l)
    for (int k = 1; k < l; ++k) out = out * (MultiPoly::variable(n, l) - MultiPoly::variable(n, k));
  return out;
}

MultiPoly partial_derivative(const MultiPoly& p, int var, int order) {
  if (var < 1 || var > p.nvars()) throw std::out_of_range("variable index " + std::to_string(var));
  if (order < 0) throw std::invalid_argument("negative derivative order");
  MultiPoly out(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    const int a = e[var - 1];
    if (a < order) continue;
    Rational f = c;
    for (int k = 0; k < order; ++k) f *= a - k;
    Exponents d = e;
    d[var - 1] -= order;
    out.add_term(d, f);
  }
  return out;
}

MultiPoly laplacian(const MultiPoly& p) {
  MultiPoly out(p.nvars());
  for (int i = 1; i <= p.nvars(); ++i) out += partial_derivative(p, i, 2);
  return out;
}

MultiPoly gap_laplacian(const MultiPoly& p) {
  MultiPoly out(p.nvars());
  for (int i = 1; i < p.nvars(); ++i) {
    const MultiPoly di = partial_derivative(p, i) - partial_derivative(p, i + 1);
    out += partial_derivative(di, i) - partial_derivative(di, i + 1);
  }
  return out;
}

MultiPoly det_symbolic(const std::vector<std::vector<MultiPoly>>& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) throw std::invalid_argument("empty matrix");
  for (const auto& row : m) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("matrix must be square");
  }
  if (n == 1) return m[0][0];
  MultiPoly out(m[0][0].nvars());
  for (int j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<MultiPoly>> minor;
    for (int r = 1; r < n; ++r) {
      std::vector<MultiPoly> row;
      for (int c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    const MultiPoly t = m[0][j] * det_symbolic(minor);
    if (j % 2 == 0) {
      out += t;
    } else {
      out -= t;
    }
  }
  return out;
}

namespace {

[[noreturn]] void bad_operator(std::string_view text, std::size_t at, const std::string& why) {
  throw std::invalid_argument("cannot parse operator '" + std::string(text) + "' at offset " + std::to_string(at) +
                              ": " + why);
}

}  // namespace

OperatorExpr parse_operator(std::string_view text) {
  OperatorExpr op;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto number = [&]() -> long {
    const std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) bad_operator(text, i, "expected a number");
    return std::stol(std::string(text.substr(start, i - start)));
  };
  skip();
  if (i == text.size()) bad_operator(text, i, "empty expression");
  bool first = true;
  while (true) {
    skip();
    if (i == text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      bad_operator(text, i, "expected + or -");
    }
    first = false;
    OperatorExpr::Term term{Rational(sign), {}};
    bool has_coef = false;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      Integer num(number());
      Integer den(1);
      if (i < text.size() && text[i] == '/') {
        ++i;
        den = number();
      }
      term.coef *= make_rational(num, den);
      has_coef = true;
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip();
      }
    }
    bool has_d = false;
    while (i < text.size() && text[i] == 'd') {
      ++i;
      const long var = number();
      long power = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        power = number();
      }
      if (var < 1) bad_operator(text, i, "variables are numbered from 1");
      if (static_cast<long>(term.exps.size()) < var) term.exps.resize(static_cast<std::size_t>(var), 0);
      term.exps[var - 1] += static_cast<int>(power);
      has_d = true;
    }
    if (!has_coef && !has_d) bad_operator(text, i, "expected a coefficient or a derivative");
    op.terms.push_back(std::move(term));
  }
  return op;
}

std::string to_string(const OperatorExpr& op) {
  std::string out;
  for (const auto& t : op.terms) {
    const bool neg = t.coef < 0;
    const Rational mag = neg ? Rational(-t.coef) : t.coef;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string d;
    for (std::size_t v = 0; v < t.exps.size(); ++v) {
      if (t.exps[v] == 0) continue;
      d += "d" + std::to_string(v + 1);
      if (t.exps[v] > 1) d += "^" + std::to_string(t.exps[v]);
    }
    if (d.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += d;
    } else {
      out += to_string(mag) + "*" + d;
    }
  }
  return out.empty() ? "0" : out;
}

MultiPoly apply_operator(const OperatorExpr& op, const MultiPoly& p) {
  MultiPoly out(p.nvars());
  for (const auto& t : op.terms) {
    if (static_cast<int>(t.exps.size()) > p.nvars()) {
      for (std::size_t v = p.nvars(); v < t.exps.size(); ++v) {
        if (t.exps[v] != 0) throw std::invalid_argument("operator differentiates a variable the polynomial lacks");
      }
    }
    MultiPoly img = p;
    for (std::size_t v = 0; v < t.exps.size() && !img.is_zero(); ++v) {
      if (t.exps[v] > 0) img = partial_derivative(img, static_cast<int>(v) + 1, t.exps[v]);
    }
    out += img * t.coef;
  }
  return out;
}

Rational integrate_ordered_simplex(const MultiPoly& p) {
  const int n = p.nvars();
  if (n == 0) return p.coefficient({});
  // Integrate out q_1 over [0, q_2], then q_2 over [0, q_3], ...; the last
  // variable runs over [0, 1]. Each step is an antiderivative evaluated at
  // the next variable, so the running polynomial stays in n variables.
  MultiPoly cur = p;
  for (int v = 0; v < n; ++v) {
    MultiPoly next(n);
    for (const auto& [e, c] : cur.terms()) {
      Exponents f = e;
      const int a = f[v] + 1;
      f[v] = 0;
      if (v + 1 < n) f[v + 1] += a;
      next.add_term(f, c / a);
    }
    cur = std::move(next);
  }
  return cur.coefficient(Exponents(static_cast<std::size_t>(n), 0));
}

Rational integrate_ordered_simplex_closed(const MultiPoly& p) {
  Rational sum = 0;
  for (const auto& [e, c] : p.terms()) {
    Integer den = 1;
    long partial = 0;
    for (std::size_t k = 0; k < e.size(); ++k) {
      partial += e[k] + 1;
      den *= partial;
    }
    sum += c / Rational(den);
  }
  return sum;
}

Rational integrate_interval(const MultiPoly& p, const Rational& lo, const Rational& hi) {
  if (p.nvars() != 1) throw std::invalid_argument("integrate_interval needs a univariate polynomial");
  Rational sum = 0;
  for (const auto& [e, c] : p.terms()) {
    const int a = e[0] + 1;
    Rational top = 1, bottom = 1;
    for (int k = 0; k < a; ++k) {
      top *= hi;
      bottom *= lo;
    }
    sum += c * (top - bottom) / a;
  }
  return sum;
}

std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  // Highest degree first reads more naturally.
  std::vector<std::pair<Exponents, Rational>> terms(p.terms().begin(), p.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    const int da = std::accumulate(a.first.begin(), a.first.end(), 0);
    const int db = std::accumulate(b.first.begin(), b.first.end(), 0);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  for (const auto& [e, c] : terms) {
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mono;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "q" + std::to_string(v + 1);
      if (e[v] > 1) mono += "^" + std::to_string(e[v]);
    }
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + "*" + mono;
    }
  }
  return out;
}

}  // namespace tasep::poly
