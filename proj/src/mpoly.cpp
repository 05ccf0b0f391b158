#include "polarweb/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace polarweb {

namespace {

int variable_rank(std::string_view name) {
  static constexpr std::string_view kOrder[] = {"x", "y", "a", "b", "dx", "dy", "t"};
  for (int i = 0; i < 7; ++i) {
    if (kOrder[i] == name) return i;
  }
  return 100;
}

Exponent checked_exponent(std::uint64_t e) {
  if (e >= kMaxExponent) throw PolyError("exponent exceeds 2^31");
  return static_cast<Exponent>(e);
}

std::uint64_t monomial_degree(const Monomial& m) {
  std::uint64_t d = 0;
  for (auto e : m) d += e;
  return d;
}

bool is_unit_monomial(const Monomial& m) {
  return std::all_of(m.begin(), m.end(), [](Exponent e) { return e == 0; });
}

// Dense coefficient list in one variable with polynomial coefficients.
using Coeffs = std::vector<MPoly>;

void trim(Coeffs& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

int deg(const Coeffs& c) { return static_cast<int>(c.size()) - 1; }

Coeffs coeffs_of(const MPoly& f, std::string_view v) {
  Coeffs c = coefficients(f, v);
  trim(c);
  return c;
}

MPoly power(const MPoly& base, long e) { return base.pow(e); }

Coeffs prem_coeffs(Coeffs r, const Coeffs& g) {
  const int n = deg(g);
  const int e = deg(r) - n + 1;
  if (e <= 0) return r;
  const MPoly& lc = g.back();
  const std::vector<std::string> vars = lc.vars();
  int steps = 0;
  while (!r.empty() && deg(r) >= n) {
    const int shift = deg(r) - n;
    const MPoly c = r.back();
    for (auto& ri : r) ri *= lc;
    for (int i = 0; i <= n; ++i) r[i + shift] -= c * g[i];
    trim(r);
    ++steps;
  }
  if (steps < e) {
    const MPoly scale = power(lc, e - steps);
    for (auto& ri : r) ri *= scale;
  }
  return r;
}

MPoly content_in(const MPoly& f, std::string_view v) {
  if (!f.uses(v)) return canonical(f);
  MPoly g;
  for (const auto& c : coefficients(f, v)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? canonical(c) : gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

MPoly primitive_in(const MPoly& f, std::string_view v) {
  return canonical(exact_divide(f, content_in(f, v)));
}

}  // namespace

bool variable_less(std::string_view lhs, std::string_view rhs) {
  const int rl = variable_rank(lhs);
  const int rr = variable_rank(rhs);
  if (rl != rr) return rl < rr;
  return lhs < rhs;
}

bool GrlexLess::operator()(const Monomial& lhs, const Monomial& rhs) const {
  const auto dl = monomial_degree(lhs);
  const auto dr = monomial_degree(rhs);
  if (dl != dr) return dl < dr;
  return std::lexicographical_compare(lhs.begin(), lhs.end(), rhs.begin(), rhs.end());
}

MPoly::MPoly(const Rational& c) {
  if (c != 0) {
    Rational q = c;
    q.canonicalize();
    terms_.emplace(Monomial{}, std::move(q));
  }
}

MPoly::MPoly(std::vector<std::string> vars,
             const std::vector<std::pair<Monomial, Rational>>& terms) {
  std::vector<std::size_t> perm(vars.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(),
            [&](std::size_t i, std::size_t j) { return variable_less(vars[i], vars[j]); });
  vars_.reserve(vars.size());
  for (auto i : perm) vars_.push_back(vars[i]);
  for (std::size_t i = 1; i < vars_.size(); ++i) {
    if (vars_[i] == vars_[i - 1]) throw PolyError("duplicate variable " + vars_[i]);
  }
  for (const auto& [m, c] : terms) {
    if (m.size() != vars.size()) throw PolyError("exponent vector length mismatch");
    Monomial pm(m.size());
    for (std::size_t k = 0; k < perm.size(); ++k) pm[k] = m[perm[k]];
    add_term(pm, c);
  }
}

MPoly MPoly::from_terms(std::vector<std::string> sorted_vars, TermMap terms) {
  MPoly p;
  p.vars_ = std::move(sorted_vars);
  p.terms_ = std::move(terms);
  return p;
}

MPoly MPoly::var(std::string_view name) { return term(name, 1); }

MPoly MPoly::term(std::string_view name, Exponent e, const Rational& c) {
  MPoly p;
  p.vars_ = {std::string(name)};
  p.add_term(Monomial{checked_exponent(e)}, c);
  return p;
}

void MPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  for (auto e : m) checked_exponent(e);
  Rational q = c;
  q.canonicalize();
  auto [it, inserted] = terms_.try_emplace(m, q);
  if (!inserted) {
    it->second += q;
    if (it->second == 0) terms_.erase(it);
  }
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && is_unit_monomial(terms_.begin()->first));
}

Rational MPoly::constant_term() const {
  if (terms_.empty()) return 0;
  const auto& [m, c] = *terms_.begin();
  return is_unit_monomial(m) ? c : Rational(0);
}

int MPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(monomial_degree(terms_.rbegin()->first));
}

int MPoly::var_index(std::string_view v) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == v) return static_cast<int>(i);
  }
  return -1;
}

int MPoly::degree(std::string_view v) const {
  const int i = var_index(v);
  if (terms_.empty()) return -1;
  if (i < 0) return 0;
  Exponent d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[i]);
  return static_cast<int>(d);
}

bool MPoly::declares(std::string_view v) const { return var_index(v) >= 0; }

bool MPoly::uses(std::string_view v) const { return degree(v) > 0; }

std::vector<std::string> MPoly::used_vars() const {
  std::vector<std::string> out;
  for (const auto& v : vars_) {
    if (uses(v)) out.push_back(v);
  }
  return out;
}

const Monomial& MPoly::leading_monomial() const {
  if (terms_.empty()) throw PolyError("leading monomial of zero polynomial");
  return terms_.rbegin()->first;
}

const Rational& MPoly::leading_coefficient() const {
  if (terms_.empty()) throw PolyError("leading coefficient of zero polynomial");
  return terms_.rbegin()->second;
}

std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
  std::vector<std::string> out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
             [](const std::string& l, const std::string& r) { return variable_less(l, r); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

MPoly MPoly::with_vars(const std::vector<std::string>& vars) const {
  if (vars == vars_) return *this;
  std::vector<std::string> target = merge_vars(vars, vars_);
  std::vector<int> where(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    where[i] = static_cast<int>(std::find(target.begin(), target.end(), vars_[i]) - target.begin());
  }
  TermMap out;
  for (const auto& [m, c] : terms_) {
    Monomial nm(target.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) nm[where[i]] = m[i];
    out.emplace(std::move(nm), c);
  }
  return from_terms(std::move(target), std::move(out));
}

MPoly MPoly::trimmed() const {
  std::vector<int> keep;
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (uses(vars_[i])) {
      keep.push_back(static_cast<int>(i));
      vars.push_back(vars_[i]);
    }
  }
  TermMap out;
  for (const auto& [m, c] : terms_) {
    Monomial nm;
    nm.reserve(keep.size());
    for (int i : keep) nm.push_back(m[i]);
    out.emplace(std::move(nm), c);
  }
  return from_terms(std::move(vars), std::move(out));
}

std::pair<MPoly, MPoly> align(const MPoly& f, const MPoly& g) {
  if (f.vars() == g.vars()) return {f, g};
  auto vars = merge_vars(f.vars(), g.vars());
  return {f.with_vars(vars), g.with_vars(vars)};
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

MPoly& MPoly::operator+=(const MPoly& rhs) {
  if (rhs.vars_ != vars_) {
    auto [l, r] = align(*this, rhs);
    *this = std::move(l);
    for (const auto& [m, c] : r.terms_) add_term(m, c);
    return *this;
  }
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& rhs) {
  if (rhs.vars_ != vars_) {
    auto [l, r] = align(*this, rhs);
    *this = std::move(l);
    for (const auto& [m, c] : r.terms_) add_term(m, -c);
    return *this;
  }
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

MPoly operator*(const MPoly& lhs, const MPoly& rhs) {
  auto [l, r] = align(lhs, rhs);
  MPoly out = MPoly::from_terms(l.vars(), {});
  const std::size_t n = l.vars().size();
  Monomial m(n);
  for (const auto& [ml, cl] : l.terms()) {
    for (const auto& [mr, cr] : r.terms()) {
      for (std::size_t i = 0; i < n; ++i) {
        m[i] = checked_exponent(std::uint64_t{ml[i]} + mr[i]);
      }
      out.add_term(m, cl * cr);
    }
  }
  return out;
}

MPoly& MPoly::operator*=(const MPoly& rhs) { return *this = *this * rhs; }

MPoly& MPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  Rational q = c;
  q.canonicalize();
  for (auto& [m, coef] : terms_) coef *= q;
  return *this;
}

MPoly MPoly::pow(long n) const {
  if (n < 0) throw PolyError("negative exponent in pow");
  MPoly result = MPoly(1).with_vars(vars_);
  MPoly base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

bool operator==(const MPoly& lhs, const MPoly& rhs) {
  if (lhs.vars() == rhs.vars()) return lhs.terms() == rhs.terms();
  auto [l, r] = align(lhs, rhs);
  return l.terms() == r.terms();
}

std::string to_string(const Rational& q) {
  std::string s = q.get_num().get_str();
  if (q.get_den() != 1) s += "/" + q.get_den().get_str();
  return s;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const Rational mag = abs(c);
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty()) {
      out << to_string(mag);
    } else if (mag == 1) {
      out << mono;
    } else {
      out << to_string(mag) << "*" << mono;
    }
  }
  return out.str();
}

MPoly derivative(const MPoly& f, std::string_view v) {
  const int i = f.var_index(v);
  if (i < 0) throw PolyError("derivative: unknown variable " + std::string(v));
  MPoly out = MPoly::from_terms(f.vars(), {});
  for (const auto& [m, c] : f.terms()) {
    if (m[i] == 0) continue;
    Monomial nm = m;
    nm[i] -= 1;
    out.add_term(nm, c * m[i]);
  }
  return out;
}

MPoly substitute(const MPoly& f, const std::map<std::string, MPoly>& assignments) {
  std::vector<int> assigned_index(f.vars().size(), -1);
  std::vector<const MPoly*> values;
  std::vector<std::string> free_vars;
  for (std::size_t i = 0; i < f.vars().size(); ++i) {
    auto it = assignments.find(f.vars()[i]);
    if (it != assignments.end()) {
      assigned_index[i] = static_cast<int>(values.size());
      values.push_back(&it->second);
    } else {
      free_vars.push_back(f.vars()[i]);
    }
  }
  if (values.empty()) return f;
  std::vector<std::string> result_vars = free_vars;
  for (const auto* v : values) result_vars = merge_vars(result_vars, v->vars());

  std::vector<MPoly> base;
  base.reserve(values.size());
  for (const auto* v : values) base.push_back(v->with_vars(result_vars));
  std::vector<std::map<Exponent, MPoly>> cache(values.size());
  auto power_of = [&](int idx, Exponent e) -> const MPoly& {
    auto it = cache[idx].find(e);
    if (it != cache[idx].end()) return it->second;
    return cache[idx].emplace(e, base[idx].pow(e)).first->second;
  };

  std::vector<int> free_target(f.vars().size(), -1);
  for (std::size_t i = 0; i < f.vars().size(); ++i) {
    if (assigned_index[i] < 0) {
      free_target[i] = static_cast<int>(
          std::find(result_vars.begin(), result_vars.end(), f.vars()[i]) - result_vars.begin());
    }
  }

  MPoly out = MPoly::from_terms(result_vars, {});
  for (const auto& [m, c] : f.terms()) {
    Monomial fm(result_vars.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (free_target[i] >= 0) fm[free_target[i]] = m[i];
    }
    MPoly t = MPoly::from_terms(result_vars, {});
    t.add_term(fm, c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (assigned_index[i] >= 0 && m[i] > 0) t = t * power_of(assigned_index[i], m[i]);
    }
    out += t;
  }
  return out;
}

MPoly evaluate(const MPoly& f, const std::map<std::string, Rational>& values) {
  std::map<std::string, MPoly> as;
  for (const auto& [k, v] : values) as.emplace(k, MPoly(v));
  return substitute(f, as);
}

Rational evaluate_exact(const MPoly& f, const std::map<std::string, Rational>& values) {
  std::vector<const Rational*> val(f.vars().size(), nullptr);
  for (std::size_t i = 0; i < f.vars().size(); ++i) {
    auto it = values.find(f.vars()[i]);
    if (it != values.end()) val[i] = &it->second;
  }
  Rational total = 0;
  for (const auto& [m, c] : f.terms()) {
    Rational t = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (val[i] == nullptr) throw PolyError("evaluate_exact: unassigned variable " + f.vars()[i]);
      Rational p;
      mpz_pow_ui(p.get_num_mpz_t(), val[i]->get_num_mpz_t(), m[i]);
      mpz_pow_ui(p.get_den_mpz_t(), val[i]->get_den_mpz_t(), m[i]);
      t *= p;
    }
    total += t;
  }
  return total;
}

std::vector<MPoly> coefficients(const MPoly& f, std::string_view v) {
  const int i = f.var_index(v);
  if (i < 0) return {f};
  std::vector<MPoly> out(std::max(f.degree(v), 0) + 1, MPoly::from_terms(f.vars(), {}));
  for (const auto& [m, c] : f.terms()) {
    Monomial nm = m;
    const Exponent e = nm[i];
    nm[i] = 0;
    out[e].add_term(nm, c);
  }
  return out;
}

MPoly from_coefficients(std::string_view v, const std::vector<MPoly>& coeffs) {
  MPoly out;
  MPoly x = MPoly::var(v);
  MPoly xp = MPoly(1);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!coeffs[i].is_zero()) out += coeffs[i] * xp;
    if (i + 1 < coeffs.size()) xp = xp * x;
  }
  return out.with_vars(merge_vars(out.vars(), {std::string(v)}));
}

DivResult divide(const MPoly& f0, const MPoly& g0) {
  if (g0.is_zero()) throw PolyError("division by zero polynomial");
  auto [f, g] = align(f0, g0);
  const auto& lm = g.leading_monomial();
  const Rational lc = g.leading_coefficient();
  MPoly r = f;
  MPoly q = MPoly::from_terms(f.vars(), {});
  MPoly rem = MPoly::from_terms(f.vars(), {});
  const std::size_t n = lm.size();
  while (!r.is_zero()) {
    const Monomial m = r.leading_monomial();
    const Rational c = r.leading_coefficient();
    bool divisible = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] < lm[i]) {
        divisible = false;
        break;
      }
    }
    if (!divisible) {
      rem.add_term(m, c);
      r.mutable_terms().erase(std::prev(r.mutable_terms().end()));
      continue;
    }
    Monomial qm(n);
    for (std::size_t i = 0; i < n; ++i) qm[i] = m[i] - lm[i];
    const Rational qc = c / lc;
    q.add_term(qm, qc);
    for (const auto& [gm, gc] : g.terms()) {
      Monomial pm(n);
      for (std::size_t i = 0; i < n; ++i) pm[i] = gm[i] + qm[i];
      r.add_term(pm, -qc * gc);
    }
  }
  return {q, rem};
}

std::optional<MPoly> try_divide(const MPoly& f, const MPoly& g) {
  auto [q, r] = divide(f, g);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

MPoly exact_divide(const MPoly& f, const MPoly& g) {
  auto q = try_divide(f, g);
  if (!q) throw PolyError("exact_divide: inexact division");
  return *q;
}

Rational rational_content(const MPoly& f) {
  if (f.is_zero()) return 0;
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& [m, c] : f.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational out(num_gcd, den_lcm);
  out.canonicalize();
  return out;
}

MPoly canonical(const MPoly& f) {
  if (f.is_zero()) return f;
  Rational content = rational_content(f);
  if (sgn(f.leading_coefficient()) < 0) content = -content;
  if (content == 1) return f;
  MPoly out = f;
  const Rational inv = 1 / content;
  return out *= inv;
}

MPoly gcd(const MPoly& f0, const MPoly& g0) {
  if (f0.is_zero() && g0.is_zero()) throw PolyError("gcd of two zero polynomials");
  auto [f, g] = align(f0, g0);
  if (f.is_zero()) return canonical(g);
  if (g.is_zero()) return canonical(f);
  if (f.is_constant() || g.is_constant()) return MPoly(1).with_vars(f.vars());

  std::string v;
  for (const auto& name : f.vars()) {
    if (f.uses(name) || g.uses(name)) {
      v = name;
      break;
    }
  }
  if (!f.uses(v)) return gcd(f, content_in(g, v)).with_vars(f.vars());
  if (!g.uses(v)) return gcd(content_in(f, v), g).with_vars(f.vars());

  const MPoly cf = content_in(f, v);
  const MPoly cg = content_in(g, v);
  const MPoly c = gcd(cf, cg);
  MPoly a = canonical(exact_divide(f, cf));
  MPoly b = canonical(exact_divide(g, cg));
  if (a.degree(v) < b.degree(v)) std::swap(a, b);
  while (true) {
    MPoly r = pseudo_remainder(a, b, v);
    if (r.is_zero()) break;
    if (r.degree(v) == 0) {
      b = MPoly(1).with_vars(f.vars());
      break;
    }
    a = std::move(b);
    b = primitive_in(r, v);
  }
  return canonical(c * primitive_in(b, v)).with_vars(f.vars());
}

MPoly squarefree_part(const MPoly& f) {
  if (f.is_zero()) throw PolyError("squarefree part of zero polynomial");
  MPoly g = f;
  for (const auto& v : f.used_vars()) {
    g = gcd(g, derivative(f, v));
    if (g.is_constant()) break;
  }
  return canonical(exact_divide(f, g));
}

MPoly gcd_all(const std::vector<MPoly>& polys) {
  MPoly g;
  for (const MPoly& f : polys) {
    if (f.is_zero()) continue;
    g = g.is_zero() ? canonical(f) : gcd(g, f);
  }
  return g;
}

GcdSquarefree gcd_squarefree(const MPoly& f, const std::optional<MPoly>& g) {
  if (f.is_zero() && (!g || g->is_zero())) throw PolyError("gcd_squarefree: both inputs zero");
  if (f.is_zero()) throw PolyError("gcd_squarefree: f must be nonzero");
  MPoly d;
  if (g) {
    d = gcd(f, *g);
  } else {
    d = f;
    for (const auto& v : f.used_vars()) d = gcd(d, derivative(f, v));
    d = canonical(d);
  }
  return {d, squarefree_part(f)};
}

std::vector<std::pair<MPoly, int>> squarefree_decomposition(const MPoly& f0, std::string_view v) {
  if (f0.is_zero()) throw PolyError("squarefree decomposition of zero polynomial");
  std::vector<std::pair<MPoly, int>> out;
  if (!f0.uses(v)) return out;
  const MPoly f = f0.with_vars({std::string(v)});
  const MPoly fp = derivative(f, v);
  MPoly a = gcd(f, fp);
  MPoly b = exact_divide(f, a);
  MPoly c = exact_divide(fp, a);
  MPoly d = c - derivative(b, v);
  int i = 1;
  while (b.uses(v)) {
    MPoly ai = gcd(b, d);
    b = exact_divide(b, ai);
    c = exact_divide(d, ai);
    d = c - derivative(b, v);
    if (ai.uses(v)) out.emplace_back(canonical(ai), i);
    ++i;
  }
  return out;
}

MPoly pseudo_remainder(const MPoly& f0, const MPoly& g0, std::string_view v) {
  auto [f, g] = align(f0, g0);
  if (g.is_zero()) throw PolyError("pseudo_remainder by zero");
  Coeffs r = coeffs_of(f, v);
  Coeffs gc = coeffs_of(g, v);
  r = prem_coeffs(std::move(r), gc);
  if (r.empty()) return MPoly::from_terms(f.vars(), {});
  return from_coefficients(v, r).with_vars(f.vars());
}

MPoly resultant(const MPoly& f0, const MPoly& g0, std::string_view v) {
  auto [f, g] = align(f0, g0);
  const auto vars = merge_vars(f.vars(), {std::string(v)});
  f = f.with_vars(vars);
  g = g.with_vars(vars);
  if (f.is_zero() || g.is_zero()) return MPoly::from_terms(vars, {});
  const int m = f.degree(v);
  const int n = g.degree(v);
  if (m == 0 || n == 0) {
    throw DegenerateResultant("resultant: input constant in " + std::string(v));
  }
  Coeffs a = coeffs_of(f, v);
  Coeffs b = coeffs_of(g, v);
  int s = 1;
  if (m < n) {
    std::swap(a, b);
    if ((m * n) % 2 == 1) s = -1;
  }
  MPoly gg = MPoly(1).with_vars(vars);
  MPoly h = MPoly(1).with_vars(vars);
  while (true) {
    const int da = deg(a);
    const int db = deg(b);
    const int delta = da - db;
    if (da % 2 == 1 && db % 2 == 1) s = -s;
    Coeffs r = prem_coeffs(a, b);
    if (r.empty()) return MPoly::from_terms(vars, {});
    a = std::move(b);
    const MPoly denom = gg * power(h, delta);
    for (auto& ri : r) ri = exact_divide(ri, denom);
    b = std::move(r);
    gg = a.back();
    if (delta == 1) {
      h = gg;
    } else if (delta > 1) {
      h = exact_divide(power(gg, delta), power(h, delta - 1));
    }
    if (deg(b) == 0) {
      const int dA = deg(a);
      MPoly hn = dA == 1 ? b.back() : exact_divide(power(b.back(), dA), power(h, dA - 1));
      if (s < 0) hn = -hn;
      return hn.with_vars(vars);
    }
  }
}

MPoly discriminant_binary(const MPoly& form, std::string_view u, std::string_view w) {
  if (form.is_zero()) throw PolyError("discriminant of zero form");
  const int iu = form.var_index(u);
  const int iw = form.var_index(w);
  int k = -1;
  for (const auto& [m, c] : form.terms()) {
    const int d = (iu >= 0 ? static_cast<int>(m[iu]) : 0) + (iw >= 0 ? static_cast<int>(m[iw]) : 0);
    if (k < 0) k = d;
    if (d != k) throw PolyError("discriminant: form is not homogeneous in the direction variables");
  }
  if (k < 1) throw PolyError("discriminant: form has degree 0 in the direction variables");
  if (k == 1) return MPoly(1);
  const std::string s = "_s";
  const MPoly sv = MPoly::var(s);
  for (long gamma = 0; gamma < 64; ++gamma) {
    std::map<std::string, MPoly> as;
    as.emplace(std::string(u), MPoly(1) + sv * Rational(gamma));
    as.emplace(std::string(w), sv);
    MPoly f = substitute(form, as);
    const auto cs = coefficients(f, s);
    if (static_cast<int>(cs.size()) <= k || cs[k].is_zero()) continue;
    const MPoly res = resultant(f, derivative(f, s), s);
    return canonical(exact_divide(res, cs[k])).trimmed();
  }
  throw PolyError("discriminant: no admissible direction change found");
}

MPoly translate(const MPoly& f, const Rational& px, const Rational& py, std::string_view x,
                std::string_view y) {
  std::map<std::string, MPoly> as;
  as.emplace(std::string(x), MPoly::var(x) + MPoly(px));
  as.emplace(std::string(y), MPoly::var(y) + MPoly(py));
  return substitute(f, as);
}

int degree_in(const MPoly& f, const std::vector<std::string>& vars) {
  if (f.is_zero()) return -1;
  std::vector<int> idx;
  for (const auto& v : vars) {
    const int i = f.var_index(v);
    if (i >= 0) idx.push_back(i);
  }
  int best = 0;
  for (const auto& [m, c] : f.terms()) {
    int d = 0;
    for (int i : idx) d += static_cast<int>(m[i]);
    best = std::max(best, d);
  }
  return best;
}

MPoly homogeneous_part(const MPoly& f, const std::vector<std::string>& vars, int deg_wanted) {
  std::vector<int> idx;
  for (const auto& v : vars) {
    const int i = f.var_index(v);
    if (i >= 0) idx.push_back(i);
  }
  MPoly out = MPoly::from_terms(f.vars(), {});
  for (const auto& [m, c] : f.terms()) {
    int d = 0;
    for (int i : idx) d += static_cast<int>(m[i]);
    if (d == deg_wanted) out.add_term(m, c);
  }
  return out;
}

std::vector<MPoly> jet_decompose(const MPoly& f, const Rational& px, const Rational& py,
                                 std::string_view x, std::string_view y) {
  const auto vars = merge_vars(f.vars(), {std::string(x), std::string(y)});
  const MPoly g = translate(f.with_vars(vars), px, py, x, y);
  const std::vector<std::string> xy = {std::string(x), std::string(y)};
  const int top = degree_in(g, xy);
  std::vector<MPoly> parts;
  for (int d = 0; d <= top; ++d) parts.push_back(homogeneous_part(g, xy, d));
  return parts;
}

}  // namespace polarweb
