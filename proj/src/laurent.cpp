#include <tklv/errors.hpp>
#include <tklv/laurent.hpp>

#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tklv {

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.emplace(0, Int(c));
}

LaurentPoly::LaurentPoly(const Int& c) {
  if (c != 0) terms_.emplace(0, c);
}

LaurentPoly LaurentPoly::monomial(const Int& c, int e) {
  LaurentPoly f;
  f.set_coeff(e, c);
  return f;
}

LaurentPoly LaurentPoly::symmetric(int e) {
  if (e == 0) return LaurentPoly(1);
  LaurentPoly f = v_pow(e);
  f.add_to_coeff(-e, 1);
  return f;
}

Int LaurentPoly::coeff(int k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly::set_coeff(int k, const Int& c) {
  if (c == 0)
    terms_.erase(k);
  else
    terms_[k] = c;
}

void LaurentPoly::add_to_coeff(int k, const Int& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly f;
  for (const auto& [e, c] : terms_) f.terms_.emplace_hint(f.terms_.end(), e + k, c);
  return f;
}

LaurentPoly LaurentPoly::scaled(const Int& c) const {
  LaurentPoly f;
  if (c == 0) return f;
  for (const auto& [e, a] : terms_) f.terms_.emplace_hint(f.terms_.end(), e, a * c);
  return f;
}

bool LaurentPoly::is_bar_invariant() const {
  for (const auto& [e, c] : terms_)
    if (coeff(-e) != c) return false;
  return true;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& g) {
  for (const auto& [e, c] : g.terms_) add_to_coeff(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& g) {
  for (const auto& [e, c] : g.terms_) add_to_coeff(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& g) {
  *this = *this * g;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g) {
  LaurentPoly h;
  for (const auto& [e1, c1] : f.terms_)
    for (const auto& [e2, c2] : g.terms_) h.add_to_coeff(e1 + e2, c1 * c2);
  return h;
}

LaurentPoly add(const LaurentPoly& f, const LaurentPoly& g) { return f + g; }
LaurentPoly mul(const LaurentPoly& f, const LaurentPoly& g) { return f * g; }

LaurentPoly bar(const LaurentPoly& f) {
  LaurentPoly g;
  for (const auto& [e, c] : f.terms()) g.set_coeff(-e, c);
  return g;
}

std::pair<LaurentPoly, LaurentPoly> split_plus_minus(const LaurentPoly& f) {
  LaurentPoly plus, minus;
  for (const auto& [e, c] : f.terms()) (e >= 0 ? plus : minus).set_coeff(e, c);
  return {plus, minus};
}

Int coeff(const LaurentPoly& f, int k) { return f.coeff(k); }

LaurentPoly pow(const LaurentPoly& f, unsigned n) {
  LaurentPoly r(1), b = f;
  while (n) {
    if (n & 1u) r *= b;
    n >>= 1;
    if (n) b *= b;
  }
  return r;
}

LaurentPoly solve_times_v_plus_vinv(const LaurentPoly& g, int max_known_exp) {
  if (max_known_exp < -2)
    throw std::invalid_argument("solve_times_v_plus_vinv: need g up to v^-2");
  LaurentPoly f;
  int lowest = 0;
  bool any = false;
  for (const auto& [e, c] : g.terms()) {
    if (e > max_known_exp) break;
    if (e % 2 != 0) throw NoSolution("(v+v^-1)f has only even exponents");
    if (!any) lowest = e, any = true;
  }
  if (!any) return f;
  // g_j = f_{j-1} + f_{j+1}; walk up from the bottom
  for (int i = lowest + 1; i <= -1; i += 2) f.set_coeff(i, g.coeff(i - 1) - f.coeff(i - 2));
  int top = std::min(max_known_exp, std::max(0, g.max_exp()));
  for (int j = lowest; j <= top; j += 2)
    if (g.coeff(j) != f.coeff(j - 1) + f.coeff(j + 1))
      throw NoSolution("(v+v^-1)f: inconsistent coefficient at v^" + std::to_string(j));
  return f;
}

LaurentPoly solve_times_one_pm_qk(const LaurentPoly& g, int k, int sign, int unknown_top,
                                  std::optional<int> product_degree) {
  if (k < 1 || (sign != 1 && sign != -1) || unknown_top < 0 || unknown_top > k)
    throw std::invalid_argument("solve_times_one_pm_qk: bad arguments");
  if (!g.is_zero() && g.min_exp() < 0)
    throw std::invalid_argument("solve_times_one_pm_qk: g must be a polynomial in q");
  if (g.is_zero() && !product_degree) return LaurentPoly();
  int deg = product_degree ? *product_degree : g.max_exp();
  if (!g.is_zero() && g.max_exp() > deg) throw NoSolution("(1±q^k)f: g exceeds product degree");
  int deg_f = deg - k;
  LaurentPoly f;
  for (int i = 0; i <= deg_f; ++i) f.set_coeff(i, g.coeff(i) - sign * f.coeff(i - k));
  for (int i = std::max(0, deg_f + 1); i <= deg - unknown_top; ++i)
    if (g.coeff(i) != sign * f.coeff(i - k))
      throw NoSolution("(1±q^k)f: inconsistent coefficient at q^" + std::to_string(i));
  return f;
}

LaurentPoly exact_divide(const LaurentPoly& g, const LaurentPoly& d) {
  if (d.is_zero()) throw std::invalid_argument("exact_divide by zero");
  LaurentPoly q;
  if (g.is_zero()) return q;
  const int top = g.max_exp() - d.max_exp();
  const int d_low = d.min_exp();
  const Int& d_lead = d.terms().begin()->second;
  LaurentPoly r = g;
  while (!r.is_zero()) {
    int e = r.min_exp() - d_low;
    const Int& c = r.terms().begin()->second;
    if (e > top || c % d_lead != 0) throw NoSolution("exact_divide: not divisible");
    Int qc = c / d_lead;
    q.set_coeff(e, qc);
    r -= d.scaled(qc).shifted(e);
  }
  return q;
}

std::string to_string(const LaurentPoly& f, const std::string& var) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    Int mag = c < 0 ? Int(-c) : c;
    if (c < 0)
      os << '-';
    else if (!first)
      os << '+';
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << var;
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

std::string to_u_string(const LaurentPoly& f) {
  LaurentPoly h;
  for (const auto& [e, c] : f.terms()) {
    if (e % 2 != 0) throw ParityError("odd power of v in " + to_string(f));
    h.set_coeff(e / 2, c);
  }
  return to_string(h, "u");
}

LaurentPoly parse_laurent(const std::string& text, const std::string& var) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw Error("empty polynomial");
  auto fail = [&] { return Error("cannot parse polynomial '" + text + "'"); };
  LaurentPoly f;
  size_t i = 0;
  auto read_int = [&](std::string& out) {
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    out = s.substr(start, i - start);
  };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      throw fail();
    }
    std::string digits;
    read_int(digits);
    Int c = digits.empty() ? Int(1) : Int(digits);
    int e = 0;
    if (s.compare(i, var.size(), var) == 0) {
      i += var.size();
      e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        int esign = 1;
        if (i < s.size() && s[i] == '-') esign = -1, ++i;
        std::string ed;
        read_int(ed);
        if (ed.empty()) throw fail();
        e = esign * std::stoi(ed);
      }
    } else if (digits.empty()) {
      throw fail();
    }
    f.add_to_coeff(e, sign * c);
  }
  return f;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& f) { return os << to_string(f); }

}  // namespace tklv
