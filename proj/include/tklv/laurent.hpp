#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace tklv {

using Int = boost::multiprecision::cpp_int;

// Integer Laurent polynomial in v, stored sparsely as exponent -> coefficient.
// Zero coefficients are never stored.
class LaurentPoly {
 public:
  using Terms = std::map<int, Int>;

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT: constants convert implicitly
  LaurentPoly(const Int& c);

  static LaurentPoly monomial(const Int& c, int e);
  static LaurentPoly v_pow(int e) { return monomial(1, e); }
  // v^e + v^-e, or 1 when e == 0
  static LaurentPoly symmetric(int e);

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  Int coeff(int k) const;
  void set_coeff(int k, const Int& c);
  void add_to_coeff(int k, const Int& c);

  // pre: nonzero
  int min_exp() const { return terms_.begin()->first; }
  int max_exp() const { return terms_.rbegin()->first; }

  LaurentPoly shifted(int k) const;  // times v^k
  LaurentPoly scaled(const Int& c) const;
  bool is_bar_invariant() const;

  LaurentPoly& operator+=(const LaurentPoly& g);
  LaurentPoly& operator-=(const LaurentPoly& g);
  LaurentPoly& operator*=(const LaurentPoly& g);
  friend LaurentPoly operator+(LaurentPoly f, const LaurentPoly& g) { return f += g; }
  friend LaurentPoly operator-(LaurentPoly f, const LaurentPoly& g) { return f -= g; }
  friend LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g);
  friend LaurentPoly operator-(const LaurentPoly& f) { return f.scaled(-1); }
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  Terms terms_;
};

LaurentPoly add(const LaurentPoly& f, const LaurentPoly& g);
LaurentPoly mul(const LaurentPoly& f, const LaurentPoly& g);
LaurentPoly bar(const LaurentPoly& f);
std::pair<LaurentPoly, LaurentPoly> split_plus_minus(const LaurentPoly& f);
Int coeff(const LaurentPoly& f, int k);
LaurentPoly pow(const LaurentPoly& f, unsigned n);

// Recover f, supported on odd exponents <= -1, from g = (v+v^-1) f where only
// the coefficients of g at exponents <= max_known_exp are trusted.
LaurentPoly solve_times_v_plus_vinv(const LaurentPoly& g, int max_known_exp);

// g and f are polynomials in q (exponent = power of q).  Recover f from
// g = (1 + sign q^k) f when the top unknown_top coefficients of g (counted
// from product_degree, default deg g) are unreliable.  0 <= unknown_top <= k.
LaurentPoly solve_times_one_pm_qk(const LaurentPoly& g, int k, int sign, int unknown_top,
                                  std::optional<int> product_degree = std::nullopt);

// exact quotient g / d; NoSolution if d does not divide g
LaurentPoly exact_divide(const LaurentPoly& g, const LaurentPoly& d);

// "v^-3+2v^-1"; var names the variable
std::string to_string(const LaurentPoly& f, const std::string& var = "v");
// substitute u = v^2; ParityError on an odd exponent
std::string to_u_string(const LaurentPoly& f);
LaurentPoly parse_laurent(const std::string& text, const std::string& var = "v");

std::ostream& operator<<(std::ostream& os, const LaurentPoly& f);

}  // namespace tklv
