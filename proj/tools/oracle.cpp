#include "oracle.hpp"

#include <tklv/errors.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>

namespace tklv::oracle {

namespace {

using enum TypeCode;

LaurentPoly v(int e) { return LaurentPoly::v_pow(e); }

// T-hat on a normalized basis vector, straight from the classical tables
ModuleVector column(const ExtBlock& b, int kappa, int g) {
  const KappaDescriptor& d = b.data(g, kappa);
  const int k = b.kappa_length(kappa);
  ModuleVector x;
  switch (d.type) {
    case t1Cp: case t2Cp: case t3Cp:
      x.add(g, v(-k));
      x.add(d.cross, 1);
      break;
    case t1Cm: case t2Cm: case t3Cm:
      x.add(g, v(k));
      x.add(d.cross, 1);
      break;
    case t1i1:
      x.add(g, v(-1));
      x.add(d.cross, v(-1));
      x.add(d.cayley[0], 1);
      break;
    case t1i2f:
      x.add(g, v(-1).scaled(2));
      for (int c : d.cayley) x.add(c, 1);
      break;
    case t1rn:
      break;
    case t1r1f:
      x.add(g, v(1) - v(-1));
      for (int c : d.cayley) x.add(c, LaurentPoly(1) - v(-2));
      break;
    case t1r2:
      x.add(g, v(1));
      x.add(d.cross, -v(-1));
      x.add(d.cayley[0], LaurentPoly(1) - v(-2));
      break;
    case t1ic:
      x.add(g, v(1) + v(-1));
      break;
    default:
      throw Error("oracle: unsupported type " + std::string(name(d.type)));
  }
  return x;
}

ModuleVector apply(const ExtBlock& b, int kappa, const ModuleVector& x) {
  ModuleVector y;
  for (const auto& [g, c] : x.entries()) y += column(b, kappa, g).scaled(c);
  return y;
}

using Rational = boost::multiprecision::cpp_rational;

// Ĉ_x for x whose arrow descents are all 1r2: the unique vector
// â_x + sum over shorter g of p_g â_g, p_g in v^-1 Z[v^-1] with degree at most
// the length gap, that is a (v^k+v^-k)-eigenvector for every descent of x.
// Plain Gaussian elimination over Q on the integer coefficients.
ModuleVector eigen_solve(const ExtBlock& b, int x) {
  struct Unknown {
    int g, e;
  };
  std::vector<Unknown> unknowns;
  for (int g = 0; g < b.size(); ++g) {
    int gap = b.length(x) - b.length(g);
    for (int e = -gap; e <= -1; ++e) unknowns.push_back({g, e});
  }
  const int n = static_cast<int>(unknowns.size());

  // residual of one basis vector under T-hat minus the eigenvalue
  auto residual = [&](int kappa, int g) {
    const int k = b.kappa_length(kappa);
    ModuleVector r = column(b, kappa, g);
    r.add(g, -(v(k) + v(-k)));
    return r;
  };
  // rows indexed by (kappa, basis element, exponent); last column is the rhs
  std::map<std::tuple<int, int, int>, std::vector<Rational>> rows;
  auto row = [&](int kappa, int g, int e) -> std::vector<Rational>& {
    auto& r = rows[{kappa, g, e}];
    if (r.empty()) r.assign(n + 1, Rational(0));
    return r;
  };
  for (int kappa : b.tau(x)) {
    const ModuleVector top = residual(kappa, x);
    for (const auto& [g, c] : top.entries())
      for (const auto& [e, a] : c.terms()) row(kappa, g, e)[n] -= Rational(a);
    for (int j = 0; j < n; ++j) {
      const ModuleVector r = residual(kappa, unknowns[j].g);
      for (const auto& [g, c] : r.entries())
        for (const auto& [e, a] : c.terms()) row(kappa, g, e + unknowns[j].e)[j] += Rational(a);
    }
  }

  std::vector<std::vector<Rational>> m;
  for (auto& [key, r] : rows) m.push_back(std::move(r));
  int rank = 0;
  std::vector<int> pivot_col;
  for (int col = 0; col < n && rank < static_cast<int>(m.size()); ++col) {
    int p = rank;
    while (p < static_cast<int>(m.size()) && m[p][col] == 0) ++p;
    if (p == static_cast<int>(m.size())) continue;
    std::swap(m[p], m[rank]);
    for (int i = 0; i < static_cast<int>(m.size()); ++i) {
      if (i == rank || m[i][col] == 0) continue;
      Rational f = m[i][col] / m[rank][col];
      for (int j = col; j <= n; ++j) m[i][j] -= f * m[rank][j];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (int i = rank; i < static_cast<int>(m.size()); ++i)
    if (m[i][n] != 0) throw Error("oracle: no eigenvector for parameter " + std::to_string(x));
  if (rank < n) throw Error("oracle: eigen conditions do not determine parameter " + std::to_string(x));

  ModuleVector out = ModuleVector::basis(x);
  for (int i = 0; i < rank; ++i) {
    Rational val = m[i][n] / m[i][pivot_col[i]];
    if (denominator(val) != 1) throw Error("oracle: non-integral coefficient for parameter " + std::to_string(x));
    const Unknown& u = unknowns[pivot_col[i]];
    out.add(u.g, v(u.e).scaled(Int(numerator(val))));
  }
  return out;
}

bool unit_leading(TypeCode t) {
  return t == t1Cm || t == t2Cm || t == t3Cm || t == t1r1f;
}

class Builder {
 public:
  explicit Builder(const ExtBlock& b) : b_(b), memo_(b.size()) {}

  const ModuleVector& get(int x) {
    if (memo_[x]) return *memo_[x];
    memo_[x] = build(x);
    return *memo_[x];
  }

 private:
  ModuleVector build(int x) {
    int kappa = -1;
    bool any_arrow = false;
    for (int k = 0; k < b_.kappa_count(); ++k) {
      if (!b_.is_descent(x, k)) continue;
      if (!b_.arrow_targets(x, k).empty()) any_arrow = true;
      if (kappa < 0 && unit_leading(b_.type(x, k))) kappa = k;
    }
    if (kappa < 0) {
      return any_arrow ? eigen_solve(b_, x) : ModuleVector::basis(x);
    }
    const int lam = b_.arrow_targets(x, kappa)[0];
    ModuleVector acc = apply(b_, kappa, get(lam));
    if (acc.get(x) != LaurentPoly(1)) throw Error("oracle: leading coefficient is not 1");
    const auto& order = b_.by_length();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      int g = *it;
      if (g == x) continue;
      LaurentPoly c = acc.get(g);
      LaurentPoly m;
      for (const auto& [e, a] : c.terms()) {
        if (e < 0) continue;
        m.add_to_coeff(e, a);
        if (e > 0) m.add_to_coeff(-e, a);
      }
      if (m.is_zero()) continue;
      acc -= get(g).scaled(m);
    }
    return acc;
  }

  const ExtBlock& b_;
  std::vector<std::optional<ModuleVector>> memo_;
};

}  // namespace

bool supported(const ExtBlock& b, std::string* why) {
  for (int g = 0; g < b.size(); ++g)
    for (int k = 0; k < b.kappa_count(); ++k) {
      TypeCode t = b.type(g, k);
      bool ok = is_complex(t) || (b.kappa_length(k) == 1 && t != t1i2s && t != t1r1s);
      if (!ok) {
        if (why) *why = "type " + std::string(name(t)) + " at parameter " + std::to_string(g);
        return false;
      }
    }
  return true;
}

std::vector<ModuleVector> canonical_basis(const ExtBlock& b) {
  std::string why;
  if (!supported(b, &why)) throw Error("oracle: unsupported block (" + why + ")");
  Builder builder(b);
  std::vector<ModuleVector> out;
  for (int x = 0; x < b.size(); ++x) out.push_back(builder.get(x));
  return out;
}

std::vector<Mismatch> compare(const PolyTable& t, const std::vector<ModuleVector>& basis) {
  std::vector<Mismatch> out;
  for (int d = 0; d < t.size(); ++d)
    for (int g = 0; g < t.size(); ++g) {
      LaurentPoly want = basis[d].get(g);
      if (!t.known(g, d)) {
        out.push_back({g, d, want, "unresolved"});
        continue;
      }
      LaurentPoly got = t.get(g, d);
      if (got != want) out.push_back({g, d, want, to_string(got)});
    }
  return out;
}

}  // namespace tklv::oracle
