#include <tklv/errors.hpp>
#include <tklv/hecke.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tklv {

// ---- ModuleVector ----

ModuleVector ModuleVector::basis(int gamma, const LaurentPoly& c) {
  ModuleVector x;
  x.set(gamma, c);
  return x;
}

LaurentPoly ModuleVector::get(int gamma) const {
  auto it = entries_.find(gamma);
  return it == entries_.end() ? LaurentPoly() : it->second;
}

void ModuleVector::set(int gamma, const LaurentPoly& c) {
  if (c.is_zero())
    entries_.erase(gamma);
  else
    entries_[gamma] = c;
}

void ModuleVector::add(int gamma, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = entries_.try_emplace(gamma, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

ModuleVector ModuleVector::scaled(const LaurentPoly& c) const {
  ModuleVector y;
  for (const auto& [g, p] : entries_) y.set(g, p * c);
  return y;
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& w) {
  for (const auto& [g, p] : w.entries_) add(g, p);
  return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& w) {
  for (const auto& [g, p] : w.entries_) add(g, -p);
  return *this;
}

std::string to_string(const ModuleVector& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, p] : x.entries()) {
    if (!first) os << " + ";
    first = false;
    os << '(' << to_string(p) << ")*[" << g << ']';
  }
  return os.str();
}

// ---- T action ----

namespace {

LaurentPoly u_pow(int n) { return LaurentPoly::v_pow(2 * n); }

}  // namespace

ModuleVector T_on_basis(const ExtBlock& b, int kappa, int gamma) {
  using enum TypeCode;
  const KappaDescriptor& d = b.data(gamma, kappa);
  const int k = b.kappa_length(kappa);
  const LaurentPoly one(1), uk = u_pow(k), u = u_pow(1);
  ModuleVector x;
  auto both_cayleys = [&](const LaurentPoly& c) {
    for (int t : d.cayley) x.add(t, c);
  };
  switch (d.type) {
    case t1Cp:
    case t2Cp:
    case t3Cp:
      x.add(d.cross, one);
      break;
    case t1Cm:
    case t2Cm:
    case t3Cm:
      x.add(gamma, uk - one);
      x.add(d.cross, uk);
      break;
    case t1i1:
    case t2i11:
      x.add(d.cross, one);
      both_cayleys(one);
      break;
    case t1i2f:
    case t2i22:
      x.add(gamma, one);
      both_cayleys(one);
      break;
    case t1i2s:
    case t1rn:
    case t2rn:
    case t3rn:
      x.add(gamma, LaurentPoly(-1));
      break;
    case t1ic:
    case t1r1s:
    case t2ic:
    case t3ic:
      x.add(gamma, uk);
      break;
    case t1r1f:
    case t2r11:
      x.add(gamma, uk - LaurentPoly(2));
      both_cayleys(uk - one);
      break;
    case t1r2:
    case t2r22:
      x.add(gamma, uk - one);
      x.add(d.cross, LaurentPoly(-1));
      both_cayleys(uk - one);
      break;
    case t2Ci:
    case t3Ci:
    case t3i:
      x.add(gamma, u);
      both_cayleys(u + one);
      break;
    case t2Cr:
    case t3Cr:
    case t3r:
      x.add(gamma, uk - u - one);
      both_cayleys(uk - u);
      break;
    case t2i12:
      x.add(gamma, one);
      for (int t : d.cayley) x.add(t, LaurentPoly(b.epsilon(t, gamma, kappa)));
      break;
    case t2r21:
      x.add(gamma, uk - LaurentPoly(2));
      for (int t : d.cayley) x.add(t, (uk - one).scaled(b.epsilon(gamma, t, kappa)));
      break;
  }
  return x;
}

ModuleVector apply_T(const ExtBlock& b, int kappa, const ModuleVector& x) {
  ModuleVector y;
  for (const auto& [g, c] : x.entries()) y += T_on_basis(b, kappa, g).scaled(c);
  return y;
}

ModuleVector T_hat_on_basis(const ExtBlock& b, int kappa, int gamma) {
  ModuleVector tx = T_on_basis(b, kappa, gamma);
  tx.add(gamma, LaurentPoly(1));
  const int shift = -b.kappa_length(kappa) - b.length(gamma);
  ModuleVector y;
  for (const auto& [d, c] : tx.entries()) y.set(d, c.shifted(shift + b.length(d)));
  return y;
}

ModuleVector apply_T_hat(const ExtBlock& b, int kappa, const ModuleVector& x) {
  ModuleVector y;
  for (const auto& [g, c] : x.entries()) y += T_hat_on_basis(b, kappa, g).scaled(c);
  return y;
}

ModuleVector a_kappa(const ExtBlock& b, int lambda, int kappa) {
  ModuleVector x = ModuleVector::basis(lambda);
  for (int t : b.arrow_targets(lambda, kappa))
    x.add(t, LaurentPoly::monomial(b.epsilon(lambda, t, kappa), b.length(t) - b.length(lambda)));
  return x;
}

ModuleVector T_hat_in_image_basis(const ExtBlock& b, int kappa, int gamma) {
  const int k = b.kappa_length(kappa);
  ModuleVector out;
  if (b.is_descent(gamma, kappa)) {
    const int d = b.defect(gamma, kappa);
    out.add(gamma, LaurentPoly::v_pow(k));
    int z = b.zeta(gamma, kappa);
    if (z != 0) out.add(b.cross(gamma, kappa), LaurentPoly::monomial(z, -k + 2 * d));
  } else {
    for (int src : b.arrow_sources(gamma, kappa)) {
      const int d = b.defect(src, kappa);
      LaurentPoly c = pow(LaurentPoly::symmetric(1), static_cast<unsigned>(d));
      out.add(src, c.scaled(b.epsilon(src, gamma, kappa)));
    }
  }
  return out;
}

ModuleVector from_image_basis(const ExtBlock& b, int kappa, const ModuleVector& coeffs) {
  ModuleVector x;
  for (const auto& [g, c] : coeffs.entries()) x += a_kappa(b, g, kappa).scaled(c);
  return x;
}

// ---- matrices ----

OperatorMatrix OperatorMatrix::identity(int n) {
  OperatorMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = LaurentPoly(1);
  return m;
}

OperatorMatrix OperatorMatrix::from_rows(const std::vector<std::vector<LaurentPoly>>& rows) {
  const int n = static_cast<int>(rows.size());
  OperatorMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) throw Error("matrix is not square");
    for (int j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
  const int n = a.size();
  OperatorMatrix c(n);
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < n; ++l) {
      const LaurentPoly& x = a.at(i, l);
      if (x.is_zero()) continue;
      for (int j = 0; j < n; ++j)
        if (!b.at(l, j).is_zero()) c.at(i, j) += x * b.at(l, j);
    }
  return c;
}

OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b) {
  OperatorMatrix c = a;
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) c.at(i, j) += b.at(i, j);
  return c;
}

OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b) {
  OperatorMatrix c = a;
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) c.at(i, j) -= b.at(i, j);
  return c;
}

OperatorMatrix OperatorMatrix::scaled(const LaurentPoly& c) const {
  OperatorMatrix m = *this;
  for (auto& cell : m.cells_) cell *= c;
  return m;
}

namespace {

OperatorMatrix matrix_of(const ExtBlock& b, int kappa, ModuleVector (*col)(const ExtBlock&, int, int)) {
  OperatorMatrix m(b.size());
  for (int g = 0; g < b.size(); ++g) {
    ModuleVector image = col(b, kappa, g);
    for (const auto& [d, c] : image.entries()) m.at(d, g) = c;
  }
  return m;
}

int first_bad_column(const OperatorMatrix& m) {
  for (int j = 0; j < m.size(); ++j)
    for (int i = 0; i < m.size(); ++i)
      if (!m.at(i, j).is_zero()) return j;
  return -1;
}

}  // namespace

OperatorMatrix T_matrix(const ExtBlock& b, int kappa) { return matrix_of(b, kappa, &T_on_basis); }
OperatorMatrix T_hat_matrix(const ExtBlock& b, int kappa) { return matrix_of(b, kappa, &T_hat_on_basis); }

RelationReport check_quadratic(const OperatorMatrix& t, int kappa_length) {
  const int n = t.size();
  OperatorMatrix id = OperatorMatrix::identity(n);
  OperatorMatrix prod = (t + id) * (t - id.scaled(u_pow(kappa_length)));
  RelationReport r;
  r.first_failure = first_bad_column(prod);
  r.pass = r.first_failure < 0;
  if (!r.pass) r.detail = "quadratic relation fails on basis vector " + std::to_string(r.first_failure);
  return r;
}

RelationReport check_quadratic(const ExtBlock& b, int kappa) {
  return check_quadratic(T_matrix(b, kappa), b.kappa_length(kappa));
}

RelationReport check_braid(const OperatorMatrix& s, const OperatorMatrix& t, int m) {
  RelationReport r;
  if (m == 0) {
    r.detail = "infinite order, nothing to check";
    return r;
  }
  OperatorMatrix st = OperatorMatrix::identity(s.size()), ts = st;
  for (int i = 0; i < m; ++i) {
    st = st * (i % 2 == 0 ? s : t);
    ts = ts * (i % 2 == 0 ? t : s);
  }
  r.first_failure = first_bad_column(st - ts);
  r.pass = r.first_failure < 0;
  if (!r.pass) r.detail = "braid relation fails on basis vector " + std::to_string(r.first_failure);
  return r;
}

RelationReport check_braid(const ExtBlock& b, int kappa1, int kappa2) {
  return check_braid(T_matrix(b, kappa1), T_matrix(b, kappa2), b.coxeter(kappa1, kappa2));
}

// ---- characteristic polynomial ----

namespace {

PolyX trim(PolyX p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

PolyX mul_x(const PolyX& a, const PolyX& b) {
  if (a.empty() || b.empty()) return {};
  PolyX c(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return trim(c);
}

}  // namespace

PolyX charpoly(const OperatorMatrix& m) {
  const int n = m.size();
  // entries of X I - M
  std::vector<std::vector<PolyX>> e(n, std::vector<PolyX>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      e[i][j] = trim({-m.at(i, j)});
      if (i == j) e[i][j] = {-m.at(i, j), LaurentPoly(1)};
    }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  PolyX total;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    PolyX term{LaurentPoly(inversions % 2 ? -1 : 1)};
    for (int i = 0; i < n && !term.empty(); ++i) term = mul_x(term, e[i][perm[i]]);
    if (term.size() > total.size()) total.resize(term.size());
    for (size_t i = 0; i < term.size(); ++i) total[i] += term[i];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return trim(total);
}

std::vector<LinearFactor> peel_linear_factors(PolyX p, const std::vector<LaurentPoly>& candidates,
                                              PolyX* rest) {
  p = trim(p);
  std::vector<LinearFactor> out;
  for (const LaurentPoly& r : candidates) {
    LinearFactor f{r, 0};
    while (p.size() >= 2) {
      // synthetic division by (X - r)
      const size_t deg = p.size() - 1;
      PolyX q(deg);
      q[deg - 1] = p[deg];
      for (size_t i = deg - 1; i >= 1; --i) q[i - 1] = p[i] + r * q[i];
      LaurentPoly remainder = p[0] + r * q[0];
      if (!remainder.is_zero()) break;
      p = q;
      ++f.multiplicity;
    }
    if (f.multiplicity > 0) out.push_back(f);
  }
  if (rest) *rest = p;
  return out;
}

// ---- ordered pair relabelling ----

const std::array<FlipRow, 8>& flip_table() {
  static const std::array<FlipRow, 8> rows{{
      {{0, 1}, {1, 1}, {0, 1}, {1, 1}},
      {{0, 1}, {1, -1}, {1, 0}, {1, 1}},
      {{0, 1}, {-1, 1}, {1, 0}, {-1, -1}},
      {{0, 1}, {-1, -1}, {0, 1}, {-1, -1}},
      {{1, 0}, {1, 1}, {0, 1}, {1, -1}},
      {{1, 0}, {1, -1}, {1, 0}, {-1, 1}},
      {{1, 0}, {-1, 1}, {1, 0}, {1, -1}},
      {{1, 0}, {-1, -1}, {0, 1}, {-1, 1}},
  }};
  return rows;
}

RawBlock relabel_pair(const RawBlock& raw, int pair_index, const FlipRow& row, std::vector<int>* signs) {
  RawBlock out = raw;
  OrderedPair& op = out.ordered_pairs.at(pair_index);
  const OrderedPair old = raw.ordered_pairs[pair_index];
  std::vector<int> s(raw.parameters.size(), 1);
  for (int i = 0; i < 2; ++i) {
    op.source_pair[i] = old.source_pair[row.source[i]];
    op.target_pair[i] = old.target_pair[row.target[i]];
    s[op.source_pair[i]] = row.source_sign[i];
    s[op.target_pair[i]] = row.target_sign[i];
    out.parameters[op.source_pair[i]].kappa_data[op.kappa].pair_slot = i + 1;
    out.parameters[op.target_pair[i]].kappa_data[op.kappa].pair_slot = i + 1;
  }
  if (signs) *signs = s;
  return out;
}

std::vector<std::string> check_flip_row(const ExtBlock& b, int pair_index, const FlipRow& row) {
  std::vector<std::string> problems;
  std::vector<int> s;
  ExtBlock nb = validate(relabel_pair(b.raw(), pair_index, row, &s));
  const OrderedPair& op = nb.raw().ordered_pairs[pair_index];
  const int kappa = op.kappa;
  const std::string tag = "ordered pair " + std::to_string(pair_index) + ": ";
  OperatorMatrix old_t = T_matrix(b, kappa), new_t = T_matrix(nb, kappa);
  for (int p = 0; p < b.size(); ++p)
    for (int q = 0; q < b.size(); ++q)
      if (new_t.at(p, q) != old_t.at(p, q).scaled(s[p] * s[q]))
        problems.push_back(tag + "operator entry (" + std::to_string(p) + "," + std::to_string(q) +
                           ") does not transform by the extension signs");
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      int want = (i == 1 && j == 1) ? -1 : 1;
      if (nb.epsilon(op.target_pair[i], op.source_pair[j], kappa) != want)
        problems.push_back(tag + "sign matrix entry (" + std::to_string(i + 1) + "," +
                           std::to_string(j + 1) + ") is wrong after relabelling");
    }
  return problems;
}

std::vector<std::string> flip_table_warnings(const ExtBlock& b) {
  std::vector<std::string> all;
  for (int e = 0; e < static_cast<int>(b.raw().ordered_pairs.size()); ++e)
    for (const FlipRow& row : flip_table()) {
      auto w = check_flip_row(b, e, row);
      all.insert(all.end(), w.begin(), w.end());
    }
  return all;
}

}  // namespace tklv
