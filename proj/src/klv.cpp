#include <tklv/errors.hpp>
#include <tklv/klv.hpp>

#include <algorithm>

namespace tklv {

// ---- MCoeff / PolyTable ----

LaurentPoly MCoeff::to_poly() const {
  LaurentPoly p(m0);
  p += LaurentPoly::symmetric(1).scaled(m1);
  p += LaurentPoly::symmetric(2).scaled(m2);
  return p;
}

PolyTable::PolyTable(const ExtBlock& b)
    : block_(&b),
      n_(b.size()),
      cells_(static_cast<size_t>(n_) * n_),
      status_(static_cast<size_t>(n_) * n_, EntryStatus::Unknown),
      notes_(static_cast<size_t>(n_) * n_) {
  for (int g = 0; g < n_; ++g) {
    cells_[idx(g, g)] = LaurentPoly(1);
    status_[idx(g, g)] = EntryStatus::Exact;
  }
}

LaurentPoly PolyTable::get(int gamma, int delta) const {
  if (gamma == delta) return LaurentPoly(1);
  if (!block_->leq(gamma, delta)) return LaurentPoly();
  const auto& c = cells_[idx(gamma, delta)];
  if (!c || status_[idx(gamma, delta)] != EntryStatus::Exact) throw MissingDependency(gamma, delta);
  return *c;
}

bool PolyTable::known(int gamma, int delta) const {
  return gamma == delta || !block_->leq(gamma, delta) || status_[idx(gamma, delta)] == EntryStatus::Exact;
}

EntryStatus PolyTable::status(int gamma, int delta) const {
  if (known(gamma, delta)) return EntryStatus::Exact;
  return status_[idx(gamma, delta)];
}

void PolyTable::set(int gamma, int delta, const LaurentPoly& p) {
  if (gamma == delta || !block_->leq(gamma, delta)) {
    if (p != get(gamma, delta))
      throw RecursionError("value for P(" + std::to_string(gamma) + "," + std::to_string(delta) +
                           ") contradicts the block order: " + to_string(p));
    return;
  }
  cells_[idx(gamma, delta)] = p;
  status_[idx(gamma, delta)] = EntryStatus::Exact;
  notes_[idx(gamma, delta)].clear();
}

void PolyTable::mark_unresolved(int gamma, int delta, const std::string& why) {
  status_[idx(gamma, delta)] = EntryStatus::Unresolved;
  notes_[idx(gamma, delta)] = why;
}

bool PolyTable::column_complete(int delta) const {
  for (int g = 0; g < n_; ++g)
    if (!known(g, delta)) return false;
  return true;
}

int PolyTable::unresolved_count() const {
  int c = 0;
  for (int g = 0; g < n_; ++g)
    for (int d = 0; d < n_; ++d) c += !known(g, d);
  return c;
}

Int mu(const PolyTable& t, int k, int gamma, int lambda) {
  if (gamma == lambda) return 0;
  const ExtBlock& b = t.block();
  if (!b.leq(gamma, lambda)) return 0;
  if ((b.length(lambda) - b.length(gamma) - k) % 2 != 0) return 0;
  return t.get(gamma, lambda).coeff(-k);
}

// ---- lazy products: a zero factor settles the product even if another is missing ----

namespace {

bool is_zero_value(const Int& x) { return x == 0; }
bool is_zero_value(const LaurentPoly& x) { return x.is_zero(); }

template <class R, class FA, class FB>
R lazy_mul(FA&& fa, FB&& fb) {
  std::optional<R> a;
  std::optional<MissingDependency> miss;
  try {
    a = fa();
  } catch (const MissingDependency& e) {
    miss = e;
  }
  if (a && is_zero_value(*a)) return R();
  R b = fb();
  if (is_zero_value(b)) return R();
  if (miss) throw *miss;
  return R(*a * b);
}

// descents for kappa strictly between gamma and lambda in the order
std::vector<int> between(const ExtBlock& b, int kappa, int gamma, int lambda) {
  std::vector<int> out;
  for (int d : b.by_length()) {
    if (b.length(d) <= b.length(gamma)) continue;
    if (b.length(d) >= b.length(lambda)) break;
    if (b.is_descent(d, kappa) && b.leq(gamma, d) && b.leq(d, lambda)) out.push_back(d);
  }
  return out;
}

}  // namespace

// ---- m coefficients ----

MCoeff m_coeff(const PolyTable& t, int kappa, int gamma, int lambda, Placeholder hole) {
  using enum TypeCode;
  const ExtBlock& b = t.block();
  if (!b.is_descent(gamma, kappa))
    throw NotDescent("m coefficient needs kappa in tau(" + std::to_string(gamma) + ")");
  if (b.is_descent(lambda, kappa))
    throw NotApplicable("m coefficient needs kappa outside tau(" + std::to_string(lambda) + ")");
  const bool use_cache = hole.row < 0;
  auto key = std::make_tuple(kappa, gamma, lambda);
  if (use_cache) {
    auto it = t.m_cache().find(key);
    if (it != t.m_cache().end()) return it->second;
  }

  MCoeff m;
  if (b.is_arrow(gamma, lambda, kappa)) {
    int e = b.epsilon(gamma, lambda, kappa);
    (b.defect(gamma, kappa) == 1 ? m.m1 : m.m0) = e;
    if (use_cache) t.m_cache().emplace(key, m);
    return m;
  }

  auto mu_h = [&](int k, int g, int l) -> Int {
    if (g == hole.row && l == hole.col) return 0;
    return mu(t, k, g, l);
  };
  auto product_sum = [&](int k1, int k2) {
    Int s = 0;
    for (int d : between(b, kappa, gamma, lambda))
      s += lazy_mul<Int>([&] { return mu_h(k1, gamma, d); }, [&] { return mu_h(k2, d, lambda); });
    return s;
  };
  const int k = b.kappa_length(kappa);
  const TypeCode tl = b.type(lambda, kappa), tg = b.type(gamma, kappa);
  auto boundary = [&](bool lambda_side, bool gamma_side) {
    Int s = 0;
    if (lambda_side) s -= mu_h(1, gamma, b.cayley(lambda, kappa)[0]);
    if (gamma_side) s += mu_h(1, b.cayley(gamma, kappa)[0], lambda);
    return s;
  };

  if (k == 1) {
    m.m0 = mu_h(1, gamma, lambda);
  } else if (k == 2) {
    m.m1 = mu_h(1, gamma, lambda);
    m.m0 = mu_h(2, gamma, lambda) - product_sum(1, 1) + boundary(tl == t2Ci, tg == t2Cr);
  } else {
    m.m2 = mu_h(1, gamma, lambda);
    m.m1 = mu_h(2, gamma, lambda) - product_sum(1, 1);
    Int triple = 0;
    for (int d : between(b, kappa, gamma, lambda))
      for (int f : between(b, kappa, d, lambda))
        triple += lazy_mul<Int>([&] { return mu_h(1, gamma, d); },
                           [&] { return lazy_mul<Int>([&] { return mu_h(1, d, f); },
                                                 [&] { return mu_h(1, f, lambda); }); });
    m.m0 = mu_h(3, gamma, lambda) + triple - product_sum(1, 2) - product_sum(2, 1) +
           boundary(tl == t3Ci || tl == t3i, tg == t3Cr || tg == t3r);
  }
  if (use_cache) t.m_cache().emplace(key, m);
  return m;
}

bool kappa_less(const PolyTable& t, int kappa, int gamma, int lambda) {
  const ExtBlock& b = t.block();
  if (!b.is_descent(gamma, kappa) || b.is_descent(lambda, kappa))
    throw NotApplicable("kappa_less needs kappa in tau(gamma) and not in tau(lambda)");
  if (gamma != lambda && b.leq(gamma, lambda) && b.length(gamma) < b.length(lambda)) return true;
  if (b.defect(gamma, kappa) == 1 && mu(t, 1, b.cayley(gamma, kappa)[0], lambda) != 0) return true;
  if (b.defect(lambda, kappa) == 1 && mu(t, 1, gamma, b.cayley(lambda, kappa)[0]) != 0) return true;
  return false;
}

// ---- coefficients of T-hat C-hat ----

LaurentPoly T_hat_C_entry(const PolyTable& t, int kappa, int gamma, int lambda) {
  const ExtBlock& b = t.block();
  LaurentPoly s;
  for (int e : b.neighbours(gamma, kappa)) {
    LaurentPoly c = T_hat_on_basis(b, kappa, e).get(gamma);
    if (c.is_zero()) continue;
    s += t.get(e, lambda) * c;
  }
  return s;
}

LaurentPoly image_coefficient(const PolyTable& t, int kappa, int gamma, int lambda) {
  const ExtBlock& b = t.block();
  LaurentPoly s;
  for (int e : b.neighbours(gamma, kappa)) {
    LaurentPoly c = T_hat_in_image_basis(b, kappa, e).get(gamma);
    if (c.is_zero()) continue;
    s += t.get(e, lambda) * c;
  }
  return s;
}

namespace {

// sum of P(gamma, delta) m(delta, lambda) over kappa-descents delta outside skip
LaurentPoly descent_sum(const PolyTable& t, int kappa, int gamma, int lambda,
                        const std::vector<int>& skip, Placeholder hole) {
  const ExtBlock& b = t.block();
  const int reach = b.length(lambda) + b.kappa_length(kappa) - 2;
  LaurentPoly s;
  for (int d : b.by_length()) {
    if (!b.is_descent(d, kappa) || !b.leq(gamma, d)) continue;
    if (std::find(skip.begin(), skip.end(), d) != skip.end()) continue;
    // nothing that long can be kappa-less than lambda unless it is an arrow source
    if (b.length(d) > reach && !b.is_arrow(d, lambda, kappa)) continue;
    s += lazy_mul<LaurentPoly>([&] { return t.get(gamma, d); },
                  [&] { return m_coeff(t, kappa, d, lambda, hole).to_poly(); });
  }
  return s;
}

[[noreturn]] void inconsistent(const std::string& route, int gamma, int col, const std::string& why) {
  throw RecursionError(route + " for P(" + std::to_string(gamma) + "," + std::to_string(col) + "): " + why);
}

}  // namespace

LaurentPoly U_term(const PolyTable& t, int kappa, int gamma, int lambda) {
  const ExtBlock& b = t.block();
  if (b.is_descent(lambda, kappa)) throw NotApplicable("U term needs kappa outside tau(lambda)");
  return descent_sum(t, kappa, gamma, lambda, b.arrow_sources(lambda, kappa), {});
}

// ---- recursions ----

LaurentPoly easy_recursion(const PolyTable& t, int kappa, int gamma, int col) {
  const ExtBlock& b = t.block();
  if (b.is_descent(gamma, kappa) || !b.is_descent(col, kappa))
    throw NotApplicable("easy recursion needs kappa ascent for the row, descent for the column");
  LaurentPoly s;
  for (int src : b.arrow_sources(gamma, kappa))
    s += t.get(src, col).shifted(b.length(gamma) - b.length(src)).scaled(b.epsilon(src, gamma, kappa));
  return s;
}

RouteResult direct_recursion(const PolyTable& t, int kappa, int gamma, int col) {
  using enum TypeCode;
  const ExtBlock& b = t.block();
  if (!b.is_descent(gamma, kappa) || !b.is_descent(col, kappa))
    throw NotApplicable("direct recursion needs kappa in both tau-invariants");
  const TypeCode tc = b.type(col, kappa);
  if (is_compact_descent(tc)) throw NotApplicable("no kappa-arrow leaves the column");

  const std::vector<int>& targets = b.arrow_targets(col, kappa);
  auto residual = [&](int lam, Placeholder hole) {
    LaurentPoly lhs = T_hat_C_entry(t, kappa, gamma, lam);
    return lhs - descent_sum(t, kappa, gamma, lam, b.arrow_sources(lam, kappa), hole);
  };

  RouteResult r;
  if (tc == t2r21) {
    // both members of the ordered pair against both targets
    const std::vector<int>& srcs = b.arrow_sources(targets[0], kappa);
    if (srcs.size() != 2) inconsistent("direct recursion", gamma, col, "2r21 target without two sources");
    const int other = srcs[0] == col ? srcs[1] : srcs[0];
    Int e[2][2];
    LaurentPoly rhs[2];
    for (int j = 0; j < 2; ++j) {
      rhs[j] = residual(targets[j], {});
      e[j][0] = b.epsilon(col, targets[j], kappa);
      e[j][1] = b.epsilon(other, targets[j], kappa);
    }
    Int det = e[0][0] * e[1][1] - e[0][1] * e[1][0];
    LaurentPoly num = rhs[0].scaled(e[1][1]) - rhs[1].scaled(e[0][1]);
    try {
      r.value = exact_divide(num, LaurentPoly(det));
    } catch (const NoSolution&) {
      inconsistent("direct recursion", gamma, col, "2r21 system not divisible by its determinant");
    }
    return r;
  }

  const int lam = targets[0];
  const std::vector<int>& srcs = b.arrow_sources(lam, kappa);
  const int eps = b.epsilon(col, lam, kappa);
  if (srcs.size() == 2) {
    // 1r2 / 2r22: the target also receives the cross partner
    const int other = srcs[0] == col ? srcs[1] : srcs[0];
    LaurentPoly sum = residual(lam, {});
    if (t.known(gamma, other)) {
      r.value = sum - t.get(gamma, other);
    } else {
      r.kind = RouteResult::Kind::PairSum;
      r.value = sum;
      r.other_row = gamma;
      r.other_col = other;
    }
    return r;
  }

  if (b.defect(col, kappa) == 0) {
    r.value = residual(lam, {}).scaled(eps);
    return r;
  }

  // defect 1: (v + v^-1) P = R, up to the unknown mu_{-1}(gamma, col)
  const LaurentPoly vv = LaurentPoly::symmetric(1);
  const bool odd = (b.length(col) - b.length(gamma)) % 2 != 0;
  try {
    if (odd) {
      LaurentPoly rph = residual(lam, {gamma, col});
      if (rph.coeff(0) != 0) inconsistent("direct recursion", gamma, col, "residual has a constant term");
      r.value = solve_times_v_plus_vinv(rph, -1);
      if (vv * r.value - LaurentPoly(r.value.coeff(-1)) != rph)
        inconsistent("direct recursion", gamma, col, "residual is not (v+v^-1) times a solution");
    } else {
      LaurentPoly res = residual(lam, {});
      r.value = solve_times_v_plus_vinv(res.shifted(1), 1 << 20).shifted(-1);
      if (vv * r.value != res)
        inconsistent("direct recursion", gamma, col, "residual is not divisible by v+v^-1");
    }
  } catch (const NoSolution& e) {
    inconsistent("direct recursion", gamma, col, e.what());
  }
  return r;
}

RouteResult new_recursion(const PolyTable& t, int kappa, int gamma, int col) {
  const ExtBlock& b = t.block();
  if (!is_nonparity_ascent(b.type(col, kappa)))
    throw NotApplicable("new recursion needs a 1i2s/1rn/2rn/3rn column");
  const TypeCode tg = b.type(gamma, kappa);
  const bool compact = is_compact_descent(tg);
  if (b.is_descent(gamma, kappa) && !compact)
    throw NotApplicable("new recursion does not cover this descent type");
  const LaurentPoly c = T_hat_on_basis(b, kappa, gamma).get(gamma);
  if (c.is_zero()) throw NotApplicable("row type has no diagonal term");

  RouteResult r;
  auto blocked = [&](const MissingDependency& e, const char* what) {
    r.kind = RouteResult::Kind::Unresolved;
    r.diagnostic = std::string("new recursion blocked by ") + what + " term P(" + std::to_string(e.row) +
                   "," + std::to_string(e.col) + ")";
    return r;
  };

  if (!compact) {
    LaurentPoly u;
    try {
      u = descent_sum(t, kappa, gamma, col, {}, {});
    } catch (const MissingDependency& e) {
      return blocked(e, "U");
    }
    LaurentPoly known_part;
    int other = -1;
    for (int e : b.neighbours(gamma, kappa)) {
      if (e == gamma) continue;
      LaurentPoly ce = T_hat_on_basis(b, kappa, e).get(gamma);
      if (ce.is_zero()) continue;
      if (t.known(e, col)) {
        known_part += t.get(e, col) * ce;
      } else if (e == b.cross(gamma, kappa) && ce == c) {
        other = e;
      } else {
        return blocked(MissingDependency(e, col), "neighbour");
      }
    }
    try {
      r.value = exact_divide(u - known_part, c);
    } catch (const NoSolution&) {
      inconsistent("new recursion", gamma, col, "right side not divisible by the diagonal coefficient");
    }
    if (other >= 0) {
      r.kind = RouteResult::Kind::PairSum;
      r.other_row = other;
      r.other_col = col;
    }
    return r;
  }

  // compact descent: (v^k + v^-k) P = U' + m with m an unknown self-dual window
  LaurentPoly u;
  try {
    u = descent_sum(t, kappa, gamma, col, {gamma}, {});
  } catch (const MissingDependency& e) {
    return blocked(e, "U");
  }
  const int k = b.kappa_length(kappa);
  const int a = b.length(gamma) - b.length(col);
  const int top = (a % 2 != 0) ? -1 : -2;
  const int deg_f = (top - a) / 2;
  const int unknown_top = (a % 2 != 0) ? k : k - 1;
  LaurentPoly g;
  for (const auto& [e, cf] : u.terms()) {
    int s = e + k - a;
    if (s < 0 || s % 2 != 0) inconsistent("new recursion", gamma, col, "U has a term outside the support");
    g.set_coeff(s / 2, cf);
  }
  LaurentPoly f;
  try {
    f = solve_times_one_pm_qk(g, k, 1, unknown_top, deg_f + k);
  } catch (const NoSolution& e) {
    inconsistent("new recursion", gamma, col, e.what());
  }
  for (const auto& [i, cf] : f.terms()) r.value.set_coeff(a + 2 * i, cf);
  LaurentPoly window = (LaurentPoly::symmetric(k) * r.value) - u;
  if (!window.is_bar_invariant() || (!window.is_zero() && window.max_exp() > k - 1))
    inconsistent("new recursion", gamma, col, "implied m coefficient is not a self-dual window");
  return r;
}

}  // namespace tklv
