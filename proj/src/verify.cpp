#include <tklv/errors.hpp>
#include <tklv/klv.hpp>

namespace tklv {

ModuleVector canonical_vector(const PolyTable& t, int lambda) {
  ModuleVector c;
  for (int g = 0; g < t.size(); ++g) c.set(g, t.get(g, lambda));
  return c;
}

std::vector<std::string> verify_eigen(const PolyTable& t) {
  const ExtBlock& b = t.block();
  std::vector<std::string> out;
  for (int l = 0; l < b.size(); ++l) {
    if (!t.column_complete(l)) continue;
    ModuleVector c = canonical_vector(t, l);
    for (int k : b.tau(l)) {
      ModuleVector lhs = apply_T_hat(b, k, c);
      ModuleVector rhs = c.scaled(LaurentPoly::symmetric(b.kappa_length(k)));
      if (lhs != rhs)
        out.push_back("eigen check fails for column " + std::to_string(l) + ", kappa " + std::to_string(k) +
                      ": difference " + to_string(lhs - rhs));
    }
  }
  return out;
}

std::vector<std::string> verify_decomp(const PolyTable& t) {
  const ExtBlock& b = t.block();
  std::vector<std::string> out;
  for (int l = 0; l < b.size(); ++l) {
    if (!t.column_complete(l)) continue;
    for (int k = 0; k < b.kappa_count(); ++k) {
      if (b.is_descent(l, k)) continue;
      ModuleVector want = apply_T_hat(b, k, canonical_vector(t, l));
      ModuleVector got;
      bool skipped = false;
      for (int g = 0; g < b.size() && !skipped; ++g) {
        if (!b.is_descent(g, k)) continue;
        if (!t.column_complete(g)) {
          skipped = true;
          break;
        }
        try {
          MCoeff m = m_coeff(t, k, g, l);
          if (!m.is_zero()) got += canonical_vector(t, g).scaled(m.to_poly());
        } catch (const MissingDependency&) {
          skipped = true;
        }
      }
      if (skipped) continue;
      if (want != got)
        out.push_back("decomposition check fails for column " + std::to_string(l) + ", kappa " +
                      std::to_string(k) + ": difference " + to_string(want - got));
    }
  }
  return out;
}

std::vector<std::string> verify_support(const PolyTable& t) {
  const ExtBlock& b = t.block();
  std::vector<std::string> out;
  for (int d = 0; d < b.size(); ++d)
    for (int g = 0; g < b.size(); ++g) {
      if (!t.known(g, d)) continue;
      const std::string tag = "P(" + std::to_string(g) + "," + std::to_string(d) + ")";
      LaurentPoly p = t.get(g, d);
      if (g == d) {
        if (p != LaurentPoly(1)) out.push_back(tag + " is not 1");
        continue;
      }
      if (p.is_zero()) continue;
      const int diff = b.length(g) - b.length(d);
      if (!b.leq(g, d)) out.push_back(tag + " is nonzero outside the block order");
      if (p.max_exp() > -1) out.push_back(tag + " = " + to_string(p) + " has a nonnegative power");
      if (p.min_exp() < diff) out.push_back(tag + " = " + to_string(p) + " goes below v^" + std::to_string(diff));
      for (const auto& [e, c] : p.terms())
        if ((e - diff) % 2 != 0) {
          out.push_back(tag + " = " + to_string(p) + " has a term of the wrong parity");
          break;
        }
      try {
        to_classical(t, g, d);
      } catch (const Error& e) {
        out.push_back(e.what());
      }
    }
  return out;
}

}  // namespace tklv
