#pragma once

#include <tklv/extblock.hpp>
#include <tklv/laurent.hpp>

#include <array>
#include <map>
#include <string>
#include <vector>

namespace tklv {

// Sparse element of the module, indexed by parameter id.  Which basis
// (a or a-hat) the entries refer to is up to the caller.
class ModuleVector {
 public:
  using Entries = std::map<int, LaurentPoly>;

  ModuleVector() = default;
  static ModuleVector basis(int gamma, const LaurentPoly& c = LaurentPoly(1));

  const Entries& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  LaurentPoly get(int gamma) const;
  void set(int gamma, const LaurentPoly& c);
  void add(int gamma, const LaurentPoly& c);

  ModuleVector scaled(const LaurentPoly& c) const;
  ModuleVector& operator+=(const ModuleVector& w);
  ModuleVector& operator-=(const ModuleVector& w);
  friend ModuleVector operator+(ModuleVector x, const ModuleVector& y) { return x += y; }
  friend ModuleVector operator-(ModuleVector x, const ModuleVector& y) { return x -= y; }
  friend bool operator==(const ModuleVector&, const ModuleVector&) = default;

 private:
  Entries entries_;
};

std::string to_string(const ModuleVector& x);

// T_{w_kappa} a_gamma in the a basis (u = v^2)
ModuleVector T_on_basis(const ExtBlock& b, int kappa, int gamma);
ModuleVector apply_T(const ExtBlock& b, int kappa, const ModuleVector& x);

// v^{-l(kappa)} (T_{w_kappa} + 1) in the normalized basis
ModuleVector T_hat_on_basis(const ExtBlock& b, int kappa, int gamma);
ModuleVector apply_T_hat(const ExtBlock& b, int kappa, const ModuleVector& x);

// the image element attached to a descent lambda; NotDescent otherwise
ModuleVector a_kappa(const ExtBlock& b, int lambda, int kappa);

// T-hat a-hat_gamma written in the {a_kappa(delta)} basis, keyed by delta
ModuleVector T_hat_in_image_basis(const ExtBlock& b, int kappa, int gamma);
// expand a combination of image elements back into the normalized basis
ModuleVector from_image_basis(const ExtBlock& b, int kappa, const ModuleVector& coeffs);

// Dense square matrix over Laurent polynomials.
class OperatorMatrix {
 public:
  explicit OperatorMatrix(int n = 0) : n_(n), cells_(static_cast<size_t>(n) * n) {}
  static OperatorMatrix identity(int n);
  static OperatorMatrix from_rows(const std::vector<std::vector<LaurentPoly>>& rows);

  int size() const { return n_; }
  LaurentPoly& at(int row, int col) { return cells_[static_cast<size_t>(row) * n_ + col]; }
  const LaurentPoly& at(int row, int col) const { return cells_[static_cast<size_t>(row) * n_ + col]; }

  friend OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b);
  friend OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b);
  friend OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b);
  OperatorMatrix scaled(const LaurentPoly& c) const;
  friend bool operator==(const OperatorMatrix&, const OperatorMatrix&) = default;

 private:
  int n_;
  std::vector<LaurentPoly> cells_;
};

// column gamma holds the image of basis vector gamma
OperatorMatrix T_matrix(const ExtBlock& b, int kappa);
OperatorMatrix T_hat_matrix(const ExtBlock& b, int kappa);

struct RelationReport {
  bool pass = true;
  int first_failure = -1;  // failing column, -1 if none
  std::string detail;
};

// (T + 1)(T - v^{2k}) = 0 for a matrix in the a basis
RelationReport check_quadratic(const OperatorMatrix& t, int kappa_length);
RelationReport check_quadratic(const ExtBlock& b, int kappa);
// alternating products of length m agree; m == 0 (infinite order) passes vacuously
RelationReport check_braid(const OperatorMatrix& s, const OperatorMatrix& t, int m);
RelationReport check_braid(const ExtBlock& b, int kappa1, int kappa2);

// Polynomial in X with coefficients polynomials in one variable; index = power of X.
using PolyX = std::vector<LaurentPoly>;

// det(X I - M)
PolyX charpoly(const OperatorMatrix& m);

struct LinearFactor {
  LaurentPoly root;
  int multiplicity = 0;
};

// Divide out (X - r) for each candidate r as often as possible.  The part
// that does not split is left in rest.
std::vector<LinearFactor> peel_linear_factors(PolyX p, const std::vector<LaurentPoly>& candidates,
                                              PolyX* rest = nullptr);

// One relabelling of an ordered 2i12/2r21 quartet.  Slots are 0 (first) or
// 1 (second) of the old pairs; sign -1 picks the other extension.
struct FlipRow {
  std::array<int, 2> source;
  std::array<int, 2> source_sign;
  std::array<int, 2> target;
  std::array<int, 2> target_sign;
};

const std::array<FlipRow, 8>& flip_table();

// Relabel ordered pair number pair_index according to row.  signs receives the
// basis sign of every parameter (+1 except flipped extensions).
RawBlock relabel_pair(const RawBlock& raw, int pair_index, const FlipRow& row, std::vector<int>* signs);

// Empty when the relabelled block reproduces the old operator up to the basis
// signs and the sign matrix comes out right.
std::vector<std::string> check_flip_row(const ExtBlock& b, int pair_index, const FlipRow& row);
// all rows, all ordered pairs
std::vector<std::string> flip_table_warnings(const ExtBlock& b);

}  // namespace tklv
