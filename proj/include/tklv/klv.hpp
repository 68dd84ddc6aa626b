#pragma once

#include <tklv/extblock.hpp>
#include <tklv/hecke.hpp>
#include <tklv/laurent.hpp>

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace tklv {

enum class EntryStatus { Unknown, Exact, Unresolved };

// m0 + m1 (v + v^-1) + m2 (v^2 + v^-2)
struct MCoeff {
  Int m0 = 0, m1 = 0, m2 = 0;
  LaurentPoly to_poly() const;
  bool is_zero() const { return m0 == 0 && m1 == 0 && m2 == 0; }
  friend bool operator==(const MCoeff&, const MCoeff&) = default;
};

// P(gamma, delta) for one block.  Lookups follow the block order: the
// diagonal is 1, pairs outside the order are 0, everything else must have
// been stored or MissingDependency is thrown.
class PolyTable {
 public:
  explicit PolyTable(const ExtBlock& b);

  const ExtBlock& block() const { return *block_; }
  int size() const { return n_; }

  LaurentPoly get(int gamma, int delta) const;
  bool known(int gamma, int delta) const;
  EntryStatus status(int gamma, int delta) const;
  const std::string& note(int gamma, int delta) const { return notes_[idx(gamma, delta)]; }

  void set(int gamma, int delta, const LaurentPoly& p);
  void mark_unresolved(int gamma, int delta, const std::string& why);

  // true when every entry of column delta is known
  bool column_complete(int delta) const;
  int unresolved_count() const;

  // memo for m coefficients, keyed by (kappa, gamma, lambda)
  std::map<std::tuple<int, int, int>, MCoeff>& m_cache() const { return m_cache_; }

 private:
  size_t idx(int g, int d) const { return static_cast<size_t>(g) * n_ + d; }
  const ExtBlock* block_;
  int n_;
  std::vector<std::optional<LaurentPoly>> cells_;
  std::vector<EntryStatus> status_;
  std::vector<std::string> notes_;
  mutable std::map<std::tuple<int, int, int>, MCoeff> m_cache_;
};

// coefficient of v^-k in P(gamma, lambda)
Int mu(const PolyTable& t, int k, int gamma, int lambda);

// Entry whose mu values are read as 0 while it is being solved for.
struct Placeholder {
  int row = -1;
  int col = -1;
};

// coefficient of C-hat_gamma in T-hat C-hat_lambda; kappa descent for gamma,
// ascent for lambda.  MissingDependency names the absent entry.
MCoeff m_coeff(const PolyTable& t, int kappa, int gamma, int lambda, Placeholder hole = {});

bool kappa_less(const PolyTable& t, int kappa, int gamma, int lambda);

// coefficient of a-hat_gamma in T-hat C-hat_lambda, summed over the
// neighbours of gamma
LaurentPoly T_hat_C_entry(const PolyTable& t, int kappa, int gamma, int lambda);

// the same coefficient read off the image-basis expansion of T-hat a-hat
// (equals T_hat_C_entry whenever kappa is a descent for gamma)
LaurentPoly image_coefficient(const PolyTable& t, int kappa, int gamma, int lambda);

// sum of P(gamma, delta) m(delta, lambda) over descents delta that are not
// arrow sources of lambda
LaurentPoly U_term(const PolyTable& t, int kappa, int gamma, int lambda);

// Outcome of one recursion step.
struct RouteResult {
  enum class Kind { Value, PairSum, Unresolved };
  Kind kind = Kind::Value;
  LaurentPoly value;   // P(gamma, col), or the sum with the other entry
  int other_row = -1;  // PairSum: the second entry (other_row, other_col)
  int other_col = -1;
  std::string diagnostic;
};

// kappa ascent for gamma, descent for col
LaurentPoly easy_recursion(const PolyTable& t, int kappa, int gamma, int col);
// kappa descent for both; NotApplicable for compact descents of col
RouteResult direct_recursion(const PolyTable& t, int kappa, int gamma, int col);
// col of type 1i2s/1rn/2rn/3rn; gamma an ascent or compact descent
RouteResult new_recursion(const PolyTable& t, int kappa, int gamma, int col);

struct ComputeStats {
  int sweeps = 0;
  int route_agreements = 0;  // entries confirmed by a second route
};

// Fill the whole table.  Entries without a route end up Unresolved.
// RecursionError if two routes disagree.
PolyTable compute_all(const ExtBlock& b, ComputeStats* stats = nullptr);

// P-sigma as a polynomial in u (exponent = power of u)
LaurentPoly to_classical(const PolyTable& t, int gamma, int delta);

struct WGraphVertex {
  int id;
  std::vector<int> tau;
};
struct WGraphEdge {
  int from;
  int to;
  Int mu;
  bool arrow;
};
struct WGraph {
  std::vector<WGraphVertex> vertices;
  std::vector<WGraphEdge> edges;
};
WGraph wgraph(const PolyTable& t);

// Checks over all complete columns; each returns human-readable failures.
std::vector<std::string> verify_eigen(const PolyTable& t);
std::vector<std::string> verify_decomp(const PolyTable& t);
std::vector<std::string> verify_support(const PolyTable& t);

// C-hat_lambda as a module vector (column must be complete)
ModuleVector canonical_vector(const PolyTable& t, int lambda);

}  // namespace tklv
