#pragma once

#include <tklv/typecode.hpp>

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace tklv {

struct KappaDescriptor {
  TypeCode type{};
  int cross = -1;
  std::vector<int> cayley;
  std::optional<int> pair_slot;  // 1 or 2, only for 2i12/2r21
};

struct Parameter {
  int id = 0;
  int length = 0;
  std::vector<KappaDescriptor> kappa_data;
};

struct Kappa {
  int id = 0;
  int length = 1;
};

struct OrderedPair {
  int kappa = 0;
  std::array<int, 2> source_pair{};  // 2i12 parameters (gamma1, gamma2)
  std::array<int, 2> target_pair{};  // 2r21 parameters (lambda1, lambda2)
};

// Unchecked block data, as read from a file.
struct RawBlock {
  std::string name;
  std::vector<Kappa> kappas;
  std::vector<std::vector<int>> folded_coxeter;
  std::vector<Parameter> parameters;
  std::vector<OrderedPair> ordered_pairs;
};

class ExtBlock;

// Checks every structural invariant; throws ValidationError on the first failure.
ExtBlock validate(const RawBlock& raw);

// Validated, immutable extended block.
class ExtBlock {
 public:
  const std::string& name() const { return raw_.name; }
  const RawBlock& raw() const { return raw_; }
  int size() const { return static_cast<int>(raw_.parameters.size()); }
  int kappa_count() const { return static_cast<int>(raw_.kappas.size()); }

  int length(int gamma) const { return raw_.parameters[gamma].length; }
  int kappa_length(int kappa) const { return raw_.kappas[kappa].length; }
  int coxeter(int k1, int k2) const { return raw_.folded_coxeter[k1][k2]; }

  const KappaDescriptor& data(int gamma, int kappa) const {
    return raw_.parameters[gamma].kappa_data[kappa];
  }
  TypeCode type(int gamma, int kappa) const { return data(gamma, kappa).type; }
  int cross(int gamma, int kappa) const { return data(gamma, kappa).cross; }
  const std::vector<int>& cayley(int gamma, int kappa) const { return data(gamma, kappa).cayley; }

  bool is_descent(int gamma, int kappa) const { return info(type(gamma, kappa)).descent; }
  std::vector<int> tau(int gamma) const;
  int defect(int gamma, int kappa) const { return info(type(gamma, kappa)).defect; }
  // NotDescent unless kappa in tau(gamma)
  int zeta(int gamma, int kappa) const;

  // lambda with gamma ->_kappa lambda; NotDescent unless kappa in tau(gamma)
  const std::vector<int>& arrow_targets(int gamma, int kappa) const;
  // gamma' with gamma' ->_kappa gamma (empty when kappa in tau(gamma))
  const std::vector<int>& arrow_sources(int gamma, int kappa) const;
  bool is_arrow(int from, int to, int kappa) const;
  // NotAdjacent unless one of gamma, lambda is a kappa-arrow source of the other
  int epsilon(int gamma, int lambda, int kappa) const;
  // the other member of gamma's ordered 2i12/2r21 pair, -1 if none
  int pair_partner(int gamma, int kappa) const;

  // parameters whose T-image involves gamma: gamma, cross, Cayley partners
  const std::vector<int>& neighbours(int gamma, int kappa) const;

  // over-approximation of the block order: leq(g, d) false implies P(g, d) = 0
  bool leq(int gamma, int delta) const { return down_[delta][gamma] != 0; }

  // parameters sorted by (length, id)
  const std::vector<int>& by_length() const { return by_length_; }
  int max_length() const { return max_length_; }

 private:
  friend ExtBlock validate(const RawBlock& raw);
  explicit ExtBlock(RawBlock raw);
  void build_derived();

  RawBlock raw_;
  std::vector<std::vector<std::vector<int>>> arrows_out_, arrows_in_, nbhd_;
  std::vector<std::vector<int>> partner_;
  std::vector<std::vector<char>> down_;
  std::vector<int> by_length_;
  int max_length_ = 0;
};

// free-function forms of the block queries
std::vector<int> tau(const ExtBlock& b, int gamma);
int epsilon(const ExtBlock& b, int gamma, int lambda, int kappa);
std::vector<int> kappa_arrow_targets(const ExtBlock& b, int gamma, int kappa);
int zeta(const ExtBlock& b, int gamma, int kappa);

// JSON block files.  Unknown fields are rejected.
RawBlock parse_block_json(const std::string& text);
RawBlock load_block_file(const std::string& path);
std::string block_to_json(const RawBlock& raw);

}  // namespace tklv
