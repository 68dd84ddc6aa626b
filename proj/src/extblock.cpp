#include <tklv/errors.hpp>
#include <tklv/extblock.hpp>

#include <algorithm>
#include <set>

namespace tklv {

namespace {

std::string where(int gamma, int kappa) {
  return " (parameter " + std::to_string(gamma) + ", kappa " + std::to_string(kappa) + ")";
}

[[noreturn]] void fail(const std::string& msg, int gamma = -1, int kappa = -1) {
  std::string full = msg;
  if (gamma >= 0 && kappa >= 0)
    full += where(gamma, kappa);
  else if (gamma >= 0)
    full += " (parameter " + std::to_string(gamma) + ")";
  else if (kappa >= 0)
    full += " (kappa " + std::to_string(kappa) + ")";
  throw ValidationError(full, gamma, kappa);
}

std::set<int> as_set(const std::vector<int>& v) { return {v.begin(), v.end()}; }

void check_header(const RawBlock& raw) {
  const int r = static_cast<int>(raw.kappas.size());
  if (r == 0) fail("block has no kappas");
  for (int k = 0; k < r; ++k) {
    if (raw.kappas[k].id != k) fail("kappa ids must be 0..r-1 in order", -1, k);
    int len = raw.kappas[k].length;
    if (len < 1 || len > 3) fail("kappa length must be 1, 2 or 3", -1, k);
  }
  if (static_cast<int>(raw.folded_coxeter.size()) != r)
    fail("folded_coxeter must be r x r with r = number of kappas");
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(raw.folded_coxeter[i].size()) != r)
      fail("folded_coxeter must be r x r with r = number of kappas");
    for (int j = 0; j < r; ++j) {
      int m = raw.folded_coxeter[i][j];
      if (i == j && m != 1) fail("folded_coxeter diagonal must be 1", -1, i);
      if (i != j && m != 0 && m < 2) fail("folded_coxeter off-diagonal orders must be >= 2 (0 = infinite)", -1, i);
      if (raw.folded_coxeter[j][i] != m) fail("folded_coxeter must be symmetric", -1, i);
    }
  }
  const int n = static_cast<int>(raw.parameters.size());
  if (n == 0) fail("block has no parameters");
  for (int g = 0; g < n; ++g) {
    const Parameter& p = raw.parameters[g];
    if (p.id != g) fail("parameter ids must be 0..n-1 in order", g);
    if (p.length < 0) fail("parameter length must be nonnegative", g);
    if (static_cast<int>(p.kappa_data.size()) != r) fail("kappa_data must have one entry per kappa", g);
  }
}

void check_local(const RawBlock& raw) {
  const int n = static_cast<int>(raw.parameters.size());
  const int r = static_cast<int>(raw.kappas.size());
  for (int g = 0; g < n; ++g)
    for (int k = 0; k < r; ++k) {
      const KappaDescriptor& d = raw.parameters[g].kappa_data[k];
      const TypeInfo& ti = info(d.type);
      if (ti.length != raw.kappas[k].length)
        fail("type " + std::string(ti.name) + " does not match kappa length " +
                 std::to_string(raw.kappas[k].length), g, k);
      if (d.cross < 0 || d.cross >= n) fail("cross image out of range", g, k);
      if (static_cast<int>(d.cayley.size()) != ti.cayley_count)
        fail("type " + std::string(ti.name) + " needs " + std::to_string(ti.cayley_count) +
                 " cayley targets", g, k);
      for (int c : d.cayley)
        if (c < 0 || c >= n || c == g) fail("cayley target out of range", g, k);
      if (as_set(d.cayley).size() != d.cayley.size()) fail("repeated cayley target", g, k);
      if (d.pair_slot.has_value() != is_paired_ordered(d.type))
        fail("pair_slot is required exactly for 2i12 and 2r21", g, k);
      if (d.pair_slot && *d.pair_slot != 1 && *d.pair_slot != 2) fail("pair_slot must be 1 or 2", g, k);
    }
}

void check_cross(const RawBlock& raw) {
  const int n = static_cast<int>(raw.parameters.size());
  const int r = static_cast<int>(raw.kappas.size());
  auto at = [&](int g, int k) -> const KappaDescriptor& { return raw.parameters[g].kappa_data[k]; };
  for (int g = 0; g < n; ++g)
    for (int k = 0; k < r; ++k) {
      const KappaDescriptor& d = at(g, k);
      int w = d.cross;
      if (at(w, k).cross != g) fail("cross action is not an involution", g, k);
      bool moves = w != g;
      if (moves != info(d.type).moves)
        fail(std::string("type ") + std::string(name(d.type)) +
                 (moves ? " must be fixed by the cross action" : " must be moved by the cross action"),
             g, k);
      if (!moves) continue;
      if (at(w, k).type != cross_partner_type(d.type))
        fail("cross partner has type " + std::string(name(at(w, k).type)) + ", expected " +
                 std::string(name(cross_partner_type(d.type))), g, k);
      int lg = raw.parameters[g].length, lw = raw.parameters[w].length, kl = raw.kappas[k].length;
      int expect = is_complex(d.type) ? (info(d.type).descent ? lg - kl : lg + kl) : lg;
      if (lw != expect) fail("cross partner length must be " + std::to_string(expect), g, k);
    }
}

void check_cayley(const RawBlock& raw) {
  const int n = static_cast<int>(raw.parameters.size());
  const int r = static_cast<int>(raw.kappas.size());
  auto at = [&](int g, int k) -> const KappaDescriptor& { return raw.parameters[g].kappa_data[k]; };
  for (int g = 0; g < n; ++g)
    for (int k = 0; k < r; ++k) {
      const KappaDescriptor& d = at(g, k);
      const TypeInfo& ti = info(d.type);
      for (int c : d.cayley) {
        const KappaDescriptor& dc = at(c, k);
        if (dc.type != *cayley_partner_type(d.type))
          fail("cayley target " + std::to_string(c) + " has type " + std::string(name(dc.type)) +
                   ", expected " + std::string(name(*cayley_partner_type(d.type))), g, k);
        if (std::find(dc.cayley.begin(), dc.cayley.end(), g) == dc.cayley.end())
          fail("cayley adjacency is not symmetric with " + std::to_string(c), g, k);
        int hi = ti.descent ? g : c, lo = ti.descent ? c : g;
        int drop = raw.parameters[hi].length - raw.parameters[lo].length;
        int expect = raw.kappas[k].length - info(at(hi, k).type).defect;
        if (drop != expect)
          fail("length drop across cayley link to " + std::to_string(c) + " is " + std::to_string(drop) +
                   ", must be " + std::to_string(expect), g, k);
      }
      if (d.cayley.size() == 2) {
        int c1 = d.cayley[0], c2 = d.cayley[1];
        switch (d.type) {
          case TypeCode::t1r1f:
          case TypeCode::t2r11:
          case TypeCode::t1i2f:
          case TypeCode::t2i22:
            if (at(c1, k).cross != c2) fail("the two cayley targets must be cross partners", g, k);
            break;
          default:  // 2i12 / 2r21: both targets see the same pair
            if (as_set(at(c1, k).cayley) != as_set(at(c2, k).cayley))
              fail("the two cayley targets must share their cayley pair", g, k);
        }
      }
    }
}

void check_pairs(const RawBlock& raw) {
  const int n = static_cast<int>(raw.parameters.size());
  const int r = static_cast<int>(raw.kappas.size());
  auto at = [&](int g, int k) -> const KappaDescriptor& { return raw.parameters[g].kappa_data[k]; };
  std::vector<std::vector<int>> seen(n, std::vector<int>(r, 0));
  for (size_t e = 0; e < raw.ordered_pairs.size(); ++e) {
    const OrderedPair& op = raw.ordered_pairs[e];
    const std::string tag = "ordered_pairs[" + std::to_string(e) + "]";
    if (op.kappa < 0 || op.kappa >= r) fail(tag + ": kappa out of range");
    const int k = op.kappa;
    auto check_side = [&](const std::array<int, 2>& pr, TypeCode want, const char* side) {
      for (int s = 0; s < 2; ++s) {
        int g = pr[s];
        if (g < 0 || g >= n) fail(tag + ": " + side + " id out of range", -1, k);
        if (at(g, k).type != want)
          fail(tag + ": " + side + " member must have type " + std::string(name(want)), g, k);
        if (at(g, k).pair_slot != s + 1)
          fail(tag + ": pair_slot disagrees with position in " + side, g, k);
        ++seen[g][k];
      }
      if (pr[0] == pr[1]) fail(tag + ": " + side + " members must differ", pr[0], k);
    };
    check_side(op.source_pair, TypeCode::t2i12, "source_pair");
    check_side(op.target_pair, TypeCode::t2r21, "target_pair");
    std::set<int> targets{op.target_pair[0], op.target_pair[1]};
    for (int g : op.source_pair)
      if (as_set(at(g, k).cayley) != targets)
        fail(tag + ": source member's cayley targets differ from target_pair", g, k);
  }
  for (int g = 0; g < n; ++g)
    for (int k = 0; k < r; ++k) {
      if (!is_paired_ordered(at(g, k).type)) continue;
      if (seen[g][k] == 0) fail("2i12/2r21 parameter missing from ordered_pairs", g, k);
      if (seen[g][k] > 1) fail("2i12/2r21 parameter listed in several ordered_pairs", g, k);
    }
}

}  // namespace

ExtBlock validate(const RawBlock& raw) {
  check_header(raw);
  check_local(raw);
  check_cross(raw);
  check_cayley(raw);
  check_pairs(raw);
  return ExtBlock(raw);
}

ExtBlock::ExtBlock(RawBlock raw) : raw_(std::move(raw)) { build_derived(); }

void ExtBlock::build_derived() {
  const int n = size(), r = kappa_count();
  arrows_out_.assign(n, std::vector<std::vector<int>>(r));
  arrows_in_.assign(n, std::vector<std::vector<int>>(r));
  nbhd_.assign(n, std::vector<std::vector<int>>(r));
  partner_.assign(n, std::vector<int>(r, -1));
  for (int g = 0; g < n; ++g)
    for (int k = 0; k < r; ++k) {
      const KappaDescriptor& d = data(g, k);
      if (info(d.type).descent) {
        if (is_complex(d.type))
          arrows_out_[g][k] = {d.cross};
        else if (!is_compact_descent(d.type))
          arrows_out_[g][k] = d.cayley;
      }
      std::set<int> nb{g, d.cross};
      nb.insert(d.cayley.begin(), d.cayley.end());
      nbhd_[g][k].assign(nb.begin(), nb.end());
    }
  for (int g = 0; g < n; ++g)
    for (int k = 0; k < r; ++k)
      for (int t : arrows_out_[g][k]) arrows_in_[t][k].push_back(g);
  for (const OrderedPair& op : raw_.ordered_pairs) {
    for (const auto& pr : {op.source_pair, op.target_pair}) {
      partner_[pr[0]][op.kappa] = pr[1];
      partner_[pr[1]][op.kappa] = pr[0];
    }
  }

  by_length_.resize(n);
  for (int g = 0; g < n; ++g) by_length_[g] = g;
  std::stable_sort(by_length_.begin(), by_length_.end(),
                   [&](int a, int b) { return length(a) < length(b); });
  max_length_ = length(by_length_.back());

  // Lifting closure: everything below delta is below some arrow target lambda,
  // or one kappa-move away from something below lambda.
  down_.assign(n, std::vector<char>(n, 0));
  for (int d : by_length_) {
    std::vector<char> seed(n, 0);
    bool lowered = false;
    for (int k = 0; k < r; ++k) {
      if (!is_descent(d, k)) continue;
      for (int lam : arrows_out_[d][k]) {
        lowered = true;
        for (int x = 0; x < n; ++x) {
          if (!down_[lam][x]) continue;
          for (int y : nbhd_[x][k]) seed[y] = 1;
        }
      }
    }
    // Without arrow descents the parameter is minimal, unless a 1r1s descent
    // hides Cayley partners outside the block; then keep everything shorter.
    bool hidden = false;
    for (int k = 0; k < r; ++k) hidden = hidden || type(d, k) == TypeCode::t1r1s;
    std::vector<char>& mine = down_[d];
    mine[d] = 1;
    if (!lowered && !hidden) continue;
    for (int x = 0; x < n; ++x) {
      bool take = lowered ? seed[x] : true;
      if (!take || length(x) >= length(d)) continue;
      for (int y = 0; y < n; ++y)
        if (down_[x][y]) mine[y] = 1;
    }
  }
}

std::vector<int> ExtBlock::tau(int gamma) const {
  std::vector<int> t;
  for (int k = 0; k < kappa_count(); ++k)
    if (is_descent(gamma, k)) t.push_back(k);
  return t;
}

int ExtBlock::zeta(int gamma, int kappa) const {
  if (!is_descent(gamma, kappa))
    throw NotDescent("kappa " + std::to_string(kappa) + " is not a descent of " + std::to_string(gamma));
  return info(type(gamma, kappa)).zeta;
}

const std::vector<int>& ExtBlock::arrow_targets(int gamma, int kappa) const {
  if (!is_descent(gamma, kappa))
    throw NotDescent("kappa " + std::to_string(kappa) + " is not a descent of " + std::to_string(gamma));
  return arrows_out_[gamma][kappa];
}

const std::vector<int>& ExtBlock::arrow_sources(int gamma, int kappa) const {
  return arrows_in_[gamma][kappa];
}

bool ExtBlock::is_arrow(int from, int to, int kappa) const {
  const auto& out = arrows_out_[from][kappa];
  return std::find(out.begin(), out.end(), to) != out.end();
}

int ExtBlock::epsilon(int gamma, int lambda, int kappa) const {
  int desc = -1, asc = -1;
  if (is_arrow(gamma, lambda, kappa))
    desc = gamma, asc = lambda;
  else if (is_arrow(lambda, gamma, kappa))
    desc = lambda, asc = gamma;
  else
    throw NotAdjacent("no kappa-arrow between " + std::to_string(gamma) + " and " + std::to_string(lambda));
  if (type(desc, kappa) != TypeCode::t2r21) return 1;
  return (data(desc, kappa).pair_slot == 2 && data(asc, kappa).pair_slot == 2) ? -1 : 1;
}

int ExtBlock::pair_partner(int gamma, int kappa) const { return partner_[gamma][kappa]; }

const std::vector<int>& ExtBlock::neighbours(int gamma, int kappa) const { return nbhd_[gamma][kappa]; }

std::vector<int> tau(const ExtBlock& b, int gamma) { return b.tau(gamma); }
int epsilon(const ExtBlock& b, int gamma, int lambda, int kappa) { return b.epsilon(gamma, lambda, kappa); }
std::vector<int> kappa_arrow_targets(const ExtBlock& b, int gamma, int kappa) {
  return b.arrow_targets(gamma, kappa);
}
int zeta(const ExtBlock& b, int gamma, int kappa) { return b.zeta(gamma, kappa); }

}  // namespace tklv
