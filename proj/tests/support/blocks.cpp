#include "blocks.hpp"

#include <tklv/typecode.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace testblocks {

using namespace tklv;
using Vec = std::vector<int>;

namespace {

// s_i on a weight in fundamental-weight coordinates (symmetric Cartan matrix)
Vec reflect(const std::vector<Vec>& cartan, const Vec& x, int i) {
  Vec y = x;
  for (size_t j = 0; j < x.size(); ++j) y[j] -= x[i] * cartan[i][j];
  return y;
}

Vec apply_word(const std::vector<Vec>& cartan, Vec x, const Vec& word) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) x = reflect(cartan, x, *it);
  return x;
}

// all of W, found by breadth-first search from rho; distance is the length
struct Elements {
  std::map<Vec, int> index;
  std::vector<Vec> elems;
  Vec lengths;
};

Elements search(const std::vector<Vec>& cartan) {
  const int n = static_cast<int>(cartan.size());
  Elements w;
  Vec rho(n, 1);
  w.index[rho] = 0;
  w.elems.push_back(rho);
  w.lengths.push_back(0);
  for (size_t h = 0; h < w.elems.size(); ++h)
    for (int i = 0; i < n; ++i) {
      Vec y = reflect(cartan, w.elems[h], i);
      if (w.index.count(y)) continue;
      w.index[y] = static_cast<int>(w.elems.size());
      w.elems.push_back(y);
      w.lengths.push_back(w.lengths[h] + 1);
    }
  return w;
}

TypeCode complex_type(int k, bool descent) {
  using enum TypeCode;
  static const TypeCode up[] = {t1Cp, t2Cp, t3Cp}, down[] = {t1Cm, t2Cm, t3Cm};
  return descent ? down[k - 1] : up[k - 1];
}

}  // namespace

std::vector<Vec> cartan_A(int n) {
  std::vector<Vec> c(n, Vec(n, 0));
  for (int i = 0; i < n; ++i) {
    c[i][i] = 2;
    if (i + 1 < n) c[i][i + 1] = c[i + 1][i] = -1;
  }
  return c;
}

// node 0 is the centre for D4; in general the fork sits at n-3
std::vector<Vec> cartan_D(int n) {
  std::vector<Vec> c(n, Vec(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto link = [&](int a, int b) { c[a][b] = c[b][a] = -1; };
  for (int i = 0; i + 2 < n - 1; ++i) link(i, i + 1);
  link(n - 3, n - 2);
  link(n - 3, n - 1);
  return c;
}

Vec identity_perm(int n) {
  Vec p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

Vec flip_perm(int n) {
  Vec p(n);
  for (int i = 0; i < n; ++i) p[i] = n - 1 - i;
  return p;
}

RawBlock weyl_block(const std::string& name, const std::vector<Vec>& cartan, const Vec& sigma) {
  const int n = static_cast<int>(cartan.size());
  const Elements w = search(cartan);
  const auto& index = w.index;
  const auto& elems = w.elems;
  const auto& lengths = w.lengths;
  const Vec rho(n, 1);

  // sigma-orbits and their longest elements
  std::vector<Vec> words;
  Vec seen(n, 0);
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int j = sigma[i];
    seen[i] = seen[j] = 1;
    if (sigma[j] != i) throw std::invalid_argument("sigma must be an involution");
    if (j == i)
      words.push_back({i});
    else if (cartan[i][j] == 0)
      words.push_back({i, j});
    else
      words.push_back({i, j, i});
  }
  const int r = static_cast<int>(words.size());

  auto fixed = [&](const Vec& x) {
    for (int i = 0; i < n; ++i)
      if (x[sigma[i]] != x[i]) return false;
    return true;
  };
  std::vector<int> keep;
  for (int e = 0; e < static_cast<int>(elems.size()); ++e)
    if (fixed(elems[e])) keep.push_back(e);
  std::stable_sort(keep.begin(), keep.end(), [&](int a, int b) { return lengths[a] < lengths[b]; });
  std::map<int, int> local;
  for (size_t i = 0; i < keep.size(); ++i) local[keep[i]] = static_cast<int>(i);

  RawBlock raw;
  raw.name = name;
  for (int k = 0; k < r; ++k) raw.kappas.push_back({k, static_cast<int>(words[k].size())});
  raw.folded_coxeter.assign(r, Vec(r, 1));
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) {
      if (a == b) continue;
      Vec x = rho;
      int m = 0;
      do {
        x = apply_word(cartan, apply_word(cartan, x, words[b]), words[a]);
        ++m;
      } while (x != rho);
      raw.folded_coxeter[a][b] = m;
    }
  for (size_t i = 0; i < keep.size(); ++i) {
    const int e = keep[i];
    Parameter p;
    p.id = static_cast<int>(i);
    p.length = lengths[e];
    for (int k = 0; k < r; ++k) {
      int y = index.at(apply_word(cartan, elems[e], words[k]));
      KappaDescriptor d;
      d.type = complex_type(static_cast<int>(words[k].size()), lengths[y] < lengths[e]);
      d.cross = local.at(y);
      p.kappa_data.push_back(d);
    }
    raw.parameters.push_back(p);
  }
  return raw;
}

RawBlock A(int n) { return weyl_block("A" + std::to_string(n), cartan_A(n), identity_perm(n)); }
RawBlock A2_twisted() { return weyl_block("A2_twisted", cartan_A(2), flip_perm(2)); }
RawBlock A3_twisted() { return weyl_block("A3_twisted", cartan_A(3), flip_perm(3)); }
RawBlock A4_twisted() { return weyl_block("A4_twisted", cartan_A(4), flip_perm(4)); }
RawBlock A5_twisted() { return weyl_block("A5_twisted", cartan_A(5), flip_perm(5)); }
RawBlock D4_twisted() { return weyl_block("D4_twisted", cartan_D(4), {0, 1, 3, 2}); }

int perm_index(const Vec& one_line) {
  // w rho in the epsilon basis puts rho_i at position w(i); its fundamental
  // weight coordinates are the consecutive differences
  const int m = static_cast<int>(one_line.size());
  Vec eps(m);
  for (int i = 0; i < m; ++i) eps[one_line[i] - 1] = m - 1 - i;
  Vec target(m - 1);
  for (int i = 0; i + 1 < m; ++i) target[i] = eps[i] - eps[i + 1];
  const Elements w = search(cartan_A(m - 1));
  // same (length, search order) numbering as weyl_block
  const int e = w.index.at(target);
  int pos = 0;
  for (int x = 0; x < static_cast<int>(w.elems.size()); ++x)
    if (w.lengths[x] < w.lengths[e] || (w.lengths[x] == w.lengths[e] && x < e)) ++pos;
  return pos;
}

RawBlock product(const RawBlock& a, const RawBlock& b) {
  const int na = static_cast<int>(a.parameters.size()), nb = static_cast<int>(b.parameters.size());
  const int ra = static_cast<int>(a.kappas.size()), rb = static_cast<int>(b.kappas.size());
  RawBlock raw;
  raw.name = a.name + "_x_" + b.name;
  for (int k = 0; k < ra + rb; ++k)
    raw.kappas.push_back({k, k < ra ? a.kappas[k].length : b.kappas[k - ra].length});
  raw.folded_coxeter.assign(ra + rb, Vec(ra + rb, 2));
  for (int i = 0; i < ra + rb; ++i)
    for (int j = 0; j < ra + rb; ++j) {
      if (i < ra && j < ra) raw.folded_coxeter[i][j] = a.folded_coxeter[i][j];
      if (i >= ra && j >= ra) raw.folded_coxeter[i][j] = b.folded_coxeter[i - ra][j - ra];
    }
  auto id = [nb](int i, int j) { return i * nb + j; };
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) {
      Parameter p;
      p.id = id(i, j);
      p.length = a.parameters[i].length + b.parameters[j].length;
      for (KappaDescriptor d : a.parameters[i].kappa_data) {
        d.cross = id(d.cross, j);
        for (int& c : d.cayley) c = id(c, j);
        p.kappa_data.push_back(d);
      }
      for (KappaDescriptor d : b.parameters[j].kappa_data) {
        d.cross = id(i, d.cross);
        for (int& c : d.cayley) c = id(i, c);
        p.kappa_data.push_back(d);
      }
      raw.parameters.push_back(p);
    }
  for (const OrderedPair& op : a.ordered_pairs)
    for (int j = 0; j < nb; ++j)
      raw.ordered_pairs.push_back({op.kappa,
                                   {id(op.source_pair[0], j), id(op.source_pair[1], j)},
                                   {id(op.target_pair[0], j), id(op.target_pair[1], j)}});
  for (const OrderedPair& op : b.ordered_pairs)
    for (int i = 0; i < na; ++i)
      raw.ordered_pairs.push_back({op.kappa + ra,
                                   {id(i, op.source_pair[0]), id(i, op.source_pair[1])},
                                   {id(i, op.target_pair[0]), id(i, op.target_pair[1])}});
  return raw;
}

namespace {

// one member of a local motif; indices are positions inside the motif
struct Member {
  int rise;  // length above the motif's lowest member
  TypeCode type;
  int cross = -1;  // -1: fixed
  Vec cayley{};
  int slot = 0;
};

struct Motif {
  std::string name;
  int k;
  std::vector<Member> members;
  bool ordered = false;  // members 0,1 source pair, 2,3 target pair
};

const std::vector<Motif>& motifs() {
  using enum TypeCode;
  static const std::vector<Motif> all{
      {"C1", 1, {{0, t1Cp, 1}, {1, t1Cm, 0}}},
      {"i1", 1, {{0, t1i1, 1, {2}}, {0, t1i1, 0, {2}}, {1, t1r1f, -1, {0, 1}}}},
      {"i2f", 1, {{0, t1i2f, -1, {1, 2}}, {1, t1r2, 2, {0}}, {1, t1r2, 1, {0}}}},
      {"ic1", 1, {{0, t1ic}}},
      {"rn1", 1, {{0, t1rn}}},
      {"i2s", 1, {{0, t1i2s}}},
      {"r1s", 1, {{0, t1r1s}}},
      {"C2", 2, {{0, t2Cp, 1}, {2, t2Cm, 0}}},
      {"Ci2", 2, {{0, t2Ci, -1, {1}}, {1, t2Cr, -1, {0}}}},
      {"i11", 2, {{0, t2i11, 1, {2}}, {0, t2i11, 0, {2}}, {2, t2r11, -1, {0, 1}}}},
      {"i22", 2, {{0, t2i22, -1, {1, 2}}, {2, t2r22, 2, {0}}, {2, t2r22, 1, {0}}}},
      {"i12",
       2,
       {{0, t2i12, -1, {2, 3}, 1}, {0, t2i12, -1, {2, 3}, 2}, {2, t2r21, -1, {0, 1}, 1}, {2, t2r21, -1, {0, 1}, 2}},
       true},
      {"ic2", 2, {{0, t2ic}}},
      {"rn2", 2, {{0, t2rn}}},
      {"C3", 3, {{0, t3Cp, 1}, {3, t3Cm, 0}}},
      {"Ci3", 3, {{0, t3Ci, -1, {1}}, {2, t3Cr, -1, {0}}}},
      {"i3", 3, {{0, t3i, -1, {1}}, {2, t3r, -1, {0}}}},
      {"ic3", 3, {{0, t3ic}}},
      {"rn3", 3, {{0, t3rn}}},
  };
  return all;
}

const Motif& motif(const std::string& name) {
  for (const Motif& m : motifs())
    if (m.name == name) return m;
  throw std::invalid_argument("no motif " + name);
}

// Writes motif data for kappa into raw, members placed at the given ids.
void place(RawBlock& raw, int kappa, const Motif& m, const Vec& ids) {
  for (size_t i = 0; i < m.members.size(); ++i) {
    const Member& mm = m.members[i];
    KappaDescriptor d;
    d.type = mm.type;
    d.cross = mm.cross < 0 ? ids[i] : ids[mm.cross];
    for (int c : mm.cayley) d.cayley.push_back(ids[c]);
    if (mm.slot) d.pair_slot = mm.slot;
    raw.parameters[ids[i]].kappa_data[kappa] = d;
  }
  if (m.ordered) raw.ordered_pairs.push_back({kappa, {ids[0], ids[1]}, {ids[2], ids[3]}});
}

}  // namespace

std::vector<std::string> motif_names() {
  std::vector<std::string> out;
  for (const Motif& m : motifs()) out.push_back(m.name);
  return out;
}

RawBlock motif_block(const std::string& which) {
  const Motif& m = motif(which);
  RawBlock raw;
  raw.name = "motif_" + which;
  raw.kappas = {{0, m.k}};
  raw.folded_coxeter = {{1}};
  Vec ids;
  for (size_t i = 0; i < m.members.size(); ++i) {
    Parameter p;
    p.id = static_cast<int>(i);
    p.length = m.members[i].rise;
    p.kappa_data.resize(1);
    raw.parameters.push_back(p);
    ids.push_back(static_cast<int>(i));
  }
  place(raw, 0, m, ids);
  return raw;
}

RawBlock random_motif_block(std::mt19937& rng, int max_params) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int r = pick(1, 3);
  RawBlock raw;
  raw.name = "random";
  for (int k = 0; k < r; ++k) raw.kappas.push_back({k, pick(1, 3)});
  raw.folded_coxeter.assign(r, Vec(r, 2));
  for (int k = 0; k < r; ++k) raw.folded_coxeter[k][k] = 1;

  auto of_length = [&](int k) {
    std::vector<const Motif*> out;
    for (const Motif& m : motifs())
      if (m.k == k) out.push_back(&m);
    return out;
  };

  // the first kappa lays out the parameters
  const int target = pick(2, max_params);
  const auto first = of_length(raw.kappas[0].length);
  std::vector<std::pair<const Motif*, Vec>> placed;
  while (static_cast<int>(raw.parameters.size()) < target) {
    const Motif* m = first[pick(0, static_cast<int>(first.size()) - 1)];
    if (raw.parameters.size() + m->members.size() > static_cast<size_t>(max_params)) continue;
    int base = pick(0, 2);
    Vec ids;
    for (const Member& mm : m->members) {
      Parameter p;
      p.id = static_cast<int>(raw.parameters.size());
      p.length = base + mm.rise;
      p.kappa_data.resize(r);
      ids.push_back(p.id);
      raw.parameters.push_back(p);
    }
    placed.push_back({m, ids});
  }
  for (const auto& [m, ids] : placed) place(raw, 0, *m, ids);

  // later kappas partition the existing parameters greedily
  const int n = static_cast<int>(raw.parameters.size());
  for (int k = 1; k < r; ++k) {
    auto choices = of_length(raw.kappas[k].length);
    Vec order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<char> used(n, 0);
    for (int p : order) {
      if (used[p]) continue;
      std::shuffle(choices.begin(), choices.end(), rng);
      for (const Motif* m : choices) {
        Vec ids{p};
        std::vector<char> taken = used;
        taken[p] = 1;
        bool ok = true;
        for (size_t i = 1; i < m->members.size() && ok; ++i) {
          int want = raw.parameters[p].length + m->members[i].rise;
          int found = -1;
          for (int q : order)
            if (!taken[q] && raw.parameters[q].length == want) {
              found = q;
              break;
            }
          if (found < 0) ok = false;
          else {
            ids.push_back(found);
            taken[found] = 1;
          }
        }
        if (!ok) continue;
        used = taken;
        place(raw, k, *m, ids);
        break;
      }
    }
  }
  return raw;
}

}  // namespace testblocks
