#include <tklv/errors.hpp>
#include <tklv/klv.hpp>

#include <algorithm>

namespace tklv {

namespace {

// P(r1, c1) + P(r2, c2) = sum, waiting for one side
struct PairConstraint {
  int r1, c1, r2, c2;
  LaurentPoly sum;
};

std::string entry_name(int r, int c) { return "P(" + std::to_string(r) + "," + std::to_string(c) + ")"; }

class Driver {
 public:
  Driver(const ExtBlock& b, PolyTable& t, ComputeStats& st) : b_(b), t_(t), stats_(st) {}

  void run() {
    std::vector<int> lengths;
    for (int g : b_.by_length())
      if (lengths.empty() || lengths.back() != b_.length(g)) lengths.push_back(b_.length(g));
    for (int len : lengths) {
      std::vector<int> cols;
      for (int g : b_.by_length())
        if (b_.length(g) == len) cols.push_back(g);
      while (sweep(cols)) ++stats_.sweeps;
    }
    // late dependencies (terms above the column's stratum)
    while (sweep(b_.by_length())) ++stats_.sweeps;
    for (int c = 0; c < b_.size(); ++c)
      for (int r = 0; r < b_.size(); ++r)
        if (!t_.known(r, c)) {
          std::string why = notes_[{r, c}];
          if (why.empty()) why = "no applicable recursion";
          t_.mark_unresolved(r, c, why);
        }
  }

 private:
  bool sweep(const std::vector<int>& cols) {
    bool progress = false;
    for (int c : cols) {
      const auto& order = b_.by_length();
      for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (!t_.known(*it, c) && attempt(*it, c)) progress = true;
    }
    return progress;
  }

  bool attempt(int r, int c) {
    std::vector<std::pair<std::string, LaurentPoly>> values;
    std::vector<RouteResult> sums;
    std::string failures;
    auto note_failure = [&](const std::string& route, const std::string& why) {
      if (!failures.empty()) failures += "; ";
      failures += route + ": " + why;
    };
    for (int k = 0; k < b_.kappa_count(); ++k) {
      const std::string tag = "kappa " + std::to_string(k);
      try {
        if (b_.is_descent(c, k)) {
          if (!b_.is_descent(r, k)) {
            values.emplace_back("easy " + tag, easy_recursion(t_, k, r, c));
          } else if (!is_compact_descent(b_.type(c, k))) {
            collect(direct_recursion(t_, k, r, c), "direct " + tag, values, sums, note_failure);
          }
        } else if (is_nonparity_ascent(b_.type(c, k))) {
          collect(new_recursion(t_, k, r, c), "new " + tag, values, sums, note_failure);
        }
      } catch (const MissingDependency& e) {
        note_failure(tag, e.what());
      } catch (const NotApplicable&) {
      }
    }
    notes_[{r, c}] = failures;

    if (!values.empty()) {
      for (size_t i = 1; i < values.size(); ++i) {
        if (values[i].second != values[0].second)
          throw RecursionError("routes disagree on " + entry_name(r, c) + ": " + values[0].first + " gives " +
                               to_string(values[0].second) + ", " + values[i].first + " gives " +
                               to_string(values[i].second));
        ++stats_.route_agreements;
      }
      store(r, c, values[0].second);
      for (const RouteResult& s : sums) add_constraint(r, c, s);
      return true;
    }
    bool fresh = false;
    for (const RouteResult& s : sums) fresh = add_constraint(r, c, s) || fresh;
    return fresh;
  }

  template <class Fail>
  static void collect(const RouteResult& res, const std::string& route,
                      std::vector<std::pair<std::string, LaurentPoly>>& values, std::vector<RouteResult>& sums,
                      Fail&& fail) {
    switch (res.kind) {
      case RouteResult::Kind::Value: values.emplace_back(route, res.value); break;
      case RouteResult::Kind::PairSum: sums.push_back(res); break;
      case RouteResult::Kind::Unresolved: fail(route, res.diagnostic); break;
    }
  }

  // returns true when the constraint is new or settled something
  bool add_constraint(int r, int c, const RouteResult& s) {
    PairConstraint pc{r, c, s.other_row, s.other_col, s.value};
    for (const PairConstraint& old : pending_) {
      bool same = (old.r1 == pc.r1 && old.c1 == pc.c1 && old.r2 == pc.r2 && old.c2 == pc.c2) ||
                  (old.r1 == pc.r2 && old.c1 == pc.c2 && old.r2 == pc.r1 && old.c2 == pc.c1);
      if (!same) continue;
      if (old.sum != pc.sum)
        throw RecursionError("routes disagree on " + entry_name(r, c) + " + " + entry_name(pc.r2, pc.c2));
      ++stats_.route_agreements;
      return false;
    }
    pending_.push_back(pc);
    return propagate();
  }

  void store(int r, int c, const LaurentPoly& p) {
    t_.set(r, c, p);
    propagate();
  }

  bool propagate() {
    bool any = false, changed = true;
    while (changed) {
      changed = false;
      for (size_t i = 0; i < pending_.size(); ++i) {
        PairConstraint pc = pending_[i];
        bool k1 = t_.known(pc.r1, pc.c1), k2 = t_.known(pc.r2, pc.c2);
        if (!k1 && !k2) continue;
        pending_.erase(pending_.begin() + static_cast<long>(i));
        if (k1 && k2) {
          if (t_.get(pc.r1, pc.c1) + t_.get(pc.r2, pc.c2) != pc.sum)
            throw RecursionError("pair sum for " + entry_name(pc.r1, pc.c1) + " + " + entry_name(pc.r2, pc.c2) +
                                 " does not match the computed entries");
        } else if (k1) {
          t_.set(pc.r2, pc.c2, pc.sum - t_.get(pc.r1, pc.c1));
        } else {
          t_.set(pc.r1, pc.c1, pc.sum - t_.get(pc.r2, pc.c2));
        }
        any = changed = true;
        break;
      }
    }
    return any;
  }

  const ExtBlock& b_;
  PolyTable& t_;
  ComputeStats& stats_;
  std::vector<PairConstraint> pending_;
  std::map<std::pair<int, int>, std::string> notes_;
};

}  // namespace

PolyTable compute_all(const ExtBlock& b, ComputeStats* stats) {
  PolyTable t(b);
  ComputeStats local;
  Driver(b, t, stats ? *stats : local).run();
  return t;
}

LaurentPoly to_classical(const PolyTable& t, int gamma, int delta) {
  const ExtBlock& b = t.block();
  LaurentPoly p = t.get(gamma, delta);
  const int diff = b.length(delta) - b.length(gamma);
  LaurentPoly out;
  for (const auto& [e, c] : p.terms()) {
    int s = e + diff;
    if (s < 0 || s % 2 != 0)
      throw ParityError(entry_name(gamma, delta) + " = " + to_string(p) + " has a term of the wrong parity");
    out.set_coeff(s / 2, c);
  }
  if (gamma != delta && !out.is_zero() && 2 * out.max_exp() > diff - 1)
    throw ParityError(entry_name(gamma, delta) + " exceeds the degree bound");
  return out;
}

WGraph wgraph(const PolyTable& t) {
  const ExtBlock& b = t.block();
  WGraph g;
  for (int x = 0; x < b.size(); ++x) g.vertices.push_back({x, b.tau(x)});
  for (int lo : b.by_length())
    for (int hi : b.by_length()) {
      if (lo == hi || b.length(lo) > b.length(hi)) continue;
      if (b.length(lo) == b.length(hi) && lo > hi) continue;
      Int m = t.known(lo, hi) ? mu(t, 1, lo, hi) : Int(0);
      bool arrow = false;
      for (int k = 0; k < b.kappa_count(); ++k)
        arrow = arrow || b.is_arrow(lo, hi, k) || b.is_arrow(hi, lo, k);
      if (m != 0 || arrow) g.edges.push_back({lo, hi, m, arrow});
    }
  return g;
}

}  // namespace tklv
