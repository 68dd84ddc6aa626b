#include "report.hpp"

#include "oracle.hpp"

#include <tklv/errors.hpp>
#include <tklv/extblock.hpp>
#include <tklv/hecke.hpp>
#include <tklv/klv.hpp>

#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace tklv {

namespace {

using Json = nlohmann::ordered_json;

struct Outcome {
  int code = kExitOk;
  Json results = Json::object();
  std::ostringstream text;
};

std::string tau_text(const std::vector<int>& tau) {
  std::string s = "{";
  for (size_t i = 0; i < tau.size(); ++i) s += (i ? "," : "") + std::to_string(tau[i]);
  return s + "}";
}

std::optional<std::string> classical_text(const PolyTable& t, int g, int d) {
  try {
    return to_string(to_classical(t, g, d), "u");
  } catch (const Error&) {
    return std::nullopt;
  }
}

void do_validate(const ExtBlock& b, Outcome& o) {
  auto warnings = flip_table_warnings(b);
  o.results["valid"] = true;
  o.results["parameters"] = b.size();
  o.results["kappas"] = b.kappa_count();
  o.results["warnings"] = warnings;
  o.text << "block " << b.name() << ": valid (" << b.size() << " parameters, " << b.kappa_count()
         << " kappas)\n";
  for (const auto& w : warnings) o.text << "warning: " << w << "\n";
}

void do_hecke(const ExtBlock& b, bool braid, Outcome& o) {
  Json quad = Json::array();
  for (int k = 0; k < b.kappa_count(); ++k) {
    RelationReport r = check_quadratic(b, k);
    quad.push_back({{"kappa", k}, {"pass", r.pass}, {"detail", r.detail}});
    o.text << "quadratic kappa " << k << ": " << (r.pass ? "pass" : "FAIL " + r.detail) << "\n";
    if (!r.pass) o.code = kExitRelation;
  }
  o.results["quadratic"] = quad;
  if (!braid) return;
  Json br = Json::array();
  for (int k1 = 0; k1 < b.kappa_count(); ++k1)
    for (int k2 = k1 + 1; k2 < b.kappa_count(); ++k2) {
      RelationReport r = check_braid(b, k1, k2);
      int m = b.coxeter(k1, k2);
      br.push_back({{"kappa1", k1}, {"kappa2", k2}, {"m", m}, {"pass", r.pass}, {"detail", r.detail}});
      o.text << "braid kappa " << k1 << ", kappa " << k2 << " (m=" << m << "): "
             << (r.pass ? "pass" : "FAIL " + r.detail) << "\n";
      if (!r.pass) o.code = kExitRelation;
    }
  o.results["braid"] = br;
}

void verify_into(const PolyTable& t, Outcome& o) {
  auto eigen = verify_eigen(t), decomp = verify_decomp(t), support = verify_support(t);
  bool pass = eigen.empty() && decomp.empty() && support.empty();
  o.results["verify"] = {{"pass", pass}, {"eigen", eigen}, {"decomp", decomp}, {"support", support}};
  o.text << "verify: eigen " << (eigen.empty() ? "pass" : "FAIL") << ", decomp "
         << (decomp.empty() ? "pass" : "FAIL") << ", support " << (support.empty() ? "pass" : "FAIL") << "\n";
  for (const auto* list : {&eigen, &decomp, &support})
    for (const auto& f : *list) o.text << "  " << f << "\n";
  if (!pass) o.code = kExitRelation;
}

void do_compute(const ExtBlock& b, const RunConfig& cfg, Outcome& o) {
  PolyTable t = compute_all(b);
  Json rows = Json::array();
  const int unresolved = t.unresolved_count();
  o.text << "block " << b.name() << ": " << b.size() << " parameters, " << unresolved << " unresolved\n";
  o.text << "gamma delta " << (cfg.u_form ? "P(u)" : "P(v)") << " status\n";
  for (int d = 0; d < b.size(); ++d)
    for (int g = 0; g < b.size(); ++g) {
      if (g != d && !b.leq(g, d)) continue;
      Json row{{"gamma", g}, {"delta", d}};
      if (t.known(g, d)) {
        std::string pv = to_string(t.get(g, d));
        auto pu = classical_text(t, g, d);
        row["poly_v"] = pv;
        row["poly_u"] = pu ? Json(*pu) : Json(nullptr);
        row["status"] = "exact";
        o.text << g << " " << d << " " << (cfg.u_form ? pu.value_or("?") : pv) << " exact\n";
      } else {
        row["poly_v"] = nullptr;
        row["poly_u"] = nullptr;
        row["status"] = "unresolved";
        row["note"] = t.note(g, d);
        o.text << g << " " << d << " - unresolved (" << t.note(g, d) << ")\n";
      }
      rows.push_back(row);
    }
  o.results["unresolved"] = unresolved;
  o.results["rows"] = rows;
  if (cfg.verify) verify_into(t, o);
  if (cfg.strict && unresolved > 0 && o.code == kExitOk) o.code = kExitUnresolved;
}

void do_wgraph(const ExtBlock& b, Outcome& o) {
  PolyTable t = compute_all(b);
  WGraph g = wgraph(t);
  Json vs = Json::array(), es = Json::array();
  for (const auto& v : g.vertices) {
    vs.push_back({{"id", v.id}, {"tau", v.tau}});
    o.text << "vertex " << v.id << " tau " << tau_text(v.tau) << "\n";
  }
  for (const auto& e : g.edges) {
    es.push_back({{"from", e.from}, {"to", e.to}, {"mu", e.mu.str()}, {"arrow", e.arrow}});
    o.text << "edge " << e.from << " - " << e.to << " mu " << e.mu << (e.arrow ? " arrow" : "") << "\n";
  }
  o.results["vertices"] = vs;
  o.results["edges"] = es;
  if (t.unresolved_count() > 0) o.text << "note: " << t.unresolved_count() << " entries unresolved\n";
}

void do_oracle(const ExtBlock& b, Outcome& o) {
  std::vector<ModuleVector> basis;
  try {
    basis = oracle::canonical_basis(b);
  } catch (const Error& e) {
    o.results["supported"] = false;
    o.results["detail"] = e.what();
    o.text << e.what() << "\n";
    o.code = kExitOracle;
    return;
  }
  PolyTable t = compute_all(b);
  auto mism = oracle::compare(t, basis);
  Json ms = Json::array();
  for (const auto& m : mism)
    ms.push_back({{"gamma", m.gamma}, {"delta", m.delta}, {"expected", to_string(m.expected)}, {"got", m.got}});
  o.results["supported"] = true;
  o.results["entries"] = b.size() * b.size();
  o.results["mismatches"] = ms;
  o.text << "oracle: " << b.size() * b.size() << " entries compared, " << mism.size() << " mismatches\n";
  for (const auto& m : mism)
    o.text << "  P(" << m.gamma << "," << m.delta << "): expected " << to_string(m.expected) << ", got " << m.got
           << "\n";
  if (!mism.empty()) o.code = kExitOracle;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Outcome o;
  std::string block_name;
  try {
    RawBlock raw = load_block_file(cfg.input);
    block_name = raw.name;
    ExtBlock b = validate(raw);
    switch (cfg.command) {
      case Command::Validate: do_validate(b, o); break;
      case Command::HeckeCheck: do_hecke(b, cfg.braid, o); break;
      case Command::Compute: do_compute(b, cfg, o); break;
      case Command::WGraph: do_wgraph(b, o); break;
      case Command::OracleCompare: do_oracle(b, o); break;
    }
  } catch (const ValidationError& e) {
    o = Outcome();
    o.code = kExitInvalid;
    o.results["valid"] = false;
    o.results["error"] = e.what();
    o.results["parameter"] = e.parameter;
    o.results["kappa"] = e.kappa;
    o.text << "invalid: " << e.what() << "\n";
  } catch (const RecursionError& e) {
    o = Outcome();
    o.code = kExitRelation;
    o.results["error"] = e.what();
    o.text << "recursion error: " << e.what() << "\n";
  }

  std::string body;
  if (cfg.json) {
    Json env{{"schema_version", kSchemaVersion},
             {"block_name", block_name.empty() ? Json(nullptr) : Json(block_name)},
             {"results", o.results}};
    body = env.dump(2) + "\n";
  } else {
    body = o.text.str();
  }
  if (cfg.output.empty()) {
    out << body;
  } else {
    std::ofstream f(cfg.output, std::ios::binary);
    if (!f) {
      err << "cannot write " << cfg.output << "\n";
      return kExitInvalid;
    }
    f << body;
  }
  return o.code;
}

}  // namespace tklv
