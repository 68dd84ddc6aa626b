#include <tklv/errors.hpp>
#include <tklv/extblock.hpp>

#include <json.hpp>

#include <fstream>
#include <initializer_list>
#include <sstream>

namespace tklv {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& msg) {
  throw ValidationError(where + ": " + msg);
}

void only_fields(const json& j, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) bad(where, "expected an object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) bad(where, "unknown field '" + key + "'");
  }
}

const json& need(const json& j, const std::string& where, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) bad(where, std::string("missing field '") + key + "'");
  return *it;
}

int as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where, "expected an integer");
  return j.get<int>();
}

std::vector<int> as_ints(const json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array");
  std::vector<int> out;
  for (size_t i = 0; i < j.size(); ++i) out.push_back(as_int(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::array<int, 2> as_pair(const json& j, const std::string& where) {
  auto v = as_ints(j, where);
  if (v.size() != 2) bad(where, "expected two ids");
  return {v[0], v[1]};
}

KappaDescriptor parse_descriptor(const json& j, const std::string& where) {
  only_fields(j, where, {"type", "cross", "cayley", "pair_slot"});
  KappaDescriptor d;
  const json& t = need(j, where, "type");
  if (!t.is_string()) bad(where + ".type", "expected a string");
  auto code = parse_type(t.get<std::string>());
  if (!code) bad(where + ".type", "unknown type code '" + t.get<std::string>() + "'");
  d.type = *code;
  d.cross = as_int(need(j, where, "cross"), where + ".cross");
  d.cayley = as_ints(need(j, where, "cayley"), where + ".cayley");
  if (j.contains("pair_slot") && !j["pair_slot"].is_null())
    d.pair_slot = as_int(j["pair_slot"], where + ".pair_slot");
  return d;
}

}  // namespace

RawBlock parse_block_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
  only_fields(j, "block", {"name", "kappas", "folded_coxeter", "parameters", "ordered_pairs"});
  RawBlock raw;
  const json& nm = need(j, "block", "name");
  if (!nm.is_string()) bad("name", "expected a string");
  raw.name = nm.get<std::string>();

  const json& ks = need(j, "block", "kappas");
  if (!ks.is_array()) bad("kappas", "expected an array");
  for (size_t i = 0; i < ks.size(); ++i) {
    std::string w = "kappas[" + std::to_string(i) + "]";
    only_fields(ks[i], w, {"id", "length"});
    raw.kappas.push_back({as_int(need(ks[i], w, "id"), w + ".id"),
                          as_int(need(ks[i], w, "length"), w + ".length")});
  }

  const json& cox = need(j, "block", "folded_coxeter");
  if (!cox.is_array()) bad("folded_coxeter", "expected an array of rows");
  for (size_t i = 0; i < cox.size(); ++i)
    raw.folded_coxeter.push_back(as_ints(cox[i], "folded_coxeter[" + std::to_string(i) + "]"));

  const json& ps = need(j, "block", "parameters");
  if (!ps.is_array()) bad("parameters", "expected an array");
  for (size_t i = 0; i < ps.size(); ++i) {
    std::string w = "parameters[" + std::to_string(i) + "]";
    only_fields(ps[i], w, {"id", "length", "kappa_data"});
    Parameter p;
    p.id = as_int(need(ps[i], w, "id"), w + ".id");
    p.length = as_int(need(ps[i], w, "length"), w + ".length");
    const json& kd = need(ps[i], w, "kappa_data");
    if (!kd.is_array()) bad(w + ".kappa_data", "expected an array");
    for (size_t k = 0; k < kd.size(); ++k)
      p.kappa_data.push_back(parse_descriptor(kd[k], w + ".kappa_data[" + std::to_string(k) + "]"));
    raw.parameters.push_back(std::move(p));
  }

  if (j.contains("ordered_pairs")) {
    const json& ops = j["ordered_pairs"];
    if (!ops.is_array()) bad("ordered_pairs", "expected an array");
    for (size_t i = 0; i < ops.size(); ++i) {
      std::string w = "ordered_pairs[" + std::to_string(i) + "]";
      only_fields(ops[i], w, {"kappa", "source_pair", "target_pair"});
      OrderedPair op;
      op.kappa = as_int(need(ops[i], w, "kappa"), w + ".kappa");
      op.source_pair = as_pair(need(ops[i], w, "source_pair"), w + ".source_pair");
      op.target_pair = as_pair(need(ops[i], w, "target_pair"), w + ".target_pair");
      raw.ordered_pairs.push_back(op);
    }
  }
  return raw;
}

RawBlock load_block_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open block file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_block_json(ss.str());
}

std::string block_to_json(const RawBlock& raw) {
  json j;
  j["name"] = raw.name;
  j["kappas"] = json::array();
  for (const Kappa& k : raw.kappas) j["kappas"].push_back({{"id", k.id}, {"length", k.length}});
  j["folded_coxeter"] = raw.folded_coxeter;
  j["parameters"] = json::array();
  for (const Parameter& p : raw.parameters) {
    json kd = json::array();
    for (const KappaDescriptor& d : p.kappa_data) {
      json e{{"type", std::string(name(d.type))}, {"cross", d.cross}, {"cayley", d.cayley}};
      if (d.pair_slot) e["pair_slot"] = *d.pair_slot;
      kd.push_back(e);
    }
    j["parameters"].push_back({{"id", p.id}, {"length", p.length}, {"kappa_data", kd}});
  }
  j["ordered_pairs"] = json::array();
  for (const OrderedPair& op : raw.ordered_pairs)
    j["ordered_pairs"].push_back(
        {{"kappa", op.kappa}, {"source_pair", op.source_pair}, {"target_pair", op.target_pair}});
  return j.dump(2);
}

}  // namespace tklv
