#include "doctest.h"

#include "blocks.hpp"
#include "oracle.hpp"

#include <tklv/errors.hpp>
#include <tklv/klv.hpp>

using namespace tklv;

namespace {
RawBlock fixture(const std::string& name) { return load_block_file(std::string(FIXTURE_DIR) + "/" + name); }
}  // namespace

TEST_CASE("oracle on B1: every nonzero entry is 1 in u") {
  ExtBlock b = validate(fixture("B1.json"));
  auto basis = oracle::canonical_basis(b);
  CHECK(basis[2].get(0) == LaurentPoly::v_pow(-1));
  CHECK(basis[2].get(1) == LaurentPoly::v_pow(-1));
  CHECK(basis[0] == ModuleVector::basis(0));
  PolyTable t = compute_all(b);
  CHECK(oracle::compare(t, basis).empty());
}

TEST_CASE("oracle scope") {
  CHECK(oracle::supported(validate(fixture("B1.json"))));
  CHECK(oracle::supported(validate(fixture("B5.json"))));
  CHECK(oracle::supported(validate(testblocks::A4_twisted())));
  std::string why;
  CHECK_FALSE(oracle::supported(validate(fixture("B2.json")), &why));
  CHECK(why.find("1i2s") != std::string::npos);
  CHECK_FALSE(oracle::supported(validate(fixture("B3.json"))));
  CHECK_THROWS_AS(oracle::canonical_basis(validate(fixture("B2.json"))), Error);
}

TEST_CASE("oracle agrees with the recursion") {
  using namespace testblocks;
  std::vector<RawBlock> blocks{fixture("B1.json"), fixture("B4.json"), fixture("B5.json"), A(1), A(2), A(3),
                               A2_twisted(), A3_twisted(), A4_twisted(), product(motif_block("i2f"), A(1)),
                               product(motif_block("i1"), motif_block("i2f")), product(A(2), A(1))};
  for (const auto& raw : blocks) {
    ExtBlock b = validate(raw);
    auto mism = oracle::compare(compute_all(b), oracle::canonical_basis(b));
    CHECK_MESSAGE(mism.empty(), raw.name);
  }
}

TEST_CASE("oracle notices a wrong table") {
  ExtBlock b = validate(fixture("B1.json"));
  PolyTable t(b);
  t.set(0, 2, LaurentPoly::v_pow(-1));
  t.set(1, 2, LaurentPoly::v_pow(-3));
  auto mism = oracle::compare(t, oracle::canonical_basis(b));
  bool found = false;
  for (const auto& m : mism) {
    CHECK_FALSE((m.gamma == 0 && m.delta == 2));
    if (m.gamma == 1 && m.delta == 2) found = m.got == "v^-3";
  }
  CHECK(found);
}
