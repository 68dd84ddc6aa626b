#pragma once

// Brute-force canonical basis for untwisted-style blocks, kept separate from
// the recursion engine so the two can be compared.

#include <tklv/extblock.hpp>
#include <tklv/hecke.hpp>
#include <tklv/klv.hpp>

#include <string>
#include <vector>

namespace tklv::oracle {

// Supported: length-1 kappas of the classical types (no 1i2s, 1r1s) plus
// complex types of any length.  why receives the first obstacle.
bool supported(const ExtBlock& b, std::string* why = nullptr);

// C-hat_delta for every delta, in the normalized basis.  Throws Error when
// a column has no usable descent.
std::vector<ModuleVector> canonical_basis(const ExtBlock& b);

struct Mismatch {
  int gamma;
  int delta;
  LaurentPoly expected;
  std::string got;  // rendered engine value, or "unresolved"
};

std::vector<Mismatch> compare(const PolyTable& t, const std::vector<ModuleVector>& basis);

}  // namespace tklv::oracle
