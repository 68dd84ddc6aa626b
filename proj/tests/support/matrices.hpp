#pragma once

#include <tklv/hecke.hpp>
#include <tklv/laurent.hpp>

namespace testblocks {

// The two 3x3 operators on the pre-quotient spaces, in q = u = v^2.
// pair_matrix: double Cayley with both partners fixed, one imaginary and two
// real parameters.  single_matrix: two imaginary parameters, one real.
inline tklv::OperatorMatrix pair_matrix() {
  using tklv::LaurentPoly;
  const LaurentPoly one(1), q = LaurentPoly::v_pow(2), qm1 = q - one;
  return tklv::OperatorMatrix::from_rows({{one, qm1, qm1}, {one, qm1, -one}, {one, -one, qm1}});
}

inline tklv::OperatorMatrix single_matrix() {
  using tklv::LaurentPoly;
  const LaurentPoly zero, one(1), q = LaurentPoly::v_pow(2);
  return tklv::OperatorMatrix::from_rows({{zero, one, q - one}, {one, zero, q - one}, {one, one, q - one - one}});
}

}  // namespace testblocks
