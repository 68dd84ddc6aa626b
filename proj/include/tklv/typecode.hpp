#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace tklv {

enum class TypeCode : unsigned char {
  t1Cp, t1Cm, t1i1, t1i2f, t1i2s, t1ic, t1r1f, t1r1s, t1r2, t1rn,
  t2Cp, t2Cm, t2Ci, t2Cr, t2i11, t2i12, t2i22, t2r22, t2r21, t2r11, t2rn, t2ic,
  t3Cp, t3Cm, t3Ci, t3Cr, t3i, t3r, t3rn, t3ic,
};

inline constexpr int kTypeCount = 30;

// Fixed attributes of a type code.
struct TypeInfo {
  std::string_view name;
  int length;        // length of w_kappa
  bool descent;      // kappa in tau(gamma)
  int cayley_count;  // number of Cayley partners
  bool moves;        // cross action moves gamma
  int defect;
  int zeta;          // meaningful for descents only
};

const TypeInfo& info(TypeCode t);
std::string_view name(TypeCode t);
std::optional<TypeCode> parse_type(std::string_view s);
const std::array<TypeCode, kTypeCount>& all_types();

// Cayley partner type: 1i1 <-> 1r1f and so on; nullopt when there is none.
std::optional<TypeCode> cayley_partner_type(TypeCode t);
// C+ <-> C-; any other moving type keeps its type under the cross action.
TypeCode cross_partner_type(TypeCode t);

inline bool is_complex(TypeCode t) {
  using enum TypeCode;
  return t == t1Cp || t == t1Cm || t == t2Cp || t == t2Cm || t == t3Cp || t == t3Cm;
}
inline bool is_paired_ordered(TypeCode t) {
  return t == TypeCode::t2i12 || t == TypeCode::t2r21;
}
// ascents whose T-image is -a: no kappa-arrow ends at them
inline bool is_nonparity_ascent(TypeCode t) {
  using enum TypeCode;
  return t == t1i2s || t == t1rn || t == t2rn || t == t3rn;
}
// descents with no kappa-arrow leaving them
inline bool is_compact_descent(TypeCode t) {
  using enum TypeCode;
  return t == t1ic || t == t2ic || t == t3ic || t == t1r1s;
}

}  // namespace tklv
