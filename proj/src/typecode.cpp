#include <tklv/typecode.hpp>

namespace tklv {

namespace {

using enum TypeCode;

// order matches the enum
constexpr std::array<TypeInfo, kTypeCount> kInfo{{
    {"1C+", 1, false, 0, true, 0, 0},
    {"1C-", 1, true, 0, true, 0, 0},
    {"1i1", 1, false, 1, true, 0, 0},
    {"1i2f", 1, false, 2, false, 0, 0},
    {"1i2s", 1, false, 0, false, 0, 0},
    {"1ic", 1, true, 0, false, 0, 1},
    {"1r1f", 1, true, 2, false, 0, -1},
    {"1r1s", 1, true, 0, false, 0, 1},
    {"1r2", 1, true, 1, true, 0, -1},
    {"1rn", 1, false, 0, false, 0, 0},
    {"2C+", 2, false, 0, true, 0, 0},
    {"2C-", 2, true, 0, true, 0, 0},
    {"2Ci", 2, false, 1, false, 1, 0},
    {"2Cr", 2, true, 1, false, 1, -1},
    {"2i11", 2, false, 1, true, 0, 0},
    {"2i12", 2, false, 2, false, 0, 0},
    {"2i22", 2, false, 2, false, 0, 0},
    {"2r22", 2, true, 1, true, 0, -1},
    {"2r21", 2, true, 2, false, 0, -1},
    {"2r11", 2, true, 2, false, 0, -1},
    {"2rn", 2, false, 0, false, 0, 0},
    {"2ic", 2, true, 0, false, 0, 1},
    {"3C+", 3, false, 0, true, 0, 0},
    {"3C-", 3, true, 0, true, 0, 0},
    {"3Ci", 3, false, 1, false, 1, 0},
    {"3Cr", 3, true, 1, false, 1, -1},
    {"3i", 3, false, 1, false, 1, 0},
    {"3r", 3, true, 1, false, 1, -1},
    {"3rn", 3, false, 0, false, 0, 0},
    {"3ic", 3, true, 0, false, 0, 1},
}};

constexpr std::array<TypeCode, kTypeCount> kAll{
    t1Cp, t1Cm, t1i1, t1i2f, t1i2s, t1ic, t1r1f, t1r1s, t1r2, t1rn,
    t2Cp, t2Cm, t2Ci, t2Cr, t2i11, t2i12, t2i22, t2r22, t2r21, t2r11, t2rn, t2ic,
    t3Cp, t3Cm, t3Ci, t3Cr, t3i, t3r, t3rn, t3ic,
};

}  // namespace

const TypeInfo& info(TypeCode t) { return kInfo[static_cast<int>(t)]; }
std::string_view name(TypeCode t) { return info(t).name; }
const std::array<TypeCode, kTypeCount>& all_types() { return kAll; }

std::optional<TypeCode> parse_type(std::string_view s) {
  for (TypeCode t : kAll)
    if (info(t).name == s) return t;
  return std::nullopt;
}

std::optional<TypeCode> cayley_partner_type(TypeCode t) {
  switch (t) {
    case t1i1: return t1r1f;
    case t1r1f: return t1i1;
    case t1i2f: return t1r2;
    case t1r2: return t1i2f;
    case t2Ci: return t2Cr;
    case t2Cr: return t2Ci;
    case t2i11: return t2r11;
    case t2r11: return t2i11;
    case t2i12: return t2r21;
    case t2r21: return t2i12;
    case t2i22: return t2r22;
    case t2r22: return t2i22;
    case t3Ci: return t3Cr;
    case t3Cr: return t3Ci;
    case t3i: return t3r;
    case t3r: return t3i;
    default: return std::nullopt;
  }
}

TypeCode cross_partner_type(TypeCode t) {
  switch (t) {
    case t1Cp: return t1Cm;
    case t1Cm: return t1Cp;
    case t2Cp: return t2Cm;
    case t2Cm: return t2Cp;
    case t3Cp: return t3Cm;
    case t3Cm: return t3Cp;
    default: return t;
  }
}

}  // namespace tklv
