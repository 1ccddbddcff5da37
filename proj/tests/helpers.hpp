#pragma once

#include <random>
#include <string>

#include "residua/io.hpp"
#include "residua/poset.hpp"

namespace testutil {

using residua::Mask;
using residua::Poset;
using residua::StructuredPoset;

inline StructuredPoset fixture(const std::string& name) {
  return residua::validate(
      residua::load_poset_file(std::string(RESIDUA_FIXTURE_DIR) + "/" + name + ".json"));
}

// Independent oracle: scan every candidate against the closed order matrix,
// one leq() query at a time. Deliberately ignorant of the bitmask cone path.
inline Mask oracle_lower(const Poset& p, Mask s) {
  Mask r = 0;
  for (int q = 0; q < p.size(); ++q) {
    bool below_all = true;
    for (int x = 0; x < p.size(); ++x)
      if (residua::has(s, x) && !p.leq(q, x)) below_all = false;
    if (below_all) r |= residua::bit(q);
  }
  return r;
}

inline Mask oracle_upper(const Poset& p, Mask s) {
  Mask r = 0;
  for (int q = 0; q < p.size(); ++q) {
    bool above_all = true;
    for (int x = 0; x < p.size(); ++x)
      if (residua::has(s, x) && !p.leq(x, q)) above_all = false;
    if (above_all) r |= residua::bit(q);
  }
  return r;
}

inline int idx(const StructuredPoset& sp, const std::string& name) {
  int i = sp.poset.index(name);
  REQUIRE(i >= 0);
  return i;
}

inline Mask msk(const StructuredPoset& sp, std::initializer_list<const char*> names) {
  Mask m = 0;
  for (const char* n : names) m |= residua::bit(idx(sp, n));
  return m;
}

inline std::mt19937 rng(unsigned seed = 12345) { return std::mt19937(seed); }

}  // namespace testutil
