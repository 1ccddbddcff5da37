#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "residua/bitset.hpp"
#include "residua/errors.hpp"

namespace residua {

/// Finite poset given by its full order relation. `up[i]` is the principal
/// upset of element i as a bitmask, `down[i]` the principal downset; both are
/// derived from the reflexive-transitive closure of the input covers.
/// Immutable after construction.
struct Poset {
  std::vector<std::string> elements;
  std::vector<Mask> up;
  std::vector<Mask> down;
  int bottom = -1;  // -1 when absent
  int top = -1;

  int size() const { return static_cast<int>(elements.size()); }
  Mask full() const { return full_mask(size()); }
  bool leq(int i, int j) const { return has(up[i], j); }
  bool bounded() const { return bottom >= 0 && top >= 0; }

  /// Common lower bounds of a subset; the empty subset yields all of P.
  Mask lower(Mask s) const {
    Mask r = full();
    for_each_bit(s, [&](int i) { r &= down[i]; });
    return r;
  }

  /// Common upper bounds, dual to lower().
  Mask upper(Mask s) const {
    Mask r = full();
    for_each_bit(s, [&](int i) { r &= up[i]; });
    return r;
  }

  /// Least element of s, or -1 when none exists.
  int least_of(Mask s) const {
    int best = -1;
    for_each_bit(s, [&](int i) {
      if (subseteq(s, up[i])) best = (best == -1) ? i : best;
    });
    return best;
  }

  /// Greatest element of s, or -1.
  int greatest_of(Mask s) const {
    int best = -1;
    for_each_bit(s, [&](int i) {
      if (subseteq(s, down[i])) best = (best == -1) ? i : best;
    });
    return best;
  }

  int join(int x, int y) const { return least_of(up[x] & up[y]); }
  int meet(int x, int y) const { return greatest_of(down[x] & down[y]); }

  int index(std::string_view name) const {
    for (int i = 0; i < size(); ++i)
      if (elements[i] == name) return i;
    return -1;
  }

  std::vector<std::string> names(Mask s) const {
    std::vector<std::string> out;
    for_each_bit(s, [&](int i) { out.push_back(elements[i]); });
    return out;
  }
};

/// A total self-map on the carrier. No algebraic law is assumed here;
/// antitonicity, involutivity and complementation are checked downstream.
struct UnaryOp {
  std::vector<int> map;

  int operator()(int i) const { return map[i]; }

  /// Elementwise image of a subset.
  Mask image(Mask s) const {
    Mask r = 0;
    for_each_bit(s, [&](int i) { r |= bit(map[i]); });
    return r;
  }
};

struct StructuredPoset {
  std::string name;
  Poset poset;
  UnaryOp op;
};

/// Unvalidated input as read from a poset file.
struct RawPoset {
  std::string name;
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;  // [lower, upper]
  std::vector<std::pair<std::string, std::string>> op;
};

/// Builds the order from covers: reflexive-transitive closure, antisymmetry
/// check, bottom/top detection. Throws Error on bad input.
Poset close_and_validate(std::vector<std::string> elements,
                         const std::vector<std::pair<int, int>>& covers,
                         int cap = kMaxCarrier);

/// Full validation of a raw description, including the unary operation.
StructuredPoset validate(const RawPoset& raw, int cap = kMaxCarrier);

}  // namespace residua
