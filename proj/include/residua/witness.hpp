#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "residua/bitset.hpp"

namespace residua {

/// Counterexample record: the variable assignment instantiating a failed
/// identity, plus the fully evaluated sets on each side. Elements and sets are
/// stored as indices/masks; name resolution happens at report time.
struct Witness {
  std::vector<std::pair<std::string, int>> assignment;   // variable -> element index
  std::vector<std::pair<std::string, Mask>> sets;        // label -> evaluated subset
};

struct Verdict {
  bool holds = true;
  std::optional<Witness> witness;
  std::string reason;  // e.g. "NotALattice"; empty when not applicable

  static Verdict ok() { return {}; }
  static Verdict fail(Witness w, std::string why = "") {
    return Verdict{false, std::move(w), std::move(why)};
  }
};

/// Result of checking both displayed forms of an identity that come as an
/// equivalent pair (equivalent under complementation).
struct PairedVerdict {
  Verdict first;
  Verdict second;
  bool agree() const { return first.holds == second.holds; }
};

}  // namespace residua
