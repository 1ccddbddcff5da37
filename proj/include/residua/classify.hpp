#pragma once

#include "residua/poset.hpp"
#include "residua/witness.hpp"

namespace residua {

/// Definition-2 complementation: L(x,x') = {0}, U(x,x') = {1}, antitone,
/// involutive. Throws UnboundedPoset when 0 or 1 is missing.
Verdict complementation(const StructuredPoset& sp, int threads = 1);

/// x <= y implies y' <= x'.
Verdict antitone(const StructuredPoset& sp, int threads = 1);

/// (x')' = x.
Verdict involution(const StructuredPoset& sp);

/// 1' = 0. Throws UnboundedPoset.
Verdict one_prime_zero(const StructuredPoset& sp);

/// Both displayed distributivity identities, checked over all triples.
PairedVerdict distributivity(const Poset& p, int threads = 1);

/// Both pseudo-Boolean identities, over all pairs.
PairedVerdict pseudo_boolean_identity(const StructuredPoset& sp, int threads = 1);

/// Both pseudo-orthomodular identities, over all pairs.
PairedVerdict pseudo_orthomodular_identity(const StructuredPoset& sp, int threads = 1);

Verdict is_distributive(const Poset& p, int threads = 1);

/// Complementation plus distributivity.
Verdict is_boolean_poset(const StructuredPoset& sp, int threads = 1);

/// Complementation plus the pseudo-Boolean identity.
Verdict is_pseudo_boolean(const StructuredPoset& sp, int threads = 1);

/// Complementation plus the pseudo-orthomodular identity.
Verdict is_pseudo_orthomodular(const StructuredPoset& sp, int threads = 1);

/// Every pair has a join and a meet; witness is a pair lacking one.
Verdict is_lattice(const Poset& p);

/// Lattice + complementation + orthomodular law. Reports false with reason
/// "NotALattice" instead of throwing when joins/meets are missing.
Verdict is_orthomodular_lattice(const StructuredPoset& sp, int threads = 1);

/// Exhaustive check of one of the four element-level residuation conditions;
/// `which` is 1, 2, 7 or 8.
Verdict check_condition(const StructuredPoset& sp, int which, int threads = 1);

struct ClassReport {
  std::vector<std::pair<std::string, Verdict>> entries;

  const Verdict* find(const std::string& key) const {
    for (const auto& [k, v] : entries)
      if (k == key) return &v;
    return nullptr;
  }
};

/// All predicates plus conditions (1),(2),(7),(8) and 1'=0. Predicates that
/// need bounds report holds=false with reason "UnboundedPoset" when the input
/// lacks them.
ClassReport classify_all(const StructuredPoset& sp, int threads = 1);

}  // namespace residua
