#pragma once

#include <functional>
#include <optional>

#include "residua/poset.hpp"

namespace residua {

inline constexpr int kEnumSizeCap = 7;

/// Request for the structure stream: carrier size, predicate names that every
/// emitted structure must satisfy, and whether to dedupe up to isomorphism
/// (isomorphisms are order-isomorphisms commuting with the unary operation).
struct EnumSpec {
  int size = 0;
  std::vector<std::string> require;
  bool canonical = true;
};

/// Names usable in EnumSpec::require and in claims:
///   complementation, antitone-involution, one-prime-zero, distributive,
///   boolean, pseudo-boolean, pseudo-orthomodular, lattice,
///   orthomodular-lattice, cond1, cond2, cond7, cond8
bool eval_predicate(const std::string& name, const StructuredPoset& sp);

const std::vector<std::string>& predicate_names();

/// All bounded posets on `size` labeled elements (element 0 is the bottom,
/// element size-1 the top), one per isomorphism class, ordered by linear
/// extension count then lexicographic order matrix. Throws SizeCapExceeded
/// beyond the hard cap.
std::vector<Poset> enumerate_bounded_posets(int size);

/// Number of linear extensions of p (carrier must fit the cap).
std::uint64_t linear_extension_count(const Poset& p);

/// Order automorphisms of p, as full permutations.
std::vector<std::vector<int>> order_automorphisms(const Poset& p);

/// Streams every structured poset of the requested size satisfying the
/// required predicates, exactly once per (order, ')-isomorphism class, in
/// deterministic order. The visitor returns false to stop early.
void enumerate_structured(const EnumSpec& spec,
                          const std::function<bool(const StructuredPoset&)>& visit);

std::uint64_t count_structured(const EnumSpec& spec);

/// A claim is an implication "antecedent=>consequent" between predicate
/// names, e.g. "pseudo-boolean=>boolean".
struct Claim {
  std::string antecedent;
  std::string consequent;

  static Claim parse(const std::string& text);
  std::string text() const { return antecedent + "=>" + consequent; }
};

/// First structure violating the claim: enumerated sizes 1..max_size (capped
/// at the hard cap) in order, then the supplied fixtures. Returns nullopt
/// when the claim survives.
std::optional<StructuredPoset> find_counterexample(
    const Claim& claim, int max_size,
    const std::vector<StructuredPoset>& fixtures = {});

}  // namespace residua
