#include "residua/poset.hpp"

#include <cstdlib>
#include <set>

namespace residua {

Poset close_and_validate(std::vector<std::string> elements,
                         const std::vector<std::pair<int, int>>& covers, int cap) {
  const int n = static_cast<int>(elements.size());
  if (cap > kMaxCarrier) cap = kMaxCarrier;
  if (n > cap)
    throw Error(ErrorKind::CarrierTooLarge,
                "carrier has " + std::to_string(n) + " elements, cap is " + std::to_string(cap));
  {
    std::set<std::string> seen;
    for (const auto& e : elements)
      if (!seen.insert(e).second)
        throw Error(ErrorKind::DuplicateElement, "element '" + e + "' listed twice");
  }

  Poset p;
  p.elements = std::move(elements);
  p.up.assign(n, 0);
  for (int i = 0; i < n; ++i) p.up[i] = bit(i);
  for (auto [lo, hi] : covers) p.up[lo] |= bit(hi);

  // Warshall closure over the upset masks.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (has(p.up[i], k)) p.up[i] |= p.up[k];

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (has(p.up[i], j) && has(p.up[j], i))
        throw Error(ErrorKind::CycleDetected, "'" + p.elements[i] + "' and '" + p.elements[j] +
                                                  "' are below each other");

  p.down.assign(n, 0);
  for (int i = 0; i < n; ++i)
    for_each_bit(p.up[i], [&](int j) { p.down[j] |= bit(i); });

  const Mask all = p.full();
  for (int i = 0; i < n; ++i) {
    if (p.up[i] == all) p.bottom = i;
    if (p.down[i] == all) p.top = i;
  }
  return p;
}

StructuredPoset validate(const RawPoset& raw, int cap) {
  std::vector<std::pair<int, int>> covers;
  {
    // resolve names against a temporary index
    Poset probe;
    probe.elements = raw.elements;
    for (const auto& [lo, hi] : raw.covers) {
      int a = probe.index(lo);
      int b = probe.index(hi);
      if (a < 0) throw Error(ErrorKind::UnknownElementReference, "cover refers to '" + lo + "'");
      if (b < 0) throw Error(ErrorKind::UnknownElementReference, "cover refers to '" + hi + "'");
      covers.emplace_back(a, b);
    }
  }
  StructuredPoset sp;
  sp.name = raw.name;
  sp.poset = close_and_validate(raw.elements, covers, cap);

  const int n = sp.poset.size();
  sp.op.map.assign(n, -1);
  for (const auto& [from, to] : raw.op) {
    int a = sp.poset.index(from);
    int b = sp.poset.index(to);
    if (a < 0) throw Error(ErrorKind::UnknownElementReference, "op maps unknown '" + from + "'");
    if (b < 0) throw Error(ErrorKind::UnknownElementReference, "op maps to unknown '" + to + "'");
    sp.op.map[a] = b;
  }
  for (int i = 0; i < n; ++i)
    if (sp.op.map[i] < 0)
      throw Error(ErrorKind::OpNotTotal, "op has no image for '" + sp.poset.elements[i] + "'");
  return sp;
}

}  // namespace residua
