#include "residua/classify.hpp"

#include "residua/parallel.hpp"

namespace residua {

namespace {

using OptW = std::optional<Witness>;

Witness make_witness(std::initializer_list<std::pair<const char*, int>> vars,
                     std::initializer_list<std::pair<const char*, Mask>> sets) {
  Witness w;
  for (auto& [k, v] : vars) w.assignment.emplace_back(k, v);
  for (auto& [k, v] : sets) w.sets.emplace_back(k, v);
  return w;
}

void require_bounded(const Poset& p) {
  if (!p.bounded()) throw Error(ErrorKind::UnboundedPoset, "predicate needs 0 and 1");
}

Verdict from_scan(OptW w) { return w ? Verdict::fail(std::move(*w)) : Verdict::ok(); }

}  // namespace

Verdict antitone(const StructuredPoset& sp, int threads) {
  const Poset& p = sp.poset;
  const UnaryOp& f = sp.op;
  return from_scan(scan_first(p.size(), threads, [&](int x) -> OptW {
    for (int y = 0; y < p.size(); ++y)
      if (p.leq(x, y) && !p.leq(f(y), f(x)))
        return make_witness({{"x", x}, {"y", y}},
                            {{"x'", bit(f(x))}, {"y'", bit(f(y))}});
    return std::nullopt;
  }));
}

Verdict involution(const StructuredPoset& sp) {
  const UnaryOp& f = sp.op;
  for (int x = 0; x < sp.poset.size(); ++x)
    if (f(f(x)) != x)
      return Verdict::fail(make_witness({{"x", x}}, {{"(x')'", bit(f(f(x)))}}));
  return Verdict::ok();
}

Verdict one_prime_zero(const StructuredPoset& sp) {
  require_bounded(sp.poset);
  if (sp.op(sp.poset.top) != sp.poset.bottom)
    return Verdict::fail(
        make_witness({{"1", sp.poset.top}}, {{"1'", bit(sp.op(sp.poset.top))}}));
  return Verdict::ok();
}

Verdict complementation(const StructuredPoset& sp, int threads) {
  const Poset& p = sp.poset;
  const UnaryOp& f = sp.op;
  require_bounded(p);
  for (int x = 0; x < p.size(); ++x) {
    Mask lo = p.down[x] & p.down[f(x)];
    Mask hi = p.up[x] & p.up[f(x)];
    if (lo != bit(p.bottom) || hi != bit(p.top))
      return Verdict::fail(
          make_witness({{"x", x}}, {{"L(x,x')", lo}, {"U(x,x')", hi}}));
  }
  if (Verdict v = involution(sp); !v.holds) return v;
  return antitone(sp, threads);
}

PairedVerdict distributivity(const Poset& p, int threads) {
  const int n = p.size();
  auto first = scan_first(n, threads, [&](int x) -> OptW {
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        Mask lhs = p.lower(p.up[x] & p.up[y]) & p.down[z];
        Mask rhs = p.lower(p.upper((p.down[x] & p.down[z]) | (p.down[y] & p.down[z])));
        if (lhs != rhs)
          return make_witness({{"x", x}, {"y", y}, {"z", z}},
                              {{"L(U(x,y),z)", lhs}, {"L(U(L(x,z),L(y,z)))", rhs}});
      }
    return std::nullopt;
  });
  auto second = scan_first(n, threads, [&](int x) -> OptW {
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        Mask lhs = p.upper(p.down[x] & p.down[y]) & p.up[z];
        Mask rhs = p.upper(p.lower((p.up[x] & p.up[z]) | (p.up[y] & p.up[z])));
        if (lhs != rhs)
          return make_witness({{"x", x}, {"y", y}, {"z", z}},
                              {{"U(L(x,y),z)", lhs}, {"U(L(U(x,z),U(y,z)))", rhs}});
      }
    return std::nullopt;
  });
  return {from_scan(std::move(first)), from_scan(std::move(second))};
}

PairedVerdict pseudo_boolean_identity(const StructuredPoset& sp, int threads) {
  const Poset& p = sp.poset;
  const UnaryOp& f = sp.op;
  const int n = p.size();
  auto first = scan_first(n, threads, [&](int x) -> OptW {
    for (int y = 0; y < n; ++y) {
      Mask lhs = p.lower(p.up[x] & p.up[y]) & p.down[f(y)];
      Mask rhs = p.down[x] & p.down[f(y)];
      if (lhs != rhs)
        return make_witness({{"x", x}, {"y", y}},
                            {{"L(U(x,y),y')", lhs}, {"L(x,y')", rhs}});
    }
    return std::nullopt;
  });
  auto second = scan_first(n, threads, [&](int x) -> OptW {
    for (int y = 0; y < n; ++y) {
      Mask lhs = p.upper(p.down[x] & p.down[y]) & p.up[f(y)];
      Mask rhs = p.up[x] & p.up[f(y)];
      if (lhs != rhs)
        return make_witness({{"x", x}, {"y", y}},
                            {{"U(L(x,y),y')", lhs}, {"U(x,y')", rhs}});
    }
    return std::nullopt;
  });
  return {from_scan(std::move(first)), from_scan(std::move(second))};
}

PairedVerdict pseudo_orthomodular_identity(const StructuredPoset& sp, int threads) {
  const Poset& p = sp.poset;
  const UnaryOp& f = sp.op;
  const int n = p.size();
  auto first = scan_first(n, threads, [&](int x) -> OptW {
    for (int y = 0; y < n; ++y) {
      Mask lhs = p.lower(p.upper(p.down[x] & p.down[y]) & p.up[f(y)]) & p.down[y];
      Mask rhs = p.down[x] & p.down[y];
      if (lhs != rhs)
        return make_witness({{"x", x}, {"y", y}},
                            {{"L(U(L(x,y),y'),y)", lhs}, {"L(x,y)", rhs}});
    }
    return std::nullopt;
  });
  auto second = scan_first(n, threads, [&](int x) -> OptW {
    for (int y = 0; y < n; ++y) {
      Mask lhs = p.upper(p.lower(p.up[x] & p.up[y]) & p.down[f(y)]) & p.up[y];
      Mask rhs = p.up[x] & p.up[y];
      if (lhs != rhs)
        return make_witness({{"x", x}, {"y", y}},
                            {{"U(L(U(x,y),y'),y)", lhs}, {"U(x,y)", rhs}});
    }
    return std::nullopt;
  });
  return {from_scan(std::move(first)), from_scan(std::move(second))};
}

Verdict is_distributive(const Poset& p, int threads) {
  return distributivity(p, threads).first;
}

Verdict is_boolean_poset(const StructuredPoset& sp, int threads) {
  Verdict c = complementation(sp, threads);
  if (!c.holds) return c;
  return is_distributive(sp.poset, threads);
}

Verdict is_pseudo_boolean(const StructuredPoset& sp, int threads) {
  Verdict c = complementation(sp, threads);
  if (!c.holds) return c;
  return pseudo_boolean_identity(sp, threads).first;
}

Verdict is_pseudo_orthomodular(const StructuredPoset& sp, int threads) {
  Verdict c = complementation(sp, threads);
  if (!c.holds) return c;
  return pseudo_orthomodular_identity(sp, threads).first;
}

Verdict is_lattice(const Poset& p) {
  const int n = p.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (p.least_of(p.up[x] & p.up[y]) < 0)
        return Verdict::fail(
            make_witness({{"x", x}, {"y", y}}, {{"U(x,y)", p.up[x] & p.up[y]}}),
            "NoJoin");
      if (p.greatest_of(p.down[x] & p.down[y]) < 0)
        return Verdict::fail(
            make_witness({{"x", x}, {"y", y}}, {{"L(x,y)", p.down[x] & p.down[y]}}),
            "NoMeet");
    }
  return Verdict::ok();
}

Verdict is_orthomodular_lattice(const StructuredPoset& sp, int threads) {
  const Poset& p = sp.poset;
  const UnaryOp& f = sp.op;
  if (Verdict lat = is_lattice(p); !lat.holds) {
    lat.reason = "NotALattice";
    return lat;
  }
  if (Verdict c = complementation(sp, threads); !c.holds) return c;
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y) {
      if (!p.leq(x, y)) continue;
      int j = p.join(x, f(y));
      int m = p.meet(y, j);
      if (m != x)
        return Verdict::fail(make_witness(
            {{"x", x}, {"y", y}}, {{"x v y'", bit(j)}, {"y ^ (x v y')", bit(m)}}));
    }
  return Verdict::ok();
}

Verdict check_condition(const StructuredPoset& sp, int which, int threads) {
  const Poset& p = sp.poset;
  const UnaryOp& f = sp.op;
  const int n = p.size();
  auto check_pair = [&](int x, int y) -> OptW {
    switch (which) {
      case 1: {
        Mask t = p.lower(p.up[x] & p.up[f(y)]) & p.down[y];
        Mask rhs = p.lower(p.upper(t) & p.up[f(y)]);
        if (!subseteq(p.down[x], rhs))
          return make_witness({{"x", x}, {"y", y}},
                              {{"L(x)", p.down[x]}, {"L(U(L(U(x,y'),y),y'))", rhs}});
        break;
      }
      case 2: {
        Mask lhs = p.lower(p.upper(p.down[x] & p.down[y]) & p.up[f(y)]) & p.down[y];
        if (!subseteq(lhs, p.down[x]))
          return make_witness({{"x", x}, {"y", y}},
                              {{"L(U(L(x,y),y'),y)", lhs}, {"L(x)", p.down[x]}});
        break;
      }
      case 7: {
        Mask rhs = p.lower(p.upper(p.down[x] & p.down[y]) & p.up[f(y)]);
        if (!subseteq(p.down[x], rhs))
          return make_witness({{"x", x}, {"y", y}},
                              {{"L(x)", p.down[x]}, {"L(U(L(x,y),y'))", rhs}});
        break;
      }
      case 8: {
        Mask lhs = p.lower(p.up[x] & p.up[f(y)]) & p.down[y];
        if (!subseteq(lhs, p.down[x]))
          return make_witness({{"x", x}, {"y", y}},
                              {{"L(U(x,y'),y)", lhs}, {"L(x)", p.down[x]}});
        break;
      }
      default:
        throw std::invalid_argument("condition must be 1, 2, 7 or 8");
    }
    return std::nullopt;
  };
  return from_scan(scan_first(n, threads, [&](int x) -> OptW {
    for (int y = 0; y < n; ++y)
      if (auto w = check_pair(x, y)) return w;
    return std::nullopt;
  }));
}

ClassReport classify_all(const StructuredPoset& sp, int threads) {
  ClassReport rep;
  auto guarded = [&](auto&& fn) -> Verdict {
    try {
      return fn();
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::UnboundedPoset) {
        Verdict v;
        v.holds = false;
        v.reason = "UnboundedPoset";
        return v;
      }
      throw;
    }
  };
  rep.entries.emplace_back("lattice", is_lattice(sp.poset));
  rep.entries.emplace_back("distributive", is_distributive(sp.poset, threads));
  rep.entries.emplace_back("complementation",
                           guarded([&] { return complementation(sp, threads); }));
  rep.entries.emplace_back("boolean", guarded([&] { return is_boolean_poset(sp, threads); }));
  rep.entries.emplace_back("pseudo_boolean",
                           guarded([&] { return is_pseudo_boolean(sp, threads); }));
  rep.entries.emplace_back("pseudo_orthomodular",
                           guarded([&] { return is_pseudo_orthomodular(sp, threads); }));
  rep.entries.emplace_back("orthomodular_lattice",
                           guarded([&] { return is_orthomodular_lattice(sp, threads); }));
  rep.entries.emplace_back("one_prime_zero", guarded([&] { return one_prime_zero(sp); }));
  for (int c : {1, 2, 7, 8})
    rep.entries.emplace_back("condition_" + std::to_string(c),
                             check_condition(sp, c, threads));
  return rep;
}

}  // namespace residua
