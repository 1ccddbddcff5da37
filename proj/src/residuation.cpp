#include "residua/residuation.hpp"

#include "residua/classify.hpp"
#include "residua/parallel.hpp"

namespace residua {

namespace {
using OptW = std::optional<Witness>;
}

const char* scheme_name(Scheme s) { return s == Scheme::cone ? "cone" : "meet"; }

Scheme scheme_from_name(const std::string& name) {
  if (name == "cone") return Scheme::cone;
  if (name == "meet") return Scheme::meet;
  throw std::invalid_argument("unknown scheme '" + name + "'");
}

OperatorTable build_operators(const StructuredPoset& sp, Scheme scheme) {
  const Poset& p = sp.poset;
  const UnaryOp& f = sp.op;
  if (!p.bounded()) throw Error(ErrorKind::UnboundedPoset, "operator tables need 0 and 1");
  const int n = p.size();
  OperatorTable t;
  t.scheme = scheme;
  t.n = n;
  t.M.resize(static_cast<size_t>(n) * n);
  t.R.resize(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      size_t k = static_cast<size_t>(x) * n + y;
      if (scheme == Scheme::cone) {
        t.M[k] = p.lower(p.up[x] & p.up[f(y)]) & p.down[y];
        t.R[k] = p.lower(p.upper(p.down[y] & p.down[x]) & p.up[f(x)]);
      } else {
        t.M[k] = p.down[x] & p.down[y];
        t.R[k] = p.lower(p.up[y] & p.up[f(x)]);
      }
    }
  return t;
}

Definition1Report verify_definition1(const StructuredPoset& sp, const OperatorTable& t,
                                     int threads) {
  const Poset& p = sp.poset;
  const int n = p.size();
  Definition1Report rep;

  for (int x = 0; x < n && rep.unit.holds; ++x) {
    if (t.m(x, p.top) != p.down[x] || t.m(p.top, x) != p.down[x])
      rep.unit = Verdict::fail(Witness{{{"x", x}},
                                       {{"M(x,1)", t.m(x, p.top)},
                                        {"M(1,x)", t.m(p.top, x)},
                                        {"L(x)", p.down[x]}}});
  }

  auto adj = scan_first(n, threads, [&](int x) -> OptW {
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (subseteq(t.m(x, y), p.down[z]) != subseteq(p.down[x], t.r(y, z)))
          return Witness{{{"x", x}, {"y", y}, {"z", z}},
                         {{"M(x,y)", t.m(x, y)},
                          {"L(z)", p.down[z]},
                          {"L(x)", p.down[x]},
                          {"R(y,z)", t.r(y, z)}}};
    return std::nullopt;
  });
  if (adj) rep.adjointness = Verdict::fail(std::move(*adj));

  for (int x = 0; x < n && rep.zero.holds; ++x)
    if (t.r(x, p.bottom) != p.down[sp.op(x)])
      rep.zero = Verdict::fail(Witness{
          {{"x", x}}, {{"R(x,0)", t.r(x, p.bottom)}, {"L(x')", p.down[sp.op(x)]}}});

  for (int x = 0; x < n && rep.commutative.holds; ++x)
    for (int y = 0; y < n; ++y)
      if (t.m(x, y) != t.m(y, x)) {
        rep.commutative = Verdict::fail(
            Witness{{{"x", x}, {"y", y}}, {{"M(x,y)", t.m(x, y)}, {"M(y,x)", t.m(y, x)}}});
        break;
      }
  return rep;
}

Verdict verify_divisibility_lemma(const StructuredPoset& sp, const OperatorTable& t,
                                  int threads) {
  const Poset& p = sp.poset;
  auto w = scan_first(p.size(), threads, [&](int x) -> OptW {
    for (int y = 0; y < p.size(); ++y)
      if ((t.r(x, y) == p.full()) != p.leq(x, y))
        return Witness{{{"x", x}, {"y", y}}, {{"R(x,y)", t.r(x, y)}}};
    return std::nullopt;
  });
  return w ? Verdict::fail(std::move(*w)) : Verdict::ok();
}

PropositionReport verify_proposition(const StructuredPoset& sp, Scheme scheme, int threads) {
  const Poset& p = sp.poset;
  PropositionReport rep;
  try {
    rep.hypothesis_met = scheme == Scheme::cone
                             ? is_pseudo_orthomodular(sp, threads).holds
                             : complementation(sp, threads).holds;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::UnboundedPoset) throw;
    rep.hypothesis_met = false;
  }
  OperatorTable t = build_operators(sp, scheme);
  const int n = p.size();
  auto wr = scan_first(n, threads, [&](int x) -> OptW {
    for (int y = 0; y < n; ++y) {
      Mask lhs = p.lower(sp.op.image(t.m(sp.op(y), x)));
      if (lhs != t.r(x, y))
        return Witness{{{"x", x}, {"y", y}},
                       {{"L((M(y',x))')", lhs}, {"R(x,y)", t.r(x, y)}}};
    }
    return std::nullopt;
  });
  if (wr) rep.identity_r = Verdict::fail(std::move(*wr));
  auto wm = scan_first(n, threads, [&](int x) -> OptW {
    for (int y = 0; y < n; ++y) {
      Mask lhs = p.lower(sp.op.image(t.r(y, sp.op(x))));
      if (lhs != t.m(x, y))
        return Witness{{{"x", x}, {"y", y}},
                       {{"L((R(y,x'))')", lhs}, {"M(x,y)", t.m(x, y)}}};
    }
    return std::nullopt;
  });
  if (wm) rep.identity_m = Verdict::fail(std::move(*wm));
  return rep;
}

LatticeResiduationTable build_lattice_residuation(const StructuredPoset& sp) {
  const Poset& p = sp.poset;
  const UnaryOp& f = sp.op;
  const int n = p.size();
  LatticeResiduationTable t;
  t.n = n;
  t.odot.resize(static_cast<size_t>(n) * n);
  t.arrow.resize(static_cast<size_t>(n) * n);
  auto join = [&](int x, int y) {
    int j = p.join(x, y);
    if (j < 0)
      throw Error(ErrorKind::NotALattice,
                  "no join of '" + p.elements[x] + "' and '" + p.elements[y] + "'");
    return j;
  };
  auto meet = [&](int x, int y) {
    int m = p.meet(x, y);
    if (m < 0)
      throw Error(ErrorKind::NotALattice,
                  "no meet of '" + p.elements[x] + "' and '" + p.elements[y] + "'");
    return m;
  };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      size_t k = static_cast<size_t>(x) * n + y;
      t.odot[k] = meet(join(x, f(y)), y);
      t.arrow[k] = join(meet(y, x), f(x));
    }
  return t;
}

Verdict verify_left_adjointness_lattice(const StructuredPoset& sp,
                                        const LatticeResiduationTable& t, int threads) {
  const Poset& p = sp.poset;
  const int n = p.size();
  auto w = scan_first(n, threads, [&](int x) -> OptW {
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (p.leq(t.times(x, y), z) != p.leq(x, t.implies(y, z)))
          return Witness{{{"x", x}, {"y", y}, {"z", z}},
                         {{"x(.)y", bit(t.times(x, y))}, {"y->z", bit(t.implies(y, z))}}};
    return std::nullopt;
  });
  return w ? Verdict::fail(std::move(*w)) : Verdict::ok();
}

}  // namespace residua
