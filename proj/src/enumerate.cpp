#include "residua/enumerate.hpp"

#include <algorithm>
#include <numeric>

#include "residua/classify.hpp"

namespace residua {

bool eval_predicate(const std::string& name, const StructuredPoset& sp) {
  try {
    if (name == "complementation") return complementation(sp).holds;
    if (name == "antitone-involution") return antitone(sp).holds && involution(sp).holds;
    if (name == "involution") return involution(sp).holds;
    if (name == "one-prime-zero") return one_prime_zero(sp).holds;
    if (name == "distributive") return is_distributive(sp.poset).holds;
    if (name == "boolean") return is_boolean_poset(sp).holds;
    if (name == "pseudo-boolean") return is_pseudo_boolean(sp).holds;
    if (name == "pseudo-orthomodular") return is_pseudo_orthomodular(sp).holds;
    if (name == "lattice") return is_lattice(sp.poset).holds;
    if (name == "orthomodular-lattice") return is_orthomodular_lattice(sp).holds;
    if (name == "cond1") return check_condition(sp, 1).holds;
    if (name == "cond2") return check_condition(sp, 2).holds;
    if (name == "cond7") return check_condition(sp, 7).holds;
    if (name == "cond8") return check_condition(sp, 8).holds;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::UnboundedPoset) return false;
    throw;
  }
  throw std::invalid_argument("unknown predicate '" + name + "'");
}

const std::vector<std::string>& predicate_names() {
  static const std::vector<std::string> names = {
      "complementation", "antitone-involution", "involution",    "one-prime-zero",
      "distributive",    "boolean",             "pseudo-boolean", "pseudo-orthomodular",
      "lattice",         "orthomodular-lattice", "cond1",         "cond2",
      "cond7",           "cond8"};
  return names;
}

std::uint64_t linear_extension_count(const Poset& p) {
  const int n = p.size();
  std::vector<std::uint64_t> g(size_t{1} << n, 0);
  g[0] = 1;
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    std::uint64_t total = 0;
    for_each_bit(s, [&](int x) {
      if ((p.up[x] & s) == bit(x)) total += g[s & ~bit(x)];  // x maximal in s
    });
    g[s] = total;
  }
  return g[(Mask{1} << n) - 1];
}

std::vector<std::vector<int>> order_automorphisms(const Poset& p) {
  const int n = p.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  if (n <= 2) return {perm};
  std::vector<std::vector<int>> out;
  // bottom and top are fixed by every automorphism
  std::vector<int> mid(perm.begin() + 1, perm.end() - 1);
  do {
    for (int i = 1; i < n - 1; ++i) perm[i] = mid[static_cast<size_t>(i) - 1];
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        if (p.leq(i, j) != p.leq(perm[i], perm[j])) ok = false;
    if (ok) out.push_back(perm);
  } while (std::next_permutation(mid.begin(), mid.end()));
  return out;
}

namespace {

std::vector<std::string> element_names(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  return names;
}

// Strict order among the m middle elements as row masks (bit j set in row i
// means i < j), canonical iff lexicographically minimal over relabelings.
bool is_canonical_middle(const std::vector<Mask>& rows, int m) {
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Mask> permuted(m);
  while (std::next_permutation(perm.begin(), perm.end())) {
    for (int i = 0; i < m; ++i) {
      Mask r = 0;
      for_each_bit(rows[i], [&](int j) { r |= bit(perm[j]); });
      permuted[perm[i]] = r;
    }
    if (permuted < rows) return false;
  }
  return true;
}

}  // namespace

std::vector<Poset> enumerate_bounded_posets(int size) {
  if (size < 1) throw std::invalid_argument("size must be at least 1");
  if (size > kEnumSizeCap)
    throw Error(ErrorKind::SizeCapExceeded,
                "size " + std::to_string(size) + " exceeds the enumeration cap " +
                    std::to_string(kEnumSizeCap));
  std::vector<Poset> out;
  if (size == 1) {
    out.push_back(close_and_validate(element_names(1), {}));
    return out;
  }
  const int m = size - 2;
  std::vector<std::pair<int, int>> idx_pairs;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) idx_pairs.emplace_back(i, j);

  std::uint64_t total = 1;
  for (size_t k = 0; k < idx_pairs.size(); ++k) total *= 3;

  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<Mask> rows(static_cast<size_t>(m), 0);  // strict order among middles
    std::uint64_t c = code;
    for (auto [i, j] : idx_pairs) {
      switch (c % 3) {
        case 1: rows[i] |= bit(j); break;
        case 2: rows[j] |= bit(i); break;
        default: break;
      }
      c /= 3;
    }
    bool transitive = true;
    for (int i = 0; i < m && transitive; ++i)
      for_each_bit(rows[i], [&](int j) {
        if (!subseteq(rows[j], rows[i])) transitive = false;
      });
    if (!transitive) continue;
    if (!is_canonical_middle(rows, m)) continue;

    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i < m; ++i) {
      covers.emplace_back(0, i + 1);
      covers.emplace_back(i + 1, size - 1);
      for_each_bit(rows[i], [&](int j) { covers.emplace_back(i + 1, j + 1); });
    }
    if (m == 0) covers.emplace_back(0, 1);
    out.push_back(close_and_validate(element_names(size), covers));
  }

  std::stable_sort(out.begin(), out.end(), [](const Poset& a, const Poset& b) {
    std::uint64_t la = linear_extension_count(a), lb = linear_extension_count(b);
    if (la != lb) return la < lb;
    return a.up < b.up;
  });
  return out;
}

void enumerate_structured(const EnumSpec& spec,
                          const std::function<bool(const StructuredPoset&)>& visit) {
  const int n = spec.size;
  auto posets = enumerate_bounded_posets(n);
  std::vector<int> inv(n);
  for (size_t pi = 0; pi < posets.size(); ++pi) {
    const Poset& p = posets[pi];
    auto auts = spec.canonical ? order_automorphisms(p) : std::vector<std::vector<int>>{};

    std::vector<int> op(static_cast<size_t>(n), 0);
    std::uint64_t op_index = 0;
    std::vector<int> conj(static_cast<size_t>(n));
    for (;;) {
      bool keep = true;
      if (spec.canonical) {
        for (const auto& perm : auts) {
          for (int i = 0; i < n; ++i) inv[perm[i]] = i;
          for (int i = 0; i < n; ++i) conj[static_cast<size_t>(i)] = perm[op[inv[i]]];
          if (conj < op) {
            keep = false;
            break;
          }
        }
      }
      if (keep) {
        StructuredPoset sp;
        sp.name = "enum-n" + std::to_string(n) + "-p" + std::to_string(pi) + "-o" +
                  std::to_string(op_index);
        sp.poset = p;
        sp.op.map = op;
        bool pass = true;
        for (const auto& pred : spec.require)
          if (!eval_predicate(pred, sp)) {
            pass = false;
            break;
          }
        if (pass && !visit(sp)) return;
      }
      // odometer, last coordinate fastest: ascending lexicographic order
      int pos = n - 1;
      while (pos >= 0 && op[pos] == n - 1) op[pos--] = 0;
      if (pos < 0) break;
      ++op[pos];
      ++op_index;
    }
  }
}

std::uint64_t count_structured(const EnumSpec& spec) {
  std::uint64_t count = 0;
  enumerate_structured(spec, [&](const StructuredPoset&) {
    ++count;
    return true;
  });
  return count;
}

Claim Claim::parse(const std::string& text) {
  auto pos = text.find("=>");
  if (pos == std::string::npos)
    throw std::invalid_argument("claim must have the form 'antecedent=>consequent'");
  return Claim{text.substr(0, pos), text.substr(pos + 2)};
}

std::optional<StructuredPoset> find_counterexample(
    const Claim& claim, int max_size, const std::vector<StructuredPoset>& fixtures) {
  auto violates = [&](const StructuredPoset& sp) {
    return eval_predicate(claim.antecedent, sp) && !eval_predicate(claim.consequent, sp);
  };
  std::optional<StructuredPoset> hit;
  for (int size = 1; size <= std::min(max_size, kEnumSizeCap) && !hit; ++size)
    enumerate_structured({size, {}, true}, [&](const StructuredPoset& sp) {
      if (violates(sp)) {
        hit = sp;
        return false;
      }
      return true;
    });
  if (hit) return hit;
  for (const auto& sp : fixtures)
    if (sp.poset.size() <= max_size && violates(sp)) return sp;
  return std::nullopt;
}

}  // namespace residua
