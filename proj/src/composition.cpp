#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

#include "monokit/errors.hpp"
#include "monokit/perm_group.hpp"
#include "monokit/simple_groups.hpp"

namespace monokit {

namespace {

constexpr std::uint64_t kMaxSignatureOrder = 1'000'000'000;
constexpr int kNormalSearchTrials = 48;

using Factors = std::vector<CompositionFactor>;

void append(Factors& into, const Factors& more) { into.insert(into.end(), more.begin(), more.end()); }

Factors cyclic_factors(Integer m) {
  Factors out;
  for (unsigned p = 2; m > 1; ++p) {
    while (m % p == 0) {
      out.push_back({true, Integer(p), 1, "C" + std::to_string(p)});
      m /= p;
    }
    if (Integer(p) * p > m && m > 1) {
      out.push_back({true, m, 1, "C" + m.str()});
      break;
    }
  }
  return out;
}

/// The group induced on `points`, which must be a union of orbits.
PermutationGroup restrict_to(const PermutationGroup& g, const std::vector<int>& points) {
  std::vector<int> index(static_cast<size_t>(g.degree()), -1);
  for (size_t k = 0; k < points.size(); ++k) index[points[k]] = static_cast<int>(k);
  std::vector<Permutation> gens;
  for (const auto& s : g.generators()) {
    std::vector<int> im(points.size());
    for (size_t k = 0; k < points.size(); ++k) im[k] = index[s(points[k])];
    gens.emplace_back(std::move(im));
  }
  return {static_cast<int>(points.size()), std::move(gens)};
}

PermutationGroup restrict_to_support(const PermutationGroup& g) {
  std::vector<int> moved;
  for (int p = 0; p < g.degree(); ++p)
    for (const auto& s : g.generators())
      if (s(p) != p) {
        moved.push_back(p);
        break;
      }
  return restrict_to(g, moved);
}

std::vector<int> block_index(int degree, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> idx(static_cast<size_t>(degree), -1);
  for (size_t b = 0; b < blocks.size(); ++b)
    for (int p : blocks[b]) idx[p] = static_cast<int>(b);
  return idx;
}

PermutationGroup block_action(const PermutationGroup& g, const std::vector<std::vector<int>>& blocks) {
  auto idx = block_index(g.degree(), blocks);
  std::vector<Permutation> gens;
  for (const auto& s : g.generators()) {
    std::vector<int> im(blocks.size());
    for (size_t b = 0; b < blocks.size(); ++b) im[b] = idx[s(blocks[b].front())];
    gens.emplace_back(std::move(im));
  }
  return {static_cast<int>(blocks.size()), std::move(gens)};
}

/// Kernel of the action on blocks: act on points and blocks at once, then
/// take the pointwise stabilizer of the block points.
PermutationGroup block_kernel(const PermutationGroup& g, const std::vector<std::vector<int>>& blocks) {
  const int n = g.degree();
  const int m = static_cast<int>(blocks.size());
  auto idx = block_index(n, blocks);
  std::vector<Permutation> gens;
  for (const auto& s : g.generators()) {
    std::vector<int> im(static_cast<size_t>(n + m));
    for (int p = 0; p < n; ++p) im[p] = s(p);
    for (int b = 0; b < m; ++b) im[n + b] = n + idx[s(blocks[b].front())];
    gens.emplace_back(std::move(im));
  }
  PermutationGroup extended(n + m, std::move(gens));
  std::vector<int> block_points(static_cast<size_t>(m));
  for (int b = 0; b < m; ++b) block_points[b] = n + b;
  PermutationGroup kernel = extended.pointwise_stabilizer(block_points);
  std::vector<int> original(static_cast<size_t>(n));
  for (int p = 0; p < n; ++p) original[p] = p;
  return restrict_to(kernel, original);
}

Factors subtract(Factors from, const Factors& remove) {
  for (const auto& f : remove) {
    auto it = std::find(from.begin(), from.end(), f);
    if (it == from.end()) throw Error(ErrorKind::Internal, "composition factor bookkeeping mismatch");
    from.erase(it);
  }
  return from;
}

bool has_element_of_order(const PermutationGroup& g, std::int64_t order) {
  for (const auto& e : g.elements(50'000'000))
    if (e.order() == order) return true;
  return false;
}

std::vector<std::int64_t> distinct_primes(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

class Factorizer {
 public:
  Factors factors(const PermutationGroup& h) {
    Factors out;
    if (h.order() == 1) return out;
    auto series = derived_series(h);
    for (size_t i = 0; i + 1 < series.size(); ++i)
      append(out, cyclic_factors(series[i].order() / series[i + 1].order()));
    if (series.back().order() > 1) append(out, perfect_factors(restrict_to_support(series.back())));
    return out;
  }

 private:
  Factors perfect_factors(const PermutationGroup& p) {
    Factors out;
    if (!is_transitive(p)) {
      auto orbs = p.orbits();
      auto first = std::find_if(orbs.begin(), orbs.end(), [](const auto& o) { return o.size() > 1; });
      append(out, factors(restrict_to(p, *first)));
      append(out, factors(restrict_to_support(p.pointwise_stabilizer(*first))));
      return out;
    }
    auto prim = is_primitive(p);
    if (!prim.primitive) {
      append(out, factors(block_action(p, prim.blocks)));
      append(out, factors(restrict_to_support(block_kernel(p, prim.blocks))));
      return out;
    }
    // Primitive: every nontrivial normal subgroup N is transitive, so
    // P = N P_0 and P/N ~ P_0 / N_0.
    if (auto n = proper_normal_subgroup(p)) {
      append(out, factors(*n));
      Factors quotient = subtract(factors(restrict_to_support(stabilizer(p, 0))),
                                  factors(restrict_to_support(n->pointwise_stabilizer({0}))));
      append(out, quotient);
      return out;
    }
    out.push_back(identify_simple(p));
    return out;
  }

  std::optional<PermutationGroup> proper_normal_subgroup(const PermutationGroup& p) {
    const Integer order = p.order();
    std::vector<Permutation> candidates = p.generators();
    for (int t = 0; t < kNormalSearchTrials; ++t) candidates.push_back(p.random_element(rng_));
    for (const auto& x : candidates) {
      if (x.is_identity()) continue;
      const std::int64_t ord = x.order();
      for (auto prime : distinct_primes(ord)) {
        PermutationGroup n = p.normal_closure({x.pow(ord / prime)});
        if (n.order() < order) return n;
      }
    }
    return std::nullopt;
  }

  CompositionFactor identify_simple(const PermutationGroup& p) {
    const Integer order = p.order();
    auto candidates = simple_groups_of_order(order.convert_to<std::uint64_t>());
    if (candidates.empty()) return {false, order, -1, ""};
    const SimpleGroupInfo* pick = &candidates.front();
    if (candidates.size() > 1) {
      // Only 20160 is ambiguous in range: A8 has elements of order 15, PSL(3,4) does not.
      bool a8 = has_element_of_order(p, 15);
      for (const auto& c : candidates)
        if ((c.name == "A8") == a8) pick = &c;
    }
    return {false, order, pick->min_degree, pick->name};
  }

  std::mt19937_64 rng_{0x9e3779b97f4a7c15ULL};
};

}  // namespace

std::string CompositionFactor::to_string() const {
  if (cyclic) return name;
  if (name.empty()) return "Simple(" + order.str() + ")";
  return name;
}

Integer FactorSignature::order_product() const {
  Integer p = 1;
  for (const auto& f : factors) p *= f.order;
  return p;
}

bool FactorSignature::all_cyclic() const {
  return std::all_of(factors.begin(), factors.end(), [](const auto& f) { return f.cyclic; });
}

std::string FactorSignature::to_string() const {
  std::ostringstream os;
  os << '[';
  for (size_t k = 0; k < factors.size(); ++k) os << (k ? ", " : "") << factors[k].to_string();
  os << ']';
  return os.str();
}

FactorSignature composition_factor_signature(const PermutationGroup& g) {
  if (g.order() > kMaxSignatureOrder)
    throw Error(ErrorKind::OrderTooLarge, "group order " + g.order().str() + " exceeds 10^9");
  Factorizer f;
  Factors fs = f.factors(g);
  std::sort(fs.begin(), fs.end(), [](const CompositionFactor& a, const CompositionFactor& b) {
    if (a.cyclic != b.cyclic) return a.cyclic;
    if (a.order != b.order) return a.order < b.order;
    return a.name < b.name;
  });
  return {std::move(fs)};
}

bool is_k_solvable(const PermutationGroup& g, int k) {
  if (k < 1) throw Error(ErrorKind::InvalidInput, "k must be at least 1");
  for (const auto& f : composition_factor_signature(g).factors) {
    if (f.cyclic) continue;
    if (f.min_degree < 0)
      throw Error(ErrorKind::UnidentifiedSimpleFactor,
                  "simple factor of order " + f.order.str() + " is not in the bundled table");
    if (f.min_degree > k) return false;
  }
  return true;
}

}  // namespace monokit
