#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "monokit/perm_group.hpp"

/// Brute-force permutation group oracle working on explicit element sets.
namespace oracle {

using namespace monokit;

using Elem = std::u16string;

inline Elem compose(const Elem& a, const Elem& b) {
  Elem r(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

inline Elem invert(const Elem& a) {
  Elem r(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<char16_t>(i);
  return r;
}

inline Elem identity_elem(size_t n) {
  Elem r(n, 0);
  for (size_t i = 0; i < n; ++i) r[i] = static_cast<char16_t>(i);
  return r;
}

struct BruteGroup {
  size_t degree = 0;
  std::vector<Elem> gens;
  std::vector<Elem> elements;
  std::unordered_set<Elem> set;
};

inline BruteGroup closure(size_t degree, std::vector<Elem> gens) {
  BruteGroup g;
  g.degree = degree;
  g.gens = std::move(gens);
  Elem id = identity_elem(degree);
  g.elements.push_back(id);
  g.set.insert(id);
  for (size_t i = 0; i < g.elements.size(); ++i)
    for (const auto& s : g.gens) {
      Elem e = compose(g.elements[i], s);
      if (g.set.insert(e).second) g.elements.push_back(e);
    }
  return g;
}

inline Elem conjugate(const Elem& x, const Elem& h) { return compose(compose(invert(h), x), h); }

/// Smallest subgroup containing the seeds and closed under conjugation by g.
inline BruteGroup normal_closure_in(const BruteGroup& g, const std::vector<Elem>& seeds) {
  BruteGroup n = closure(g.degree, {});
  auto add = [&](const Elem& c) {
    if (n.set.count(c)) return;
    auto gens = n.gens;
    gens.push_back(c);
    n = closure(g.degree, gens);
  };
  for (const auto& x : seeds) add(x);
  for (size_t i = 0; i < n.gens.size(); ++i)
    for (const auto& s : g.gens) add(conjugate(n.gens[i], s));
  return n;
}

inline BruteGroup commutator_subgroup(const BruteGroup& g) {
  std::vector<Elem> comms;
  for (const auto& a : g.gens)
    for (const auto& b : g.gens) comms.push_back(compose(compose(invert(a), invert(b)), compose(a, b)));
  return normal_closure_in(g, comms);
}

inline bool brute_solvable(BruteGroup g) {
  for (;;) {
    if (g.elements.size() == 1) return true;
    BruteGroup d = commutator_subgroup(g);
    if (d.elements.size() == g.elements.size()) return false;
    g = std::move(d);
  }
}

/// Action of g on the cosets of the normal subgroup n.
inline BruteGroup quotient(const BruteGroup& g, const BruteGroup& n) {
  std::unordered_map<Elem, int> coset;
  std::vector<Elem> reps;
  for (const auto& e : g.elements) {
    if (coset.count(e)) continue;
    int idx = static_cast<int>(reps.size());
    reps.push_back(e);
    for (const auto& x : n.elements) coset[compose(x, e)] = idx;
  }
  std::vector<Elem> gens;
  for (const auto& s : g.gens) {
    Elem im(reps.size(), 0);
    for (size_t c = 0; c < reps.size(); ++c) im[c] = static_cast<char16_t>(coset.at(compose(reps[c], s)));
    gens.push_back(im);
  }
  return closure(reps.size(), gens);
}

using FactorKey = std::multiset<std::pair<bool, std::uint64_t>>;

/// Splits off the largest normal closure of a single class; simple when there is none.
inline void brute_factors(const BruteGroup& g, FactorKey& out) {
  const size_t order = g.elements.size();
  if (order == 1) return;
  std::unordered_set<Elem> classified;
  std::optional<BruteGroup> best;
  for (const auto& x : g.elements) {
    if (classified.count(x) || x == g.elements.front()) continue;
    std::vector<Elem> cls{x};
    classified.insert(x);
    for (size_t i = 0; i < cls.size(); ++i)
      for (const auto& s : g.gens) {
        Elem c = conjugate(cls[i], s);
        if (classified.insert(c).second) cls.push_back(c);
      }
    BruteGroup n = normal_closure_in(g, {x});
    if (n.elements.size() < order && (!best || n.elements.size() > best->elements.size())) best = std::move(n);
  }
  if (!best) {
    bool abelian = true;
    for (const auto& a : g.gens)
      for (const auto& b : g.gens) abelian = abelian && compose(a, b) == compose(b, a);
    out.insert({abelian, order});
    return;
  }
  brute_factors(*best, out);
  brute_factors(quotient(g, *best), out);
}

inline BruteGroup to_brute(const PermutationGroup& g) {
  std::vector<Elem> gens;
  for (const auto& s : g.generators()) {
    Elem e(static_cast<size_t>(g.degree()), 0);
    for (int i = 0; i < g.degree(); ++i) e[i] = static_cast<char16_t>(s(i));
    gens.push_back(e);
  }
  return closure(static_cast<size_t>(g.degree()), gens);
}

/// Compares the library with the oracle; returns an empty string on agreement.
inline std::string oracle_disagreement(const PermutationGroup& g) {
  BruteGroup b = to_brute(g);
  if (Integer(b.elements.size()) != g.order()) return "order " + g.order().str();
  if (brute_solvable(b) != is_solvable(g)) return "solvability";
  FactorKey expect, got;
  brute_factors(b, expect);
  for (const auto& f : composition_factor_signature(g).factors)
    got.insert({f.cyclic, f.order.convert_to<std::uint64_t>()});
  if (expect != got) return "signature " + composition_factor_signature(g).to_string();
  return {};
}

}  // namespace oracle
