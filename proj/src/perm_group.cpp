#include "monokit/perm_group.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "monokit/errors.hpp"

namespace monokit {

namespace detail {

/// Base and strong generating set built by the deterministic Schreier-Sims
/// algorithm. New base points are the smallest point moved by the element
/// that forces the extension.
class StabilizerChain {
 public:
  StabilizerChain(int degree, const std::vector<int>& base_prefix) : n_(degree) {
    for (int b : base_prefix) levels_.push_back(make_level(b));
  }

  void add_generator(const Permutation& g) {
    auto [res, j] = sift(g, 0);
    if (res.is_identity()) return;
    insert(j, std::move(res));
    for (int l = j; l >= 0; --l) process(l);
  }

  std::pair<Permutation, int> sift(Permutation g, int from) const {
    for (int l = from; l < static_cast<int>(levels_.size()); ++l) {
      const Level& lev = levels_[l];
      int beta = g(lev.base);
      int idx = lev.where[beta];
      if (idx < 0) return {std::move(g), l};
      g = g * lev.transversal[idx].inverse();
    }
    return {std::move(g), static_cast<int>(levels_.size())};
  }

  bool contains(const Permutation& g) const { return sift(g, 0).first.is_identity(); }

  Integer order() const {
    Integer o = 1;
    for (const auto& l : levels_) o *= static_cast<unsigned>(l.orbit.size());
    return o;
  }

  /// Generators of the stabilizer of the first `level` base points.
  std::vector<Permutation> strong_generators(int level) const {
    std::vector<Permutation> out;
    for (int l = level; l < static_cast<int>(levels_.size()); ++l)
      out.insert(out.end(), levels_[l].gens.begin(), levels_[l].gens.end());
    return out;
  }

  int depth() const { return static_cast<int>(levels_.size()); }
  const std::vector<Permutation>& transversal(int level) const { return levels_[level].transversal; }

 private:
  struct Level {
    int base = 0;
    std::vector<Permutation> gens;
    std::vector<int> orbit;
    std::vector<int> where;  // point -> index in orbit/transversal, -1 if absent
    std::vector<Permutation> transversal;
  };

  Level make_level(int base) const {
    Level l;
    l.base = base;
    l.orbit = {base};
    l.where.assign(static_cast<size_t>(n_), -1);
    l.where[base] = 0;
    l.transversal = {Permutation::identity(n_)};
    return l;
  }

  void insert(int level, Permutation g) {
    if (level == static_cast<int>(levels_.size())) {
      int moved = 0;
      while (g(moved) == moved) ++moved;
      levels_.push_back(make_level(moved));
    }
    levels_[level].gens.push_back(std::move(g));
  }

  void rebuild_orbit(int level, const std::vector<Permutation>& gens) {
    Level& l = levels_[level];
    l.orbit = {l.base};
    l.where.assign(static_cast<size_t>(n_), -1);
    l.where[l.base] = 0;
    l.transversal = {Permutation::identity(n_)};
    for (size_t k = 0; k < l.orbit.size(); ++k) {
      int beta = l.orbit[k];
      for (const auto& s : gens) {
        int gamma = s(beta);
        if (l.where[gamma] >= 0) continue;
        l.where[gamma] = static_cast<int>(l.orbit.size());
        l.orbit.push_back(gamma);
        l.transversal.push_back(l.transversal[k] * s);
      }
    }
  }

  void process(int level) {
    const std::vector<Permutation> gens = strong_generators(level);
    rebuild_orbit(level, gens);
    for (size_t k = 0; k < levels_[level].orbit.size(); ++k) {
      for (const auto& s : gens) {
        const Level& l = levels_[level];
        int beta = l.orbit[k];
        Permutation h = l.transversal[k] * s * l.transversal[l.where[s(beta)]].inverse();
        auto [res, j] = sift(std::move(h), level + 1);
        if (res.is_identity()) continue;
        insert(j, std::move(res));
        for (int m = j; m > level; --m) process(m);
      }
    }
  }

  int n_;
  std::vector<Level> levels_;
};

struct GroupCache {
  std::once_flag once;
  std::unique_ptr<StabilizerChain> chain;
};

}  // namespace detail

namespace {

detail::StabilizerChain build_chain(int degree, const std::vector<Permutation>& gens,
                                    const std::vector<int>& prefix) {
  detail::StabilizerChain c(degree, prefix);
  for (const auto& g : gens) c.add_generator(g);
  return c;
}

}  // namespace

PermutationGroup::PermutationGroup(int degree, std::vector<Permutation> generators)
    : degree_(degree), cache_(std::make_shared<detail::GroupCache>()) {
  if (degree < 0) throw Error(ErrorKind::InvalidInput, "negative degree");
  for (auto& g : generators) {
    if (g.degree() != degree) throw Error(ErrorKind::InvalidInput, "generator degree mismatch");
    if (!g.is_identity() && std::find(generators_.begin(), generators_.end(), g) == generators_.end())
      generators_.push_back(std::move(g));
  }
}

PermutationGroup PermutationGroup::symmetric(int n) {
  if (n <= 1) return trivial(n);
  std::vector<int> cyc(n);
  std::iota(cyc.begin(), cyc.end(), 0);
  return {n, {Permutation::from_cycles(n, {{0, 1}}), Permutation::from_cycles(n, {cyc})}};
}

PermutationGroup PermutationGroup::alternating(int n) {
  if (n <= 2) return trivial(std::max(n, 0));
  std::vector<Permutation> gens;
  for (int k = 2; k < n; ++k) gens.push_back(Permutation::from_cycles(n, {{0, 1, k}}));
  return {n, std::move(gens)};
}

PermutationGroup PermutationGroup::cyclic(int n) {
  if (n <= 1) return trivial(n);
  std::vector<int> cyc(n);
  std::iota(cyc.begin(), cyc.end(), 0);
  return {n, {Permutation::from_cycles(n, {cyc})}};
}

const detail::StabilizerChain& PermutationGroup::chain() const {
  std::call_once(cache_->once, [this] {
    cache_->chain = std::make_unique<detail::StabilizerChain>(build_chain(degree_, generators_, {}));
  });
  return *cache_->chain;
}

Integer PermutationGroup::order() const { return chain().order(); }

bool PermutationGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  return chain().contains(p);
}

std::vector<int> PermutationGroup::orbit(int point) const {
  std::vector<int> orb = {point};
  std::vector<bool> seen(static_cast<size_t>(degree_), false);
  seen[point] = true;
  for (size_t k = 0; k < orb.size(); ++k)
    for (const auto& g : generators_) {
      int q = g(orb[k]);
      if (!seen[q]) {
        seen[q] = true;
        orb.push_back(q);
      }
    }
  std::sort(orb.begin(), orb.end());
  return orb;
}

std::vector<std::vector<int>> PermutationGroup::orbits() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(static_cast<size_t>(degree_), false);
  for (int p = 0; p < degree_; ++p) {
    if (seen[p]) continue;
    auto o = orbit(p);
    for (int q : o) seen[q] = true;
    out.push_back(std::move(o));
  }
  return out;
}

PermutationGroup PermutationGroup::pointwise_stabilizer(const std::vector<int>& points) const {
  auto c = build_chain(degree_, generators_, points);
  return {degree_, c.strong_generators(static_cast<int>(points.size()))};
}

PermutationGroup PermutationGroup::normal_closure(const std::vector<Permutation>& elements) const {
  detail::StabilizerChain c(degree_, {});
  std::vector<Permutation> gens;
  std::vector<Permutation> queue;
  for (const auto& e : elements) {
    if (!c.contains(e)) {
      c.add_generator(e);
      gens.push_back(e);
      queue.push_back(e);
    }
  }
  for (size_t k = 0; k < queue.size(); ++k) {
    for (const auto& g : generators_) {
      Permutation conj = g.inverse() * queue[k] * g;
      if (c.contains(conj)) continue;
      c.add_generator(conj);
      gens.push_back(conj);
      queue.push_back(conj);
    }
  }
  return {degree_, std::move(gens)};
}

PermutationGroup PermutationGroup::derived_subgroup() const {
  std::vector<Permutation> comms;
  for (size_t i = 0; i < generators_.size(); ++i)
    for (size_t j = i + 1; j < generators_.size(); ++j) {
      const auto& a = generators_[i];
      const auto& b = generators_[j];
      Permutation c = a.inverse() * b.inverse() * a * b;
      if (!c.is_identity()) comms.push_back(std::move(c));
    }
  return normal_closure(comms);
}

bool PermutationGroup::is_subgroup_of(const PermutationGroup& other) const {
  return std::all_of(generators_.begin(), generators_.end(),
                     [&](const Permutation& g) { return other.contains(g); });
}

Permutation PermutationGroup::random_element(std::mt19937_64& rng) const {
  const auto& c = chain();
  Permutation r = Permutation::identity(degree_);
  for (int l = c.depth() - 1; l >= 0; --l) {
    const auto& t = c.transversal(l);
    std::uniform_int_distribution<size_t> pick(0, t.size() - 1);
    r = r * t[pick(rng)];
  }
  return r;
}

std::vector<Permutation> PermutationGroup::elements(std::uint64_t cap) const {
  const auto& c = chain();
  if (c.order() > cap) throw Error(ErrorKind::OrderTooLarge, "group too large to enumerate");
  std::vector<Permutation> out = {Permutation::identity(degree_)};
  for (int l = c.depth() - 1; l >= 0; --l) {
    std::vector<Permutation> next;
    next.reserve(out.size() * c.transversal(l).size());
    for (const auto& e : out)
      for (const auto& u : c.transversal(l)) next.push_back(e * u);
    out = std::move(next);
  }
  return out;
}

Integer group_order(const PermutationGroup& g) { return g.order(); }

bool is_transitive(const PermutationGroup& g) {
  if (g.degree() == 0) return true;
  return static_cast<int>(g.orbit(0).size()) == g.degree();
}

std::vector<std::vector<int>> minimal_block_system(const PermutationGroup& g, int a, int b) {
  const int n = g.degree();
  std::vector<int> parent(static_cast<size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  std::vector<std::pair<int, int>> queue;
  if (a != b) {
    parent[find(a)] = find(b);
    queue.emplace_back(a, b);
  }
  for (size_t k = 0; k < queue.size(); ++k) {
    auto [x, y] = queue[k];
    for (const auto& s : g.generators()) {
      int u = s(x), v = s(y);
      int ru = find(u), rv = find(v);
      if (ru == rv) continue;
      parent[ru] = rv;
      queue.emplace_back(u, v);
    }
  }
  std::vector<std::vector<int>> blocks;
  std::vector<int> index(static_cast<size_t>(n), -1);
  for (int p = 0; p < n; ++p) {
    int r = find(p);
    if (index[r] < 0) {
      index[r] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[index[r]].push_back(p);
  }
  return blocks;
}

PrimitivityResult is_primitive(const PermutationGroup& g) {
  if (g.degree() < 1) throw Error(ErrorKind::InvalidInput, "primitivity needs degree >= 1");
  if (!is_transitive(g)) throw Error(ErrorKind::NotTransitive, "primitivity is defined for transitive groups");
  for (int b = 1; b < g.degree(); ++b) {
    auto blocks = minimal_block_system(g, 0, b);
    if (blocks.size() > 1) return {false, std::move(blocks)};
  }
  return {true, {}};
}

std::vector<PermutationGroup> derived_series(const PermutationGroup& g) {
  std::vector<PermutationGroup> series = {g};
  for (;;) {
    const auto& last = series.back();
    if (last.is_trivial()) break;
    PermutationGroup next = last.derived_subgroup();
    if (next.order() == last.order()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_solvable(const PermutationGroup& g) { return derived_series(g).back().order() == 1; }

AlmostSolvableWitness is_almost_solvable_finite(const PermutationGroup& g) {
  return {true, "G = G0 > G1 = {e}; G0/G1 finite of order " + g.order().str()};
}

PermutationGroup stabilizer(const PermutationGroup& g, int point) {
  if (point < 0 || point >= g.degree()) throw Error(ErrorKind::InvalidInput, "point out of range");
  if (!is_transitive(g)) throw Error(ErrorKind::NotTransitive, "stabilizer requested for an intransitive group");
  return g.pointwise_stabilizer({point});
}

MonodromyPair monodromy_pair(const PermutationGroup& g, int point) {
  return {g, point, stabilizer(g, point)};
}

bool contains_full_cycle(const PermutationGroup& g, const std::optional<Permutation>& infinity_loop) {
  if (g.degree() < 1) throw Error(ErrorKind::InvalidInput, "degree must be positive");
  if (g.degree() == 1) return true;
  if (infinity_loop && infinity_loop->is_full_cycle() && g.contains(*infinity_loop)) return true;
  for (const auto& s : g.generators())
    if (s.is_full_cycle()) return true;
  for (const auto& e : g.elements(1'000'000))
    if (e.is_full_cycle()) return true;
  return false;
}

}  // namespace monokit
