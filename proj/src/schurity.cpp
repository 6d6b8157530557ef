#include "schurring/schurity.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>
#include <tuple>

#include "schurring/errors.hpp"

namespace schurring {

std::uint64_t default_node_budget() {
  if (const char* env = std::getenv("SCHURRING_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 100'000'000;
}

SearchOptions default_search_options() { return SearchOptions{default_node_budget()}; }

bool is_color_automorphism(const SRing& a, const Perm& f) {
  const int n = a.order();
  if (f.degree() != n) return false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (color(a, x, y) != color(a, f[x], f[y])) return false;
  return true;
}

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// An ordered vertex partition: cell ids 0..cells-1, numbered canonically,
// plus a fingerprint of the refinement that produced it.
struct Partition {
  std::vector<int> cell;
  int cells = 1;
  std::uint64_t trace = 0;
};

class AutSearch {
 public:
  AutSearch(const SRing& a, std::uint64_t budget) : n_(a.order()), rank_(a.rank()), budget_(budget) {
    colors_.resize(static_cast<std::size_t>(n_) * n_);
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y) colors_[static_cast<std::size_t>(x) * n_ + y] = color(a, x, y);
  }

  std::uint64_t nodes() const { return nodes_; }

  // Generators of the stabilizer of 0 and its order.
  void run(std::vector<Perm>& gens, GroupOrder& order) {
    Partition start;
    start.cell.assign(n_, 0);
    const Partition root = refine(individualize(start, 0));
    build_level(root, gens, order);
  }

 private:
  int col(int x, int y) const { return colors_[static_cast<std::size_t>(x) * n_ + y]; }

  void tick() {
    if (++nodes_ > budget_) {
      throw SearchBudgetExceeded("automorphism search exceeded the node budget of " + std::to_string(budget_));
    }
  }

  static Partition individualize(const Partition& p, int v) {
    Partition q = p;
    q.cell[v] = p.cells;
    q.cells = p.cells + 1;
    q.trace = 0;
    return q;
  }

  // Iterated color refinement: a vertex's new cell is determined by its cell
  // and the multiset of (cell, color) over all other vertices. Keys are
  // label-free, so corresponding partitions refine identically.
  Partition refine(Partition p) {
    tick();
    std::vector<std::tuple<int, std::uint64_t, int>> keyed(n_);
    std::uint64_t trace = 0;
    for (;;) {
      for (int v = 0; v < n_; ++v) {
        std::uint64_t sum = 0;
        for (int u = 0; u < n_; ++u) sum += mix(static_cast<std::uint64_t>(p.cell[u]) * rank_ + col(v, u));
        keyed[v] = {p.cell[v], sum, v};
      }
      std::sort(keyed.begin(), keyed.end());
      int cells = 0;
      std::vector<int> next(n_);
      for (int i = 0; i < n_; ++i) {
        const auto& [c, h, v] = keyed[i];
        if (i > 0 && (c != std::get<0>(keyed[i - 1]) || h != std::get<1>(keyed[i - 1]))) {
          trace = mix(trace ^ std::get<1>(keyed[i - 1])) + static_cast<std::uint64_t>(i);
          ++cells;
        }
        next[v] = cells;
      }
      ++cells;
      trace = mix(trace ^ std::get<1>(keyed[n_ - 1])) + static_cast<std::uint64_t>(n_);
      const bool stable = cells == p.cells;
      p.cell = std::move(next);
      p.cells = cells;
      if (stable) break;
    }
    p.trace = trace;
    return p;
  }

  int target_cell(const Partition& p) const {
    std::vector<int> size(p.cells, 0);
    for (int c : p.cell) ++size[c];
    int best = -1;
    for (int c = 0; c < p.cells; ++c) {
      if (size[c] > 1 && (best < 0 || size[c] < size[best])) best = c;
    }
    return best;
  }

  // Searches for a color automorphism mapping the cells of left onto the
  // corresponding cells of right.
  std::optional<Perm> extend(const Partition& left, const Partition& right) {
    tick();
    if (left.cells == n_) {
      std::vector<int> by_cell(n_);
      for (int v = 0; v < n_; ++v) by_cell[right.cell[v]] = v;
      std::vector<int> img(n_);
      for (int v = 0; v < n_; ++v) img[v] = by_cell[left.cell[v]];
      for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y)
          if (col(x, y) != col(img[x], img[y])) return std::nullopt;
      return Perm(std::move(img));
    }
    const int c = target_cell(left);
    int v = 0;
    while (left.cell[v] != c) ++v;
    const Partition lv = refine(individualize(left, v));
    for (int w = 0; w < n_; ++w) {
      if (right.cell[w] != c) continue;
      const Partition rw = refine(individualize(right, w));
      if (rw.trace != lv.trace || rw.cells != lv.cells) continue;
      if (auto f = extend(lv, rw)) return f;
    }
    return std::nullopt;
  }

  // Deepest level first: on return, gens generate the pointwise stabilizer
  // of the individualized points of p, and order has been multiplied by its
  // size.
  void build_level(const Partition& p, std::vector<Perm>& gens, GroupOrder& order) {
    tick();
    const int c = target_cell(p);
    if (c < 0) return;
    int b = 0;
    while (p.cell[b] != c) ++b;
    const Partition pb = refine(individualize(p, b));
    build_level(pb, gens, order);

    auto orbit_of = [&](int start) {
      std::vector<int> orbit{start};
      std::vector<char> in(n_, 0);
      in[start] = 1;
      for (std::size_t i = 0; i < orbit.size(); ++i)
        for (const Perm& g : gens)
          if (!in[g[orbit[i]]]) {
            in[g[orbit[i]]] = 1;
            orbit.push_back(g[orbit[i]]);
          }
      return std::make_pair(orbit, in);
    };
    auto [orbit, in_orbit] = orbit_of(b);
    std::vector<char> excluded(n_, 0);
    for (int w = 0; w < n_; ++w) {
      if (p.cell[w] != c || in_orbit[w] || excluded[w]) continue;
      const Partition pw = refine(individualize(p, w));
      std::optional<Perm> f;
      if (pw.trace == pb.trace && pw.cells == pb.cells) f = extend(pb, pw);
      if (f) {
        gens.push_back(std::move(*f));
        std::tie(orbit, in_orbit) = orbit_of(b);
      } else {
        // Nothing in the orbit of w can be reached from b either.
        for (int x : orbit_of(w).first) excluded[x] = 1;
      }
    }
    order *= static_cast<std::uint64_t>(orbit.size());
  }

  int n_;
  int rank_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<int> colors_;
};

}  // namespace

AutomorphismGroup automorphism_group(const SRing& a, const SearchOptions& opts) {
  const int n = a.order();
  AutSearch search(a, opts.node_budget);
  std::vector<Perm> stab;
  GroupOrder stab_order;
  search.run(stab, stab_order);

  std::vector<Perm> gens;
  if (n > 1) gens.push_back(Perm::translation(n, 1));
  gens.insert(gens.end(), stab.begin(), stab.end());
  GroupOrder order(static_cast<std::uint64_t>(n));
  order *= stab_order;
  auto stab_orbits = orbits(n, stab);
  return AutomorphismGroup{PermGroup(n, std::move(gens)), std::move(stab), std::move(stab_orbits), std::move(order),
                           search.nodes()};
}

SchurityVerdict is_schurian(const SRing& a, const SearchOptions& opts) {
  AutomorphismGroup aut = automorphism_group(a, opts);
  SchurityVerdict v;
  v.aut_order = aut.order;
  v.nodes = aut.nodes;
  v.stabilizer_orbits = std::move(aut.stabilizer_orbits);
  v.schurian = static_cast<int>(v.stabilizer_orbits.size()) == a.rank();
  if (!v.schurian) {
    // Each orbit lies inside one class; report the first split class.
    for (const auto& orbit : v.stabilizer_orbits) {
      const int c = a.class_of(orbit.front());
      if (orbit.size() == a.basic_set(c).size()) continue;
      SchurityVerdict::Mismatch m;
      m.orbit = orbit;
      m.class_index = c;
      for (const auto& o : v.stabilizer_orbits)
        if (a.class_of(o.front()) == c) m.split.push_back(o);
      v.witness_mismatch = std::move(m);
      break;
    }
  }
  return v;
}

bool is_normal_sring(const SRing& a, const SearchOptions& opts) {
  const AutomorphismGroup aut = automorphism_group(a, opts);
  return normalizes(aut.stabilizer_generators, translations(a.order()));
}

bool minimal_nonschurian_check(const SRing& a, const SearchOptions& opts) {
  if (is_schurian(a, opts).schurian) throw NotNonSchurian("minimal_nonschurian_check: the ring is schurian");
  for (const Section& s : sections(a)) {
    if (s.u == a.order() && s.l == 1) continue;
    if (!is_schurian(restrict_section(a, s), opts).schurian) return false;
  }
  return true;
}

}  // namespace schurring
