#include "schurring/permgroup.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "schurring/errors.hpp"
#include "schurring/zn_arith.hpp"

namespace schurring {

// ---------------------------------------------------------------- Perm

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> hit(images_.size(), 0);
  for (int y : images_) {
    if (y < 0 || y >= degree() || hit[y]) throw std::invalid_argument("Perm: images do not form a bijection");
    hit[y] = 1;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  return Perm(std::move(id), Unchecked{});
}

Perm Perm::translation(int n, int shift) {
  std::vector<int> img(n);
  for (int x = 0; x < n; ++x) img[x] = mod(x + shift, n);
  return Perm(std::move(img), Unchecked{});
}

Perm Perm::operator*(const Perm& b) const {
  std::vector<int> img(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) img[x] = b.images_[images_[x]];
  return Perm(std::move(img), Unchecked{});
}

Perm Perm::inverse() const {
  std::vector<int> img(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) img[images_[x]] = static_cast<int>(x);
  return Perm(std::move(img), Unchecked{});
}

bool Perm::is_identity() const { return first_moved() < 0; }

int Perm::first_moved() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != static_cast<int>(x)) return static_cast<int>(x);
  return -1;
}

// ---------------------------------------------------------------- GroupOrder

GroupOrder::GroupOrder(std::uint64_t value) {
  if (value == 0) throw std::invalid_argument("GroupOrder: zero");
  *this *= value;
}

GroupOrder& GroupOrder::operator*=(std::uint64_t value) {
  if (value == 0) throw std::invalid_argument("GroupOrder: zero");
  for (const auto& [p, e] : factorize(value).factors) factors_[p] += e;
  return *this;
}

GroupOrder& GroupOrder::operator*=(const GroupOrder& other) {
  for (const auto& [p, e] : other.factors_) factors_[p] += e;
  return *this;
}

std::optional<std::uint64_t> GroupOrder::value() const {
  unsigned __int128 v = 1;
  for (const auto& [p, e] : factors_) {
    for (int i = 0; i < e; ++i) {
      v *= p;
      if (v > UINT64_MAX) return std::nullopt;
    }
  }
  return static_cast<std::uint64_t>(v);
}

bool GroupOrder::divisible_by(std::uint64_t d) const {
  for (const auto& [p, e] : factorize(d).factors) {
    const auto it = factors_.find(p);
    if (it == factors_.end() || it->second < e) return false;
  }
  return true;
}

std::string GroupOrder::str() const {
  if (auto v = value()) return std::to_string(*v);
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, e] : factors_) {
    os << (first ? "" : " * ") << p;
    if (e > 1) os << '^' << e;
    first = false;
  }
  return os.str();
}

GroupOrder factorial_order(int n) {
  GroupOrder g;
  for (int k = 2; k <= n; ++k) g *= static_cast<std::uint64_t>(k);
  return g;
}

// ---------------------------------------------------------------- StabilizerChain

StabilizerChain::StabilizerChain(int degree, const std::vector<Perm>& generators, const std::vector<int>& base_prefix)
    : degree_(degree) {
  std::vector<Perm> gens;
  for (const Perm& g : generators) {
    if (g.degree() != degree) throw std::invalid_argument("StabilizerChain: generator degree mismatch");
    if (!g.is_identity()) gens.push_back(g);
  }
  for (int b : base_prefix) {
    if (b < 0 || b >= degree) throw std::invalid_argument("StabilizerChain: base point out of range");
    if (std::find(base_.begin(), base_.end(), b) == base_.end()) base_.push_back(b);
  }
  auto fixes_base = [&](const Perm& g, std::size_t upto) {
    for (std::size_t i = 0; i < upto; ++i)
      if (g[base_[i]] != base_[i]) return false;
    return true;
  };
  for (const Perm& g : gens) {
    if (fixes_base(g, base_.size())) base_.push_back(g.first_moved());
  }
  for (int b : base_) levels_.push_back({b, {}, {}, {}, {}});
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    for (const Perm& g : gens)
      if (fixes_base(g, i)) levels_[i].gens.push_back(g);
  }
  for (int i = 0; i < length(); ++i) rebuild_orbit(i);

  int i = length() - 1;
  while (i >= 0) {
    bool restarted = false;
    Level& lv = levels_[i];
    for (std::size_t oi = 0; oi < lv.orbit.size() && !restarted; ++oi) {
      const int beta = lv.orbit[oi];
      for (std::size_t si = 0; si < lv.gens.size(); ++si) {
        const Perm& s = lv.gens[si];
        const Perm& u_beta = lv.reps[lv.rep_index[beta]];
        const Perm& u_image = lv.reps[lv.rep_index[s[beta]]];
        Perm schreier = u_beta * s * u_image.inverse();
        if (schreier.is_identity()) continue;
        auto [h, j] = strip(std::move(schreier), i + 1);
        if (h.is_identity()) continue;
        if (j == length()) {
          base_.push_back(h.first_moved());
          levels_.push_back({base_.back(), {}, {}, {}, {}});
        }
        for (int k = i + 1; k <= j; ++k) levels_[k].gens.push_back(h);
        for (int k = i + 1; k <= j; ++k) rebuild_orbit(k);
        i = j;
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }
}

void StabilizerChain::rebuild_orbit(int level) {
  Level& lv = levels_[level];
  lv.orbit.assign(1, lv.base_point);
  lv.rep_index.assign(degree_, -1);
  lv.reps.assign(1, Perm::identity(degree_));
  lv.rep_index[lv.base_point] = 0;
  for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
    const int x = lv.orbit[k];
    for (const Perm& g : lv.gens) {
      const int y = g[x];
      if (lv.rep_index[y] != -1) continue;
      lv.rep_index[y] = static_cast<int>(lv.reps.size());
      lv.reps.push_back(lv.reps[lv.rep_index[x]] * g);
      lv.orbit.push_back(y);
    }
  }
}

std::pair<Perm, int> StabilizerChain::strip(Perm g, int from_level) const {
  for (int l = from_level; l < length(); ++l) {
    const Level& lv = levels_[l];
    const int beta = g[lv.base_point];
    if (lv.rep_index[beta] == -1) return {std::move(g), l};
    g = g * lv.reps[lv.rep_index[beta]].inverse();
  }
  return {std::move(g), length()};
}

const std::vector<Perm>& StabilizerChain::strong_generators(int level) const {
  if (level >= length()) return empty_;
  return levels_[level].gens;
}

const Perm* StabilizerChain::transversal(int level, int point) const {
  const Level& lv = levels_[level];
  const int idx = lv.rep_index[point];
  return idx < 0 ? nullptr : &lv.reps[idx];
}

GroupOrder StabilizerChain::order() const {
  GroupOrder g;
  for (const Level& lv : levels_) g *= static_cast<std::uint64_t>(lv.orbit.size());
  return g;
}

bool StabilizerChain::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  auto [h, j] = strip(g, 0);
  return j == length() && h.is_identity();
}

std::vector<Perm> StabilizerChain::elements() const {
  std::vector<Perm> out{Perm::identity(degree_)};
  for (int l = length() - 1; l >= 0; --l) {
    std::vector<Perm> next;
    next.reserve(out.size() * levels_[l].reps.size());
    for (const Perm& e : out)
      for (const Perm& r : levels_[l].reps) next.push_back(e * r);
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- PermGroup

struct PermGroup::Lazy {
  std::once_flag once;
  std::unique_ptr<StabilizerChain> chain;
};

PermGroup::PermGroup(int degree, std::vector<Perm> generators)
    : degree_(degree), generators_(std::move(generators)), lazy_(std::make_shared<Lazy>()) {
  for (const Perm& g : generators_) {
    if (g.degree() != degree) throw std::invalid_argument("PermGroup: generator degree mismatch");
  }
}

const StabilizerChain& PermGroup::chain() const {
  std::call_once(lazy_->once, [this] { lazy_->chain = std::make_unique<StabilizerChain>(degree_, generators_); });
  return *lazy_->chain;
}

PermGroup translations(int n) { return PermGroup(n, {Perm::translation(n, 1)}); }

PermGroup symmetric_group(int n) {
  std::vector<Perm> gens;
  if (n >= 2) {
    std::vector<int> swap(n);
    std::iota(swap.begin(), swap.end(), 0);
    std::swap(swap[0], swap[1]);
    gens.push_back(Perm(swap));
    gens.push_back(Perm::translation(n, 1));
  }
  return PermGroup(n, std::move(gens));
}

GroupOrder group_order(const PermGroup& g) { return g.order(); }

std::vector<std::vector<int>> orbits(int degree, const std::vector<Perm>& gens) {
  std::vector<int> parent(degree);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Perm& g : gens) {
    for (int x = 0; x < degree; ++x) {
      const int a = find(x), b = find(g[x]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::vector<int>> out;
  std::vector<int> index(degree, -1);
  for (int x = 0; x < degree; ++x) {
    const int r = find(x);
    if (index[r] == -1) {
      index[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[index[r]].push_back(x);
  }
  return out;
}

std::vector<std::vector<int>> point_stabilizer_orbits(const PermGroup& g, int x) {
  const StabilizerChain chain(g.degree(), g.generators(), {x});
  return orbits(g.degree(), chain.strong_generators(1));
}

bool is_normal_subgroup(const PermGroup& gamma, const PermGroup& delta) {
  if (gamma.degree() != delta.degree()) throw NotASubgroup("is_normal_subgroup: degrees differ");
  for (const Perm& d : delta.generators()) {
    if (!gamma.contains(d)) throw NotASubgroup("is_normal_subgroup: a generator of the subgroup is not in the group");
  }
  return normalizes(gamma.generators(), delta);
}

bool normalizes(const std::vector<Perm>& gens, const PermGroup& delta) {
  for (const Perm& g : gens) {
    const Perm gi = g.inverse();
    for (const Perm& d : delta.generators()) {
      if (!delta.contains(gi * d * g)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- generalized wreath

namespace {

bool same_group(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree() || a.order() != b.order()) return false;
  for (const Perm& g : a.generators())
    if (!b.contains(g)) return false;
  return true;
}

}  // namespace

PermGroup section_action_on_subgroup(const PermGroup& delta1, int u, int l) {
  if (delta1.degree() != u || l < 1 || u % l != 0) throw SectionActionMismatch("section action: bad orders");
  const int q = u / l;
  std::vector<Perm> gens;
  for (const Perm& g : delta1.generators()) {
    std::vector<int> img(q, -1);
    for (int t = 0; t < u; ++t) {
      const int s = t % q, image = g[t] % q;
      if (img[s] == -1) {
        img[s] = image;
      } else if (img[s] != image) {
        throw SectionActionMismatch("section action: cosets of L are not blocks of the group on U");
      }
    }
    gens.push_back(Perm(std::move(img)));
  }
  return PermGroup(q, std::move(gens));
}

PermGroup section_action_on_quotient(const PermGroup& delta0, int n, int u, int l) {
  const int m = n / l;       // |G/L|
  const int blocks = n / u;  // |G/U|; U/L is the multiples of `blocks` in Z_m
  const int q = u / l;
  if (delta0.degree() != m) throw SectionActionMismatch("section action: group does not act on G/L");
  std::vector<Perm> extended;
  for (const Perm& g : delta0.generators()) {
    std::vector<int> img(m + blocks, -1);
    for (int y = 0; y < m; ++y) {
      img[y] = g[y];
      const int b = y % blocks, image = g[y] % blocks;
      if (img[m + b] == -1) {
        img[m + b] = m + image;
      } else if (img[m + b] != m + image) {
        throw SectionActionMismatch("section action: cosets of U/L are not blocks of the group on G/L");
      }
    }
    extended.push_back(Perm(std::move(img)));
  }
  const StabilizerChain chain(m + blocks, extended, {m});
  std::vector<Perm> gens;
  for (const Perm& g : chain.strong_generators(1)) {
    std::vector<int> img(q);
    for (int s = 0; s < q; ++s) img[s] = g[s * blocks] / blocks;
    gens.push_back(Perm(std::move(img)));
  }
  return PermGroup(q, std::move(gens));
}

PermGroup perm_gen_wreath(const PermGroup& delta1, const PermGroup& delta0, int n, int u, int l) {
  if (l < 1 || u % l != 0 || n % u != 0) throw SectionActionMismatch("perm_gen_wreath: need l | u | n");
  const int q = u / l;          // |U/L|
  const int blocks = n / u;     // |G/U|, also the step of U inside Z_n
  const int m = n / l;          // |G/L|
  if (delta1.degree() != u) throw SectionActionMismatch("perm_gen_wreath: first group must act on U");
  if (delta0.degree() != m) throw SectionActionMismatch("perm_gen_wreath: second group must act on G/L");

  if (!same_group(section_action_on_subgroup(delta1, u, l), section_action_on_quotient(delta0, n, u, l))) {
    throw SectionActionMismatch("perm_gen_wreath: the two groups induce different groups on U/L");
  }

  // Delta1 acting on U and on U/L side by side, with the U/L points first in
  // the base; the level after them is the kernel of the action on U/L.
  std::vector<Perm> combined;
  for (const Perm& g : delta1.generators()) {
    std::vector<int> img(u + q);
    for (int t = 0; t < u; ++t) img[t] = g[t];
    for (int s = 0; s < q; ++s) img[u + s] = u + g[s] % q;
    combined.push_back(Perm(std::move(img)));
  }
  std::vector<int> prefix(q);
  std::iota(prefix.begin(), prefix.end(), u);
  const StabilizerChain chain(u + q, combined, prefix);

  auto lift_section = [&](const std::vector<int>& sigma) {
    std::vector<int> residue = sigma;
    Perm lift = Perm::identity(u + q);
    for (int i = 0; i < q; ++i) {
      const int target = u + residue[chain.base()[i] - u];
      const Perm* t = chain.transversal(i, target);
      if (t == nullptr) throw std::logic_error("perm_gen_wreath: section permutation has no preimage");
      const Perm tinv = t->inverse();
      for (int s = 0; s < q; ++s) residue[s] = tinv[u + residue[s]] - u;
      lift = *t * lift;
    }
    std::vector<int> img(u);
    for (int t = 0; t < u; ++t) img[t] = lift[t];
    return img;
  };

  std::vector<Perm> gens;
  // Lifts of the generators of Delta0, one block map per U-coset.
  for (const Perm& f0 : delta0.generators()) {
    std::vector<int> img(n);
    for (int r = 0; r < blocks; ++r) {
      const int r_image = f0[r] % blocks;
      std::vector<int> sigma(q);
      for (int s = 0; s < q; ++s) sigma[s] = mod(f0[s * blocks + r] - r_image, m) / blocks;
      const std::vector<int> fx = lift_section(sigma);
      for (int t = 0; t < u; ++t) img[r + t * blocks] = r_image + fx[t] * blocks;
    }
    gens.push_back(Perm(std::move(img)));
  }
  // Kernel of Delta1 -> Delta1^{U/L}, acting on one U-coset at a time.
  for (const Perm& k : chain.strong_generators(q)) {
    for (int r = 0; r < blocks; ++r) {
      std::vector<int> img(n);
      std::iota(img.begin(), img.end(), 0);
      for (int t = 0; t < u; ++t) img[r + t * blocks] = r + k[t] * blocks;
      gens.push_back(Perm(std::move(img)));
    }
  }
  return PermGroup(n, std::move(gens));
}

}  // namespace schurring
