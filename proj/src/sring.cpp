#include "schurring/sring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>

#include "schurring/zn_arith.hpp"

namespace schurring {

namespace {

std::string format_set(const BasicSet& x) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? "," : "") << x[i];
  os << '}';
  return os.str();
}

// Canonical partition from a class map, classes numbered by minimum element.
std::vector<BasicSet> classes_from_map(int n, const std::vector<int>& key) {
  std::vector<BasicSet> out;
  std::vector<int> seen_key;
  for (int x = 0; x < n; ++x) {
    const auto it = std::find(seen_key.begin(), seen_key.end(), key[x]);
    std::size_t c;
    if (it == seen_key.end()) {
      c = seen_key.size();
      seen_key.push_back(key[x]);
      out.emplace_back();
    } else {
      c = static_cast<std::size_t>(it - seen_key.begin());
    }
    out[c].push_back(x);
  }
  return out;
}

}  // namespace

SRing SRing::validate(int n, std::vector<BasicSet> classes) {
  using Kind = ValidationError::Kind;
  if (n < 1) throw ValidationError(Kind::NotAPartition, "order must be positive");

  std::vector<int> owner(n, -1);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty()) throw ValidationError(Kind::NotAPartition, "empty class");
    for (int x : classes[c]) {
      if (x < 0 || x >= n) {
        throw ValidationError(Kind::NotAPartition, "element " + std::to_string(x) + " outside Z_" + std::to_string(n));
      }
      if (owner[x] != -1) throw ValidationError(Kind::NotAPartition, "element " + std::to_string(x) + " repeated");
      owner[x] = static_cast<int>(c);
    }
  }
  for (int x = 0; x < n; ++x) {
    if (owner[x] == -1) throw ValidationError(Kind::NotAPartition, "element " + std::to_string(x) + " not covered");
  }

  SRing ring = trusted(n, std::move(classes));
  if (ring.classes_.front().size() != 1) {
    throw ValidationError(Kind::ZeroClassNotSingleton, "class of 0 is " + format_set(ring.classes_.front()));
  }
  const int r = ring.rank();
  for (int c = 0; c < r; ++c) {
    const BasicSet& x = ring.classes_[c];
    const int target = ring.class_of_[mod(-x.front(), n)];
    const BasicSet& y = ring.classes_[target];
    bool ok = x.size() == y.size();
    for (std::size_t i = 0; ok && i < x.size(); ++i) ok = ring.class_of_[mod(-x[i], n)] == target;
    if (!ok) {
      throw ValidationError(Kind::NotInverseClosed,
                            "negation of " + format_set(x) + " is not a basic set");
    }
  }

  // Structure constants: for each pair of classes, the convolution count
  // must be constant on every class.
  std::vector<int> count(n);
  for (int i = 0; i < r; ++i) {
    for (int j = i; j < r; ++j) {
      std::fill(count.begin(), count.end(), 0);
      for (int x : ring.classes_[i])
        for (int y : ring.classes_[j]) {
          int z = x + y;
          if (z >= n) z -= n;
          ++count[z];
        }
      for (int k = 0; k < r; ++k) {
        const BasicSet& z = ring.classes_[k];
        for (std::size_t t = 1; t < z.size(); ++t) {
          if (count[z[t]] != count[z[0]]) {
            throw ValidationError(
                Kind::NotClosedUnderProduct,
                format_set(ring.classes_[i]) + " * " + format_set(ring.classes_[j]) + " gives " +
                    std::to_string(count[z[0]]) + " at " + std::to_string(z[0]) + " but " +
                    std::to_string(count[z[t]]) + " at " + std::to_string(z[t]));
          }
        }
      }
    }
  }
  return ring;
}

SRing SRing::trusted(int n, std::vector<BasicSet> classes) {
  for (auto& x : classes) std::sort(x.begin(), x.end());
  std::sort(classes.begin(), classes.end(), [](const BasicSet& a, const BasicSet& b) { return a.front() < b.front(); });
  SRing ring;
  ring.n_ = n;
  ring.classes_ = std::move(classes);
  const int r = ring.rank();
  ring.class_of_.assign(n, 0);
  for (int c = 0; c < r; ++c)
    for (int x : ring.classes_[c]) ring.class_of_[x] = c;
  ring.negation_.assign(r, 0);
  for (int c = 0; c < r; ++c) ring.negation_[c] = ring.class_of_[mod(-ring.classes_[c].front(), n)];
  return ring;
}

std::strong_ordering SRing::operator<=>(const SRing& other) const {
  if (auto c = n_ <=> other.n_; c != 0) return c;
  if (auto c = rank() <=> other.rank(); c != 0) return c;
  return classes_ <=> other.classes_;
}

bool is_a_group(const SRing& a, int d) {
  const int n = a.order();
  if (d < 1 || n % d != 0) return false;
  const int step = n / d;
  for (int c = 0; c < a.rank(); ++c) {
    const BasicSet& x = a.basic_set(c);
    const auto inside = std::count_if(x.begin(), x.end(), [step](int e) { return e % step == 0; });
    if (inside != 0 && inside != static_cast<std::ptrdiff_t>(x.size())) return false;
  }
  return true;
}

std::vector<int> a_groups(const SRing& a) {
  std::vector<int> out;
  for (u64 d : divisors(static_cast<u64>(a.order())))
    if (is_a_group(a, static_cast<int>(d))) out.push_back(static_cast<int>(d));
  return out;
}

SRing restrict(const SRing& a, int d) {
  if (!is_a_group(a, d)) {
    throw NotAnAGroup("restrict: subgroup of order " + std::to_string(d) + " is not an A-group");
  }
  const int step = a.order() / d;
  std::vector<BasicSet> out;
  for (const BasicSet& x : a.classes()) {
    if (x.front() % step != 0) continue;
    BasicSet y;
    y.reserve(x.size());
    for (int e : x) y.push_back(e / step);
    out.push_back(std::move(y));
  }
  return SRing::trusted(d, std::move(out));
}

SRing quotient(const SRing& a, int l) {
  if (!is_a_group(a, l)) {
    throw NotAnAGroup("quotient: subgroup of order " + std::to_string(l) + " is not an A-group");
  }
  const int m = a.order() / l;
  // Images of basic sets modulo an A-group are either equal or disjoint.
  std::vector<int> key(m, -1);
  for (int c = 0; c < a.rank(); ++c) {
    for (int x : a.basic_set(c)) {
      int& k = key[x % m];
      if (k == -1 || k > c) k = c;
    }
  }
  std::vector<BasicSet> out = classes_from_map(m, key);
  for (int c = 0; c < a.rank(); ++c) {
    std::vector<int> image;
    for (int x : a.basic_set(c)) image.push_back(x % m);
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    const BasicSet& cls = out[static_cast<std::size_t>(
        std::find_if(out.begin(), out.end(), [&](const BasicSet& b) { return b.front() == image.front(); }) -
        out.begin())];
    if (cls != image) throw std::logic_error("quotient: images of basic sets overlap; input ring is not an S-ring");
  }
  return SRing::trusted(m, std::move(out));
}

SRing restrict_section(const SRing& a, Section s) {
  if (s.l < 1 || s.u % s.l != 0) throw NotAnAGroup("restrict_section: l must divide u");
  return quotient(restrict(a, s.u), s.l);
}

std::vector<Section> sections(const SRing& a) {
  const std::vector<int> groups = a_groups(a);
  std::vector<Section> out;
  for (int u : groups)
    for (int l : groups)
      if (l < u && u % l == 0) out.push_back({u, l});
  std::sort(out.begin(), out.end());
  return out;
}

int radical_of_class(const SRing& a, int i) {
  const int n = a.order();
  const BasicSet& x = a.basic_set(i);
  const int c = i;
  int count = 0;
  for (int e : x) {
    const int g = mod(e - x.front(), n);
    bool fixes = true;
    for (int y : x) {
      if (a.class_of((y + g) % n) != c) {
        fixes = false;
        break;
      }
    }
    if (fixes) ++count;
  }
  return count;
}

std::vector<int> highest_classes(const SRing& a) {
  std::vector<int> out;
  const int n = a.order();
  for (int c = 0; c < a.rank(); ++c) {
    int g = n;
    for (int x : a.basic_set(c)) g = std::gcd(g, x);
    if (g == 1 || n == 1) out.push_back(c);
  }
  return out;
}

RadicalReport radical(const SRing& a) {
  RadicalReport r;
  r.per_class_radical.reserve(a.rank());
  for (int c = 0; c < a.rank(); ++c) r.per_class_radical.push_back(radical_of_class(a, c));
  const std::vector<int> highest = highest_classes(a);
  int common = 0;
  r.well_defined = true;
  for (int c : highest) {
    const int rad = r.per_class_radical[c];
    if (common != 0 && rad != common) r.well_defined = false;
    common = std::gcd(common, rad);
  }
  r.ring_radical = common == 0 ? 1 : common;
  return r;
}

bool is_primitive(const SRing& a) {
  if (a.order() == 1) return false;
  const std::vector<int> g = a_groups(a);
  return g.size() == 2;
}

bool is_quasidense(const SRing& a) {
  for (const Section& s : sections(a)) {
    if (is_prime(static_cast<u64>(s.order()))) continue;
    if (is_primitive(restrict_section(a, s))) return false;
  }
  return true;
}

bool is_dense(const SRing& a) { return a_groups(a).size() == divisors(static_cast<u64>(a.order())).size(); }

bool is_wreath_section(const SRing& a, Section s) {
  if (!is_a_group(a, s.u) || !is_a_group(a, s.l) || s.u % s.l != 0) return false;
  const int step = a.order() / s.u;
  for (int c = 0; c < a.rank(); ++c) {
    const BasicSet& x = a.basic_set(c);
    if (x.front() % step == 0) continue;  // inside U
    if (radical_of_class(a, c) % s.l != 0) return false;
  }
  return true;
}

std::vector<Section> wreath_decompositions(const SRing& a) {
  std::vector<Section> out;
  const std::vector<int> groups = a_groups(a);
  for (int u : groups) {
    if (u == a.order()) continue;
    for (int l : groups) {
      if (l == 1 || u % l != 0) continue;
      if (is_wreath_section(a, {u, l})) out.push_back({u, l});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<MultiplierGroup> is_cyclotomic(const SRing& a) {
  const int n = a.order();
  std::vector<int> stabilizer;
  for (int m : units(n)) {
    bool fixes = true;
    for (int c = 0; c < a.rank() && fixes; ++c) {
      for (int x : a.basic_set(c)) {
        if (a.class_of(static_cast<int>(static_cast<long long>(x) * m % n)) != c) {
          fixes = false;
          break;
        }
      }
    }
    if (fixes) stabilizer.push_back(m);
  }
  MultiplierGroup k(n, std::move(stabilizer));
  if (k.orbits() != a.classes()) return std::nullopt;
  return k;
}

bool tensor_split(const SRing& a, int d) {
  const int n = a.order();
  if (d < 1 || n % d != 0) throw NotComplementary("tensor_split: " + std::to_string(d) + " does not divide n");
  const int e = n / d;
  if (std::gcd(d, e) != 1) throw NotComplementary("tensor_split: orders " + std::to_string(d) + " and " +
                                                  std::to_string(e) + " are not coprime");
  if (!is_a_group(a, d)) throw NotComplementary("tensor_split: subgroup of order " + std::to_string(d) + " is not an A-group");
  // A tensor product has both factors as A-groups.
  if (!is_a_group(a, e)) return false;
  // Z_n -> Z_d x Z_e, x -> (x mod d, x mod e) is the CRT isomorphism.
  std::vector<char> seen_d(d), seen_e(e);
  for (const BasicSet& x : a.classes()) {
    std::fill(seen_d.begin(), seen_d.end(), 0);
    std::fill(seen_e.begin(), seen_e.end(), 0);
    std::size_t pd = 0, pe = 0;
    for (int v : x) {
      if (!seen_d[v % d]) {
        seen_d[v % d] = 1;
        ++pd;
      }
      if (!seen_e[v % e]) {
        seen_e[v % e] = 1;
        ++pe;
      }
    }
    if (pd * pe != x.size()) return false;
  }
  return true;
}

SRing apply_multiplier(const SRing& a, int m) {
  const int n = a.order();
  std::vector<BasicSet> out;
  out.reserve(a.rank());
  for (const BasicSet& x : a.classes()) {
    BasicSet y;
    for (int v : x) y.push_back(static_cast<int>(static_cast<long long>(v) * mod(m, n) % n));
    out.push_back(std::move(y));
  }
  return SRing::trusted(n, std::move(out));
}

}  // namespace schurring
