#pragma once

// Fixture loading and brute-force oracles shared by the test binaries.
// The oracles only read tables through FiniteMagma::product and the
// category accessors; none of them calls a library enumerator.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gradeforge/algebra.hpp"
#include "gradeforge/category.hpp"
#include "gradeforge/io.hpp"
#include "gradeforge/magma.hpp"

namespace fixtures {

inline std::string path(std::string const& name) {
  return std::string(GRADEFORGE_FIXTURE_DIR) + "/" + name;
}

inline std::string text(std::string const& name) {
  std::ifstream in(path(name), std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline gradeforge::FiniteMagma magma(std::string const& name) {
  return gradeforge::io::parse_magma(text(name));
}

inline gradeforge::FinitePrecategory category(std::string const& name) {
  return gradeforge::io::parse_category(text(name));
}

// Representatives of the ten classes of order-2 magmas, "x1x2x3x4" meaning
// aa=x1, ab=x2, ba=x3, bb=x4 with a=0, b=1.
inline std::vector<std::string> const& order2_names() {
  static std::vector<std::string> const names{"aaaa", "baaa", "abaa", "aaba", "aaab",
                                              "aabb", "bbaa", "abab", "baba", "abba"};
  return names;
}

inline gradeforge::FiniteMagma from_letters(std::string const& w) {
  std::vector<gradeforge::Element> t;
  for (char c : w) t.push_back(c == 'a' ? 0 : 1);
  return gradeforge::FiniteMagma::validate(2, t);
}

inline std::vector<std::string> order4_names() {
  return {"z4", "klein", "left_zero", "null", "min", "z3_with_zero",
          "random1", "random2", "random3", "random4"};
}

// Every fixture file, for round-trip checks.
inline std::vector<std::string> all_files() {
  std::vector<std::string> out;
  for (auto const& n : order2_names()) out.push_back("magma/" + n + ".mag");
  for (auto const& n : order4_names()) out.push_back("order4/" + n + ".mag");
  for (char const* n : {"g1", "g2", "g3", "remark_g", "remark_h"})
    out.push_back(std::string("zero/") + n + ".mag");
  for (char const* n : {"gamma", "lambda_group", "lambda_idempotent", "thin2", "thin3",
                        "z2_on_2", "z3"})
    out.push_back(std::string("category/") + n + ".cat");
  return out;
}

}  // namespace fixtures

namespace oracle {

using gradeforge::Element;
using gradeforge::FiniteMagma;
using gradeforge::FinitePrecategory;
using Map = std::vector<Element>;

// Calls fn on every function {0..n-1} -> {0..m-1}, lexicographically.
inline void for_each_map(std::size_t n, std::size_t m, std::function<void(Map const&)> const& fn) {
  Map f(n, 0);
  if (m == 0) {
    if (n == 0) fn(f);
    return;
  }
  while (true) {
    fn(f);
    std::size_t i = n;
    while (i > 0 && f[i - 1] + 1 == m) f[--i] = 0;
    if (i == 0) return;
    ++f[i - 1];
  }
}

inline std::vector<Map> homs(FiniteMagma const& g, FiniteMagma const& h) {
  std::vector<Map> out;
  for_each_map(g.order(), h.order(), [&](Map const& f) {
    for (Element x = 0; x < g.order(); ++x)
      for (Element y = 0; y < g.order(); ++y)
        if (f[g.product(x, y)] != h.product(f[x], f[y])) return;
    out.push_back(f);
  });
  return out;
}

inline std::vector<Map> zero_homs(FiniteMagma const& g, FiniteMagma const& h) {
  Element g0 = *g.zero(), h0 = *h.zero();
  std::vector<Map> out;
  for_each_map(g.order(), h.order(), [&](Map const& f) {
    for (Element x = 0; x < g.order(); ++x)
      if ((f[x] == h0) != (x == g0)) return;
    for (Element x = 0; x < g.order(); ++x)
      for (Element y = 0; y < g.order(); ++y)
        if (g.product(x, y) != g0 && f[g.product(x, y)] != h.product(f[x], f[y])) return;
    out.push_back(f);
  });
  return out;
}

// Subsets as bit masks; element i is bit i.
inline bool closed(FiniteMagma const& g, std::uint64_t mask) {
  for (Element x = 0; x < g.order(); ++x)
    if (mask >> x & 1)
      for (Element y = 0; y < g.order(); ++y)
        if ((mask >> y & 1) && !(mask >> g.product(x, y) & 1)) return false;
  return true;
}

inline std::vector<std::uint64_t> submagmas(FiniteMagma const& g) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.order()); ++mask)
    if (closed(g, mask)) out.push_back(mask);
  return out;
}

// Relations on G x H as masks over pairs g*|H| + h.
inline std::vector<std::uint64_t> product_submagmas(FiniteMagma const& g, FiniteMagma const& h) {
  std::size_t n = g.order() * h.order();
  std::vector<std::uint64_t> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    for (std::size_t p = 0; p < n && ok; ++p) {
      if (!(mask >> p & 1)) continue;
      for (std::size_t q = 0; q < n && ok; ++q) {
        if (!(mask >> q & 1)) continue;
        auto gg = g.product(p / h.order(), q / h.order());
        auto hh = h.product(p % h.order(), q % h.order());
        ok = mask >> (gg * h.order() + hh) & 1;
      }
    }
    if (ok) out.push_back(mask);
  }
  return out;
}

// Zero submagmas with the literal definition: the pairs over 0_H are exactly
// (0_G, 0_H), and products with nonzero G-component stay inside. When
// `minimal_zero_row` is set, (0_G, h) is excluded for h != 0_H.
inline std::vector<std::uint64_t> zero_submagmas(FiniteMagma const& g, FiniteMagma const& h,
                                                 bool minimal_zero_row) {
  Element g0 = *g.zero(), h0 = *h.zero();
  std::size_t n = g.order() * h.order();
  auto bit = [&](Element x, Element y) { return std::uint64_t{1} << (x * h.order() + y); };
  std::vector<std::uint64_t> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    for (Element x = 0; x < g.order() && ok; ++x)
      for (Element y = 0; y < h.order() && ok; ++y) {
        bool in = mask & bit(x, y);
        if (y == h0) ok = in == (x == g0);
        else if (x == g0 && minimal_zero_row) ok = !in;
      }
    for (std::size_t p = 0; p < n && ok; ++p) {
      if (!(mask >> p & 1)) continue;
      for (std::size_t q = 0; q < n && ok; ++q) {
        if (!(mask >> q & 1)) continue;
        auto gg = g.product(p / h.order(), q / h.order());
        if (gg == g0) continue;
        ok = mask & bit(gg, h.product(p % h.order(), q % h.order()));
      }
    }
    if (ok) out.push_back(mask);
  }
  return out;
}

inline bool preserves_structure(FinitePrecategory const& c, FinitePrecategory const& d,
                                Map const& obj, Map const& mor, bool identities) {
  for (std::size_t s = 0; s < c.morphism_count(); ++s) {
    if (d.dom(mor[s]) != obj[c.dom(s)] || d.cod(mor[s]) != obj[c.cod(s)]) return false;
  }
  for (std::size_t s = 0; s < c.morphism_count(); ++s)
    for (std::size_t t = 0; t < c.morphism_count(); ++t) {
      auto st = c.compose(s, t);
      if (!st) continue;
      auto image = d.compose(mor[s], mor[t]);
      if (!image || *image != mor[*st]) return false;
    }
  if (identities) {
    for (std::size_t x = 0; x < c.object_count(); ++x) {
      auto id = c.identity(x);
      auto target = d.identity(obj[x]);
      if (!id || !target || mor[*id] != *target) return false;
    }
  }
  return true;
}

// (object map, morphism map) pairs, lexicographic in that order.
inline std::vector<std::pair<Map, Map>> prefunctors(FinitePrecategory const& c,
                                                    FinitePrecategory const& d,
                                                    bool identities = false) {
  std::vector<std::pair<Map, Map>> out;
  for_each_map(c.object_count(), d.object_count(), [&](Map const& obj) {
    for_each_map(c.morphism_count(), d.morphism_count(), [&](Map const& mor) {
      if (preserves_structure(c, d, obj, mor, identities)) out.emplace_back(obj, mor);
    });
  });
  return out;
}

inline std::vector<std::uint64_t> subprecategories(FinitePrecategory const& c) {
  std::vector<std::uint64_t> out;
  std::size_t n = c.morphism_count();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    for (std::size_t s = 0; s < n && ok; ++s)
      for (std::size_t t = 0; t < n && ok; ++t) {
        if (!(mask >> s & 1) || !(mask >> t & 1)) continue;
        if (auto st = c.compose(s, t)) ok = mask >> *st & 1;
      }
    if (ok) out.push_back(mask);
  }
  return out;
}

// Number of isomorphism classes of magmas of order n, and the least table
// (row-major, earlier entries more significant) of each class.
inline std::vector<std::vector<Element>> census(std::size_t n) {
  std::size_t cells = n * n;
  std::vector<Element> perm(n);
  std::vector<std::vector<Element>> perms;
  std::iota(perm.begin(), perm.end(), 0);
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  std::set<std::vector<Element>> seen, reps;
  std::vector<Element> t(cells, 0);
  while (true) {
    if (!seen.count(t)) {
      std::vector<Element> least = t;
      for (auto const& p : perms) {
        // relabel: table'[p[a]][p[b]] = p[table[a][b]]
        std::vector<Element> r(cells);
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b) r[p[a] * n + p[b]] = p[t[a * n + b]];
        seen.insert(r);
        least = std::min(least, r);
      }
      reps.insert(least);
    }
    std::size_t i = cells;
    while (i > 0 && t[i - 1] + 1 == n) t[--i] = 0;
    if (i == 0) break;
    ++t[i - 1];
  }
  return {reps.begin(), reps.end()};
}

// Subgroups of (Z_p)^n, i.e. subspaces, counted by testing every subset of
// vectors for closure under addition. Includes the zero subspace.
inline std::size_t subspaces(unsigned p, unsigned n) {
  std::size_t size = 1;
  for (unsigned i = 0; i < n; ++i) size *= p;
  auto add = [&](std::size_t x, std::size_t y) {
    std::size_t r = 0, scale = 1;
    for (unsigned i = 0; i < n; ++i) {
      r += ((x % p + y % p) % p) * scale;
      x /= p, y /= p, scale *= p;
    }
    return r;
  };
  std::size_t count = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << size); ++mask) {
    bool ok = true;
    for (std::size_t x = 0; x < size && ok; ++x)
      for (std::size_t y = 0; y < size && ok; ++y)
        if ((mask >> x & 1) && (mask >> y & 1)) ok = mask >> add(x, y) & 1;
    if (ok) ++count;
  }
  return count;
}

inline std::uint64_t surjections(unsigned m, unsigned n) {
  std::uint64_t count = 0;
  for_each_map(m, n, [&](Map const& f) {
    std::set<Element> image(f.begin(), f.end());
    if (image.size() == n) ++count;
  });
  return count;
}

// Parts of F(f): basis indices of the grading magma sent to each h.
inline std::vector<std::set<std::size_t>> family(std::size_t basis, std::size_t targets,
                                                 std::vector<std::pair<std::size_t, std::size_t>> const& pairs) {
  std::vector<std::set<std::size_t>> parts(targets);
  for (auto [g, h] : pairs)
    if (g < basis) parts[h].insert(g);
  return parts;
}

}  // namespace oracle

inline std::vector<std::size_t> members(gradeforge::ElementSet const& s) {
  auto m = s.members();
  return {m.begin(), m.end()};
}

inline std::uint64_t mask_of(gradeforge::ElementSet const& s) {
  std::uint64_t m = 0;
  for (auto i : s.members()) m |= std::uint64_t{1} << i;
  return m;
}

inline std::uint64_t mask_of(gradeforge::PairRelation const& r) {
  std::uint64_t m = 0;
  for (auto [g, h] : r.pairs()) m |= std::uint64_t{1} << (g * r.right_order() + h);
  return m;
}
