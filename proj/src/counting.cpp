#include "gradeforge/counting.hpp"

#include <limits>
#include <map>
#include <string>

#include "gradeforge/magma.hpp"

namespace gradeforge {

namespace {

BigInt power(BigInt const& base, BigInt const& exponent) {
  if (exponent > std::numeric_limits<unsigned>::max()) {
    throw Error(ErrorCode::size_overflow, "exponent too large to evaluate");
  }
  return boost::multiprecision::pow(base, exponent.convert_to<unsigned>());
}

BigInt power(unsigned base, unsigned exponent) { return power(BigInt(base), BigInt(exponent)); }

BigInt binomial(unsigned n, unsigned k) {
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

void finish(CountReport& r) {
  if (!r.brute_force) return;
  r.agrees = r.closed_form == *r.brute_force;
  for (auto& v : r.variants) v.agrees = v.value == *r.brute_force;
}

std::string join(std::vector<unsigned> const& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s;
}

// Prime-power factors of a list of cyclic orders: prime -> exponents.
std::map<unsigned, std::vector<unsigned>> primary_parts(std::vector<unsigned> const& cyclic) {
  std::map<unsigned, std::vector<unsigned>> out;
  for (unsigned n : cyclic) {
    if (n == 0) throw Error(ErrorCode::index_out_of_range, "cyclic order must be positive");
    for (unsigned p = 2; n > 1; ++p) {
      unsigned e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      if (e) out[p].push_back(e);
    }
  }
  return out;
}

void require_connected_groupoid(FinitePrecategory const& c) {
  if (c.object_count() == 0 || !is_groupoid(c) || !is_connected(c)) {
    throw Error(ErrorCode::not_a_category, "expected a nonempty connected groupoid");
  }
}

}  // namespace

CountVariant const* CountReport::variant(std::string const& name) const {
  for (auto const& v : variants)
    if (v.name == name) return &v;
  return nullptr;
}

BigInt count_matrix_group_gradings(unsigned n, unsigned q) {
  if (n == 0 || q == 0) throw Error(ErrorCode::index_out_of_range, "n and q must be positive");
  return power(q, n - 1);
}

BigInt count_groupoid_gradings_as_printed(unsigned m, unsigned n, unsigned p, unsigned q) {
  BigInt base = BigInt(p) * power(q, m == 0 ? 0 : m - 1);
  return power(base, power(n, m));
}

BigInt count_surjective_functions(unsigned m, unsigned n) {
  BigInt sum = 0;
  for (unsigned i = 0; i <= n; ++i) {
    BigInt term = binomial(n, i) * power(n - i, m);
    if (i % 2) sum -= term;
    else sum += term;
  }
  return sum;
}

BigInt count_abelian_homs(std::vector<unsigned> const& g, std::vector<unsigned> const& h) {
  auto gp = primary_parts(g);
  auto hp = primary_parts(h);
  BigInt r = 1;
  for (auto const& [p, gexps] : gp) {
    auto it = hp.find(p);
    if (it == hp.end()) continue;
    for (unsigned j : gexps)
      for (unsigned k : it->second) r *= power(p, std::min(j, k));
  }
  return r;
}

BigInt count_subspaces(unsigned p, unsigned n) {
  BigInt total = 0;
  BigInt pn = power(p, n);
  for (unsigned k = 1; k <= n; ++k) {
    BigInt a = 1, b = 1;
    BigInt pk = power(p, k);
    for (unsigned i = 0; i < k; ++i) {
      a *= pn - power(p, i);
      b *= pk - power(p, i);
    }
    total += a / b;
  }
  return total;
}

// ---------------------------------------------------------------------------

CountReport report_matrix_group_gradings(unsigned n, unsigned q, Budget const& budget) {
  CountReport r;
  r.formula = "matrix-group-gradings";
  r.parameters = {{"n", std::to_string(n)}, {"q", std::to_string(q)}};
  r.closed_form = count_matrix_group_gradings(n, q);
  try {
    auto gn = matrix_unit_zero_magma(n);
    auto h = adjoin_absorbing_zero(cyclic_group(q));
    r.brute_force = BigInt(enumerate_zero_homs(gn, h, budget).size());
  } catch (Error const& e) {
    if (e.code() != ErrorCode::size_overflow) throw;
  }
  finish(r);
  return r;
}

CountReport count_functors_connected_groupoids(FinitePrecategory const& from,
                                               FinitePrecategory const& to,
                                               Budget const& budget) {
  require_connected_groupoid(from);
  require_connected_groupoid(to);
  auto m = static_cast<unsigned>(from.object_count());
  auto n = static_cast<unsigned>(to.object_count());
  auto ge = vertex_monoid(from, 0).monoid;
  auto lf = vertex_monoid(to, 0).monoid;
  auto p = static_cast<unsigned>(enumerate_homs(ge, lf, budget).size());
  auto q_end = static_cast<unsigned>(enumerate_homs(ge, ge, budget).size());
  auto q_vertex = static_cast<unsigned>(lf.order());

  CountReport r;
  r.formula = "groupoid-functors";
  r.parameters = {{"m", std::to_string(m)},
                  {"n", std::to_string(n)},
                  {"p", std::to_string(p)},
                  {"q_endomorphisms", std::to_string(q_end)},
                  {"q_vertex_group", std::to_string(q_vertex)}};
  r.closed_form = count_groupoid_gradings_as_printed(m, n, p, q_vertex);
  r.variants.push_back(
      {"printed_q_endomorphisms", count_groupoid_gradings_as_printed(m, n, p, q_end), {}});
  r.variants.push_back(
      {"corrected", power(n, m) * p * power(q_vertex, m - 1), {}});
  try {
    r.brute_force = BigInt(enumerate_functors(from, to, budget).size());
  } catch (Error const& e) {
    if (e.code() != ErrorCode::size_overflow) throw;
  }
  finish(r);
  return r;
}

CountReport report_surjective_functions(unsigned m, unsigned n, Budget const& budget) {
  CountReport r;
  r.formula = "surjections";
  r.parameters = {{"m", std::to_string(m)}, {"n", std::to_string(n)}};
  r.closed_form = count_surjective_functions(m, n);
  r.variants.push_back({"printed_over_n_factorial", r.closed_form / factorial(n), {}});
  try {
    NodeCounter counter(budget);
    std::vector<unsigned> f(m, 0);
    std::uint64_t hits = 0;
    if (n > 0 || m == 0) {
      for (;;) {
        counter.tick();
        std::vector<bool> hit(n, false);
        for (auto x : f) hit[x] = true;
        if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) ++hits;
        std::size_t k = m;
        while (k > 0 && ++f[k - 1] == n) f[--k] = 0;
        if (k == 0) break;
      }
    }
    r.brute_force = BigInt(hits);
  } catch (Error const& e) {
    if (e.code() != ErrorCode::size_overflow) throw;
  }
  finish(r);
  return r;
}

CountReport report_abelian_homs(std::vector<unsigned> const& g, std::vector<unsigned> const& h,
                                Budget const& budget) {
  CountReport r;
  r.formula = "abelian-homs";
  r.parameters = {{"G", join(g)}, {"H", join(h)}};
  r.closed_form = count_abelian_homs(g, h);
  try {
    std::vector<std::size_t> gs(g.begin(), g.end()), hs(h.begin(), h.end());
    r.brute_force = BigInt(enumerate_homs(abelian_group(gs), abelian_group(hs), budget).size());
  } catch (Error const& e) {
    if (e.code() != ErrorCode::size_overflow) throw;
  }
  finish(r);
  return r;
}

CountReport report_subspaces(unsigned p, unsigned n, Budget const& budget) {
  CountReport r;
  r.formula = "subspaces";
  r.parameters = {{"p", std::to_string(p)}, {"n", std::to_string(n)}};
  r.closed_form = count_subspaces(p, n);
  r.variants.push_back({"with_zero_subspace", r.closed_form + 1, {}});
  try {
    auto group = abelian_group(std::vector<std::size_t>(n, p));
    auto subs = enumerate_submagmas(group, budget);
    // Drop the empty set and the zero subgroup.
    r.brute_force = BigInt(subs.size()) - 2;
  } catch (Error const& e) {
    if (e.code() != ErrorCode::size_overflow) throw;
  }
  if (r.brute_force) {
    r.agrees = r.closed_form == *r.brute_force;
    r.variants[0].agrees = r.variants[0].value == *r.brute_force + 1;
  }
  return r;
}

CountReport count_disconnected(FinitePrecategory const& from, FinitePrecategory const& to,
                               Budget const& budget) {
  auto cs = connected_components(from);
  auto ds = connected_components(to);
  CountReport r;
  r.formula = "disconnected-groupoids";
  r.parameters = {{"components_from", std::to_string(cs.size())},
                  {"components_to", std::to_string(ds.size())}};
  BigInt pairs = 1, sums = 1;
  for (auto const& c : cs) {
    BigInt sum = 0;
    for (auto const& d : ds) {
      BigInt k = enumerate_functors(c.category, d.category, budget).size();
      pairs *= k;
      sum += k;
    }
    sums *= sum;
  }
  r.closed_form = pairs;
  r.variants.push_back({"per_component_sum", sums, {}});
  try {
    r.brute_force = BigInt(enumerate_functors(from, to, budget).size());
  } catch (Error const& e) {
    if (e.code() != ErrorCode::size_overflow) throw;
  }
  finish(r);
  return r;
}

}  // namespace gradeforge
