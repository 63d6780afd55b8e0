#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gradeforge/budget.hpp"
#include "gradeforge/category.hpp"

namespace gradeforge {

using BigInt = boost::multiprecision::cpp_int;

/// Another reading of the same count, reported next to the closed form.
struct CountVariant {
  std::string name;
  BigInt value;
  std::optional<bool> agrees;  // against the brute-force value, when present
};

struct CountReport {
  std::string formula;
  std::vector<std::pair<std::string, std::string>> parameters;
  BigInt closed_form;
  std::optional<BigInt> brute_force;  // absent when the oracle ran out of budget
  std::optional<bool> agrees;
  std::vector<CountVariant> variants;

  CountVariant const* variant(std::string const& name) const;
};

// Closed forms.

/// q^(n-1): elementary gradings of the n x n matrix algebra by a group of
/// order q.
BigInt count_matrix_group_gradings(unsigned n, unsigned q);

/// (p q^(m-1))^(n^m), evaluated exactly as written.
BigInt count_groupoid_gradings_as_printed(unsigned m, unsigned n, unsigned p, unsigned q);

/// Surjections {1..m} -> {1..n}: sum_i (-1)^i C(n,i) (n-i)^m.
BigInt count_surjective_functions(unsigned m, unsigned n);

/// |hom(G, H)| for finite abelian groups given as lists of cyclic orders,
/// via the prime-power product formula.
BigInt count_abelian_homs(std::vector<unsigned> const& g, std::vector<unsigned> const& h);

/// sum_{k=1..n} A_k / B_k: nonzero subspaces of F_p^n.
BigInt count_subspaces(unsigned p, unsigned n);

// Reports with brute-force oracles.

/// Closed form q^(n-1) against the zero homomorphisms from the matrix-unit
/// magma G_n to the cyclic group of order q with an absorbing zero.
CountReport report_matrix_group_gradings(unsigned n, unsigned q, Budget const& budget = {});

/// For connected groupoids. closed_form is the printed formula with q read
/// as the order of a vertex group of the target; variants carry
/// "printed_q_endomorphisms" (q = |hom(C_e, C_e)| as groups) and
/// "corrected" = n^m * |hom(C_e, L_f)| * |L_f|^(m-1) with m = |ob C|,
/// n = |ob L|. The oracle is enumerate_functors.
CountReport count_functors_connected_groupoids(FinitePrecategory const& from,
                                               FinitePrecategory const& to,
                                               Budget const& budget = {});

/// closed_form is the surjection count; variant "printed_over_n_factorial"
/// divides it by n!. The oracle enumerates all n^m functions.
CountReport report_surjective_functions(unsigned m, unsigned n, Budget const& budget = {});

CountReport report_abelian_homs(std::vector<unsigned> const& g, std::vector<unsigned> const& h,
                                Budget const& budget = {});

/// closed_form counts nonzero subspaces; variant "with_zero_subspace" adds
/// {0}. The oracle enumerates submagmas of (Z_p)^n and discards the empty
/// set and {0}.
CountReport report_subspaces(unsigned p, unsigned n, Budget const& budget = {});

/// For arbitrary groupoids. closed_form is the product of |hom(C_i, L_j)|
/// over all component pairs; variant "per_component_sum" is the product over
/// components C_i of the sum over L_j, which accounts for each component
/// landing in exactly one target component. The oracle is
/// enumerate_functors on the whole groupoids.
CountReport count_disconnected(FinitePrecategory const& from, FinitePrecategory const& to,
                               Budget const& budget = {});

}  // namespace gradeforge
