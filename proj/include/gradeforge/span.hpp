#pragma once

// Exact linear algebra over a prime field, used as an independent check on
// the subset arithmetic of elementary families.

#include <cstdint>
#include <vector>

namespace gradeforge::span {

using Vector = std::vector<std::uint32_t>;

/// A subspace of F_p^n kept as rows in reduced echelon form.
class Subspace {
 public:
  Subspace(std::size_t dimension, std::uint32_t modulus);

  std::size_t ambient_dimension() const noexcept { return _n; }
  std::size_t rank() const noexcept { return _rows.size(); }

  /// Adds a vector; returns false if it was already in the span.
  bool add(Vector v);
  bool contains(Vector v) const;
  bool is_subspace_of(Subspace const& other) const;
  std::vector<Vector> const& rows() const noexcept { return _rows; }

 private:
  // Reduces v against the current rows in place; returns the pivot of the
  // remainder or n if it vanished.
  std::size_t reduce(Vector& v) const;

  std::size_t _n;
  std::uint32_t _p;
  std::vector<Vector> _rows;
  std::vector<std::size_t> _pivots;
};

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);
bool is_prime(std::uint32_t p);

}  // namespace gradeforge::span
