#include "gradeforge/span.hpp"

#include <stdexcept>

namespace gradeforge::span {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // Fermat: a^(p-2).
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1u) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

Subspace::Subspace(std::size_t dimension, std::uint32_t modulus)
    : _n(dimension), _p(modulus) {
  if (!is_prime(modulus) || modulus >= (1u << 31)) {
    throw std::invalid_argument("span modulus must be a prime below 2^31");
  }
}

std::size_t Subspace::reduce(Vector& v) const {
  for (std::size_t r = 0; r < _rows.size(); ++r) {
    std::uint64_t c = v[_pivots[r]];
    if (c == 0) continue;
    for (std::size_t j = 0; j < _n; ++j) {
      if (_rows[r][j] == 0) continue;
      v[j] = static_cast<std::uint32_t>((v[j] + (_p - c) * _rows[r][j]) % _p);
    }
  }
  for (std::size_t j = 0; j < _n; ++j)
    if (v[j] != 0) return j;
  return _n;
}

bool Subspace::add(Vector v) {
  std::size_t pivot = reduce(v);
  if (pivot == _n) return false;
  std::uint64_t inv = inverse_mod(v[pivot], _p);
  for (auto& x : v) x = static_cast<std::uint32_t>(x * inv % _p);
  // Keep the echelon form reduced: clear the new pivot from older rows.
  for (auto& row : _rows) {
    std::uint64_t c = row[pivot];
    if (c == 0) continue;
    for (std::size_t j = 0; j < _n; ++j)
      row[j] = static_cast<std::uint32_t>((row[j] + (_p - c) * v[j]) % _p);
  }
  _rows.push_back(std::move(v));
  _pivots.push_back(pivot);
  return true;
}

bool Subspace::contains(Vector v) const { return reduce(v) == _n; }

bool Subspace::is_subspace_of(Subspace const& other) const {
  for (auto const& row : _rows)
    if (!other.contains(row)) return false;
  return true;
}

}  // namespace gradeforge::span
