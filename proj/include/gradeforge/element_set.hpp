#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace gradeforge {

/// Hard width of every bit-indexed subset. Enumerations over larger
/// carriers (e.g. a product G x H with |G||H| > 256) report size_overflow.
inline constexpr std::size_t kMaxElements = 256;

/// Fixed-width subset of {0, ..., kMaxElements - 1}.
class ElementSet {
  static constexpr std::size_t kWords = kMaxElements / 64;

 public:
  ElementSet() = default;
  ElementSet(std::initializer_list<std::size_t> members) {
    for (auto m : members) insert(m);
  }
  static ElementSet from_indices(std::vector<std::size_t> const& members) {
    ElementSet s;
    for (auto m : members) s.insert(m);
    return s;
  }
  static ElementSet range(std::size_t n) {
    ElementSet s;
    for (std::size_t i = 0; i < n; ++i) s.insert(i);
    return s;
  }

  bool contains(std::size_t i) const {
    return (_words[i >> 6] >> (i & 63)) & 1u;
  }
  void insert(std::size_t i) { _words[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void erase(std::size_t i) { _words[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  bool empty() const {
    for (auto w : _words)
      if (w) return false;
    return true;
  }
  std::size_t size() const {
    std::size_t n = 0;
    for (auto w : _words) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool is_subset_of(ElementSet const& other) const {
    for (std::size_t k = 0; k < kWords; ++k)
      if (_words[k] & ~other._words[k]) return false;
    return true;
  }
  bool intersects(ElementSet const& other) const {
    for (std::size_t k = 0; k < kWords; ++k)
      if (_words[k] & other._words[k]) return true;
    return false;
  }

  ElementSet& operator|=(ElementSet const& o) {
    for (std::size_t k = 0; k < kWords; ++k) _words[k] |= o._words[k];
    return *this;
  }
  ElementSet& operator&=(ElementSet const& o) {
    for (std::size_t k = 0; k < kWords; ++k) _words[k] &= o._words[k];
    return *this;
  }
  friend ElementSet operator|(ElementSet a, ElementSet const& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, ElementSet const& b) { return a &= b; }
  friend bool operator==(ElementSet const&, ElementSet const&) = default;

  /// Order by the bit pattern read as an unsigned integer with element 0 as
  /// the least significant bit.
  friend bool operator<(ElementSet const& a, ElementSet const& b) {
    for (std::size_t k = kWords; k-- > 0;) {
      if (a._words[k] != b._words[k]) return a._words[k] < b._words[k];
    }
    return false;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < kWords; ++k) {
      for (std::uint64_t w = _words[k]; w != 0; w &= w - 1) {
        f(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
      }
    }
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

 private:
  std::array<std::uint64_t, kWords> _words{};
};

}  // namespace gradeforge
