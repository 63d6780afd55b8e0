#include <cstdlib>
#include <string>

#include "gradeforge/budget.hpp"
#include "gradeforge/error.hpp"

namespace gradeforge {

char const* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::index_out_of_range: return "IndexOutOfRange";
    case ErrorCode::not_absorbing: return "NotAbsorbing";
    case ErrorCode::size_overflow: return "SizeOverflow";
    case ErrorCode::missing_zero: return "MissingZero";
    case ErrorCode::bad_composition: return "BadComposition";
    case ErrorCode::not_associative: return "NotAssociative";
    case ErrorCode::bad_identity: return "BadIdentity";
    case ErrorCode::not_a_group: return "NotAGroup";
    case ErrorCode::not_a_category: return "NotACategory";
    case ErrorCode::basis_mismatch: return "BasisMismatch";
    case ErrorCode::parse_error: return "ParseError";
  }
  return "Unknown";
}

Budget Budget::from_environment() {
  Budget b;
  if (char const* env = std::getenv("GRADEFORGE_BUDGET")) {
    try {
      std::size_t used = 0;
      auto v = std::stoull(env, &used);
      if (used == std::string(env).size() && v > 0) b.max_nodes = v;
    } catch (std::exception const&) {
    }
  }
  return b;
}

}  // namespace gradeforge
