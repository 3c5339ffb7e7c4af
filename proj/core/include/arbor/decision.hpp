#pragma once

#include <cstddef>
#include <string_view>

namespace arbor {

/// Three-valued outcome of a budgeted decision procedure.
enum class Decision { yes, no, exhausted };

constexpr std::string_view to_string(Decision d) noexcept {
  switch (d) {
    case Decision::yes: return "true";
    case Decision::no: return "false";
    case Decision::exhausted: return "exhausted";
  }
  return "exhausted";
}

/// Default number of recursion nodes a single budgeted call may explore.
inline constexpr std::size_t default_budget = 100'000;

}  // namespace arbor
