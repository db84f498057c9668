#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

namespace spinaltri {

// Desk-scale guards. The exact algorithms here are exponential in the
// worst case; these caps keep accidental large inputs from running for hours.
// Setting SPINALTRI_MAX_DIM=<d> raises the ambient-dimension cap to d and
// relaxes every vertex-count cap to the hard limit kMaxMaskVertices.

inline constexpr std::size_t kMaxMaskVertices = 64;  // vertex sets are 64-bit masks
inline constexpr std::size_t kDefaultMaxVertices = 30;
inline constexpr std::size_t kDefaultMaxAmbientDim = 16;
inline constexpr std::size_t kDefaultMaxSpineEnumVertices = 20;

/// Value of SPINALTRI_MAX_DIM, if set to a positive integer.
std::optional<std::size_t> scale_override();

std::size_t max_vertices();
std::size_t max_ambient_dim();
std::size_t max_spine_enum_vertices();

/// Throws ScaleError naming `what` if value > cap.
void require_scale(std::string_view what, std::size_t value, std::size_t cap);

}  // namespace spinaltri
