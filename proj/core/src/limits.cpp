#include "spinaltri/limits.hpp"

#include <cstdlib>
#include <string>

#include "spinaltri/errors.hpp"

namespace spinaltri {

std::optional<std::size_t> scale_override() {
    const char* env = std::getenv("SPINALTRI_MAX_DIM");
    if (!env || !*env) return std::nullopt;
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (*end != '\0' || v == 0) return std::nullopt;
    return static_cast<std::size_t>(v);
}

std::size_t max_vertices() { return scale_override() ? kMaxMaskVertices : kDefaultMaxVertices; }

std::size_t max_ambient_dim() { return scale_override().value_or(kDefaultMaxAmbientDim); }

std::size_t max_spine_enum_vertices() {
    return scale_override() ? kMaxMaskVertices : kDefaultMaxSpineEnumVertices;
}

void require_scale(std::string_view what, std::size_t value, std::size_t cap) {
    if (value > cap)
        throw ScaleError(std::string(what) + " = " + std::to_string(value) + " exceeds the desk-scale limit " +
                         std::to_string(cap) + " (set SPINALTRI_MAX_DIM to override)");
}

}  // namespace spinaltri
