#pragma once

#include <string>
#include <string_view>

namespace xover {

/// How the minimum generation count treats a target that is a proper subset
/// of the source population.
enum class Semantics {
    /// Minimum k with target in the k-th iterated crossover closure of {source}:
    /// 0 if equal, 1 if a proper subset, otherwise min k with target in S_k.
    closure,
    /// min k with target contained in S_k(source); no proper-subset case.
    containment,
};

std::string_view to_string(Semantics semantics) noexcept;
Semantics parse_semantics(std::string_view text);

} // namespace xover
