#pragma once

#include <filesystem>
#include <istream>

#include "xover/genome.hpp"

namespace xover {

/// One genome per line; '#' starts a comment; blank lines are skipped.
/// Throws std::invalid_argument naming the offending line.
Population read_population(std::istream& in, const Alphabet& alphabet = Alphabet::binary());
Population load_population(const std::filesystem::path& path, const Alphabet& alphabet = Alphabet::binary());

} // namespace xover
