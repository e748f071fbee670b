#pragma once

#include <cstdint>
#include <iosfwd>

namespace quiverreach::cli {

/// Randomized property checks over `samples` generated quivers per property.
/// Returns true when every property held.
bool selftest(std::uint64_t seed, std::size_t samples, bool json, std::ostream& out);

}  // namespace quiverreach::cli
