#pragma once

#include <cstdint>
#include <string_view>

namespace relmine {

std::uint64_t splitmix64(std::uint64_t x);

// Per-stage seed: the stage name is hashed (FNV-1a) and mixed into the base
// seed, so stages draw from independent streams.
std::uint64_t derive_seed(std::uint64_t base, std::string_view stage);
std::uint64_t derive_seed(std::uint64_t base, std::string_view stage, std::uint64_t index);

}  // namespace relmine
