#pragma once

#include <cstdint>
#include <vector>

#include "tk/tournament.hpp"

namespace tk {

constexpr int kMaxEnumOrder = 8;
constexpr int kMaxEnumOrderExtended = 9;

// One tournament per isomorphism class, each in canonical form, sorted by
// canonical arc string. Orders above 8 need allow_extended.
const std::vector<Tournament>& tournaments_of_order(int n, int jobs = 1, bool allow_extended = false);

std::uint64_t count_tournaments(int n, int jobs = 1, bool allow_extended = false);

int default_jobs();

}  // namespace tk
