#pragma once

#include <string>
#include <vector>

#include "tk/tournament.hpp"

namespace tk {

struct CanonicalLabeling {
    std::string bits;        // lexicographically least arc string over all orders
    std::vector<int> order;  // order[i] = original vertex placed at position i
};

// When root >= 0 the root is pinned to position 0 and the minimum is taken
// over the remaining positions only.
CanonicalLabeling canonical_labeling(const Tournament& t, int root = -1);

std::string canonical_form(const Tournament& t);
Tournament canonical_tournament(const Tournament& t);
bool is_isomorphic(const Tournament& a, const Tournament& b);

// Canonical form with a distinguished vertex.
std::string rooted_canonical_form(const Tournament& t, int root);

}  // namespace tk
