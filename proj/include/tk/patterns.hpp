#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace tk {

// An oriented path: sign true for an outpath (first arc forward).
struct PathType {
    bool out = true;
    std::vector<int> blocks;

    int order() const;
    int arcs_count() const { return order() - 1; }
    // arc i joins positions i and i+1; true when it points forward.
    std::vector<bool> arcs() const;
    std::string str() const;

    auto operator<=>(const PathType&) const = default;
};

struct CycleType {
    std::vector<int> blocks;  // canonical; blocks[0] is forward

    int order() const;
    bool directed() const { return blocks.size() == 1; }
    std::vector<bool> arcs() const;
    std::string str() const;

    auto operator<=>(const CycleType&) const = default;
};

PathType make_path_type(bool out, std::vector<int> blocks);
PathType path_type_from_arcs(const std::vector<bool>& arcs);
PathType parse_path_type(std::string_view text);
PathType dual_type(const PathType& p);
PathType reverse_type(const PathType& p);
// *P: the path with its origin removed.
PathType drop_origin(const PathType& p);
std::vector<PathType> enumerate_path_types(int order);
std::vector<PathType> enumerate_outpath_types(int order);

CycleType cycle_canonical(const std::vector<int>& blocks, bool first_forward = true);
CycleType cycle_from_arcs(const std::vector<bool>& arcs);
CycleType parse_cycle_type(std::string_view text);
// Type of the cycle with every arc reversed.
CycleType dual_cycle_type(const CycleType& c);
CycleType directed_cycle(int order);
std::vector<CycleType> enumerate_cycle_types(int order, bool include_directed = false);

}  // namespace tk
