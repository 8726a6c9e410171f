#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "tk/patterns.hpp"
#include "tk/tournament.hpp"

// Slow reference implementations used only by the tests. None of these call
// into the search engine or the canonical labeller.
namespace oracle {

// Adjacency as a plain matrix so the oracles do not share bit tricks with tk.
using Adj = std::vector<std::vector<bool>>;

Adj adjacency(const tk::Tournament& t);

// Minimal arc string over every permutation.
std::string canonical(const tk::Tournament& t);

// All iso classes of order n from all 2^(n choose 2) arc strings.
std::set<std::string> classes(int n);

bool follows(const Adj& a, const std::vector<bool>& arcs, const std::vector<int>& seq, bool closed);

// Hamiltonian path origins (0-based mask).
std::uint64_t origins(const tk::Tournament& t, const tk::PathType& p);
std::uint64_t count_paths(const tk::Tournament& t, const tk::PathType& p);
// Least Hamiltonian witness in lexicographic order, empty when absent.
std::vector<int> least_path(const tk::Tournament& t, const tk::PathType& p);
bool has_cycle(const tk::Tournament& t, const tk::CycleType& c);

}  // namespace oracle
