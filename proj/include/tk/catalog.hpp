#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tk/patterns.hpp"
#include "tk/search.hpp"
#include "tk/tournament.hpp"

namespace tk {

// ---- named tournaments -------------------------------------------------

std::vector<std::string> tournament_names();
Tournament exception_tournament(const std::string& name);
// Pairs with no fixed orientation (0-based); either one is allowed.
std::vector<std::pair<int, int>> free_pairs(const std::string& name);
// Every orientation of the free pairs, deduplicated up to isomorphism.
std::vector<Tournament> completions(const std::string& name);

// ---- finite path exceptions ---------------------------------------------

struct ExceptionRecord {
    int id = 0;
    std::string tournament;
    PathType path;
    Mask S = 0;
    std::vector<Embedding> witnesses;
};

const std::vector<ExceptionRecord>& finite_path_exceptions();

// Exception predicate: two non-origins x,y with s+(x,y) >= b1(P)+1.
bool is_exception_pair(const Tournament& t, const PathType& p);

// ---- infinite families ---------------------------------------------------

struct FamilyParams {
    std::optional<Tournament> x;
    std::optional<Tournament> y;
    int designated = 0;  // vertex of T(X) carrying the fixed label
};

struct FamilyInstance {
    std::string family;  // "E1".."E14", "E8'", "E9'", "E10'"
    std::string key;     // family, order and parameters
    Tournament t;
    PathType path;
    Mask S = 0;
    Mask x_set = 0;  // vertices of X in t
    Mask y_set = 0;
};

std::vector<std::string> family_ids();
// Throws std::invalid_argument when a stated condition fails.
FamilyInstance instantiate_family(const std::string& id, const FamilyParams& params);
// Same construction with the side conditions skipped.
FamilyInstance instantiate_family_unchecked(const std::string& id, const FamilyParams& params);
// All instances with order <= max_order over every parameter choice up to
// isomorphism, deduplicated on (tournament class, path type).
const std::vector<FamilyInstance>& family_instances(int max_order = 8);

// ---- biexceptions --------------------------------------------------------

struct BiexceptionRecord {
    std::string id;    // e.g. "(0,0)(1)" or "(E1(5),0)[X=...]"
    std::string base;  // "Exc 3" or a family instance key
    int tag = 0;       // 0: *P outpath with N+ given, 1: N- given
    PathType path;
    bool out_neighbourhood = true;
    Mask neighbourhood = 0;  // over T - x
    Mask S = 0;
    Tournament t;  // base extended by x = last vertex
    int x = 0;
};

const std::vector<BiexceptionRecord>& biexception_records(int max_order = 8);

// ---- cycle exceptions ----------------------------------------------------

struct CycleExceptionRecord {
    int id = 0;
    std::string tournament;
    CycleType cycle;
};

const std::vector<CycleExceptionRecord>& cycle_exceptions();

// ---- matching ------------------------------------------------------------

// "Exc k" or a family instance key.
std::optional<std::string> match_exception(const Tournament& t, const PathType& p);
// "A<i>" for a listed record (any completion of its template).
std::optional<std::string> match_exception(const Tournament& t, const CycleType& c);
std::optional<std::string> match_biexception(const Tournament& t, const PathType& p, int x);

std::string catalog_json();

}  // namespace tk
