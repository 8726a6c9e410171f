#pragma once

#include <vector>

namespace tk::data {

struct RawTournament {
    const char* name;
    int order;
    const char* bits;
    const char* free;
};

struct RawException {
    int id;
    const char* tournament;
    const char* path;
    const char* S;
    const char* witnesses;
};

struct RawBiexception {
    const char* tag;
    int base;
    const char* path;
    bool out_neighbourhood;
    const char* neighbourhood;
    const char* S;
};

struct RawCycleException {
    int id;
    const char* tournament;
    const char* cycle;
};

const std::vector<RawTournament>& raw_tournaments();
const std::vector<RawException>& raw_exceptions();
const std::vector<RawBiexception>& raw_biexceptions();
const std::vector<RawCycleException>& raw_cycle_exceptions();

}  // namespace tk::data
