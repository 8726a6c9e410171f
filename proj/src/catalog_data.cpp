#include "catalog_data.hpp"

namespace tk::data {

// Labels are 1-based. `free` lists pairs with no fixed orientation; their
// stored bit is an arbitrary default.
const std::vector<RawTournament>& raw_tournaments() {
    static const std::vector<RawTournament> v = {
        {"3A", 3, "101", ""},
        {"4A", 4, "110101", ""},
        {"4B", 4, "100100", ""},
        {"4C", 4, "100100", "1-4,2-4,3-4"},
        {"5A", 5, "1100110111", ""},
        {"5B", 5, "1110110101", ""},
        {"5C", 5, "1010110101", ""},
        {"5D", 5, "1101100110", ""},
        {"5E", 5, "1100100111", ""},
        {"5F", 5, "1000101010", "1-5"},
        {"6A", 6, "100101110010101", ""},
        {"6B", 6, "101100110100011", ""},
        {"6C", 6, "100011001001100", ""},
        {"6D", 6, "111001100111111", ""},
        {"6E", 6, "111001100110111", ""},
        {"6F", 6, "100101001100010", ""},
        {"6G", 6, "001100010001001", ""},
        {"6H", 6, "101101110110011", ""},
        {"6I", 6, "001110110001001", ""},
        {"6J", 6, "001110111001000", ""},
        {"6K", 6, "101100110000001", ""},
        {"6L", 6, "110011001001100", ""},
        {"6M", 6, "110001100110100", "1-6,2-6,3-6,4-6,5-6"},
        {"6N", 6, "100001000000101", ""},
        {"6O", 6, "001100110110111", "1-2,1-3,2-3"},
        {"6P", 6, "000110000100001", "3-5,4-5"},
        {"7A", 7, "110100110101101110111", ""},
        {"7B", 7, "100001000010001100100", ""},
        {"7C", 7, "100001100010001100100", ""},
        {"7D", 7, "111100111001011111111", ""},
        {"7E", 7, "111100000111011111111", ""},
        {"7F", 7, "010011000110011100101", ""},
        {"7G", 7, "100010100100011101010", ""},
        {"7H", 7, "101101011010000000111", ""},
        {"7I", 7, "001101011011101011100", ""},
        {"7J", 7, "010000000001110101111", ""},
        {"7K", 7, "111000111001110111111", ""},
        {"8A", 8, "1110100110100110101101110111", ""},
        {"8B", 8, "0100000000000111011011111111", ""},
        {"8C", 8, "1101000110100110101100110100", "1-8,2-8,3-8,4-8,5-8,6-8,7-8"},
        {"8D", 8, "1000001100001000010000000000", "4-5,4-6,4-7,5-6,5-7,6-7"},
    };
    return v;
}

const std::vector<RawException>& raw_exceptions() {
    static const std::vector<RawException> v = {
    {0, "3A", "+(1,1)", "1,2,3", ""},
    {1, "4A", "+(1,1,1)", "1,2,3", "4213"},
    {2, "4A", "+(1,2)", "3,4", "1324;2314"},
    {3, "4A", "+(2,1)", "1,2,", "3421;4132"},
    {4, "5A", "+(1,1,1,1)", "1,2,3,4,5", ""},
    {5, "5B", "+(2,1,1)", "1,2,3", "45213;51423"},
    {6, "5C", "+(1,1,2)", "4,5", "12534;23514;31524"},
    {7, "5C", "+(2,1,1)", "1,2,3,4", "51423"},
    {8, "5D", "+(1,1,1,1)", "2,5", "12543;35124;42153"},
    {9, "5E", "+(1,1,1,1)", "2,4,5", "12453;35421"},
    {10, "5E", "+(1,2,1)", "3,5", "12435;23145;45312"},
    {11, "5E", "+(2,2)", "1,2", "34215;42315;52314"},
    {12, "5E", "+(1,1,2)", "1,2", "35412;41523;51423"},
    {13, "6A", "+(3,1,1)", "3,4", "156324;256143;562341;612345"},
    {14, "6B", "+(2,1,1,1)", "3,4", "154326;254316;562143;612345"},
    {15, "6C", "+(1,1,2,1)", "1,2,3,6", "435261;534261"},
    {16, "6C", "+(1,2,1,1)", "4,5,6", "163425;263415;362415"},
    {17, "6D", "+(2,1,1,1)", "2,4,6", "124365;346521;562143"},
    {18, "6D", "+(1,2,2)", "2,4,6", "126345;341562;564123"},
    {19, "6D", "+(1,1,1,2)", "2,4,6", "125643;341265;563421"},
    {20, "6E", "+(1,1,1,1,1)", "1,2", "341256;465213;516324;621435"},
    {21, "6E", "+(2,1,1,1)", "1,2", "346521;452136;562143;634125"},
    {22, "6F", "+(1,1,1,1,1)", "1,2,3", "421563;532641;613452"},
    {23, "6G", "+(1,1,1,1,1)", "4,6", "145632;216453;326415;546132"},
    {24, "6H", "+(1,1,1,1,1)", "1,2,3,4", "543162;613425"},
    {25, "6H", "+(1,1,1,2)", "4,5", "142536;243516;341526;613452"},
    {26, "6H", "+(1,1,3)", "4,5,6", "145623;245631;345612"},
    {27, "6H", "+(1,3,1)", "4,6", "126534;236514;316524;543261"},
    {28, "6H", "+(2,1,2)", "4,5", "124563;234561;314562;614235"},
    {29, "6I", "+(1,1,1,1,1)", "4,6", "145632;213654;365421;546231"},
    {30, "6J", "+(1,1,1,1,1)", "4,6", "162453;261453;312465;542631"},
    {31, "6K", "+(1,2,2)", "3,4", "146532;246531;541632;634125"},
    {32, "6L", "+(1,2,1,1)", "5,6", "163425;263415;361425;456132"},
    {33, "7A", "+(1,1,1,1,1,1)", "1,2,3,4,5,6,7", ""},
    {34, "7B", "+(1,1,2,1,1)", "1,2,3", "4576132;5674132;6475132;7541263"},
    {35, "7B", "+(2,1,3)", "1,2,3", "4315627;5316427;6314527;7435612"},
    {36, "7B", "+(2,3,1)", "1,2", "3125476;4567132;5647132;6457132;7421356"},
    {37, "7C", "+(1,1,1,1,1,1)", "4,5,6", "1243567;2341567;3142567;7541632"},
    {38, "7C", "+(1,1,2,1,1)", "1,2,3", "4156327;5164327;6145327;7541263"},
    {39, "7C", "+(2,1,3)", "1,2,3", "4315627;5316427;6314527;7435612"},
    {40, "7D", "+(1,1,1,2,1)", "1,2", "3412756;4512736;5312746;6215437;7215436"},
    {41, "7D", "+(1,1,1,3)", "6,7", "1546327;2546317;3745216;4753216;5734216"},
    {42, "7D", "+(2,2,1,1)", "6,7", "1342675;2341675;3465127;4563127;5364127"},
    {43, "7E", "+(1,1,2,1,1)", "2,7", "1236745;3214756;4213756;5213746;6734215"},
    {44, "7F", "+(1,1,1,3)", "6,7", "1732546;2713546;3721546;4127635;5127634"},
    {45, "7G", "+(2,1,2,1)", "1,7", "2654317;3654721;4367125;5367124;6517234"},
    {46, "7H", "+(2,2,2)", "4,7", "1746532;2746531;3126574;5321674;6247531"},
    {47, "7I", "+(1,1,2,1,1)", "4,5,7", "1456237;2456137;3456127;6135427"},
    {48, "7J", "+(1,1,2,1,1)", "1,2", "3245167;4235167;5234167;6234157;7234156"},
    {49, "8A", "+(1,1,1,1,1,1,1)", "1,2", "35461278;46527183;56487213;67341285;74358216;85347216"},
    {50, "8A", "+(2,1,1,1,1,1)", "1,2", "34652718;46752138;56734128;68214375;78216453;83412576"},
    {51, "8B", "+(2,1,2,1,1)", "2,8", "13245867;32145867;42156873;52164873;62145873;73245861"},
    };
    return v;
}

const std::vector<RawBiexception>& raw_biexceptions() {
    static const std::vector<RawBiexception> v = {
    {"(0,0)(1)", 0, "+(2,1)", true, "1,2,3", "1,2,3"},
    {"(0,0)(2)", 0, "+(2,1)", true, "1,2", "1,2"},
    {"(1,0)(1)", 1, "+(2,1,1)", true, "1,3", "1,2,3"},
    {"(1,0)(2)", 1, "+(2,1,1)", true, "2,3", "1,2"},
    {"(1,0)(3)", 1, "+(2,1,1)", true, "1,2,3", "1,2"},
    {"(2,0)", 2, "+(2,2)", true, "3,4", "3"},
    {"(4,0)(1)", 4, "+(2,1,1,1)", true, "1,2", "5"},
    {"(4,0)(2)", 4, "+(2,1,1,1)", true, "1,2,3", "1,2"},
    {"(6,0)", 6, "+(2,1,2)", true, "4,5", "4"},
    {"(7,0)(1)", 7, "+(3,1,1)", true, "1,2,4", "1"},
    {"(7,0)(2)", 7, "+(3,1,1)", true, "1,4", "3"},
    {"(9,0)(1)", 9, "+(2,1,1,1)", true, "2,4,5", "2"},
    {"(9,0)(2)", 9, "+(2,1,1,1)", true, "4,5", "2,5"},
    {"(15,0)(1)", 15, "+(2,1,2,1)", true, "1,2,6", "1"},
    {"(15,0)(2)", 15, "+(2,1,2,1)", true, "1,6", "3"},
    {"(16,0)(1)", 16, "+(2,2,1,1)", true, "4,5", "6"},
    {"(16,0)(2)", 16, "+(2,2,1,1)", true, "4,5,6", "6"},
    {"(26,0)(1)", 26, "+(2,1,3)", true, "4,5,6", "4,5"},
    {"(26,0)(2)", 26, "+(2,1,3)", true, "4,6", "4,5"},
    {"(26,0)(3)", 26, "+(2,1,3)", true, "5,6", "4,5"},
    {"(27,0)", 27, "+(2,3,1)", true, "4,6", "4"},
    {"(31,0)", 31, "+(2,2,2)", true, "3,4", "4"},
    {"(33,0)(1)", 33, "+(2,1,1,1,1,1)", true, "1,2,3,5", "1"},
    {"(33,0)(2)", 33, "+(2,1,1,1,1,1)", true, "1,2,4,7", "7"},
    {"(48,0)", 48, "+(2,1,2,1,1)", true, "1,2", "2"},
    {"(0,1)", 0, "-(1,1,1)", false, "1,2", "1,2"},
    {"(1,1)(1)", 1, "-(1,1,1,1)", false, "1,2", "1,3"},
    {"(1,1)(2)", 1, "-(1,1,1,1)", false, "1,3", "1"},
    {"(1,1)(3)", 1, "-(1,1,1,1)", false, "2,3", "1,2,3,4"},
    {"(1,1)(4)", 1, "-(1,1,1,1)", false, "1,2,3", "1,3"},
    {"(2,1)", 2, "-(1,1,2)", false, "3,4", "4"},
    {"(3,1)", 3, "-(1,2,1)", false, "1,2", "1,4"},
    {"(4,1)(1)", 4, "-(1,1,1,1,1)", false, "1,2", "3"},
    {"(4,1)(2)", 4, "-(1,1,1,1,1)", false, "1,2,3", "3"},
    {"(4,1)(3)", 4, "-(1,1,1,1,1)", false, "1,2,4", "4"},
    {"(5,1)", 5, "-(1,2,1,1)", false, "1,2,3", "5"},
    {"(6,1)", 6, "-(1,1,1,2)", false, "4,5", "4,5"},
    {"(7,1)(1)", 7, "-(1,2,1,1)", false, "1,2,3,4", "4,5"},
    {"(7,1)(2)", 7, "-(1,2,1,1)", false, "1,2,3", "4,5"},
    {"(7,1)(3)", 7, "-(1,2,1,1)", false, "1,2,4", "1,2"},
    {"(8,1)", 8, "-(1,1,1,1,1)", false, "2,5", "1,5"},
    {"(9,1)(1)", 9, "-(1,1,1,1,1)", false, "2,4,5", "1,2,4"},
    {"(9,1)(2)", 9, "-(1,1,1,1,1)", false, "2,5", "1"},
    {"(9,1)(3)", 9, "-(1,1,1,1,1)", false, "2,4", "4"},
    {"(9,1)(4)", 9, "-(1,1,1,1,1)", false, "4,5", "4"},
    {"(10,1)", 10, "-(1,1,2,1)", false, "3,5", "3,4,5"},
    {"(11,1)", 11, "-(1,2,2)", false, "1,2", "1,4"},
    {"(12,1)", 12, "-(1,1,1,2)", false, "1,2", "1,4"},
    {"(15,1)(1)", 15, "-(1,1,1,2,1)", false, "1,2,3,6", "6"},
    {"(15,1)(2)", 15, "-(1,1,1,2,1)", false, "1,2,3", "6"},
    {"(16,1)(1)", 16, "-(1,1,2,1,1)", false, "4,5,6", "4,5"},
    {"(16,1)(2)", 16, "-(1,1,2,1,1)", false, "4,5", "4"},
    {"(16,1)(3)", 16, "-(1,1,2,1,1)", false, "4,6", "4,5"},
    {"(16,1)(4)", 16, "-(1,1,2,1,1)", false, "5,6", "4,5"},
    {"(22,1)", 22, "-(1,1,1,1,1,1)", false, "1,2,3", "1,2,3,4,5,6"},
    {"(24,1)", 24, "-(1,1,1,1,1,1)", false, "1,2,3,4", "4,5"},
    {"(26,1)(1)", 26, "-(1,1,1,3)", false, "4,5,6", "6"},
    {"(26,1)(2)", 26, "-(1,1,1,3)", false, "4,5", "6"},
    {"(26,1)(3)", 26, "-(1,1,1,3)", false, "4,6", "6"},
    {"(32,1)", 32, "-(1,1,2,1,1)", false, "5,6", "4,5"},
    {"(33,1)(1)", 33, "-(1,1,1,1,1,1,1)", false, "1,2,5,7", "2"},
    {"(33,1)(2)", 33, "-(1,1,1,1,1,1,1)", false, "1,2,3,6", "3"},
    };
    return v;
}

const std::vector<RawCycleException>& raw_cycle_exceptions() {
    static const std::vector<RawCycleException> v = {
        {1, "3A", "(2,1)"},
        {2, "5A", "(2,1,1,1)"},
        {3, "7A", "(2,1,1,1,1,1)"},
        {4, "4C", "(1,1,1,1)"},
        {5, "6M", "(1,1,1,1,1,1)"},
        {6, "8C", "(1,1,1,1,1,1,1,1)"},
        {7, "6N", "(4,2)"},
        {8, "4B", "(2,2)"},
        {9, "5C", "(4,1)"},
        {10, "8D", "(1,1,1,1,1,1,1,1)"},
        {11, "6O", "(1,1,1,1,1,1)"},
        {12, "6P", "(1,1,1,1,1,1)"},
        {13, "6F", "(2,1,2,1)"},
        {14, "6D", "(2,2,1,1)"},
        {15, "5A", "(1,1,1,1)"},
        {16, "5F", "(1,1,1,1)"},
        {17, "7K", "(1,1,1,1,1,1)"},
        {18, "7A", "(2,1,2,1)"},
    };
    return v;
}

}  // namespace tk::data
