// Reference tables for the E7 verification suite. Generated data;
// expressions use the grammar of parse.hpp (k is the coupling, z1..z7
// the character coordinates, weights are Dynkin-label digit strings).
#pragma once

#include <cstddef>

namespace cstrig::tables {

struct ExprEntry { const char* key; const char* expr; };
struct WeightTerm { const char* weight; long long coef; };
struct TermListEntry { const char* key; const WeightTerm* terms; std::size_t count; };
struct SeriesTerm { const char* weight; const char* coef; };
struct SeriesEntry { const char* a; const char* b; const SeriesTerm* terms; std::size_t count; };
struct IndexedExpr { int index; const char* expr; };

// fundamental characters in the orbit-sum basis
inline constexpr WeightTerm kZ1Terms[] = {
    {"1000000", 1},
    {"0000000", 7},
};
inline constexpr WeightTerm kZ2Terms[] = {
    {"0100000", 1},
    {"0000001", 6},
};
inline constexpr WeightTerm kZ3Terms[] = {
    {"0010000", 1},
    {"0000010", 5},
    {"1000000", 22},
    {"0000000", 77},
};
inline constexpr WeightTerm kZ4Terms[] = {
    {"0001000", 1},
    {"1000010", 4},
    {"0100001", 15},
    {"2000000", 15},
    {"0000002", 45},
    {"0010000", 50},
    {"0000010", 145},
    {"1000000", 390},
    {"0000000", 980},
};
inline constexpr WeightTerm kZ5Terms[] = {
    {"0000100", 1},
    {"1000001", 5},
    {"0100000", 21},
    {"0000001", 71},
};
inline constexpr WeightTerm kZ6Terms[] = {
    {"0000010", 1},
    {"1000000", 6},
    {"0000000", 27},
};
inline constexpr WeightTerm kZ7Terms[] = {
    {"0000001", 1},
};
inline constexpr TermListEntry kFundamentalCharacterTables[] = {
    {"z1", kZ1Terms, 2},
    {"z2", kZ2Terms, 2},
    {"z3", kZ3Terms, 4},
    {"z4", kZ4Terms, 9},
    {"z5", kZ5Terms, 4},
    {"z6", kZ6Terms, 3},
    {"z7", kZ7Terms, 1},
};

// first-order orbit sums in z coordinates
inline constexpr ExprEntry kFirstOrderMonomials[] = {
    {"1000000", "z1-7"},
    {"0100000", "z2-6z7"},
    {"0010000", "z3-5 z6+ 8 z1+2"},
    {"0001000", "z4-4 z1 z6+9 z2 z7+ 9 z1^2+9 z7^2-14 z3-39 z6-22 z1-18"},
    {"0000100", "z5-5 z1 z7+14 z2+15 z7"},
    {"0000010", "z6-6 z1+15"},
    {"0000001", "z7"},
};

// operator first-order coefficients b_j^0 + k b_j^1
inline constexpr IndexedExpr kOperatorB[] = {
    {1, "-28 + 4 z1 + k (28 + 68 z1)"},
    {2, "7 z2 - 24 z7 + k (98 z2 + 24 z7)"},
    {3, "8 - 56 z1 + 12 z3 - 20 z6 + k (-8 + 56 z1 + 132 z3 + 20 z6)"},
    {4, "-72 + 72 z1 - 24 z1^2 + 24 z3 + 24 z4 - 16 z6 - 16 z1 z6 - 24 z2 z7 + 36 z7^2 + k (72 - 72 z1 + 24 z1^2 - 24 z3 + 192 z4 + 16 z6 + 16 z1 z6 + 24 z2 z7 - 36 z7^2)"},
    {5, "-28 z2 + 15 z5 - 4 z7 - 20 z1 z7 + k (28 z2 + 150 z5 + 4 z7 + 20 z1 z7)"},
    {6, "-48 - 24 z1 + 8 z6 + k (48 + 24 z1 + 104 z6)"},
    {7, "3 z7 + 54 k z7"},
};

// second-order orbit sums in z coordinates
inline constexpr ExprEntry kSecondOrderMonomials[] = {
    {"2000000", "z1^2 -2 z3 -2 z1 -7"},
    {"1100000", "z1 z2 -5 z5 +3 z1 z7 -23 z7"},
    {"0200000", "z2^2 -2 z4 -2 z2 z7 -2 z1^2 -6 z7^2 +4 z3 +14 z6 +4 z1 +12"},
    {"1010000", "z1 z3 -3 z4 -z1 z6 +6 z2 z7 -3 z1^2 -9 z7^2 -9 z3 +4 z6 +20 z1 +32"},
    {"0110000", "z2 z3 -4 z1 z5 +5 z2 z6 +4 z1^2 z7 -4 z3 z7 -17 z1 z2 -16 z6 z7 +41 z5 +13 z1 z7 +12 z2 +7 z7"},
    {"0020000", "z3^2 -2 z1 z4 +2 z2 z5 -2 z3 z6 -7 z6^2 +12 z5 z7 -2 z1^3 +4 z1 z3 +2 z1 z7^2 -10 z4 -2 z1 z6 +10 z1^2 + 10 z7^2 -16 z3 -22 z6 -16 z1 -8"},
    {"1001000", "z1 z4 -4 z2 z5 -4 z1^2 z6 +10 z3 z6 +9 z1 z2 z7 +14 z6^2 -34 z5 z7 +9 z1^3 -21 z2^2 -39 z1 z3 -21 z1 z7^2 + 66 z4 +54 z1 z6 +23 z2 z7 +36 z1^2 -22 z7^2 -54 z3 -24 z6 -56 z1 -24"},
    {"0101000", "z2 z4 -3 z3 z5 +2 z1 z2 z6 -2 z2^2 z7 +5 z1 z3 z7 +5 z5 z6 -14 z4 z7 -19 z1 z6 z7 -12 z1^2 z2 +15 z2 z3 + 17 z2 z7^2 +25 z1 z5 +19 z1^2 z7 +42 z7^3 +5 z2 z6 -29 z3 z7 -27 z1 z2 -133 z6 z7 +131 z5 +10 z1 z7 + 40 z2 -43 z7"},
    {"0011000", "z3 z4 -3 z1 z2 z5 +5 z2^2 z6 +2 z1 z3 z6 +5 z5^2 -7 z4 z6 +5 z1^2 z2 z7 -10 z1 z6^2 -14 z2 z3 z7 +10 z1 z5 z7 - 12 z1^2 z3 -3 z1^2 z7^2 -5 z1 z2^2 +24 z3^2 +5 z1 z4 -2 z2 z6 z7 +6 z1^2 z6 +z2 z5 +11 z3 z7^2 +10 z3 z6 + 15 z6 z7^2 -28 z1 z2 z7 -24 z6^2 +40 z2^2 +4 z5 z7 +21 z1^3 -15 z1 z3 +19 z1 z7^2 -16 z4 -54 z1 z6 - 48 z1^2 +17 z2 z7 -5 z7^2 +7 z3 +31 z6 -16 z1 -22"},
    {"0002000", "z4^2 -2 z2 z3 z5 +2 z3^2 z6 +2 z1 z5^2 +2 z1 z2^2 z6 -2 z2^3 z7 -4 z1 z4 z6 -2 z1 z2 z3 z7 -2 z2 z5 z6 +6 z2 z4 z7 - 8 z1^2 z6^2 +12 z3 z6^2 +12 z1^2 z5 z7 -20 z3 z5 z7 -6 z1^2 z4 +2 z1 z2 z6 z7 +2 z6^3 +2 z2^2 z3 +2 z1^3 z7^2 - 4 z5 z6 z7 +9 z2^2 z7^2 -4 z1 z3 z7^2 +12 z3 z4 -4 z1 z2 z5 -16 z2^2 z6 -14 z4 z7^2 -4 z1^3 z6 +2 z5^2 +8 z1 z3 z6 + 2 z1^2 z2 z7 +30 z4 z6 +9 z1^4 -18 z2 z7^3 +12 z1 z6^2 -6 z2 z3 z7 -16 z1 z5 z7 -36 z1^2 z3 +4 z1 z2^2 -8 z1^2 z7^2 + 26 z3^2 +32 z2 z6 z7 +16 z3 z7^2 +32 z1 z4 -28 z2 z5 +14 z1^2 z6 +9 z7^4 -22 z6 z7^2 -16 z1^3 -5 z6^2 - 8 z1 z2 z7 +32 z1 z3 -16 z2^2 +52 z5 z7 -48 z4 -10 z1 z7^2 +36 z2 z7 +42 z7^2 +20 z1^2 -8 z3 -88 z6 - 8 z1 -60"},
    {"1000100", "z1 z5 -5 z2 z6 -5 z1^2 z7 +15 z3 z7 +9 z1 z2 +19 z6 z7 -54 z5 -29 z1 z7 +30 z2 +56 z7"},
    {"0100100", "z2 z5 -4 z3 z6 +4 z6^2 +5 z1 z2 z7 -7 z2^2 +4 z1 z3 -4 z5 z7 -10 z4 -16 z1 z7^2 +4 z1 z6 +29 z2 z7 + 54 z7^2 +6 z1^2 -12 z3 -90 z6 -76 z1 +4"},
    {"0010100", "z3 z5 -4 z1 z2 z6 +9 z2^2 z7 +5 z1 z3 z7 +5 z5 z6 -12 z4 z7 -11 z1 z6 z7 +4 z1^2 z2 -25 z2 z3 +16 z1 z5 - 4 z1^2 z7 -5 z2 z6 +19 z3 z7 -2 z1 z2 +31 z6 z7 -46 z5 -26 z1 z7 -40 z2 +74 z7"},
    {"0001100", "z4 z5 -3 z2 z3 z6 +2 z1 z5 z6 +5 z3^2 z7 +5 z2 z6^2 +5 z1 z2^2 z7 -7 z1 z4 z7 -7 z2^3 -12 z1 z2 z3 -14 z2 z5 z7 + 27 z2 z4 -10 z1^2 z6 z7 +10 z3 z6 z7 -2 z1 z2 z7^2 -3 z6^2 z7 +21 z1^2 z5 -17 z3 z5 +10 z1 z2 z6 +11 z5 z7^2 + 5 z1^3 z7 -8 z5 z6 +15 z1 z7^3 +6 z2^2 z7 -5 z1 z3 z7 -5 z1^2 z2 -17 z4 z7 +16 z2 z3 -26 z1 z6 z7 -16 z1 z5 - 45 z2 z7^2 -z1^2 z7 +45 z2 z6 +5 z7^3 +31 z3 z7 -26 z1 z2 +14 z6 z7 +42 z5 -26 z1 z7 +110 z2 -26 z7"},
    {"0000200", "z5^2 -2 z4 z6 +2 z2 z3 z7 -2 z3^2 -2 z1 z5 z7 -2 z1 z2^2 -7 z1^2 z7^2 +4 z1 z4 +12 z3 z7^2 +2 z2 z5 +14 z1^2 z6 - 24 z3 z6 +2 z1 z2 z7 +2 z6 z7^2 +4 z1^3 -4 z6^2 +2 z5 z7 +14 z2^2 +10 z1 z7^2 -8 z1 z3 -28 z4 -24 z1 z6 - 26 z2 z7 +17 z7^2 -20 z1^2 +32 z3 -8 z6 +32 z1 -32"},
    {"1000010", "z1 z6 -6 z2 z7 +9 z7^2 -6 z1^2 +21 z3 +6 z6 -27 z1 +27"},
    {"0100010", "z2 z6 -5 z3 z7 +3 z6 z7 +9 z1 z2 -7 z5 -19 z1 z7 +15 z2 +7 z7"},
    {"0010010", "z3 z6 -5 z6^2 -5 z1 z2 z7 +14 z2^2 +9 z1 z3 +15 z5 z7 -27 z4 +19 z1 z7^2 -49 z1 z6 -14 z2 z7 -27 z1^2 - 4 z7^2 +42 z3 +79 z6 +12 z1 -42"},
    {"0001010", "z4 z6 -4 z2 z3 z7 -4 z1 z6^2 +9 z3^2 +10 z1 z5 z7 +9 z2 z6 z7 +9 z1 z2^2 +14 z1^2 z7^2 -18 z1 z4 -34 z3 z7^2 - 33 z2 z5 -39 z1^2 z6 +72 z3 z6 -5 z1 z2 z7 -21 z6 z7^2 -18 z1^3 +34 z6^2 +22 z5 z7 -14 z2^2 +18 z1 z7^2 + 48 z1 z3 -7 z4 -16 z2 z7 -61 z7^2 -27 z1^2 +18 z3 +151 z6 +150 z1 +26"},
    {"0000110", "z5 z6 -3 z4 z7 -z1 z6 z7 +5 z2 z3 +6 z2 z7^2 -2 z1 z5 -11 z2 z6 -9 z7^3 -9 z1^2 z7 +9 z3 z7 +7 z1 z2 + 25 z6 z7 -16 z5 +26 z1 z7 -60 z2 +16 z7"},
    {"0000020", "z6^2 -2 z5 z7 +2 z4 -6 z1^2 -2 z7^2 +12 z3 +4 z6 +12 z1 +17"},
    {"1000001", "z1 z7 -7 z2 +8 z7"},
    {"0100001", "z2 z7 -6 z3 -6 z7^2 +14 z6 +16 z1 -28"},
    {"0010001", "z3 z7 -5 z6 z7 -6 z1 z2 +20 z5 +24 z1 z7 -49 z2 -12 z7"},
    {"0001001", "z4 z7 -4 z1 z6 z7 -5 z2 z3 +9 z2 z7^2 +14 z1 z5 -5 z2 z6 +9 z7^3 +19 z1^2 z7 -44 z3 z7 -14 z1 z2 - 53 z6 z7 +54 z5 +42 z1 z7 -40 z2 -144 z7"},
    {"0000101", "z5 z7 -4 z4 -5 z1 z7^2 +8 z1 z6 +11 z2 z7 +12 z1^2 -3 z7^2 -42 z3 -18 z6 -4"},
    {"0000011", "z6 z7 -3 z5 -z1 z7 +7 z2 -11 z7"},
    {"0000002", "z7^2 -2 z6 -2"},
};

// second-order characters in the orbit-sum basis
inline constexpr WeightTerm kChi2000000Terms[] = {
    {"2000000", 1},
    {"0010000", 1},
    {"0000010", 4},
    {"1000000", 17},
    {"0000000", 63},
};
inline constexpr WeightTerm kChi1100000Terms[] = {
    {"1100000", 1},
    {"0000100", 4},
    {"1000001", 16},
    {"0100000", 56},
    {"0000001", 171},
};
inline constexpr WeightTerm kChi0200000Terms[] = {
    {"0200000", 1},
    {"0001000", 1},
    {"1000010", 3},
    {"0100001", 11},
    {"2000000", 10},
    {"0000002", 36},
    {"0010000", 34},
    {"0000010", 96},
    {"1000000", 248},
    {"0000000", 603},
};
inline constexpr WeightTerm kChi1010000Terms[] = {
    {"1010000", 1},
    {"0001000", 2},
    {"1000010", 8},
    {"0100001", 24},
    {"2000000", 32},
    {"0000002", 64},
    {"0010000", 78},
    {"0000010", 208},
    {"1000000", 544},
    {"0000000", 1344},
};
inline constexpr WeightTerm kChi0110000Terms[] = {
    {"0110000", 1},
    {"1000100", 3},
    {"0100010", 10},
    {"2000001", 10},
    {"0010001", 30},
    {"1100000", 90},
    {"0000011", 80},
    {"0000100", 231},
    {"1000001", 570},
    {"0100000", 1344},
    {"0000001", 3024},
};
inline constexpr WeightTerm kChi0020000Terms[] = {
    {"0020000", 1},
    {"1001000", 1},
    {"0100100", 2},
    {"2000010", 3},
    {"0010010", 7},
    {"1100001", 19},
    {"0000020", 20},
    {"0000101", 46},
    {"3000000", 10},
    {"0200000", 49},
    {"1010000", 56},
    {"1000002", 104},
    {"0001000", 125},
    {"1000010", 291},
    {"2000000", 682},
    {"0100001", 638},
    {"0000002", 1338},
    {"0010000", 1402},
    {"0000010", 2908},
    {"1000000", 5938},
    {"0000000", 11844},
};
inline constexpr WeightTerm kChi1001000Terms[] = {
    {"1001000", 1},
    {"0100100", 3},
    {"2000010", 4},
    {"0010010", 10},
    {"1100001", 30},
    {"0000020", 25},
    {"0000101", 75},
    {"3000000", 15},
    {"0200000", 84},
    {"1010000", 90},
    {"1000002", 180},
    {"0001000", 213},
    {"1000010", 507},
    {"0100001", 1149},
    {"2000000", 1185},
    {"0000002", 2484},
    {"0010000", 2565},
    {"0000010", 5439},
    {"1000000", 11265},
    {"0000000", 22680},
};
inline constexpr WeightTerm kChi0101000Terms[] = {
    {"0101000", 1},
    {"0010100", 2},
    {"1100010", 6},
    {"0200001", 20},
    {"1010001", 15},
    {"0000110", 15},
    {"0001001", 42},
    {"1000011", 96},
    {"2100000", 40},
    {"0110000", 114},
    {"0100002", 220},
    {"1000100", 256},
    {"2000001", 565},
    {"0000003", 480},
    {"0100010", 575},
    {"0010001", 1240},
    {"1100000", 2624},
    {"0000011", 2580},
    {"0000100", 5340},
    {"1000001", 10589},
    {"0100000", 20524},
    {"0000001", 38864},
};
inline constexpr WeightTerm kChi0011000Terms[] = {
    {"0011000", 1},
    {"1100100", 2},
    {"0200010", 5},
    {"1010010", 6},
    {"0000200", 5},
    {"0001010", 14},
    {"2100001", 15},
    {"1000020", 33},
    {"0110001", 37},
    {"1000101", 83},
    {"2010000", 40},
    {"2000002", 180},
    {"1200000", 94},
    {"0020000", 100},
    {"1001000", 215},
    {"0100011", 180},
    {"2000010", 467},
    {"0100100", 456},
    {"0010002", 375},
    {"0010010", 958},
    {"0000012", 750},
    {"1100001", 1964},
    {"0000020", 1920},
    {"0200000", 3963},
    {"0000101", 3850},
    {"3000000", 1010},
    {"1010000", 4005},
    {"1000002", 7374},
    {"0001000", 7700},
    {"1000010", 14642},
    {"2000000", 27546},
    {"0100001", 27263},
    {"0000002", 49698},
    {"0010000", 50206},
    {"0000010", 90408},
    {"1000000", 160642},
    {"0000000", 281268},
};
inline constexpr WeightTerm kChi0002000Terms[] = {
    {"0002000", 1},
    {"0110100", 1},
    {"0020010", 2},
    {"1000200", 2},
    {"1200010", 2},
    {"0300001", 5},
    {"1001010", 5},
    {"1110001", 11},
    {"0100110", 11},
    {"0101001", 27},
    {"2000020", 12},
    {"2200000", 25},
    {"0010020", 23},
    {"2000101", 23},
    {"0010101", 54},
    {"1020000", 25},
    {"2001000", 52},
    {"1100011", 109},
    {"0000030", 45},
    {"0210000", 64},
    {"3000002", 45},
    {"0000111", 210},
    {"0200002", 225},
    {"1010002", 210},
    {"0011000", 129},
    {"1100100", 258},
    {"0200010", 520},
    {"0001002", 408},
    {"1000012", 750},
    {"3000010", 105},
    {"0000200", 499},
    {"1010010", 501},
    {"2100001", 960},
    {"0001010", 968},
    {"4000000", 215},
    {"0100003", 1365},
    {"1000020", 1787},
    {"0110001", 1854},
    {"1000101", 3376},
    {"2010000", 1830},
    {"1200000", 3524},
    {"2000002", 6055},
    {"0020000", 3525},
    {"0100011", 6085},
    {"0010002", 10760},
    {"1001000", 6350},
    {"0100100", 11358},
    {"2000010", 11320},
    {"0000004", 2440},
    {"0000012", 18700},
    {"3000000", 20031},
    {"0010010", 19977},
    {"0000020", 34569},
    {"1100001", 34769},
    {"1010000", 60006},
    {"0200000", 60004},
    {"0000101", 59439},
    {"0001000", 101592},
    {"1000002", 100299},
    {"1000010", 170142},
    {"0100001", 281804},
    {"0000002", 461353},
    {"2000000", 282527},
    {"0010000", 462702},
    {"0000010", 750988},
    {"1000000", 1208053},
    {"0000000", 1925763},
};
inline constexpr WeightTerm kChi1000100Terms[] = {
    {"1000100", 1},
    {"0100010", 4},
    {"2000001", 5},
    {"0010001", 15},
    {"1100000", 50},
    {"0000011", 44},
    {"0000100", 139},
    {"1000001", 365},
    {"0100000", 910},
    {"0000001", 2145},
};
inline constexpr WeightTerm kChi0100100Terms[] = {
    {"0100100", 1},
    {"0010010", 3},
    {"0000020", 10},
    {"1100001", 10},
    {"0200000", 35},
    {"1010000", 29},
    {"0000101", 30},
    {"0001000", 88},
    {"1000002", 80},
    {"1000010", 223},
    {"0100001", 545},
    {"0000002", 1260},
    {"2000000", 538},
    {"0010000", 1262},
    {"0000010", 2800},
    {"1000000", 5976},
    {"0000000", 12341},
};
inline constexpr WeightTerm kChi0010100Terms[] = {
    {"0010100", 1},
    {"1100010", 3},
    {"0200001", 9},
    {"1010001", 10},
    {"0000110", 10},
    {"0001001", 28},
    {"1000011", 72},
    {"2100000", 29},
    {"0100002", 169},
    {"0110000", 79},
    {"1000100", 196},
    {"0000003", 374},
    {"2000001", 464},
    {"0100010", 458},
    {"0010001", 1029},
    {"1100000", 2258},
    {"0000011", 2198},
    {"0000100", 4708},
    {"1000001", 9574},
    {"0100000", 18998},
    {"0000001", 36774},
};
inline constexpr WeightTerm kChi0001100Terms[] = {
    {"0001100", 1},
    {"0110010", 2},
    {"1000110", 6},
    {"0020001", 5},
    {"0100020", 15},
    {"1200001", 5},
    {"1001001", 14},
    {"0300000", 14},
    {"1110000", 34},
    {"0100101", 37},
    {"0101000", 91},
    {"2000011", 33},
    {"0010011", 83},
    {"1100002", 180},
    {"0000021", 180},
    {"2000100", 78},
    {"0010100", 203},
    {"1100010", 437},
    {"0000102", 375},
    {"3000001", 170},
    {"0000110", 914},
    {"1000003", 750},
    {"0200001", 929},
    {"1010001", 905},
    {"2100000", 1834},
    {"0001001", 1858},
    {"0110000", 3723},
    {"1000011", 3635},
    {"1000100", 7156},
    {"0100002", 6949},
    {"2000001", 13480},
    {"0100010", 13524},
    {"0000003", 12954},
    {"0010001", 25015},
    {"1100000", 45599},
    {"0000011", 45368},
    {"0000100", 81502},
    {"1000001", 143470},
    {"0100000", 249025},
    {"0000001", 426280},
};
inline constexpr WeightTerm kChi0000200Terms[] = {
    {"0000200", 1},
    {"0001010", 1},
    {"0110001", 2},
    {"1000020", 3},
    {"0020000", 5},
    {"1000101", 7},
    {"0100011", 19},
    {"1200000", 5},
    {"2000002", 20},
    {"1001000", 16},
    {"0010002", 46},
    {"0100100", 46},
    {"2000010", 41},
    {"0010010", 110},
    {"1100001", 250},
    {"0000012", 104},
    {"3000000", 94},
    {"0000020", 254},
    {"0000101", 549},
    {"0200000", 560},
    {"1000002", 1150},
    {"1010000", 539},
    {"0001000", 1159},
    {"1000010", 2362},
    {"0100001", 4700},
    {"0000002", 9126},
    {"2000000", 4678},
    {"0010000", 9103},
    {"0000010", 17256},
    {"1000000", 32022},
    {"0000000", 58324},
};
inline constexpr WeightTerm kChi1000010Terms[] = {
    {"1000010", 1},
    {"0100001", 5},
    {"0000002", 20},
    {"2000000", 6},
    {"0010000", 21},
    {"0000010", 70},
    {"1000000", 212},
    {"0000000", 588},
};
inline constexpr WeightTerm kChi0100010Terms[] = {
    {"0100010", 1},
    {"0010001", 4},
    {"0000011", 16},
    {"1100000", 15},
    {"0000100", 51},
    {"1000001", 149},
    {"0100000", 399},
    {"0000001", 999},
};
inline constexpr WeightTerm kChi0010010Terms[] = {
    {"0010010", 1},
    {"0000020", 5},
    {"1100001", 4},
    {"0200000", 14},
    {"1010000", 15},
    {"0000101", 15},
    {"0001000", 47},
    {"1000002", 44},
    {"1000010", 133},
    {"0100001", 343},
    {"2000000", 350},
    {"0000002", 828},
    {"0010000", 845},
    {"0000010", 1957},
    {"1000000", 4366},
    {"0000000", 9387},
};
inline constexpr WeightTerm kChi0001010Terms[] = {
    {"0001010", 1},
    {"0110001", 3},
    {"1000020", 4},
    {"0020000", 9},
    {"1000101", 10},
    {"0100011", 30},
    {"1200000", 9},
    {"2000002", 25},
    {"1001000", 27},
    {"0010002", 75},
    {"0100100", 78},
    {"2000010", 69},
    {"0010010", 193},
    {"1100001", 449},
    {"0000012", 180},
    {"3000000", 165},
    {"0000020", 460},
    {"0000101", 1014},
    {"0200000", 1008},
    {"1000002", 2169},
    {"1010000", 999},
    {"0001000", 2184},
    {"1000010", 4549},
    {"0100001", 9198},
    {"0000002", 18063},
    {"2000000", 9189},
    {"0010000", 18114},
    {"0000010", 34807},
    {"1000000", 65475},
    {"0000000", 120771},
};
inline constexpr WeightTerm kChi0000110Terms[] = {
    {"0000110", 1},
    {"0001001", 2},
    {"1000011", 8},
    {"0110000", 5},
    {"0100002", 24},
    {"1000100", 19},
    {"0100010", 59},
    {"0000003", 64},
    {"2000001", 54},
    {"0010001", 154},
    {"1100000", 374},
    {"0000011", 384},
    {"0000100", 879},
    {"1000001", 1958},
    {"0100000", 4193},
    {"0000001", 8694},
};
inline constexpr WeightTerm kChi0000020Terms[] = {
    {"0000020", 1},
    {"0000101", 1},
    {"0001000", 2},
    {"1000002", 4},
    {"1000010", 9},
    {"0100001", 29},
    {"2000000", 30},
    {"0000002", 84},
    {"0010000", 80},
    {"0000010", 209},
    {"1000000", 510},
    {"0000000", 1197},
};
inline constexpr WeightTerm kChi1000001Terms[] = {
    {"1000001", 1},
    {"0100000", 6},
    {"0000001", 27},
};
inline constexpr WeightTerm kChi0100001Terms[] = {
    {"0100001", 1},
    {"0010000", 5},
    {"0000002", 6},
    {"0000010", 22},
    {"1000000", 75},
    {"0000000", 225},
};
inline constexpr WeightTerm kChi0010001Terms[] = {
    {"0010001", 1},
    {"0000011", 5},
    {"1100000", 5},
    {"0000100", 20},
    {"1000001", 66},
    {"0100000", 196},
    {"0000001", 531},
};
inline constexpr WeightTerm kChi0001001Terms[] = {
    {"0001001", 1},
    {"1000011", 4},
    {"0110000", 4},
    {"0100002", 15},
    {"1000100", 14},
    {"0100010", 45},
    {"0000003", 45},
    {"2000001", 40},
    {"0010001", 125},
    {"1100000", 319},
    {"0000011", 325},
    {"0000100", 784},
    {"1000001", 1809},
    {"0100000", 4004},
    {"0000001", 8529},
};
inline constexpr WeightTerm kChi0000101Terms[] = {
    {"0000101", 1},
    {"0001000", 3},
    {"1000002", 5},
    {"1000010", 13},
    {"0100001", 45},
    {"2000000", 39},
    {"0000002", 135},
    {"0010000", 129},
    {"0000010", 351},
    {"1000000", 879},
    {"0000000", 2079},
};
inline constexpr WeightTerm kChi0000011Terms[] = {
    {"0000011", 1},
    {"0000100", 2},
    {"1000001", 10},
    {"0100000", 35},
    {"0000001", 111},
};
inline constexpr WeightTerm kChi0000002Terms[] = {
    {"0000002", 1},
    {"0000010", 1},
    {"1000000", 5},
    {"0000000", 21},
};
inline constexpr TermListEntry kSecondOrderCharacters[] = {
    {"2000000", kChi2000000Terms, 5},
    {"1100000", kChi1100000Terms, 5},
    {"0200000", kChi0200000Terms, 10},
    {"1010000", kChi1010000Terms, 10},
    {"0110000", kChi0110000Terms, 11},
    {"0020000", kChi0020000Terms, 21},
    {"1001000", kChi1001000Terms, 20},
    {"0101000", kChi0101000Terms, 22},
    {"0011000", kChi0011000Terms, 37},
    {"0002000", kChi0002000Terms, 67},
    {"1000100", kChi1000100Terms, 10},
    {"0100100", kChi0100100Terms, 17},
    {"0010100", kChi0010100Terms, 21},
    {"0001100", kChi0001100Terms, 40},
    {"0000200", kChi0000200Terms, 31},
    {"1000010", kChi1000010Terms, 8},
    {"0100010", kChi0100010Terms, 8},
    {"0010010", kChi0010010Terms, 16},
    {"0001010", kChi0001010Terms, 30},
    {"0000110", kChi0000110Terms, 16},
    {"0000020", kChi0000020Terms, 12},
    {"1000001", kChi1000001Terms, 3},
    {"0100001", kChi0100001Terms, 6},
    {"0010001", kChi0010001Terms, 7},
    {"0001001", kChi0001001Terms, 15},
    {"0000101", kChi0000101Terms, 11},
    {"0000011", kChi0000011Terms, 5},
    {"0000002", kChi0000002Terms, 4},
};

// first-order eigenpolynomials
inline constexpr ExprEntry kFirstOrderPolynomials[] = {
    {"1000000", "z1 +( 7 (-1 + k) )/(( 1 + 17 k ))"},
    {"0100000", "z2 +( 6 (-1 + k) z7 )/(( 1 + 11 k ))"},
    {"0010000", "z3 +( 5 (-1 + k) z6 )/(( 1 + 7 k )) +( 8 (-1 + k) (-1 + 8 k) z1 )/(( (1 + 7 k) (1 + 8 k) )) +( 2 (-1 + k) (-1 - 159 k + 136 k^2) )/(( (1 + 7 k) (1 + 8 k) (1 + 11 k) ))"},
    {"0001000", "z4 +( 4 (-1 + k) z1 z6 )/(( 1 + 5 k )) +( 3 (-1 + k) (-3 + 5 k) z2 z7 )/(( (1 + 5 k)^2 )) +( -9 (-1 + k) (1 + 22 k + 5 k^2) z7^2 )/(( (1 + 5 k)^2 (1 + 7 k) )) + ( 9 (-1 + k) (-1 + 3 k) z1^2 )/(( (1 + 5 k) (1 + 7 k) )) +( -2 (-1 + k) (-7 + 11 k + 385 k^2 + 175 k^3) z3 )/(( (1 + 5 k)^3 (1 + 7 k) )) + ( (-1 + k) (78 + 1255 k + 3653 k^2 - 6295 k^3 + 3325 k^4) z6 )/(( (1 + 5 k)^3 (1 + 7 k) (2 + 11 k) )) + ( -2 (-1 + k) (-22 - 755 k - 3477 k^2 + 11255 k^3 + 175 k^4) z1 )/(( (1 + 5 k)^3 (1 + 7 k) (2 + 11 k) )) + ( 2 (-1 + k) (18 + 365 k + 8123 k^2 - 2045 k^3 + 2275 k^4) )/(( (1 + 5 k)^3 (1 + 7 k) (2 + 11 k) ))"},
    {"0000100", "z5 +( 5 (-1 + k) z1 z7 )/(( 1 + 7 k )) +( 7 (-1 + k) (-4 + 7 k) z2 )/(( (1 + 7 k) (2 + 13 k) )) +( 5 (-1 + k) (-6 - 137 k + 56 k^2) z7 )/(( (1 + 7 k) (1 + 8 k) (2 + 13 k) ))"},
    {"0000010", "z6 +( 6 (-1 + k) z1 )/(( 1 + 9 k )) +( 15 (-1 + k) (-1 + 5 k) )/(( (1 + 9 k) (1 + 13 k) ))"},
    {"0000001", "z7"},
};

// second-order eigenpolynomials
inline constexpr ExprEntry kSecondOrderPolynomials[] = {
    {"2000000", "z1^2 +( -2 z3 )/(( 1 + k )) +( -10 k z6 )/(( (1 + k) (1 + 4 k) )) +( 2 (-3 - 6 k - 119 k^2 + 28 k^3) z1 )/(( (1 + k) (1 + 4 k) (3 + 17 k) )) + ( -42 - 459 k - 290 k^2 - 3205 k^3 + 196 k^4 )/(( (1 + k) (1 + 4 k) (2 + 17 k) (3 + 17 k) ))"},
    {"1100000", "z1 z2 +( -5 z5 )/(( 1 + 4 k )) +( (6 - 95 k + 24 k^2) z1 z7 )/(( (1 + 4 k) (2 + 11 k) )) +( 28 (-1 + k) k (-26 + 11 k) z2 )/(( (1 + 4 k) (2 + 11 k) (3 + 17 k) )) + ( (-1 + k) (138 + 365 k - 9979 k^2 + 1176 k^3) z7 )/(( (1 + 4 k) (1 + 7 k) (2 + 11 k) (3 + 17 k) ))"},
    {"0200000", "z2^2 +( -2 z4 )/(( 1 + k )) +( -8 k z1 z6 )/(( (1 + k) (1 + 3 k) )) +( 6 (-1 + k) (1 - k + 6 k^2) z2 z7 )/(( (1 + k) (1 + 3 k) (3 + 11 k) )) + ( -2 (1 + 23 k^2) z1^2 )/(( (1 + k) (1 + 3 k) (1 + 5 k) )) + ( 18 (-1 + k) (2 + 13 k - 7 k^2 + 6 k^3) z7^2 )/(( (1 + k) (1 + 3 k) (2 + 11 k) (3 + 11 k) )) + ( 4 (3 + 23 k + 141 k^2 + 493 k^3 + 180 k^4) z3 )/(( (1 + k) (1 + 3 k) (1 + 4 k) (1 + 5 k) (3 + 11 k) )) + ( -2 (-42 - 537 k - 2397 k^2 - 6715 k^3 - 14529 k^4 + 2380 k^5) z6 )/(( (1 + k) (1 + 3 k) (1 + 4 k) (1 + 5 k) (2 + 11 k) (3 + 11 k) )) + ( -4 (-6 - 99 k - 205 k^2 - 1021 k^3 - 12161 k^4 + 2572 k^5) z1 )/(( (1 + k) (1 + 3 k) (1 + 4 k) (1 + 5 k) (2 + 11 k) (3 + 11 k) )) + ( -4 (-1 + k) (18 + 325 k + 2143 k^2 + 2067 k^3 - 14045 k^4 + 22012 k^5) )/(( (1 + k) (1 + 3 k) (1 + 4 k) (1 + 5 k) (1 + 7 k) (2 + 11 k) (3 + 11 k) ))"},
    {"1010000", "z1 z3 +( -3 z4 )/(( 1 + 2 k )) +( (-2 - 35 k + 10 k^2) z1 z6 )/(( (1 + 2 k) (2 + 7 k) )) +( -6 (-1 + k) (2 + 15 k) z2 z7 )/(( (1 + 2 k) (1 + 4 k) (2 + 7 k) )) + ( (-18 - 47 k - 704 k^2 + 256 k^3) z1^2 )/(( (1 + 2 k) (2 + 7 k) (3 + 16 k) )) +( 9 (-2 + 17 k) z7^2 )/(( (1 + 2 k) (1 + 4 k) (2 + 7 k) )) + ( (-216 - 2054 k + 1429 k^2 + 33210 k^3 + 15224 k^4 + 6272 k^5) z3 )/(( (1 + 2 k) (1 + 4 k) (2 + 7 k) (3 + 16 k) (4 + 17 k) )) + ( 2 (-1 + k) (-48 + 1190 k + 6697 k^2 - 9260 k^3 + 2240 k^4) z6 )/(( (1 + 2 k) (1 + 4 k) (2 + 7 k) (3 + 16 k) (4 + 17 k) )) + ( 12 (-1 + k) (-80 - 100 k + 7708 k^2 + 27189 k^3 - 30716 k^4 + 12736 k^5) z1 )/(( (1 + 2 k) (1 + 4 k) (2 + 7 k) (2 + 11 k) (3 + 16 k) (4 + 17 k) )) + ( 4 (-1 + k) (-384 - 6676 k - 12672 k^2 + 67253 k^3 - 75612 k^4 + 7616 k^5) )/(( (1 + 2 k) (1 + 4 k) (2 + 7 k) (2 + 11 k) (3 + 16 k) (4 + 17 k) ))"},
    {"0110000", "z2 z3 +( -4 z1 z5 )/(( 1 + 3 k )) +( 5 (-1 + k) (-2 + 3 k) z2 z6 )/(( (1 + 3 k) (2 + 7 k) )) +( -4 (-1 + 7 k) z1^2 z7 )/(( (1 + 3 k) (1 + 5 k) )) + ( 6 (-4 + 51 k + 311 k^2 + 41 k^3 + 105 k^4) z3 z7 )/(( (1 + 3 k) (1 + 5 k) (2 + 7 k) (3 + 11 k) )) + ( 2 (-1 + k) (51 + 397 k - 6 k^2 - 2992 k^3 + 2640 k^4) z1 z2 )/(( (1 + 3 k) (1 + 4 k) (1 + 5 k) (2 + 7 k) (3 + 11 k) )) + ( 6 (-16 + 17 k + 673 k^2 - 245 k^3 + 75 k^4) z6 z7 )/(( (1 + 3 k) (1 + 5 k) (2 + 7 k) (3 + 11 k) )) + ( 2 (-1 + k) (-123 - 821 k + 1018 k^2 + 10196 k^3 + 1280 k^4) z5 )/(( (1 + 3 k) (1 + 4 k)^2 (1 + 5 k) (2 + 7 k) (3 + 11 k) )) + ( 6 (13 - 156 k - 2853 k^2 - 2376 k^3 + 27380 k^4 - 11328 k^5 + 1920 k^6) z1 z7 )/(( (1 + 3 k) (1 + 4 k)^2 (1 + 5 k) (2 + 7 k) (3 + 11 k) )) + ( 6 (-1 + k) (-12 - 595 k - 2610 k^2 + 7325 k^3 - 2248 k^4 + 1360 k^5) z2 )/(( (1 + 3 k) (1 + 4 k)^2 (1 + 5 k) (2 + 7 k) (3 + 11 k) )) + ( 2 (-1 + k) (-42 - 3713 k - 46855 k^2 - 49890 k^3 + 620062 k^4 - 178192 k^5 + 24480 k^6) z7 )/(( (1 + 3 k) (1 + 4 k)^2 (1 + 5 k) (2 + 7 k) (2 + 11 k) (3 + 11 k) ))"},
    {"1000100", "z1 z5 +( -5 z2 z6 )/(( 1 + 4 k )) +( 5 (-1 + k) z1^2 z7 )/(( 1 + 7 k )) +( -15 (-1 + k) (1 + 6 k) z3 z7 )/(( (1 + 4 k)^2 (1 + 7 k) )) + ( (-1 + k) (-27 - 320 k + 112 k^2) z1 z2 )/(( (1 + 4 k)^2 (3 + 13 k) )) + ( -(-1 + k) (19 + 309 k + 1182 k^2) z6 z7)/(( (1 + 4 k)^2 (1 + 5 k) (1 + 7 k) )) + ( (-1 + k) (648 + 8119 k + 26227 k^2 + 12296 k^3 + 7280 k^4) z5 )/(( (1 + 4 k)^2 (1 + 5 k) (3 + 13 k) (4 + 17 k) )) + ( 2 (-174 - 4381 k - 20915 k^2 + 61085 k^3 + 363609 k^4 - 239624 k^5 + 42000 k^6) z1 z7 )/(( (1 + 4 k)^2 (1 + 5 k) (1 + 7 k) (3 + 13 k) (4 + 17 k) )) + ( 10 (36 + 449 k - 4256 k^2 - 63640 k^3 - 162486 k^4 + 81791 k^5 - 107534 k^6 + 13720 k^7) z2 )/(( (1 + 4 k)^2 (1 + 5 k)^2 (1 + 7 k) (3 + 13 k) (4 + 17 k) )) + ( (-1 + k) (-672 - 17905 k - 81245 k^2 + 497285 k^3 + 2671037 k^4 - 1392420 k^5 + 98000 k^6) z7 )/(( (1 + 4 k)^2 (1 + 5 k)^2 (1 + 7 k) (3 + 13 k) (4 + 17 k) ))"},
    {"1000010", "z1 z6 +( -6 z2 z7 )/(( 1 + 5 k )) +( -9 (-1 + 7 k) z7^2 )/(( (1 + 5 k) (1 + 8 k) )) +( 6 (-1 + k) z1^2 )/(( 1 + 9 k )) +( -3 (-1 + k) (7 + 55 k) z3 )/(( (1 + 5 k)^2 (1 + 9 k) )) + ( (18 + 1213 k + 15375 k^2 + 51579 k^3 - 15985 k^4 + 12600 k^5) z6 )/(( (1 + 5 k)^2 (1 + 8 k) (1 + 9 k) (3 + 17 k) )) + ( 3 (-54 - 775 k + 4734 k^2 + 107248 k^3 + 344272 k^4 - 252825 k^5 + 121400 k^6) z1 )/(( (1 + 5 k)^2 (1 + 8 k) (1 + 9 k) (2 + 13 k) (3 + 17 k) )) + ( 3 (54 - 245 k - 9444 k^2 + 22702 k^3 + 391238 k^4 - 115305 k^5 + 35000 k^6) )/(( (1 + 5 k)^2 (1 + 8 k) (1 + 9 k) (2 + 13 k) (3 + 17 k) ))"},
    {"0100010", "z2 z6 +( -5 z3 z7 )/(( 1 + 4 k )) +( (6 - 95 k + 24 k^2) z6 z7 )/(( (1 + 4 k) (2 + 11 k) )) +( 6 (-1 + k) (-3 + 4 k) z1 z2 )/(( (1 + 4 k) (2 + 9 k) )) + ( 2 (-42 + 643 k + 4519 k^2 + 600 k^3) z5 )/(( (1 + 4 k) (2 + 9 k) (2 + 11 k) (3 + 13 k) )) + ( 2 (-1 + k) (114 + 113 k - 11559 k^2 - 46218 k^3 + 4680 k^4) z1 z7 )/(( (1 + 4 k) (1 + 5 k) (2 + 9 k) (2 + 11 k) (3 + 13 k) )) + ( (180 - 3864 k - 20509 k^2 + 80848 k^3 - 4515 k^4 + 16500 k^5) z2 )/(( (1 + 4 k) (1 + 5 k) (2 + 9 k) (2 + 11 k) (3 + 13 k) )) + ( 2 (-1 + k) (-42 + 2347 k + 38355 k^2 - 27714 k^3 + 4500 k^4) z7 )/(( (1 + 4 k) (1 + 5 k) (2 + 9 k) (2 + 11 k) (3 + 13 k) ))"},
    {"0000020", "z6^2 +( -2 z5 z7 )/(( 1 + k )) +( -2 (-1 + k) z4 )/(( (1 + k) (1 + 2 k) )) +( -10 k z1 z7^2 )/(( (1 + k) (1 + 4 k) )) +( 4 k (13 + 43 k + 10 k^2 + 24 k^3) z1 z6 )/(( 3 (1 + k) (1 + 2 k) (1 + 3 k) (1 + 4 k) )) + ( -2 (-1 + k) k (7 + 36 k) z2 z7 )/(( (1 + k) (1 + 2 k) (1 + 3 k) (1 + 4 k) )) + ( 2 (-1 + k) (6 + 47 k + 59 k^2 - 88 k^3 + 48 k^4) z1^2 )/(( (1 + k) (1 + 2 k) (1 + 3 k) (1 + 4 k) (2 + 9 k) )) + ( -2 (-1 + k) (-1 - 8 k + 30 k^2) z7^2 )/(( (1 + k) (1 + 2 k) (1 + 3 k) (1 + 4 k) )) +( 4 (6 + 29 k + 36 k^2 + 199 k^3 + 60 k^4) z3 )/(( (1 + k) (1 + 2 k) (1 + 3 k) (1 + 4 k) (2 + 9 k) )) + ( 4 (18 + 213 k - 140 k^2 - 1100 k^3 + 11362 k^4 + 2787 k^5 + 2700 k^6) z6 )/(( 3 (1 + k) (1 + 2 k) (1 + 3 k) (1 + 4 k) (2 + 9 k) (3 + 13 k) )) + ( 4 (18 + 285 k + 949 k^2 - 2675 k^3 - 5493 k^4 + 33950 k^5 + 1646 k^6 + 3000 k^7) z1 )/(( (1 + k) (1 + 2 k) (1 + 3 k) (1 + 4 k) (1 + 5 k) (2 + 9 k) (3 + 13 k) )) + ( (-1 + k) (-204 - 4208 k - 37487 k^2 - 140165 k^3 - 24391 k^4 + 655613 k^5 - 66238 k^6 + 75000 k^7) )/(( (1 + k) (1 + 2 k) (1 + 3 k) (1 + 4 k) (1 + 5 k) (2 + 9 k) (2 + 13 k) (3 + 13 k) ))"},
    {"1000001", "z1 z7 +( -7 z2 )/(( 1 + 6 k )) +( (16 - 191 k + 42 k^2) z7 )/(( (1 + 6 k) (2 + 17 k) ))"},
    {"0100001", "z2 z7 +( -6 z3 )/(( 1 + 5 k )) +( 6 (-1 + k) z7^2 )/(( 1 + 11 k )) +( -2 (-7 - 31 k + 290 k^2) z6 )/(( (1 + 5 k) (1 + 6 k) (1 + 11 k) )) + ( -16 (-1 - 26 k - 119 k^2 + 398 k^3) z1 )/(( (1 + 5 k) (1 + 6 k) (1 + 7 k) (1 + 11 k) )) +( -4 (-1 + k) (-7 - 51 k + 826 k^2) )/(( (1 + 5 k) (1 + 6 k) (1 + 7 k) (1 + 11 k) ))"},
    {"0010001", "z3 z7 +( 5 (-1 + k) z6 z7 )/(( 1 + 7 k )) +( -6 z1 z2 )/(( 1 + 5 k )) +( -10 (-1 + k) (4 + 25 k) z5 )/(( (1 + 5 k) (1 + 7 k) (2 + 9 k) )) + ( 2 (-1 + k) (-72 - 1183 k - 4188 k^2 + 2880 k^3) z1 z7 )/(( (1 + 5 k) (1 + 7 k) (2 + 9 k) (3 + 16 k) )) + ( -28 (-1 + k) (-21 - 260 k - 333 k^2 + 3056 k^3) z2 )/(( (1 + 5 k) (1 + 7 k) (2 + 9 k) (2 + 11 k) (3 + 16 k) )) + ( 2 (-72 - 4430 k - 9270 k^2 + 121301 k^3 - 54561 k^4 + 12240 k^5) z7 )/(( (1 + 5 k) (1 + 7 k) (2 + 9 k) (2 + 11 k) (3 + 16 k) ))"},
    {"0000101", "z5 z7 +( -4 z4 )/(( 1 + 3 k )) +( 5 (-1 + k) z1 z7^2 )/(( 1 + 7 k )) +( -8 (-1 - k + 22 k^2) z1 z6 )/(( (1 + 3 k) (1 + 4 k) (1 + 7 k) )) + ( (-1 + k) (-33 - 239 k + 84 k^2) z2 z7 )/(( (1 + 3 k) (1 + 4 k) (3 + 13 k) )) +( -12 (-1 + k) (1 + 12 k) z1^2 )/(( (1 + 3 k) (1 + 4 k) (1 + 7 k) )) + ( (-9 + 327 k + 3089 k^2 - 1267 k^3 + 420 k^4) z7^2 )/(( (1 + 3 k) (1 + 4 k) (1 + 7 k) (3 + 13 k) )) +( -12 (-1 + k) (-21 - 118 k + 8 k^2) z3 )/(( (1 + 3 k) (1 + 4 k) (2 + 9 k) (3 + 13 k) )) + ( -4 (27 + 1050 k + 8824 k^2 + 18278 k^3 - 11811 k^4 + 25872 k^5) z6 )/(( (1 + 3 k) (1 + 4 k) (1 + 5 k) (1 + 7 k) (2 + 9 k) (3 + 13 k) )) + ( -48 (-1 + k) k (-89 - 1205 k - 3637 k^2 + 2159 k^3) z1 )/(( (1 + 3 k) (1 + 4 k) (1 + 5 k) (1 + 7 k) (2 + 9 k) (3 + 13 k) )) + ( -8 (3 - 203 k + 3439 k^2 + 24833 k^3 - 17242 k^4 + 10290 k^5) )/(( (1 + 3 k) (1 + 4 k) (1 + 5 k) (1 + 7 k) (2 + 9 k) (3 + 13 k) ))"},
    {"0000011", "z6 z7 +( -3 z5 )/(( 1 + 2 k )) +( (-2 - 43 k + 12 k^2) z1 z7 )/(( (1 + 2 k) (2 + 9 k) )) +( -7 (-1 + k) (2 + 19 k) z2 )/(( (1 + 2 k) (1 + 5 k) (2 + 9 k) )) + ( 2 (-1 + k) (22 - 2 k - 1052 k^2 + 375 k^3) z7 )/(( (1 + 2 k) (1 + 5 k) (2 + 9 k) (2 + 13 k) ))"},
    {"0000002", "z7^2 +( -2 z6 )/(( 1 + k )) +( -12 k z1 )/(( (1 + k) (1 + 5 k) )) +( -2 (1 + 59 k^2) )/(( (1 + k) (1 + 5 k) (1 + 9 k) ))"},
};

// generalized quadratic product series
inline constexpr SeriesTerm kSeries1000000x1000000Terms[] = {
    {"2000000", "1"},
    {"0010000", "( 2 )/(( 1 + k ))"},
    {"0000010", "( 10 (1 + 3 k) )/(( (1 + 4 k) (1 + 7 k) ))"},
    {"1000000", "( 24 (4 + 103 k + 547 k^2 + 696 k^3) )/(( (1 + 8 k) (1 + 9 k) (1 + 17 k) (3 + 17 k) ))"},
    {"0000000", "( 252 (1 + 3 k) (1 + 5 k) (1 + 8 k) (1 + 18 k) )/(( (1 + 11 k) (1 + 13 k) (1 + 17 k)^2 (2 + 17 k) ))"},
};
inline constexpr SeriesTerm kSeries1000000x0100000Terms[] = {
    {"1100000", "1"},
    {"0000100", "( 5 )/(( 1 + 4 k ))"},
    {"1000001", "( 32 (1 + 2 k) (1 + 12 k) )/(( (1 + 7 k) (1 + 11 k) (2 + 11 k) ))"},
    {"0100000", "( 42 (1 + 3 k) (1 + 14 k) (5 + 101 k + 74 k^2) )/(( (1 + 6 k) (1 + 11 k) (2 + 13 k) (1 + 17 k) (3 + 17 k) ))"},
    {"0000001", "( 144 (1 + 2 k) (1 + 3 k) (1 + 5 k) (1 + 18 k) )/(( (1 + 7 k) (1 + 8 k) (1 + 11 k)^2 (2 + 17 k) ))"},
};
inline constexpr SeriesTerm kSeries1000000x0010000Terms[] = {
    {"1010000", "1"},
    {"0001000", "( 3 )/(( 1 + 2 k ))"},
    {"1000010", "( 16 (1 + 2 k) (1 + 8 k) )/(( (1 + 5 k) (1 + 7 k) (2 + 7 k) ))"},
    {"0100001", "( 15 (1 + k) (1 + 3 k) (1 + 11 k) )/(( (1 + 4 k) (1 + 5 k)^2 (1 + 7 k) ))"},
    {"2000000", "( 48 (1 + 2 k) (1 + 4 k) (2 + 17 k) )/(( (1 + 7 k) (1 + 8 k) (1 + 9 k) (3 + 16 k) ))"},
    {"0010000", "( -24 (1 + 11 k) (-5 - 187 k - 2180 k^2 - 9982 k^3 - 18875 k^4 - 11395 k^5 + 1800 k^6) )/(( (1 + k) (1 + 5 k)^3 (1 + 7 k) (1 + 8 k) (1 + 17 k) (4 + 17 k) ))"},
    {"0000010", "( 240 (1 + k) (1 + 2 k) (1 + 3 k) (1 + 12 k) (1 + 13 k) )/(( (1 + 6 k) (1 + 7 k)^2 (1 + 8 k) (2 + 11 k) (3 + 17 k) ))"},
    {"1000000", "( 384 (1 + 2 k) (1 + 3 k) (1 + 4 k)^2 (1 + 5 k) (1 + 12 k) (1 + 14 k) (1 + 17 k) )/(( (1 + 7 k)^2 (1 + 8 k)^2 (1 + 9 k) (1 + 11 k) (2 + 11 k) (2 + 13 k) (3 + 17 k) ))"},
};
inline constexpr SeriesTerm kSeries1000000x0000100Terms[] = {
    {"1000100", "1"},
    {"0100010", "( 5 )/(( 1 + 4 k ))"},
    {"0010001", "( 10 (1 + k) (1 + 9 k) )/(( (1 + 4 k)^2 (1 + 7 k) ))"},
    {"1100000", "( 240 (1 + k) (1 + 2 k) (1 + 10 k) )/(( (1 + 5 k) (2 + 9 k) (2 + 13 k) (3 + 13 k) ))"},
    {"0000011", "( 32 (1 + 2 k) (1 + 3 k) (1 + 12 k) )/(( (1 + 5 k) (1 + 7 k)^2 (2 + 11 k) ))"},
    {"0000100", "( -90 (1 + 10 k) (-16 - 562 k - 5649 k^2 - 18716 k^3 - 18653 k^4 + 3276 k^5) )/(( (1 + 4 k) (1 + 7 k) (2 + 9 k) (2 + 13 k) (3 + 13 k) (1 + 17 k) (4 + 17 k) ))"},
    {"1000001", "( 240 (1 + k) (1 + 2 k) (1 + 3 k) (2 + 7 k) (1 + 10 k) (1 + 12 k) (2 + 17 k) )/(( (1 + 5 k) (1 + 7 k)^2 (1 + 8 k) (2 + 9 k) (2 + 11 k) (2 + 13 k) (3 + 16 k) ))"},
    {"0100000", "( 420 (1 + k) (1 + 2 k) (1 + 3 k) (1 + 4 k) (2 + 7 k) (1 + 11 k) (1 + 12 k) (1 + 14 k) )/(( (1 + 5 k)^2 (1 + 6 k) (1 + 7 k) (1 + 8 k) (2 + 11 k) (2 + 13 k)^2 (3 + 17 k) ))"},
};
inline constexpr SeriesTerm kSeries1000000x0000010Terms[] = {
    {"1000010", "1"},
    {"0100001", "( 6 )/(( 1 + 5 k ))"},
    {"0000002", "( 27 (1 + 3 k) )/(( (1 + 8 k) (1 + 11 k) ))"},
    {"0010000", "( 15 (1 + k) (1 + 11 k) )/(( (1 + 5 k)^2 (1 + 9 k) ))"},
    {"0000010", "( -48 (1 + 3 k) (1 + 13 k) (-2 - 45 k - 109 k^2 + 6 k^3) )/(( (1 + k) (1 + 6 k) (1 + 7 k) (1 + 9 k) (1 + 17 k) (3 + 17 k) ))"},
    {"1000000", "( 120 (1 + k) (1 + 3 k) (1 + 4 k) (1 + 6 k) (1 + 14 k) (1 + 17 k) )/(( (1 + 5 k) (1 + 7 k) (1 + 8 k) (1 + 9 k)^2 (1 + 13 k) (2 + 13 k) ))"},
};
inline constexpr SeriesTerm kSeries1000000x0000001Terms[] = {
    {"1000001", "1"},
    {"0100000", "( 7 )/(( 1 + 6 k ))"},
    {"0000001", "( 54 (1 + 3 k) (1 + 18 k) )/(( (1 + 11 k) (1 + 17 k) (2 + 17 k) ))"},
};
inline constexpr SeriesTerm kSeries0100000x0100000Terms[] = {
    {"0200000", "1"},
    {"0001000", "( 2 )/(( 1 + k ))"},
    {"1000010", "( 8 (1 + 2 k) )/(( (1 + 3 k) (1 + 5 k) ))"},
    {"0100001", "( 12 (5 + 84 k + 255 k^2 + 160 k^3) )/(( (1 + 5 k)^2 (1 + 11 k) (3 + 11 k) ))"},
    {"2000000", "( 32 (1 + 2 k) (1 + 4 k) )/(( (1 + 5 k) (1 + 7 k) (1 + 9 k) ))"},
    {"0000002", "( 144 (1 + 2 k) (1 + 3 k) (1 + 5 k) (1 + 12 k) )/(( (1 + 7 k) (1 + 8 k) (1 + 11 k)^2 (2 + 11 k) ))"},
    {"0010000", "( -40 (1 + 2 k)^2 (-1 - 22 k - 59 k^2 + 10 k^3) )/(( (1 + k) (1 + 4 k) (1 + 5 k)^3 (1 + 11 k) ))"},
    {"0000010", "( -160 (1 + 2 k)^2 (1 + 3 k) (1 + 12 k) (-3 - 64 k + 11 k^2) )/(( (1 + k) (1 + 6 k) (1 + 7 k) (1 + 11 k)^2 (2 + 11 k) (3 + 17 k) ))"},
    {"1000000", "( 192 (1 + 2 k) (1 + 3 k) (1 + 4 k) (1 + 14 k) (5 + 101 k + 74 k^2) )/(( (1 + 7 k) (1 + 8 k) (1 + 9 k) (1 + 11 k)^2 (2 + 13 k) (3 + 17 k) ))"},
    {"0000000", "( 1152 (1 + 2 k) (1 + 3 k) (1 + 4 k) (1 + 5 k) (1 + 6 k) (1 + 18 k) )/(( (1 + 7 k) (1 + 9 k) (1 + 11 k)^2 (1 + 13 k) (1 + 17 k) (2 + 17 k) ))"},
};
inline constexpr SeriesTerm kSeries0100000x0000010Terms[] = {
    {"0100010", "1"},
    {"0010001", "( 5 )/(( 1 + 4 k ))"},
    {"0000011", "( 32 (1 + 2 k) (1 + 12 k) )/(( (1 + 7 k) (1 + 11 k) (2 + 11 k) ))"},
    {"1100000", "( 30 (1 + k) (1 + 10 k) )/(( (1 + 5 k) (1 + 9 k) (2 + 9 k) ))"},
    {"0000100", "( -60 (1 + 10 k) (-3 - 56 k - 119 k^2 + 18 k^3) )/(( (1 + 4 k) (1 + 9 k) (2 + 9 k) (1 + 11 k) (3 + 13 k) ))"},
    {"1000001", "( 48 (1 + 2 k) (1 + 3 k) (14 + 531 k + 6042 k^2 + 23399 k^3 + 24354 k^4) )/(( (1 + 5 k) (1 + 7 k) (1 + 9 k) (2 + 9 k) (1 + 11 k) (2 + 11 k) (3 + 16 k) ))"},
    {"0100000", "( -420 (1 + 2 k) (1 + 3 k) (1 + 4 k) (1 + 12 k) (1 + 14 k) (-3 - 64 k + 11 k^2) )/(( (1 + 5 k) (1 + 6 k) (1 + 9 k) (1 + 11 k) (2 + 11 k) (1 + 13 k) (2 + 13 k) (3 + 17 k) ))"},
    {"0000001", "( 864 (1 + k) (1 + 2 k) (1 + 3 k) (1 + 4 k) (1 + 14 k) (1 + 18 k) )/(( (1 + 7 k) (1 + 8 k) (1 + 9 k) (1 + 11 k)^2 (2 + 13 k) (2 + 17 k) ))"},
};
inline constexpr SeriesTerm kSeries0100000x0000001Terms[] = {
    {"0100001", "1"},
    {"0010000", "( 6 )/(( 1 + 5 k ))"},
    {"0000010", "( 16 (1 + 2 k) (1 + 13 k) )/(( (1 + 6 k) (1 + 7 k) (1 + 11 k) ))"},
    {"1000000", "( 32 (1 + 2 k) (1 + 4 k) (1 + 17 k) )/(( (1 + 7 k) (1 + 8 k) (1 + 9 k) (1 + 11 k) ))"},
};
inline constexpr SeriesTerm kSeries0010000x0000001Terms[] = {
    {"0010001", "1"},
    {"1100000", "( 6 )/(( 1 + 5 k ))"},
    {"0000100", "( 20 (1 + k) (1 + 10 k) )/(( (1 + 4 k) (1 + 7 k) (2 + 9 k) ))"},
    {"1000001", "( 48 (1 + 2 k) (1 + 3 k) (1 + 12 k) (2 + 17 k) )/(( (1 + 7 k)^2 (1 + 8 k) (2 + 11 k) (3 + 16 k) ))"},
    {"0100000", "( 252 (1 + k) (1 + 3 k) (1 + 4 k) (1 + 12 k) (1 + 14 k) )/(( (1 + 6 k) (1 + 7 k) (1 + 8 k) (2 + 11 k) (2 + 13 k) (3 + 17 k) ))"},
};
inline constexpr SeriesTerm kSeries0000100x0000001Terms[] = {
    {"0000101", "1"},
    {"0001000", "( 4 )/(( 1 + 3 k ))"},
    {"1000010", "( 8 (1 + 2 k) (1 + 9 k) )/(( (1 + 4 k) (1 + 5 k) (1 + 7 k) ))"},
    {"0100001", "( 90 (1 + k) (1 + 3 k) (1 + 11 k) )/(( (1 + 5 k)^2 (2 + 13 k) (3 + 13 k) ))"},
    {"0010000", "( 40 (1 + k) (1 + 2 k) (2 + 7 k) (1 + 10 k) (1 + 11 k) )/(( (1 + 5 k)^3 (1 + 7 k) (2 + 9 k) (2 + 13 k) ))"},
    {"0000010", "( 96 (1 + 2 k) (1 + 3 k) (1 + 4 k) (2 + 7 k) (1 + 9 k) (1 + 12 k) (1 + 13 k) )/(( (1 + 5 k) (1 + 6 k) (1 + 7 k)^2 (1 + 8 k) (2 + 11 k) (2 + 13 k) (3 + 17 k) ))"},
};
inline constexpr SeriesTerm kSeries0001000x0000001Terms[] = {
    {"0001001", "1"},
    {"0110000", "( 5 )/(( 1 + 4 k ))"},
    {"1000100", "( 12 (1 + k) (1 + 8 k) )/(( (1 + 3 k) (1 + 5 k) (2 + 7 k) ))"},
    {"0100010", "( 60 (1 + k) (1 + 2 k) (1 + 6 k) (1 + 8 k) )/(( (1 + 4 k) (1 + 5 k)^2 (2 + 7 k) (3 + 11 k) ))"},
    {"0010001", "( 20 (1 + k) (1 + 2 k) (2 + 5 k) (1 + 8 k) (1 + 9 k) (3 + 16 k) )/(( (1 + 4 k)^2 (1 + 5 k)^3 (3 + 11 k) (4 + 15 k) ))"},
    {"1100000", "( 30 (1 + k) (1 + 2 k) (1 + 3 k)^2 (1 + 8 k) (1 + 10 k) (3 + 17 k) )/(( (1 + 4 k)^2 (1 + 5 k)^4 (2 + 9 k) (3 + 13 k) ))"},
    {"0000100", "( 40 (1 + k) (1 + 2 k) (1 + 3 k) (2 + 5 k) (1 + 8 k) (1 + 9 k) (1 + 10 k) (3 + 10 k) (2 + 13 k) )/(( (1 + 4 k)^3 (1 + 5 k)^3 (2 + 9 k) (2 + 11 k) (3 + 13 k) (4 + 17 k) ))"},
};
inline constexpr SeriesTerm kSeries0000010x0000001Terms[] = {
    {"0000011", "1"},
    {"0000100", "( 3 )/(( 1 + 2 k ))"},
    {"1000001", "( 20 (1 + 3 k) (1 + 10 k) )/(( (1 + 7 k) (1 + 9 k) (2 + 9 k) ))"},
    {"0100000", "( 42 (1 + k) (1 + 4 k) (1 + 14 k) )/(( (1 + 5 k) (1 + 6 k) (1 + 9 k) (2 + 13 k) ))"},
    {"0000001", "( 108 (1 + 3 k) (1 + 4 k) (1 + 6 k) (1 + 14 k) (1 + 18 k) )/(( (1 + 8 k) (1 + 9 k) (1 + 11 k) (1 + 13 k) (2 + 13 k) (2 + 17 k) ))"},
};
inline constexpr SeriesTerm kSeries0000001x0000001Terms[] = {
    {"0000002", "1"},
    {"0000010", "( 2 )/(( 1 + k ))"},
    {"1000000", "( 12 (1 + 4 k) )/(( (1 + 5 k) (1 + 9 k) ))"},
    {"0000000", "( 56 (1 + 4 k) (1 + 8 k) )/(( (1 + 9 k) (1 + 13 k) (1 + 17 k) ))"},
};
inline constexpr SeriesEntry kProductSeries[] = {
    {"1000000", "1000000", kSeries1000000x1000000Terms, 5},
    {"1000000", "0100000", kSeries1000000x0100000Terms, 5},
    {"1000000", "0010000", kSeries1000000x0010000Terms, 8},
    {"1000000", "0000100", kSeries1000000x0000100Terms, 8},
    {"1000000", "0000010", kSeries1000000x0000010Terms, 6},
    {"1000000", "0000001", kSeries1000000x0000001Terms, 3},
    {"0100000", "0100000", kSeries0100000x0100000Terms, 10},
    {"0100000", "0000010", kSeries0100000x0000010Terms, 8},
    {"0100000", "0000001", kSeries0100000x0000001Terms, 4},
    {"0010000", "0000001", kSeries0010000x0000001Terms, 5},
    {"0000100", "0000001", kSeries0000100x0000001Terms, 6},
    {"0001000", "0000001", kSeries0001000x0000001Terms, 7},
    {"0000010", "0000001", kSeries0000010x0000001Terms, 5},
    {"0000001", "0000001", kSeries0000001x0000001Terms, 4},
};

}  // namespace cstrig::tables
