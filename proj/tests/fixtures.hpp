#pragma once

// Published reference tables used as test fixtures.

#include <map>
#include <vector>

namespace fixtures {

using Int = long long;

// Rows k = 1..12, columns t = 1..12: the residue a_{t,k} mod 156 for
// p = 13, theta = 2.
inline const std::vector<std::vector<Int>> kRuzsaTable = {
    {145, 134, 99, 16, 149, 90, 115, 152, 57, 10, 59, 144},
    {121, 86, 3, 136, 77, 102, 139, 44, 153, 46, 131, 132},
    {97, 38, 63, 100, 5, 114, 7, 92, 93, 82, 47, 120},
    {73, 146, 123, 64, 89, 126, 31, 140, 33, 118, 119, 108},
    {49, 98, 27, 28, 17, 138, 55, 32, 129, 154, 35, 96},
    {25, 50, 87, 148, 101, 150, 79, 80, 69, 34, 107, 84},
    {1, 2, 147, 112, 29, 6, 103, 128, 9, 70, 23, 72},
    {133, 110, 51, 76, 113, 18, 127, 20, 105, 106, 95, 60},
    {109, 62, 111, 40, 41, 30, 151, 68, 45, 142, 11, 48},
    {85, 14, 15, 4, 125, 42, 19, 116, 141, 22, 83, 36},
    {61, 122, 75, 124, 53, 54, 43, 8, 81, 58, 155, 24},
    {37, 74, 135, 88, 137, 66, 67, 56, 21, 94, 71, 12},
};

// Least positive k with (1+3x)^k = c0 + c1*x over GF(13)[x]/(x^2+2).
// Rows c0 = 0..12, columns c1 = 0..12; the (0,0) cell is empty (-1).
inline const std::vector<std::vector<Int>> kBoseLogTable = {
    {-1, 77, 147, 21, 49, 35, 91, 7, 119, 133, 105, 63, 161},
    {168, 164, 148, 1, 19, 114, 87, 123, 138, 79, 13, 76, 116},
    {70, 25, 66, 40, 50, 149, 71, 83, 89, 146, 16, 18, 157},
    {112, 23, 58, 108, 125, 31, 92, 20, 67, 113, 60, 82, 131},
    {140, 153, 95, 159, 136, 48, 110, 86, 120, 88, 51, 59, 141},
    {126, 96, 127, 34, 45, 122, 37, 145, 74, 81, 106, 139, 72},
    {14, 90, 93, 137, 128, 15, 10, 130, 27, 152, 101, 33, 162},
    {98, 78, 117, 17, 68, 111, 46, 94, 99, 44, 53, 9, 6},
    {42, 156, 55, 22, 165, 158, 61, 121, 38, 129, 118, 43, 12},
    {56, 57, 143, 135, 4, 36, 2, 26, 132, 52, 75, 11, 69},
    {28, 47, 166, 144, 29, 151, 104, 8, 115, 41, 24, 142, 107},
    {154, 73, 102, 100, 62, 5, 167, 155, 65, 134, 124, 150, 109},
    {84, 32, 160, 97, 163, 54, 39, 3, 30, 103, 85, 64, 80},
};

inline std::vector<Int> bose_column(int c1) {
    std::vector<Int> col;
    for (const auto& row : kBoseLogTable) col.push_back(row[c1]);
    return col;
}

// Shortest Sidon sets (optimal Golomb rulers): k -> minimal diameter.
inline const std::map<int, Int> kShortestDiameter = {
    {2, 1}, {3, 3}, {4, 6}, {5, 11}, {6, 17}, {7, 25}, {8, 34}, {9, 44}, {10, 55}, {11, 72},
};

// Complete witness lists for k <= 10 (up to translation and reflection);
// for k = 11 the survey lists two and leaves completeness open.
inline const std::map<int, std::vector<std::vector<Int>>> kShortestWitnesses = {
    {2, {{0, 1}}},
    {3, {{0, 1, 3}}},
    {4, {{0, 1, 4, 6}}},
    {5, {{0, 1, 4, 9, 11}, {0, 2, 7, 8, 11}}},
    {6,
     {{0, 1, 4, 10, 12, 17},
      {0, 1, 4, 10, 15, 17},
      {0, 1, 8, 11, 13, 17},
      {0, 1, 8, 12, 14, 17}}},
    {7,
     {{0, 1, 4, 10, 18, 23, 25},
      {0, 1, 7, 11, 20, 23, 25},
      {0, 1, 11, 16, 19, 23, 25},
      {0, 2, 3, 10, 16, 21, 25},
      {0, 2, 7, 13, 21, 22, 25}}},
    {8, {{0, 1, 4, 9, 15, 22, 32, 34}}},
    {9, {{0, 1, 5, 12, 25, 27, 35, 41, 44}}},
    {10, {{0, 1, 6, 10, 23, 26, 34, 41, 53, 55}}},
    {11, {{0, 1, 4, 13, 28, 33, 47, 54, 64, 70, 72}, {0, 1, 9, 19, 24, 31, 52, 56, 58, 69, 72}}},
};

// Exact (non-"<=") cells of the min{n : R_2(g,n) >= k} table:
// (g, k) -> n.
inline const std::map<std::pair<int, int>, Int> kMinNTable = {
    {{2, 3}, 4},   {{2, 4}, 7},   {{2, 5}, 12},  {{2, 6}, 18},  {{2, 7}, 26},  {{2, 8}, 35},
    {{2, 9}, 45},  {{2, 10}, 56}, {{2, 11}, 73},

    {{3, 4}, 5},   {{3, 5}, 8},   {{3, 6}, 13},  {{3, 7}, 19},  {{3, 8}, 25},  {{3, 9}, 35},
    {{3, 10}, 46}, {{3, 11}, 58},

    {{4, 5}, 6},   {{4, 6}, 8},   {{4, 7}, 11},  {{4, 8}, 14},  {{4, 9}, 18},  {{4, 10}, 22},
    {{4, 11}, 27}, {{4, 12}, 31}, {{4, 13}, 37}, {{4, 14}, 44},

    {{5, 6}, 7},   {{5, 7}, 9},   {{5, 8}, 12},  {{5, 9}, 15},  {{5, 10}, 19}, {{5, 11}, 24},
    {{5, 12}, 29}, {{5, 13}, 34}, {{5, 14}, 40},

    {{6, 7}, 8},   {{6, 8}, 10},  {{6, 9}, 12},  {{6, 10}, 14}, {{6, 11}, 17}, {{6, 12}, 20},
    {{6, 13}, 24}, {{6, 14}, 28}, {{6, 15}, 32}, {{6, 16}, 36},

    {{7, 8}, 9},   {{7, 9}, 11},  {{7, 10}, 13}, {{7, 11}, 15}, {{7, 12}, 18}, {{7, 13}, 21},
    {{7, 14}, 26}, {{7, 15}, 29}, {{7, 16}, 34},

    {{8, 9}, 10},  {{8, 10}, 12}, {{8, 11}, 14}, {{8, 12}, 16}, {{8, 13}, 18}, {{8, 14}, 21},
    {{8, 15}, 24}, {{8, 16}, 27}, {{8, 17}, 30}, {{8, 18}, 34},

    {{9, 10}, 11}, {{9, 11}, 13}, {{9, 12}, 15}, {{9, 13}, 17}, {{9, 14}, 19}, {{9, 15}, 22},
    {{9, 16}, 24}, {{9, 17}, 28}, {{9, 18}, 32},

    {{10, 11}, 12}, {{10, 12}, 14}, {{10, 13}, 16}, {{10, 14}, 18}, {{10, 15}, 20},
    {{10, 16}, 22}, {{10, 17}, 24}, {{10, 18}, 27}, {{10, 19}, 30}, {{10, 20}, 33},

    {{11, 12}, 13}, {{11, 13}, 15}, {{11, 14}, 17}, {{11, 15}, 19}, {{11, 16}, 21},
    {{11, 17}, 23}, {{11, 18}, 25}, {{11, 19}, 28}, {{11, 20}, 31}, {{11, 21}, 35},
};

// First terms of the greedy Sidon sequence.
inline const std::vector<Int> kMianChowla11 = {1, 2, 4, 8, 13, 21, 31, 45, 66, 81, 97};

}  // namespace fixtures
