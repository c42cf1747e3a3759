#pragma once

// Cells of the bundled golden tables that disagree with the brute-force class
// number. The sum cells are exactly the sums that read one of the class-number
// cells below.

#include "hcn/arith.hpp"

#include <vector>

namespace hcn::errata {

struct Cell {
    i64 level;
    i64 key;      // D for class numbers, N for sums
    i64 printed;
    i64 actual;
};

inline const std::vector<Cell>& class_number_cells() {
    static const std::vector<Cell> cells = {
        {4, 48, 7, 8},     {4, 87, 0, 12},    {12, 48, 7, 8},    {12, 96, 10, 12}, {16, 79, 0, 10},
        {16, 80, 24, 0},   {16, 92, 36, 24},  {16, 95, 32, 16},  {16, 96, 12, 0},
    };
    return cells;
}

inline const std::vector<Cell>& sum_cells() {
    static const std::vector<Cell> cells = {
        {4, 12, 83, 84},    {4, 13, 20, 22},    {4, 16, 118, 120},  {4, 21, 38, 40},    {4, 22, 60, 84},
        {4, 24, 196, 220},  {12, 12, 139, 140}, {12, 13, 14, 16},   {12, 16, 90, 92},   {12, 21, 62, 64},
        {12, 24, 370, 372}, {12, 25, 16, 20},   {16, 20, 104, 100}, {16, 21, 64, 16},   {16, 22, 64, 84},
        {16, 23, 52, 40},   {16, 24, 308, 192}, {16, 25, 44, 20},
    };
    return cells;
}

inline const Cell* find(const std::vector<Cell>& cells, i64 level, i64 key) {
    for (const auto& c : cells)
        if (c.level == level && c.key == key) return &c;
    return nullptr;
}

}  // namespace hcn::errata
