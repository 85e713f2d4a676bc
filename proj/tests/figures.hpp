#pragma once

// Rows of the printed triangles: Pascal and Fibonomial mod 2, Fibonomial mod 3
// in balanced digits. Only six Fibonomial rows mod 2 are printed.

#include <vector>

namespace fibfractal::figures {

inline const std::vector<std::vector<int>> kFibonomialMod2 = {
    {1}, {1, 1}, {1, 1, 1}, {1, 0, 0, 1}, {1, 1, 0, 1, 1}, {1, 1, 1, 1, 1, 1},
};

inline const std::vector<std::vector<int>> kFibonomialMod3Balanced = {
    {1},
    {1, 1},
    {1, 1, 1},
    {1, -1, -1, 1},
    {1, 0, 0, 0, 1},
    {1, -1, 0, 0, -1, 1},
    {1, -1, 1, 0, 1, -1, 1},
    {1, 1, -1, -1, -1, -1, 1, 1},
    {1, 0, 0, 0, -1, 0, 0, 0, 1},
    {1, 1, 0, 0, 1, 1, 0, 0, 1, 1},
    {1, 1, 1, 0, -1, -1, -1, 0, 1, 1, 1},
    {1, -1, -1, 1, 1, -1, -1, 1, 1, -1, -1, 1},
};

inline const std::vector<std::vector<int>> kPascalMod2 = {
    {1},
    {1, 1},
    {1, 0, 1},
    {1, 1, 1, 1},
    {1, 0, 0, 0, 1},
    {1, 1, 0, 0, 1, 1},
    {1, 0, 1, 0, 1, 0, 1},
    {1, 1, 1, 1, 1, 1, 1, 1},
};

}  // namespace fibfractal::figures
