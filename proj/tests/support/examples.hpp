#pragma once

// The four worked sequences sharing the Gorenstein partner {{5,5,5,7,7,7,9}}.

#include "bettiforge/aci.hpp"

namespace examples {

using bettiforge::AciBetti;

inline AciBetti one() { return {{3, 6, 6, 6}, {8, 8, 8, 10, 10, 10, 12, 12, 12, 12}, {9, 11, 11, 11, 13, 13, 13}}; }
inline AciBetti two() { return {{2, 5, 5, 7}, {7, 7, 7, 9, 9, 9, 10, 11}, {8, 10, 10, 10, 12}}; }
inline AciBetti three() { return {{4, 5, 5, 9}, {9, 9, 9, 11, 11, 11, 13}, {12, 12, 12, 14}}; }
inline AciBetti four() { return {{4, 5, 5, 9}, {9, 9, 9, 10, 11, 11, 11, 13}, {10, 12, 12, 12, 14}}; }

}  // namespace examples
