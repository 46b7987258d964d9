#pragma once

#include "pcab/matrix.hpp"

// Shared 6-observation fixtures used across the suite. t2 is the 6x2 set,
// t5 extends it with two more features.

namespace fixtures {

inline pcab::DataMatrix t2() {
    pcab::Matrix m(6, 2, {10, 6, 11, 4, 8, 5, 3, 3, 2, 2.8, 1, 1});
    return pcab::DataMatrix(std::move(m), {"A", "B", "C", "D", "E", "F"},
                            {"feat1", "feat2"});
}

inline pcab::DataMatrix t5() {
    pcab::Matrix m(6, 4,
                   {10, 6, 12, 5,
                    11, 4, 9,  7,
                    8,  5, 10, 6,
                    3,  3, 2.5, 2,
                    2,  2.8, 1.3, 4,
                    1,  1, 2,  7});
    return pcab::DataMatrix(std::move(m), {"A", "B", "C", "D", "E", "F"},
                            {"feat1", "feat2", "feat3", "feat4"});
}

} // namespace fixtures
