#pragma once

#include "suq2/cyclic.hpp"

#include <string>
#include <vector>

namespace suq2 {

struct VacuumRow {
    std::string name;  // e.g. "e(b) = -a*"
    double residual = 0.0;
};
struct VacuumReport {
    std::vector<VacuumRow> rows;
    double max_residual = 0.0;
};
// Hopf action h(x) applied to the vacuum (0,0,0) against the expected generator images.
VacuumReport vacuum_test(double q);

}  // namespace suq2
