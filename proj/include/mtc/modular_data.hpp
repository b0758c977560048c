#pragma once

#include <string>
#include <vector>

#include "mtc/cyclotomic.hpp"

namespace mtc {

// Numerical shadow of a modular category: ordered labels with exact
// dimensions, twists and S-matrix.  T is the diagonal matrix of twists.
struct ModularData {
    std::vector<std::string> labels;
    std::vector<Cyc> dims;
    std::vector<Cyc> theta;
    std::vector<std::vector<Cyc>> S;
    long unit = 0;  // index of the tensor unit's label

    long size() const { return (long)labels.size(); }

    Cyc global_dim() const {  // sum of dim^2
        Cyc d = Cyc::zero();
        for (const auto& x : dims) d = d + x * x;
        return d;
    }
};

} // namespace mtc
