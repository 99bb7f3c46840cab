#pragma once

#include "smtlab/upoly.hpp"

#include <complex>
#include <vector>

namespace smtlab {

struct ComplexRoot {
    std::complex<double> value;
    int multiplicity;
};

// All complex roots of p. Multiplicities are exact (square-free
// decomposition over Q); the root values themselves are refined
// numerically to near machine precision.
std::vector<ComplexRoot> complex_roots(const UPoly& p);

} // namespace smtlab
