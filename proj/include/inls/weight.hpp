// The regularized singular weight |x|^{-b} on a grid.
//
// Off-origin points carry the pointwise value; the origin cell carries its
// exact cell average (1/h^d) int_cell |x|^{-b} dx, evaluated to relative
// error 1e-10.  The average uses the dilation identity
//     int_{[-s,s]^d} |x|^{-b} = shell(s) / (1 - 2^{b-d}),
// where shell(s) is the integral over [-s,s]^d minus [-s/2,s/2]^d, a region
// on which the integrand is smooth and ordinary adaptive quadrature applies.
#pragma once

#include <memory>
#include <vector>

#include "inls/grid.hpp"

namespace inls {

struct SingularWeight {
    std::shared_ptr<const Grid> grid;
    double b = 0;
    std::vector<double> values;
};

// Throws BadExponent unless 0 < b < d.
SingularWeight sample_weight(std::shared_ptr<const Grid> g, double b);

// Exact cell average of |x|^{-b} over the cube [-h/2, h/2]^d.
double origin_cell_average(int d, double h, double b);

}  // namespace inls
