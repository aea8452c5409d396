#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cvbell {

// Party counts shared by the large-N figures.
const std::vector<int>& large_party_counts();
// Squeezing values of the finite-squeezing comparison figure.
const std::vector<double>& comparison_squeezings();

// CSV data behind the three figures, header row first, reals at 17
// significant digits:
//   1: n,r,j,value  n = 2..5, r = 0.02 i (i = 0..100), J = 0.005 k (k = 0..200)
//   2: n,a,value    n in {5,9,15,25,45,85}, A = 0.001 i (i = 1..1500), large-squeezing limit
//   3: n,r,j,value  same n, r in {0.1,0.3,0.8,1.5}, J = k J_hi / 400 (k = 0..400)
//                   with J_hi = 4 x the optimal J for that (n, r)
// Output is independent of the worker count.
void write_figure(int which, std::ostream& out);
std::string figure_grid_description();

// printf("%.17g")
std::string format_real(double x);

}  // namespace cvbell
