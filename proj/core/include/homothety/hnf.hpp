#pragma once

#include "homothety/rational.hpp"

#include <vector>

namespace homothety {

using IntMat = std::vector<std::vector<Int>>;

// Row-style Hermite normal form: pivots positive, entries above each pivot
// reduced into [0, pivot), zero rows dropped.  Equal lattices get equal forms.
struct HnfResult {
    IntMat rows;
    int rank;
};
HnfResult hermite_normal_form(IntMat a);

struct ExtGcd {
    long long g, x, y;  // g = gcd >= 0, g = x*a + y*b
};
ExtGcd ext_gcd(long long a, long long b);

}  // namespace homothety
