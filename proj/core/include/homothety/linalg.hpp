#pragma once

#include "homothety/field.hpp"

#include <optional>
#include <vector>

namespace homothety {

using Vec = std::vector<FieldScalar>;

Vec vec_zero(const FieldContextPtr& ctx, int n);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const FieldScalar& s, const Vec& a);
Vec vec_neg(const Vec& a);
bool vec_is_zero(const Vec& a);
bool vec_eq(const Vec& a, const Vec& b);
int vec_cmp(const Vec& a, const Vec& b);
std::string vec_str(const Vec& a);
std::vector<double> vec_to_double(const Vec& a);

// Exact rank of the list of vectors (as elements of the real vector space).
int exact_rank(const std::vector<Vec>& vectors);

// Greedy maximal linearly independent sublist; returns indices.
std::vector<std::size_t> independent_subset(const std::vector<Vec>& vectors);

// Coefficients c with sum c_j * basis_j = target, when target lies in the
// span.  The basis need not be independent; any valid combination is fine.
std::optional<std::vector<FieldScalar>> solve_in_span(const std::vector<Vec>& basis,
                                                      const Vec& target);

}  // namespace homothety
