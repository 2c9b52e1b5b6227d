#pragma once

#include "homothety/affine.hpp"
#include "homothety/closures.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace homothety {

struct AffineSubspace {
    Vec base;
    std::vector<Vec> directions;  // linearly independent; empty = single point

    int dim() const { return static_cast<int>(directions.size()); }
    int ambient_dim() const { return static_cast<int>(base.size()); }
    bool contains(const Vec& p) const;
    bool contains_direction(const Vec& d) const;
    bool same_subspace(const AffineSubspace& other) const;
};

// Smallest affine subspace containing the points.
AffineSubspace affine_hull(const std::vector<Vec>& points);

// Smallest generator-invariant affine subspace containing the seed set
// {center(g) : g homothety generator} and {g(0) : g symmetry or translation
// generator}.  Grows by invariant-hull iteration; the dimension strictly
// increases until stable, so at most n+1 rounds run.  For homothety-only
// specs this equals the affine hull of the generator centers.
AffineSubspace invariant_hull(const GroupSpec& spec);

// Generator ratios; the ratio of any word is a product of their powers.
std::vector<FieldScalar> ratio_generators(const GroupSpec& spec);

// Z-generators of the translation-part group for a spec inside the symmetry
// group: {b_i : ratio_i = 1} plus {b_first - b_j} over the reflection
// generators, via the index-2 even-sign kernel.
std::vector<Vec> translation_subgroup_generators(const GroupSpec& spec);

// Image of 0 under the first reflection generator; the coset description
// base point.  Any other choice shifts by a translation-group element.
Vec coset_base_point(const GroupSpec& spec);

struct WitnessedPoint {
    Vec point;
    Word word;
};

struct WordEnumeration {
    std::vector<WitnessedPoint> centers;            // fixed points of |ratio| != 1 elements
    std::vector<WitnessedPoint> symmetry_images;    // f(0) for ratio +-1 elements
    std::vector<WitnessedPoint> reflection_images;  // f(0) for ratio -1 elements
    std::vector<std::pair<FieldScalar, Word>> ratios;
    int max_length = 0;
    std::size_t element_count = 0;
};

struct EnumerationOptions {
    std::size_t budget = 200000;  // cap on distinct group elements
};

// Breadth-first enumeration of distinct group elements reachable by words of
// length <= max_length, each with its first (shortest) witness word.
WordEnumeration enumerate_words(const GroupSpec& spec, int max_length,
                                const EnumerationOptions& opts = {});

}  // namespace homothety
