#pragma once

#include "homothety/invariants.hpp"

#include <optional>
#include <string>
#include <variant>

namespace homothety {

// Case one: some generator ratio has |ratio| != 1; orbit closures are scaled
// families of affine subspaces.  Case two: the group sits inside the
// symmetry group; orbit closures are one or two cosets of a closed additive
// subgroup.
enum class GroupCase { One, Two };

struct Predicates {
    std::optional<bool> has_dense_orbit;
    std::optional<bool> every_u_orbit_minimal_in_u;  // case one
    std::optional<bool> every_orbit_minimal;         // case two
    std::optional<bool> has_periodic_orbit;
    std::optional<int> hull_dim;  // case one
};

struct ClassificationReport {
    GroupCase group_case;
    int dimension;
    std::optional<AffineSubspace> hull;         // case one: invariant hull
    std::optional<MulClosure> ratio_closure;    // case one; absent on non-rational ratios
    std::optional<AddClosure> translation_closure;  // case two
    Vec base_point;                             // case one: hull base; case two: coset base
    Predicates predicates;
    std::vector<std::string> warnings;

    bool unresolved() const { return !warnings.empty(); }
};

ClassificationReport classify_group(const GroupSpec& spec);

// Orbit-closure descriptions per base point.
struct AffineSetDesc {
    AffineSubspace hull;
};
// Union over t in closure(ratio group) of t * direction + hull, with the
// t = 0 slice equal to the hull itself (0 is always a closure point in case
// one), so the hull lies inside every orbit closure.
struct ScaledFamilyDesc {
    Vec base;
    Vec direction;  // x - base, outside the hull's direction span
    MulClosure ratio_closure;
    AffineSubspace hull;
};
// (x + H) union (-x + base + H) for the closed additive subgroup H.
struct CosetPairDesc {
    Vec x;
    Vec base;
    AddClosure translation_closure;
};
using OrbitClosureDescription = std::variant<AffineSetDesc, ScaledFamilyDesc, CosetPairDesc>;

OrbitClosureDescription orbit_closure(const GroupSpec& spec, const ClassificationReport& report,
                                      const Vec& x);

bool member(const OrbitClosureDescription& desc, const Vec& y);

enum class ComponentCount { One, Two, CountablyMany };
std::string component_count_name(ComponentCount c);

ComponentCount connected_components(const OrbitClosureDescription& desc);

// The distinguishing certificate: different component counts rule out a
// homeomorphism; equal counts are reported without a claim either way.
std::string homeomorphy_verdict(const OrbitClosureDescription& a,
                                const OrbitClosureDescription& b);

enum class LineDichotomy { CaseOneDense, AllDense, AllClosedDiscrete };
std::string line_dichotomy_name(LineDichotomy d);

// n = 1 trichotomy: case-one groups have every orbit dense; symmetry-case
// groups have all orbits dense or all orbits closed and discrete.
LineDichotomy dichotomy_line(const GroupSpec& spec);

}  // namespace homothety
