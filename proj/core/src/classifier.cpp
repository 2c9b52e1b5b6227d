#include "homothety/classifier.hpp"

#include <cassert>

namespace homothety {

ClassificationReport classify_group(const GroupSpec& spec) {
    spec.validate();
    if (spec.is_abelian()) throw AbelianGroupError();

    ClassificationReport rep;
    rep.dimension = spec.dimension;

    if (spec.has_non_symmetry_generator()) {
        rep.group_case = GroupCase::One;
        rep.hull = invariant_hull(spec);
        rep.base_point = rep.hull->base;
        rep.predicates.hull_dim = rep.hull->dim();
        try {
            rep.ratio_closure = classify_mul_subgroup(ratio_generators(spec));
            assert(rep.ratio_closure->zero_in_closure);
        } catch (const NonRationalRatioError& e) {
            rep.warnings.push_back(e.what());
        }
        if (rep.hull->dim() == spec.dimension) {
            rep.predicates.has_dense_orbit = true;
        } else if (rep.ratio_closure) {
            rep.predicates.has_dense_orbit =
                rep.hull->dim() == spec.dimension - 1 &&
                rep.ratio_closure->variant == MulClosure::Variant::DenseAll;
        }
        rep.predicates.every_u_orbit_minimal_in_u = true;
        rep.predicates.has_periodic_orbit = false;
        return rep;
    }

    rep.group_case = GroupCase::Two;
    auto gens = translation_subgroup_generators(spec);
    rep.translation_closure = classify_add_subgroup(gens, spec.dimension, spec.ctx);
    rep.base_point = coset_base_point(spec);
    const AddClosure& h = *rep.translation_closure;
    if (h.resolved()) {
        rep.predicates.has_dense_orbit = h.dense_in_space();
        rep.predicates.has_periodic_orbit =
            h.variant == AddClosure::Variant::Lattice && h.lattice_rank() == 0;
    } else {
        rep.warnings.push_back("translation subgroup closure unresolved: " + h.evidence->note +
                               " (real_rank=" + std::to_string(h.evidence->real_rank) +
                               ", q_rank=" + std::to_string(h.evidence->q_rank) + ")");
    }
    rep.predicates.every_orbit_minimal = true;
    return rep;
}

OrbitClosureDescription orbit_closure(const GroupSpec& spec, const ClassificationReport& report,
                                      const Vec& x) {
    if (static_cast<int>(x.size()) != spec.dimension)
        throw DimensionMismatchError("orbit closure base point");
    if (report.group_case == GroupCase::One) {
        const AffineSubspace& hull = *report.hull;
        if (hull.contains(x)) return AffineSetDesc{hull};
        if (!report.ratio_closure)
            throw UnresolvedClosureError("ratio group closure unavailable (non-rational ratios)");
        return ScaledFamilyDesc{report.base_point, vec_sub(x, report.base_point),
                                *report.ratio_closure, hull};
    }
    return CosetPairDesc{x, report.base_point, *report.translation_closure};
}

namespace {

bool scaled_family_member(const ScaledFamilyDesc& d, const Vec& y) {
    // Decompose y - base = t * direction + e with e in the hull's direction
    // span; t is unique because direction lies outside that span.
    std::vector<Vec> basis;
    basis.push_back(d.direction);
    for (const auto& dir : d.hull.directions) basis.push_back(dir);
    auto coords = solve_in_span(basis, vec_sub(y, d.base));
    if (!coords) return false;
    return mul_member(d.ratio_closure, (*coords)[0]);
}

bool coset_pair_member(const CosetPairDesc& d, const Vec& y) {
    if (add_member(d.translation_closure, vec_sub(y, d.x))) return true;
    return add_member(d.translation_closure, vec_sub(vec_add(y, d.x), d.base));
}

}  // namespace

bool member(const OrbitClosureDescription& desc, const Vec& y) {
    return std::visit(
        [&](const auto& d) -> bool {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, AffineSetDesc>)
                return d.hull.contains(y);
            else if constexpr (std::is_same_v<T, ScaledFamilyDesc>)
                return scaled_family_member(d, y);
            else
                return coset_pair_member(d, y);
        },
        desc);
}

std::string component_count_name(ComponentCount c) {
    switch (c) {
        case ComponentCount::One: return "1";
        case ComponentCount::Two: return "2";
        case ComponentCount::CountablyMany: return "countably-many";
    }
    return "?";
}

ComponentCount connected_components(const OrbitClosureDescription& desc) {
    if (std::holds_alternative<AffineSetDesc>(desc)) return ComponentCount::One;
    if (const auto* sf = std::get_if<ScaledFamilyDesc>(&desc)) {
        switch (sf->ratio_closure.variant) {
            case MulClosure::Variant::DenseAll:
            case MulClosure::Variant::DensePos:
                // The t = 0 slice glues the family into one piece.
                return ComponentCount::One;
            default:
                return ComponentCount::CountablyMany;
        }
    }
    const auto& cp = std::get<CosetPairDesc>(desc);
    const AddClosure& h = cp.translation_closure;
    if (!h.resolved())
        throw UnresolvedClosureError("component count needs a resolved translation closure");
    if (h.dense_in_space()) return ComponentCount::One;
    // Cosets of a subgroup coincide or are disjoint; they coincide exactly
    // when 2x - base lies in the closure.
    Vec twice = vec_sub(vec_add(cp.x, cp.x), cp.base);
    const bool coincide = add_member(h, twice);
    const bool connected_coset =
        h.variant == AddClosure::Variant::DenseLine ||
        (h.variant == AddClosure::Variant::Lattice && h.lattice_rank() == 0);
    if (coincide) return connected_coset ? ComponentCount::One : ComponentCount::CountablyMany;
    return connected_coset ? ComponentCount::Two : ComponentCount::CountablyMany;
}

std::string homeomorphy_verdict(const OrbitClosureDescription& a,
                                const OrbitClosureDescription& b) {
    ComponentCount ca = connected_components(a);
    ComponentCount cb = connected_components(b);
    if (ca != cb)
        return "not homeomorphic (component counts " + component_count_name(ca) + " vs " +
               component_count_name(cb) + ")";
    return "component counts equal (" + component_count_name(ca) +
           "); homeomorphy not certified";
}

LineDichotomy dichotomy_line(const GroupSpec& spec) {
    if (spec.dimension != 1) throw SemanticError("line dichotomy requires dimension 1");
    ClassificationReport rep = classify_group(spec);
    if (rep.group_case == GroupCase::One) return LineDichotomy::CaseOneDense;
    const AddClosure& h = *rep.translation_closure;
    if (!h.resolved())
        throw UnresolvedClosureError("translation closure unresolved on the line");
    return h.variant == AddClosure::Variant::DenseLine ? LineDichotomy::AllDense
                                                       : LineDichotomy::AllClosedDiscrete;
}

std::string line_dichotomy_name(LineDichotomy d) {
    switch (d) {
        case LineDichotomy::CaseOneDense: return "CaseOneDense";
        case LineDichotomy::AllDense: return "AllDense";
        case LineDichotomy::AllClosedDiscrete: return "AllClosedDiscrete";
    }
    return "?";
}

}  // namespace homothety
