#include "homothety/invariants.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace homothety {

bool AffineSubspace::contains(const Vec& p) const {
    if (p.size() != base.size()) throw DimensionMismatchError("affine membership");
    return solve_in_span(directions, vec_sub(p, base)).has_value();
}

bool AffineSubspace::contains_direction(const Vec& d) const {
    return solve_in_span(directions, d).has_value();
}

bool AffineSubspace::same_subspace(const AffineSubspace& other) const {
    return dim() == other.dim() && contains(other.base) && other.contains(base) &&
           std::all_of(other.directions.begin(), other.directions.end(),
                       [&](const Vec& d) { return contains_direction(d); });
}

AffineSubspace affine_hull(const std::vector<Vec>& points) {
    if (points.empty()) throw SemanticError("affine hull of an empty point set");
    AffineSubspace s;
    s.base = points[0];
    std::vector<Vec> diffs;
    for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(vec_sub(points[i], s.base));
    for (auto idx : independent_subset(diffs)) s.directions.push_back(diffs[idx]);
    return s;
}

AffineSubspace invariant_hull(const GroupSpec& spec) {
    spec.validate();
    if (spec.is_abelian()) throw AbelianGroupError();
    if (spec.in_symmetry_group()) throw GroupInsideSnError();

    std::vector<Vec> seeds;
    for (const auto& g : spec.generators) {
        if (g.in_symmetry_group())
            seeds.push_back(g.translation());  // g(0)
        else
            seeds.push_back(g.center());
    }
    AffineSubspace hull = affine_hull(seeds);

    for (int round = 0; round <= spec.dimension; ++round) {
        std::vector<Vec> points;
        points.push_back(hull.base);
        for (const auto& d : hull.directions) points.push_back(vec_add(hull.base, d));
        std::vector<Vec> images = points;
        for (const auto& g : spec.generators) {
            AffineMap gi = g.inverse();
            for (const auto& p : points) {
                images.push_back(g.apply(p));
                images.push_back(gi.apply(p));
            }
        }
        AffineSubspace next = affine_hull(images);
        if (next.dim() == hull.dim()) return hull;
        hull = std::move(next);
    }
    throw std::logic_error("invariant hull failed to stabilize within n+1 rounds");
}

std::vector<FieldScalar> ratio_generators(const GroupSpec& spec) {
    std::vector<FieldScalar> out;
    out.reserve(spec.generators.size());
    for (const auto& g : spec.generators) out.push_back(g.ratio());
    return out;
}

std::vector<Vec> translation_subgroup_generators(const GroupSpec& spec) {
    spec.validate();
    if (!spec.in_symmetry_group()) throw NotInSnError();
    if (spec.is_abelian()) throw AbelianGroupError();
    const AffineMap* first_odd = nullptr;
    for (const auto& g : spec.generators) {
        if (g.kind() == MapKind::Symmetry) {
            first_odd = &g;
            break;
        }
    }
    assert(first_odd != nullptr);  // non-abelian symmetry groups have a reflection
    std::vector<Vec> gens;
    for (const auto& g : spec.generators) {
        if (g.kind() == MapKind::Translation)
            gens.push_back(g.translation());
        else
            gens.push_back(vec_sub(first_odd->translation(), g.translation()));
    }
    return gens;
}

Vec coset_base_point(const GroupSpec& spec) {
    for (const auto& g : spec.generators)
        if (g.kind() == MapKind::Symmetry) return g.translation();
    throw NoSymmetryGeneratorError();
}

namespace {

using FlatKey = std::vector<Rational>;

FlatKey key_of(const AffineMap& m) {
    FlatKey k;
    k.reserve((m.dimension() + 1) * m.ratio().coeffs().size());
    for (const auto& q : m.ratio().coeffs()) k.push_back(q);
    for (const auto& x : m.translation())
        for (const auto& q : x.coeffs()) k.push_back(q);
    return k;
}

Word extend_word(Word w, int gen, int step) {
    if (!w.empty() && w.back().generator == gen) {
        w.back().exponent += step;
        if (w.back().exponent == 0) w.pop_back();
        return w;
    }
    w.push_back({gen, step});
    return w;
}

}  // namespace

WordEnumeration enumerate_words(const GroupSpec& spec, int max_length,
                                const EnumerationOptions& opts) {
    spec.validate();
    if (max_length < 0 || max_length > 12)
        throw SemanticError("word length bound must be between 0 and 12");

    struct Entry {
        AffineMap map;
        Word word;
    };
    std::map<FlatKey, std::size_t> seen;
    std::vector<Entry> elements;

    AffineMap id = AffineMap::identity(spec.ctx, spec.dimension);
    seen.emplace(key_of(id), 0);
    elements.push_back({id, {}});

    std::vector<std::size_t> frontier{0};
    for (int len = 1; len <= max_length && !frontier.empty(); ++len) {
        std::vector<std::size_t> next;
        for (std::size_t ei : frontier) {
            const Entry cur = elements[ei];  // copy: elements may reallocate
            for (std::size_t gi = 0; gi < spec.generators.size(); ++gi) {
                for (int step : {1, -1}) {
                    // Skip immediate cancellation with the last letter.
                    if (!cur.word.empty() && cur.word.back().generator == static_cast<int>(gi) &&
                        ((cur.word.back().exponent > 0) != (step > 0)))
                        continue;
                    AffineMap m = compose(cur.map, step > 0 ? spec.generators[gi]
                                                            : spec.generators[gi].inverse());
                    FlatKey k = key_of(m);
                    if (seen.count(k)) continue;
                    if (elements.size() >= opts.budget)
                        throw BudgetExceededError("more than " + std::to_string(opts.budget) +
                                                  " distinct elements at length " +
                                                  std::to_string(len));
                    seen.emplace(std::move(k), elements.size());
                    next.push_back(elements.size());
                    elements.push_back({std::move(m), extend_word(cur.word, static_cast<int>(gi), step)});
                }
            }
        }
        frontier = std::move(next);
    }

    WordEnumeration out;
    out.max_length = max_length;
    out.element_count = elements.size();
    auto cmp_vec = [](const Vec& a, const Vec& b) { return vec_cmp(a, b) < 0; };
    std::map<Vec, Word, decltype(cmp_vec)> centers_m(cmp_vec), sym_m(cmp_vec), refl_m(cmp_vec);
    auto cmp_scalar = [](const FieldScalar& a, const FieldScalar& b) {
        return FieldScalar::cmp(a, b) < 0;
    };
    std::map<FieldScalar, Word, decltype(cmp_scalar)> ratios_m(cmp_scalar);
    for (const auto& e : elements) {
        ratios_m.try_emplace(e.map.ratio(), e.word);
        switch (e.map.kind()) {
            case MapKind::Homothety:
                centers_m.try_emplace(e.map.center(), e.word);
                break;
            case MapKind::Translation:
                sym_m.try_emplace(e.map.translation(), e.word);
                break;
            case MapKind::Symmetry:
                sym_m.try_emplace(e.map.translation(), e.word);
                refl_m.try_emplace(e.map.translation(), e.word);
                break;
        }
    }
    for (auto& [p, w] : centers_m) out.centers.push_back({p, w});
    for (auto& [p, w] : sym_m) out.symmetry_images.push_back({p, w});
    for (auto& [p, w] : refl_m) out.reflection_images.push_back({p, w});
    for (auto& [r, w] : ratios_m) out.ratios.emplace_back(r, w);
    return out;
}

}  // namespace homothety
