#include "homothety/affine.hpp"

#include <cassert>

namespace homothety {

AffineMap::AffineMap(FieldScalar ratio, Vec translation)
    : ratio_(std::move(ratio)), translation_(std::move(translation)) {
    if (ratio_.is_zero()) throw SemanticError("affine map ratio must be nonzero");
    for (const auto& t : translation_)
        if (!(t.context() == ratio_.context()) && !t.context()->same(*ratio_.context()))
            throw ContextMismatchError();
}

AffineMap AffineMap::identity(const FieldContextPtr& ctx, int n) {
    return AffineMap(FieldScalar::one(ctx), vec_zero(ctx, n));
}

AffineMap AffineMap::translation(Vec b) {
    if (b.empty()) throw SemanticError("translation needs dimension >= 1");
    auto ctx = b[0].context();
    return AffineMap(FieldScalar::one(ctx), std::move(b));
}

AffineMap AffineMap::from_center(const Vec& center, FieldScalar ratio) {
    if (center.empty()) throw SemanticError("center needs dimension >= 1");
    auto ctx = center[0].context();
    FieldScalar one = FieldScalar::one(ctx);
    if (ratio == one) throw SemanticError("center form requires ratio != 1");
    Vec b = vec_scale(one - ratio, center);
    return AffineMap(std::move(ratio), std::move(b));
}

MapKind AffineMap::kind() const {
    const auto& ctx = ratio_.context();
    if (ratio_ == FieldScalar::one(ctx)) return MapKind::Translation;
    if (ratio_ == -FieldScalar::one(ctx)) return MapKind::Symmetry;
    return MapKind::Homothety;
}

bool AffineMap::in_symmetry_group() const { return kind() != MapKind::Homothety; }

bool AffineMap::is_identity() const {
    return kind() == MapKind::Translation && vec_is_zero(translation_);
}

Vec AffineMap::center() const {
    const auto& ctx = ratio_.context();
    FieldScalar denom = FieldScalar::one(ctx) - ratio_;
    if (denom.is_zero()) throw SemanticError("translations have no center");
    return vec_scale(homothety::inverse(denom), translation_);
}

Vec AffineMap::apply(const Vec& x) const {
    if (static_cast<int>(x.size()) != dimension())
        throw DimensionMismatchError("affine map application");
    Vec r = vec_scale(ratio_, x);
    return vec_add(r, translation_);
}

AffineMap compose(const AffineMap& f, const AffineMap& g) {
    if (f.dimension() != g.dimension()) throw DimensionMismatchError("composition");
    FieldScalar ratio = f.ratio_ * g.ratio_;
    Vec b = vec_add(vec_scale(f.ratio_, g.translation_), f.translation_);
    return AffineMap(std::move(ratio), std::move(b));
}

AffineMap AffineMap::inverse() const {
    FieldScalar inv = homothety::inverse(ratio_);
    Vec b = vec_scale(inv, vec_neg(translation_));
    return AffineMap(std::move(inv), std::move(b));
}

AffineMap AffineMap::pow(long long n) const {
    const auto& ctx = ratio_.context();
    if (n == 0) return identity(ctx, dimension());
    FieldScalar one = FieldScalar::one(ctx);
    FieldScalar rn = field_pow(ratio_, n);
    if (ratio_ == one) {
        return AffineMap(one, vec_scale(FieldScalar(ctx, Rational(n)), translation_));
    }
    // Geometric sum: b_n = (1 - ratio^n) / (1 - ratio) * b, valid for n < 0 too.
    FieldScalar factor = (one - rn) / (one - ratio_);
    return AffineMap(std::move(rn), vec_scale(factor, translation_));
}

FixedSet AffineMap::fixed_set() const {
    const auto& ctx = ratio_.context();
    switch (kind()) {
        case MapKind::Translation:
            if (vec_is_zero(translation_)) return {FixedSet::Kind::AllSpace, std::nullopt};
            return {FixedSet::Kind::Empty, std::nullopt};
        case MapKind::Symmetry: {
            Vec p = vec_scale(FieldScalar(ctx, Rational(1, 2)), translation_);
            return {FixedSet::Kind::Point, std::move(p)};
        }
        case MapKind::Homothety:
            return {FixedSet::Kind::Point, center()};
    }
    throw std::logic_error("unreachable");
}

bool operator==(const AffineMap& a, const AffineMap& b) {
    return a.ratio_ == b.ratio_ && vec_eq(a.translation_, b.translation_);
}

bool commutes(const AffineMap& f, const AffineMap& g) {
    if (f.dimension() != g.dimension()) throw DimensionMismatchError("commutation test");
    const auto& ctx = f.ratio().context();
    FieldScalar one = FieldScalar::one(ctx);
    Vec lhs = vec_scale(f.ratio() - one, g.translation());
    Vec rhs = vec_scale(g.ratio() - one, f.translation());
    return vec_eq(lhs, rhs);
}

void GroupSpec::validate() const {
    if (dimension < 1) throw SemanticError("dimension must be >= 1");
    if (generators.empty()) throw SemanticError("at least one generator is required");
    for (const auto& g : generators) {
        if (g.dimension() != dimension) throw DimensionMismatchError("generator dimension");
        if (!g.ratio().context()->same(*ctx)) throw ContextMismatchError();
    }
    if (!names.empty() && names.size() != generators.size())
        throw SemanticError("generator names must match the generator list");
}

bool GroupSpec::in_symmetry_group() const {
    for (const auto& g : generators)
        if (!g.in_symmetry_group()) return false;
    return true;
}

bool GroupSpec::has_non_symmetry_generator() const { return !in_symmetry_group(); }

bool GroupSpec::is_abelian() const {
    for (std::size_t i = 0; i < generators.size(); ++i)
        for (std::size_t j = i + 1; j < generators.size(); ++j)
            if (!commutes(generators[i], generators[j])) return false;
    return true;
}

AffineMap evaluate_word(const GroupSpec& spec, const Word& word) {
    const auto& ctx = spec.ctx;
    FieldScalar prefix = FieldScalar::one(ctx);
    FieldScalar ratio = FieldScalar::one(ctx);
    Vec b = vec_zero(ctx, spec.dimension);
    for (const auto& letter : word) {
        if (letter.generator < 0 || letter.generator >= static_cast<int>(spec.generators.size()))
            throw SemanticError("word letter references an unknown generator");
        AffineMap part = spec.generators[letter.generator].pow(letter.exponent);
        b = vec_add(b, vec_scale(prefix, part.translation()));
        prefix *= part.ratio();
    }
    ratio = prefix;
    return AffineMap(std::move(ratio), std::move(b));
}

std::string word_str(const GroupSpec& spec, const Word& word) {
    if (word.empty()) return "id";
    std::string s;
    for (const auto& letter : word) {
        if (!s.empty()) s += "*";
        std::string name = spec.names.empty() ? "g" + std::to_string(letter.generator)
                                              : spec.names[letter.generator];
        s += name;
        if (letter.exponent != 1) s += "^" + std::to_string(letter.exponent);
    }
    return s;
}

}  // namespace homothety
