#pragma once

#include "homothety/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace homothety {

enum class MapKind { Translation, Symmetry, Homothety };

struct FixedSet {
    enum class Kind { Empty, Point, AllSpace };
    Kind kind;
    std::optional<Vec> point;
};

// x |-> ratio * x + translation.  Translation form is total (translations
// have no center); the center b/(1-ratio) is derived on demand.
class AffineMap {
public:
    AffineMap(FieldScalar ratio, Vec translation);
    static AffineMap identity(const FieldContextPtr& ctx, int n);
    static AffineMap translation(Vec b);
    static AffineMap from_center(const Vec& center, FieldScalar ratio);

    const FieldScalar& ratio() const { return ratio_; }
    const Vec& translation() const { return translation_; }
    int dimension() const { return static_cast<int>(translation_.size()); }

    MapKind kind() const;
    bool in_symmetry_group() const;  // ratio is +1 or -1
    bool is_identity() const;
    Vec center() const;  // requires ratio != 1

    Vec apply(const Vec& x) const;
    AffineMap inverse() const;
    AffineMap pow(long long n) const;
    FixedSet fixed_set() const;

    friend AffineMap compose(const AffineMap& f, const AffineMap& g);  // f after g
    friend bool operator==(const AffineMap& a, const AffineMap& b);
    friend bool operator!=(const AffineMap& a, const AffineMap& b) { return !(a == b); }

private:
    FieldScalar ratio_;
    Vec translation_;
};

// f and g commute iff (ratio_f - 1) * b_g == (ratio_g - 1) * b_f; equivalent
// to equal centers or one of the maps being a translation, and total over
// symmetries and translations as well.
bool commutes(const AffineMap& f, const AffineMap& g);

struct GroupSpec {
    int dimension;
    FieldContextPtr ctx;
    std::vector<AffineMap> generators;
    std::vector<std::string> names;  // parallel to generators

    void validate() const;
    bool in_symmetry_group() const;       // every generator has ratio +-1
    bool has_non_symmetry_generator() const;
    bool is_abelian() const;  // pairwise commuting generators generate an abelian group
};

struct WordLetter {
    int generator;
    long long exponent;  // nonzero
};
using Word = std::vector<WordLetter>;

// Closed-form evaluation: with prefix ratio products P_k, the composite map
// is x |-> (prod ratios) x + sum_k P_{k-1} * t_k where t_k is the translation
// part of generator_{i_k}^{n_k}.  Must agree with folding compose over the
// expanded letter sequence.
AffineMap evaluate_word(const GroupSpec& spec, const Word& word);

std::string word_str(const GroupSpec& spec, const Word& word);

}  // namespace homothety
