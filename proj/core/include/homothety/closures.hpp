#pragma once

#include "homothety/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace homothety {

// Closure of a finitely generated subgroup of R*, viewed as a subset of R.
// The cyclic variants are discrete: rho^Z, +-rho^Z and (-rho)^Z (sign tied to
// exponent parity).  Dense variants close up to the positive reals or all of
// R.  zero_in_closure records whether 0 is a limit point, which happens
// exactly when some generator has |ratio| != 1.
struct MulClosure {
    enum class Variant {
        TrivialOne,
        PlusMinusOne,
        CyclicPos,
        CyclicWithSign,
        CyclicTwisted,
        DensePos,
        DenseAll,
    };
    Variant variant;
    std::optional<Rational> rho;  // > 1, primitive; present for cyclic variants
    bool zero_in_closure;
};

std::string mul_variant_name(MulClosure::Variant v);

// Exact classification for rational ratios via prime exponent vectors and
// the Hermite normal form of their lattice.  Non-rational ratios raise
// NonRationalRatioError; callers may fall back to numeric evidence.
MulClosure classify_mul_subgroup(const std::vector<FieldScalar>& ratios);

// Exact membership of t in the closure (as a subset of R, including 0 iff
// zero_in_closure).
bool mul_member(const MulClosure& c, const FieldScalar& t);

struct AddClosureEvidence {
    int real_rank;
    int q_rank;
    std::string note;
};

// Closure of a finitely generated additive subgroup of R^n, in the cases the
// classifier needs: a discrete lattice, a dense line, or explicitly
// Unresolved.  LatticePlusLine is reserved for the mixed case and is never
// produced.
struct AddClosure {
    enum class Variant { Lattice, DenseLine, LatticePlusLine, Unresolved };
    Variant variant;
    std::vector<Vec> basis;            // Lattice: Z-independent, HNF-reduced coordinates
    std::optional<Vec> direction;      // DenseLine
    std::optional<AddClosureEvidence> evidence;  // Unresolved
    int dimension = 0;
    FieldContextPtr ctx;

    int lattice_rank() const { return static_cast<int>(basis.size()); }
    bool resolved() const {
        return variant == Variant::Lattice || variant == Variant::DenseLine;
    }
    bool dense_in_space() const {  // closure equals all of R^n
        return variant == Variant::DenseLine && dimension == 1;
    }
};

std::string add_variant_name(AddClosure::Variant v);

AddClosure classify_add_subgroup(const std::vector<Vec>& vectors, int dimension,
                                 const FieldContextPtr& ctx);

// Lattice: exact integer-coordinate solve.  DenseLine: exact collinearity.
// Unresolved closures raise UnresolvedClosureError.
bool add_member(const AddClosure& c, const Vec& v);

}  // namespace homothety
