#pragma once

#include "homothety/errors.hpp"
#include "homothety/rational.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace homothety {

class FieldContext;
using FieldContextPtr = std::shared_ptr<const FieldContext>;

// A real multi-quadratic field Q(sqrt d_1, ..., sqrt d_k), k <= 3.  Elements
// are stored on the monomial basis indexed by subsets of the radicands:
// monomial(mask) = sqrt(prod_{i in mask} d_i), monomial(0) = 1.  The basis is
// a Q-basis exactly when no nonempty subset product is a perfect square; the
// constructor rejects radicand lists violating that.
class FieldContext {
public:
    static FieldContextPtr create(std::vector<std::int64_t> radicands);
    static FieldContextPtr rationals();  // k = 0

    int radicand_count() const { return static_cast<int>(radicands_.size()); }
    int monomial_count() const { return 1 << radicands_.size(); }
    const std::vector<std::int64_t>& radicands() const { return radicands_; }

    const Int& monomial_product(int mask) const { return products_[mask]; }
    // monomial(s) * monomial(t) = product_factor(s, t) * monomial(s ^ t)
    const Int& product_factor(int s, int t) const {
        return factors_[s * monomial_count() + t];
    }
    // Inverse of the display map: squarefree kernel -> (mask, c) with
    // monomial(mask) = c * sqrt(kernel).
    std::optional<std::pair<int, Int>> mask_for_kernel(const Int& kernel) const;

    bool same(const FieldContext& other) const { return radicands_ == other.radicands_; }

private:
    explicit FieldContext(std::vector<std::int64_t> radicands);

    std::vector<std::int64_t> radicands_;
    std::vector<Int> products_;
    std::vector<Int> factors_;
    std::vector<std::pair<Int, std::pair<int, Int>>> kernels_;  // sorted by kernel
};

class FieldScalar {
public:
    FieldScalar(FieldContextPtr ctx, Rational rational_value);
    static FieldScalar zero(const FieldContextPtr& ctx);
    static FieldScalar one(const FieldContextPtr& ctx);
    static FieldScalar from_coeffs(FieldContextPtr ctx, std::vector<Rational> coeffs);

    const FieldContextPtr& context() const { return ctx_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    const Rational& rational_part() const { return c_[0]; }

    // Exact sign of the real embedding, by rational interval refinement of
    // each sqrt d; the zero test is coefficientwise so refinement terminates.
    int sign() const;
    double to_double() const;
    std::string str() const;

    FieldScalar& operator+=(const FieldScalar& o);
    FieldScalar& operator-=(const FieldScalar& o);
    FieldScalar& operator*=(const FieldScalar& o);
    FieldScalar& operator/=(const FieldScalar& o);
    FieldScalar& operator*=(const Rational& q);
    friend FieldScalar operator+(FieldScalar a, const FieldScalar& b) { return a += b; }
    friend FieldScalar operator-(FieldScalar a, const FieldScalar& b) { return a -= b; }
    friend FieldScalar operator*(FieldScalar a, const FieldScalar& b) { return a *= b; }
    friend FieldScalar operator/(FieldScalar a, const FieldScalar& b) { return a /= b; }
    friend FieldScalar operator*(FieldScalar a, const Rational& q) { return a *= q; }
    friend FieldScalar operator*(const Rational& q, FieldScalar a) { return a *= q; }
    FieldScalar operator-() const;

    friend bool operator==(const FieldScalar& a, const FieldScalar& b);
    friend bool operator!=(const FieldScalar& a, const FieldScalar& b) { return !(a == b); }

    // Total order on coefficient vectors; used for canonical sets and maps.
    static int cmp(const FieldScalar& a, const FieldScalar& b);

private:
    void check_context(const FieldScalar& o) const;

    FieldContextPtr ctx_;
    std::vector<Rational> c_;
};

FieldScalar inverse(const FieldScalar& a);
FieldScalar field_pow(const FieldScalar& a, long long n);

// Scalar-literal grammar:
//   expr     := ['-'] term (('+'|'-') term)*
//   term     := rational ('*' root)? | root
//   root     := 'sqrt' integer
//   rational := int ('/' int)?
// Radicands must reduce into the context (sqrt12 is fine when sqrt3 is).
FieldScalar parse_scalar(const std::string& text, const FieldContextPtr& ctx);

}  // namespace homothety
