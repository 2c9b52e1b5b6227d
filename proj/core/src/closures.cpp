#include "homothety/closures.hpp"

#include "homothety/hnf.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>

namespace homothety {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

// Folds (sign, multiple) generator pairs of a subgroup of Z/2 x Z, tracking
// whether (-1, 0) lies in the subgroup (a relation with odd sign parity).
struct SignFold {
    long long g = 0;  // gcd of multiples so far, >= 0
    int parity = 0;   // sign parity attached to the folded generator
    bool has_minus_one = false;

    void add(int s, long long m) {
        s &= 1;
        if (m == 0) {
            if (s) has_minus_one = true;
            return;
        }
        if (m < 0) m = -m;  // (s, m) and (s, -m) generate the same subgroup
        if (g == 0) {
            g = m;
            parity = s;
            return;
        }
        ExtGcd e = ext_gcd(g, m);
        // Relation with zero second coordinate: (m/g')*old - (g/g')*new.
        long long rel = (m / e.g) * parity + (g / e.g) * s;
        if (rel & 1) has_minus_one = true;
        parity = static_cast<int>(((e.x * parity + e.y * s) % 2 + 2) % 2);
        g = e.g;
    }
};

Rational checked_rational_ratio(const FieldScalar& r) {
    if (r.is_zero()) throw SemanticError("zero ratio is not a group element");
    if (!r.is_rational()) throw NonRationalRatioError(r.str());
    const Rational& q = r.rational_part();
    if (!fits_int64(numerator(q)) || !fits_int64(denominator(q)))
        throw SemanticError("ratio exceeds the 64-bit factorization bound: " + r.str());
    return q;
}

}  // namespace

std::string mul_variant_name(MulClosure::Variant v) {
    switch (v) {
        case MulClosure::Variant::TrivialOne: return "TrivialOne";
        case MulClosure::Variant::PlusMinusOne: return "PlusMinusOne";
        case MulClosure::Variant::CyclicPos: return "CyclicPos";
        case MulClosure::Variant::CyclicWithSign: return "CyclicWithSign";
        case MulClosure::Variant::CyclicTwisted: return "CyclicTwisted";
        case MulClosure::Variant::DensePos: return "DensePos";
        case MulClosure::Variant::DenseAll: return "DenseAll";
    }
    return "?";
}

MulClosure classify_mul_subgroup(const std::vector<FieldScalar>& ratios) {
    if (ratios.empty()) throw SemanticError("ratio list is empty");
    std::vector<Rational> qs;
    qs.reserve(ratios.size());
    for (const auto& r : ratios) qs.push_back(checked_rational_ratio(r));

    // Prime exponent vectors of the magnitudes.
    std::map<std::uint64_t, std::size_t> prime_index;
    std::vector<std::vector<long long>> exps(qs.size());
    std::vector<int> signs(qs.size());
    for (std::size_t i = 0; i < qs.size(); ++i) {
        signs[i] = qs[i] < 0 ? 1 : 0;
        auto push = [&](std::uint64_t p, int e) {
            auto [it, fresh] = prime_index.emplace(p, prime_index.size());
            (void)fresh;
            std::size_t idx = it->second;
            for (auto& v : exps)
                if (v.size() <= idx) v.resize(prime_index.size(), 0);
            exps[i][idx] += e;
        };
        Int num = boost::multiprecision::abs(numerator(qs[i]));
        Int den = denominator(qs[i]);
        for (auto [p, e] : factor_u64(static_cast<std::uint64_t>(num))) push(p, e);
        for (auto [p, e] : factor_u64(static_cast<std::uint64_t>(den))) push(p, -e);
    }
    const std::size_t np = prime_index.size();
    for (auto& v : exps) v.resize(np, 0);

    bool any_negative = std::any_of(signs.begin(), signs.end(), [](int s) { return s != 0; });

    IntMat mat(qs.size(), std::vector<Int>(np));
    for (std::size_t i = 0; i < qs.size(); ++i)
        for (std::size_t j = 0; j < np; ++j) mat[i][j] = exps[i][j];
    HnfResult hnf = hermite_normal_form(std::move(mat));

    if (hnf.rank == 0) {
        return {any_negative ? MulClosure::Variant::PlusMinusOne : MulClosure::Variant::TrivialOne,
                std::nullopt, false};
    }
    if (hnf.rank >= 2) {
        return {any_negative ? MulClosure::Variant::DenseAll : MulClosure::Variant::DensePos,
                std::nullopt, true};
    }

    // Rank one: the HNF row generates the exponent lattice, so the magnitude
    // group is rho^Z for a primitive rho.
    std::vector<Int> h = hnf.rows[0];
    std::vector<std::uint64_t> primes(np);
    for (auto [p, idx] : prime_index) primes[idx] = p;
    auto rho_of = [&](const std::vector<Int>& v) {
        Rational rho(1);
        for (std::size_t j = 0; j < np; ++j) {
            if (v[j] == 0) continue;
            long long e = static_cast<long long>(v[j]);
            Rational p(primes[j]);
            Rational f = e > 0 ? p : Rational(1) / p;
            for (long long t = 0; t < std::llabs(e); ++t) rho *= f;
        }
        return rho;
    };
    Rational rho = rho_of(h);
    if (rho < 1) {
        for (auto& x : h) x = -x;
        rho = rho_of(h);
    }
    assert(rho > 1);

    std::size_t lead = 0;
    while (h[lead] == 0) ++lead;
    SignFold fold;
    for (std::size_t i = 0; i < qs.size(); ++i) {
        Int m = Int(exps[i][lead]) / h[lead];
        assert(fits_int64(m));
        fold.add(signs[i], static_cast<long long>(m));
    }
    assert(fold.g == 1);

    MulClosure::Variant v;
    if (fold.has_minus_one)
        v = MulClosure::Variant::CyclicWithSign;
    else if (fold.parity == 0)
        v = MulClosure::Variant::CyclicPos;
    else
        v = MulClosure::Variant::CyclicTwisted;
    return {v, rho, true};
}

bool mul_member(const MulClosure& c, const FieldScalar& t) {
    if (t.is_zero()) return c.zero_in_closure;
    switch (c.variant) {
        case MulClosure::Variant::DenseAll:
            return true;
        case MulClosure::Variant::DensePos:
            return t.sign() > 0;
        case MulClosure::Variant::TrivialOne:
            return t == FieldScalar::one(t.context());
        case MulClosure::Variant::PlusMinusOne:
            return t == FieldScalar::one(t.context()) || t == -FieldScalar::one(t.context());
        default:
            break;
    }
    if (!t.is_rational()) return false;
    Rational q = t.rational_part();
    bool positive = q > 0;
    Rational mag = positive ? q : Rational(-q);
    const Rational& rho = *c.rho;
    long long k = 0;
    while (mag > 1 && k < 4096) {
        mag /= rho;
        ++k;
    }
    while (mag < 1 && k > -4096) {
        mag *= rho;
        --k;
    }
    if (mag != 1) return false;
    switch (c.variant) {
        case MulClosure::Variant::CyclicPos:
            return positive;
        case MulClosure::Variant::CyclicWithSign:
            return true;
        case MulClosure::Variant::CyclicTwisted:
            return positive == (k % 2 == 0);
        default:
            throw std::logic_error("unreachable");
    }
}

std::string add_variant_name(AddClosure::Variant v) {
    switch (v) {
        case AddClosure::Variant::Lattice: return "Lattice";
        case AddClosure::Variant::DenseLine: return "DenseLine";
        case AddClosure::Variant::LatticePlusLine: return "LatticePlusLine";
        case AddClosure::Variant::Unresolved: return "Unresolved";
    }
    return "?";
}

namespace {

// Rational coordinate flattening: Q-rank of the generators as vectors over Q.
int rational_rank(const std::vector<Vec>& vectors, const FieldContextPtr& ctx) {
    auto rat = FieldContext::rationals();
    const int m = ctx->monomial_count();
    std::vector<Vec> flat;
    flat.reserve(vectors.size());
    for (const auto& v : vectors) {
        Vec row;
        row.reserve(v.size() * m);
        for (const auto& x : v)
            for (int j = 0; j < m; ++j) row.emplace_back(rat, x.coeffs()[j]);
        flat.push_back(std::move(row));
    }
    return exact_rank(flat);
}

std::string unresolved_note(const std::vector<Vec>& gens) {
    // Small numeric hint: shortest nonzero combination with coefficients in
    // [-4, 4]; equidistribution checks are left to the simulator.
    double best = -1.0;
    std::vector<std::vector<double>> fgens;
    for (const auto& g : gens) fgens.push_back(vec_to_double(g));
    const std::size_t m = fgens.size();
    std::vector<long long> coef(m, -4);
    while (true) {
        std::vector<double> acc(fgens[0].size(), 0.0);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += coef[i] * fgens[i][j];
        double norm = 0;
        for (double x : acc) norm += x * x;
        norm = std::sqrt(norm);
        if (norm > 1e-12 && (best < 0 || norm < best)) best = norm;
        std::size_t pos = 0;
        while (pos < m && coef[pos] == 4) coef[pos++] = -4;
        if (pos == m) break;
        ++coef[pos];
    }
    return "mixed lattice/dense case (q_rank > real_rank >= 2); shortest nonzero combination "
           "with coefficients in [-4,4] has norm " +
           std::to_string(best);
}

}  // namespace

AddClosure classify_add_subgroup(const std::vector<Vec>& vectors, int dimension,
                                 const FieldContextPtr& ctx) {
    for (const auto& v : vectors)
        if (static_cast<int>(v.size()) != dimension)
            throw DimensionMismatchError("additive subgroup generator");
    std::vector<Vec> gens;
    for (const auto& v : vectors)
        if (!vec_is_zero(v)) gens.push_back(v);

    AddClosure out;
    out.dimension = dimension;
    out.ctx = ctx;
    if (gens.empty()) {
        out.variant = AddClosure::Variant::Lattice;
        return out;
    }

    const int r = exact_rank(gens);
    const int s = rational_rank(gens, ctx);
    assert(s >= r);

    if (s == r) {
        // Discrete: rewrite every generator over r real-independent members;
        // the coordinates are forced rational, so HNF over a common
        // denominator yields a canonical lattice basis.
        auto idx = independent_subset(gens);
        assert(static_cast<int>(idx.size()) == r);
        std::vector<Vec> w;
        for (auto i : idx) w.push_back(gens[i]);
        std::vector<std::vector<Rational>> coords;
        Int den_lcm = 1;
        for (const auto& v : gens) {
            auto c = solve_in_span(w, v);
            assert(c.has_value());
            std::vector<Rational> row;
            for (const auto& x : *c) {
                if (!x.is_rational())
                    throw std::logic_error("equal ranks must force rational coordinates");
                row.push_back(x.rational_part());
                den_lcm = boost::multiprecision::lcm(den_lcm, denominator(row.back()));
            }
            coords.push_back(std::move(row));
        }
        IntMat mat;
        for (const auto& row : coords) {
            std::vector<Int> irow;
            for (const auto& q : row) irow.push_back(numerator(q) * (den_lcm / denominator(q)));
            mat.push_back(std::move(irow));
        }
        HnfResult hnf = hermite_normal_form(std::move(mat));
        assert(hnf.rank == r);
        out.variant = AddClosure::Variant::Lattice;
        for (const auto& row : hnf.rows) {
            Vec b = vec_zero(ctx, dimension);
            for (int j = 0; j < r; ++j) {
                if (row[j] == 0) continue;
                b = vec_add(b, vec_scale(FieldScalar(ctx, Rational(row[j], den_lcm)), w[j]));
            }
            out.basis.push_back(std::move(b));
        }
        return out;
    }

    if (r == 1) {
        Vec u = gens[0];
        // Scale so the first nonzero coordinate is 1.
        for (const auto& x : u) {
            if (x.is_zero()) continue;
            u = vec_scale(inverse(x), u);
            break;
        }
        out.variant = AddClosure::Variant::DenseLine;
        out.direction = std::move(u);
        return out;
    }

    out.variant = AddClosure::Variant::Unresolved;
    out.evidence = AddClosureEvidence{r, s, unresolved_note(gens)};
    return out;
}

bool add_member(const AddClosure& c, const Vec& v) {
    if (static_cast<int>(v.size()) != c.dimension)
        throw DimensionMismatchError("additive closure membership");
    switch (c.variant) {
        case AddClosure::Variant::Lattice: {
            if (c.basis.empty()) return vec_is_zero(v);
            auto coords = solve_in_span(c.basis, v);
            if (!coords) return false;
            for (const auto& x : *coords) {
                if (!x.is_rational()) return false;
                if (denominator(x.rational_part()) != 1) return false;
            }
            return true;
        }
        case AddClosure::Variant::DenseLine: {
            if (vec_is_zero(v)) return true;
            std::vector<Vec> pair{*c.direction, v};
            return exact_rank(pair) == 1;
        }
        default:
            throw UnresolvedClosureError("additive closure is " + add_variant_name(c.variant));
    }
}

}  // namespace homothety
