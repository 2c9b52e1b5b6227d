#include "homothety/linalg.hpp"

#include <cassert>

namespace homothety {

Vec vec_zero(const FieldContextPtr& ctx, int n) {
    return Vec(n, FieldScalar::zero(ctx));
}

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatchError("vector addition");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatchError("vector subtraction");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec vec_scale(const FieldScalar& s, const Vec& a) {
    Vec r = a;
    for (auto& x : r) x *= s;
    return r;
}

Vec vec_neg(const Vec& a) {
    Vec r = a;
    for (auto& x : r) x = -x;
    return r;
}

bool vec_is_zero(const Vec& a) {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

bool vec_eq(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return false;
    return true;
}

int vec_cmp(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        int c = FieldScalar::cmp(a[i], b[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::string vec_str(const Vec& a) {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += ", ";
        s += a[i].str();
    }
    return s + ")";
}

std::vector<double> vec_to_double(const Vec& a) {
    std::vector<double> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i].to_double();
    return r;
}

namespace {

// Row echelon form in place; returns pivot column per row.
std::vector<std::size_t> eliminate(std::vector<Vec>& rows) {
    std::vector<std::size_t> pivots;
    if (rows.empty()) return pivots;
    const std::size_t width = rows[0].size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < width && r < rows.size(); ++col) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        FieldScalar inv_p = inverse(rows[r][col]);
        for (auto& x : rows[r]) x *= inv_p;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col].is_zero()) continue;
            FieldScalar f = rows[i][col];
            for (std::size_t j = 0; j < width; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

}  // namespace

int exact_rank(const std::vector<Vec>& vectors) {
    std::vector<Vec> rows = vectors;
    return static_cast<int>(eliminate(rows).size());
}

std::vector<std::size_t> independent_subset(const std::vector<Vec>& vectors) {
    std::vector<std::size_t> chosen;
    std::vector<Vec> acc;
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (vec_is_zero(vectors[i])) continue;
        acc.push_back(vectors[i]);
        if (exact_rank(acc) == static_cast<int>(acc.size()))
            chosen.push_back(i);
        else
            acc.pop_back();
    }
    return chosen;
}

std::optional<std::vector<FieldScalar>> solve_in_span(const std::vector<Vec>& basis,
                                                      const Vec& target) {
    if (basis.empty()) {
        if (vec_is_zero(target)) return std::vector<FieldScalar>{};
        return std::nullopt;
    }
    const auto& ctx = target.empty() ? basis[0][0].context() : target[0].context();
    const std::size_t n = target.size();
    const std::size_t m = basis.size();
    // Augmented system: columns are basis vectors, last column the target.
    std::vector<Vec> rows(n);
    for (std::size_t i = 0; i < n; ++i) {
        rows[i].reserve(m + 1);
        for (std::size_t j = 0; j < m; ++j) rows[i].push_back(basis[j][i]);
        rows[i].push_back(target[i]);
    }
    auto pivots = eliminate(rows);
    std::vector<FieldScalar> c(m, FieldScalar::zero(ctx));
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == m) return std::nullopt;  // inconsistent: pivot in target column
        c[pivots[r]] = rows[r][m];
    }
    return c;
}

}  // namespace homothety
