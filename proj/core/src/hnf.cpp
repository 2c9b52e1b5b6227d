#include "homothety/hnf.hpp"

#include <algorithm>
#include <stdexcept>

namespace homothety {

namespace {

// Floor division so remainders land in [0, |b|).
Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

HnfResult hermite_normal_form(IntMat a) {
    if (a.empty()) return {{}, 0};
    const std::size_t cols = a[0].size();
    for (const auto& row : a)
        if (row.size() != cols) throw std::invalid_argument("ragged integer matrix");
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < a.size(); ++col) {
        // Gcd elimination below row r within this column.
        while (true) {
            std::size_t best = a.size();
            for (std::size_t i = r; i < a.size(); ++i) {
                if (a[i][col] == 0) continue;
                if (best == a.size() ||
                    boost::multiprecision::abs(a[i][col]) < boost::multiprecision::abs(a[best][col]))
                    best = i;
            }
            if (best == a.size()) break;  // column clear
            std::swap(a[r], a[best]);
            bool clear = true;
            for (std::size_t i = r + 1; i < a.size(); ++i) {
                if (a[i][col] == 0) continue;
                Int q = floor_div(a[i][col], a[r][col]);
                for (std::size_t j = 0; j < cols; ++j) a[i][j] -= q * a[r][j];
                if (a[i][col] != 0) clear = false;
            }
            if (clear) break;
        }
        if (a[r][col] == 0) continue;
        if (a[r][col] < 0)
            for (auto& x : a[r]) x = -x;
        for (std::size_t i = 0; i < r; ++i) {
            Int q = floor_div(a[i][col], a[r][col]);
            if (q == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) a[i][j] -= q * a[r][j];
        }
        ++r;
    }
    a.resize(r);
    return {std::move(a), static_cast<int>(r)};
}

ExtGcd ext_gcd(long long a, long long b) {
    long long old_r = a, r = b;
    long long old_x = 1, x = 0;
    long long old_y = 0, y = 1;
    while (r != 0) {
        long long q = old_r / r;
        long long t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_x - q * x;
        old_x = x;
        x = t;
        t = old_y - q * y;
        old_y = y;
        y = t;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_x = -old_x;
        old_y = -old_y;
    }
    return {old_r, old_x, old_y};
}

}  // namespace homothety
