#include "homothety/rational.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace homothety {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::denominator;
using boost::multiprecision::msb;
using boost::multiprecision::numerator;

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e > 0) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic witness set for the full 64-bit range.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t pollard_rho(std::uint64_t n) {
    if ((n & 1) == 0) return 2;
    std::uint64_t c = 1;
    while (true) {
        std::uint64_t x = 2, y = 2, d = 1;
        while (d == 1) {
            x = mulmod_u64(x, x, n) + c;
            if (x >= n) x -= n;
            y = mulmod_u64(y, y, n) + c;
            if (y >= n) y -= n;
            y = mulmod_u64(y, y, n) + c;
            if (y >= n) y -= n;
            std::uint64_t diff = x > y ? x - y : y - x;
            d = std::gcd(diff, n);
        }
        if (d != n) return d;
        ++c;
    }
}

void factor_rec(std::uint64_t n, std::vector<std::uint64_t>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out.push_back(n);
        return;
    }
    std::uint64_t d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

double to_double(const Rational& q) {
    if (q == 0) return 0.0;
    Int num = numerator(q);
    Int den = denominator(q);
    const bool neg = num < 0;
    if (neg) num = -num;

    // Scale so the quotient carries 54 significant bits plus a sticky remainder.
    long shift = 54 - (static_cast<long>(msb(num)) - static_cast<long>(msb(den)));
    Int n = num, d = den;
    if (shift > 0)
        n <<= shift;
    else if (shift < 0)
        d <<= -shift;
    Int quo, rem;
    boost::multiprecision::divide_qr(n, d, quo, rem);
    while (msb(quo) < 53) {  // quotient came out one bit short
        n <<= 1;
        ++shift;
        boost::multiprecision::divide_qr(n, d, quo, rem);
    }
    while (msb(quo) > 54) {  // or one bit long
        bool lost = boost::multiprecision::bit_test(quo, 0) || rem != 0;
        quo >>= 1;
        --shift;
        if (lost) rem = 1;  // keep stickiness, the exact value no longer matters
    }
    // quo has 54 or 55 bits: mantissa + round bit.
    int extra = static_cast<int>(msb(quo)) - 52;  // 2 or 3 round bits? normally 2
    std::uint64_t bits = static_cast<std::uint64_t>(quo);
    bool sticky = rem != 0;
    std::uint64_t mant = bits >> extra;
    std::uint64_t dropped = bits & ((std::uint64_t(1) << extra) - 1);
    bool round_bit = (dropped >> (extra - 1)) & 1;
    bool lower_sticky = (dropped & ((std::uint64_t(1) << (extra - 1)) - 1)) != 0;
    sticky = sticky || lower_sticky;
    if (round_bit && (sticky || (mant & 1))) {
        ++mant;
        if (mant == (std::uint64_t(1) << 53)) {
            mant >>= 1;
            --shift;
        }
    }
    double r = std::ldexp(static_cast<double>(mant), static_cast<int>(-shift + extra));
    return neg ? -r : r;
}

bool fits_int64(const Int& v) {
    static const Int lo = Int(std::numeric_limits<std::int64_t>::min());
    static const Int hi = Int(std::numeric_limits<std::int64_t>::max());
    return v >= lo && v <= hi;
}

Int int_sqrt_floor(const Int& v) {
    if (v < 0) throw std::invalid_argument("int_sqrt_floor of negative value");
    return boost::multiprecision::sqrt(v);
}

bool is_perfect_square(const Int& v) {
    if (v < 0) return false;
    Int r = int_sqrt_floor(v);
    return r * r == v;
}

SquarefreeSplit squarefree_split(Int v) {
    if (v <= 0) throw std::invalid_argument("squarefree_split requires a positive value");
    if (!fits_int64(v)) throw std::invalid_argument("squarefree_split: value exceeds 64 bits");
    Int root = 1, kernel = 1;
    for (auto [p, e] : factor_u64(static_cast<std::uint64_t>(v))) {
        for (int i = 0; i + 1 < e; i += 2) root *= p;
        if (e % 2) kernel *= p;
    }
    return {root, kernel};
}

std::vector<std::pair<std::uint64_t, int>> factor_u64(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factor_u64(0)");
    std::vector<std::uint64_t> primes;
    std::uint64_t m = n;
    for (std::uint64_t p = 2; p <= 1000 && p * p <= m; p += (p == 2 ? 1 : 2)) {
        while (m % p == 0) {
            primes.push_back(p);
            m /= p;
        }
    }
    if (m > 1) factor_rec(m, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<std::uint64_t, int>> out;
    for (std::uint64_t p : primes) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.emplace_back(p, 1);
    }
    return out;
}

std::string rational_to_string(const Rational& q) {
    Int num = numerator(q);
    Int den = denominator(q);
    std::string s = num.str();
    if (den != 1) s += "/" + den.str();
    return s;
}

std::optional<Rational> rational_from_string(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            Int n(text);
            return Rational(n);
        }
        Int n(text.substr(0, slash));
        Int d(text.substr(slash + 1));
        if (d == 0) return std::nullopt;
        return Rational(n, d);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

}  // namespace homothety
