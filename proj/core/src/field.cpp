#include "homothety/field.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <cmath>

namespace homothety {

namespace {

bool is_squarefree(std::int64_t v) {
    if (v < 2) return false;
    auto fac = factor_u64(static_cast<std::uint64_t>(v));
    return std::all_of(fac.begin(), fac.end(), [](auto pe) { return pe.second == 1; });
}

}  // namespace

FieldContext::FieldContext(std::vector<std::int64_t> radicands)
    : radicands_(std::move(radicands)) {
    const int k = radicand_count();
    const int m = monomial_count();
    products_.resize(m);
    for (int mask = 0; mask < m; ++mask) {
        Int p = 1;
        for (int i = 0; i < k; ++i)
            if (mask & (1 << i)) p *= radicands_[i];
        products_[mask] = p;
    }
    factors_.resize(m * m);
    for (int s = 0; s < m; ++s)
        for (int t = 0; t < m; ++t) factors_[s * m + t] = products_[s & t];
    for (int mask = 0; mask < m; ++mask) {
        auto split = squarefree_split(products_[mask]);
        kernels_.emplace_back(split.kernel, std::make_pair(mask, split.root));
    }
    std::sort(kernels_.begin(), kernels_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
}

FieldContextPtr FieldContext::create(std::vector<std::int64_t> radicands) {
    if (radicands.size() > 3)
        throw SemanticError("at most 3 radicands are supported");
    for (std::size_t i = 0; i < radicands.size(); ++i) {
        if (radicands[i] < 2)
            throw SemanticError("radicands must be >= 2");
        if (!is_squarefree(radicands[i]))
            throw SemanticError("radicand " + std::to_string(radicands[i]) + " is not squarefree");
        if (i > 0 && radicands[i] <= radicands[i - 1])
            throw SemanticError("radicands must be strictly increasing");
    }
    // Monomial independence: no nonempty subset product may be a square.
    const int m = 1 << radicands.size();
    for (int mask = 1; mask < m; ++mask) {
        Int p = 1;
        for (std::size_t i = 0; i < radicands.size(); ++i)
            if (mask & (1 << i)) p *= radicands[i];
        if (is_perfect_square(p))
            throw SemanticError("radicands are multiplicatively dependent (subset product is a square)");
    }
    return FieldContextPtr(new FieldContext(std::move(radicands)));
}

FieldContextPtr FieldContext::rationals() {
    static FieldContextPtr instance(new FieldContext({}));
    return instance;
}

std::optional<std::pair<int, Int>> FieldContext::mask_for_kernel(const Int& kernel) const {
    auto it = std::lower_bound(kernels_.begin(), kernels_.end(), kernel,
                               [](const auto& a, const Int& k) { return a.first < k; });
    if (it == kernels_.end() || it->first != kernel) return std::nullopt;
    return it->second;
}

FieldScalar::FieldScalar(FieldContextPtr ctx, Rational rational_value)
    : ctx_(std::move(ctx)), c_(ctx_->monomial_count(), Rational(0)) {
    c_[0] = std::move(rational_value);
}

FieldScalar FieldScalar::zero(const FieldContextPtr& ctx) { return FieldScalar(ctx, Rational(0)); }
FieldScalar FieldScalar::one(const FieldContextPtr& ctx) { return FieldScalar(ctx, Rational(1)); }

FieldScalar FieldScalar::from_coeffs(FieldContextPtr ctx, std::vector<Rational> coeffs) {
    if (static_cast<int>(coeffs.size()) != ctx->monomial_count())
        throw SemanticError("coefficient vector size does not match the monomial basis");
    FieldScalar s(std::move(ctx), Rational(0));
    s.c_ = std::move(coeffs);
    return s;
}

bool FieldScalar::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
}

bool FieldScalar::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

void FieldScalar::check_context(const FieldScalar& o) const {
    if (ctx_ != o.ctx_ && !ctx_->same(*o.ctx_)) throw ContextMismatchError();
}

FieldScalar& FieldScalar::operator+=(const FieldScalar& o) {
    check_context(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

FieldScalar& FieldScalar::operator-=(const FieldScalar& o) {
    check_context(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

FieldScalar& FieldScalar::operator*=(const FieldScalar& o) {
    check_context(o);
    const int m = ctx_->monomial_count();
    std::vector<Rational> out(m, Rational(0));
    for (int s = 0; s < m; ++s) {
        if (c_[s] == 0) continue;
        for (int t = 0; t < m; ++t) {
            if (o.c_[t] == 0) continue;
            out[s ^ t] += c_[s] * o.c_[t] * Rational(ctx_->product_factor(s, t));
        }
    }
    c_ = std::move(out);
    return *this;
}

FieldScalar& FieldScalar::operator*=(const Rational& q) {
    for (auto& x : c_) x *= q;
    return *this;
}

FieldScalar FieldScalar::operator-() const {
    FieldScalar r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

bool operator==(const FieldScalar& a, const FieldScalar& b) {
    a.check_context(b);
    return a.c_ == b.c_;
}

int FieldScalar::cmp(const FieldScalar& a, const FieldScalar& b) {
    a.check_context(b);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] < b.c_[i]) return -1;
        if (a.c_[i] > b.c_[i]) return 1;
    }
    return 0;
}

namespace {

struct QInterval {
    Rational lo, hi;
};

QInterval sqrt_interval(std::int64_t d, int rounds) {
    Int base = int_sqrt_floor(Int(d));
    QInterval iv{Rational(base), Rational(base + 1)};
    for (int i = 0; i < rounds; ++i) {
        Rational mid = (iv.lo + iv.hi) / 2;
        if (mid * mid <= d)
            iv.lo = mid;
        else
            iv.hi = mid;
    }
    return iv;
}

QInterval scale_interval(const Rational& q, const QInterval& iv) {
    if (q >= 0) return {q * iv.lo, q * iv.hi};
    return {q * iv.hi, q * iv.lo};
}

}  // namespace

int FieldScalar::sign() const {
    if (is_zero()) return 0;
    if (is_rational()) return c_[0] > 0 ? 1 : -1;
    const int k = ctx_->radicand_count();
    const int m = ctx_->monomial_count();
    for (int rounds = 8;; rounds *= 2) {
        std::vector<QInterval> roots;
        roots.reserve(k);
        for (int i = 0; i < k; ++i) roots.push_back(sqrt_interval(ctx_->radicands()[i], rounds));
        QInterval total{Rational(0), Rational(0)};
        for (int mask = 0; mask < m; ++mask) {
            if (c_[mask] == 0) continue;
            QInterval mono{Rational(1), Rational(1)};
            for (int i = 0; i < k; ++i) {
                if (!(mask & (1 << i))) continue;
                mono.lo *= roots[i].lo;  // all factors positive
                mono.hi *= roots[i].hi;
            }
            QInterval term = scale_interval(c_[mask], mono);
            total.lo += term.lo;
            total.hi += term.hi;
        }
        if (total.lo > 0) return 1;
        if (total.hi < 0) return -1;
        if (rounds > (1 << 20))
            throw std::logic_error("sign refinement failed to separate a nonzero value from 0");
    }
}

double FieldScalar::to_double() const {
    double acc = 0.0;
    const int m = ctx_->monomial_count();
    for (int mask = 0; mask < m; ++mask) {
        if (c_[mask] == 0) continue;
        double term = homothety::to_double(c_[mask]);
        if (mask != 0) term *= std::sqrt(homothety::to_double(Rational(ctx_->monomial_product(mask))));
        acc += term;
    }
    return acc;
}

std::string FieldScalar::str() const {
    const int m = ctx_->monomial_count();
    std::string out;
    for (int mask = 0; mask < m; ++mask) {
        const Rational& q = c_[mask];
        if (q == 0) continue;
        const bool neg = q < 0;
        Rational mag = neg ? Rational(-q) : q;
        std::string body;
        if (mask == 0) {
            body = rational_to_string(mag);
        } else {
            std::string root = "sqrt" + ctx_->monomial_product(mask).str();
            body = (mag == 1) ? root : rational_to_string(mag) + "*" + root;
        }
        if (out.empty())
            out = (neg ? "-" : "") + body;
        else
            out += (neg ? " - " : " + ") + body;
    }
    return out.empty() ? "0" : out;
}

FieldScalar inverse(const FieldScalar& a) {
    if (a.is_zero()) throw DivisionByZeroError();
    const auto& ctx = a.context();
    const int k = ctx->radicand_count();
    const int m = ctx->monomial_count();
    auto conj = [&](const FieldScalar& x, int bit) {
        std::vector<Rational> c = x.coeffs();
        for (int mask = 0; mask < m; ++mask)
            if (mask & (1 << bit)) c[mask] = -c[mask];
        return FieldScalar::from_coeffs(ctx, std::move(c));
    };
    FieldScalar num = FieldScalar::one(ctx);
    FieldScalar den = a;
    for (int i = 0; i < k; ++i) {
        FieldScalar c = conj(den, i);
        num *= c;
        den *= c;
    }
    assert(den.is_rational() && den.rational_part() != 0);
    num *= Rational(1) / den.rational_part();
    return num;
}

FieldScalar& FieldScalar::operator/=(const FieldScalar& o) {
    *this *= inverse(o);
    return *this;
}

FieldScalar field_pow(const FieldScalar& a, long long n) {
    const auto& ctx = a.context();
    if (n == 0) return FieldScalar::one(ctx);
    FieldScalar base = n > 0 ? a : inverse(a);
    unsigned long long e = n > 0 ? static_cast<unsigned long long>(n)
                                 : static_cast<unsigned long long>(-(n + 1)) + 1;
    FieldScalar acc = FieldScalar::one(ctx);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

namespace {

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool peek_digit() {
        skip_ws();
        return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
    }
    bool eat_sqrt() {
        skip_ws();
        if (s.compare(pos, 4, "sqrt") == 0) {
            pos += 4;
            return true;
        }
        return false;
    }
    Int integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ParseError("expected integer at position " + std::to_string(start) + " in scalar literal '" + s + "'");
        return Int(s.substr(start, pos - start));
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
};

// sqrt N with N = m^2 * kernel contributes m/c on the monomial whose product
// reduces to the same kernel.
void add_root(std::vector<Rational>& coeffs, const Rational& coeff, const Int& n,
              const FieldContextPtr& ctx) {
    if (n < 1) throw SemanticError("radicand must be positive");
    auto split = squarefree_split(n);
    if (split.kernel == 1) {
        coeffs[0] += coeff * Rational(split.root);
        return;
    }
    auto hit = ctx->mask_for_kernel(split.kernel);
    if (!hit)
        throw SemanticError("unknown radicand sqrt" + n.str() + " for this field context");
    coeffs[hit->first] += coeff * Rational(split.root, hit->second);
}

}  // namespace

FieldScalar parse_scalar(const std::string& text, const FieldContextPtr& ctx) {
    Lexer lx{text};
    std::vector<Rational> coeffs(ctx->monomial_count(), Rational(0));
    bool first = true;
    bool negate = false;
    if (lx.eat('-')) negate = true;
    while (true) {
        Rational sign = negate ? Rational(-1) : Rational(1);
        if (lx.eat_sqrt()) {
            add_root(coeffs, sign, lx.integer(), ctx);
        } else if (lx.peek_digit()) {
            Int num = lx.integer();
            Rational value(num);
            if (lx.eat('/')) {
                Int den = lx.integer();
                if (den == 0) throw SemanticError("zero denominator in scalar literal");
                value = Rational(num, den);
            }
            if (lx.eat('*')) {
                if (!lx.eat_sqrt()) throw ParseError("expected sqrt after '*' in scalar literal '" + text + "'");
                add_root(coeffs, sign * value, lx.integer(), ctx);
            } else {
                coeffs[0] += sign * value;
            }
        } else {
            throw ParseError("expected term in scalar literal '" + text + "'");
        }
        first = false;
        if (lx.done()) break;
        if (lx.eat('+'))
            negate = false;
        else if (lx.eat('-'))
            negate = true;
        else
            throw ParseError("unexpected character at position " + std::to_string(lx.pos) +
                             " in scalar literal '" + text + "'");
    }
    (void)first;
    return FieldScalar::from_coeffs(ctx, std::move(coeffs));
}

}  // namespace homothety
