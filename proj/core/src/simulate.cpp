#include "homothety/simulate.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <thread>
#include <unordered_map>

namespace homothety {

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::bounded(std::uint64_t n) {
    // Lemire multiply-shift with rejection; exact uniformity keeps runs
    // reproducible across platforms.
    while (true) {
        std::uint64_t x = next();
        unsigned __int128 m = static_cast<unsigned __int128>(x) * n;
        std::uint64_t lo = static_cast<std::uint64_t>(m);
        if (lo < n) {
            std::uint64_t threshold = (0 - n) % n;
            if (lo < threshold) continue;
        }
        return static_cast<std::uint64_t>(m >> 64);
    }
}

int env_stream_count() {
    const char* v = std::getenv("HOMOTHETY_THREADS");
    if (!v) return 1;
    int n = std::atoi(v);
    return std::clamp(n, 1, 64);
}

namespace {

struct FloatMap {
    double ratio;
    std::vector<double> b;
};

std::vector<FloatMap> float_steps(const GroupSpec& spec) {
    std::vector<FloatMap> steps;
    for (const auto& g : spec.generators) {
        steps.push_back({g.ratio().to_double(), vec_to_double(g.translation())});
        AffineMap inv = g.inverse();
        steps.push_back({inv.ratio().to_double(), vec_to_double(inv.translation())});
    }
    return steps;
}

void run_stream(const GroupSpec& spec, const SampleConfig& cfg,
                const std::vector<FloatMap>& steps, std::uint64_t stream_seed, int trials,
                std::vector<std::vector<double>>& out, std::size_t& discarded) {
    SplitMix64 rng{stream_seed};
    const int n = spec.dimension;
    std::vector<double> y(n);
    for (int t = 0; t < trials; ++t) {
        int len = 1 + static_cast<int>(rng.bounded(cfg.max_word_len));
        std::copy(cfg.point.begin(), cfg.point.end(), y.begin());
        for (int s = 0; s < len; ++s) {
            const FloatMap& m = steps[rng.bounded(steps.size())];
            for (int i = 0; i < n; ++i) y[i] = m.ratio * y[i] + m.b[i];
        }
        bool keep = true;
        for (double v : y)
            if (!std::isfinite(v) || std::abs(v) > cfg.window) {
                keep = false;
                break;
            }
        if (keep)
            out.push_back(y);
        else
            ++discarded;
    }
}

}  // namespace

SampleResult sample_orbit(const GroupSpec& spec, const SampleConfig& cfg) {
    spec.validate();
    if (static_cast<int>(cfg.point.size()) != spec.dimension)
        throw DimensionMismatchError("sample base point");
    if (cfg.num_words < 1 || cfg.max_word_len < 1 || cfg.window <= 0)
        throw SemanticError("sampling needs num_words >= 1, max_word_len >= 1, window > 0");
    auto steps = float_steps(spec);

    const int streams = std::max(1, cfg.streams);
    std::vector<std::vector<std::vector<double>>> buffers(streams);
    std::vector<std::size_t> dropped(streams, 0);
    auto stream_seed = [&](int t) {
        SplitMix64 mix{cfg.seed ^ (0xA0761D6478BD642Full * static_cast<std::uint64_t>(t + 1))};
        return mix.next();
    };
    auto trials_of = [&](int t) {
        int base = cfg.num_words / streams;
        return base + (t < cfg.num_words % streams ? 1 : 0);
    };

    if (streams == 1) {
        run_stream(spec, cfg, steps, stream_seed(0), cfg.num_words, buffers[0], dropped[0]);
    } else {
        std::vector<std::thread> workers;
        workers.reserve(streams);
        for (int t = 0; t < streams; ++t)
            workers.emplace_back([&, t] {
                run_stream(spec, cfg, steps, stream_seed(t), trials_of(t), buffers[t], dropped[t]);
            });
        for (auto& w : workers) w.join();
    }

    SampleResult result;
    for (int t = 0; t < streams; ++t) {
        result.discarded += dropped[t];
        result.points.insert(result.points.end(), buffers[t].begin(), buffers[t].end());
    }
    return result;
}

namespace {

using DVec = std::vector<double>;

double dot(const DVec& a, const DVec& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm(const DVec& a) { return std::sqrt(dot(a, a)); }

DVec sub(const DVec& a, const DVec& b) {
    DVec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

DVec add_scaled(DVec a, double t, const DVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += t * b[i];
    return a;
}

// Gram-Schmidt; independence is guaranteed by the exact layer.
std::vector<DVec> orthonormal(const std::vector<DVec>& dirs) {
    std::vector<DVec> onb;
    for (DVec v : dirs) {
        for (const auto& u : onb) v = add_scaled(std::move(v), -dot(v, u), u);
        double n = norm(v);
        if (n > 1e-12) {
            for (auto& x : v) x /= n;
            onb.push_back(std::move(v));
        }
    }
    return onb;
}

double dist_affine(const DVec& p, const DVec& base, const std::vector<DVec>& onb) {
    DVec v = sub(p, base);
    for (const auto& u : onb) v = add_scaled(std::move(v), -dot(v, u), u);
    return norm(v);
}

std::vector<DVec> invert_spd(std::vector<DVec> m) {
    const std::size_t n = m.size();
    std::vector<DVec> inv(n, DVec(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1.0;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::abs(m[r][c]) > std::abs(m[p][c])) p = r;
        std::swap(m[c], m[p]);
        std::swap(inv[c], inv[p]);
        double d = m[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            m[c][j] /= d;
            inv[c][j] /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c) continue;
            double f = m[r][c];
            if (f == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                m[r][j] -= f * m[c][j];
                inv[r][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

struct LatticeView {
    DVec offset;
    std::vector<DVec> basis;
    std::vector<DVec> gram_inv;  // (B^T B)^{-1}, for coordinate solves
};

LatticeView lattice_view(const AddClosure& h, DVec offset) {
    LatticeView lv;
    lv.offset = std::move(offset);
    for (const auto& b : h.basis) lv.basis.push_back(vec_to_double(b));
    const std::size_t r = lv.basis.size();
    if (r > 0) {
        std::vector<DVec> gram(r, DVec(r, 0.0));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) gram[i][j] = dot(lv.basis[i], lv.basis[j]);
        lv.gram_inv = invert_spd(std::move(gram));
    }
    return lv;
}

DVec lattice_coords(const LatticeView& lv, const DVec& p) {
    const std::size_t r = lv.basis.size();
    DVec v = sub(p, lv.offset);
    DVec rhs(r, 0.0);
    for (std::size_t i = 0; i < r; ++i) rhs[i] = dot(lv.basis[i], v);
    DVec c(r, 0.0);
    for (std::size_t i = 0; i < r; ++i) c[i] = dot(lv.gram_inv[i], rhs);
    return c;
}

double dist_lattice(const LatticeView& lv, const DVec& p) {
    const std::size_t r = lv.basis.size();
    if (r == 0) return norm(sub(p, lv.offset));
    DVec c = lattice_coords(lv, p);
    std::vector<long long> center(r);
    for (std::size_t i = 0; i < r; ++i) center[i] = llround(c[i]);
    // Rounded coordinates plus a unit-box search absorb basis skew.
    double best = std::numeric_limits<double>::infinity();
    std::vector<int> delta(r, -1);
    while (true) {
        DVec q = lv.offset;
        for (std::size_t i = 0; i < r; ++i)
            q = add_scaled(std::move(q), static_cast<double>(center[i] + delta[i]), lv.basis[i]);
        best = std::min(best, norm(sub(p, q)));
        std::size_t pos = 0;
        while (pos < r && delta[pos] == 1) delta[pos++] = -1;
        if (pos == r) break;
        ++delta[pos];
    }
    return best;
}

double dist_line(const DVec& p, const DVec& offset, const DVec& unit) {
    DVec v = sub(p, offset);
    return norm(add_scaled(std::move(v), -dot(v, unit), unit));
}

struct CosetView {
    bool is_line = false;
    LatticeView lattice;
    DVec offset;
    DVec unit;
};

CosetView coset_view(const AddClosure& h, DVec offset) {
    CosetView cv;
    if (h.variant == AddClosure::Variant::DenseLine) {
        cv.is_line = true;
        cv.offset = std::move(offset);
        cv.unit = vec_to_double(*h.direction);
        double n = norm(cv.unit);
        for (auto& x : cv.unit) x /= n;
    } else {
        cv.lattice = lattice_view(h, std::move(offset));
    }
    return cv;
}

double dist_coset(const CosetView& cv, const DVec& p) {
    if (cv.is_line) return dist_line(p, cv.offset, cv.unit);
    return dist_lattice(cv.lattice, p);
}

// Feasible slice parameters t for a scaled family: 0 plus +-rho^k within
// reach; exponents below float resolution collapse into the t = 0 slice.
std::vector<double> slice_params(const MulClosure& mc, double dir_perp_len, double reach) {
    std::vector<double> ts{0.0};
    const double rho = to_double(*mc.rho);
    const double tmax = (reach + 1.0) / std::max(dir_perp_len, 1e-300);
    int k_hi = static_cast<int>(std::ceil(std::log(tmax) / std::log(rho)));
    int k_lo = static_cast<int>(std::floor(std::log(1e-18) / std::log(rho)));
    for (int k = k_lo; k <= k_hi; ++k) {
        double t = std::pow(rho, k);
        switch (mc.variant) {
            case MulClosure::Variant::CyclicPos:
                ts.push_back(t);
                break;
            case MulClosure::Variant::CyclicWithSign:
                ts.push_back(t);
                ts.push_back(-t);
                break;
            case MulClosure::Variant::CyclicTwisted:
                ts.push_back((k % 2 + 2) % 2 == 0 ? t : -t);
                break;
            default:
                break;
        }
    }
    return ts;
}

struct ScaledView {
    DVec base;
    DVec dir;
    std::vector<DVec> hull_onb;
    std::vector<DVec> span_onb;  // hull directions plus dir
    double dir_perp_len = 0;
    bool dense = false;
    bool positive_only = false;
    std::vector<double> slice_ts;  // cyclic case
};

ScaledView scaled_view(const ScaledFamilyDesc& d, double reach) {
    ScaledView sv;
    sv.base = vec_to_double(d.base);
    sv.dir = vec_to_double(d.direction);
    std::vector<DVec> dirs;
    for (const auto& v : d.hull.directions) dirs.push_back(vec_to_double(v));
    sv.hull_onb = orthonormal(dirs);
    DVec perp = sv.dir;
    for (const auto& u : sv.hull_onb) perp = add_scaled(std::move(perp), -dot(perp, u), u);
    sv.dir_perp_len = norm(perp);
    dirs.push_back(sv.dir);
    sv.span_onb = orthonormal(dirs);
    switch (d.ratio_closure.variant) {
        case MulClosure::Variant::DenseAll:
            sv.dense = true;
            break;
        case MulClosure::Variant::DensePos:
            sv.dense = true;
            sv.positive_only = true;
            break;
        default:
            sv.slice_ts = slice_params(d.ratio_closure, sv.dir_perp_len, reach);
            break;
    }
    return sv;
}

// Signed coordinate of p along the hull-orthogonal part of dir, in units of
// t (so the slice t*dir + hull sits at coordinate t).
double slice_coordinate(const ScaledView& sv, const DVec& p) {
    DVec v = sub(p, sv.base);
    for (const auto& u : sv.hull_onb) v = add_scaled(std::move(v), -dot(v, u), u);
    DVec unit_perp = sv.dir;
    for (const auto& u : sv.hull_onb)
        unit_perp = add_scaled(std::move(unit_perp), -dot(unit_perp, u), u);
    for (auto& x : unit_perp) x /= sv.dir_perp_len;
    return dot(v, unit_perp) / sv.dir_perp_len;
}

double dist_scaled(const ScaledView& sv, const DVec& p) {
    if (sv.dense) {
        double d_span = dist_affine(p, sv.base, sv.span_onb);
        if (!sv.positive_only) return d_span;
        if (slice_coordinate(sv, p) >= 0) return d_span;
        return dist_affine(p, sv.base, sv.hull_onb);  // boundary slice t = 0
    }
    double best = std::numeric_limits<double>::infinity();
    for (double t : sv.slice_ts) {
        DVec base_t = add_scaled(sv.base, t, sv.dir);
        best = std::min(best, dist_affine(p, base_t, sv.hull_onb));
    }
    return best;
}

double sample_reach(const std::vector<DVec>& samples, const DVec& center) {
    double r = 0;
    for (const auto& p : samples) r = std::max(r, norm(sub(p, center)));
    return r;
}

}  // namespace

double deviation_from_prediction(const std::vector<std::vector<double>>& samples,
                                 const OrbitClosureDescription& desc) {
    if (samples.empty()) return 0.0;
    double worst = 0.0;
    if (const auto* a = std::get_if<AffineSetDesc>(&desc)) {
        DVec base = vec_to_double(a->hull.base);
        std::vector<DVec> dirs;
        for (const auto& v : a->hull.directions) dirs.push_back(vec_to_double(v));
        auto onb = orthonormal(dirs);
        for (const auto& p : samples) worst = std::max(worst, dist_affine(p, base, onb));
        return worst;
    }
    if (const auto* sf = std::get_if<ScaledFamilyDesc>(&desc)) {
        DVec base = vec_to_double(sf->base);
        ScaledView sv = scaled_view(*sf, sample_reach(samples, base));
        for (const auto& p : samples) worst = std::max(worst, dist_scaled(sv, p));
        return worst;
    }
    const auto& cp = std::get<CosetPairDesc>(desc);
    if (!cp.translation_closure.resolved())
        throw UnresolvedClosureError("deviation needs a resolved translation closure");
    CosetView first = coset_view(cp.translation_closure, vec_to_double(cp.x));
    CosetView second = coset_view(
        cp.translation_closure,
        vec_to_double(vec_sub(cp.base, cp.x)));
    for (const auto& p : samples)
        worst = std::max(worst, std::min(dist_coset(first, p), dist_coset(second, p)));
    return worst;
}

namespace {

bool inside_window(const DVec& p, double window) {
    for (double v : p)
        if (std::abs(v) > window + 1e-9) return false;
    return true;
}

// Grid over an affine piece clipped to the window.
void affine_probes(const DVec& base, const std::vector<DVec>& onb, double window, double step,
                   std::vector<DVec>& out) {
    const std::size_t p = onb.size();
    if (p == 0) {
        if (inside_window(base, window)) out.push_back(base);
        return;
    }
    const double reach = window * std::sqrt(static_cast<double>(base.size())) + norm(base);
    const long long range = static_cast<long long>(std::ceil(reach / step));
    std::vector<long long> idx(p, -range);
    while (true) {
        DVec q = base;
        for (std::size_t i = 0; i < p; ++i)
            q = add_scaled(std::move(q), static_cast<double>(idx[i]) * step, onb[i]);
        if (inside_window(q, window)) out.push_back(q);
        std::size_t pos = 0;
        while (pos < p && idx[pos] == range) idx[pos++] = -range;
        if (pos == p) break;
        ++idx[pos];
    }
}

void lattice_probes(const LatticeView& lv, double window, std::vector<DVec>& out) {
    const std::size_t r = lv.basis.size();
    if (r == 0) {
        if (inside_window(lv.offset, window)) out.push_back(lv.offset);
        return;
    }
    const double reach =
        window * std::sqrt(static_cast<double>(lv.offset.size())) + norm(lv.offset) + 1.0;
    // |c_i| <= ||row_i of pseudo-inverse|| * reach bounds the coordinates of
    // any lattice point inside the window.
    std::vector<long long> bound(r);
    for (std::size_t i = 0; i < r; ++i) {
        DVec row(lv.offset.size(), 0.0);
        for (std::size_t j = 0; j < r; ++j)
            row = add_scaled(std::move(row), lv.gram_inv[i][j], lv.basis[j]);
        bound[i] = static_cast<long long>(std::ceil(norm(row) * reach)) + 1;
    }
    std::vector<long long> idx(r);
    for (std::size_t i = 0; i < r; ++i) idx[i] = -bound[i];
    while (true) {
        DVec q = lv.offset;
        for (std::size_t i = 0; i < r; ++i)
            q = add_scaled(std::move(q), static_cast<double>(idx[i]), lv.basis[i]);
        if (inside_window(q, window)) out.push_back(q);
        std::size_t pos = 0;
        while (pos < r && idx[pos] == bound[pos]) idx[pos++] = -bound[pos];
        if (pos == r) break;
        ++idx[pos];
    }
}

void coset_probes(const CosetView& cv, double window, double step, std::vector<DVec>& out) {
    if (cv.is_line) {
        affine_probes(cv.offset, {cv.unit}, window, step, out);
        return;
    }
    lattice_probes(cv.lattice, window, out);
}

struct SampleGrid {
    double cell;
    std::unordered_map<std::uint64_t, std::vector<const DVec*>> cells;

    static std::uint64_t key(const DVec& p, double cell) {
        std::uint64_t h = 1469598103934665603ull;
        for (double v : p) {
            auto q = static_cast<std::int64_t>(std::floor(v / cell));
            h ^= static_cast<std::uint64_t>(q) + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
        }
        return h;
    }

    SampleGrid(const std::vector<DVec>& samples, double eps) : cell(eps) {
        for (const auto& p : samples) cells[key(p, cell)].push_back(&p);
    }

    bool has_within(const DVec& probe, double eps) const {
        const std::size_t n = probe.size();
        std::vector<int> delta(n, -1);
        DVec shifted(n);
        while (true) {
            for (std::size_t i = 0; i < n; ++i) shifted[i] = probe[i] + delta[i] * cell;
            auto it = cells.find(key(shifted, cell));
            if (it != cells.end()) {
                for (const DVec* s : it->second)
                    if (norm(sub(*s, probe)) <= eps) return true;
            }
            std::size_t pos = 0;
            while (pos < n && delta[pos] == 1) delta[pos++] = -1;
            if (pos == n) break;
            ++delta[pos];
        }
        return false;
    }
};

}  // namespace

CoverageResult coverage_of_prediction(const std::vector<std::vector<double>>& samples,
                                      const OrbitClosureDescription& desc, double window,
                                      double step, double eps) {
    std::vector<DVec> probes;
    if (const auto* a = std::get_if<AffineSetDesc>(&desc)) {
        DVec base = vec_to_double(a->hull.base);
        std::vector<DVec> dirs;
        for (const auto& v : a->hull.directions) dirs.push_back(vec_to_double(v));
        affine_probes(base, orthonormal(dirs), window, step, probes);
    } else if (const auto* sf = std::get_if<ScaledFamilyDesc>(&desc)) {
        const double reach =
            window * std::sqrt(static_cast<double>(sf->base.size())) + norm(vec_to_double(sf->base));
        ScaledView sv = scaled_view(*sf, reach);
        if (sv.dense) {
            std::vector<DVec> all;
            affine_probes(sv.base, sv.span_onb, window, step, all);
            for (auto& q : all)
                if (!sv.positive_only || slice_coordinate(sv, q) >= -1e-9)
                    probes.push_back(std::move(q));
        } else {
            for (double t : sv.slice_ts) {
                // Slices closer together than the grid step collapse onto the
                // t = 0 slice for probing purposes.
                if (t != 0.0 && std::abs(t) * sv.dir_perp_len < step / 4) continue;
                DVec base_t = add_scaled(sv.base, t, sv.dir);
                affine_probes(base_t, sv.hull_onb, window, step, probes);
            }
        }
    } else {
        const auto& cp = std::get<CosetPairDesc>(desc);
        if (!cp.translation_closure.resolved())
            throw UnresolvedClosureError("coverage needs a resolved translation closure");
        coset_probes(coset_view(cp.translation_closure, vec_to_double(cp.x)), window, step, probes);
        coset_probes(coset_view(cp.translation_closure, vec_to_double(vec_sub(cp.base, cp.x))),
                     window, step, probes);
    }

    CoverageResult result;
    result.probes = probes.size();
    if (probes.empty()) return result;
    std::vector<DVec> sample_vecs(samples.begin(), samples.end());
    SampleGrid grid(sample_vecs, eps);
    std::size_t hit = 0;
    for (const auto& q : probes)
        if (grid.has_within(q, eps)) ++hit;
    result.coverage = static_cast<double>(hit) / static_cast<double>(probes.size());
    return result;
}

bool power_residue_dense(double lambda, int p_min, int p_max, long long q_cap, double lo,
                         double hi, double eps) {
    if (!(lambda > 1.0) || eps <= 0 || q_cap < 1 || p_min > p_max) return false;
    const double maxabs = std::max(std::abs(lo), std::abs(hi)) + eps;
    constexpr std::size_t budget = 50'000'000;
    std::vector<double> values;
    values.push_back(0.0);
    for (int p = p_min; p <= p_max; ++p) {
        if (p == 0) continue;
        const double base = std::pow(lambda, p) * (1.0 - std::pow(lambda, p));
        if (base == 0.0 || !std::isfinite(base)) continue;
        long long need = static_cast<long long>(std::floor(maxabs / std::abs(base))) + 1;
        long long qmax = std::min(q_cap, need);
        if (values.size() + static_cast<std::size_t>(2 * qmax + 1) > budget) return false;
        for (long long q = -qmax; q <= qmax; ++q) values.push_back(q * base);
    }
    std::sort(values.begin(), values.end());
    const long long steps = static_cast<long long>(std::floor((hi - lo) / eps + 1e-9));
    for (long long i = 0; i <= steps; ++i) {
        double g = lo + i * eps;
        auto it = std::lower_bound(values.begin(), values.end(), g);
        double best = std::numeric_limits<double>::infinity();
        if (it != values.end()) best = std::min(best, std::abs(*it - g));
        if (it != values.begin()) best = std::min(best, std::abs(*(it - 1) - g));
        if (best > eps) return false;
    }
    return true;
}

void write_csv(std::ostream& os, const std::vector<std::vector<double>>& points, int dimension) {
    for (int i = 0; i < dimension; ++i) os << (i ? "," : "") << "x" << (i + 1);
    os << "\n";
    char buf[64];
    for (const auto& p : points) {
        for (int i = 0; i < dimension; ++i) {
            auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), p[i],
                                           std::chars_format::general, 17);
            (void)ec;
            if (i) os << ',';
            os.write(buf, end - buf);
        }
        os << "\n";
    }
}

}  // namespace homothety
