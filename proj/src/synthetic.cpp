#include "geopc/synthetic.hpp"

#include <cmath>
#include <random>

#include "geopc/error.hpp"

namespace geopc {

SyntheticKind kind_from_name(std::string_view name) {
    if (name == "swiss_roll") return SyntheticKind::swiss_roll;
    if (name == "two_planes") return SyntheticKind::two_planes;
    if (name == "cylinder") return SyntheticKind::cylinder;
    if (name == "grid") return SyntheticKind::grid;
    throw ValidationError("unknown synthetic kind '" + std::string(name) + "'");
}

const char* to_string(SyntheticKind kind) {
    switch (kind) {
        case SyntheticKind::swiss_roll: return "swiss_roll";
        case SyntheticKind::two_planes: return "two_planes";
        case SyntheticKind::cylinder: return "cylinder";
        case SyntheticKind::grid: return "grid";
    }
    return "?";
}

namespace {

// mt19937_64 is pinned by the standard; the [0,1) mapping below keeps the
// stream independent of libstdc++'s distribution internals.
class Uniform01 {
public:
    explicit Uniform01(std::uint64_t seed) : rng_(seed) {}
    double next() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 rng_;
};

void require_positive(double value, const char* name) {
    if (!(value > 0.0)) {
        throw ValidationError(std::string("parameter '") + name + "' must be positive");
    }
}

// Largest divisor of n that is <= sqrt(n); always >= 1.
int near_square_rows(int n) {
    int rows = static_cast<int>(std::sqrt(static_cast<double>(n)));
    while (rows > 1 && n % rows != 0) --rows;
    return rows;
}

// Arclength of the spiral r = a * psi from psi = 0.
double spiral_arclength(double a, double psi) {
    return 0.5 * a * (psi * std::sqrt(1.0 + psi * psi) + std::asinh(psi));
}

double invert_arclength(double a, double target, double psi_lo, double psi_hi) {
    const double base = spiral_arclength(a, psi_lo);
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (psi_lo + psi_hi);
        if (spiral_arclength(a, mid) - base < target) {
            psi_lo = mid;
        } else {
            psi_hi = mid;
        }
        if (psi_hi - psi_lo < 1e-13) break;
    }
    return 0.5 * (psi_lo + psi_hi);
}

SyntheticCloud make_swiss_roll(int n, const SyntheticParams& p, std::uint64_t seed) {
    if (p.turns < 1.0) throw ValidationError("swiss_roll requires turns >= 1");
    require_positive(p.height, "height");
    require_positive(p.roll_scale, "roll_scale");

    const double psi0 = 0.5 * 3.14159265358979323846;
    const double psi1 = psi0 + 2.0 * 3.14159265358979323846 * p.turns;
    const double total = spiral_arclength(p.roll_scale, psi1) - spiral_arclength(p.roll_scale, psi0);

    SyntheticCloud out;
    out.meta.name = "swiss_roll";
    out.cloud.feature_width = 1;
    out.cloud.positions.reserve(n);
    out.cloud.features.reserve(n);

    Uniform01 rng(seed);
    for (int i = 0; i < n; ++i) {
        const double s = rng.next() * total; // uniform in surface area
        const double y = rng.next() * p.height;
        const double psi = invert_arclength(p.roll_scale, s, psi0, psi1);
        const double r = p.roll_scale * psi;
        out.cloud.positions.push_back({r * std::cos(psi), y, r * std::sin(psi)});
        out.cloud.features.push_back(s);
    }
    return out;
}

SyntheticCloud make_two_planes(int n, const SyntheticParams& p) {
    require_positive(p.gap, "gap");
    require_positive(p.spacing, "spacing");
    if (p.offset_frac < 0.0) throw ValidationError("offset_frac must be >= 0");
    if (n % 2 != 0) throw ValidationError("two_planes requires an even point count");

    const int per_sheet = n / 2;
    const int rows = near_square_rows(per_sheet);
    const int cols = per_sheet / rows;
    const double hx = p.spacing;
    const double hy = p.spacing * (31.0 / 30.0);
    const double ox = p.offset_frac * hx;
    const double oy = p.offset_frac * hy;
    // Row gaps grow by a hair per row so the nearer vertical neighbor is
    // decided by construction, not by last-ulp noise; the edge columns then
    // chain every row and each sheet stays connected under a k_graph = 2
    // build. Scaled by 1/rows so the widest gap stays well below the nearest
    // cross-sheet distance at any grid size.
    const double stretch = 0.01 / rows;

    SyntheticCloud out;
    out.meta.name = "two_planes";
    out.cloud.positions.reserve(n);
    out.meta.part_ids.reserve(n);
    for (int sheet = 0; sheet < 2; ++sheet) {
        const double z = sheet == 0 ? 0.0 : p.gap;
        const double sx = sheet == 0 ? 0.0 : ox;
        const double sy = sheet == 0 ? 0.0 : oy;
        for (int iy = 0; iy < rows; ++iy) {
            const double y = (iy + stretch * iy * iy) * hy + sy;
            for (int ix = 0; ix < cols; ++ix) {
                out.cloud.positions.push_back({ix * hx + sx, y, z});
                out.meta.part_ids.push_back(sheet);
            }
        }
    }
    return out;
}

SyntheticCloud make_cylinder(int n, const SyntheticParams& p, std::uint64_t seed) {
    require_positive(p.radius, "radius");
    require_positive(p.height, "height");

    SyntheticCloud out;
    out.meta.name = "cylinder";
    out.cloud.positions.reserve(n);
    Uniform01 rng(seed);
    const double two_pi = 2.0 * 3.14159265358979323846;
    for (int i = 0; i < n; ++i) {
        const double theta = rng.next() * two_pi;
        const double z = rng.next() * p.height;
        out.cloud.positions.push_back({p.radius * std::cos(theta), p.radius * std::sin(theta), z});
    }
    return out;
}

SyntheticCloud make_grid(int n, const SyntheticParams& p) {
    require_positive(p.grid_spacing, "grid_spacing");
    const int rows = near_square_rows(n);
    const int cols = n / rows;

    SyntheticCloud out;
    out.meta.name = "grid";
    out.cloud.positions.reserve(n);
    for (int iy = 0; iy < rows; ++iy) {
        for (int ix = 0; ix < cols; ++ix) {
            out.cloud.positions.push_back({ix * p.grid_spacing, iy * p.grid_spacing, 0.0});
        }
    }
    return out;
}

} // namespace

SyntheticCloud gen_synthetic(SyntheticKind kind, int n, const SyntheticParams& params,
                             std::uint64_t seed) {
    if (n < 4) throw ValidationError("synthetic generators require n >= 4");

    SyntheticCloud out;
    switch (kind) {
        case SyntheticKind::swiss_roll: out = make_swiss_roll(n, params, seed); break;
        case SyntheticKind::two_planes: out = make_two_planes(n, params); break;
        case SyntheticKind::cylinder: out = make_cylinder(n, params, seed); break;
        case SyntheticKind::grid: out = make_grid(n, params); break;
    }
    out.cloud.validate();
    out.meta.validate(out.cloud.n());
    return out;
}

} // namespace geopc
