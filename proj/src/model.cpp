#include "platepack/model.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <set>
#include <string_view>

namespace platepack {

namespace {

// Powers of ten that are exactly representable as doubles.
constexpr int kMaxExactPow10 = 22;

double pow10_exact(int k) {
    static const double table[kMaxExactPow10 + 1] = {
        1e0,  1e1,  1e2,  1e3,  1e4,  1e5,  1e6,  1e7,
        1e8,  1e9,  1e10, 1e11, 1e12, 1e13, 1e14, 1e15,
        1e16, 1e17, 1e18, 1e19, 1e20, 1e21, 1e22,
    };
    return table[k];
}

// Decodes the shortest round-trip decimal form of `d` into digits and a
// base-10 exponent: d == digits * 10^-frac10. Returns false when the form
// does not fit the integer fields.
bool decimal_decompose(double d, std::uint64_t& digits, int& frac10) {
    char buf[48];
    const auto res = std::to_chars(buf, buf + sizeof(buf), d);
    if (res.ec != std::errc{}) return false;
    std::string_view text(buf, static_cast<std::size_t>(res.ptr - buf));

    std::uint64_t mantissa = 0;
    int frac_digits = 0;
    int exp10 = 0;
    bool seen_dot = false;
    std::size_t i = 0;
    if (i < text.size() && text[i] == '-') return false; // negatives not needed
    for (; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '.') {
            seen_dot = true;
        } else if (c == 'e' || c == 'E') {
            int e = 0;
            const auto [p, ec] =
                std::from_chars(text.data() + i + 1, text.data() + text.size(), e);
            if (ec != std::errc{} || p != text.data() + text.size()) return false;
            exp10 = e;
            break;
        } else {
            if (mantissa > (UINT64_MAX - 9) / 10) return false;
            mantissa = mantissa * 10 + static_cast<std::uint64_t>(c - '0');
            if (seen_dot) ++frac_digits;
        }
    }
    frac10 = frac_digits - exp10;
    digits = mantissa;
    return true;
}

} // namespace

double scaled_by_decimal(double value, double factor) {
    std::uint64_t digits = 0;
    int frac10 = 0;
    if (!std::isfinite(factor) || factor < 0.0 ||
        !decimal_decompose(factor, digits, frac10) || frac10 < 0 ||
        frac10 > kMaxExactPow10 || digits > (1ull << 53)) {
        return value * factor;
    }
    return (value * static_cast<double>(digits)) / pow10_exact(frac10);
}

double part_volume(const Part& part) {
    return part.length * part.width * part.height;
}

double part_mass(const Part& part) {
    return scaled_by_decimal(part_volume(part), part.filling);
}

BigInt search_space_size(unsigned n) {
    BigInt result = 1;
    result <<= n;
    for (unsigned k = 2; k <= n; ++k) result *= k;
    return result;
}

void validate_instance(const Instance& instance) {
    const Platform& bed = instance.platform;
    if (!(bed.length > 0.0) || !(bed.width > 0.0) || !(bed.height > 0.0)) {
        throw ValidationError("platform '" + bed.name +
                              "': length, width and height must be positive");
    }
    if (instance.parts.empty()) {
        throw ValidationError("no parts");
    }
    std::set<std::string> names;
    for (const Part& p : instance.parts) {
        if (p.name.empty()) {
            throw ValidationError("part with empty name");
        }
        if (!names.insert(p.name).second) {
            throw ValidationError("duplicate part name '" + p.name + "'");
        }
        if (!(p.length > 0.0) || !(p.width > 0.0) || !(p.height > 0.0)) {
            throw ValidationError("part '" + p.name +
                                  "': length, width and height must be positive");
        }
        if (!(p.filling > 0.0) || p.filling > 1.0) {
            throw ValidationError("part '" + p.name +
                                  "': filling must be in (0, 1]");
        }
        if (p.height > bed.height) {
            throw ValidationError("part '" + p.name + "': height " +
                                  std::to_string(p.height) +
                                  " exceeds platform height " +
                                  std::to_string(bed.height));
        }
    }
    if (instance.economics) {
        const EconomicParams& e = *instance.economics;
        if (e.price_per_mm3 < 0.0 || e.fixed_cost < 0.0 || e.variable_cost < 0.0) {
            throw ValidationError("economics: price, fixed_cost and variable_cost "
                                  "must be non-negative");
        }
    }
}

void refresh_layout_metrics(Layout& layout, const Instance& instance) {
    double area = 0.0;
    double mass = 0.0;
    for (const Placement& pl : layout.placements) {
        area += pl.placed_length * pl.placed_width;
        mass += part_mass(instance.parts.at(pl.part));
    }
    layout.covered_area = area;
    layout.total_mass = mass;
}

double coverage_percent_2dp(double covered_area, double bed_area) {
    if (bed_area <= 0.0) return 0.0;
    return std::round(covered_area * 10000.0 / bed_area) / 100.0;
}

} // namespace platepack
