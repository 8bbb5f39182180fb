// SPDX-License-Identifier: Apache-2.0
/*
 * Copyright (C) 2026 cohsense contributors
 */
#pragma once

#include <cmath>
#include <cstdint>

#include "cohsense/core/errors.hpp"

namespace cohsense {

/// Signed/unsigned fixed-point format descriptor. Rounding is
/// round-to-nearest-even, overflow saturates; both are fixed properties of
/// the format, not options.
///
/// Houses every bit-width used by the receiver model: 8-bit ADC samples,
/// 9-bit equalizer coefficients and error terms, 7-bit phase angles.
struct FixedSpec {
    int total_bits{9};
    int frac_bits{7};
    bool is_signed{true};

    void validate() const {
        if (total_bits < 1 || total_bits > 16)
            throw ConfigError("FixedSpec: total_bits must be in [1,16]");
        if (frac_bits < 0 || frac_bits >= total_bits)
            throw ConfigError("FixedSpec: frac_bits must be in [0,total_bits)");
    }

    constexpr std::int32_t min_code() const noexcept {
        return is_signed ? -(std::int32_t{1} << (total_bits - 1)) : 0;
    }
    constexpr std::int32_t max_code() const noexcept {
        return is_signed ? (std::int32_t{1} << (total_bits - 1)) - 1
                         : (std::int32_t{1} << total_bits) - 1;
    }
    double lsb() const noexcept { return std::ldexp(1.0, -frac_bits); }
    double max_value() const noexcept { return max_code() * lsb(); }
    double min_value() const noexcept { return min_code() * lsb(); }

    /// Real value -> integer code. NaN maps to 0, +/-inf saturates.
    std::int32_t quantize(double x) const noexcept {
        if (std::isnan(x)) return 0;
        const double scaled = std::ldexp(x, frac_bits);
        // nearbyint honors the default FE_TONEAREST mode: ties to even.
        double r = std::nearbyint(scaled);
        const double lo = static_cast<double>(min_code());
        const double hi = static_cast<double>(max_code());
        if (!(r > lo)) r = lo;
        if (!(r < hi)) r = hi;
        return static_cast<std::int32_t>(r);
    }

    double dequantize(std::int32_t code) const noexcept {
        return std::ldexp(static_cast<double>(code), -frac_bits);
    }

    /// Round a value onto the representable grid (quantize then dequantize).
    double round_value(double x) const noexcept { return dequantize(quantize(x)); }

    bool representable(double x) const noexcept {
        return dequantize(quantize(x)) == x;
    }

    bool operator==(const FixedSpec&) const = default;
};

}  // namespace cohsense
