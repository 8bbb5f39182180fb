// SPDX-License-Identifier: Apache-2.0
/*
 * Copyright (C) 2026 cohsense contributors
 */
#pragma once

#include <cstdint>
#include <vector>

#include "cohsense/core/errors.hpp"

namespace cohsense::txsim {

/// Feedback polynomial for a 15-bit Fibonacci LFSR, given as exponent list
/// of x^15 + x^t + ... + 1 (the x^15 term is implied; list the remaining
/// nonzero exponents except the constant). {15, 14} means x^15 + x^14 + 1.
struct PrbsPoly {
    std::vector<int> taps{15, 14};

    std::uint16_t mask() const {
        std::uint16_t m = 0;
        for (int t : taps) {
            if (t < 1 || t > 15)
                throw ConfigError("PrbsPoly: tap exponent out of [1,15]");
            m |= std::uint16_t(1) << (t - 1);
        }
        return m;
    }
};

/// Maximal-length 15-bit LFSR (period 32767 for a primitive polynomial).
///
/// Bit readout order: the register shifts MSB-first, so the first 15
/// output bits are the seed bits from bit 14 down to bit 0.
class Prbs15 {
  public:
    Prbs15(PrbsPoly poly, std::uint16_t seed) : mask_(poly.mask()), state_(seed & 0x7FFF) {
        if (state_ == 0) throw ConfigError("Prbs15: seed must be nonzero");
    }

    int next_bit() {
        const int out = (state_ >> 14) & 1;
        const int fb = parity_(state_ & mask_);
        state_ = static_cast<std::uint16_t>(((state_ << 1) | fb) & 0x7FFF);
        return out;
    }

    void skip(int n_bits) {
        for (int i = 0; i < n_bits; ++i) next_bit();
    }

    std::uint16_t state() const { return state_; }

    static constexpr int kPeriod = 32767;

  private:
    static int parity_(std::uint16_t v) {
        v ^= v >> 8;
        v ^= v >> 4;
        v ^= v >> 2;
        v ^= v >> 1;
        return v & 1;
    }

    std::uint16_t mask_;
    std::uint16_t state_;
};

}  // namespace cohsense::txsim
