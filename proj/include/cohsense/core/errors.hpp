// SPDX-License-Identifier: Apache-2.0
/*
 * Copyright (C) 2026 cohsense contributors
 */
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cohsense {

/// Thrown when a 2x2 matrix is too ill-conditioned for the requested
/// factorization. Callers processing snapshot streams treat this as a
/// per-sample gap rather than a fatal condition.
struct SingularMatrix : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Row power below the usable threshold; no Stokes vector can be formed.
struct ZeroPower : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input failed the unitarity precondition; polar-decompose it first.
struct NotUnitary : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid configuration value or malformed/unknown config key.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Base for corrupt or malformed stream data. Carries the byte offset of
/// the offending record when known.
struct DataError : std::runtime_error {
    explicit DataError(const std::string& what, std::uint64_t offset = 0)
        : std::runtime_error(what), byte_offset(offset) {}
    std::uint64_t byte_offset{0};
};

struct BadMagic : DataError {
    using DataError::DataError;
};

struct BadCrc : DataError {
    using DataError::DataError;
};

struct UnsupportedVersion : DataError {
    using DataError::DataError;
};

struct TruncatedRecord : DataError {
    using DataError::DataError;
};

/// Time grids of two series do not match.
struct AlignmentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Series shorter than one analysis segment.
struct TooShort : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// No spectral ridge with sufficient prominence in the requested band.
struct NoRidge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace cohsense
