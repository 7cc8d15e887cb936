// Copyright 2026 The trc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <span>
#include <vector>

#include "trc/group/scalar.hpp"

namespace trc::core {

using group::ModRing;
using group::Scalar;

/// Coefficients C_0 .. C_{d}, lowest degree first. The leading coefficient
/// may be zero.
struct Polynomial {
    std::vector<Scalar> coefficients;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

struct Point {
    Scalar x;
    Scalar y;
};

// Unique polynomial of degree < points.size() through all points over the
// prime field `field`. Throws DuplicateX, or InvalidArgument when empty or
// larger than the field.
Polynomial lagrange_interpolate(const ModRing& field, std::span<const Point> points);

// Horner evaluation.
Scalar poly_eval(const ModRing& field, const Polynomial& poly, const Scalar& x);

}  // namespace trc::core
