// Copyright 2026 The trc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include "trc/core/polynomial.hpp"

#include <set>

#include "trc/common/errors.hpp"

namespace trc::core {

Polynomial lagrange_interpolate(const ModRing& field, std::span<const Point> points) {
    const std::size_t n = points.size();
    if (n == 0) fail(Errc::InvalidArgument, "no points to interpolate");
    if (field.modulus() < n) fail(Errc::InvalidArgument, "more points than field elements");

    std::set<group::BigUint> seen;
    for (const auto& p : points) {
        if (!seen.insert(field.reduce(p.x.value()).value()).second)
            fail(Errc::DuplicateX, "x = " + p.x.to_string() + " appears twice");
    }

    // master(x) = prod_j (x - x_j), degree n.
    std::vector<Scalar> master{field.from_u64(1)};
    for (const auto& p : points) {
        std::vector<Scalar> next(master.size() + 1, field.from_u64(0));
        for (std::size_t k = 0; k < master.size(); ++k) {
            next[k + 1] = field.add(next[k + 1], master[k]);
            next[k] = field.sub(next[k], field.mul(master[k], p.x));
        }
        master = std::move(next);
    }

    std::vector<Scalar> result(n, field.from_u64(0));
    for (std::size_t i = 0; i < n; ++i) {
        const Scalar& xi = points[i].x;
        // basis(x) = master(x) / (x - x_i) by synthetic division.
        std::vector<Scalar> basis(n);
        Scalar carry = master[n];
        for (std::size_t k = n; k-- > 0;) {
            basis[k] = carry;
            carry = field.add(master[k], field.mul(carry, xi));
        }
        Scalar denom = field.from_u64(1);
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i) denom = field.mul(denom, field.sub(xi, points[j].x));
        }
        Scalar scale = field.mul(field.reduce(points[i].y.value()), field.inverse(denom));
        for (std::size_t k = 0; k < n; ++k) result[k] = field.add(result[k], field.mul(scale, basis[k]));
    }
    return Polynomial{std::move(result)};
}

Scalar poly_eval(const ModRing& field, const Polynomial& poly, const Scalar& x) {
    Scalar acc = field.from_u64(0);
    for (auto it = poly.coefficients.rbegin(); it != poly.coefficients.rend(); ++it)
        acc = field.add(field.mul(acc, x), *it);
    return acc;
}

}  // namespace trc::core
