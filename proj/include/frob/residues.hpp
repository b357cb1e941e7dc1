#pragma once

#include <complex>
#include <cstdint>

namespace frob {

// (1/a) * sum over the a-th roots of unity except 1 of 1 / ((1 - lambda) * lambda^n),
// for a >= 2. Each root is built from std::polar with the exponent reduced
// mod a exactly, so the value is a-periodic in n to machine precision.
std::complex<double> unity_sum(std::int64_t a, std::int64_t n);

// Result of a floating-point identity check: residual is the absolute
// difference between the two sides, ok says it stayed within tolerance.
struct IdentityCheck {
    bool ok = false;
    double residual = 0.0;
};

// unity_sum(a, n) against its closed form -{n/a} + 1/2 - 1/(2a).
IdentityCheck check_unity_closed_form(std::int64_t a, std::int64_t n, double tol = 1e-9);

// Reindexing identity for coprime a, b: summing 1 / ((1 - lambda^b) * lambda^n)
// over the nontrivial a-th roots equals summing 1 / ((1 - lambda) * lambda^m)
// with m = b^{-1} n mod a.
IdentityCheck check_unity_reindex(std::int64_t a, std::int64_t b, std::int64_t n,
                                  double tol = 1e-9);

// Representation count of n by coprime a, b assembled from the partial
// fraction expansion: n/ab + 1/(2a) + 1/(2b) plus the two root-of-unity
// sums. Floating point; agrees with the exact count to ~1e-6 in the ranges
// exercised here.
double residue_route_count(std::int64_t a, std::int64_t b, std::int64_t n);

} // namespace frob
