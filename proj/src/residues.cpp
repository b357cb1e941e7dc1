#include "frob/residues.hpp"

#include <numbers>
#include <numeric>
#include <string>

#include "frob/errors.hpp"
#include "frob/numth.hpp"

namespace frob {

namespace {

// lambda_j^e for lambda_j = exp(2*pi*i*j/a), exponent reduced mod a in exact
// integers so precision does not degrade with |e|.
std::complex<double> root_power(std::int64_t a, std::int64_t j, std::int64_t e) {
    std::int64_t r = mul_mod(j, floor_mod(e, a), a);
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) /
                               static_cast<double>(a));
}

// Sum over the nontrivial a-th roots lambda of 1 / ((1 - lambda^p) * lambda^n),
// without the 1/a prefactor. Needs gcd(p, a) = 1 so lambda^p never hits 1.
std::complex<double> mixed_sum(std::int64_t a, std::int64_t p, std::int64_t n) {
    std::complex<double> s = 0.0;
    for (std::int64_t j = 1; j < a; ++j)
        s += 1.0 / ((1.0 - root_power(a, j, p)) * root_power(a, j, n));
    return s;
}

} // namespace

std::complex<double> unity_sum(std::int64_t a, std::int64_t n) {
    if (a < 2)
        throw InvalidInputError("modulus must be >= 2, got " + std::to_string(a));
    return mixed_sum(a, 1, n) / static_cast<double>(a);
}

IdentityCheck check_unity_closed_form(std::int64_t a, std::int64_t n, double tol) {
    std::complex<double> lhs = unity_sum(a, n);
    Fraction f = fractional_part(n, a);
    double rhs = -static_cast<double>(f.residue) / static_cast<double>(a) + 0.5 -
                 0.5 / static_cast<double>(a);
    double residual = std::abs(lhs - rhs);
    return {residual <= tol, residual};
}

IdentityCheck check_unity_reindex(std::int64_t a, std::int64_t b, std::int64_t n, double tol) {
    if (a < 2)
        throw InvalidInputError("modulus must be >= 2, got " + std::to_string(a));
    if (b < 1)
        throw InvalidInputError("b must be positive, got " + std::to_string(b));
    if (std::int64_t g = std::gcd(a, b); g != 1)
        throw InvalidInputError("gcd(" + std::to_string(a) + ", " + std::to_string(b) + ") is " +
                                std::to_string(g) + ", expected 1");
    std::complex<double> lhs = mixed_sum(a, b, n);
    std::int64_t m = mul_mod(mod_inverse(b, a), floor_mod(n, a), a);
    std::complex<double> rhs = mixed_sum(a, 1, m);
    double residual = std::abs(lhs - rhs);
    return {residual <= tol, residual};
}

double residue_route_count(std::int64_t a, std::int64_t b, std::int64_t n) {
    if (a < 1 || b < 1)
        throw InvalidInputError("denominations must be positive, got " + std::to_string(a) +
                                " and " + std::to_string(b));
    if (std::int64_t g = std::gcd(a, b); g != 1)
        throw InvalidInputError("gcd(" + std::to_string(a) + ", " + std::to_string(b) + ") is " +
                                std::to_string(g) + ", expected 1");
    if (n < 0)
        return 0.0;
    double value = static_cast<double>(n) / (static_cast<double>(a) * static_cast<double>(b)) +
                   0.5 / static_cast<double>(a) + 0.5 / static_cast<double>(b);
    if (a >= 2)
        value += (mixed_sum(a, b, n) / static_cast<double>(a)).real();
    if (b >= 2)
        value += (mixed_sum(b, a, n) / static_cast<double>(b)).real();
    return value;
}

} // namespace frob
