#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace ruleorder {

using BigInt = boost::multiprecision::cpp_int;

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// All counts below take n >= 1 and throw DomainError for n == 0.

/// Linear-scan worst case by explicit summation: 2 + 3 + ... + n.
std::uint64_t block_steps_sum(std::uint64_t n);

/// Linear-scan worst case in closed form: (n^2 - n) / 2 + n - 1.
std::uint64_t block_steps_exact(std::uint64_t n);

/// Binary-insertion worst case: sum of ceil(log2 k) for k = 1..n.
std::uint64_t binary_steps(std::uint64_t n);

/// log2(n!) as a compensated sum of log2 k. Never forms n!.
double log_factorial(std::uint64_t n);

/// ceil(log_factorial(n)).
std::uint64_t binary_steps_approx(std::uint64_t n);

/// n!, exact.
BigInt naive_steps(std::uint64_t n);

/// block_steps_exact(n) / binary_steps(n); requires n >= 2.
double speedup(std::uint64_t n);

/// Years needed at `steps_per_day`, with a 365.25-day year.
double learning_duration(std::uint64_t steps, double steps_per_day);

struct ComplexityReport {
    std::uint64_t n = 0;
    std::uint64_t s_n = 0;
    std::uint64_t b_n = 0;
    std::uint64_t b_f_n = 0;
    double log_factorial = 0.0;
    std::optional<double> speedup; // empty for n == 1
    BigInt naive;
};

ComplexityReport report(std::uint64_t n);

/// Checks log2(n!) < B(n) < log2(n!) + n and B(n) < n log2 n. The real-valued
/// side of each comparison is widened by `rel_tol`. Requires n >= 2.
bool bounds_hold(std::uint64_t n, std::uint64_t b_n, double log_fact, double rel_tol = 1e-9);
bool bounds_hold(const ComplexityReport& r, double rel_tol = 1e-9);

/// Decimal scientific rendering of a big integer, e.g. "1.08889e+28".
std::string to_scientific(const BigInt& value, int significant_digits = 6);

} // namespace ruleorder
