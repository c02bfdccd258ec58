#include "ruleorder/complexity.hpp"

#include <bit>
#include <cmath>

namespace ruleorder {

namespace {

void require_positive(std::uint64_t n, const char* what)
{
    if (n == 0)
        throw DomainError(std::string(what) + ": n must be at least 1");
}

// ceil(log2 k) for k >= 1.
std::uint64_t ceil_log2(std::uint64_t k)
{
    return static_cast<std::uint64_t>(std::bit_width(k - 1));
}

} // namespace

std::uint64_t block_steps_sum(std::uint64_t n)
{
    require_positive(n, "block_steps_sum");
    std::uint64_t total = 0;
    for (std::uint64_t i = 2; i <= n; ++i)
        total += i;
    return total;
}

std::uint64_t block_steps_exact(std::uint64_t n)
{
    require_positive(n, "block_steps_exact");
    // n^2 - n is always even.
    return (n * n - n) / 2 + n - 1;
}

std::uint64_t binary_steps(std::uint64_t n)
{
    require_positive(n, "binary_steps");
    std::uint64_t total = 0;
    for (std::uint64_t k = 1; k <= n; ++k)
        total += ceil_log2(k);
    return total;
}

double log_factorial(std::uint64_t n)
{
    require_positive(n, "log_factorial");
    // Neumaier summation.
    double sum = 0.0;
    double carry = 0.0;
    for (std::uint64_t k = 2; k <= n; ++k) {
        const double term = std::log2(static_cast<double>(k));
        const double t = sum + term;
        if (std::abs(sum) >= std::abs(term))
            carry += (sum - t) + term;
        else
            carry += (term - t) + sum;
        sum = t;
    }
    return sum + carry;
}

std::uint64_t binary_steps_approx(std::uint64_t n)
{
    require_positive(n, "binary_steps_approx");
    return static_cast<std::uint64_t>(std::ceil(log_factorial(n)));
}

BigInt naive_steps(std::uint64_t n)
{
    require_positive(n, "naive_steps");
    BigInt f = 1;
    for (std::uint64_t k = 2; k <= n; ++k)
        f *= k;
    return f;
}

double speedup(std::uint64_t n)
{
    if (n < 2)
        throw DomainError("speedup: n must be at least 2");
    return static_cast<double>(block_steps_exact(n)) / static_cast<double>(binary_steps(n));
}

double learning_duration(std::uint64_t steps, double steps_per_day)
{
    if (!(steps_per_day > 0.0))
        throw DomainError("learning_duration: steps_per_day must be positive");
    return static_cast<double>(steps) / steps_per_day / 365.25;
}

ComplexityReport report(std::uint64_t n)
{
    require_positive(n, "report");
    ComplexityReport r;
    r.n = n;
    r.s_n = block_steps_exact(n);
    r.b_n = binary_steps(n);
    r.b_f_n = binary_steps_approx(n);
    r.log_factorial = log_factorial(n);
    if (n >= 2)
        r.speedup = speedup(n);
    r.naive = naive_steps(n);
    return r;
}

bool bounds_hold(const ComplexityReport& r, double rel_tol)
{
    return bounds_hold(r.n, r.b_n, r.log_factorial, rel_tol);
}

bool bounds_hold(std::uint64_t n, std::uint64_t b_n, double log_fact, double rel_tol)
{
    if (n < 2)
        throw DomainError("bounds_hold: bounds are only defined for n >= 2");
    const double b = static_cast<double>(b_n);
    const double lower = log_fact;
    const double upper = log_fact + static_cast<double>(n);
    const double nlogn = static_cast<double>(n) * std::log2(static_cast<double>(n));
    return lower < b * (1.0 + rel_tol) && b < upper * (1.0 + rel_tol) && b < nlogn * (1.0 + rel_tol);
}

std::string to_scientific(const BigInt& value, int significant_digits)
{
    // Round the decimal digit string directly so huge values stay exact.
    std::string digits = value.str();
    bool negative = false;
    if (!digits.empty() && digits.front() == '-') {
        negative = true;
        digits.erase(0, 1);
    }
    long exponent = static_cast<long>(digits.size()) - 1;
    const auto keep = static_cast<std::size_t>(significant_digits);

    std::string mantissa = digits.substr(0, std::min(keep, digits.size()));
    if (digits.size() > keep && digits[keep] >= '5') {
        int i = static_cast<int>(mantissa.size()) - 1;
        while (i >= 0 && mantissa[static_cast<std::size_t>(i)] == '9')
            mantissa[static_cast<std::size_t>(i--)] = '0';
        if (i < 0) {
            mantissa.insert(mantissa.begin(), '1');
            mantissa.pop_back();
            ++exponent;
        } else {
            ++mantissa[static_cast<std::size_t>(i)];
        }
    }
    while (mantissa.size() < keep)
        mantissa.push_back('0');

    std::string out = negative ? "-" : "";
    out += mantissa.front();
    if (mantissa.size() > 1) {
        out += '.';
        out.append(mantissa, 1);
    }
    out += exponent < 0 ? "e-" : "e+";
    const std::string exp_digits = std::to_string(std::abs(exponent));
    if (exp_digits.size() < 2)
        out += '0';
    out += exp_digits;
    return out;
}

} // namespace ruleorder
