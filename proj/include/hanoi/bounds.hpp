#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <mpfr.h>

#include "hanoi/counts.hpp"
#include "hanoi/types.hpp"

namespace hanoi {

// Enclosure [lo, hi] of a real number, MPFR-backed with outward rounding on
// every operation. A comparison between intervals is only reported when it
// holds for all contained reals, so a "pass" is never a rounding artifact.
class Interval {
  public:
    explicit Interval(mpfr_prec_t precision);
    Interval(const Interval& other);
    Interval(Interval&& other) noexcept;
    Interval& operator=(Interval other) noexcept;
    ~Interval();

    static Interval of_int(std::int64_t value, mpfr_prec_t precision);
    static Interval of_count(const CountValue& value, mpfr_prec_t precision);
    static Interval of_ratio(std::int64_t num, std::int64_t den, mpfr_prec_t precision);

    mpfr_prec_t precision() const { return precision_; }

    Interval add(const Interval& other) const;
    Interval sub(const Interval& other) const;
    Interval mul(const Interval& other) const; // operands must be >= 0
    Interval div(const Interval& other) const; // divisor must be > 0
    Interval sqrt() const;                     // operand >= 0
    Interval root(unsigned long k) const;      // operand >= 0
    Interval pow_int(unsigned long e) const;   // operand >= 0
    Interval pow(const Interval& e) const;     // operand >= 1, e >= 0
    Interval exp3() const;                     // 3^x
    Interval log3() const;                     // operand > 0

    bool certainly_less(const Interval& other) const;
    bool certainly_at_most(const Interval& other) const;
    bool certainly_greater(const Interval& other) const;
    bool certainly_at_least(const Interval& other) const;
    bool is_point() const;

    // Decimal rendering of the upper end (an upper bound of the true value).
    std::string upper_decimal(int significant_digits) const;
    // Both ends rounded half-up to `decimals`; nullopt if they disagree
    // (i.e. the enclosure is too wide to round deterministically).
    std::optional<std::string> fixed_half_up(int decimals) const;
    double midpoint_double() const;

  private:
    mpfr_prec_t precision_;
    mpfr_t lo_;
    mpfr_t hi_;
};

// The closed-form bound constants for h pegs:
//   theta = ((h-2)!)^(1/(h-2))     alpha = (h-3)/(h-2)
//   delta = 11 / 3^(2 - (1/30)^(1/3))
//   c = (h-2) delta^(h-3) / theta  c_tilde = (h-2) / theta
// For h = 3 these are exactly theta = 1, alpha = 0, c = 1.
struct BoundParams {
    int h;
    Interval theta;
    Interval alpha;
    Interval delta;
    Interval c;
    Interval c_tilde;

    static BoundParams make(int h, mpfr_prec_t precision);
};

constexpr mpfr_prec_t kDefaultPrecision = 192;   // ~57 decimal digits
constexpr mpfr_prec_t kMaxComparePrecision = 4096;

// U(h,n) = c_h n^alpha_h 3^(theta_h n^(1/(h-2))); h >= 3, n >= 1. The upper
// end of the result is a true upper bound of U.
Interval upper_bound_u(int h, DiskSize n, mpfr_prec_t precision = kDefaultPrecision);
// Same with c_tilde in place of c (the sharper constant valid for n < h).
Interval upper_bound_u_tilde(int h, DiskSize n, mpfr_prec_t precision = kDefaultPrecision);
// 1.6 sqrt(n) 3^sqrt(2n); n >= 1.
Interval four_peg_bound(DiskSize n, mpfr_prec_t precision = kDefaultPrecision);

Interval log3_upper_bound_u(int h, DiskSize n, mpfr_prec_t precision);
Interval log3_upper_bound_u_tilde(int h, DiskSize n, mpfr_prec_t precision);
Interval log3_four_peg_bound(DiskSize n, mpfr_prec_t precision);

// The reported lower-bound exponent e(h,n) = (n (h-2)!)^(1/(h-2)) of the
// complete-graph lower bound 2^((1+o(1)) e(h,n)). The o(1) term is
// unspecified, so this is informational only and never asserted.
Interval informational_lower_exponent(int h, DiskSize n,
                                      mpfr_prec_t precision = kDefaultPrecision);

// Sound comparison of an exact count against a bound given in log3 space.
// Evaluates at increasing precision until the comparison is certain either
// way; an indeterminate outcome at kMaxComparePrecision counts as false.
bool count_below_log3(const CountValue& count,
                      const std::function<Interval(mpfr_prec_t)>& log3_bound,
                      bool strict,
                      mpfr_prec_t start = kDefaultPrecision,
                      mpfr_prec_t max = kMaxComparePrecision);

struct BoundRow {
    DiskSize n;
    std::string log3_count;
    std::string log3_bound;
    std::string ratio; // count / bound
};

struct BoundCompareResult {
    std::vector<BoundRow> rows;
    CheckReport report;
};

// For n in 1..n_max checks farthest_count(h,n) <= U(h,n) (log3 space,
// outward rounding), plus the sharper c_tilde bound for n < h when h >= 5.
BoundCompareResult compare_bounds(int h, DiskSize n_max,
                                  CountTable& table = shared_counts());

// CSV: h,n,logF,logU,ratio
std::string bounds_csv(int h, const std::vector<BoundRow>& rows);

// ratio value / (sqrt(n) 3^sqrt(2n)) rounded half-up to 3 decimals.
std::string four_peg_ratio(std::int64_t value, DiskSize n);

} // namespace hanoi
