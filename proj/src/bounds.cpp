#include "hanoi/bounds.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace hanoi {

Interval::Interval(mpfr_prec_t precision) : precision_(precision) {
    mpfr_init2(lo_, precision_);
    mpfr_init2(hi_, precision_);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& other) : precision_(other.precision_) {
    mpfr_init2(lo_, precision_);
    mpfr_init2(hi_, precision_);
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : precision_(other.precision_) {
    mpfr_init2(lo_, precision_);
    mpfr_init2(hi_, precision_);
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(Interval other) noexcept {
    std::swap(precision_, other.precision_);
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Interval Interval::of_int(std::int64_t value, mpfr_prec_t precision) {
    Interval r(precision);
    mpfr_set_si(r.lo_, value, MPFR_RNDD);
    mpfr_set_si(r.hi_, value, MPFR_RNDU);
    return r;
}

Interval Interval::of_count(const CountValue& value, mpfr_prec_t precision) {
    Interval r(precision);
    const std::string digits = value.str();
    mpfr_set_str(r.lo_, digits.c_str(), 10, MPFR_RNDD);
    mpfr_set_str(r.hi_, digits.c_str(), 10, MPFR_RNDU);
    return r;
}

Interval Interval::of_ratio(std::int64_t num, std::int64_t den, mpfr_prec_t precision) {
    if (den <= 0 || num < 0) {
        throw std::invalid_argument("of_ratio expects num >= 0, den > 0");
    }
    Interval r(precision);
    mpfr_set_si(r.lo_, num, MPFR_RNDD);
    mpfr_set_si(r.hi_, num, MPFR_RNDU);
    mpfr_div_si(r.lo_, r.lo_, den, MPFR_RNDD);
    mpfr_div_si(r.hi_, r.hi_, den, MPFR_RNDU);
    return r;
}

Interval Interval::add(const Interval& other) const {
    Interval r(std::max(precision_, other.precision_));
    mpfr_add(r.lo_, lo_, other.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, other.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::sub(const Interval& other) const {
    Interval r(std::max(precision_, other.precision_));
    mpfr_sub(r.lo_, lo_, other.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, other.lo_, MPFR_RNDU);
    return r;
}

Interval Interval::mul(const Interval& other) const {
    if (mpfr_sgn(lo_) < 0 || mpfr_sgn(other.lo_) < 0) {
        throw std::logic_error("interval mul requires nonnegative operands");
    }
    Interval r(std::max(precision_, other.precision_));
    mpfr_mul(r.lo_, lo_, other.lo_, MPFR_RNDD);
    mpfr_mul(r.hi_, hi_, other.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::div(const Interval& other) const {
    if (mpfr_sgn(other.lo_) <= 0) {
        throw std::logic_error("interval div requires a positive divisor");
    }
    Interval r(std::max(precision_, other.precision_));
    mpfr_div(r.lo_, lo_, mpfr_sgn(lo_) >= 0 ? other.hi_ : other.lo_, MPFR_RNDD);
    mpfr_div(r.hi_, hi_, mpfr_sgn(hi_) >= 0 ? other.lo_ : other.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::sqrt() const {
    if (mpfr_sgn(lo_) < 0) {
        throw std::logic_error("interval sqrt requires a nonnegative operand");
    }
    Interval r(precision_);
    mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::root(unsigned long k) const {
    if (mpfr_sgn(lo_) < 0 || k == 0) {
        throw std::logic_error("interval root requires a nonnegative operand and k >= 1");
    }
    Interval r(precision_);
    mpfr_rootn_ui(r.lo_, lo_, k, MPFR_RNDD);
    mpfr_rootn_ui(r.hi_, hi_, k, MPFR_RNDU);
    return r;
}

Interval Interval::pow_int(unsigned long e) const {
    if (mpfr_sgn(lo_) < 0) {
        throw std::logic_error("interval pow_int requires a nonnegative operand");
    }
    Interval r(precision_);
    mpfr_pow_ui(r.lo_, lo_, e, MPFR_RNDD);
    mpfr_pow_ui(r.hi_, hi_, e, MPFR_RNDU);
    return r;
}

Interval Interval::pow(const Interval& e) const {
    // monotone in both base and exponent on base >= 1, exponent >= 0
    if (mpfr_cmp_ui(lo_, 1) < 0 || mpfr_sgn(e.lo_) < 0) {
        throw std::logic_error("interval pow requires base >= 1 and exponent >= 0");
    }
    Interval r(std::max(precision_, e.precision_));
    mpfr_pow(r.lo_, lo_, e.lo_, MPFR_RNDD);
    mpfr_pow(r.hi_, hi_, e.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::exp3() const {
    Interval r(precision_);
    mpfr_ui_pow(r.lo_, 3, lo_, MPFR_RNDD);
    mpfr_ui_pow(r.hi_, 3, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::log3() const {
    if (mpfr_sgn(lo_) <= 0) {
        throw std::logic_error("interval log3 requires a positive operand");
    }
    Interval num(precision_);
    mpfr_log(num.lo_, lo_, MPFR_RNDD);
    mpfr_log(num.hi_, hi_, MPFR_RNDU);
    Interval den(precision_);
    mpfr_set_ui(den.lo_, 3, MPFR_RNDN);
    mpfr_log(den.lo_, den.lo_, MPFR_RNDD);
    mpfr_set_ui(den.hi_, 3, MPFR_RNDN);
    mpfr_log(den.hi_, den.hi_, MPFR_RNDU);
    return num.div(den);
}

bool Interval::certainly_less(const Interval& other) const {
    return mpfr_cmp(hi_, other.lo_) < 0;
}

bool Interval::certainly_at_most(const Interval& other) const {
    return mpfr_cmp(hi_, other.lo_) <= 0;
}

bool Interval::certainly_greater(const Interval& other) const {
    return mpfr_cmp(lo_, other.hi_) > 0;
}

bool Interval::certainly_at_least(const Interval& other) const {
    return mpfr_cmp(lo_, other.hi_) >= 0;
}

bool Interval::is_point() const { return mpfr_equal_p(lo_, hi_) != 0; }

std::string Interval::upper_decimal(int significant_digits) const {
    char* str = nullptr;
    mpfr_asprintf(&str, "%.*RUg", significant_digits, hi_);
    std::string out(str);
    mpfr_free_str(str);
    return out;
}

std::optional<std::string> Interval::fixed_half_up(int decimals) const {
    if (mpfr_sgn(lo_) < 0) {
        throw std::logic_error("fixed_half_up requires a nonnegative interval");
    }
    mpfr_t scale, t;
    mpfr_init2(scale, precision_ + 64);
    mpfr_init2(t, precision_ + 64);
    mpfr_ui_pow_ui(scale, 10, static_cast<unsigned long>(decimals), MPFR_RNDN); // exact
    // half-up rounding of x is floor(x * 10^d + 1/2)
    mpfr_mul(t, lo_, scale, MPFR_RNDD);
    mpfr_add_d(t, t, 0.5, MPFR_RNDD);
    mpfr_floor(t, t);
    const long z_lo = mpfr_get_si(t, MPFR_RNDN);
    mpfr_mul(t, hi_, scale, MPFR_RNDU);
    mpfr_add_d(t, t, 0.5, MPFR_RNDU);
    mpfr_floor(t, t);
    const long z_hi = mpfr_get_si(t, MPFR_RNDN);
    mpfr_clear(scale);
    mpfr_clear(t);
    if (z_lo != z_hi) {
        return std::nullopt;
    }
    std::string digits = std::to_string(z_lo);
    const std::size_t d = static_cast<std::size_t>(decimals);
    if (d == 0) {
        return digits;
    }
    if (digits.size() <= d) {
        digits.insert(0, d + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - d, ".");
    return digits;
}

double Interval::midpoint_double() const {
    return (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN)) / 2.0;
}

namespace {

CountValue int_factorial(int k) {
    CountValue f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

void require_bound_range(int h, DiskSize n) {
    if (h < 3) {
        throw std::invalid_argument("bounds require h >= 3");
    }
    if (n < 1) {
        throw std::invalid_argument("bounds require n >= 1");
    }
}

} // namespace

BoundParams BoundParams::make(int h, mpfr_prec_t precision) {
    if (h < 3) {
        throw std::invalid_argument("bound constants require h >= 3");
    }
    Interval theta = Interval::of_count(int_factorial(h - 2), precision)
                         .root(static_cast<unsigned long>(h - 2));
    Interval alpha = Interval::of_ratio(h - 3, h - 2, precision);
    // delta = 11 / 3^(2 - (1/30)^(1/3))
    Interval c_star = Interval::of_ratio(1, 30, precision).root(3);
    Interval delta =
        Interval::of_int(11, precision).div(Interval::of_int(2, precision).sub(c_star).exp3());
    Interval c = Interval::of_int(h - 2, precision)
                     .mul(delta.pow_int(static_cast<unsigned long>(h - 3)))
                     .div(theta);
    Interval c_tilde = Interval::of_int(h - 2, precision).div(theta);
    return BoundParams{h, std::move(theta), std::move(alpha), std::move(delta), std::move(c),
                       std::move(c_tilde)};
}

namespace {

Interval exponent_term(const BoundParams& params, DiskSize n, mpfr_prec_t precision) {
    // theta * n^(1/(h-2))
    return params.theta.mul(
        Interval::of_int(n, precision).root(static_cast<unsigned long>(params.h - 2)));
}

Interval u_with_constant(const Interval& constant, const BoundParams& params, DiskSize n,
                         mpfr_prec_t precision) {
    const Interval n_iv = Interval::of_int(n, precision);
    return constant.mul(n_iv.pow(params.alpha)).mul(exponent_term(params, n, precision).exp3());
}

Interval log3_u_with_constant(const Interval& constant, const BoundParams& params, DiskSize n,
                              mpfr_prec_t precision) {
    const Interval n_iv = Interval::of_int(n, precision);
    return constant.log3().add(params.alpha.mul(n_iv.log3())).add(
        exponent_term(params, n, precision));
}

} // namespace

Interval upper_bound_u(int h, DiskSize n, mpfr_prec_t precision) {
    require_bound_range(h, n);
    const BoundParams params = BoundParams::make(h, precision);
    return u_with_constant(params.c, params, n, precision);
}

Interval upper_bound_u_tilde(int h, DiskSize n, mpfr_prec_t precision) {
    require_bound_range(h, n);
    const BoundParams params = BoundParams::make(h, precision);
    return u_with_constant(params.c_tilde, params, n, precision);
}

Interval four_peg_bound(DiskSize n, mpfr_prec_t precision) {
    if (n < 1) {
        throw std::invalid_argument("four_peg_bound requires n >= 1");
    }
    // 1.6 sqrt(n) 3^sqrt(2n)
    return Interval::of_ratio(8, 5, precision)
        .mul(Interval::of_int(n, precision).sqrt())
        .mul(Interval::of_int(2 * n, precision).sqrt().exp3());
}

Interval log3_upper_bound_u(int h, DiskSize n, mpfr_prec_t precision) {
    require_bound_range(h, n);
    const BoundParams params = BoundParams::make(h, precision);
    return log3_u_with_constant(params.c, params, n, precision);
}

Interval log3_upper_bound_u_tilde(int h, DiskSize n, mpfr_prec_t precision) {
    require_bound_range(h, n);
    const BoundParams params = BoundParams::make(h, precision);
    return log3_u_with_constant(params.c_tilde, params, n, precision);
}

Interval log3_four_peg_bound(DiskSize n, mpfr_prec_t precision) {
    if (n < 1) {
        throw std::invalid_argument("four_peg_bound requires n >= 1");
    }
    // log3(1.6) + (1/2) log3(n) + sqrt(2n)
    return Interval::of_ratio(8, 5, precision)
        .log3()
        .add(Interval::of_ratio(1, 2, precision).mul(Interval::of_int(n, precision).log3()))
        .add(Interval::of_int(2 * n, precision).sqrt());
}

Interval informational_lower_exponent(int h, DiskSize n, mpfr_prec_t precision) {
    require_bound_range(h, n);
    return Interval::of_count(int_factorial(h - 2) * n, precision)
        .root(static_cast<unsigned long>(h - 2));
}

bool count_below_log3(const CountValue& count,
                      const std::function<Interval(mpfr_prec_t)>& log3_bound, bool strict,
                      mpfr_prec_t start, mpfr_prec_t max) {
    if (count <= 0) {
        return true; // empty tasks are below any positive bound
    }
    for (mpfr_prec_t precision = start; precision <= max; precision *= 2) {
        const Interval lhs = Interval::of_count(count, precision).log3();
        const Interval rhs = log3_bound(precision);
        if (strict ? lhs.certainly_less(rhs) : lhs.certainly_at_most(rhs)) {
            return true;
        }
        if (strict ? lhs.certainly_at_least(rhs) : lhs.certainly_greater(rhs)) {
            return false;
        }
    }
    return false; // indeterminate at maximum precision: do not claim a pass
}

BoundCompareResult compare_bounds(int h, DiskSize n_max, CountTable& table) {
    require_bound_range(h, std::max<DiskSize>(n_max, 1));
    BoundCompareResult result;
    char buffer[64];
    for (DiskSize n = 1; n <= n_max; ++n) {
        const CountValue count = table.farthest_count(h, n);
        ++result.report.checks;
        if (!count_below_log3(count, [h, n](mpfr_prec_t p) { return log3_upper_bound_u(h, n, p); },
                              /*strict=*/false)) {
            result.report.violations.push_back("count above closed-form bound at h=" +
                                               std::to_string(h) + " n=" + std::to_string(n));
        }
        if (n < h) {
            // sharper constant (h-2)/theta valid below h disks
            ++result.report.checks;
            if (!count_below_log3(count,
                                  [h, n](mpfr_prec_t p) { return log3_upper_bound_u_tilde(h, n, p); },
                                  /*strict=*/false)) {
                result.report.violations.push_back("count above small-n bound at h=" +
                                                   std::to_string(h) + " n=" + std::to_string(n));
            }
        }
        BoundRow row;
        row.n = n;
        const Interval log_f = Interval::of_count(count, kDefaultPrecision).log3();
        const Interval log_u = log3_upper_bound_u(h, n, kDefaultPrecision);
        std::snprintf(buffer, sizeof buffer, "%.6f", log_f.midpoint_double());
        row.log3_count = buffer;
        std::snprintf(buffer, sizeof buffer, "%.6f", log_u.midpoint_double());
        row.log3_bound = buffer;
        std::snprintf(buffer, sizeof buffer, "%.6g",
                      Interval::of_count(count, kDefaultPrecision)
                          .div(upper_bound_u(h, n, kDefaultPrecision))
                          .midpoint_double());
        row.ratio = buffer;
        result.rows.push_back(std::move(row));
    }
    return result;
}

std::string bounds_csv(int h, const std::vector<BoundRow>& rows) {
    std::ostringstream os;
    os << "h,n,logF,logU,ratio\n";
    for (const auto& row : rows) {
        os << h << ',' << row.n << ',' << row.log3_count << ',' << row.log3_bound << ','
           << row.ratio << '\n';
    }
    return os.str();
}

std::string four_peg_ratio(std::int64_t value, DiskSize n) {
    if (n < 1 || value < 0) {
        throw std::invalid_argument("four_peg_ratio requires n >= 1 and value >= 0");
    }
    for (mpfr_prec_t precision = kDefaultPrecision; precision <= kMaxComparePrecision;
         precision *= 2) {
        // value / (sqrt(n) 3^sqrt(2n)); the growth term without the 1.6 factor
        const Interval denom = Interval::of_int(n, precision)
                                   .sqrt()
                                   .mul(Interval::of_int(2 * n, precision).sqrt().exp3());
        const Interval ratio = Interval::of_int(value, precision).div(denom);
        if (auto fixed = ratio.fixed_half_up(3)) {
            return *fixed;
        }
    }
    throw std::logic_error("ratio does not settle at 3 decimals");
}

} // namespace hanoi
