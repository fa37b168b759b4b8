#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "zecklucas/errors.hpp"

namespace zeck {

using BigInt = boost::multiprecision::cpp_int;

// L_0 = 2, L_1 = 1, L_n = L_{n-1} + L_{n-2}.
BigInt lucas_number(std::size_t i);

// F_0 = 0, F_1 = 1, extended down to F_{-1} = 1 so that
// L_n = F_{n+1} + F_{n-1} already holds at n = 0.
// Throws DomainError for i < -1.
BigInt fibonacci_number(long long i);

enum class Ordering { Less, Equal, Greater };

// Canonical digit sequence over Lucas weights, least significant index
// first: digits()[i] carries weight L_i. Canonical means all digits are
// 0/1, no two adjacent indices are both set, indices 0 and 2 are never
// both set, and the highest stored digit is 1. Zero is the empty sequence.
//
// Instances are immutable; every operation in this library is a pure
// function of its inputs, so values can be shared freely across threads.
class ZeckLucas {
public:
    ZeckLucas() = default;  // zero

    // Throws CanonicityError if the digits are not canonical.
    // Trailing (high-index) zeros are stripped, not rejected.
    static ZeckLucas from_digits(std::vector<std::uint8_t> digits);

    // Convenience: canonical value with exactly these indices set.
    static ZeckLucas from_indices(std::initializer_list<std::size_t> indices);

    const std::vector<std::uint8_t>& digits() const noexcept { return digits_; }
    bool is_zero() const noexcept { return digits_.empty(); }

    // Highest set index; throws InternalError on zero.
    std::size_t top_index() const;

    // Digit at index i, 0 beyond the stored length.
    bool bit(std::size_t i) const noexcept {
        return i < digits_.size() && digits_[i] != 0;
    }

    friend bool operator==(const ZeckLucas&, const ZeckLucas&) = default;

private:
    std::vector<std::uint8_t> digits_;
};

// Relaxed signed digit counts over Lucas weights, one per index; the value
// is the weighted digit sum. Used as the intermediate state of the digit
// algorithms (carries and borrows live here). Each digit must stay within
// [kDigitMin, kDigitMax]; anything outside is an internal error.
class WorkDigits {
public:
    using digit_type = std::int32_t;
    static constexpr digit_type kDigitMin = -4;
    static constexpr digit_type kDigitMax = 8;

    WorkDigits() = default;
    explicit WorkDigits(std::vector<digit_type> digits);

    const std::vector<digit_type>& digits() const noexcept { return digits_; }

private:
    std::vector<digit_type> digits_;
};

// Counts of digit-level rewrites. Tests use these to confirm a result was
// produced by the rewrite engine and not by integer conversion.
struct RewriteStats {
    std::uint64_t pair_merges = 0;    // L_{i-1} + L_{i-2} -> L_i
    std::uint64_t two_splits = 0;     // 2 L_i -> L_{i+1} + L_{i-2}, i >= 2
    std::uint64_t two_at_one = 0;     // 2 L_1 -> L_0
    std::uint64_t two_at_zero = 0;    // 2 L_0 -> L_2 + L_1
    std::uint64_t low_swaps = 0;      // L_0 + L_2 -> L_1 + L_3
    std::uint64_t borrow_splits = 0;  // L_p -> L_{p-1} + L_{p-2}
    std::uint64_t borrow_folds = 0;   // L_0 <-> 2 L_1 exchanges

    std::uint64_t total() const noexcept {
        return pair_merges + two_splits + two_at_one + two_at_zero +
               low_swaps + borrow_splits + borrow_folds;
    }
};

// Greedy decomposition: repeatedly take the largest Lucas number not
// exceeding the remainder (largest by value, so the candidate order near
// the bottom is ..., L_3, L_2, L_0, L_1). Throws DomainError if n < 0.
ZeckLucas encode(const BigInt& n);

BigInt decode(const ZeckLucas& z);
BigInt decode(const WorkDigits& w);

// True iff the digits are all 0/1, contain no two adjacent ones, and do
// not set both index 0 and index 2. Trailing zeros are allowed.
bool validate(std::span<const std::int32_t> digits);

// Reduces nonnegative work digits to the canonical form of the same value
// by value-preserving rewrites, applied at the highest applicable index
// until fixpoint. Throws InternalError on a negative input digit, a digit
// leaving the declared bound, or a blown iteration cap (none of which can
// happen for digits produced by this library).
ZeckLucas normalize(const WorkDigits& w, RewriteStats* stats = nullptr);

// Value order without decoding. The top set index decides for indices
// >= 2 (any canonical value with top index i is below L_{i+1}); the
// residual pair (e1, e0) is compared by its value 2*e0 + e1, which is
// where plain index order would get L_0 = 2 vs L_1 = 1 backwards.
Ordering compare(const ZeckLucas& a, const ZeckLucas& b);

// Textual form is most-significant index first ("10001000" is 33).
// parse_bits accepts leading zeros and "0" for zero; it throws ParseError
// on any character other than 0/1 or an empty string, and CanonicityError
// if the digits are not canonical. format_bits emits no leading zeros and
// the single character "0" for zero.
ZeckLucas parse_bits(std::string_view text);
std::string format_bits(const ZeckLucas& z);

// Relaxed parse: same alphabet, any 0/1 pattern, returned as work digits.
WorkDigits parse_bits_relaxed(std::string_view text);

}  // namespace zeck
