#include "zecklucas/core.hpp"

#include <algorithm>
#include <utility>

namespace zeck {

namespace {

// Canonicity over raw signed digits; trailing zeros allowed.
bool canonical_digits(std::span<const std::int32_t> d) {
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] != 0 && d[i] != 1) return false;
        if (i + 1 < d.size() && d[i] == 1 && d[i + 1] == 1) return false;
    }
    if (d.size() >= 3 && d[0] == 1 && d[2] == 1) return false;
    return true;
}

bool canonical_digits(const std::vector<std::uint8_t>& d) {
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] > 1) return false;
        if (i + 1 < d.size() && d[i] == 1 && d[i + 1] == 1) return false;
    }
    if (d.size() >= 3 && d[0] == 1 && d[2] == 1) return false;
    return true;
}

void strip_high_zeros(std::vector<std::uint8_t>& d) {
    while (!d.empty() && d.back() == 0) d.pop_back();
}

}  // namespace

BigInt lucas_number(std::size_t i) {
    if (i == 0) return 2;
    BigInt prev = 2, cur = 1;
    for (std::size_t k = 1; k < i; ++k) {
        BigInt next = prev + cur;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

BigInt fibonacci_number(long long i) {
    if (i < -1) throw DomainError("fibonacci_number: index below -1");
    if (i == -1) return 1;
    if (i == 0) return 0;
    BigInt prev = 0, cur = 1;
    for (long long k = 1; k < i; ++k) {
        BigInt next = prev + cur;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

ZeckLucas ZeckLucas::from_digits(std::vector<std::uint8_t> digits) {
    strip_high_zeros(digits);
    if (!canonical_digits(digits))
        throw CanonicityError("digit sequence is not canonical");
    ZeckLucas z;
    z.digits_ = std::move(digits);
    return z;
}

ZeckLucas ZeckLucas::from_indices(std::initializer_list<std::size_t> indices) {
    std::size_t top = 0;
    for (std::size_t i : indices) top = std::max(top, i);
    std::vector<std::uint8_t> d(indices.size() ? top + 1 : 0, 0);
    for (std::size_t i : indices) d[i] = 1;
    return from_digits(std::move(d));
}

std::size_t ZeckLucas::top_index() const {
    if (digits_.empty()) throw InternalError("top_index of zero");
    return digits_.size() - 1;
}

WorkDigits::WorkDigits(std::vector<digit_type> digits)
    : digits_(std::move(digits)) {
    for (digit_type d : digits_) {
        if (d < kDigitMin || d > kDigitMax)
            throw InternalError("work digit outside declared bound");
    }
}

ZeckLucas encode(const BigInt& n) {
    if (n < 0) throw DomainError("encode: negative input");
    if (n == 0) return {};

    // Lucas numbers in ascending value order with their indices:
    // (1, L_1=1), (0, L_0=2), (2, L_2=3), (3, L_3=4), ...
    std::vector<std::pair<std::size_t, BigInt>> table;
    table.emplace_back(1, 1);
    table.emplace_back(0, 2);
    while (table.back().second < n) {
        const std::size_t next = table.size() == 2 ? 2 : table.back().first + 1;
        // L_2 = L_1 + L_0, L_3 = L_2 + L_1, then L_m = L_{m-1} + L_{m-2};
        // mind that positions 0/1 hold L_1/L_0 in value order.
        BigInt v;
        if (table.size() == 2)
            v = table[0].second + table[1].second;
        else if (table.size() == 3)
            v = table[2].second + table[0].second;
        else
            v = table.back().second + table[table.size() - 2].second;
        if (v > n) break;
        table.emplace_back(next, std::move(v));
    }

    std::vector<std::uint8_t> digits(
        table.size() <= 2 ? 2 : table.back().first + 1, 0);
    BigInt rem = n;
    std::size_t p = table.size();
    while (rem > 0) {
        while (table[p - 1].second > rem) --p;
        digits[table[p - 1].first] = 1;
        rem -= table[p - 1].second;
        --p;
    }
    try {
        return ZeckLucas::from_digits(std::move(digits));
    } catch (const CanonicityError&) {
        throw InternalError("greedy decomposition produced a non-canonical form");
    }
}

namespace {

template <typename Digit>
BigInt weighted_sum(const std::vector<Digit>& digits) {
    BigInt acc = 0;
    BigInt prev = 2, cur = 1;  // L_0, L_1
    for (std::size_t i = 0; i < digits.size(); ++i) {
        const BigInt& weight = (i == 0) ? prev : cur;
        if (digits[i] != 0) acc += digits[i] * weight;
        if (i >= 1) {
            BigInt next = prev + cur;
            prev = std::move(cur);
            cur = std::move(next);
        }
    }
    return acc;
}

}  // namespace

BigInt decode(const ZeckLucas& z) { return weighted_sum(z.digits()); }

BigInt decode(const WorkDigits& w) { return weighted_sum(w.digits()); }

bool validate(std::span<const std::int32_t> digits) {
    return canonical_digits(digits);
}

ZeckLucas normalize(const WorkDigits& w, RewriteStats* stats) {
    for (auto digit : w.digits()) {
        if (digit < 0) throw InternalError("normalize: negative digit");
    }

    // Iteration tripwire: 8 * (length + bit-length of the value), with the
    // bit-length replaced by a cheap integer upper bound (the value is below
    // kDigitMax * L_{len+1}, whose bit length is under 0.7*(len+1) + 6).
    const std::size_t len = w.digits().size();
    const std::uint64_t cap = 8 * (len + (7 * (len + 1)) / 10 + 6);

    std::vector<std::int32_t> d = w.digits();
    const auto ensure = [&d](std::size_t i) {
        if (d.size() <= i) d.resize(i + 1, 0);
    };
    const auto bump = [stats](std::uint64_t RewriteStats::* field) {
        if (stats) ++(stats->*field);
    };
    const auto check = [&d](std::size_t i) {
        if (d[i] < WorkDigits::kDigitMin || d[i] > WorkDigits::kDigitMax)
            throw InternalError("normalize: work digit outside declared bound");
    };

    std::uint64_t steps = 0;
    // Scan for the highest index where a rewrite applies; the pair-merge
    // target can sit one past the current top digit.
    std::size_t p = d.size();
    for (;;) {
        std::ptrdiff_t fired = -1;
        std::size_t resume = 0;
        for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(std::min(p, d.size()));
             i >= 0; --i) {
            const std::size_t u = static_cast<std::size_t>(i);
            if (u >= 2 && u < d.size() && d[u] >= 2) {
                d[u] -= 2;
                ensure(u + 1);
                ++d[u + 1];
                ++d[u - 2];
                check(u + 1);
                check(u - 2);
                bump(&RewriteStats::two_splits);
                fired = i;
                resume = u + 3;
                break;
            }
            if (u >= 2 && u - 1 < d.size() && d[u - 1] >= 1 && d[u - 2] >= 1) {
                --d[u - 1];
                --d[u - 2];
                ensure(u);
                ++d[u];
                check(u);
                bump(&RewriteStats::pair_merges);
                fired = i;
                resume = u + 2;
                break;
            }
            if (u == 2 && d.size() > 2 && d[0] >= 1 && d[2] >= 1) {
                --d[0];
                --d[2];
                ensure(3);
                ++d[3];
                ++d[1];
                check(3);
                check(1);
                bump(&RewriteStats::low_swaps);
                fired = i;
                resume = 5;
                break;
            }
            if (u == 1 && d.size() > 1 && d[1] >= 2) {
                d[1] -= 2;
                ++d[0];
                check(0);
                bump(&RewriteStats::two_at_one);
                fired = i;
                resume = 3;
                break;
            }
            if (u == 0 && !d.empty() && d[0] >= 2) {
                d[0] -= 2;
                ensure(2);
                ++d[1];
                ++d[2];
                check(1);
                check(2);
                bump(&RewriteStats::two_at_zero);
                fired = i;
                resume = 4;
                break;
            }
        }
        if (fired < 0) break;
        if (++steps > cap)
            throw InternalError("normalize: iteration cap exceeded");
        p = std::min(resume, d.size());
    }

    while (!d.empty() && d.back() == 0) d.pop_back();
    if (!canonical_digits(d))
        throw InternalError("normalize: fixpoint is not canonical");
    std::vector<std::uint8_t> out(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) out[i] = static_cast<std::uint8_t>(d[i]);
    return ZeckLucas::from_digits(std::move(out));
}

Ordering compare(const ZeckLucas& a, const ZeckLucas& b) {
    const auto& da = a.digits();
    const auto& db = b.digits();
    const std::size_t hi = std::max(da.size(), db.size());
    for (std::size_t i = hi; i-- > 2;) {
        const bool xa = a.bit(i), xb = b.bit(i);
        if (xa != xb) return xa ? Ordering::Greater : Ordering::Less;
    }
    const int pa = 2 * a.bit(0) + a.bit(1);
    const int pb = 2 * b.bit(0) + b.bit(1);
    if (pa != pb) return pa > pb ? Ordering::Greater : Ordering::Less;
    return Ordering::Equal;
}

ZeckLucas parse_bits(std::string_view text) {
    if (text.empty()) throw ParseError("empty digit string");
    std::vector<std::uint8_t> digits(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[text.size() - 1 - i];  // textual MSB first
        if (c != '0' && c != '1')
            throw ParseError(std::string("invalid character '") + c + "' in digit string");
        digits[i] = static_cast<std::uint8_t>(c - '0');
    }
    return ZeckLucas::from_digits(std::move(digits));
}

WorkDigits parse_bits_relaxed(std::string_view text) {
    if (text.empty()) throw ParseError("empty digit string");
    std::vector<std::int32_t> digits(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[text.size() - 1 - i];
        if (c != '0' && c != '1')
            throw ParseError(std::string("invalid character '") + c + "' in digit string");
        digits[i] = c - '0';
    }
    return WorkDigits(std::move(digits));
}

std::string format_bits(const ZeckLucas& z) {
    if (z.is_zero()) return "0";
    std::string out(z.digits().size(), '0');
    for (std::size_t i = 0; i < z.digits().size(); ++i) {
        if (z.digits()[i]) out[out.size() - 1 - i] = '1';
    }
    return out;
}

}  // namespace zeck
