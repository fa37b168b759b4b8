#include "zecklucas/arithmetic.hpp"

#include <algorithm>

namespace zeck {

namespace {

std::vector<std::int32_t> digitwise(const ZeckLucas& a, const ZeckLucas& b, int sign_b) {
    const std::size_t n = std::max(a.digits().size(), b.digits().size());
    std::vector<std::int32_t> d(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        d[i] = static_cast<std::int32_t>(a.bit(i)) + sign_b * static_cast<std::int32_t>(b.bit(i));
    return d;
}

// Builds the next multiple in the value-ordered sequence
// [a*L_1, a*L_0, a*L_2, ...]: L_2 = L_1 + L_0, L_3 = L_2 + L_1, then
// L_m = L_{m-1} + L_{m-2}; positions 0/1 hold the L_1/L_0 entries.
ZeckLucas next_multiple(const std::vector<ZeckLucas>& seq, const ZeckLucas& a,
                        RewriteStats* stats) {
    switch (seq.size()) {
        case 0: return a;
        case 1: return add(a, a, stats);
        case 2: return add(seq[0], seq[1], stats);
        case 3: return add(seq[2], seq[0], stats);
        default: return add(seq[seq.size() - 1], seq[seq.size() - 2], stats);
    }
}

}  // namespace

ZeckLucas add(const ZeckLucas& a, const ZeckLucas& b, RewriteStats* stats) {
    return normalize(WorkDigits(digitwise(a, b, +1)), stats);
}

ZeckLucas sub(const ZeckLucas& a, const ZeckLucas& b, RewriteStats* stats) {
    if (compare(a, b) == Ordering::Less)
        throw NegativeResult("sub: minuend is smaller than subtrahend");

    std::vector<std::int32_t> d = digitwise(a, b, -1);
    const auto bump = [stats](std::uint64_t RewriteStats::* field, std::uint64_t by = 1) {
        if (stats) (stats->*field) += by;
    };

    // Clear each -1 from the most significant end down, borrowing from the
    // nearest unit above and walking it down two indices per split
    // (L_p = L_{p-1} + L_{p-2}). Below index 2 the split does not exist;
    // the exchanges L_3 = 2 L_1 + L_0 and L_0 = 2 L_1 close the gap.
    for (std::size_t t = d.size(); t-- > 0;) {
        if (d[t] != -1) continue;
        std::size_t j = 0;
        bool found = false;
        for (std::size_t jj = std::max(t + 1, std::size_t{2}); jj < d.size(); ++jj) {
            if (d[jj] >= 1) {
                j = jj;
                found = true;
                break;
            }
        }
        if (found) {
            --d[j];
            std::size_t p = j;
            for (;;) {
                if (p == t) {
                    ++d[t];
                    break;
                }
                if (p == t + 1) {
                    // t >= 1 here: a unit never steps onto index 1 while
                    // aiming at index 0 (the p == 3 case below catches it).
                    ++d[t];
                    ++d[t - 1];
                    bump(&RewriteStats::borrow_splits);
                    break;
                }
                if (t == 0 && p == 3) {
                    // L_3 -> L_2 + L_1, then L_2 -> L_1 + L_0.
                    d[1] += 2;
                    ++d[0];
                    bump(&RewriteStats::borrow_splits, 2);
                    break;
                }
                ++d[p - 1];
                p -= 2;
                bump(&RewriteStats::borrow_splits);
            }
        } else if (t == 1 && d[0] >= 1) {
            --d[0];
            d[1] += 2;
            bump(&RewriteStats::borrow_folds);
        } else if (t == 0 && d.size() > 1 && d[1] >= 2) {
            d[1] -= 2;
            ++d[0];
            bump(&RewriteStats::borrow_folds);
        } else {
            throw InternalError("sub: no borrow source for a deficit");
        }
    }
    return normalize(WorkDigits(std::move(d)), stats);
}

std::vector<ZeckLucas> lucas_multiples(const ZeckLucas& a, const BigInt& bound,
                                       RewriteStats* stats) {
    if (a.is_zero()) throw ZeroMultiplicand("lucas_multiples: zero multiplicand");
    std::vector<ZeckLucas> seq;
    seq.push_back(a);
    while (decode(seq.back()) <= bound)
        seq.push_back(next_multiple(seq, a, stats));
    return seq;
}

ZeckLucas mul(const ZeckLucas& a, const ZeckLucas& b, RewriteStats* stats) {
    if (a.is_zero() || b.is_zero()) return {};

    const std::size_t top = b.top_index();
    // Positions needed so that every set index of b has its multiple:
    // index 1 -> position 0, index 0 -> position 1, index i>=2 -> position i.
    const std::size_t count = top == 1 ? 1 : top == 0 ? 2 : top + 1;
    std::vector<ZeckLucas> seq;
    seq.reserve(count);
    while (seq.size() < count) seq.push_back(next_multiple(seq, a, stats));

    ZeckLucas acc;
    for (std::size_t pos = 0; pos < seq.size(); ++pos) {
        if (b.bit(multiple_index(pos))) acc = add(acc, seq[pos], stats);
    }
    return acc;
}

DivModResult divmod(const ZeckLucas& a, const ZeckLucas& b,
                    std::vector<TrialStep>* trace, RewriteStats* stats) {
    if (b.is_zero()) throw DivisionByZero("divmod: division by zero");

    // Multiples of b up to the first one exceeding a (the trial sentinel);
    // sized by digit comparison, not by decoded value.
    std::vector<ZeckLucas> seq;
    seq.push_back(b);
    while (compare(seq.back(), a) != Ordering::Greater)
        seq.push_back(next_multiple(seq, b, stats));

    ZeckLucas residue = a;
    std::vector<std::size_t> picks;
    for (std::size_t pos = seq.size(); pos-- > 0;) {
        if (compare(seq[pos], residue) == Ordering::Greater) continue;
        residue = sub(residue, seq[pos], stats);
        picks.push_back(multiple_index(pos));
        if (trace) trace->push_back({multiple_index(pos), residue});
    }

    std::vector<std::uint8_t> q(picks.empty() ? 0 : *std::max_element(picks.begin(), picks.end()) + 1, 0);
    for (std::size_t i : picks) q[i] = 1;
    try {
        return {ZeckLucas::from_digits(std::move(q)), std::move(residue)};
    } catch (const CanonicityError&) {
        throw InternalError("divmod: trial subtraction produced a non-canonical quotient");
    }
}

}  // namespace zeck
