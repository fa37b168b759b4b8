#pragma once

#include <cstddef>
#include <vector>

#include "zecklucas/core.hpp"

namespace zeck {

// All four operations work at the digit level: digitwise combine into work
// digits, then carry/borrow rewrites. Operands are never converted to plain
// integers (decoding appears only where a multiples table is sized against
// an integer bound). Pure functions over immutable values.

ZeckLucas add(const ZeckLucas& a, const ZeckLucas& b, RewriteStats* stats = nullptr);

// Throws NegativeResult if a < b.
ZeckLucas sub(const ZeckLucas& a, const ZeckLucas& b, RewriteStats* stats = nullptr);

// Lucas index carried by position p of a multiples sequence; the sequence
// runs in ascending value order L_1 < L_0 < L_2 < L_3 < ...
constexpr std::size_t multiple_index(std::size_t position) {
    return position == 0 ? 1 : position == 1 ? 0 : position;
}

// [a*L_1, a*L_0, a*L_2, a*L_3, ...] built purely by Zeckendorf addition
// (a*L_m = a*L_{m-1} + a*L_{m-2}), stopping at the first entry whose value
// exceeds bound, that entry included; the first entry is always present.
// Throws ZeroMultiplicand if a is zero.
std::vector<ZeckLucas> lucas_multiples(const ZeckLucas& a, const BigInt& bound,
                                       RewriteStats* stats = nullptr);

// Accumulates the multiples a*L_i selected by the set digits of b.
ZeckLucas mul(const ZeckLucas& a, const ZeckLucas& b, RewriteStats* stats = nullptr);

// One trial-subtraction step that fit: the quotient digit set and the
// residue left after subtracting that multiple.
struct TrialStep {
    std::size_t index;
    ZeckLucas residue;
};

struct DivModResult {
    ZeckLucas quotient;
    ZeckLucas remainder;
};

// Long division by trial subtraction over the divisor's Lucas multiples,
// largest value first. Satisfies a = q*b + r with 0 <= r < b; the quotient
// comes out canonical because each selection leaves a residue below
// b*L_{i-1}. Throws DivisionByZero if b is zero.
DivModResult divmod(const ZeckLucas& a, const ZeckLucas& b,
                    std::vector<TrialStep>* trace = nullptr,
                    RewriteStats* stats = nullptr);

}  // namespace zeck
