#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zecklucas/core.hpp"

namespace zeck {

// Numerical verification harness for the five product/quotient identities.
// Every evaluation is exact integer arithmetic over a parameter grid; the
// harness only reports, it never asserts.

enum class Prop { P1 = 1, P2, P3, P4, P5 };

// P1-P4 split on the parity of k; P5 splits on k mod 4.
enum class Branch { EvenK, OddK, KMod0, KMod1, KMod2, KMod3 };

std::string_view to_string(Prop p);
std::string_view to_string(Branch b);

// One audited grid point: both side values and the right-hand side spelled
// out term by term as (Fibonacci index, value) pairs. For P5 the first
// s_term_count terms come from the double sum, the rest from the tail term
// selected by k mod 4. Records from the compact Lucas-form diagnostic carry
// (Lucas index, value) pairs instead.
struct IdentityReport {
    Prop prop = Prop::P1;
    Branch branch = Branch::EvenK;
    long long k = 0;
    long long n = 0;
    BigInt lhs;
    BigInt rhs;
    bool equal = false;
    std::vector<std::pair<long long, BigInt>> rhs_terms;
    std::size_t s_term_count = 0;
    bool terms_distinct = true;  // pairwise-distinct term indices (flag only)
};

// lhs = c * L_k * L_{k+n} against the printed Fibonacci sum for the parity
// branch of k; a "+-m" subscript contributes both the +m and -m terms, and
// empty summations contribute nothing. Throws PreconditionViolated naming
// the violated bound. c selects the identity: 1 -> P1, ..., 4 -> P4.
IdentityReport prop_product_check(int c, long long k, long long n);

// lhs = F_{kn} / F_n (always exact) against the detailed S_{k,n} + e_{k,n}
// form. Requires n odd >= 3 and k >= 4.
IdentityReport prop5_check(long long k, long long n);

// Literal evaluation of the compact Lucas-number form for F_{kn} / F_n,
// defined for k divisible by 4 and n odd. Known to disagree with the exact
// quotient (already at k=4, n=3 it gives 80 against 72); kept as a
// diagnostic so the discrepancy is recorded, not asserted.
IdentityReport prop5_lucas_form_check(long long k, long long n);

struct PropSummary {
    std::uint64_t passed = 0;
    std::uint64_t failed = 0;
    std::uint64_t skipped = 0;  // grid points outside the preconditions
};

struct AuditReport {
    std::vector<IdentityReport> records;
    std::array<PropSummary, 5> summary{};  // summary[0] is P1

    PropSummary& for_prop(Prop p) { return summary[static_cast<int>(p) - 1]; }
    const PropSummary& for_prop(Prop p) const { return summary[static_cast<int>(p) - 1]; }
    std::uint64_t total_failed() const;
};

struct AuditGrid {
    std::vector<int> props;  // subset of 1..5, evaluated in ascending order
    long long k_lo = 0, k_hi = -1;
    long long n_lo = 0, n_hi = -1;
    bool lucas_form = false;  // audit P5's compact Lucas form instead of S+e
};

class ReportSink {
public:
    virtual ~ReportSink() = default;
    virtual void write(const IdentityReport& r) = 0;
    virtual void finish() {}
};

// prop,branch,k,n,lhs,rhs,equal -- integers in decimal, equal as true/false.
class CsvSink final : public ReportSink {
public:
    explicit CsvSink(std::ostream& out);
    void write(const IdentityReport& r) override;
    void finish() override;

private:
    std::ostream& out_;
};

// Array of objects with the CSV fields plus rhs_terms as [index, value]
// pairs; lhs/rhs/values are decimal strings since they outgrow 64 bits.
class JsonSink final : public ReportSink {
public:
    explicit JsonSink(std::ostream& out);
    void write(const IdentityReport& r) override;
    void finish() override;

private:
    std::ostream& out_;
    bool first_ = true;
};

// Evaluates every in-precondition grid point, counts the rest as skipped,
// and emits records in (prop, k, n) order to the sink, if one is given.
AuditReport run_audit(const AuditGrid& grid, ReportSink* sink = nullptr);

}  // namespace zeck
