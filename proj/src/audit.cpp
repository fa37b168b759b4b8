#include "zecklucas/audit.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <set>

namespace zeck {

namespace {

void require(bool ok, const char* bound) {
    if (!ok) throw PreconditionViolated(std::string("violated bound: ") + bound);
}

void push_fib(IdentityReport& r, long long index) {
    r.rhs_terms.emplace_back(index, fibonacci_number(index));
}

void finish_report(IdentityReport& r) {
    r.rhs = 0;
    for (const auto& [idx, value] : r.rhs_terms) r.rhs += value;
    r.equal = (r.lhs == r.rhs);
    std::set<long long> seen;
    for (const auto& [idx, value] : r.rhs_terms) seen.insert(idx);
    r.terms_distinct = seen.size() == r.rhs_terms.size();
}

}  // namespace

std::string_view to_string(Prop p) {
    switch (p) {
        case Prop::P1: return "P1";
        case Prop::P2: return "P2";
        case Prop::P3: return "P3";
        case Prop::P4: return "P4";
        case Prop::P5: return "P5";
    }
    return "?";
}

std::string_view to_string(Branch b) {
    switch (b) {
        case Branch::EvenK: return "EVEN_K";
        case Branch::OddK: return "ODD_K";
        case Branch::KMod0: return "KMOD4_0";
        case Branch::KMod1: return "KMOD4_1";
        case Branch::KMod2: return "KMOD4_2";
        case Branch::KMod3: return "KMOD4_3";
    }
    return "?";
}

IdentityReport prop_product_check(int c, long long k, long long n) {
    require(c >= 1 && c <= 4, "c in 1..4");
    require(k >= 0, "k >= 0");
    require(n >= 0, "n >= 0");
    const bool even = (k % 2 == 0);

    IdentityReport r;
    r.prop = static_cast<Prop>(c);
    r.branch = even ? Branch::EvenK : Branch::OddK;
    r.k = k;
    r.n = n;

    switch (c) {
        case 1:
            require(n >= 3, "n >= 3");
            if (even) {
                require(k >= 2, "k >= 2 (even)");
                push_fib(r, n - 1);
                push_fib(r, n + 1);
                push_fib(r, 2 * k + n + 1);
                push_fib(r, 2 * k + n - 1);
            } else {
                require(k >= 3, "k >= 3 (odd)");
                push_fib(r, n - 2);
                push_fib(r, n + 1);
                push_fib(r, 2 * k + n + 1);
                for (long long j = 1; j <= k - 2; ++j) push_fib(r, 2 * j + n + 2);
            }
            break;
        case 2:
            require(n >= 5, "n >= 5");
            if (even) {
                require(k >= 4, "k >= 4 (even)");
                push_fib(r, n + 3);
                push_fib(r, n - 3);
                push_fib(r, 2 * k + n + 3);
                push_fib(r, 2 * k + n - 3);
            } else {
                require(k >= 5, "k >= 5 (odd)");
                push_fib(r, n - 4);
                push_fib(r, 2 * k + n + 3);
                for (long long j = 1; j <= 3; ++j) push_fib(r, 2 * j + n - 3);
                for (long long j = 1; j <= k - 4; ++j) push_fib(r, 2 * j + n + 4);
            }
            break;
        case 3:
            require(n >= 5, "n >= 5");
            if (even) {
                require(k >= 4, "k >= 4 (even)");
                for (long long j = 1; j <= 4; ++j) {
                    push_fib(r, 2 * j + n - 5);
                    push_fib(r, 2 * j + 2 * k + n - 5);
                }
            } else {
                require(k >= 5, "k >= 5 (odd)");
                push_fib(r, n - 4);
                push_fib(r, n + 3);
                for (long long j = 1; j <= 3; ++j) push_fib(r, 2 * j + 2 * k + n - 3);
                for (long long j = 1; j <= k - 4; ++j) push_fib(r, 2 * j + n + 4);
            }
            break;
        case 4:
            require(n >= 6, "n >= 6");
            if (even) {
                require(k >= 6, "k >= 6 (even)");
                for (long long j = 1; j <= 4; ++j) {
                    push_fib(r, 3 * j + n - 8);
                    push_fib(r, 3 * j + 2 * k + n - 8);
                }
            } else {
                require(k >= 5, "k >= 5 (odd)");
                push_fib(r, n - 4);
                push_fib(r, n - 2);
                push_fib(r, n + 1);
                for (long long j = 1; j <= 3; ++j) push_fib(r, 3 * j + 2 * k + n - 5);
                for (long long j = 1; j <= k - 5; ++j) push_fib(r, 2 * j + n + 4);
            }
            break;
    }

    r.lhs = c * lucas_number(static_cast<std::size_t>(k)) *
            lucas_number(static_cast<std::size_t>(k + n));
    r.s_term_count = r.rhs_terms.size();
    finish_report(r);
    return r;
}

IdentityReport prop5_check(long long k, long long n) {
    require(n >= 3 && n % 2 == 1, "n odd >= 3");
    require(k >= 4, "k >= 4");
    require(n == 0 || k <= std::numeric_limits<long long>::max() / n, "k*n in range");

    IdentityReport r;
    r.prop = Prop::P5;
    r.k = k;
    r.n = n;

    const BigInt num = fibonacci_number(k * n);
    const BigInt den = fibonacci_number(n);
    if (num % den != 0) throw InternalError("prop5_check: F_n does not divide F_{kn}");
    r.lhs = num / den;

    // Double sum over r in [0, floor(k/4) - 1], s in [1, n - 2].
    for (long long rr = 0; rr < k / 4; ++rr) {
        const long long hi = (k - 4 * rr - 1) * n;
        const long long lo = (k - 4 * rr - 3) * n;
        push_fib(r, hi + 1);
        for (long long s = 1; s <= n - 2; ++s) push_fib(r, hi - 2 * s);
        push_fib(r, lo + 1);
        push_fib(r, lo - 2);
    }
    r.s_term_count = r.rhs_terms.size();

    switch (k % 4) {
        case 0:
            r.branch = Branch::KMod0;
            break;
        case 1:
            r.branch = Branch::KMod1;
            push_fib(r, 2);
            break;
        case 2:
            r.branch = Branch::KMod2;
            push_fib(r, n + 1);
            push_fib(r, n - 1);
            break;
        case 3:
            r.branch = Branch::KMod3;
            push_fib(r, 2 * n + 1);
            for (long long rr = 1; rr <= n - 1; ++rr) push_fib(r, 2 * n - 2 * rr);
            break;
    }

    finish_report(r);
    return r;
}

IdentityReport prop5_lucas_form_check(long long k, long long n) {
    require(n >= 3 && n % 2 == 1, "n odd >= 3");
    require(k >= 4, "k >= 4");
    require(k % 4 == 0, "k divisible by 4");
    require(n == 0 || k <= std::numeric_limits<long long>::max() / n, "k*n in range");

    IdentityReport r;
    r.prop = Prop::P5;
    r.branch = Branch::KMod0;
    r.k = k;
    r.n = n;

    const BigInt num = fibonacci_number(k * n);
    const BigInt den = fibonacci_number(n);
    if (num % den != 0) throw InternalError("prop5_lucas_form_check: F_n does not divide F_{kn}");
    r.lhs = num / den;

    for (long long rr = 1; rr <= k / 4; ++rr) {
        const long long i1 = (k - 4 * rr + 3) * n;
        const long long i2 = (k - 4 * rr + 1) * n;
        r.rhs_terms.emplace_back(i1, lucas_number(static_cast<std::size_t>(i1)));
        r.rhs_terms.emplace_back(i2, lucas_number(static_cast<std::size_t>(i2)));
    }
    r.s_term_count = r.rhs_terms.size();
    finish_report(r);
    return r;
}

std::uint64_t AuditReport::total_failed() const {
    std::uint64_t n = 0;
    for (const auto& s : summary) n += s.failed;
    return n;
}

AuditReport run_audit(const AuditGrid& grid, ReportSink* sink) {
    AuditReport report;
    std::vector<int> props = grid.props;
    std::sort(props.begin(), props.end());
    props.erase(std::unique(props.begin(), props.end()), props.end());

    for (int prop : props) {
        if (prop < 1 || prop > 5)
            throw PreconditionViolated("violated bound: prop in 1..5");
        auto& tally = report.summary[prop - 1];
        for (long long k = grid.k_lo; k <= grid.k_hi; ++k) {
            for (long long n = grid.n_lo; n <= grid.n_hi; ++n) {
                IdentityReport rec;
                try {
                    if (prop == 5)
                        rec = grid.lucas_form ? prop5_lucas_form_check(k, n)
                                              : prop5_check(k, n);
                    else
                        rec = prop_product_check(prop, k, n);
                } catch (const PreconditionViolated&) {
                    ++tally.skipped;
                    continue;
                }
                rec.equal ? ++tally.passed : ++tally.failed;
                if (sink) sink->write(rec);
                report.records.push_back(std::move(rec));
            }
        }
    }
    if (sink) sink->finish();
    return report;
}

CsvSink::CsvSink(std::ostream& out) : out_(out) {
    out_ << "prop,branch,k,n,lhs,rhs,equal\n";
    if (!out_) throw SinkError("report sink write failed");
}

void CsvSink::write(const IdentityReport& r) {
    out_ << to_string(r.prop) << ',' << to_string(r.branch) << ',' << r.k << ','
         << r.n << ',' << r.lhs << ',' << r.rhs << ','
         << (r.equal ? "true" : "false") << '\n';
    if (!out_) throw SinkError("report sink write failed");
}

void CsvSink::finish() {
    out_.flush();
    if (!out_) throw SinkError("report sink write failed");
}

JsonSink::JsonSink(std::ostream& out) : out_(out) {
    out_ << "[";
    if (!out_) throw SinkError("report sink write failed");
}

void JsonSink::write(const IdentityReport& r) {
    out_ << (first_ ? "\n" : ",\n");
    first_ = false;
    out_ << "  {\"prop\":\"" << to_string(r.prop) << "\",\"branch\":\""
         << to_string(r.branch) << "\",\"k\":" << r.k << ",\"n\":" << r.n
         << ",\"lhs\":\"" << r.lhs << "\",\"rhs\":\"" << r.rhs
         << "\",\"equal\":" << (r.equal ? "true" : "false") << ",\"rhs_terms\":[";
    for (std::size_t i = 0; i < r.rhs_terms.size(); ++i) {
        if (i) out_ << ',';
        out_ << '[' << r.rhs_terms[i].first << ",\"" << r.rhs_terms[i].second << "\"]";
    }
    out_ << "]}";
    if (!out_) throw SinkError("report sink write failed");
}

void JsonSink::finish() {
    out_ << "\n]\n";
    out_.flush();
    if (!out_) throw SinkError("report sink write failed");
}

}  // namespace zeck
