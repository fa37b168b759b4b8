// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "zecklucas/arithmetic.hpp"
#include "zecklucas/audit.hpp"
#include "zecklucas/core.hpp"

using namespace zeck;

namespace {

bool canonical(const ZeckLucas& v) {
    std::vector<std::int32_t> d(v.digits().begin(), v.digits().end());
    return validate(d);
}

BigInt random_up_to_10pow60(std::mt19937_64& rng) {
    const int len = 1 + static_cast<int>(rng() % 60);
    std::string s;
    for (int i = 0; i < len; ++i) s += static_cast<char>('0' + rng() % 10);
    s.erase(0, std::min(s.find_first_not_of('0'), s.size() - 1));
    return BigInt(s);
}

// --- criterion 1: worked examples from the tables, exact digit strings ---
bool golden_examples(std::string& detail) {
    bool ok = true;
    const auto expect = [&](const std::string& got, const std::string& want, const char* what) {
        if (got != want) {
            detail += std::string(what) + ": got " + got + ", want " + want + "; ";
            ok = false;
        }
    };
    expect(format_bits(add(parse_bits("10001000"), parse_bits("1000010"))), "100001010", "33+19");
    expect(format_bits(add(parse_bits("100010"), parse_bits("1000010"))), "10000001", "12+19");
    expect(format_bits(sub(parse_bits("10100001"), parse_bits("10000100"))), "10100", "42-32");
    expect(format_bits(mul(parse_bits("101001"), parse_bits("10100"))), "10100000000", "17*10");

    std::vector<TrialStep> trace;
    const auto [q, r] = divmod(encode(250), encode(17), &trace);
    expect(format_bits(r), "100010", "250 divmod 17 remainder");
    if (decode(q) != 14) {
        detail += "quotient of 250/17 decodes to " + decode(q).str() + ", want 14; ";
        ok = false;
    }
    if (trace.size() != 2 || trace[0].index != 5 || decode(trace[0].residue) != 63 ||
        trace[1].index != 2 || decode(trace[1].residue) != 12) {
        detail += "trial selections differ from indices {5,2} with residues 63,12; ";
        ok = false;
    }
    return ok;
}

// --- criterion 2: round-trip and canonicity up to 200000 ---
bool round_trip(std::string& detail) {
    for (long long n = 0; n <= 200000; ++n) {
        const ZeckLucas z = encode(n);
        if (decode(z) != n || !canonical(z)) {
            detail = "failed at n=" + std::to_string(n);
            return false;
        }
    }
    return true;
}

// --- criterion 3: valid digit sequences over indices 0..k-1 decode
//     bijectively onto [0, L_k), for each k in [1,20] ---
bool interval_bijection(std::string& detail) {
    std::vector<long long> lucas{2, 1};
    while (lucas.size() <= 22) lucas.push_back(lucas[lucas.size() - 1] + lucas[lucas.size() - 2]);

    bool all_ok = true;
    std::vector<int> bad;
    for (int k = 1; k <= 20; ++k) {
        std::vector<long long> values;
        for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
            bool valid = true;
            for (int i = 0; i + 1 < k && valid; ++i)
                if ((mask >> i & 1) && (mask >> (i + 1) & 1)) valid = false;
            if (k >= 3 && (mask & 1) && (mask >> 2 & 1)) valid = false;
            if (!valid) continue;
            long long v = 0;
            for (int i = 0; i < k; ++i)
                if (mask >> i & 1) v += lucas[i];
            values.push_back(v);
        }
        std::sort(values.begin(), values.end());
        bool ok = static_cast<long long>(values.size()) == lucas[k];
        for (std::size_t i = 0; ok && i < values.size(); ++i)
            if (values[i] != static_cast<long long>(i)) ok = false;
        if (!ok) {
            all_ok = false;
            bad.push_back(k);
            std::ostringstream os;
            os << "k=" << k << ": " << values.size() << " valid sequences decode to {";
            for (std::size_t i = 0; i < std::min<std::size_t>(values.size(), 4); ++i)
                os << (i ? "," : "") << values[i];
            if (values.size() > 4) os << ",...";
            os << "}, want exactly [0," << lucas[k] << "); ";
            detail += os.str();
        }
    }
    if (!all_ok && bad.size() == 1 && bad[0] == 1)
        detail += "k in [2,20] all pass";
    return all_ok;
}

// --- criterion 4: differential against big-integer arithmetic ---
bool differential(std::string& detail) {
    std::vector<ZeckLucas> enc;
    enc.reserve(3001);
    for (long long n = 0; n <= 3000; ++n) enc.push_back(encode(n));

    for (long long a = 0; a <= 1000; ++a) {
        for (long long b = 0; b <= 1000; ++b) {
            const ZeckLucas s = add(enc[a], enc[b]);
            if (decode(s) != a + b || !canonical(s)) {
                detail = "add failed at " + std::to_string(a) + "+" + std::to_string(b);
                return false;
            }
            if (a >= b) {
                const ZeckLucas d = sub(enc[a], enc[b]);
                if (decode(d) != a - b || !canonical(d)) {
                    detail = "sub failed at " + std::to_string(a) + "-" + std::to_string(b);
                    return false;
                }
            }
            const ZeckLucas p = mul(enc[a], enc[b]);
            if (decode(p) != a * b || !canonical(p)) {
                detail = "mul failed at " + std::to_string(a) + "*" + std::to_string(b);
                return false;
            }
        }
    }
    for (long long a = 0; a <= 3000; ++a) {
        for (long long b = 1; b <= 300; ++b) {
            const auto [q, r] = divmod(enc[a], enc[b]);
            if (decode(q) != a / b || decode(r) != a % b || !canonical(q) || !canonical(r)) {
                detail = "divmod failed at " + std::to_string(a) + "/" + std::to_string(b);
                return false;
            }
        }
    }

    std::mt19937_64 rng(0x2ec4e2d0);
    for (int round = 0; round < 100000; ++round) {
        BigInt x = random_up_to_10pow60(rng);
        BigInt y = random_up_to_10pow60(rng);
        if (x < y) std::swap(x, y);
        const ZeckLucas a = encode(x), b = encode(y);
        const ZeckLucas s = add(a, b);
        const ZeckLucas d = sub(a, b);
        const ZeckLucas p = mul(a, b);
        if (decode(s) != x + y || !canonical(s) || decode(d) != x - y || !canonical(d) ||
            decode(p) != x * y || !canonical(p)) {
            detail = "random add/sub/mul failed at round " + std::to_string(round);
            return false;
        }
        if (y != 0) {
            const auto [q, r] = divmod(a, b);
            if (decode(q) != x / y || decode(r) != x % y || !canonical(q) || !canonical(r)) {
                detail = "random divmod failed at round " + std::to_string(round);
                return false;
            }
        }
    }
    return true;
}

// --- criterion 5: normalize agrees with greedy encode, digit for digit ---
bool normalize_agreement(std::string& detail) {
    std::mt19937_64 rng(0xace5);
    for (int round = 0; round < 100000; ++round) {
        std::vector<std::int32_t> w(rng() % 61);
        for (auto& d : w) d = static_cast<std::int32_t>(rng() % 4);
        const WorkDigits work(w);
        if (normalize(work) != encode(decode(work))) {
            detail = "disagreement at round " + std::to_string(round);
            return false;
        }
    }
    return true;
}

// --- criterion 6: comparator against integer order ---
bool comparator(std::string& detail) {
    std::vector<ZeckLucas> enc;
    enc.reserve(2001);
    for (long long n = 0; n <= 2000; ++n) enc.push_back(encode(n));
    for (long long a = 0; a <= 2000; ++a) {
        for (long long b = 0; b <= 2000; ++b) {
            const Ordering want =
                a < b ? Ordering::Less : a > b ? Ordering::Greater : Ordering::Equal;
            if (compare(enc[a], enc[b]) != want) {
                detail = "compare failed at " + std::to_string(a) + " vs " + std::to_string(b);
                return false;
            }
        }
    }
    return true;
}

// --- criterion 7: identity audit grids all equal ---
bool audit_grids(std::string& detail) {
    const auto run = [&detail](AuditGrid grid, std::uint64_t want_passed, const char* name) {
        const AuditReport report = run_audit(grid);
        std::uint64_t passed = 0, failed = 0;
        for (const auto& s : report.summary) {
            passed += s.passed;
            failed += s.failed;
        }
        if (failed != 0 || passed != want_passed) {
            std::ostringstream os;
            os << name << ": passed=" << passed << " (want " << want_passed
               << ") failed=" << failed << "; ";
            detail += os.str();
            return false;
        }
        return true;
    };

    bool ok = true;
    ok &= run({{1}, 3, 20, 3, 12, false}, 180, "P1 grid");
    ok &= run({{2, 3}, 4, 20, 5, 12, false}, 272, "P2/P3 grid");
    ok &= run({{4}, 5, 20, 6, 12, false}, 112, "P4 grid");
    ok &= run({{5}, 4, 16, 3, 9, false}, 52, "P5 grid");

    // desk-verified instances
    ok &= prop_product_check(1, 4, 3).lhs == 203 && prop_product_check(1, 4, 3).equal;
    ok &= prop_product_check(1, 3, 3).lhs == 72 && prop_product_check(1, 3, 3).equal;
    ok &= prop_product_check(2, 4, 5).lhs == 1064 && prop_product_check(2, 4, 5).equal;
    ok &= prop5_check(4, 3).lhs == 72 && prop5_check(4, 3).equal;
    ok &= prop5_check(5, 3).lhs == 305 && prop5_check(5, 3).equal;
    return ok;
}

// --- criterion 8: the compact Lucas form's discrepancy is recorded ---
bool erratum_detection(std::string& detail) {
    const IdentityReport r = prop5_lucas_form_check(4, 3);
    if (r.lhs != 72 || r.rhs != 80 || r.equal) {
        detail = "lhs=" + r.lhs.str() + " rhs=" + r.rhs.str();
        return false;
    }
    // recorded through the audit runner as a report row, not an assertion
    AuditGrid grid{{5}, 4, 4, 3, 3, true};
    std::ostringstream out;
    CsvSink sink(out);
    const AuditReport report = run_audit(grid, &sink);
    if (report.for_prop(Prop::P5).failed != 1 ||
        out.str().find("P5,KMOD4_0,4,3,72,80,false") == std::string::npos) {
        detail = "audit did not record the mismatch row";
        return false;
    }
    std::ostringstream out2;
    CsvSink sink2(out2);
    run_audit(grid, &sink2);
    if (out.str() != out2.str()) {
        detail = "diagnostic output is not deterministic";
        return false;
    }
    return true;
}

struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    bool (*fn)(std::string&);
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {1, "golden worked examples, exact digit strings", 1.0, golden_examples},
        {2, "round-trip and canonicity for n in [0,200000]", 10.0, round_trip},
        {3, "canonical forms over indices 0..k-1 cover [0,L_k), k in [1,20]", 10.0,
         interval_bijection},
        {4, "differential arithmetic against big-integer oracle", 300.0, differential},
        {5, "normalize agrees with greedy encode on 1e5 random inputs", 30.0,
         normalize_agreement},
        {6, "comparator matches integer order on [0,2000]^2", 30.0, comparator},
        {7, "identity audit grids all report equal", 10.0, audit_grids},
        {8, "compact Lucas form discrepancy is recorded, not asserted", 1.0, erratum_detection},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        std::string detail;
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.fn(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (ok && elapsed >= c.limit_seconds) {
            ok = false;
            detail = "time limit exceeded";
        }
        std::printf("criterion %d: %s  %s (%.2f s, limit %.0f s)\n", c.id, ok ? "PASS" : "FAIL",
                    c.name, elapsed, c.limit_seconds);
        if (!ok && !detail.empty()) std::printf("    %s\n", detail.c_str());
        if (!ok) ++failures;
    }
    std::printf("acceptance: %d/8 criteria passed\n", 8 - failures);
    return failures == 0 ? 0 : 1;
}
