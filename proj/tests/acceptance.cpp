// Acceptance suite: one line per criterion, [PASS]/[FAIL], nonzero exit on
// any failure. Tolerances and budgets are pinned here, next to each check.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <pbwt/pbwt.hpp>

#include "test_util.hpp"

using namespace pbwt;
using clock_t_ = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(bool ok, const std::string& line) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << line << std::endl;
    if (!ok) ++failures;
}

double seconds_since(clock_t_::time_point t0) {
    return std::chrono::duration<double>(clock_t_::now() - t0).count();
}

// criterion 1: frozen columns of the running example, built in under 1 ms
void golden_build() {
    const testutil::charset cs("a", "xyz");
    const auto text = cs.text("xayzzazyza$");
    // a single sample this small is dominated by process warm-up (first-touch
    // page faults), so take the best complete build of a few repeats
    (void)testutil::build(cs.ab, text); // warm up the allocator
    double secs = std::numeric_limits<double>::infinity();
    std::size_t sink = 0;
    for (int rep = 0; rep < 20; ++rep) {
        const auto t0 = clock_t_::now();
        const auto fresh = testutil::build(cs.ab, text);
        secs = std::min(secs, seconds_since(t0));
        sink += fresh.lf(1); // keeps the build observable; 2 on this text
    }
    const auto b = testutil::build(cs.ab, text);
    const auto s = b.snapshot();
    const bool ok = s.l == cs.enc("a33131$22aa") && s.f == cs.enc("$aaa3131322") &&
                    s.lcp == std::vector<std::size_t>{0, 0, 2, 0, 1, 1, 1, 1, 2, 2, 0} &&
                    sink == 40 && secs < 0.001; // pinned: < 1 ms
    std::ostringstream msg;
    msg << "1. build of xayzzazyza reproduces the frozen L, F, and lcp columns (best of 20: "
        << secs * 1e6 << " us)";
    report(ok, msg.str());
}

// criterion 2: one more prepend, including the insertion rank
void golden_extend() {
    const testutil::charset cs("a", "xyz");
    auto b = testutil::build(cs.ab, cs.text("xayzzazyza$"));
    b.prepend(cs.sym('y'));
    const auto s = b.snapshot();
    const auto it = std::find(s.l.begin(), s.l.end(), alphabet::sentinel);
    const std::size_t new_row = static_cast<std::size_t>(it - s.l.begin()) + 1;
    const bool ok = s.l == cs.enc("a33121222$aa") && s.f == cs.enc("$aaa31312222") &&
                    new_row == 10; // pinned insertion rank
    report(ok, "2. prepending y onto xayzzazyza yields the frozen extended columns "
               "with the new row at rank 10");
}

// criterion 3: frozen encodings of uvvauvb
void golden_encodings() {
    const testutil::charset cs("ab", "uv");
    const auto text = cs.text("uvvauvb");
    const pv_string want_prev = {
        pv_symbol::infinity(),          pv_symbol::infinity(),
        pv_symbol::from_distance(1),    pv_symbol::from_static(cs.sym('a')),
        pv_symbol::from_distance(4),    pv_symbol::from_distance(3),
        pv_symbol::from_static(cs.sym('b')),
    };
    const bool ok =
        prev_encode(text, cs.ab) == want_prev && rot_encode(text, cs.ab) == cs.enc("212a22b");
    report(ok, "3. frozen distance and count encodings of uvvauvb");
}

// criterion 4: builder output equals definition-level construction at every
// prefix of 500 random texts; budget pinned at 60 s
void equivalence_sweep() {
    std::mt19937_64 rng(0x5eed0004);
    const auto t0 = clock_t_::now();
    std::size_t prefixes = 0;
    std::size_t mismatches = 0;
    for (int iter = 0; iter < 500; ++iter) {
        const alphabet ab(1 + iter % 4, 1 + iter % 6);
        const std::size_t total_len = 1 + rng() % 200;
        const auto body = testutil::random_body(rng, ab, total_len - 1);

        builder b(ab);
        pstring suffix{alphabet::sentinel};
        {
            const auto tb = oracle::build_tables(suffix, ab);
            const auto s = b.snapshot();
            ++prefixes;
            if (!(s.n == tb.n && s.l == tb.l && s.f == tb.f && s.lcp == tb.lcp)) ++mismatches;
        }
        for (std::size_t step = 1; step <= body.size(); ++step) {
            const symbol_t c = body[body.size() - step];
            b.prepend(c);
            suffix.insert(suffix.begin(), c);
            const auto tb = oracle::build_tables(suffix, ab);
            const auto s = b.snapshot();
            ++prefixes;
            if (!(s.n == tb.n && s.l == tb.l && s.f == tb.f && s.lcp == tb.lcp)) ++mismatches;
        }
    }
    const double secs = seconds_since(t0);
    const bool ok = mismatches == 0 && secs < 60.0; // pinned: zero mismatches, < 60 s
    std::ostringstream msg;
    msg << "4. builder equals definition-level construction at every prefix of 500 random "
           "texts ("
        << prefixes << " prefixes, " << mismatches << " mismatches, " << secs << " s)";
    report(ok, msg.str());
}

// criterion 5: p-match holds exactly when the encodings coincide, on 1000
// renamed pairs and 1000 mutated pairs
void p_match_equivalence() {
    std::mt19937_64 rng(0x5eed0005);
    std::size_t bad = 0;
    const auto agree = [&](const pstring& s, const pstring& t, const alphabet& ab) {
        const bool match = p_match(s, t, ab);
        const bool prev_eq = prev_encode(s, ab) == prev_encode(t, ab);
        const bool count_eq = rot_encode(s, ab) == rot_encode(t, ab);
        return match == prev_eq && match == count_eq;
    };
    for (int iter = 0; iter < 1000; ++iter) {
        const alphabet ab(1 + iter % 3, 2 + iter % 4);
        const auto s = testutil::random_body(rng, ab, rng() % 40);
        std::vector<symbol_t> perm(ab.pi());
        for (std::uint32_t p = 0; p < ab.pi(); ++p) perm[p] = ab.sigma() + p;
        std::shuffle(perm.begin(), perm.end(), rng);
        pstring t = s;
        for (auto& c : t) {
            if (ab.is_param(c)) c = perm[c - ab.sigma()];
        }
        if (!p_match(s, t, ab) || !agree(s, t, ab)) ++bad;
    }
    for (int iter = 0; iter < 1000; ++iter) {
        const alphabet ab(1 + iter % 3, 2 + iter % 4);
        const auto s = testutil::random_body(rng, ab, 1 + rng() % 40);
        pstring t = s;
        const int edits = 1 + static_cast<int>(rng() % 3);
        std::uniform_int_distribution<symbol_t> dist(1, ab.size() - 1);
        for (int e = 0; e < edits; ++e) t[rng() % t.size()] = dist(rng);
        if (!agree(s, t, ab)) ++bad;
    }
    report(bad == 0, "5. p-match coincides with equality of both encodings on 2000 pairs (" +
                         std::to_string(bad) + " disagreements)");
}

// criterion 6: structural properties of the sorted-rotation tables on 100
// random texts with n <= 60, checked exhaustively over rank or position pairs
void table_properties() {
    std::mt19937_64 rng(0x5eed0006);
    std::size_t bad_rangemin = 0, bad_order = 0, bad_stable = 0, bad_pairlcp = 0;
    for (int iter = 0; iter < 100; ++iter) {
        const alphabet ab(1 + iter % 4, 1 + iter % 6);
        const auto body = testutil::random_body(rng, ab, rng() % 59);
        pstring s = body;
        s.push_back(alphabet::sentinel);
        const auto tbs = oracle::build_tables(s, ab);
        const std::size_t n = tbs.n;

        // adjacent-entry minima give the lcp of any rank pair
        for (std::size_t i = 1; i <= n && bad_rangemin == 0; ++i) {
            std::size_t run_min = std::numeric_limits<std::size_t>::max();
            for (std::size_t j = i + 1; j <= n; ++j) {
                run_min = std::min(run_min, tbs.lcp[j - 2]);
                if (oracle::lcp_pair(tbs, s, ab, i, j) != run_min) {
                    ++bad_rangemin;
                    break;
                }
            }
        }

        // order characterization of the rank successor map
        if (!oracle::lf_order_check(tbs, s, ab)) ++bad_order;

        // prepending keeps the relative order of the old rotations and all
        // their pairwise lcp values
        std::uniform_int_distribution<symbol_t> dist(1, ab.size() - 1);
        pstring t = s;
        t.insert(t.begin(), dist(rng));
        const auto tbt = oracle::build_tables(t, ab);
        for (std::size_t p = 1; p <= n && bad_stable == 0; ++p) {
            for (std::size_t q = p + 1; q <= n; ++q) {
                const bool before = tbs.ra_inv[p - 1] < tbs.ra_inv[q - 1];
                const bool after = tbt.ra_inv[p - 1] < tbt.ra_inv[q - 1];
                if (before != after) {
                    ++bad_stable;
                    break;
                }
            }
        }
        std::vector<pv_string> keys_s(n), keys_t(n);
        for (std::size_t p = 1; p <= n; ++p) {
            keys_s[p - 1] = prev_encode(rotate(s, p), ab);
            keys_t[p - 1] = prev_encode(rotate(t, p), ab);
        }
        for (std::size_t p = 1; p <= n && bad_pairlcp == 0; ++p) {
            for (std::size_t q = p + 1; q <= n; ++q) {
                if (lcp_inf(keys_s[p - 1], keys_s[q - 1]) !=
                    lcp_inf(keys_t[p - 1], keys_t[q - 1])) {
                    ++bad_pairlcp;
                    break;
                }
            }
        }
    }
    const bool ok = bad_rangemin == 0 && bad_order == 0 && bad_stable == 0 && bad_pairlcp == 0;
    std::ostringstream msg;
    msg << "6. range-minimum, successor-order, prepend-order, and pairwise-lcp properties on "
           "100 texts ("
        << bad_rangemin << "/" << bad_order << "/" << bad_stable << "/" << bad_pairlcp
        << " failures)";
    report(ok, msg.str());
}

// criterion 7: dynamic sequence vs a plain vector on 10^4 operation sequences
void dynseq_fuzz() {
    std::mt19937_64 rng(0x5eed0007);
    std::size_t divergences = 0;
    for (int seq = 0; seq < 10000; ++seq) {
        const auto sigma = static_cast<std::uint32_t>(2 + rng() % 19);
        dyn_seq s(sigma);
        testutil::naive_seq ref;
        const std::size_t ops = (seq % 100 == 0) ? 1000 : 20 + rng() % 180;
        bool diverged = false;
        for (std::size_t op = 0; op < ops && !diverged; ++op) {
            const auto a = static_cast<symbol_t>(rng() % sigma);
            switch (rng() % 6) {
            case 0: {
                const std::size_t pos = rng() % (ref.v.size() + 1) + 1;
                s.insert(a, pos);
                ref.insert(a, pos);
                break;
            }
            case 1: {
                if (ref.v.empty()) break;
                const std::size_t pos = rng() % ref.v.size() + 1;
                s.erase(pos);
                ref.erase(pos);
                break;
            }
            case 2: {
                if (ref.v.empty()) break;
                const std::size_t pos = rng() % ref.v.size() + 1;
                s.set(pos, a);
                ref.set(pos, a);
                break;
            }
            case 3: {
                if (ref.v.empty()) break;
                const std::size_t pos = rng() % ref.v.size() + 1;
                diverged = s.access(pos) != ref.access(pos);
                break;
            }
            case 4: {
                const std::size_t pos = rng() % (ref.v.size() + 1);
                diverged = s.rank(a, pos) != ref.rank(a, pos);
                break;
            }
            default: {
                const std::size_t total = ref.rank(a, ref.v.size());
                if (total == 0) break;
                const std::size_t k = rng() % total + 1;
                diverged = s.select(a, k) != ref.select(a, k);
                break;
            }
            }
        }
        if (diverged || s.to_vector() != ref.v || s.size() != ref.v.size()) ++divergences;
    }
    report(divergences == 0, "7. dynamic sequence matches the naive reference on 10000 "
                             "operation sequences (" +
                                 std::to_string(divergences) + " divergences)");
}

// criterion 8: per-character build time grows sublinearly from n=2^10 to
// n=2^20; pinned as last <= 64 x first (linear growth would be 1024x), total
// budget pinned at 300 s
void scaling_smoke() {
    const std::string cmd = std::string(PBWT_CLI_BIN) +
                            " --mode bench --sigma ab --pi wxyz --seed 7"
                            " --min-n 1024 --max-n 1048576 < /dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        report(false, "8. could not launch the bench subprocess");
        return;
    }
    std::string output;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, got);
    const int status = pclose(pipe);

    std::istringstream lines(output);
    std::string line;
    std::getline(lines, line); // header
    std::vector<double> ns_per_char;
    double total_seconds = 0.0;
    std::size_t first_n = 0, last_n = 0;
    while (std::getline(lines, line)) {
        std::istringstream row(line);
        std::size_t n = 0, pi_size = 0;
        double secs = 0.0, nspc = 0.0;
        if (!(row >> n >> pi_size >> secs >> nspc)) continue;
        if (first_n == 0) first_n = n;
        last_n = n;
        total_seconds += secs;
        ns_per_char.push_back(nspc);
    }
    const bool rows_ok = status == 0 && ns_per_char.size() == 11 && first_n == 1024 &&
                         last_n == 1048576;
    const double ratio = rows_ok ? ns_per_char.back() / ns_per_char.front() : 0.0;
    const bool ok = rows_ok && ratio <= 64.0 && total_seconds < 300.0;
    std::ostringstream msg;
    msg << "8. per-character time grows sublinearly from n=2^10 to n=2^20 (";
    if (rows_ok) {
        msg << ns_per_char.front() << " -> " << ns_per_char.back()
            << " ns/char, ratio " << ratio << " <= 64, " << total_seconds << " s total)";
    } else {
        msg << "bench run failed, exit status " << status << ")";
    }
    report(ok, msg.str());
}

} // namespace

int main() {
    golden_build();
    golden_extend();
    golden_encodings();
    equivalence_sweep();
    p_match_equivalence();
    table_properties();
    dynseq_fuzz();
    scaling_smoke();
    std::cout << (8 - failures) << "/8 criteria passed" << std::endl;
    return failures == 0 ? 0 : 1;
}
