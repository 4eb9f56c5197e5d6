// Acceptance suite: one pass/fail line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cycloseq/analysis.hpp"

using namespace cycloseq;

namespace {

int g_failures = 0;
std::vector<std::string> g_notes;

void note(const std::string& s) { g_notes.push_back(s); }

void run(const char* name, const std::function<bool()>& body) {
    g_notes.clear();
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s: %s (%.2fs)\n", name, ok ? "PASS" : "FAIL", secs);
    for (const std::string& s : g_notes) std::printf("    %s\n", s.c_str());
    if (!ok) ++g_failures;
}

const std::vector<std::pair<std::uint64_t, std::uint64_t>>& grid_pf() {
    static const std::vector<std::pair<std::uint64_t, std::uint64_t>> grid = {
        {5, 2}, {5, 4}, {7, 2}, {11, 2}, {13, 4}, {17, 4}, {17, 8}};
    return grid;
}

// 1. Worked examples: every published bitstring byte-exact, every LC exact.
bool criterion1() {
    bool ok = true;
    for (const ExampleCheck& chk : reproduce_examples()) {
        if (!chk.bits_ok) {
            ok = false;
            note(chk.example->name + ": bitstring diverges at index " +
                 std::to_string(chk.first_divergence));
        } else if (!chk.example->erratum.empty()) {
            std::string idx;
            for (std::uint64_t i : chk.example->erratum) idx += " " + std::to_string(i);
            note(chk.example->name + ": matches up to the documented listing misprint at index" +
                 idx + " (printed bits contradict the class structure there)");
        }
        if (!chk.lc_ok) {
            ok = false;
            note(chk.example->name + ": lc = " + std::to_string(chk.lc_measured) + ", expected " +
                 std::to_string(chk.example->lc));
        }
    }
    return ok;
}

bool check_table(TableId id, const char* label) {
    bool ok = true;
    for (const TableRowCheck& chk : reproduce_table(id)) {
        if (!chk.ok) {
            ok = false;
            note(std::string(label) + " p=" + std::to_string(chk.row->p) +
                 " m=" + std::to_string(chk.row->m) + " g=" + std::to_string(chk.row->g) +
                 " b=" + std::to_string(chk.b) + ": lc = " + std::to_string(chk.lc_measured) +
                 ", expected " + std::to_string(chk.row->lc));
        }
    }
    return ok;
}

bool criterion2() { return check_table(TableId::One, "table1"); }
bool criterion3() { return check_table(TableId::Two, "table2"); }

// 4. BM and the GCD formula agree on random periods; the minimal polynomial
// regenerates the stream.
bool criterion4() {
    std::mt19937_64 rng(20240817);
    bool ok = true;
    int trials = 0;
    auto check_one = [&](const F2Poly& cn, std::uint64_t n) {
        ++trials;
        const LCResult g = lc_via_gcd(cn, n);
        const LCResult b = berlekamp_massey(cn, n);
        if (g.lc != b.lc) {
            ok = false;
            note("N=" + std::to_string(n) + ": gcd lc " + std::to_string(g.lc) + " != bm lc " +
                 std::to_string(b.lc));
            return;
        }
        if (!recurrence_regenerates(*g.minimal_poly, cn, n)) {
            ok = false;
            note("N=" + std::to_string(n) + ": minimal polynomial fails to regenerate");
        }
    };
    // edges first
    check_one(F2Poly::zero(), 16);
    check_one(F2Poly::one(), 16);
    check_one(F2Poly::from_coeff_string(std::string(17, '1')), 17);
    std::uniform_int_distribution<std::uint64_t> pick_n(8, 2000);
    for (int t = 0; t < 200; ++t) {
        const std::uint64_t n = pick_n(rng);
        F2Poly cn;
        for (std::uint64_t i = 0; i < n; ++i) {
            if (rng() & 1) cn.set_coeff(i, true);
        }
        check_one(cn, n);
    }
    note(std::to_string(trials) + " sequences checked");
    return ok;
}

// 5. Structural invariants across the (p, f) x m x b grid.
bool criterion5() {
    bool ok = true;
    std::uint64_t cases = 0;
    for (auto [p, f] : grid_pf()) {
        for (unsigned m : {1u, 2u}) {
            const std::uint64_t dm = SequenceParams::make(p, m, f, 0).d(m);
            for (std::uint64_t b = 0; b < dm; ++b) {
                ++cases;
                const SequenceParams sp = SequenceParams::make(p, m, f, b);
                const PartitionReport part = verify_partitions(sp);
                if (!part) {
                    ok = false;
                    note("p=" + std::to_string(p) + " f=" + std::to_string(f) +
                         " m=" + std::to_string(m) + ": " + part.detail);
                    continue;
                }
                for (Variant v : {Variant::Standard, Variant::Modified}) {
                    const SupportSet sup = build_support(sp, v);
                    const BinarySequence seq = generate(sp, v);
                    const SequenceParams shifted = SequenceParams::make(p, m, f, b + dm, sp.g);
                    const bool good = sup.ones_count() == sp.pm && seq.weight() == sp.pm &&
                                      seq.bit(0) && !seq.bit(sp.pm) &&
                                      generate(shifted, v).to_string() == seq.to_string();
                    if (!good) {
                        ok = false;
                        note("p=" + std::to_string(p) + " f=" + std::to_string(f) +
                             " m=" + std::to_string(m) + " b=" + std::to_string(b) +
                             " variant=" + (v == Variant::Standard ? "standard" : "modified") +
                             ": structural invariant failed");
                    }
                }
            }
        }
    }
    note(std::to_string(cases) + " parameter sets checked");
    return ok;
}

// 6. Field identities in GF(2^n) for every n <= 64 configuration of the grid.
bool criterion6() {
    bool ok = true;
    struct Config {
        std::uint64_t p;
        unsigned m;
        std::uint64_t f;
        std::uint64_t b;
    };
    const std::vector<Config> configs = {
        {5, 2, 2, 0}, {5, 2, 2, 3}, {7, 2, 2, 0}, {31, 1, 2, 0}, {5, 1, 4, 0}, {5, 2, 4, 1}};
    for (const Config& cfg : configs) {
        const SequenceParams sp = SequenceParams::make(cfg.p, cfg.m, cfg.f, cfg.b);
        const CaseClass cls = classify_case(sp);
        if (cls.n > 64) {
            ok = false;
            note("config unexpectedly out of field range");
            continue;
        }
        auto fail = [&](const std::string& what) {
            ok = false;
            note("p=" + std::to_string(cfg.p) + " m=" + std::to_string(cfg.m) +
                 " f=" + std::to_string(cfg.f) + " b=" + std::to_string(cfg.b) + ": " + what);
        };

        struct Outcome {
            std::uint64_t zs = 0, zst = 0;
            bool subfield_pass = false;
            int subfield_case = 0;
        };
        Outcome outcomes[2];
        for (int which = 0; which < 2; ++which) {
            const FieldCtx ctx =
                FieldCtx::make(sp, find_irreducible(static_cast<unsigned>(cls.n), which));
            const FieldElement beta = find_root_of_unity(ctx);

            // Lemma sums
            for (std::uint64_t v = 0; v < sp.d(sp.m); ++v) {
                if ((half_union_sum(ctx, beta, sp, v, 1, 1) ^
                     half_union_sum(ctx, beta, sp, v + sp.delta(1), 1, 1)) != 1)
                    fail("level-1 pair sum != 1 at v=" + std::to_string(v));
                for (unsigned j = 2; j <= sp.m; ++j) {
                    if ((half_union_sum(ctx, beta, sp, v, j, 1) ^
                         half_union_sum(ctx, beta, sp, v + sp.delta(j), j, 1)) != 0)
                        fail("level-" + std::to_string(j) + " pair sum != 0");
                }
            }

            // scalar values at exponents divisible by p^j
            for (unsigned l = 1; l < sp.m; ++l) {
                for (unsigned j = 1; j <= l; ++j) {
                    const std::uint64_t a = sp.p_pow(l);  // u = 1
                    const FieldElement scalar =
                        ((sp.p_pow(j - 1) * (sp.p - 1) / 2) % 2 == 1) ? 1 : 0;
                    if (half_union_sum(ctx, beta, sp, sp.b, j, a) != scalar)
                        fail("scalar value mismatch at j=" + std::to_string(j));
                }
            }

            // Eq. (13)
            for (unsigned l = 1; l <= sp.m; ++l) {
                for (std::uint64_t v = 0; v < sp.d(l); ++v) {
                    if ((level_sum(ctx, beta, sp, l, v) ^ level_sum(ctx, beta, sp, l, v + sp.delta(l))) !=
                        1)
                        fail("level-sum pair != 1 at l=" + std::to_string(l));
                }
            }

            // full reconstruction of s(beta^a) and s~(beta^a) for every a
            const BinarySequence s = generate(sp, Variant::Standard);
            const BinarySequence st = generate(sp, Variant::Modified);
            const RootEvaluation evs = eval_support_at_roots(ctx, beta, s);
            const RootEvaluation evst = eval_support_at_roots(ctx, beta, st);
            if (evs.values[0] != 1 || evst.values[0] != 1) fail("value at a=0 is not 1");
            for (std::uint64_t a = 1; a < sp.pm; ++a) {
                unsigned l = 0;
                std::uint64_t u = a;
                while (u % sp.p == 0) {
                    u /= sp.p;
                    ++l;
                }
                const std::uint64_t k =
                    discrete_log(sp.g, u, sp.p_pow(sp.m - l)) % sp.d(sp.m - l);
                FieldElement sum = 0;
                for (unsigned lev = 1; lev <= sp.m - l; ++lev)
                    sum ^= half_union_sum(ctx, beta, sp, sp.b + k, lev, 1);
                const FieldElement predicted_st = sum ^ ctx.mul(sum, sum);
                if (evst.values[a] != predicted_st)
                    fail("modified reconstruction mismatch at a=" + std::to_string(a));
                if (evs.values[a] != (predicted_st ^ 1))
                    fail("standard reconstruction mismatch at a=" + std::to_string(a));
            }

            // brackets against both LC routes
            const LCResult lcs = lc_via_gcd(s);
            const LCResult lcst = lc_via_gcd(st);
            const std::uint64_t n2pm = sp.period;
            if (!(n2pm - 2 * evs.zero_count <= lcs.lc && lcs.lc <= n2pm - evs.zero_count))
                fail("standard bracket violated");
            if (!(n2pm - 2 * evst.zero_count <= lcst.lc && lcst.lc <= n2pm - evst.zero_count))
                fail("modified bracket violated");
            if (!(evs.zero_count <= *lcs.gcd_degree && *lcs.gcd_degree <= 2 * evs.zero_count))
                fail("standard gcd-degree vs zero-count violated");
            if (!(evst.zero_count <= *lcst.gcd_degree && *lcst.gcd_degree <= 2 * evst.zero_count))
                fail("modified gcd-degree vs zero-count violated");

            const SubfieldReport p2 = subfield_membership_check(ctx, beta, sp, cls);
            if (p2.applicable && !p2.pass) {
                fail("subfield membership check failed: " + p2.failures.front());
            }
            outcomes[which] = {evs.zero_count, evst.zero_count, p2.pass, p2.case_id};
        }
        if (outcomes[0].zs != outcomes[1].zs || outcomes[0].zst != outcomes[1].zst ||
            outcomes[0].subfield_pass != outcomes[1].subfield_pass ||
            outcomes[0].subfield_case != outcomes[1].subfield_case)
            fail("verdicts differ between the two moduli");
    }
    return ok;
}

// 7. Theorem-case sweep: no measured LC may violate its prediction.
bool criterion7() {
    bool ok = true;
    std::uint64_t analyses = 0, conjecture_hits = 0, conjecture_misses = 0;
    for (auto [p, f] : grid_pf()) {
        for (unsigned m : {1u, 2u}) {
            const std::uint64_t dm = SequenceParams::make(p, m, f, 0).d(m);
            for (std::uint64_t b = 0; b < dm; ++b) {
                const SequenceParams sp = SequenceParams::make(p, m, f, b);
                for (Variant v : {Variant::Standard, Variant::Modified}) {
                    const LCReport rep = analyze(sp, v, false);
                    ++analyses;
                    if (rep.verdict == Verdict::Violation) {
                        ok = false;
                        note("VIOLATION: p=" + std::to_string(p) + " m=" + std::to_string(m) +
                             " f=" + std::to_string(f) + " b=" + std::to_string(b) +
                             " variant=" + (v == Variant::Standard ? "standard" : "modified") +
                             " lc=" + std::to_string(rep.lc_gcd));
                    } else if (rep.verdict == Verdict::MatchesConjecture) {
                        ++conjecture_hits;
                    } else if (rep.conjecture_mismatch) {
                        ++conjecture_misses;
                        note("conjecture mismatch (finding, not a failure): p=" +
                             std::to_string(p) + " m=" + std::to_string(m) +
                             " f=" + std::to_string(f) + " b=" + std::to_string(b) +
                             " variant=" + (v == Variant::Standard ? "standard" : "modified") +
                             " lc=" + std::to_string(rep.lc_gcd));
                    }
                }
            }
        }
    }
    note(std::to_string(analyses) + " analyses, " + std::to_string(conjecture_hits) +
         " conjecture matches, " + std::to_string(conjecture_misses) + " conjecture mismatches");
    return ok;
}

}  // namespace

int main() {
    run("criterion 1 (worked examples, byte-exact + LC)", criterion1);
    run("criterion 2 (table 1 reproduction)", criterion2);
    run("criterion 3 (table 2 reproduction)", criterion3);
    run("criterion 4 (BM = GCD oracle equivalence)", criterion4);
    run("criterion 5 (structural invariants)", criterion5);
    run("criterion 6 (field identities)", criterion6);
    run("criterion 7 (theorem-case sweep)", criterion7);
    if (g_failures > 0) {
        std::printf("%d criterion(s) FAILED\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
