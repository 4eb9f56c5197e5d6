#include "cycloseq/analysis.hpp"

#include <sstream>

#include <json.hpp>

namespace cycloseq {

Prediction predict(const SequenceParams& params, Variant variant, const CaseClass& cls) {
    Prediction pred;
    const std::uint64_t n2pm = params.period;
    const std::uint64_t pminus1 = params.p - 1;
    const auto rp = cls.e_residue_mod_p;
    const auto rp2 = cls.e_residue_mod_p2;

    if (variant == Variant::Standard) {
        if (rp == ResidueSign::Neither) {
            pred = {Prediction::Kind::Exact, n2pm, n2pm, std::nullopt};
        } else if (rp == ResidueSign::PlusOne && rp2 != ResidueSign::PlusOne) {
            pred = {Prediction::Kind::Exact, n2pm, n2pm, std::nullopt};
        } else if (rp == ResidueSign::MinusOne && rp2 != ResidueSign::MinusOne) {
            pred = {Prediction::Kind::Range, n2pm - 2 * pminus1, n2pm - pminus1,
                    n2pm - pminus1};
        }  // else: 2^e = +-1 mod p^2, not covered by the theorems
    } else {
        if (rp != ResidueSign::PlusOne) {
            pred = {Prediction::Kind::Exact, n2pm, n2pm, std::nullopt};
        } else if (rp2 != ResidueSign::PlusOne) {
            pred = {Prediction::Kind::Range, n2pm - 2 * pminus1, n2pm - pminus1,
                    n2pm - pminus1 - params.e};
        }
    }
    return pred;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::MatchesTheorem: return "MATCHES_THEOREM";
        case Verdict::MatchesConjecture: return "MATCHES_CONJECTURE";
        case Verdict::WithinRangeOnly: return "WITHIN_RANGE_ONLY";
        case Verdict::Violation: return "VIOLATION";
        case Verdict::NoPrediction: return "NO_PREDICTION";
    }
    return "?";
}

namespace {

const char* to_string(ResidueSign s) {
    switch (s) {
        case ResidueSign::PlusOne: return "+1";
        case ResidueSign::MinusOne: return "-1";
        case ResidueSign::Neither: return "neither";
    }
    return "?";
}

const char* to_string(Variant v) { return v == Variant::Standard ? "standard" : "modified"; }

}  // namespace

LCReport analyze(const SequenceParams& params, Variant variant, bool with_field_check) {
    LCReport rep;
    rep.params = params;
    rep.variant = variant;
    rep.case_info = classify_case(params);

    const BinarySequence seq = generate(params, variant);
    const F2Poly cn = support_polynomial(seq);
    const LCResult gcd = lc_via_gcd(cn, params.period);
    const LCResult bm = berlekamp_massey(cn, params.period);
    rep.lc_gcd = gcd.lc;
    rep.lc_bm = bm.lc;
    if (rep.lc_bm != rep.lc_gcd)
        throw InternalInconsistency("BM and GCD linear complexities disagree: " +
                                    std::to_string(rep.lc_bm) + " vs " +
                                    std::to_string(rep.lc_gcd));

    if (with_field_check) {
        if (rep.case_info.n > 64) {
            rep.field_note = "field check skipped: extension degree n = " +
                             std::to_string(rep.case_info.n) + " exceeds 64";
        } else {
            const FieldCtx ctx = FieldCtx::make(params);
            const FieldElement beta = find_root_of_unity(ctx);
            rep.zero_count = eval_support_at_roots(ctx, beta, seq).zero_count;
        }
    }

    rep.predicted = predict(params, variant, rep.case_info);
    const std::uint64_t lc = rep.lc_gcd;
    switch (rep.predicted.kind) {
        case Prediction::Kind::Exact:
            rep.verdict = lc == rep.predicted.lo ? Verdict::MatchesTheorem : Verdict::Violation;
            break;
        case Prediction::Kind::Range:
            if (lc < rep.predicted.lo || lc > rep.predicted.hi) {
                rep.verdict = Verdict::Violation;
            } else if (rep.predicted.conjectured && lc == *rep.predicted.conjectured) {
                rep.verdict = Verdict::MatchesConjecture;
            } else {
                rep.verdict = Verdict::WithinRangeOnly;
                rep.conjecture_mismatch = rep.predicted.conjectured.has_value();
            }
            break;
        case Prediction::Kind::Uncovered:
            rep.verdict = Verdict::NoPrediction;
            break;
    }
    return rep;
}

std::string report_text(const LCReport& rep) {
    std::ostringstream os;
    os << "p: " << rep.params.p << "\n"
       << "m: " << rep.params.m << "\n"
       << "f: " << rep.params.f << "\n"
       << "e: " << rep.params.e << "\n"
       << "b: " << rep.params.b << "\n"
       << "g: " << rep.params.g << "\n"
       << "variant: " << to_string(rep.variant) << "\n"
       << "n: " << rep.case_info.n << "\n"
       << "h: " << rep.case_info.h << "\n"
       << "case_p: " << to_string(rep.case_info.e_residue_mod_p) << "\n"
       << "case_p2: " << to_string(rep.case_info.e_residue_mod_p2) << "\n"
       << "lc_bm: " << rep.lc_bm << "\n"
       << "lc_gcd: " << rep.lc_gcd << "\n";
    if (rep.zero_count) {
        os << "zero_count: " << *rep.zero_count << "\n"
           << "bracket: " << rep.params.period - 2 * *rep.zero_count << " <= LC <= "
           << rep.params.period - *rep.zero_count << "\n";
    } else {
        os << "zero_count: -\n";
        if (!rep.field_note.empty()) os << "note: " << rep.field_note << "\n";
    }
    if (rep.predicted.kind == Prediction::Kind::Uncovered) {
        os << "predicted_lo: -\npredicted_hi: -\n";
    } else {
        os << "predicted_lo: " << rep.predicted.lo << "\n"
           << "predicted_hi: " << rep.predicted.hi << "\n";
    }
    if (rep.predicted.conjectured)
        os << "conjectured: " << *rep.predicted.conjectured << "\n";
    else
        os << "conjectured: -\n";
    os << "verdict: " << to_string(rep.verdict) << "\n";
    if (rep.conjecture_mismatch) os << "conjecture_mismatch: true\n";
    return os.str();
}

std::string report_json(const LCReport& rep) {
    nlohmann::json doc;
    doc["p"] = rep.params.p;
    doc["m"] = rep.params.m;
    doc["f"] = rep.params.f;
    doc["e"] = rep.params.e;
    doc["b"] = rep.params.b;
    doc["g"] = rep.params.g;
    doc["variant"] = to_string(rep.variant);
    doc["n"] = rep.case_info.n;
    doc["h"] = rep.case_info.h;
    doc["case_p"] = to_string(rep.case_info.e_residue_mod_p);
    doc["case_p2"] = to_string(rep.case_info.e_residue_mod_p2);
    doc["lc_bm"] = rep.lc_bm;
    doc["lc_gcd"] = rep.lc_gcd;
    if (rep.zero_count)
        doc["zero_count"] = *rep.zero_count;
    else
        doc["zero_count"] = nullptr;
    if (rep.predicted.kind == Prediction::Kind::Uncovered) {
        doc["predicted_lo"] = nullptr;
        doc["predicted_hi"] = nullptr;
    } else {
        doc["predicted_lo"] = rep.predicted.lo;
        doc["predicted_hi"] = rep.predicted.hi;
    }
    if (rep.predicted.conjectured)
        doc["conjectured"] = *rep.predicted.conjectured;
    else
        doc["conjectured"] = nullptr;
    doc["verdict"] = to_string(rep.verdict);
    if (rep.conjecture_mismatch) doc["conjecture_mismatch"] = true;
    if (!rep.field_note.empty()) doc["note"] = rep.field_note;
    return doc.dump();
}

const std::vector<PublishedExample>& published_examples() {
    static const std::vector<PublishedExample> examples = {
        {"example1_s", 7, 2, 2, 0, 3, Variant::Standard,
         "111101110110011100100000011111101"
         "0001101010101010"
         "01010101010100111"
         "01000000111111011000110010001000",
         98},
        {"example1_st", 7, 2, 2, 0, 3, Variant::Modified,
         "110111011100110110001010110101000"
         "0100111111111111"
         "00000000000001101"
         "11101010010101110010011000100010",
         89},
        {"example2i_s", 5, 2, 2, 0, 3, Variant::Standard,
         "1111111001101000001100010"
         "0010001100000101100111111",
         46},
        // The published listing flips bits 17 and 34: residues 17 and 33 lie in
        // one class mod 50 (and 16 and 34 in one doubled class mod 25) yet are
        // printed with different bits, which no class union can produce.
        {"example2i_st", 5, 2, 2, 0, 3, Variant::Modified,
         "1101010011000010110110111"
         "0111011000010000110010101",
         50,
         {17, 34}},
        {"example2ii_s", 5, 2, 4, 0, 3, Variant::Standard,
         "1111111011111001101000101"
         "0010111010011000001000000",
         50},
        {"example2ii_st", 5, 2, 4, 0, 3, Variant::Modified,
         "1101010001010011000010000"
         "0111101111001101011101010",
         50},
        {"example3_s", 31, 1, 2, 0, 3, Variant::Standard,
         "1110110111100010101110000100100"
         "0110110111100010101110000100100",
         62},
        {"example3_st", 31, 1, 2, 0, 3, Variant::Modified,
         "1100011101001000000100101110001"
         "0011100010110111111011010001110",
         17},
    };
    return examples;
}

const std::vector<TableRow>& published_table(TableId id) {
    static const std::vector<TableRow> table1 = {
        {5, 2, 2, 3, {0, 1, 3}, 46},
        {5, 3, 2, 3, {0, 1, 3}, 246},
        {5, 4, 2, 3, {0, 1, 3}, 1246},
        {11, 2, 5, 7, {2, 19}, 232},
        {13, 2, 6, 7, {6, 11}, 326},
        {13, 2, 6, 11, {5, 12}, 326},
        {13, 3, 6, 7, {5, 12}, 4382},
        {13, 3, 6, 11, {5, 12}, 4382},
        {17, 1, 4, 3, {0, 3}, 18},
        {17, 1, 4, 5, {0, 3}, 18},
        {17, 2, 4, 3, {0, 2}, 562},
        {17, 2, 4, 5, {0, 7}, 562},
        {19, 2, 9, 3, {1, 6}, 704},
        {19, 2, 9, 13, {3, 22}, 704},
    };
    static const std::vector<TableRow> table2 = {
        {7, 2, 3, 3, {0, 3}, 89},
        {7, 2, 3, 5, {0, 3}, 89},
        {7, 3, 3, 3, {0, 1}, 677},
        {7, 3, 3, 5, {0, 1}, 677},
        {17, 1, 8, 3, {0, 3}, 10},
        {17, 2, 8, 5, {0, 3}, 554},
        {23, 2, 11, 5, {1, 5}, 1025},
        {23, 2, 11, 7, {1, 5}, 1025},
        {31, 1, 15, 3, {1, 6}, 17},
        {31, 1, 15, 11, {1, 6}, 17},
        {31, 2, 15, 3, {2, 5}, 1877},
        {31, 2, 15, 11, {2, 5}, 1877},
    };
    return id == TableId::One ? table1 : table2;
}

std::vector<ExampleCheck> reproduce_examples() {
    std::vector<ExampleCheck> out;
    for (const PublishedExample& ex : published_examples()) {
        ExampleCheck chk;
        chk.example = &ex;
        const SequenceParams params = SequenceParams::make(ex.p, ex.m, ex.f, ex.b, ex.g);
        const BinarySequence seq = generate(params, ex.variant);
        const std::string bits = seq.to_string();
        std::vector<std::uint64_t> delta;
        for (std::size_t i = 0; i < std::min(bits.size(), ex.bits.size()); ++i) {
            if (bits[i] != ex.bits[i]) delta.push_back(i);
        }
        // Byte-exact, up to the documented erratum indices and nothing else.
        chk.bits_ok = bits.size() == ex.bits.size() && delta == ex.erratum;
        if (!chk.bits_ok) {
            chk.first_divergence = bits.size();
            for (std::uint64_t i : delta) {
                bool expected = false;
                for (std::uint64_t k : ex.erratum) expected = expected || k == i;
                if (!expected) {
                    chk.first_divergence = i;
                    break;
                }
            }
        }
        const LCReport rep = analyze(params, ex.variant, false);
        chk.lc_measured = rep.lc_gcd;
        chk.lc_ok = chk.lc_measured == ex.lc;
        out.push_back(std::move(chk));
    }
    return out;
}

std::vector<TableRowCheck> reproduce_table(TableId id) {
    const Variant variant = id == TableId::One ? Variant::Standard : Variant::Modified;
    std::vector<TableRowCheck> out;
    for (const TableRow& row : published_table(id)) {
        const std::uint64_t f = (row.p - 1) / row.e;  // rows list e; f must be a 2-power
        for (std::uint64_t b : row.bs) {
            TableRowCheck chk;
            chk.row = &row;
            chk.b = b;
            const SequenceParams params = SequenceParams::make(row.p, row.m, f, b, row.g);
            const LCReport rep = analyze(params, variant, false);
            chk.lc_measured = rep.lc_gcd;
            chk.verdict = rep.verdict;
            chk.ok = chk.lc_measured == row.lc;
            out.push_back(chk);
        }
    }
    return out;
}

}  // namespace cycloseq
