#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cycloseq/galois.hpp"
#include "cycloseq/sequence.hpp"

namespace cycloseq {

// What the theorems say the linear complexity must be for a parameter set.
struct Prediction {
    enum class Kind { Exact, Range, Uncovered };
    Kind kind = Kind::Uncovered;
    std::uint64_t lo = 0, hi = 0;               // Exact: lo == hi
    std::optional<std::uint64_t> conjectured;   // Range cases carry a conjectured exact value
};

Prediction predict(const SequenceParams& params, Variant variant, const CaseClass& cls);

enum class Verdict { MatchesTheorem, MatchesConjecture, WithinRangeOnly, Violation, NoPrediction };

std::string to_string(Verdict v);

// Thrown when the two independent linear-complexity computations disagree;
// always a bug, never a data condition.
struct InternalInconsistency : std::logic_error {
    using std::logic_error::logic_error;
};

struct LCReport {
    SequenceParams params;
    Variant variant = Variant::Standard;
    CaseClass case_info;
    std::uint64_t lc_bm = 0, lc_gcd = 0;
    Prediction predicted;
    std::optional<std::uint64_t> zero_count;  // present when the field check ran
    std::string field_note;                   // reason when a requested field check was skipped
    Verdict verdict = Verdict::NoPrediction;
    bool conjecture_mismatch = false;  // in range but not equal to the conjectured value
};

// Classifies, generates, measures LC both ways, predicts and compares.
// Throws InternalInconsistency if the two LC methods disagree.
LCReport analyze(const SequenceParams& params, Variant variant, bool with_field_check);

// Human-readable multi-line report.
std::string report_text(const LCReport& rep);
// Single-line JSON document with the fixed field set.
std::string report_json(const LCReport& rep);

// Reference data: the worked examples and the two result tables this library
// reproduces, exactly as published.
struct PublishedExample {
    std::string name;
    std::uint64_t p;
    unsigned m;
    std::uint64_t f;
    std::uint64_t b;
    std::uint64_t g;
    Variant variant;
    std::string bits;  // one full period, verbatim as published
    std::uint64_t lc;
    // Indices where the published listing contradicts its own class structure
    // (residues of one cyclotomic class printed with different bits). The
    // regenerated sequence must differ from `bits` at exactly these indices.
    std::vector<std::uint64_t> erratum;
};

const std::vector<PublishedExample>& published_examples();

enum class TableId { One, Two };  // Table 1: standard family; Table 2: modified family

struct TableRow {
    std::uint64_t p;
    unsigned m;
    std::uint64_t e;
    std::uint64_t g;
    std::vector<std::uint64_t> bs;
    std::uint64_t lc;
};

const std::vector<TableRow>& published_table(TableId id);

struct ExampleCheck {
    const PublishedExample* example = nullptr;
    bool bits_ok = false;
    std::uint64_t first_divergence = 0;  // meaningful when !bits_ok
    std::uint64_t lc_measured = 0;
    bool lc_ok = false;
};

// Regenerates every published bitstring and LC value; byte-exact comparison.
std::vector<ExampleCheck> reproduce_examples();

struct TableRowCheck {
    const TableRow* row = nullptr;
    std::uint64_t b = 0;
    std::uint64_t lc_measured = 0;
    bool ok = false;
    Verdict verdict = Verdict::NoPrediction;
};

// Runs every (g, b) combination of the table and checks the LC column.
std::vector<TableRowCheck> reproduce_table(TableId id);

}  // namespace cycloseq
