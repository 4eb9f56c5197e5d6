#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cycloseq/analysis.hpp"

namespace {

using namespace cycloseq;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;      // verification found mismatches
constexpr int kExitUsage = 2;        // bad flags or invalid parameters
constexpr int kExitInternal = 3;     // the two LC methods disagreed

struct ParamFlags {
    std::uint64_t p = 0;
    unsigned m = 1;
    std::int64_t f = -1;
    std::int64_t e = -1;
    std::uint64_t b = 0;
    std::int64_t g = -1;
    bool modified = false;
};

void add_param_flags(CLI::App* cmd, ParamFlags& pf) {
    cmd->add_option("--p", pf.p, "odd prime p")->required();
    cmd->add_option("--m", pf.m, "exponent m >= 1");
    cmd->add_option("--f", pf.f, "even divisor f = 2^r of p-1");
    cmd->add_option("--e", pf.e, "cofactor e with e*f = p-1");
    cmd->add_option("--b", pf.b, "class-index shift b (default 0)");
    cmd->add_option("--g", pf.g, "common odd primitive root (auto-selected when absent)");
    cmd->add_flag("--modified", pf.modified, "use the modified family");
}

std::uint64_t resolve_f(std::uint64_t p, std::int64_t f, std::int64_t e) {
    if ((f < 0) == (e < 0))
        throw std::invalid_argument("exactly one of --f and --e is required");
    if (f >= 0) return static_cast<std::uint64_t>(f);
    if (e <= 0 || (p - 1) % static_cast<std::uint64_t>(e) != 0)
        throw std::invalid_argument("e must divide p-1");
    return (p - 1) / static_cast<std::uint64_t>(e);
}

SequenceParams resolve_params(const ParamFlags& pf) {
    const std::uint64_t f = resolve_f(pf.p, pf.f, pf.e);
    if (pf.g >= 0) return SequenceParams::make(pf.p, pf.m, f, pf.b, static_cast<std::uint64_t>(pf.g));
    return SequenceParams::make(pf.p, pf.m, f, pf.b);
}

// Output sink: stdout by default, --out redirects.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw std::invalid_argument("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

std::string verify_line(const LCReport& rep) {
    std::string line = "p=" + std::to_string(rep.params.p) + " m=" + std::to_string(rep.params.m) +
                       " f=" + std::to_string(rep.params.f) + " e=" + std::to_string(rep.params.e) +
                       " b=" + std::to_string(rep.params.b) + " g=" + std::to_string(rep.params.g) +
                       " variant=" + (rep.variant == Variant::Standard ? "standard" : "modified") +
                       " lc=" + std::to_string(rep.lc_gcd);
    if (rep.predicted.kind == Prediction::Kind::Uncovered) {
        line += " predicted=none";
    } else {
        line += " predicted=[" + std::to_string(rep.predicted.lo) + "," +
                std::to_string(rep.predicted.hi) + "]";
    }
    if (rep.predicted.conjectured) line += " conjectured=" + std::to_string(*rep.predicted.conjectured);
    if (rep.zero_count) line += " zero_count=" + std::to_string(*rep.zero_count);
    line += " verdict=" + to_string(rep.verdict);
    return line;
}

int run_gen(const ParamFlags& pf, bool binary, const std::string& out_path) {
    const SequenceParams params = resolve_params(pf);
    const BinarySequence seq = generate(params, pf.modified ? Variant::Modified : Variant::Standard);
    Sink sink(out_path);
    if (binary) {
        const std::vector<std::uint8_t> bytes = serialize_binary(seq);
        sink.stream().write(reinterpret_cast<const char*>(bytes.data()),
                            static_cast<std::streamsize>(bytes.size()));
    } else {
        sink.stream() << seq.to_string() << "\n";
    }
    return kExitOk;
}

int run_lc(const ParamFlags& pf, bool field_check, bool json, const std::string& out_path) {
    const SequenceParams params = resolve_params(pf);
    const LCReport rep =
        analyze(params, pf.modified ? Variant::Modified : Variant::Standard, field_check);
    Sink sink(out_path);
    sink.stream() << (json ? report_json(rep) + "\n" : report_text(rep));
    return kExitOk;
}

struct VerifyFlags {
    std::vector<std::uint64_t> ps;
    std::vector<unsigned> ms;
    std::int64_t f = -1;
    std::int64_t e = -1;
    std::uint64_t b = 0;
    std::int64_t g = -1;
    bool modified = false;
    bool all_b = false;
    bool paper_tables = false;
    bool paper_examples = false;
    bool field_check = false;
    bool json = false;
    std::uint64_t cap = 10000;
    std::string out_path;
};

int run_verify_tables(const VerifyFlags& vf, std::ostream& os) {
    bool all_ok = true;
    for (TableId id : {TableId::One, TableId::Two}) {
        const char* name = id == TableId::One ? "table1" : "table2";
        for (const TableRowCheck& chk : reproduce_table(id)) {
            all_ok = all_ok && chk.ok;
            if (vf.json) {
                os << "{\"table\":\"" << name << "\",\"p\":" << chk.row->p
                   << ",\"m\":" << chk.row->m << ",\"e\":" << chk.row->e << ",\"g\":" << chk.row->g
                   << ",\"b\":" << chk.b << ",\"lc\":" << chk.lc_measured
                   << ",\"expected\":" << chk.row->lc << ",\"ok\":" << (chk.ok ? "true" : "false")
                   << "}\n";
            } else {
                os << name << " p=" << chk.row->p << " m=" << chk.row->m << " e=" << chk.row->e
                   << " g=" << chk.row->g << " b=" << chk.b << ": lc=" << chk.lc_measured
                   << " expected=" << chk.row->lc << " " << (chk.ok ? "OK" : "MISMATCH") << "\n";
            }
        }
    }
    os << (all_ok ? "all table rows reproduced\n" : "table reproduction FAILED\n");
    return all_ok ? kExitOk : kExitFailure;
}

int run_verify_examples(const VerifyFlags& vf, std::ostream& os) {
    bool all_ok = true;
    for (const ExampleCheck& chk : reproduce_examples()) {
        const bool ok = chk.bits_ok && chk.lc_ok;
        all_ok = all_ok && ok;
        if (vf.json) {
            os << "{\"example\":\"" << chk.example->name << "\",\"bits_ok\":"
               << (chk.bits_ok ? "true" : "false") << ",\"lc\":" << chk.lc_measured
               << ",\"expected\":" << chk.example->lc << ",\"ok\":" << (ok ? "true" : "false")
               << "}\n";
        } else {
            os << chk.example->name << ": bits " << (chk.bits_ok ? "OK" : "MISMATCH");
            if (!chk.bits_ok) os << " (first divergence at index " << chk.first_divergence << ")";
            if (chk.bits_ok && !chk.example->erratum.empty()) {
                os << " (up to the documented listing misprint at";
                for (std::uint64_t i : chk.example->erratum) os << " " << i;
                os << ")";
            }
            os << ", lc=" << chk.lc_measured << " expected=" << chk.example->lc << " "
               << (ok ? "OK" : "MISMATCH") << "\n";
        }
    }
    os << (all_ok ? "all published bitstrings reproduced\n" : "example reproduction FAILED\n");
    return all_ok ? kExitOk : kExitFailure;
}

int run_verify(const VerifyFlags& vf) {
    Sink sink(vf.out_path);
    std::ostream& os = sink.stream();
    if (vf.paper_tables) return run_verify_tables(vf, os);
    if (vf.paper_examples) return run_verify_examples(vf, os);

    if (vf.ps.empty())
        throw std::invalid_argument("verify needs --p (or --paper-tables / --paper-examples)");
    const Variant variant = vf.modified ? Variant::Modified : Variant::Standard;

    std::uint64_t planned = 0;
    struct Combo {
        SequenceParams params;
    };
    std::vector<Combo> combos;
    for (std::uint64_t p : vf.ps) {
        for (unsigned m : vf.ms.empty() ? std::vector<unsigned>{1} : vf.ms) {
            const std::uint64_t f = resolve_f(p, vf.f, vf.e);
            SequenceParams base = vf.g >= 0
                                      ? SequenceParams::make(p, m, f, vf.b,
                                                             static_cast<std::uint64_t>(vf.g))
                                      : SequenceParams::make(p, m, f, vf.b);
            const std::uint64_t nb = vf.all_b ? base.d(m) : 1;
            planned += nb;
            if (planned > vf.cap)
                throw std::invalid_argument("grid cap exceeded (" + std::to_string(vf.cap) +
                                            " analyses); raise --cap to proceed");
            for (std::uint64_t b = 0; b < nb; ++b) {
                SequenceParams sp = base;
                sp.b = vf.all_b ? b : base.b;
                combos.push_back({sp});
            }
        }
    }

    std::uint64_t violations = 0;
    for (const Combo& c : combos) {
        const LCReport rep = analyze(c.params, variant, vf.field_check);
        if (rep.verdict == Verdict::Violation) ++violations;
        os << (vf.json ? report_json(rep) : verify_line(rep)) << "\n";
    }
    if (violations > 0) {
        os << violations << " theorem violation(s) found\n";
        return kExitFailure;
    }
    os << combos.size() << " analyses, no theorem violations\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized cyclotomic binary sequences of period 2p^m: generation, linear "
                 "complexity, theorem verification"};
    app.require_subcommand(1);

    ParamFlags gen_pf;
    bool gen_binary = false;
    std::string gen_out;
    CLI::App* gen = app.add_subcommand("gen", "emit one period of the sequence");
    add_param_flags(gen, gen_pf);
    gen->add_flag("--binary", gen_binary, "packed bits with an 8-byte length prefix");
    gen->add_option("--out", gen_out, "write to a file instead of stdout");

    ParamFlags lc_pf;
    bool lc_field = false, lc_json = false;
    std::string lc_out;
    CLI::App* lc = app.add_subcommand("lc", "measure linear complexity and compare with theory");
    add_param_flags(lc, lc_pf);
    lc->add_flag("--field-check", lc_field, "also count zeros of s(x) at the p^m-th roots of unity");
    lc->add_flag("--json", lc_json, "machine-readable output, one JSON document per line");
    lc->add_option("--out", lc_out, "write to a file instead of stdout");

    VerifyFlags vf;
    CLI::App* verify = app.add_subcommand("verify", "sweep parameters or reproduce built-in data");
    verify->add_option("--p", vf.ps, "odd prime(s)");
    verify->add_option("--m", vf.ms, "exponent(s), default 1");
    verify->add_option("--f", vf.f, "even divisor f = 2^r of p-1");
    verify->add_option("--e", vf.e, "cofactor e with e*f = p-1");
    verify->add_option("--b", vf.b, "class-index shift (default 0)");
    verify->add_option("--g", vf.g, "common odd primitive root (auto-selected when absent)");
    verify->add_flag("--modified", vf.modified, "use the modified family");
    verify->add_flag("--all-b", vf.all_b, "sweep every b in [0, d_m)");
    verify->add_flag("--paper-tables", vf.paper_tables, "re-check the built-in reference tables");
    verify->add_flag("--paper-examples", vf.paper_examples,
                     "re-check the built-in reference bitstrings");
    verify->add_flag("--field-check", vf.field_check, "run the root-of-unity zero count per row");
    verify->add_flag("--json", vf.json, "machine-readable output, one JSON document per line");
    verify->add_option("--cap", vf.cap, "maximum number of analyses (default 10000)");
    verify->add_option("--out", vf.out_path, "write to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (gen->parsed()) return run_gen(gen_pf, gen_binary, gen_out);
        if (lc->parsed()) return run_lc(lc_pf, lc_field, lc_json, lc_out);
        if (verify->parsed()) return run_verify(vf);
    } catch (const InternalInconsistency& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}
