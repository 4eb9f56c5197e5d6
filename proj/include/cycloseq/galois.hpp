#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cycloseq/cyclotomy.hpp"
#include "cycloseq/f2poly.hpp"
#include "cycloseq/sequence.hpp"

namespace cycloseq {

// Element of GF(2^n), n <= 64: coefficient bits of a residue of degree < n.
using FieldElement = std::uint64_t;

// The (nth+1)-smallest irreducible of degree n, candidates ordered by their
// coefficient bits read as an integer; only nonzero constant terms are
// considered (so n = 1 yields x + 1, never x).
F2Poly find_irreducible(unsigned n, unsigned nth = 0);

// GF(2^n) with n the multiplicative order of 2 mod p^m, so that a primitive
// p^m-th root of unity exists. Immutable and freely shareable.
class FieldCtx {
public:
    // Throws std::domain_error when n > 64 (use the BM/GCD path instead; the
    // linear complexity itself never needs the field).
    static FieldCtx make(const SequenceParams& params);
    static FieldCtx make(const SequenceParams& params, const F2Poly& modulus);

    unsigned n() const { return n_; }
    std::uint64_t p() const { return p_; }
    unsigned m() const { return m_; }
    std::uint64_t pm() const { return pm_; }
    F2Poly modulus() const;

    FieldElement add(FieldElement a, FieldElement b) const { return a ^ b; }
    FieldElement mul(FieldElement a, FieldElement b) const;
    FieldElement pow(FieldElement a, std::uint64_t k) const;

    bool in_f2(FieldElement a) const { return mul(a, a) == a; }
    bool in_f4(FieldElement a) const;  // a^4 == a, the copy of F_4 inside GF(2^n)

private:
    FieldCtx() = default;
    unsigned n_ = 0;
    std::uint64_t p_ = 0;
    unsigned m_ = 0;
    std::uint64_t pm_ = 0;
    unsigned __int128 mod_ = 0;  // degree-n irreducible, bit n set
};

// Deterministic primitive p^m-th root of unity: the first candidate element
// (by integer encoding) whose (2^n - 1)/p^m power has exact order p^m.
FieldElement find_root_of_unity(const FieldCtx& ctx);

// Sum of beta^{a t} over the half union of level-j classes starting at index v:
// t in union_{i < delta_j} p^{m-j} D_{i+v}^{(p^j)}, exponents reduced mod p^m.
FieldElement half_union_sum(const FieldCtx& ctx, FieldElement beta, const SequenceParams& params,
                            std::uint64_t v, unsigned j, std::uint64_t a);

struct RootEvaluation {
    std::vector<FieldElement> values;  // values[a] = s(beta^a), a in [0, p^m)
    std::uint64_t zero_count = 0;      // Z = #{a : s(beta^a) = 0}
};

// Evaluates the support polynomial of one period at every p^m-th root of
// unity, folding exponents mod p^m.
RootEvaluation eval_support_at_roots(const FieldCtx& ctx, FieldElement beta,
                                     const BinarySequence& seq);

// Prefix sum of the half-union sums over levels 1..l at a = 1. Equivalently
// the same sum built from the level-l parameter set and evaluated at
// beta^{p^{m-l}}, whose order is p^l.
FieldElement level_sum(const FieldCtx& ctx, FieldElement beta, const SequenceParams& params,
                       unsigned l, std::uint64_t v);

struct SubfieldReport {
    int case_id = 0;         // 1..4; 0 when only observations apply
    bool applicable = false; // some subfield membership is asserted
    bool pass = true;
    std::vector<std::string> failures;
    std::vector<std::string> observations;  // Wieferich-dependent cases, never asserted
};

// Subfield membership of the level-1 and level-m sums for all v in [0, d_m),
// checked against the classified case.
SubfieldReport subfield_membership_check(const FieldCtx& ctx, FieldElement beta,
                                         const SequenceParams& params, const CaseClass& cls);

}  // namespace cycloseq
