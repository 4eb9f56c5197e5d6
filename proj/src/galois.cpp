#include "cycloseq/galois.hpp"

#include <bit>
#include <stdexcept>

namespace cycloseq {

namespace {

using u128 = unsigned __int128;

int top_bit(u128 v) {
    const std::uint64_t hi = static_cast<std::uint64_t>(v >> 64);
    if (hi) return 127 - std::countl_zero(hi);
    const std::uint64_t lo = static_cast<std::uint64_t>(v);
    if (lo) return 63 - std::countl_zero(lo);
    return -1;
}

u128 clmul(std::uint64_t a, std::uint64_t b) {
    u128 r = 0;
    while (b) {
        r ^= static_cast<u128>(a) << std::countr_zero(b);
        b &= b - 1;
    }
    return r;
}

// v mod f, f of degree n (bit n set); result has degree < n <= 64.
std::uint64_t reduce(u128 v, u128 f, unsigned n) {
    for (int i = top_bit(v); i >= static_cast<int>(n); i = top_bit(v)) v ^= f << (i - n);
    return static_cast<std::uint64_t>(v);
}

u128 poly_mod_u128(u128 a, u128 b) {
    const int db = top_bit(b);
    for (int da = top_bit(a); da >= db; da = top_bit(a)) a ^= b << (da - db);
    return a;
}

u128 poly_gcd_u128(u128 a, u128 b) {
    while (b) {
        u128 r = poly_mod_u128(a, b);
        a = b;
        b = r;
    }
    return a;
}

bool is_irreducible_u128(u128 f, unsigned n) {
    // x^{2^n} = x mod f, and x^{2^{n/q}} != x for every prime q | n.
    const u128 x = 2;
    auto sqr = [&](std::uint64_t a) { return reduce(clmul(a, a), f, n); };
    std::uint64_t t = static_cast<std::uint64_t>(poly_mod_u128(x, f));
    std::vector<std::uint64_t> iterates(n + 1);
    iterates[0] = t;
    for (unsigned i = 1; i <= n; ++i) {
        t = sqr(t);
        iterates[i] = t;
    }
    if (iterates[n] != iterates[0]) return false;
    for (auto [q, k] : factorize(n)) {
        const u128 diff = static_cast<u128>(iterates[n / q]) ^ iterates[0];
        if (poly_gcd_u128(diff == 0 ? f : diff, f) != 1) return false;
    }
    return true;
}

}  // namespace

F2Poly find_irreducible(unsigned n, unsigned nth) {
    if (n < 1 || n > 64) throw std::invalid_argument("degree must be in [1, 64]");
    for (std::uint64_t low = 1;; low += 2) {
        const u128 f = (static_cast<u128>(1) << n) | low;
        if (is_irreducible_u128(f, n)) {
            if (nth == 0) {
                F2Poly poly;
                poly.set_coeff(n, true);
                std::uint64_t bits = low;
                while (bits) {
                    poly.set_coeff(std::countr_zero(bits), true);
                    bits &= bits - 1;
                }
                return poly;
            }
            --nth;
        }
        if (n < 64 && low + 2 >= (std::uint64_t{1} << n)) throw std::domain_error("no irreducible found");
    }
}

FieldCtx FieldCtx::make(const SequenceParams& params) {
    const std::uint64_t n = multiplicative_order(2, params.pm);
    if (n > 64)
        throw std::domain_error("extension degree n = " + std::to_string(n) +
                                " exceeds 64; field checks unavailable, use the BM/GCD path");
    return make(params, find_irreducible(static_cast<unsigned>(n)));
}

FieldCtx FieldCtx::make(const SequenceParams& params, const F2Poly& modulus) {
    const std::uint64_t n = multiplicative_order(2, params.pm);
    if (n > 64)
        throw std::domain_error("extension degree n = " + std::to_string(n) +
                                " exceeds 64; field checks unavailable, use the BM/GCD path");
    if (modulus.degree() != static_cast<long long>(n))
        throw std::invalid_argument("modulus degree must equal the order of 2 mod p^m");
    u128 f = 0;
    for (std::uint64_t i = 0; i <= n; ++i) {
        if (modulus.coeff(i)) f |= static_cast<u128>(1) << i;
    }
    if (!is_irreducible_u128(f, static_cast<unsigned>(n)))
        throw std::invalid_argument("modulus is not irreducible");

    FieldCtx ctx;
    ctx.n_ = static_cast<unsigned>(n);
    ctx.p_ = params.p;
    ctx.m_ = params.m;
    ctx.pm_ = params.pm;
    ctx.mod_ = f;
    return ctx;
}

F2Poly FieldCtx::modulus() const {
    F2Poly poly;
    for (unsigned i = 0; i <= n_; ++i) {
        if ((mod_ >> i) & 1) poly.set_coeff(i, true);
    }
    return poly;
}

FieldElement FieldCtx::mul(FieldElement a, FieldElement b) const {
    return reduce(clmul(a, b), mod_, n_);
}

FieldElement FieldCtx::pow(FieldElement a, std::uint64_t k) const {
    FieldElement out = 1, base = a;
    while (k > 0) {
        if (k & 1) out = mul(out, base);
        base = mul(base, base);
        k >>= 1;
    }
    return out;
}

bool FieldCtx::in_f4(FieldElement a) const {
    const FieldElement sq = mul(a, a);
    return mul(sq, sq) == a;
}

FieldElement find_root_of_unity(const FieldCtx& ctx) {
    const std::uint64_t group = ctx.n() == 64 ? UINT64_MAX : (std::uint64_t{1} << ctx.n()) - 1;
    const std::uint64_t q = group / ctx.pm();
    const std::uint64_t pm1 = ctx.pm() / ctx.p();  // p^{m-1}
    for (FieldElement cand = 2;; ++cand) {
        const FieldElement beta = ctx.pow(cand, q);
        if (ctx.pow(beta, pm1) != 1) return beta;  // order is a p-power dividing p^m
    }
}

FieldElement half_union_sum(const FieldCtx& ctx, FieldElement beta, const SequenceParams& params,
                            std::uint64_t v, unsigned j, std::uint64_t a) {
    FieldElement acc = 0;
    a %= ctx.pm();
    for (std::uint64_t i = 0; i < params.delta(j); ++i) {
        auto cls = build_class(params, j, v + i, ModulusKind::PPower, ClassScale::PPow);
        for (std::uint64_t t : cls.elements) {
            acc ^= ctx.pow(beta, mul_mod(a, t, ctx.pm()));
        }
    }
    return acc;
}

RootEvaluation eval_support_at_roots(const FieldCtx& ctx, FieldElement beta,
                                     const BinarySequence& seq) {
    const std::uint64_t pm = ctx.pm();
    if (seq.period() != 2 * pm)
        throw std::invalid_argument("sequence period does not match the field context");

    // beta^{p^m} = 1, so x^t and x^{t+p^m} land on the same power: fold mod p^m.
    std::vector<std::uint64_t> odd_residues;
    for (std::uint64_t r = 0; r < pm; ++r) {
        if (seq.bit(r) ^ seq.bit(r + pm)) odd_residues.push_back(r);
    }
    std::vector<FieldElement> powers(pm);
    powers[0] = 1;
    for (std::uint64_t k = 1; k < pm; ++k) powers[k] = ctx.mul(powers[k - 1], beta);

    RootEvaluation out;
    out.values.assign(pm, 0);
    for (std::uint64_t a = 0; a < pm; ++a) {
        FieldElement val = 0;
        for (std::uint64_t r : odd_residues) val ^= powers[mul_mod(a, r, pm)];
        out.values[a] = val;
        if (val == 0) ++out.zero_count;
    }
    return out;
}

FieldElement level_sum(const FieldCtx& ctx, FieldElement beta, const SequenceParams& params,
                       unsigned l, std::uint64_t v) {
    FieldElement acc = 0;
    for (unsigned s = 1; s <= l; ++s) acc ^= half_union_sum(ctx, beta, params, v, s, 1);
    return acc;
}

SubfieldReport subfield_membership_check(const FieldCtx& ctx, FieldElement beta,
                                         const SequenceParams& params, const CaseClass& cls) {
    SubfieldReport rep;
    const std::uint64_t dm = params.d(params.m);
    const std::uint64_t d1 = params.d(1), delta1 = params.delta(1);
    const std::uint64_t h1 = cls.h % d1;

    enum class Expect { None, InF2, InF4NotF2, NotF2, NotF4 };
    Expect level_m = Expect::None;
    if (cls.h % dm == 0) {
        rep.case_id = 1;  // 2 in D_0^{(p^m)}
        level_m = Expect::InF2;
    } else if (h1 == 0 && cls.e_residue_mod_p2 != ResidueSign::PlusOne) {
        rep.case_id = 2;
        level_m = Expect::NotF4;
    } else if (h1 == delta1 && cls.e_residue_mod_p2 != ResidueSign::MinusOne) {
        rep.case_id = 3;
        level_m = Expect::NotF4;
    } else if (h1 % delta1 != 0) {
        rep.case_id = 4;
        level_m = Expect::NotF4;
    } else if (h1 != 0) {
        rep.case_id = 1;  // 2 not in D_0^{(p)}
        level_m = Expect::NotF2;
    } else {
        // 2^e = 1 mod p^2 (Wieferich-style), h not 0 mod d_m: no proven claim.
        level_m = Expect::None;
    }

    // Level-1 membership follows from the class of 2 mod p alone.
    const Expect level_1 = h1 == 0            ? Expect::InF2
                           : h1 == delta1     ? Expect::InF4NotF2
                                              : Expect::NotF4;

    auto check = [&](Expect expect, FieldElement val, unsigned level, std::uint64_t v) {
        const bool f2 = ctx.in_f2(val), f4 = ctx.in_f4(val);
        bool ok = true;
        const char* want = "";
        switch (expect) {
            case Expect::None: return;
            case Expect::InF2: ok = f2; want = "in F_2"; break;
            case Expect::InF4NotF2: ok = f4 && !f2; want = "in F_4 - F_2"; break;
            case Expect::NotF2: ok = !f2; want = "not in F_2"; break;
            case Expect::NotF4: ok = !f4; want = "not in F_4"; break;
        }
        rep.applicable = true;
        if (!ok) {
            rep.pass = false;
            rep.failures.push_back("A_{" + std::to_string(level) + "," + std::to_string(v) +
                                   "} expected " + want);
        }
    };

    for (std::uint64_t v = 0; v < dm; ++v) {
        const FieldElement am = level_sum(ctx, beta, params, params.m, v);
        const FieldElement a1 = params.m >= 2 ? level_sum(ctx, beta, params, 1, v) : am;
        if (params.m >= 2) check(level_1, a1, 1, v);
        check(params.m >= 2 ? level_m : level_1, am, params.m, v);
        if (level_m == Expect::None && params.m >= 2) {
            rep.observations.push_back("A_{" + std::to_string(params.m) + "," + std::to_string(v) +
                                       "}: in F_2=" + (ctx.in_f2(am) ? "yes" : "no") +
                                       ", in F_4=" + (ctx.in_f4(am) ? "yes" : "no") +
                                       " (Wieferich-dependent, not asserted)");
        }
    }
    return rep;
}

}  // namespace cycloseq
