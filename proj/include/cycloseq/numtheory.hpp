#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace cycloseq {

// 64-bit modular arithmetic, 128-bit intermediates.
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t mod);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t mod);

bool is_prime(std::uint64_t n);

// Prime factorization by trial division, (prime, exponent) pairs in ascending order.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

// base^exp, throws std::overflow_error if it does not fit in 64 bits.
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);

// Least k >= 1 with a^k = 1 (mod modulus). Throws std::domain_error("not a unit")
// when gcd(a, modulus) != 1.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t modulus);

// Smallest odd g >= 3 that generates the units mod p and mod p^2 (mod p alone
// when m = 1). Such a g generates the units mod p^j and 2p^j for all j <= m.
std::uint64_t find_common_odd_primitive_root(std::uint64_t p, unsigned m);

// True iff g is odd and a primitive root mod p and mod p^2 (mod p only for m = 1).
bool validate_primitive_root(std::uint64_t g, std::uint64_t p, unsigned m);

// k in [0, phi(modulus)) with g^k = x (mod modulus); g must generate the units.
// Exhaustive scan for small groups, baby-step/giant-step above.
std::uint64_t discrete_log(std::uint64_t g, std::uint64_t x, std::uint64_t modulus);

// Parameter set (p, m, f, e, b, g) with p odd prime, f = 2^r, ef = p - 1,
// g an odd common primitive root mod p^j and 2p^j, b a class-index shift.
struct SequenceParams {
    std::uint64_t p = 0;
    unsigned m = 0;
    std::uint64_t f = 0;
    std::uint64_t e = 0;
    std::uint64_t b = 0;  // stored reduced mod d_m
    std::uint64_t g = 0;
    std::uint64_t pm = 0;      // p^m
    std::uint64_t period = 0;  // N = 2 p^m

    // Validates and derives; g chosen automatically when omitted.
    // Throws std::invalid_argument with a one-line reason on bad input.
    static SequenceParams make(std::uint64_t p, unsigned m, std::uint64_t f, std::uint64_t b);
    static SequenceParams make(std::uint64_t p, unsigned m, std::uint64_t f, std::uint64_t b,
                               std::uint64_t g);

    std::uint64_t p_pow(unsigned j) const;                      // p^j, j <= m
    std::uint64_t d(unsigned j) const;                          // d_j = p^{j-1} f
    std::uint64_t delta(unsigned j) const { return d(j) / 2; }  // d_j / 2
};

enum class ResidueSign { PlusOne, MinusOne, Neither };

// Everything about the class of 2 that selects a theorem case.
struct CaseClass {
    std::uint64_t tau = 0;  // multiplicative order of 2 mod p
    ResidueSign e_residue_mod_p = ResidueSign::Neither;   // sign of 2^e mod p
    ResidueSign e_residue_mod_p2 = ResidueSign::Neither;  // sign of 2^e mod p^2
    bool wieferich = false;                               // 2^{p-1} = 1 (mod p^2)
    std::uint64_t h = 0;  // 2 lies in class h mod p^m, reduced mod d_m
    std::uint64_t n = 0;  // multiplicative order of 2 mod p^m
};

CaseClass classify_case(const SequenceParams& params);

}  // namespace cycloseq
