#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cycloseq {

// Dense polynomial over GF(2). Bit i of word i/64 holds the coefficient of x^i.
// Canonical form: no trailing zero words, so operator== is word-wise equality.
class F2Poly {
public:
    F2Poly() = default;

    static F2Poly zero() { return {}; }
    static F2Poly one();
    static F2Poly x_pow(std::uint64_t k);
    // bits[i] ('0'/'1') is the coefficient of x^i.
    static F2Poly from_coeff_string(const std::string& bits);

    bool is_zero() const { return w_.empty(); }
    // -1 stands in for the degree of the zero polynomial.
    long long degree() const;
    bool coeff(std::uint64_t i) const;
    void set_coeff(std::uint64_t i, bool v);
    std::uint64_t weight() const;  // number of nonzero coefficients

    // a ^= b * x^shift, word-level
    void xor_shifted(const F2Poly& b, std::uint64_t shift);

    friend F2Poly operator+(const F2Poly& a, const F2Poly& b);
    friend F2Poly operator*(const F2Poly& a, const F2Poly& b);
    friend bool operator==(const F2Poly& a, const F2Poly& b) = default;

    // Exponents of nonzero terms, descending: "x^98 + x^3 + 1".
    std::string to_string() const;

    const std::vector<std::uint64_t>& words() const { return w_; }

private:
    std::vector<std::uint64_t> w_;
    void trim();
};

struct F2DivMod {
    F2Poly quot, rem;
};

// Throws std::domain_error on division by the zero polynomial.
F2DivMod poly_divmod(const F2Poly& a, const F2Poly& b);
F2Poly poly_mod(const F2Poly& a, const F2Poly& b);
// Euclid; gcd(a, 0) = a. Throws std::domain_error if both inputs are zero.
F2Poly poly_gcd(const F2Poly& a, const F2Poly& b);

enum class LCMethod { BM, GCD };

struct LCResult {
    std::uint64_t lc = 0;
    LCMethod method = LCMethod::GCD;
    std::optional<F2Poly> minimal_poly;        // GCD method only
    std::optional<std::uint64_t> gcd_degree;   // GCD method only; lc + gcd_degree = N
};

// Linear complexity of the N-periodic stream whose one period is period_poly
// (degree < N), via deg((x^N - 1) / gcd(x^N - 1, c^N(x))).
LCResult lc_via_gcd(const F2Poly& period_poly, std::uint64_t period);

// Berlekamp-Massey over two concatenated periods (2N samples), enough to
// recover any complexity L <= N of an N-periodic stream.
LCResult berlekamp_massey(const F2Poly& period_poly, std::uint64_t period);

// Simulates the recurrence s_t = sum_{i>=1} taps_i s_{t-i} over the periodic
// extension and checks it regenerates bits deg(taps)..2N-1. taps must have
// constant term 1.
bool recurrence_regenerates(const F2Poly& taps, const F2Poly& period_poly, std::uint64_t period);

}  // namespace cycloseq
