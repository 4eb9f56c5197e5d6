#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cycloseq/cyclotomy.hpp"
#include "cycloseq/f2poly.hpp"

namespace cycloseq {

// One period of s^inf or s~^inf, bit-packed, index 0 = s_0.
class BinarySequence {
public:
    BinarySequence() = default;
    BinarySequence(SequenceParams params, Variant variant, std::vector<std::uint64_t> words,
                   std::uint64_t period);
    // Bare container (no generating params), mostly for tests and raw input.
    static BinarySequence from_string(const std::string& bits);

    std::uint64_t period() const { return period_; }
    bool bit(std::uint64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    std::uint64_t weight() const;
    std::string to_string() const;

    const SequenceParams& params() const { return params_; }
    Variant variant() const { return variant_; }
    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    SequenceParams params_;
    Variant variant_ = Variant::Standard;
    std::vector<std::uint64_t> words_;
    std::uint64_t period_ = 0;
};

BinarySequence generate(const SequenceParams& params, Variant variant);

std::uint64_t weight(const BinarySequence& seq);

// c^N(x) = sum_i s_i x^i, degree < N.
F2Poly support_polynomial(const BinarySequence& seq);

// 8-byte little-endian period length, then packed bits: bit (i mod 8) of
// byte i/8 is s_i.
std::vector<std::uint8_t> serialize_binary(const BinarySequence& seq);

inline LCResult lc_via_gcd(const BinarySequence& seq) {
    return lc_via_gcd(support_polynomial(seq), seq.period());
}

inline LCResult berlekamp_massey(const BinarySequence& seq) {
    return berlekamp_massey(support_polynomial(seq), seq.period());
}

}  // namespace cycloseq
