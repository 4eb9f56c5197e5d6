#include "cycloseq/sequence.hpp"

#include <bit>

namespace cycloseq {

BinarySequence::BinarySequence(SequenceParams params, Variant variant,
                               std::vector<std::uint64_t> words, std::uint64_t period)
    : params_(params), variant_(variant), words_(std::move(words)), period_(period) {}

BinarySequence BinarySequence::from_string(const std::string& bits) {
    BinarySequence seq;
    seq.period_ = bits.size();
    seq.words_.assign(bits.size() / 64 + 1, 0);
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') seq.words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    return seq;
}

std::uint64_t BinarySequence::weight() const {
    std::uint64_t n = 0;
    for (std::uint64_t w : words_) n += std::popcount(w);
    return n;
}

std::string BinarySequence::to_string() const {
    std::string s(period_, '0');
    for (std::uint64_t i = 0; i < period_; ++i) {
        if (bit(i)) s[i] = '1';
    }
    return s;
}

BinarySequence generate(const SequenceParams& params, Variant variant) {
    SupportSet sup = build_support(params, variant);
    std::vector<std::uint64_t> words(params.period / 64 + 1, 0);
    for (std::uint64_t i = 0; i < params.period; ++i) {
        if (sup.one[i]) words[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    return BinarySequence(params, variant, std::move(words), params.period);
}

std::uint64_t weight(const BinarySequence& seq) { return seq.weight(); }

F2Poly support_polynomial(const BinarySequence& seq) {
    F2Poly p;
    for (std::uint64_t i = 0; i < seq.period(); ++i) {
        if (seq.bit(i)) p.set_coeff(i, true);
    }
    return p;
}

std::vector<std::uint8_t> serialize_binary(const BinarySequence& seq) {
    const std::uint64_t n = seq.period();
    std::vector<std::uint8_t> out(8 + (n + 7) / 8, 0);
    for (int i = 0; i < 8; ++i) out[i] = static_cast<std::uint8_t>(n >> (8 * i));
    for (std::uint64_t i = 0; i < n; ++i) {
        if (seq.bit(i)) out[8 + i / 8] |= static_cast<std::uint8_t>(1u << (i % 8));
    }
    return out;
}

}  // namespace cycloseq
