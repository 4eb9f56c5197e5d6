#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cycloseq/numtheory.hpp"

namespace cycloseq {

enum class ModulusKind { PPower, TwoPPower };  // s = p^j or s = 2 p^j

// Multiplier applied to the class elements when embedding into Z_{p^m} or
// Z_{2p^m}: 1, p^{m-j}, or 2 p^{m-j}.
enum class ClassScale { None, PPow, TwoPPow };

struct CyclotomicClass {
    unsigned level = 1;       // j
    std::uint64_t index = 0;  // i reduced mod d_j
    ModulusKind kind = ModulusKind::PPower;
    std::uint64_t multiplier = 1;
    std::vector<std::uint64_t> elements;  // ascending residues mod multiplier*s
};

// The coset {multiplier * g^{i + d_j t} mod multiplier*s : 0 <= t < e}.
CyclotomicClass build_class(const SequenceParams& params, unsigned j, std::uint64_t i,
                            ModulusKind kind, ClassScale scale);

struct PartitionReport {
    bool ok = true;
    std::string detail;  // first collision or gap when !ok
    explicit operator bool() const { return ok; }
};

// Checks that (a) the classes of each level tile the units mod p^j, (b) the
// p^{m-j}-scaled classes plus {0} tile Z_{p^m}, and (c) the doubled/odd scaled
// classes of both kinds plus {0, p^m} tile Z_{2p^m}.
PartitionReport verify_partitions(const SequenceParams& params);

enum class Variant { Standard, Modified };

struct SupportSet {
    Variant variant = Variant::Standard;
    std::uint64_t period = 0;  // 2 p^m
    std::vector<bool> one;     // one[r] == true iff r lies in C_1 (resp. C~_1)

    std::uint64_t ones_count() const;
    bool contains_one(std::uint64_t r) const { return one[r]; }
};

SupportSet build_support(const SequenceParams& params, Variant variant);

}  // namespace cycloseq
