#include "cycloseq/cyclotomy.hpp"

#include <algorithm>

namespace cycloseq {

CyclotomicClass build_class(const SequenceParams& params, unsigned j, std::uint64_t i,
                            ModulusKind kind, ClassScale scale) {
    CyclotomicClass cls;
    cls.level = j;
    const std::uint64_t dj = params.d(j);
    cls.index = i % dj;
    cls.kind = kind;
    const std::uint64_t pj = params.p_pow(j);
    const std::uint64_t s = kind == ModulusKind::PPower ? pj : 2 * pj;
    const std::uint64_t pmj = params.p_pow(params.m - j);
    cls.multiplier = scale == ClassScale::None ? 1 : scale == ClassScale::PPow ? pmj : 2 * pmj;

    cls.elements.reserve(params.e);
    std::uint64_t cur = pow_mod(params.g, cls.index, s);
    const std::uint64_t step = pow_mod(params.g, dj, s);
    for (std::uint64_t t = 0; t < params.e; ++t) {
        cls.elements.push_back(cls.multiplier * cur);
        cur = mul_mod(cur, step, s);
    }
    std::sort(cls.elements.begin(), cls.elements.end());
    return cls;
}

namespace {

// Marks each element of cls in seen[]; reports the first double hit.
bool place(std::vector<bool>& seen, const CyclotomicClass& cls, std::string& detail,
           const char* what) {
    for (std::uint64_t r : cls.elements) {
        if (seen[r]) {
            detail = std::string(what) + ": residue " + std::to_string(r) +
                     " covered twice (level " + std::to_string(cls.level) + ", index " +
                     std::to_string(cls.index) + ")";
            return false;
        }
        seen[r] = true;
    }
    return true;
}

bool all_covered(const std::vector<bool>& seen, std::string& detail, const char* what) {
    for (std::size_t r = 0; r < seen.size(); ++r) {
        if (!seen[r]) {
            detail = std::string(what) + ": residue " + std::to_string(r) + " uncovered";
            return false;
        }
    }
    return true;
}

}  // namespace

PartitionReport verify_partitions(const SequenceParams& params) {
    PartitionReport rep;

    // (a) per level: classes tile the units mod p^j
    for (unsigned j = 1; j <= params.m; ++j) {
        const std::uint64_t pj = params.p_pow(j);
        std::vector<bool> seen(pj, false);
        for (std::uint64_t i = 0; i < params.d(j); ++i) {
            auto cls = build_class(params, j, i, ModulusKind::PPower, ClassScale::None);
            if (!place(seen, cls, rep.detail, "units mod p^j")) {
                rep.ok = false;
                return rep;
            }
        }
        // units only: multiples of p stay unmarked
        for (std::uint64_t r = 0; r < pj; ++r) {
            const bool unit = r % params.p != 0;
            if (seen[r] != unit) {
                rep.ok = false;
                rep.detail = "units mod p^" + std::to_string(j) + ": residue " + std::to_string(r) +
                             (unit ? " uncovered" : " wrongly covered");
                return rep;
            }
        }
    }

    // (b) scaled classes + {0} tile Z_{p^m}
    {
        std::vector<bool> seen(params.pm, false);
        seen[0] = true;
        for (unsigned j = 1; j <= params.m; ++j) {
            for (std::uint64_t i = 0; i < params.d(j); ++i) {
                auto cls = build_class(params, j, i, ModulusKind::PPower, ClassScale::PPow);
                if (!place(seen, cls, rep.detail, "Z_{p^m}")) {
                    rep.ok = false;
                    return rep;
                }
            }
        }
        if (!all_covered(seen, rep.detail, "Z_{p^m}")) {
            rep.ok = false;
            return rep;
        }
    }

    // (c) both kinds + {0, p^m} tile Z_{2p^m}
    {
        std::vector<bool> seen(params.period, false);
        seen[0] = true;
        seen[params.pm] = true;
        for (unsigned j = 1; j <= params.m; ++j) {
            for (std::uint64_t i = 0; i < params.d(j); ++i) {
                auto even = build_class(params, j, i, ModulusKind::PPower, ClassScale::TwoPPow);
                auto odd = build_class(params, j, i, ModulusKind::TwoPPower, ClassScale::PPow);
                if (!place(seen, even, rep.detail, "Z_{2p^m}") ||
                    !place(seen, odd, rep.detail, "Z_{2p^m}")) {
                    rep.ok = false;
                    return rep;
                }
            }
        }
        if (!all_covered(seen, rep.detail, "Z_{2p^m}")) {
            rep.ok = false;
            return rep;
        }
    }

    return rep;
}

std::uint64_t SupportSet::ones_count() const {
    std::uint64_t n = 0;
    for (bool v : one) n += v;
    return n;
}

SupportSet build_support(const SequenceParams& params, Variant variant) {
    SupportSet sup;
    sup.variant = variant;
    sup.period = params.period;
    sup.one.assign(params.period, false);
    sup.one[0] = true;  // 0 in C_1 and C~_1; p^m stays in C_0 / C~_0

    auto mark = [&](const CyclotomicClass& cls) {
        for (std::uint64_t r : cls.elements) sup.one[r] = true;
    };

    for (unsigned j = 1; j <= params.m; ++j) {
        const std::uint64_t dj = params.d(j), delta = params.delta(j);
        for (std::uint64_t i = 0; i < delta; ++i) {
            // 2 p^{m-j} D_{i+b}^{(p^j)}: i-range swapped for the modified family
            const std::uint64_t even_index =
                variant == Variant::Standard ? i + params.b : i + delta + params.b;
            mark(build_class(params, j, even_index % dj, ModulusKind::PPower, ClassScale::TwoPPow));
            // p^{m-j} D_{i+b}^{(2p^j)}: same i-range in both families
            mark(build_class(params, j, (i + params.b) % dj, ModulusKind::TwoPPower,
                             ClassScale::PPow));
        }
    }
    return sup;
}

}  // namespace cycloseq
