#include "cycloseq/numtheory.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace cycloseq {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % mod);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t mod) {
    std::uint64_t base = a % mod, out = 1 % mod;
    while (e > 0) {
        if (e & 1) out = mul_mod(out, base, mod);
        base = mul_mod(base, base, mod);
        e >>= 1;
    }
    return out;
}

namespace {

bool miller_rabin(std::uint64_t n, std::uint64_t a) {
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    std::uint64_t x = pow_mod(a % n, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < r; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    // Deterministic for all 64-bit inputs with this witness set.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (!miller_rabin(n, a)) return false;
    }
    return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    auto take = [&](std::uint64_t p) {
        unsigned k = 0;
        while (n % p == 0) {
            n /= p;
            ++k;
        }
        if (k > 0) out.emplace_back(p, k);
    };
    take(2);
    take(3);
    for (std::uint64_t d = 5; d <= n / d; d += 6) {
        take(d);
        take(d + 2);
    }
    if (n > 1) out.emplace_back(n, 1u);
    return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t phi = n;
    for (auto [p, k] : factorize(n)) phi = phi / p * (p - 1);
    return phi;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
    std::uint64_t out = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && out > UINT64_MAX / base) throw std::overflow_error("checked_pow overflow");
        out *= base;
    }
    return out;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t modulus) {
    if (modulus < 2) throw std::invalid_argument("modulus must be >= 2");
    a %= modulus;
    if (std::gcd(a, modulus) != 1) throw std::domain_error("not a unit");
    std::uint64_t t = euler_phi(modulus);
    for (auto [q, k] : factorize(t)) {
        while (t % q == 0 && pow_mod(a, t / q, modulus) == 1) t /= q;
    }
    return t;
}

namespace {

bool is_primitive_root(std::uint64_t g, std::uint64_t modulus) {
    if (std::gcd(g % modulus, modulus) != 1) return false;
    std::uint64_t phi = euler_phi(modulus);
    for (auto [q, k] : factorize(phi)) {
        if (pow_mod(g, phi / q, modulus) == 1) return false;
    }
    return true;
}

}  // namespace

std::uint64_t find_common_odd_primitive_root(std::uint64_t p, unsigned m) {
    for (std::uint64_t g = 3;; g += 2) {
        if (g % p == 0) continue;
        if (!is_primitive_root(g, p)) continue;
        if (m >= 2 && !is_primitive_root(g, p * p)) continue;
        return g;
    }
}

bool validate_primitive_root(std::uint64_t g, std::uint64_t p, unsigned m) {
    if (g < 2 || g % 2 == 0) return false;
    if (!is_primitive_root(g, p)) return false;
    if (m >= 2 && !is_primitive_root(g, p * p)) return false;
    return true;
}

std::uint64_t discrete_log(std::uint64_t g, std::uint64_t x, std::uint64_t modulus) {
    x %= modulus;
    if (std::gcd(x, modulus) != 1) throw std::domain_error("not a unit");
    std::uint64_t order = euler_phi(modulus);
    constexpr std::uint64_t kScanLimit = 100000;
    if (order <= kScanLimit) {
        std::uint64_t cur = 1 % modulus;
        for (std::uint64_t k = 0; k < order; ++k) {
            if (cur == x) return k;
            cur = mul_mod(cur, g % modulus, modulus);
        }
        throw std::domain_error("discrete log not found (g is not a generator?)");
    }
    // Baby-step/giant-step.
    std::uint64_t step = 1;
    while (step * step < order) ++step;
    std::unordered_map<std::uint64_t, std::uint64_t> baby;
    baby.reserve(step);
    std::uint64_t cur = 1 % modulus;
    for (std::uint64_t j = 0; j < step; ++j) {
        baby.emplace(cur, j);
        cur = mul_mod(cur, g % modulus, modulus);
    }
    std::uint64_t giant = pow_mod(g, order - step % order, modulus);  // g^{-step}
    cur = x;
    for (std::uint64_t i = 0; i * step < order + step; ++i) {
        auto it = baby.find(cur);
        if (it != baby.end()) return (i * step + it->second) % order;
        cur = mul_mod(cur, giant, modulus);
    }
    throw std::domain_error("discrete log not found (g is not a generator?)");
}

namespace {

SequenceParams make_params(std::uint64_t p, unsigned m, std::uint64_t f, std::uint64_t b,
                           std::uint64_t g, bool auto_g) {
    if (p < 3 || p % 2 == 0 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime");
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    if (f < 2 || (f & (f - 1)) != 0) throw std::invalid_argument("f must be a power of two >= 2");
    if ((p - 1) % f != 0) throw std::invalid_argument("f must divide p-1");

    SequenceParams sp;
    sp.p = p;
    sp.m = m;
    sp.f = f;
    sp.e = (p - 1) / f;
    try {
        sp.pm = checked_pow(p, m);
        if (sp.pm > (std::uint64_t{1} << 28)) throw std::overflow_error("large");
        sp.period = 2 * sp.pm;
    } catch (const std::overflow_error&) {
        throw std::invalid_argument("p^m out of supported range (max 2^28)");
    }
    if (auto_g) {
        sp.g = find_common_odd_primitive_root(p, m);
    } else {
        if (!validate_primitive_root(g, p, m))
            throw std::invalid_argument(m >= 2
                                            ? "g must be an odd primitive root mod p and mod p^2"
                                            : "g must be an odd primitive root mod p");
        sp.g = g;
    }
    sp.b = b % sp.d(m);
    return sp;
}

}  // namespace

SequenceParams SequenceParams::make(std::uint64_t p, unsigned m, std::uint64_t f, std::uint64_t b) {
    return make_params(p, m, f, b, 0, true);
}

SequenceParams SequenceParams::make(std::uint64_t p, unsigned m, std::uint64_t f, std::uint64_t b,
                                    std::uint64_t g) {
    return make_params(p, m, f, b, g, false);
}

std::uint64_t SequenceParams::p_pow(unsigned j) const {
    std::uint64_t out = 1;
    for (unsigned i = 0; i < j; ++i) out *= p;
    return out;
}

std::uint64_t SequenceParams::d(unsigned j) const { return p_pow(j - 1) * f; }

CaseClass classify_case(const SequenceParams& params) {
    CaseClass c;
    const std::uint64_t p = params.p, p2 = p * p;
    c.tau = multiplicative_order(2, p);
    const std::uint64_t rp = pow_mod(2, params.e, p);
    c.e_residue_mod_p = rp == 1          ? ResidueSign::PlusOne
                        : rp == p - 1    ? ResidueSign::MinusOne
                                         : ResidueSign::Neither;
    const std::uint64_t rp2 = pow_mod(2, params.e, p2);
    c.e_residue_mod_p2 = rp2 == 1          ? ResidueSign::PlusOne
                         : rp2 == p2 - 1   ? ResidueSign::MinusOne
                                           : ResidueSign::Neither;
    c.wieferich = pow_mod(2, p - 1, p2) == 1;
    c.n = multiplicative_order(2, params.pm);
    c.h = discrete_log(params.g, 2, params.pm) % params.d(params.m);
    return c;
}

}  // namespace cycloseq
