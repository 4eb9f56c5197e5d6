#include "cycloseq/f2poly.hpp"

#include <bit>
#include <stdexcept>

namespace cycloseq {

void F2Poly::trim() {
    while (!w_.empty() && w_.back() == 0) w_.pop_back();
}

F2Poly F2Poly::one() {
    F2Poly p;
    p.w_.push_back(1);
    return p;
}

F2Poly F2Poly::x_pow(std::uint64_t k) {
    F2Poly p;
    p.set_coeff(k, true);
    return p;
}

F2Poly F2Poly::from_coeff_string(const std::string& bits) {
    F2Poly p;
    p.w_.assign(bits.size() / 64 + 1, 0);
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            p.w_[i >> 6] |= std::uint64_t{1} << (i & 63);
        else if (bits[i] != '0')
            throw std::invalid_argument("bitstring may contain only '0' and '1'");
    }
    p.trim();
    return p;
}

long long F2Poly::degree() const {
    if (w_.empty()) return -1;
    return static_cast<long long>(64 * (w_.size() - 1) + (63 - std::countl_zero(w_.back())));
}

bool F2Poly::coeff(std::uint64_t i) const {
    const std::size_t word = i >> 6;
    if (word >= w_.size()) return false;
    return (w_[word] >> (i & 63)) & 1;
}

void F2Poly::set_coeff(std::uint64_t i, bool v) {
    const std::size_t word = i >> 6;
    if (word >= w_.size()) {
        if (!v) return;
        w_.resize(word + 1, 0);
    }
    if (v)
        w_[word] |= std::uint64_t{1} << (i & 63);
    else
        w_[word] &= ~(std::uint64_t{1} << (i & 63));
    trim();
}

std::uint64_t F2Poly::weight() const {
    std::uint64_t n = 0;
    for (std::uint64_t w : w_) n += std::popcount(w);
    return n;
}

void F2Poly::xor_shifted(const F2Poly& b, std::uint64_t shift) {
    if (b.is_zero()) return;
    const std::uint64_t wordshift = shift >> 6;
    const unsigned bitshift = shift & 63;
    const std::size_t need = b.w_.size() + wordshift + 1;
    if (w_.size() < need) w_.resize(need, 0);
    if (bitshift == 0) {
        for (std::size_t i = 0; i < b.w_.size(); ++i) w_[i + wordshift] ^= b.w_[i];
    } else {
        for (std::size_t i = 0; i < b.w_.size(); ++i) {
            w_[i + wordshift] ^= b.w_[i] << bitshift;
            w_[i + wordshift + 1] ^= b.w_[i] >> (64 - bitshift);
        }
    }
    trim();
}

F2Poly operator+(const F2Poly& a, const F2Poly& b) {
    F2Poly out = a;
    if (out.w_.size() < b.w_.size()) out.w_.resize(b.w_.size(), 0);
    for (std::size_t i = 0; i < b.w_.size(); ++i) out.w_[i] ^= b.w_[i];
    out.trim();
    return out;
}

F2Poly operator*(const F2Poly& a, const F2Poly& b) {
    F2Poly out;
    if (a.is_zero() || b.is_zero()) return out;
    out.w_.assign(a.w_.size() + b.w_.size(), 0);
    for (std::size_t i = 0; i < a.w_.size(); ++i) {
        std::uint64_t word = a.w_[i];
        while (word) {
            const unsigned bit = std::countr_zero(word);
            word &= word - 1;
            out.xor_shifted(b, 64 * i + bit);
        }
    }
    out.trim();
    return out;
}

std::string F2Poly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (long long i = degree(); i >= 0; --i) {
        if (!coeff(static_cast<std::uint64_t>(i))) continue;
        if (!s.empty()) s += " + ";
        if (i == 0)
            s += "1";
        else if (i == 1)
            s += "x";
        else
            s += "x^" + std::to_string(i);
    }
    return s;
}

F2DivMod poly_divmod(const F2Poly& a, const F2Poly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    F2DivMod out;
    out.rem = a;
    const long long db = b.degree();
    while (out.rem.degree() >= db) {
        const std::uint64_t shift = static_cast<std::uint64_t>(out.rem.degree() - db);
        out.quot.set_coeff(shift, true);
        out.rem.xor_shifted(b, shift);
    }
    return out;
}

F2Poly poly_mod(const F2Poly& a, const F2Poly& b) { return poly_divmod(a, b).rem; }

F2Poly poly_gcd(const F2Poly& a, const F2Poly& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
    F2Poly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        F2Poly r2 = poly_mod(r0, r1);
        r0 = r1;
        r1 = r2;
    }
    return r0;
}

LCResult lc_via_gcd(const F2Poly& period_poly, std::uint64_t period) {
    LCResult res;
    res.method = LCMethod::GCD;
    F2Poly xn1 = F2Poly::x_pow(period) + F2Poly::one();
    if (period_poly.is_zero()) {
        res.lc = 0;
        res.minimal_poly = F2Poly::one();
        res.gcd_degree = period;
        return res;
    }
    F2Poly g = poly_gcd(xn1, period_poly);
    F2DivMod dm = poly_divmod(xn1, g);
    if (!dm.rem.is_zero()) throw std::logic_error("gcd does not divide x^N - 1");
    res.gcd_degree = static_cast<std::uint64_t>(g.degree());
    res.lc = period - *res.gcd_degree;
    res.minimal_poly = dm.quot;
    return res;
}

LCResult berlekamp_massey(const F2Poly& period_poly, std::uint64_t period) {
    LCResult res;
    res.method = LCMethod::BM;
    auto s = [&](std::uint64_t i) { return period_poly.coeff(i % period); };

    F2Poly c = F2Poly::one(), prev = F2Poly::one();
    std::uint64_t l = 0, gap = 1;
    for (std::uint64_t n = 0; n < 2 * period; ++n) {
        bool d = s(n);
        for (std::uint64_t i = 1; i <= l && i <= n; ++i) {
            if (c.coeff(i)) d ^= s(n - i);
        }
        if (!d) {
            ++gap;
        } else if (2 * l <= n) {
            F2Poly t = c;
            c.xor_shifted(prev, gap);
            l = n + 1 - l;
            prev = t;
            gap = 1;
        } else {
            c.xor_shifted(prev, gap);
            ++gap;
        }
    }
    res.lc = l;
    return res;
}

bool recurrence_regenerates(const F2Poly& taps, const F2Poly& period_poly, std::uint64_t period) {
    if (taps.is_zero() || !taps.coeff(0)) return false;
    const std::uint64_t l = static_cast<std::uint64_t>(taps.degree());
    std::vector<std::uint64_t> lags;
    for (std::uint64_t i = 1; i <= l; ++i) {
        if (taps.coeff(i)) lags.push_back(i);
    }
    auto s = [&](std::uint64_t i) { return period_poly.coeff(i % period); };
    for (std::uint64_t t = l; t < 2 * period; ++t) {
        bool predicted = false;
        for (std::uint64_t i : lags) predicted ^= s(t - i);
        if (predicted != s(t)) return false;
    }
    return true;
}

}  // namespace cycloseq
