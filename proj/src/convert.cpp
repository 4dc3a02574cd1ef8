#include "ieae/convert.hpp"

#include <cmath>
#include <cstring>
#include <limits>

namespace ieae {

namespace {

using u128 = unsigned __int128;

struct Decomposed {
    std::uint64_t sig;  // integer significand, x = sig * 2^exp
    int exp;
};

// Splits a non-negative finite binary64 into sig * 2^exp with integer sig.
Decomposed decompose(double x) {
    std::uint64_t bits;
    std::memcpy(&bits, &x, sizeof bits);
    const std::uint64_t mant = bits & ((std::uint64_t(1) << 52) - 1);
    const int biased = static_cast<int>((bits >> 52) & 0x7FF);
    if (biased == 0) return {mant, -1074};  // subnormal or zero
    return {mant | (std::uint64_t(1) << 52), biased - 1075};
}

u128 pow10_u128(int m) {
    u128 v = 1;
    for (int i = 0; i < m; ++i) v *= 10;
    return v;
}

int bit_length(u128 v) {
    int n = 0;
    while (v) {
        v >>= 1;
        ++n;
    }
    return n;
}

std::uint64_t mod_pow2(std::uint64_t base_mod, int e, std::uint64_t modulus) {
    // (base_mod * 2^e) mod modulus
    std::uint64_t r = base_mod % modulus;
    for (int i = 0; i < e; ++i) r = (r * 2) % modulus;
    return r;
}

}  // namespace

double rem(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("rem: non-finite input");
    return x - std::floor(x);
}

std::uint32_t convert_generic(double x, Quantizer q, int m, std::uint32_t modulus) {
    if (!std::isfinite(x) || x < 0) throw std::invalid_argument("convert: negative or non-finite input");
    if (m < 1 || m > 22) throw std::invalid_argument("convert: exponent out of supported range");
    if (modulus < 2) throw std::invalid_argument("convert: modulus must be >= 2");

    const auto [sig, exp] = decompose(x);
    const u128 v = u128(sig) * pow10_u128(m);  // x * 10^m = v * 2^exp, exact

    u128 quantized_mod;  // quantizer(v * 2^exp) mod modulus
    if (exp >= 0) {
        // exact integer; all quantizers agree
        quantized_mod = mod_pow2(static_cast<std::uint64_t>(v % modulus), exp, modulus);
    } else {
        const int k = -exp;
        u128 fl, remainder;
        bool half_tie = false, above_half = false;
        if (k >= 128) {
            fl = 0;
            remainder = v;
            // v < 2^127 <= 2^(k-1), so always below the halfway point
        } else {
            fl = v >> k;
            remainder = v & ((u128(1) << k) - 1);
            const u128 half = u128(1) << (k - 1);
            half_tie = (remainder == half);
            above_half = (remainder > half);
        }
        u128 result = fl;
        switch (q) {
            case Quantizer::Floor:
                break;
            case Quantizer::Ceil:
                if (remainder != 0) ++result;
                break;
            case Quantizer::Round:
                if (above_half || (half_tie && (fl & 1))) ++result;
                break;
        }
        quantized_mod = result % modulus;
    }
    return static_cast<std::uint32_t>(quantized_mod);
}

std::uint8_t convert_byte(double x) {
    return static_cast<std::uint8_t>(convert_generic(x, Quantizer::Floor, 14, 256));
}

double frac_scaled(double x, int m) {
    if (!std::isfinite(x)) throw std::invalid_argument("frac_scaled: non-finite input");
    if (x < 0) throw std::invalid_argument("frac_scaled: negative input");
    if (m < 1 || m > 22) throw std::invalid_argument("frac_scaled: exponent out of supported range");

    const auto [sig, exp] = decompose(x);
    if (exp >= 0) return 0.0;  // x * 10^m is an exact integer
    const int k = -exp;
    const u128 v = u128(sig) * pow10_u128(m);
    u128 num;  // fraction = num / 2^k
    if (k >= 128)
        num = v;
    else
        num = v & ((u128(1) << k) - 1);
    if (num == 0) return 0.0;

    // Round num / 2^k to nearest binary64, ties to even.
    const int len = bit_length(num);
    if (len <= 53) return std::ldexp(static_cast<double>(std::uint64_t(num)), -k);
    const int shift = len - 54;
    std::uint64_t top = static_cast<std::uint64_t>(num >> shift);  // 54 bits
    const bool sticky = (num & ((u128(1) << shift) - 1)) != 0;
    std::uint64_t keep = top >> 1;
    if ((top & 1) && (sticky || (keep & 1))) ++keep;
    return std::ldexp(static_cast<double>(keep), shift + 1 - k);
}

}  // namespace ieae
