#pragma once

#include <cstdint>
#include <stdexcept>

namespace ieae {

enum class Quantizer { Floor, Round, Ceil };

// Fractional part x - floor(x), in [0,1).
double rem(double x);

// floor(x * 10^14) mod 256, computed by exact integer scaling of the
// binary64 bit pattern. Never uses floating multiplication, so the result
// is identical across platforms.
std::uint8_t convert_byte(double x);

// quantizer(x * 10^m) mod modulus, exact. Round is half-to-even.
// Supports m up to 22 (the scaled significand must fit in 128 bits).
std::uint32_t convert_generic(double x, Quantizer q, int m, std::uint32_t modulus);

// Nearest binary64 to frac(x * 10^m), the fraction computed exactly from
// the bit pattern of x. Used to derive chaotic initial conditions.
double frac_scaled(double x, int m);

}  // namespace ieae
