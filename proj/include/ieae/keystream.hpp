#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ieae/convert.hpp"

namespace ieae {

struct KeyDomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Chaotic initial conditions derived from a Lyapunov exponent.
struct ChaoticSeed {
    double lambda = 0.0;
    double x0_logistic = 0.0;                 // Rem(|lambda| * 10^8)
    std::pair<double, double> xy0_arnold{0.0, 0.0};  // (|lambda|, Rem(|lambda| * 10^5))
};

ChaoticSeed seed_from_lambda(double lambda);

// Logistic orbit x_k = mu * x_{k-1} * (1 - x_{k-1}), binary64, no FMA.
std::vector<double> logistic_iterate(double x0, double mu, std::size_t n);

// Generalized Arnold orbit: [[1,a],[b,1+ab]] then mod 1 componentwise.
std::vector<std::pair<double, double>> arnold_iterate(std::pair<double, double> xy0,
                                                      long a, long b, std::size_t n);

// Converted Logistic byte sequence x-bar, 1-indexed, extensible on demand.
// Extending never changes earlier entries (prefix stability).
class ByteSequence {
public:
    ByteSequence(const ChaoticSeed& seed, double mu);

    void ensure(std::size_t min_len);
    std::uint8_t at1(std::size_t index1);  // 1-based, extends as needed
    std::size_t size() const { return values_.size(); }
    const std::vector<std::uint8_t>& values() const { return values_; }

private:
    double mu_;
    double x_;  // current orbit value
    std::vector<std::uint8_t> values_;
};

ByteSequence gen_xbar(const ChaoticSeed& seed, double mu, std::size_t min_len);

// Arnold-derived M x N mask matrix: skip r pairs, then interleave
// x_{r+1}, y_{r+1}, x_{r+2}, ... through convert_byte, row-major fill.
std::vector<std::uint8_t> build_D(const ChaoticSeed& seed, long a, long b,
                                  std::size_t r, int rows, int cols);

// Initial block C0: p1*p2 bytes of x-bar starting at index mu3, row-major.
std::vector<std::uint8_t> build_C0(ByteSequence& xbar, int mu3, int p1, int p2);

// All key-derived cipher material for one (seed, key) pair.
struct KeystreamSet {
    std::uint8_t r = 0;  // skip count, x-bar[mu1]
    std::uint8_t v = 0;  // multiplier, x-bar[mu2]
    std::vector<std::uint8_t> D;   // padded_rows * padded_cols
    std::vector<std::uint8_t> C0;  // p1 * p2
};

}  // namespace ieae
