#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ieae/convert.hpp"

namespace ieae {

// Successor map over a finite digitized state space.
struct FunctionalGraph {
    std::vector<std::uint32_t> succ;
    std::vector<std::string> labels;  // optional display values, one per node

    std::size_t size() const { return succ.size(); }
};

struct CensusEntry {
    std::size_t cycle_length;
    std::size_t component_size;
    std::size_t count;
};

// Aggregated component census, ordered by cycle length desc, then size.
struct ComponentCensus {
    std::vector<CensusEntry> entries;
    std::size_t node_total = 0;
};

struct FixedPointSpec {
    int e = 6;  // precision bits; domain is {0, ..., 2^e} inclusive
    Quantizer quantizer = Quantizer::Floor;
};

struct MiniFloatSpec {
    int sign_bits = 1;
    int exp_bits = 4;
    int mant_bits = 4;
    int bias = 7;
};

// Logistic map with mu = mu_num / 2^mu_den_pow2 over the dyadic grid
// {0, 1, ..., 2^e} / 2^e, quantized exactly (no floating error).
FunctionalGraph logistic_fixed_map(long mu_num, int mu_den_pow2, const FixedPointSpec& spec);

// All representable minifloat values of the spec in [0, 1].
std::vector<double> minifloat_values(const MiniFloatSpec& spec);

// Logistic map with every intermediate rounded to the minifloat format
// (round-to-nearest-even), successors clamped into [0, 1].
FunctionalGraph logistic_minifloat_map(double mu, const MiniFloatSpec& spec);

// Eq.-(2) dynamics reduced mod 2^e; node z = x' + y' * 2^e. Always a
// permutation (the matrix has determinant 1).
FunctionalGraph arnold_mod_map(long a_prime, long b_prime, int e);

ComponentCensus component_census(const FunctionalGraph& graph);

// DOT text, one edge per node; labels emitted when present.
std::string export_dot(const FunctionalGraph& graph);

std::string census_text(const ComponentCensus& census);

struct Pow10Stats {
    int bit_length;
    int popcount;
};

// Exact big-integer 10^m; bit_length is asserted equal to ceil(m*log2(10)).
Pow10Stats pow10_stats(int m);

}  // namespace ieae
