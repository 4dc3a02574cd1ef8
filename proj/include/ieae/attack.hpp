#pragma once

#include <optional>

#include "ieae/cipher.hpp"

namespace ieae {

// Equivalent key recovered from one known (plain, cipher) pair.
struct MaskImage {
    GrayImage mask;  // padded dims
    BlockLayout layout;
    int rounds = 1;
    int mu3_tag = 1;
};

using BlockStream = std::vector<Block>;

// S_k = (sum of B_1..B_k) mod 256, element-wise.
BlockStream block_prefix_sum(const BlockStream& blocks);

// Exact inverse of block_prefix_sum.
BlockStream block_prefix_diff(const BlockStream& blocks);

// R-fold prefix sum: the operational form of composing the cipher round R
// times with the keystream stripped out.
BlockStream nested_sum(const BlockStream& blocks, int rounds);

// The literal nested summation with innermost bound k - h_{R-1} + 1, kept
// separate so it can be compared against nested_sum.
BlockStream closed_form_nested_sum(const BlockStream& blocks, int rounds);

// D' = (C - nested_sum(I, R)) mod 256, block-wise; tags the mask with
// mu3 of the known plaintext.
MaskImage extract_mask(const GrayImage& plain, const GrayImage& cipher,
                       const BlockLayout& layout, int rounds);

// block_prefix_diff applied R times to (C - D') mod 256. Recovers the padded
// plaintext exactly when the target shares (key, lambda, R) and mu3.
GrayImage decrypt_with_mask(const GrayImage& cipher, const MaskImage& mask);

bool mu3_match(const GrayImage& a, const GrayImage& b, int p1, int p2);

struct LayoutCandidate {
    BlockLayout layout;
    MaskImage mask;
    std::optional<double> score;  // mean abs neighbor diff on the probe; lower is better
};

// Tries all nine table layouts that divide the cipher dims. With a probe
// cipher, candidates are ranked by the smoothness of its mask-decryption.
std::vector<LayoutCandidate> enumerate_layout_candidates(
    const GrayImage& plain, const GrayImage& cipher, int rounds,
    const std::optional<GrayImage>& probe_cipher = std::nullopt);

}  // namespace ieae
