#pragma once

#include "ieae/image.hpp"
#include "ieae/keystream.hpp"

namespace ieae {

// Index parameters and chaotic map controls. All indexes are 1-based and
// must land in the guaranteed 256-byte x-bar prefix.
struct SecretKey {
    int omega1 = 1, omega2 = 1;  // block-size selectors
    int mu1 = 1, mu2 = 1;        // skip count r and multiplier v selectors
    double mu = 3.999;           // Logistic control, [3.9, 4]
    long a = 1, b = 1;           // Arnold controls

    void validate() const;
};

struct PublicParams {
    int rounds = 1;  // R
};

// Block size from the nine-entry look-up table, q_i = x-bar[omega_i] mod 3
// (scaling an integer byte by 10^14 leaves its residue mod 3 unchanged).
std::pair<int, int> select_block_size(ByteSequence& xbar, int omega1, int omega2);

// First-block pixel sum mod 256, plus 1. Image must cover one block.
int mu3(const GrayImage& img, int p1, int p2);

// One chained round: C_k = (I_k + v*D_k + C_{k-1}) mod 256, with the last
// D block forced to zero.
std::vector<Block> encrypt_round(const std::vector<Block>& plain_blocks,
                                 const std::vector<Block>& d_blocks,
                                 std::uint8_t v, const Block& c0);

std::vector<Block> decrypt_round(const std::vector<Block>& cipher_blocks,
                                 const std::vector<Block>& d_blocks,
                                 std::uint8_t v, const Block& c0);

struct EncryptResult {
    GrayImage cipher;  // padded dims
    int mu3_tag = 1;
    BlockLayout layout;
};

// Full pipeline: seed -> x-bar -> block size -> pad -> mu3 -> D, C0, r, v
// -> R chained rounds reusing the same (D, v, C0).
EncryptResult encrypt(const GrayImage& img, const SecretKey& key,
                      const PublicParams& params, double lambda);

// Inverse pipeline; mu3 must be supplied (it depends on the plaintext).
GrayImage decrypt(const GrayImage& cipher, const SecretKey& key,
                  const PublicParams& params, double lambda, int mu3_tag);

}  // namespace ieae
