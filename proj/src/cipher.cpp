#include "ieae/cipher.hpp"

namespace ieae {

namespace {

constexpr int kBlockDims[3] = {8, 16, 32};

struct DerivedMaterial {
    ByteSequence xbar;
    std::pair<int, int> block_size;
    std::uint8_t r, v;
};

DerivedMaterial derive(const SecretKey& key, double lambda) {
    const ChaoticSeed seed = seed_from_lambda(lambda);
    ByteSequence xbar = gen_xbar(seed, key.mu, 256);
    auto block_size = select_block_size(xbar, key.omega1, key.omega2);
    const std::uint8_t r = xbar.at1(key.mu1);
    const std::uint8_t v = xbar.at1(key.mu2);
    return {std::move(xbar), block_size, r, v};
}

}  // namespace

void SecretKey::validate() const {
    auto index_ok = [](int i) { return i >= 1 && i <= 256; };
    if (!index_ok(omega1) || !index_ok(omega2) || !index_ok(mu1) || !index_ok(mu2))
        throw KeyDomainError("key indexes must lie in [1, 256]");
    if (!(mu >= 3.9 && mu <= 4.0)) throw KeyDomainError("mu outside [3.9, 4]");
    if (a < 1 || b < 1) throw KeyDomainError("arnold controls must be positive");
}

std::pair<int, int> select_block_size(ByteSequence& xbar, int omega1, int omega2) {
    const int q1 = xbar.at1(omega1) % 3;
    const int q2 = xbar.at1(omega2) % 3;
    return {kBlockDims[q1], kBlockDims[q2]};
}

int mu3(const GrayImage& img, int p1, int p2) {
    if (img.rows < p1 || img.cols < p2)
        throw LayoutError("mu3: image smaller than one block");
    unsigned sum = 0;
    for (int i = 0; i < p1; ++i)
        for (int j = 0; j < p2; ++j) sum += img.at(i, j);
    return static_cast<int>(sum % 256) + 1;
}

std::vector<Block> encrypt_round(const std::vector<Block>& plain_blocks,
                                 const std::vector<Block>& d_blocks,
                                 std::uint8_t v, const Block& c0) {
    if (plain_blocks.size() != d_blocks.size() || plain_blocks.empty())
        throw LayoutError("encrypt_round: block count mismatch");
    std::vector<Block> out;
    out.reserve(plain_blocks.size());
    const Block* prev = &c0;
    const std::size_t last = plain_blocks.size() - 1;
    for (std::size_t k = 0; k < plain_blocks.size(); ++k) {
        const Block& ib = plain_blocks[k];
        const Block& db = d_blocks[k];
        if (ib.size() != c0.size() || db.size() != c0.size())
            throw LayoutError("encrypt_round: block shape mismatch");
        Block cb(ib.size());
        for (std::size_t t = 0; t < ib.size(); ++t) {
            unsigned d = (k == last) ? 0u : db[t];
            cb[t] = static_cast<std::uint8_t>((ib[t] + v * d + (*prev)[t]) % 256);
        }
        out.push_back(std::move(cb));
        prev = &out.back();
    }
    return out;
}

std::vector<Block> decrypt_round(const std::vector<Block>& cipher_blocks,
                                 const std::vector<Block>& d_blocks,
                                 std::uint8_t v, const Block& c0) {
    if (cipher_blocks.size() != d_blocks.size() || cipher_blocks.empty())
        throw LayoutError("decrypt_round: block count mismatch");
    std::vector<Block> out(cipher_blocks.size());
    const std::size_t last = cipher_blocks.size() - 1;
    for (std::size_t k = cipher_blocks.size(); k-- > 0;) {
        const Block& cb = cipher_blocks[k];
        const Block& db = d_blocks[k];
        const Block& prev = (k == 0) ? c0 : cipher_blocks[k - 1];
        if (cb.size() != c0.size() || db.size() != c0.size())
            throw LayoutError("decrypt_round: block shape mismatch");
        Block ib(cb.size());
        for (std::size_t t = 0; t < cb.size(); ++t) {
            unsigned d = (k == last) ? 0u : db[t];
            ib[t] = static_cast<std::uint8_t>((cb[t] + 256u * 256u - v * d - prev[t]) % 256);
        }
        out[k] = std::move(ib);
    }
    return out;
}

EncryptResult encrypt(const GrayImage& img, const SecretKey& key,
                      const PublicParams& params, double lambda) {
    key.validate();
    if (params.rounds < 1) throw std::invalid_argument("round count must be >= 1");

    auto mat = derive(key, lambda);
    const auto [p1, p2] = mat.block_size;
    auto [padded, layout] = pad(img, p1, p2);

    const int tag = mu3(padded, p1, p2);
    const ChaoticSeed seed = seed_from_lambda(lambda);
    const auto d_matrix =
        build_D(seed, key.a, key.b, mat.r, layout.padded_rows, layout.padded_cols);
    GrayImage d_image(layout.padded_rows, layout.padded_cols);
    d_image.px = d_matrix;
    const auto d_blocks = split_blocks(d_image, layout);
    const Block c0 = build_C0(mat.xbar, tag, p1, p2);

    auto blocks = split_blocks(padded, layout);
    for (int round = 0; round < params.rounds; ++round)
        blocks = encrypt_round(blocks, d_blocks, mat.v, c0);

    return {join_blocks(blocks, layout), tag, layout};
}

GrayImage decrypt(const GrayImage& cipher, const SecretKey& key,
                  const PublicParams& params, double lambda, int mu3_tag) {
    key.validate();
    if (params.rounds < 1) throw std::invalid_argument("round count must be >= 1");
    if (mu3_tag < 1 || mu3_tag > 256) throw std::invalid_argument("mu3 out of [1, 256]");

    auto mat = derive(key, lambda);
    const auto [p1, p2] = mat.block_size;
    if (cipher.rows % p1 != 0 || cipher.cols % p2 != 0)
        throw LayoutError("decrypt: cipher dims not a multiple of the block size");
    BlockLayout layout{p1, p2, cipher.rows / p1, cipher.cols / p2, cipher.rows, cipher.cols};

    const ChaoticSeed seed = seed_from_lambda(lambda);
    const auto d_matrix = build_D(seed, key.a, key.b, mat.r, cipher.rows, cipher.cols);
    GrayImage d_image(cipher.rows, cipher.cols);
    d_image.px = d_matrix;
    const auto d_blocks = split_blocks(d_image, layout);
    const Block c0 = build_C0(mat.xbar, mu3_tag, p1, p2);

    auto blocks = split_blocks(cipher, layout);
    for (int round = 0; round < params.rounds; ++round)
        blocks = decrypt_round(blocks, d_blocks, mat.v, c0);

    return join_blocks(blocks, layout);
}

}  // namespace ieae
