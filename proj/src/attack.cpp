#include "ieae/attack.hpp"

#include <algorithm>
#include <cmath>

namespace ieae {

namespace {

void check_stream(const BlockStream& blocks) {
    if (blocks.empty()) throw LayoutError("empty block stream");
    for (const auto& b : blocks)
        if (b.size() != blocks.front().size()) throw LayoutError("block shape mismatch");
}

GrayImage pad_to(const GrayImage& img, int rows, int cols) {
    if (img.rows > rows || img.cols > cols)
        throw LayoutError("image larger than the target dims");
    GrayImage out(rows, cols, 0);
    for (int i = 0; i < img.rows; ++i)
        for (int j = 0; j < img.cols; ++j) out.at(i, j) = img.at(i, j);
    return out;
}

double mean_abs_neighbor_diff(const GrayImage& img) {
    long long total = 0;
    long long count = 0;
    for (int i = 0; i < img.rows; ++i)
        for (int j = 0; j < img.cols; ++j) {
            if (j + 1 < img.cols) {
                total += std::abs(int(img.at(i, j)) - int(img.at(i, j + 1)));
                ++count;
            }
            if (i + 1 < img.rows) {
                total += std::abs(int(img.at(i, j)) - int(img.at(i + 1, j)));
                ++count;
            }
        }
    return count ? double(total) / double(count) : 0.0;
}

}  // namespace

BlockStream block_prefix_sum(const BlockStream& blocks) {
    check_stream(blocks);
    BlockStream out = blocks;
    for (std::size_t k = 1; k < out.size(); ++k)
        for (std::size_t t = 0; t < out[k].size(); ++t)
            out[k][t] = static_cast<std::uint8_t>((out[k][t] + out[k - 1][t]) % 256);
    return out;
}

BlockStream block_prefix_diff(const BlockStream& blocks) {
    check_stream(blocks);
    BlockStream out = blocks;
    for (std::size_t k = out.size(); k-- > 1;)
        for (std::size_t t = 0; t < out[k].size(); ++t)
            out[k][t] = static_cast<std::uint8_t>((out[k][t] + 256 - blocks[k - 1][t]) % 256);
    return out;
}

BlockStream nested_sum(const BlockStream& blocks, int rounds) {
    if (rounds < 1) throw std::invalid_argument("rounds must be >= 1");
    BlockStream out = blocks;
    for (int r = 0; r < rounds; ++r) out = block_prefix_sum(out);
    return out;
}

BlockStream closed_form_nested_sum(const BlockStream& blocks, int rounds) {
    if (rounds != 2 && rounds != 3) throw std::invalid_argument("closed form covers R in {2, 3}");
    check_stream(blocks);
    const std::size_t n = blocks.size();
    const std::size_t len = blocks.front().size();

    // plain prefix sums in wide integers so loop bounds can be applied literally
    std::vector<std::vector<long long>> prefix(n, std::vector<long long>(len, 0));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t t = 0; t < len; ++t)
            prefix[k][t] = (k ? prefix[k - 1][t] : 0) + blocks[k][t];

    BlockStream out(n, Block(len));
    for (std::size_t k1 = 1; k1 <= n; ++k1) {
        std::vector<long long> acc(len, 0);
        if (rounds == 2) {
            for (std::size_t h1 = 1; h1 <= k1; ++h1) {
                const std::size_t upper = k1 - h1 + 1;  // innermost bound
                for (std::size_t t = 0; t < len; ++t) acc[t] += prefix[upper - 1][t];
            }
        } else {
            for (std::size_t h1 = 1; h1 <= k1; ++h1)
                for (std::size_t h2 = 1; h2 <= h1; ++h2) {
                    const std::size_t upper = k1 - h2 + 1;
                    for (std::size_t t = 0; t < len; ++t) acc[t] += prefix[upper - 1][t];
                }
        }
        for (std::size_t t = 0; t < len; ++t)
            out[k1 - 1][t] = static_cast<std::uint8_t>(acc[t] % 256);
    }
    return out;
}

MaskImage extract_mask(const GrayImage& plain, const GrayImage& cipher,
                       const BlockLayout& layout, int rounds) {
    if (cipher.rows != layout.padded_rows || cipher.cols != layout.padded_cols)
        throw LayoutError("extract_mask: cipher dims do not match layout");
    const GrayImage plain_padded = pad_to(plain, layout.padded_rows, layout.padded_cols);

    const auto summed = nested_sum(split_blocks(plain_padded, layout), rounds);
    const auto c_blocks = split_blocks(cipher, layout);
    BlockStream mask_blocks(c_blocks.size());
    for (std::size_t k = 0; k < c_blocks.size(); ++k) {
        mask_blocks[k].resize(c_blocks[k].size());
        for (std::size_t t = 0; t < c_blocks[k].size(); ++t)
            mask_blocks[k][t] =
                static_cast<std::uint8_t>((c_blocks[k][t] + 256 - summed[k][t]) % 256);
    }
    return {join_blocks(mask_blocks, layout), layout, rounds,
            mu3(plain_padded, layout.p1, layout.p2)};
}

GrayImage decrypt_with_mask(const GrayImage& cipher, const MaskImage& mask) {
    if (cipher.rows != mask.mask.rows || cipher.cols != mask.mask.cols)
        throw LayoutError("decrypt_with_mask: dim mismatch");
    GrayImage delta(cipher.rows, cipher.cols);
    for (std::size_t i = 0; i < delta.px.size(); ++i)
        delta.px[i] = static_cast<std::uint8_t>((cipher.px[i] + 256 - mask.mask.px[i]) % 256);
    auto blocks = split_blocks(delta, mask.layout);
    for (int r = 0; r < mask.rounds; ++r) blocks = block_prefix_diff(blocks);
    return join_blocks(blocks, mask.layout);
}

bool mu3_match(const GrayImage& a, const GrayImage& b, int p1, int p2) {
    auto padded_mu3 = [&](const GrayImage& img) {
        if (img.rows >= p1 && img.cols >= p2) return mu3(img, p1, p2);
        auto [padded, layout] = pad(img, p1, p2);
        return mu3(padded, p1, p2);
    };
    return padded_mu3(a) == padded_mu3(b);
}

std::vector<LayoutCandidate> enumerate_layout_candidates(
    const GrayImage& plain, const GrayImage& cipher, int rounds,
    const std::optional<GrayImage>& probe_cipher) {
    static constexpr int kDims[3] = {8, 16, 32};
    std::vector<LayoutCandidate> out;
    for (int p1 : kDims)
        for (int p2 : kDims) {
            if (cipher.rows % p1 != 0 || cipher.cols % p2 != 0) continue;
            BlockLayout layout{p1, p2, cipher.rows / p1, cipher.cols / p2,
                               cipher.rows, cipher.cols};
            MaskImage mask = extract_mask(plain, cipher, layout, rounds);
            std::optional<double> score;
            if (probe_cipher && probe_cipher->rows == cipher.rows &&
                probe_cipher->cols == cipher.cols)
                score = mean_abs_neighbor_diff(decrypt_with_mask(*probe_cipher, mask));
            out.push_back({layout, std::move(mask), score});
        }
    if (probe_cipher)
        std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
            return x.score.value_or(1e300) < y.score.value_or(1e300);
        });
    return out;
}

}  // namespace ieae
