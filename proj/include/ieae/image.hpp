#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ieae {

struct LayoutError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Gray-scale image, row-major bytes.
struct GrayImage {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> px;

    GrayImage() = default;
    GrayImage(int r, int c, std::uint8_t fill = 0)
        : rows(r), cols(c), px(static_cast<std::size_t>(r) * c, fill) {
        if (r <= 0 || c <= 0) throw std::invalid_argument("image dims must be positive");
    }

    std::uint8_t& at(int i, int j) { return px[static_cast<std::size_t>(i) * cols + j]; }
    std::uint8_t at(int i, int j) const { return px[static_cast<std::size_t>(i) * cols + j]; }

    bool operator==(const GrayImage&) const = default;
};

// Block grid geometry of a padded image.
struct BlockLayout {
    int p1 = 0, p2 = 0;       // block dims
    int r1 = 0, r2 = 0;       // grid dims
    int padded_rows = 0, padded_cols = 0;

    int block_count() const { return r1 * r2; }
    bool operator==(const BlockLayout&) const = default;
};

// Zero-pads so the block size divides both dims.
std::pair<GrayImage, BlockLayout> pad(const GrayImage& img, int p1, int p2);

// Drops padding rows/cols, restoring the original dims.
GrayImage unpad(const GrayImage& img, int orig_rows, int orig_cols);

using Block = std::vector<std::uint8_t>;  // p1*p2 bytes, row-major

// Blocks in raster order over the block grid, k = 0..r1*r2-1.
std::vector<Block> split_blocks(const GrayImage& img, const BlockLayout& layout);
GrayImage join_blocks(const std::vector<Block>& blocks, const BlockLayout& layout);

}  // namespace ieae
