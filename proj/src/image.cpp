#include "ieae/image.hpp"

namespace ieae {

std::pair<GrayImage, BlockLayout> pad(const GrayImage& img, int p1, int p2) {
    if (p1 <= 0 || p2 <= 0) throw std::invalid_argument("block dims must be positive");
    const int r1 = (img.rows + p1 - 1) / p1;
    const int r2 = (img.cols + p2 - 1) / p2;
    BlockLayout layout{p1, p2, r1, r2, r1 * p1, r2 * p2};
    GrayImage out(layout.padded_rows, layout.padded_cols, 0);
    for (int i = 0; i < img.rows; ++i)
        for (int j = 0; j < img.cols; ++j) out.at(i, j) = img.at(i, j);
    return {std::move(out), layout};
}

GrayImage unpad(const GrayImage& img, int orig_rows, int orig_cols) {
    if (orig_rows > img.rows || orig_cols > img.cols)
        throw LayoutError("original dims exceed padded dims");
    GrayImage out(orig_rows, orig_cols);
    for (int i = 0; i < orig_rows; ++i)
        for (int j = 0; j < orig_cols; ++j) out.at(i, j) = img.at(i, j);
    return out;
}

std::vector<Block> split_blocks(const GrayImage& img, const BlockLayout& layout) {
    if (img.rows != layout.padded_rows || img.cols != layout.padded_cols)
        throw LayoutError("image dims do not match layout");
    std::vector<Block> blocks;
    blocks.reserve(static_cast<std::size_t>(layout.block_count()));
    for (int bi = 0; bi < layout.r1; ++bi)
        for (int bj = 0; bj < layout.r2; ++bj) {
            Block b(static_cast<std::size_t>(layout.p1) * layout.p2);
            for (int i = 0; i < layout.p1; ++i)
                for (int j = 0; j < layout.p2; ++j)
                    b[static_cast<std::size_t>(i) * layout.p2 + j] =
                        img.at(bi * layout.p1 + i, bj * layout.p2 + j);
            blocks.push_back(std::move(b));
        }
    return blocks;
}

GrayImage join_blocks(const std::vector<Block>& blocks, const BlockLayout& layout) {
    if (static_cast<int>(blocks.size()) != layout.block_count())
        throw LayoutError("block count does not match layout");
    GrayImage img(layout.padded_rows, layout.padded_cols);
    std::size_t k = 0;
    for (int bi = 0; bi < layout.r1; ++bi)
        for (int bj = 0; bj < layout.r2; ++bj, ++k) {
            const Block& b = blocks[k];
            if (b.size() != static_cast<std::size_t>(layout.p1) * layout.p2)
                throw LayoutError("block shape mismatch");
            for (int i = 0; i < layout.p1; ++i)
                for (int j = 0; j < layout.p2; ++j)
                    img.at(bi * layout.p1 + i, bj * layout.p2 + j) =
                        b[static_cast<std::size_t>(i) * layout.p2 + j];
        }
    return img;
}

}  // namespace ieae
