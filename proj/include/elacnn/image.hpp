#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "elacnn/errors.hpp"

namespace elacnn {

/// 8-bit interleaved RGB raster, row-major. data.size() == width*height*3.
struct RgbImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;

    RgbImage() = default;
    RgbImage(int w, int h);

    std::uint8_t& at(int x, int y, int c) {
        return data[static_cast<std::size_t>((y * width + x) * 3 + c)];
    }
    std::uint8_t at(int x, int y, int c) const {
        return data[static_cast<std::size_t>((y * width + x) * 3 + c)];
    }

    bool operator==(const RgbImage& other) const = default;
};

void validate_image(const RgbImage& img);

/// Decodes PNG/JPEG/TIFF/BMP from disk. Grayscale is replicated to three
/// channels; an alpha channel is composited over white; 16-bit samples are
/// reduced to 8 bits. Throws CodecError on unreadable input.
RgbImage decode_image(const std::filesystem::path& path);

/// Decodes from an in-memory buffer (same conversions as decode_image).
RgbImage decode_image_bytes(const std::vector<std::uint8_t>& bytes);

void write_png(const RgbImage& img, const std::filesystem::path& path);

/// JPEG round trip with the pinned codec configuration: libjpeg standard
/// quantization-table scaling by quality, 4:2:0 chroma subsampling, islow
/// integer DCT, fixed Huffman tables. quality in [1,100].
std::vector<std::uint8_t> jpeg_encode(const RgbImage& img, int quality);
RgbImage jpeg_decode(const std::vector<std::uint8_t>& bytes);

}  // namespace elacnn
