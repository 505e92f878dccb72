#pragma once

#include "elacnn/image.hpp"
#include "elacnn/tensor.hpp"

namespace elacnn {

/// Settings for the error-level-analysis preprocessing stage.
struct ElaConfig {
    int jpeg_quality = 90;
    int target_width = 128;
    int target_height = 128;
};

void validate_ela_config(const ElaConfig& cfg);

/// One JPEG save/load cycle at the given quality with the pinned codec.
RgbImage recompress_jpeg(const RgbImage& img, int quality);

/// Absolute per-channel difference, then a single global amplification
/// s = 255 / max(d) (s = 1 when the images are identical), rounded half away
/// from zero and clamped to [0,255]. Inputs must share dimensions.
RgbImage ela_difference(const RgbImage& original, const RgbImage& recompressed);

/// Bilinear resample with half-pixel-centered sampling and edge clamping.
RgbImage resize_bilinear(const RgbImage& img, int w, int h);

/// Full pipeline: recompress -> difference -> resize -> float tensor of
/// shape (target_height, target_width, 3) with values in [0,1].
Tensor ela_transform(const RgbImage& img, const ElaConfig& cfg);

}  // namespace elacnn
