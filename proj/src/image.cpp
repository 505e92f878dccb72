#include "elacnn/image.hpp"

#include <cmath>

#include <opencv2/imgcodecs.hpp>

namespace elacnn {

RgbImage::RgbImage(int w, int h) : width(w), height(h) {
    if (w < 1 || h < 1) {
        throw ContractError("image dimensions must be >= 1, got " + std::to_string(w) + "x" +
                            std::to_string(h));
    }
    data.assign(static_cast<std::size_t>(w) * h * 3, 0);
}

void validate_image(const RgbImage& img) {
    if (img.width < 1 || img.height < 1) {
        throw ContractError("image dimensions must be >= 1");
    }
    if (img.data.size() != static_cast<std::size_t>(img.width) * img.height * 3) {
        throw ContractError("image buffer length does not match width*height*3");
    }
}

namespace {

// Round half away from zero; the rule used for every 8-bit conversion here.
std::uint8_t to_byte(double v) {
    const long long r = std::llround(v);
    if (r < 0) return 0;
    if (r > 255) return 255;
    return static_cast<std::uint8_t>(r);
}

RgbImage from_mat(cv::Mat mat, const std::string& origin) {
    if (mat.empty()) throw CodecError("could not decode image: " + origin);

    if (mat.depth() == CV_16U) {
        cv::Mat reduced;
        mat.convertTo(reduced, CV_8U, 1.0 / 257.0);
        mat = reduced;
    } else if (mat.depth() != CV_8U) {
        cv::Mat reduced;
        mat.convertTo(reduced, CV_8U);
        mat = reduced;
    }

    RgbImage img(mat.cols, mat.rows);
    const int channels = mat.channels();
    for (int y = 0; y < mat.rows; ++y) {
        const std::uint8_t* row = mat.ptr<std::uint8_t>(y);
        for (int x = 0; x < mat.cols; ++x) {
            const std::uint8_t* px = row + static_cast<std::size_t>(x) * channels;
            std::uint8_t r, g, b;
            switch (channels) {
                case 1:
                    r = g = b = px[0];
                    break;
                case 2: {  // gray + alpha, composited over white
                    const double a = px[1] / 255.0;
                    r = g = b = to_byte(px[0] * a + 255.0 * (1.0 - a));
                    break;
                }
                case 3:  // OpenCV decodes as BGR
                    b = px[0], g = px[1], r = px[2];
                    break;
                case 4: {
                    const double a = px[3] / 255.0;
                    b = to_byte(px[0] * a + 255.0 * (1.0 - a));
                    g = to_byte(px[1] * a + 255.0 * (1.0 - a));
                    r = to_byte(px[2] * a + 255.0 * (1.0 - a));
                    break;
                }
                default:
                    throw CodecError("unsupported channel count " + std::to_string(channels) +
                                     " in " + origin);
            }
            img.at(x, y, 0) = r;
            img.at(x, y, 1) = g;
            img.at(x, y, 2) = b;
        }
    }
    return img;
}

}  // namespace

RgbImage decode_image(const std::filesystem::path& path) {
    std::error_code ec;
    if (!std::filesystem::exists(path, ec)) {
        throw CodecError("no such file: " + path.string());
    }
    cv::Mat mat = cv::imread(path.string(), cv::IMREAD_UNCHANGED);
    return from_mat(std::move(mat), path.string());
}

RgbImage decode_image_bytes(const std::vector<std::uint8_t>& bytes) {
    cv::Mat mat = cv::imdecode(bytes, cv::IMREAD_UNCHANGED);
    return from_mat(std::move(mat), "<memory>");
}

void write_png(const RgbImage& img, const std::filesystem::path& path) {
    validate_image(img);
    cv::Mat bgr(img.height, img.width, CV_8UC3);
    for (int y = 0; y < img.height; ++y) {
        std::uint8_t* row = bgr.ptr<std::uint8_t>(y);
        for (int x = 0; x < img.width; ++x) {
            row[x * 3 + 0] = img.at(x, y, 2);
            row[x * 3 + 1] = img.at(x, y, 1);
            row[x * 3 + 2] = img.at(x, y, 0);
        }
    }
    if (!cv::imwrite(path.string(), bgr)) {
        throw CodecError("could not write PNG: " + path.string());
    }
}

}  // namespace elacnn
