#include <csetjmp>
#include <cstdio>

#include <jpeglib.h>

#include "elacnn/image.hpp"

namespace elacnn {

namespace {

// libjpeg's default error handler calls exit(); route fatal errors back
// through longjmp and rethrow as CodecError instead.
struct JumpErrorMgr {
    jpeg_error_mgr pub;
    std::jmp_buf jump;
    char message[JMSG_LENGTH_MAX] = {};
};

void on_jpeg_error(j_common_ptr cinfo) {
    auto* mgr = reinterpret_cast<JumpErrorMgr*>(cinfo->err);
    (*cinfo->err->format_message)(cinfo, mgr->message);
    std::longjmp(mgr->jump, 1);
}

void silence_output(j_common_ptr, int) {}

}  // namespace

std::vector<std::uint8_t> jpeg_encode(const RgbImage& img, int quality) {
    validate_image(img);
    if (quality < 1 || quality > 100) {
        throw ContractError("jpeg quality must be in [1,100], got " + std::to_string(quality));
    }

    jpeg_compress_struct cinfo{};
    JumpErrorMgr err{};
    cinfo.err = jpeg_std_error(&err.pub);
    err.pub.error_exit = on_jpeg_error;
    err.pub.emit_message = silence_output;

    unsigned char* buffer = nullptr;
    unsigned long buffer_len = 0;

    if (setjmp(err.jump)) {
        jpeg_destroy_compress(&cinfo);
        if (buffer) free(buffer);
        throw CodecError(std::string("jpeg encode failed: ") + err.message);
    }

    jpeg_create_compress(&cinfo);
    jpeg_mem_dest(&cinfo, &buffer, &buffer_len);

    cinfo.image_width = static_cast<JDIMENSION>(img.width);
    cinfo.image_height = static_cast<JDIMENSION>(img.height);
    cinfo.input_components = 3;
    cinfo.in_color_space = JCS_RGB;
    jpeg_set_defaults(&cinfo);
    jpeg_set_quality(&cinfo, quality, TRUE);
    // Pinned configuration: outputs must be byte-identical across builds.
    cinfo.dct_method = JDCT_ISLOW;
    cinfo.optimize_coding = FALSE;
    cinfo.comp_info[0].h_samp_factor = 2;
    cinfo.comp_info[0].v_samp_factor = 2;
    cinfo.comp_info[1].h_samp_factor = 1;
    cinfo.comp_info[1].v_samp_factor = 1;
    cinfo.comp_info[2].h_samp_factor = 1;
    cinfo.comp_info[2].v_samp_factor = 1;

    jpeg_start_compress(&cinfo, TRUE);
    const std::size_t stride = static_cast<std::size_t>(img.width) * 3;
    while (cinfo.next_scanline < cinfo.image_height) {
        JSAMPROW row = const_cast<JSAMPROW>(img.data.data() + cinfo.next_scanline * stride);
        jpeg_write_scanlines(&cinfo, &row, 1);
    }
    jpeg_finish_compress(&cinfo);
    jpeg_destroy_compress(&cinfo);

    std::vector<std::uint8_t> out(buffer, buffer + buffer_len);
    free(buffer);
    return out;
}

RgbImage jpeg_decode(const std::vector<std::uint8_t>& bytes) {
    jpeg_decompress_struct dinfo{};
    JumpErrorMgr err{};
    dinfo.err = jpeg_std_error(&err.pub);
    err.pub.error_exit = on_jpeg_error;
    err.pub.emit_message = silence_output;

    if (setjmp(err.jump)) {
        jpeg_destroy_decompress(&dinfo);
        throw CodecError(std::string("jpeg decode failed: ") + err.message);
    }

    jpeg_create_decompress(&dinfo);
    jpeg_mem_src(&dinfo, bytes.data(), static_cast<unsigned long>(bytes.size()));
    jpeg_read_header(&dinfo, TRUE);
    dinfo.out_color_space = JCS_RGB;
    dinfo.dct_method = JDCT_ISLOW;
    jpeg_start_decompress(&dinfo);

    RgbImage img(static_cast<int>(dinfo.output_width), static_cast<int>(dinfo.output_height));
    const std::size_t stride = static_cast<std::size_t>(img.width) * 3;
    while (dinfo.output_scanline < dinfo.output_height) {
        JSAMPROW row = img.data.data() + dinfo.output_scanline * stride;
        jpeg_read_scanlines(&dinfo, &row, 1);
    }
    jpeg_finish_decompress(&dinfo);
    jpeg_destroy_decompress(&dinfo);
    return img;
}

}  // namespace elacnn
