#pragma once

#include <png.h>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "hclkit/cvd.hpp"

namespace hclkit::tools {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Image {
    std::uint32_t width = 0, height = 0;
    std::vector<std::uint8_t> rgba; // 4 bytes per pixel, row-major
};

inline Image read_png(const std::string& path)
{
    png_image img{};
    img.version = PNG_IMAGE_VERSION;
    if (!png_image_begin_read_from_file(&img, path.c_str()))
        throw IoError("cannot read PNG " + path + ": " + img.message);
    img.format = PNG_FORMAT_RGBA;
    Image out;
    out.width = img.width;
    out.height = img.height;
    out.rgba.resize(PNG_IMAGE_SIZE(img));
    if (!png_image_finish_read(&img, nullptr, out.rgba.data(), 0, nullptr)) {
        std::string msg = img.message;
        png_image_free(&img);
        throw IoError("cannot decode PNG " + path + ": " + msg);
    }
    return out;
}

inline void write_png(const std::string& path, const Image& im)
{
    png_image img{};
    img.version = PNG_IMAGE_VERSION;
    img.width = im.width;
    img.height = im.height;
    img.format = PNG_FORMAT_RGBA;
    if (!png_image_write_to_file(&img, path.c_str(), 0, im.rgba.data(), 0, nullptr))
        throw IoError("cannot write PNG " + path + ": " + img.message);
}

// Rows are split across threads; each pixel is mapped independently, so the
// result does not depend on the thread count.
inline void map_cvd(Image& im, const CvdMatrix& m, unsigned threads = 0)
{
    if (threads == 0)
        threads = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    threads = std::max(1u, std::min<unsigned>(threads, std::max<std::uint32_t>(im.height, 1)));
    auto work = [&](std::uint32_t r0, std::uint32_t r1) {
        for (std::uint32_t r = r0; r < r1; ++r) {
            std::uint8_t* px = im.rgba.data() + std::size_t(r) * im.width * 4;
            for (std::uint32_t c = 0; c < im.width; ++c, px += 4) {
                auto o = apply_cvd(m, px[0], px[1], px[2]);
                px[0] = o[0];
                px[1] = o[1];
                px[2] = o[2];
            }
        }
    };
    std::vector<std::thread> pool;
    std::uint32_t per = (im.height + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        std::uint32_t r0 = t * per, r1 = std::min(im.height, r0 + per);
        if (r0 < r1)
            pool.emplace_back(work, r0, r1);
    }
    for (auto& th : pool)
        th.join();
}

} // namespace hclkit::tools
