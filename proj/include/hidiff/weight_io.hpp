#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hidiff {

// Flat named tensor as stored on disk. Rank and dims are explicit; data is
// the row-major dims product.
struct NamedTensor {
    std::string name;
    std::vector<uint32_t> dims;
    std::vector<float> data;

    std::size_t numel() const {
        std::size_t n = 1;
        for (uint32_t d : dims) n *= d;
        return n;
    }
};

// Container layout, all integers little-endian:
//   magic "HIDW" | u32 version (=1) | u32 tensor count
//   per tensor: u32 name length | name bytes | u32 rank | rank x u32 dims
//               | dims-product f32 values
// Writing goes through a temp file plus rename so a crash never leaves a
// truncated file at the target path.
void write_hidw(const std::string& path, const std::vector<NamedTensor>& tensors);
std::vector<NamedTensor> read_hidw(const std::string& path);

// Atomic byte-blob writer shared by every artifact the CLI produces.
void write_file_atomic(const std::string& path, const std::string& bytes);

} // namespace hidiff
