#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hidiff/errors.hpp"

namespace hidiff {

struct TensorShape {
    int n = 0, c = 0, h = 0, w = 0;

    std::size_t numel() const {
        return static_cast<std::size_t>(n) * c * h * w;
    }
    bool operator==(const TensorShape& o) const {
        return n == o.n && c == o.c && h == o.h && w == o.w;
    }
    bool operator!=(const TensorShape& o) const { return !(*this == o); }
    std::string str() const;
};

// Dense rank-4 f32 tensor, NCHW, row-major: strides (c*h*w, h*w, w, 1).
struct Tensor {
    TensorShape shape;
    std::vector<float> data;

    Tensor() = default;
    Tensor(int n, int c, int h, int w, float fill = 0.0f)
        : shape{n, c, h, w},
          data(static_cast<std::size_t>(n) * c * h * w, fill) {
        if (n < 0 || c < 0 || h < 0 || w < 0)
            throw ShapeError("tensor dims must be non-negative, got " + shape.str());
    }

    std::size_t numel() const { return data.size(); }

    std::size_t offset(int in, int ic, int iy, int ix) const {
        return ((static_cast<std::size_t>(in) * shape.c + ic) * shape.h + iy) * shape.w + ix;
    }
    float& at(int in, int ic, int iy, int ix) { return data[offset(in, ic, iy, ix)]; }
    float at(int in, int ic, int iy, int ix) const { return data[offset(in, ic, iy, ix)]; }

    // Pointer to the start of row iy of channel (in, ic).
    float* row(int in, int ic, int iy) { return data.data() + offset(in, ic, iy, 0); }
    const float* row(int in, int ic, int iy) const { return data.data() + offset(in, ic, iy, 0); }
};

// Row-major 2-D matrix used for token blocks and projection weights.
struct Matrix {
    int rows = 0, cols = 0;
    std::vector<float> data;

    Matrix() = default;
    Matrix(int r, int c, float fill = 0.0f)
        : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, fill) {
        if (r < 0 || c < 0)
            throw ShapeError("matrix dims must be non-negative");
    }

    float& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
    float at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
    float* row(int r) { return data.data() + static_cast<std::size_t>(r) * cols; }
    const float* row(int r) const { return data.data() + static_cast<std::size_t>(r) * cols; }
};

bool all_finite(const Tensor& t);

// Elementwise a + b; shapes must match.
Tensor add(const Tensor& a, const Tensor& b);

// View sample `in` as a (h*w) x c token matrix (token = (y, x) row-major) and back.
Matrix to_tokens(const Tensor& x, int in);
void from_tokens(const Matrix& tokens, Tensor& out, int in);

// Worker cap for parallel_for. Resolution order: explicit override (RAII below),
// else HIDIFF_THREADS, else 1. Work is split across independent output elements
// only, so the count never changes numerics.
int engine_threads();

class ThreadCountOverride {
public:
    explicit ThreadCountOverride(int n);
    ~ThreadCountOverride();
    ThreadCountOverride(const ThreadCountOverride&) = delete;
    ThreadCountOverride& operator=(const ThreadCountOverride&) = delete;

private:
    int prev_;
};

// Runs fn(begin, end) over [0, n) in contiguous chunks, one chunk per worker.
// With one worker it runs inline.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t, std::int64_t)>& fn);

} // namespace hidiff
