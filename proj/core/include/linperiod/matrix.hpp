#pragma once

#include <cstddef>
#include <vector>

namespace linperiod {

// Dense square matrix, row-major, 0-indexed.
template <typename T>
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t size) : size_(size), data_(size * size, T(0)) {}

    static SquareMatrix identity(std::size_t size)
    {
        SquareMatrix m(size);
        for (std::size_t i = 0; i < size; ++i)
            m(i, i) = T(1);
        return m;
    }

    std::size_t size() const noexcept { return size_; }

    T& operator()(std::size_t row, std::size_t col) { return data_[row * size_ + col]; }
    const T& operator()(std::size_t row, std::size_t col) const { return data_[row * size_ + col]; }

    friend bool operator==(const SquareMatrix& a, const SquareMatrix& b)
    {
        return a.size_ == b.size_ && a.data_ == b.data_;
    }

    friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b)
    {
        SquareMatrix c(a.size_);
        for (std::size_t i = 0; i < a.size_; ++i)
            for (std::size_t k = 0; k < a.size_; ++k) {
                if (a(i, k) == 0)
                    continue;
                for (std::size_t j = 0; j < a.size_; ++j)
                    c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }

    SquareMatrix transposed() const
    {
        SquareMatrix t(size_);
        for (std::size_t i = 0; i < size_; ++i)
            for (std::size_t j = 0; j < size_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

private:
    std::size_t size_ = 0;
    std::vector<T> data_;
};

} // namespace linperiod
