#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace quiverreach {

/// Dense square boolean matrix, row-major.
class BoolMatrix {
public:
    BoolMatrix() = default;
    explicit BoolMatrix(std::size_t n, bool value = false) : n_(n), cells_(n * n, value ? 1 : 0) {}

    static BoolMatrix identity(std::size_t n) {
        BoolMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i);
        return m;
    }

    std::size_t size() const noexcept { return n_; }

    bool operator()(std::size_t row, std::size_t col) const { return cells_[row * n_ + col] != 0; }
    void set(std::size_t row, std::size_t col, bool value = true) { cells_[row * n_ + col] = value ? 1 : 0; }

    /// Number of true entries.
    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto v : cells_) c += v;
        return c;
    }

    bool is_reflexive() const {
        for (std::size_t i = 0; i < n_; ++i)
            if (!(*this)(i, i)) return false;
        return true;
    }

    bool is_transitive() const {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                if ((*this)(i, j))
                    for (std::size_t k = 0; k < n_; ++k)
                        if ((*this)(j, k) && !(*this)(i, k)) return false;
        return true;
    }

    bool is_antisymmetric() const {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j)
                if ((*this)(i, j) && (*this)(j, i)) return false;
        return true;
    }

    friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint8_t> cells_;
};

}  // namespace quiverreach
