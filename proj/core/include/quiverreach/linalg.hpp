#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace quiverreach {

/// Coefficient field: a prime p below 2^31, or 0 for the rationals.
/// Throws PreconditionError(BadField) otherwise.
void validate_field(std::uint64_t characteristic);

/// Integer matrix in coordinate form; duplicate entries are summed.
class SparseMatrix {
public:
    struct Entry {
        std::size_t row, col;
        std::int64_t value;
    };

    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

    void add(std::size_t row, std::size_t col, std::int64_t value);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const std::vector<Entry>& entries() const noexcept { return entries_; }

    /// Row-major dense copy; meant for tests on small matrices.
    std::vector<std::vector<std::int64_t>> dense() const;

private:
    std::size_t rows_, cols_;
    std::vector<Entry> entries_;
};

/// Exact rank over GF(p), or over Q when characteristic == 0. The matrix is
/// split into connected blocks of its row/column incidence graph and each
/// block is eliminated separately.
std::size_t rank(const SparseMatrix& m, std::uint64_t characteristic);

/// Product of two sparse integer matrices (exact, no reduction).
SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);

}  // namespace quiverreach
