#include "quiverreach/linalg.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>

#include "quiverreach/error.hpp"

namespace quiverreach {

namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

struct PrimeField {
    using Value = std::uint64_t;
    std::uint64_t p;

    Value from_int(std::int64_t v) const {
        const auto m = static_cast<std::int64_t>(p);
        return static_cast<Value>(((v % m) + m) % m);
    }
    bool is_zero(Value v) const { return v == 0; }
    Value sub_mul(Value a, Value factor, Value b) const { return (a + p - factor * b % p) % p; }
    Value mul(Value a, Value b) const { return a * b % p; }
    Value inverse(Value a) const {
        Value result = 1, base = a, e = p - 2;
        for (; e; e >>= 1, base = base * base % p)
            if (e & 1) result = result * base % p;
        return result;
    }
};

struct RationalField {
    using Value = boost::multiprecision::cpp_rational;

    Value from_int(std::int64_t v) const { return Value(v); }
    bool is_zero(const Value& v) const { return v == 0; }
    Value sub_mul(const Value& a, const Value& factor, const Value& b) const { return a - factor * b; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value inverse(const Value& a) const { return 1 / a; }
};

template <class Field>
using SparseRow = std::vector<std::pair<std::size_t, typename Field::Value>>;

/// a - factor * b for rows sorted by column.
template <class Field>
SparseRow<Field> subtract(const Field& f, const SparseRow<Field>& a, const typename Field::Value& factor,
                          const SparseRow<Field>& b) {
    SparseRow<Field> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    const typename Field::Value zero = f.from_int(0);
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            auto v = f.sub_mul(zero, factor, b[j].second);
            if (!f.is_zero(v)) out.emplace_back(b[j].first, std::move(v));
            ++j;
        } else {
            auto v = f.sub_mul(a[i].second, factor, b[j].second);
            if (!f.is_zero(v)) out.emplace_back(a[i].first, std::move(v));
            ++i, ++j;
        }
    }
    return out;
}

/// Incremental echelon form keyed by leading column.
template <class Field>
std::size_t eliminate(const Field& f, std::vector<SparseRow<Field>>& rows) {
    std::unordered_map<std::size_t, SparseRow<Field>> pivots;
    // Short rows first keeps fill-in down.
    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    for (auto& row : rows) {
        while (!row.empty()) {
            auto it = pivots.find(row.front().first);
            if (it == pivots.end()) {
                const auto inv = f.inverse(row.front().second);
                for (auto& [c, v] : row) v = f.mul(v, inv);
                pivots.emplace(row.front().first, std::move(row));
                break;
            }
            const auto factor = row.front().second;
            row = subtract(f, row, factor, it->second);
        }
    }
    return pivots.size();
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

template <class Field>
std::size_t blocked_rank(const Field& f, const SparseMatrix& m) {
    // Eliminate along the shorter side.
    const bool by_rows = m.rows() <= m.cols();
    const std::size_t vectors = by_rows ? m.rows() : m.cols();
    const std::size_t coords = by_rows ? m.cols() : m.rows();

    std::map<std::pair<std::size_t, std::size_t>, std::int64_t> summed;
    for (const auto& e : m.entries()) {
        const auto key = by_rows ? std::pair{e.row, e.col} : std::pair{e.col, e.row};
        summed[key] += e.value;
    }

    std::vector<std::size_t> parent(vectors + coords);
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<SparseRow<Field>> rows(vectors);
    for (const auto& [key, value] : summed) {
        auto v = f.from_int(value);
        if (f.is_zero(v)) continue;
        rows[key.first].emplace_back(key.second, std::move(v));
        parent[find_root(parent, key.first)] = find_root(parent, vectors + key.second);
    }

    std::unordered_map<std::size_t, std::vector<SparseRow<Field>>> blocks;
    for (std::size_t r = 0; r < vectors; ++r)
        if (!rows[r].empty()) blocks[find_root(parent, r)].push_back(std::move(rows[r]));
    std::size_t total = 0;
    for (auto& [root, block] : blocks) total += eliminate(f, block);
    return total;
}

}  // namespace

void validate_field(std::uint64_t characteristic) {
    if (characteristic == 0) return;
    if (characteristic >= (std::uint64_t{1} << 31) || !is_prime(characteristic))
        throw PreconditionError(Violation::BadField,
                                "field characteristic must be 0 or a prime below 2^31, got " + std::to_string(characteristic));
}

void SparseMatrix::add(std::size_t row, std::size_t col, std::int64_t value) {
    if (row >= rows_ || col >= cols_) throw PreconditionError(Violation::InvalidArgument, "matrix entry out of range");
    if (value != 0) entries_.push_back({row, col, value});
}

std::vector<std::vector<std::int64_t>> SparseMatrix::dense() const {
    std::vector<std::vector<std::int64_t>> d(rows_, std::vector<std::int64_t>(cols_, 0));
    for (const auto& e : entries_) d[e.row][e.col] += e.value;
    return d;
}

std::size_t rank(const SparseMatrix& m, std::uint64_t characteristic) {
    validate_field(characteristic);
    if (characteristic == 0) return blocked_rank(RationalField{}, m);
    return blocked_rank(PrimeField{characteristic}, m);
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols() != b.rows()) throw PreconditionError(Violation::InvalidArgument, "matrix shapes do not compose");
    std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> b_rows(b.rows());
    for (const auto& e : b.entries()) b_rows[e.row].emplace_back(e.col, e.value);
    std::map<std::pair<std::size_t, std::size_t>, std::int64_t> out;
    for (const auto& e : a.entries())
        for (const auto& [c, v] : b_rows[e.col]) out[{e.row, c}] += e.value * v;
    SparseMatrix product(a.rows(), b.cols());
    for (const auto& [key, v] : out) product.add(key.first, key.second, v);
    return product;
}

}  // namespace quiverreach
