#pragma once

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <span>
#include <vector>

#include "json.hpp"
#include "rbo/rbsystem.hpp"

namespace rbo {

/// Sorted set of n x n matrices over F_p (n <= 3, p < 16), each packed into a
/// 64-bit key one nibble per entry with c11 most significant, so key order is
/// row-major lexicographic order.
class MatrixSet {
public:
    MatrixSet(std::size_t n, std::uint32_t p) : n_(n), p_(p) {}
    MatrixSet(std::size_t n, std::uint32_t p, std::vector<std::uint64_t> keys) : n_(n), p_(p), keys_(std::move(keys)) {
        normalize();
    }

    static std::uint64_t pack(std::span<const std::uint32_t> values) {
        std::uint64_t key = 0;
        for (auto v : values) key = (key << 4) | v;
        return key;
    }
    static std::uint64_t pack(const PMatrix& c) {
        std::uint64_t key = 0;
        for (const auto& v : c.entries()) key = (key << 4) | v.value();
        return key;
    }
    PMatrix unpack(std::uint64_t key) const {
        const std::size_t cells = n_ * n_;
        std::vector<ModP> e(cells, ModP(0, p_));
        for (std::size_t k = cells; k-- > 0;) {
            e[k] = ModP(static_cast<long long>(key & 0xF), p_);
            key >>= 4;
        }
        return PMatrix(n_, std::move(e));
    }

    std::size_t order() const { return n_; }
    std::uint32_t prime() const { return p_; }
    std::size_t size() const { return keys_.size(); }
    bool empty() const { return keys_.empty(); }
    const std::vector<std::uint64_t>& keys() const { return keys_; }
    bool contains(std::uint64_t key) const { return std::binary_search(keys_.begin(), keys_.end(), key); }
    bool contains(const PMatrix& c) const { return contains(pack(c)); }

    void insert_all(const MatrixSet& o) {
        keys_.insert(keys_.end(), o.keys_.begin(), o.keys_.end());
        normalize();
    }

    /// Elements of *this not in o.
    MatrixSet minus(const MatrixSet& o) const {
        std::vector<std::uint64_t> out;
        std::set_difference(keys_.begin(), keys_.end(), o.keys_.begin(), o.keys_.end(), std::back_inserter(out));
        return MatrixSet(n_, p_, std::move(out));
    }

    friend bool operator==(const MatrixSet&, const MatrixSet&) = default;

private:
    void normalize() {
        std::sort(keys_.begin(), keys_.end());
        keys_.erase(std::unique(keys_.begin(), keys_.end()), keys_.end());
    }

    std::size_t n_;
    std::uint32_t p_;
    std::vector<std::uint64_t> keys_;
};

/// {"value": v, "p": p} per entry, row-major nested arrays.
inline nlohmann::json pmatrix_to_json(const PMatrix& c) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 1; i <= c.order(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 1; j <= c.order(); ++j)
            row.push_back({{"value", c.at(i, j).value()}, {"p", c.at(i, j).modulus()}});
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace rbo
