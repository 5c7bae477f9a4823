#pragma once

#include "homtensor/errors.hpp"
#include "homtensor/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace homtensor {

/// Dense multi-index array of exact rationals, entries in lexicographic
/// multi-index order (first index varies slowest).
class Tensor {
public:
    Tensor() = default;
    explicit Tensor(std::vector<std::size_t> shape)
        : shape_(std::move(shape)), entries_(flat_size(shape_), Rat(0)) {}

    static std::size_t flat_size(const std::vector<std::size_t>& shape) {
        std::size_t n = 1;
        for (auto s : shape) n *= s;
        return n;
    }

    const std::vector<std::size_t>& shape() const { return shape_; }
    std::size_t size() const { return entries_.size(); }

    std::size_t offset(std::initializer_list<std::size_t> idx) const {
        if (idx.size() != shape_.size()) throw DimensionError("tensor index rank mismatch");
        std::size_t off = 0;
        std::size_t d = 0;
        for (auto i : idx) {
            if (i >= shape_[d]) throw DimensionError("tensor index out of range");
            off = off * shape_[d] + i;
            ++d;
        }
        return off;
    }

    const Rat& at(std::initializer_list<std::size_t> idx) const { return entries_[offset(idx)]; }
    Rat& at(std::initializer_list<std::size_t> idx) { return entries_[offset(idx)]; }

    const Rat& flat(std::size_t i) const { return entries_[i]; }
    Rat& flat(std::size_t i) { return entries_[i]; }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (e != 0) return false;
        return true;
    }

    friend bool operator==(const Tensor& a, const Tensor& b) {
        return a.shape_ == b.shape_ && a.entries_ == b.entries_;
    }

private:
    std::vector<std::size_t> shape_;
    std::vector<Rat> entries_;
};

} // namespace homtensor
