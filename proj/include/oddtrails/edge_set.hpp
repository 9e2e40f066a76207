#pragma once

#include <cstdint>
#include <vector>

namespace oddtrails {

using VertexId = int;
using EdgeId = int;

/// Fixed-universe bitset over edge ids. The universe size is the edge count
/// of the owning graph; ids are never renumbered, so sets from the same
/// graph are directly comparable.
class EdgeSet {
public:
    EdgeSet() = default;
    explicit EdgeSet(int universe) : size_(universe), bits_((universe + 63) / 64, 0) {}

    static EdgeSet full(int universe) {
        EdgeSet s(universe);
        for (int i = 0; i < universe; ++i) s.insert(i);
        return s;
    }

    int universe() const { return size_; }

    bool contains(EdgeId e) const {
        return e >= 0 && e < size_ && (bits_[e >> 6] >> (e & 63)) & 1;
    }
    void insert(EdgeId e) { bits_[e >> 6] |= uint64_t(1) << (e & 63); }
    void erase(EdgeId e) { bits_[e >> 6] &= ~(uint64_t(1) << (e & 63)); }

    int count() const {
        int c = 0;
        for (uint64_t w : bits_) c += __builtin_popcountll(w);
        return c;
    }
    bool empty() const {
        for (uint64_t w : bits_)
            if (w) return false;
        return true;
    }

    EdgeSet& operator|=(const EdgeSet& o) {
        for (size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
        return *this;
    }
    EdgeSet& operator&=(const EdgeSet& o) {
        for (size_t i = 0; i < bits_.size(); ++i) bits_[i] &= o.bits_[i];
        return *this;
    }
    EdgeSet& operator-=(const EdgeSet& o) {
        for (size_t i = 0; i < bits_.size(); ++i) bits_[i] &= ~o.bits_[i];
        return *this;
    }
    friend EdgeSet operator|(EdgeSet a, const EdgeSet& b) { return a |= b; }
    friend EdgeSet operator&(EdgeSet a, const EdgeSet& b) { return a &= b; }
    friend EdgeSet operator-(EdgeSet a, const EdgeSet& b) { return a -= b; }
    bool operator==(const EdgeSet& o) const { return size_ == o.size_ && bits_ == o.bits_; }

    bool intersects(const EdgeSet& o) const {
        for (size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i] & o.bits_[i]) return true;
        return false;
    }
    bool is_subset_of(const EdgeSet& o) const {
        for (size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i] & ~o.bits_[i]) return false;
        return true;
    }

    std::vector<EdgeId> to_vector() const {
        std::vector<EdgeId> v;
        for (int i = 0; i < size_; ++i)
            if (contains(i)) v.push_back(i);
        return v;
    }

private:
    int size_ = 0;
    std::vector<uint64_t> bits_;
};

}  // namespace oddtrails
