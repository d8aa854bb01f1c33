#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

namespace indpoly {

// Fixed-width dynamic bitset sized at construction. Used for adjacency rows
// and for vertex subsets during branching, so the word loops stay tight.
class Bitset {
public:
    Bitset() : nbits_(0) {}
    explicit Bitset(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    int size_bits() const { return nbits_; }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }

    void clear() { std::fill(w_.begin(), w_.end(), uint64_t(0)); }

    void set_all() {
        std::fill(w_.begin(), w_.end(), ~uint64_t(0));
        trim();
    }

    int count() const {
        int c = 0;
        for (uint64_t v : w_) c += __builtin_popcountll(v);
        return c;
    }

    bool any() const {
        for (uint64_t v : w_)
            if (v) return true;
        return false;
    }
    bool none() const { return !any(); }

    // index of lowest set bit, or -1
    int first() const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return int(i * 64 + __builtin_ctzll(w_[i]));
        return -1;
    }

    // lowest set bit strictly above i, or -1
    int next(int i) const {
        ++i;
        if (i >= nbits_) return -1;
        size_t wi = size_t(i) >> 6;
        uint64_t v = w_[wi] & (~uint64_t(0) << (i & 63));
        while (true) {
            if (v) return int(wi * 64 + __builtin_ctzll(v));
            if (++wi >= w_.size()) return -1;
            v = w_[wi];
        }
    }

    Bitset& operator&=(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    // this &= ~o
    Bitset& and_not(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset and_not(Bitset a, const Bitset& b) { return a.and_not(b); }

    Bitset complement() const {
        Bitset r(*this);
        for (auto& v : r.w_) v = ~v;
        r.trim();
        return r;
    }

    bool intersects(const Bitset& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    bool is_subset_of(const Bitset& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    bool operator==(const Bitset& o) const { return nbits_ == o.nbits_ && w_ == o.w_; }

    size_t hash() const {
        uint64_t h = 1469598103934665603ull;
        for (uint64_t v : w_) {
            h ^= v;
            h *= 1099511628211ull;
        }
        return size_t(h);
    }

    std::vector<int> to_indices() const {
        std::vector<int> out;
        for (int i = first(); i >= 0; i = next(i)) out.push_back(i);
        return out;
    }

private:
    void trim() {
        if (nbits_ & 63) w_.back() &= (~uint64_t(0)) >> (64 - (nbits_ & 63));
    }

    int nbits_;
    std::vector<uint64_t> w_;
};

struct BitsetHash {
    size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace indpoly
