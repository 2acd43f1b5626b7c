#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace mc {

// Fixed-universe dynamic bitset. Used for vertex shores and for
// per-edge incidence vectors over the enumerated matchings.
class Bits {
public:
    Bits() = default;
    explicit Bits(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    static Bits from_mask(std::size_t n, std::uint64_t mask) {
        Bits b(n);
        if (!b.w_.empty()) b.w_[0] = mask;
        b.trim();
        return b;
    }
    static Bits full(std::size_t n) {
        Bits b(n);
        for (auto& x : b.w_) x = ~std::uint64_t{0};
        b.trim();
        return b;
    }

    std::size_t universe() const { return n_; }

    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    void assign(std::size_t i, bool v) { v ? set(i) : reset(i); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto x : w_) c += std::popcount(x);
        return c;
    }
    bool any() const {
        for (auto x : w_)
            if (x) return true;
        return false;
    }
    bool none() const { return !any(); }

    // index of the lowest set bit, or universe() if empty
    std::size_t first() const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return k * 64 + std::countr_zero(w_[k]);
        return n_;
    }

    // true iff (*this & ~o) is empty
    bool subset_of(const Bits& o) const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & ~o.w_[k]) return false;
        return true;
    }
    bool intersects(const Bits& o) const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & o.w_[k]) return true;
        return false;
    }

    Bits& operator&=(const Bits& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
        return *this;
    }
    Bits& operator|=(const Bits& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
        return *this;
    }
    Bits& operator^=(const Bits& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
        return *this;
    }
    Bits operator~() const {
        Bits b = *this;
        for (auto& x : b.w_) x = ~x;
        b.trim();
        return b;
    }
    friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
    friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
    friend Bits operator^(Bits a, const Bits& b) { return a ^= b; }

    friend bool operator==(const Bits& a, const Bits& b) { return a.n_ == b.n_ && a.w_ == b.w_; }
    // lexicographic on sorted member lists
    friend bool operator<(const Bits& a, const Bits& b) {
        auto x = a.members(), y = b.members();
        return x < y;
    }

    std::vector<int> members() const {
        std::vector<int> out;
        for (std::size_t k = 0; k < w_.size(); ++k) {
            std::uint64_t x = w_[k];
            while (x) {
                out.push_back(static_cast<int>(k * 64 + std::countr_zero(x)));
                x &= x - 1;
            }
        }
        return out;
    }

    std::uint64_t low_word() const { return w_.empty() ? 0 : w_[0]; }

    std::size_t hash() const {
        std::size_t h = n_;
        for (auto x : w_) h = h * 1000003u ^ std::hash<std::uint64_t>{}(x);
        return h;
    }

private:
    void trim() {
        if (n_ & 63) w_.back() &= (std::uint64_t{1} << (n_ & 63)) - 1;
    }
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

struct BitsHash {
    std::size_t operator()(const Bits& b) const { return b.hash(); }
};

}  // namespace mc
