#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

namespace pic {

// Small dynamic bitset over vertex ids. Graphs here stay tiny (the pipeline
// works on <= a few dozen vertices) but the CLI accepts arbitrary n, so no
// fixed capacity.
struct Bits {
    std::vector<std::uint64_t> w;
    int n = 0;

    Bits() = default;
    explicit Bits(int n_) : w((n_ + 63) / 64, 0), n(n_) {}

    void set(int i) { assert(i >= 0 && i < n); w[i >> 6] |= 1ull << (i & 63); }
    void reset(int i) { assert(i >= 0 && i < n); w[i >> 6] &= ~(1ull << (i & 63)); }
    bool test(int i) const { assert(i >= 0 && i < n); return (w[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (auto x : w) c += __builtin_popcountll(x);
        return c;
    }
    bool any() const {
        for (auto x : w) if (x) return true;
        return false;
    }
    bool none() const { return !any(); }

    Bits& operator|=(const Bits& o) {
        assert(n == o.n);
        for (size_t i = 0; i < w.size(); ++i) w[i] |= o.w[i];
        return *this;
    }
    Bits& operator&=(const Bits& o) {
        assert(n == o.n);
        for (size_t i = 0; i < w.size(); ++i) w[i] &= o.w[i];
        return *this;
    }
    Bits& operator-=(const Bits& o) {  // set difference
        assert(n == o.n);
        for (size_t i = 0; i < w.size(); ++i) w[i] &= ~o.w[i];
        return *this;
    }
    friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
    friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
    friend Bits operator-(Bits a, const Bits& b) { return a -= b; }

    bool operator==(const Bits& o) const { return n == o.n && w == o.w; }
    bool operator!=(const Bits& o) const { return !(*this == o); }
    bool operator<(const Bits& o) const {  // arbitrary total order for maps
        if (n != o.n) return n < o.n;
        return w < o.w;
    }

    bool subset_of(const Bits& o) const {
        assert(n == o.n);
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i] & ~o.w[i]) return false;
        return true;
    }
    bool intersects(const Bits& o) const {
        assert(n == o.n);
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i] & o.w[i]) return true;
        return false;
    }

    // members in ascending order
    std::vector<int> members() const {
        std::vector<int> out;
        for (size_t i = 0; i < w.size(); ++i) {
            std::uint64_t x = w[i];
            while (x) {
                out.push_back(int(i) * 64 + __builtin_ctzll(x));
                x &= x - 1;
            }
        }
        return out;
    }

    template <class F>
    void for_each(F f) const {
        for (size_t i = 0; i < w.size(); ++i) {
            std::uint64_t x = w[i];
            while (x) {
                f(int(i) * 64 + __builtin_ctzll(x));
                x &= x - 1;
            }
        }
    }
};

}  // namespace pic
