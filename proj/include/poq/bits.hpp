// Fixed-size bit rows used for order matrices and element subsets.
#pragma once

#include <cstdint>
#include <vector>

#if defined(__GNUC__) || defined(__clang__)
#include <bit>
#endif

namespace poq {

struct Bits {
    int n = 0;
    std::vector<std::uint64_t> w;

    Bits() = default;
    explicit Bits(int size) : n(size), w((size + 63) / 64, 0) {}

    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(int i) { w[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

    void set_all() {
        for (auto& x : w) x = ~std::uint64_t(0);
        trim();
    }
    void clear() {
        for (auto& x : w) x = 0;
    }

    int count() const {
        int c = 0;
        for (auto x : w) c += std::popcount(x);
        return c;
    }
    bool any() const {
        for (auto x : w)
            if (x) return true;
        return false;
    }
    bool none() const { return !any(); }

    Bits& operator|=(const Bits& o) {
        for (size_t i = 0; i < w.size(); ++i) w[i] |= o.w[i];
        return *this;
    }
    Bits& operator&=(const Bits& o) {
        for (size_t i = 0; i < w.size(); ++i) w[i] &= o.w[i];
        return *this;
    }
    friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
    friend Bits operator&(Bits a, const Bits& b) { return a &= b; }

    bool is_subset_of(const Bits& o) const {
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i] & ~o.w[i]) return false;
        return true;
    }
    bool intersects(const Bits& o) const {
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i] & o.w[i]) return true;
        return false;
    }

    bool operator==(const Bits& o) const { return n == o.n && w == o.w; }
    bool operator!=(const Bits& o) const { return !(*this == o); }
    bool operator<(const Bits& o) const { return w < o.w; }  // arbitrary total order

    // First set bit at or after i, or n when exhausted.
    int next(int i) const {
        while (i < n && !test(i)) ++i;
        return i;
    }

    std::vector<int> members() const {
        std::vector<int> out;
        for (int i = next(0); i < n; i = next(i + 1)) out.push_back(i);
        return out;
    }

private:
    void trim() {
        int spare = int(w.size()) * 64 - n;
        if (spare > 0 && !w.empty()) w.back() &= ~std::uint64_t(0) >> spare;
    }
};

}  // namespace poq
