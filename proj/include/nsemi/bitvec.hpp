// Packed bit vector used for membership windows of semigroups and ideals.
#ifndef NSEMI_BITVEC_HPP
#define NSEMI_BITVEC_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace nsemi {

class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }

    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

    void set(std::size_t i, bool v = true) {
        if (v)
            w_[i >> 6] |= std::uint64_t{1} << (i & 63);
        else
            w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    // Index of the first set bit, or size() if none.
    std::size_t first_set() const {
        for (std::size_t q = 0; q < w_.size(); ++q)
            if (w_[q]) return q * 64 + static_cast<std::size_t>(std::countr_zero(w_[q]));
        return n_;
    }

    // this |= (src << s), truncated to this->size(). Sizes may differ.
    void or_shifted(const BitVec& src, std::size_t s) {
        const std::size_t q = s >> 6, r = s & 63;
        for (std::size_t i = 0; i + q < w_.size() && i < src.w_.size(); ++i) {
            w_[i + q] |= src.w_[i] << r;
            if (r && i + q + 1 < w_.size()) w_[i + q + 1] |= src.w_[i] >> (64 - r);
        }
        clear_tail();
    }

    // this &= (src >> s), vacant high positions of src treated as set.
    void and_shifted_down(const BitVec& src, std::size_t s) {
        for (std::size_t i = 0; i < n_; ++i) {
            const std::size_t j = i + s;
            const bool bit = j < src.n_ ? src.get(j) : true;
            if (!bit) set(i, false);
        }
    }

    void fill(bool v) {
        for (auto& w : w_) w = v ? ~std::uint64_t{0} : 0;
        if (v) clear_tail();
    }

    // Calls f(i) for every set bit, ascending.
    template <class F>
    void for_each_set(F&& f) const {
        for (std::size_t q = 0; q < w_.size(); ++q) {
            std::uint64_t w = w_[q];
            while (w) {
                f(q * 64 + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    friend bool operator==(const BitVec& a, const BitVec& b) {
        return a.n_ == b.n_ && a.w_ == b.w_;
    }

private:
    void clear_tail() {
        if (n_ & 63) w_.back() &= (~std::uint64_t{0}) >> (64 - (n_ & 63));
    }

    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace nsemi

#endif
