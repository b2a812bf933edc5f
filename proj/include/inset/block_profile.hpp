#pragma once

#include <inset/count.hpp>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace inset {

// The multiset Q = {q_1, ..., q_n} of main-block sizes. Sizes are stored in
// nondecreasing order regardless of construction order, so profiles equal as
// multisets compare equal and permutation invariance of the counting function
// is structural. The empty profile (n = 0, no main blocks) is legal; a block
// of size 0 is not.
class BlockProfile {
public:
    BlockProfile() = default;

    BlockProfile(std::initializer_list<long long> sizes)
        : BlockProfile(std::vector<long long>(sizes)) {}

    explicit BlockProfile(std::vector<long long> sizes) : sizes_(std::move(sizes)) {
        for (long long q : sizes_) {
            if (q < 1) {
                throw std::invalid_argument("BlockProfile: block sizes must be >= 1");
            }
        }
        std::sort(sizes_.begin(), sizes_.end());
    }

    // n identical blocks of size q.
    static BlockProfile uniform(long long n, long long q) {
        if (n < 0) {
            throw std::invalid_argument("BlockProfile::uniform: negative block count");
        }
        return BlockProfile(std::vector<long long>(static_cast<std::size_t>(n), q));
    }

    std::size_t size() const { return sizes_.size(); }
    bool empty() const { return sizes_.empty(); }
    long long operator[](std::size_t i) const { return sizes_.at(i); }
    const std::vector<long long>& sizes() const { return sizes_; }

    auto begin() const { return sizes_.begin(); }
    auto end() const { return sizes_.end(); }

    // Sum of all block sizes.
    long long total() const {
        long long t = 0;
        for (long long q : sizes_) t += q;
        return t;
    }

    // Product q_1 * q_2 * ... * q_n (1 for the empty profile).
    Count product() const {
        Count p = 1;
        for (long long q : sizes_) p *= q;
        return p;
    }

    bool all_equal() const {
        return std::adjacent_find(sizes_.begin(), sizes_.end(),
                                  std::not_equal_to<>()) == sizes_.end();
    }

    // Profile with block j removed.
    BlockProfile without(std::size_t j) const {
        if (j >= sizes_.size()) {
            throw std::out_of_range("BlockProfile::without: block index out of range");
        }
        std::vector<long long> rest = sizes_;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(j));
        BlockProfile p;
        p.sizes_ = std::move(rest);  // already sorted
        return p;
    }

    bool operator==(const BlockProfile& other) const { return sizes_ == other.sizes_; }
    bool operator!=(const BlockProfile& other) const { return !(*this == other); }

    // Canonical comma-separated form, e.g. "2,3,3".
    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < sizes_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(sizes_[i]);
        }
        return s;
    }

private:
    std::vector<long long> sizes_;
};

// The full parameter tuple (m, Q, k) of one counting problem: a universe with
// |Q| main blocks, an additional block of m elements, and the excess k such
// that insets have n + k elements.
struct InsetProblem {
    long long m = 0;
    BlockProfile profile;
    long long k = 0;

    InsetProblem(long long m_, BlockProfile profile_, long long k_)
        : m(m_), profile(std::move(profile_)), k(k_) {
        if (m < 0) {
            throw std::invalid_argument("InsetProblem: m must be nonnegative");
        }
    }

    long long block_count() const { return static_cast<long long>(profile.size()); }
    long long universe_size() const { return m + profile.total(); }
    long long subset_size() const { return block_count() + k; }

    bool operator==(const InsetProblem& other) const {
        return m == other.m && k == other.k && profile == other.profile;
    }
};

}  // namespace inset
