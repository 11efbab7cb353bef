#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "gqc/errors.hpp"

namespace gqc {

inline constexpr int kDefaultPartyCap = 16;

// Canonical two-block split S|S~ of n party indices. Party 0 always lives in
// block S, so each unordered split has exactly one representative.
class Bipartition {
public:
    Bipartition(std::vector<int> block, int n) : n_(n) {
        if (n < 2) throw partition_error("bipartition needs at least 2 parties");
        for (int p : block) {
            if (p < 0 || p >= n) throw partition_error("party index out of range");
            mask_ |= (1u << p);
        }
        validate();
    }

    static Bipartition from_mask(std::uint32_t mask, int n) {
        Bipartition b;
        b.mask_ = mask;
        b.n_ = n;
        b.validate();
        return b;
    }

    int parties() const { return n_; }
    std::uint32_t mask() const { return mask_; }
    bool contains(int party) const { return (mask_ >> party) & 1u; }
    int block_size() const { return std::popcount(mask_); }

    std::vector<int> block() const {
        std::vector<int> out;
        for (int p = 0; p < n_; ++p)
            if (contains(p)) out.push_back(p);
        return out;
    }

    std::vector<int> complement() const {
        std::vector<int> out;
        for (int p = 0; p < n_; ++p)
            if (!contains(p)) out.push_back(p);
        return out;
    }

    // "0,2|1" style: sorted block indices, a bar, sorted complement indices.
    std::string to_string() const {
        std::string s;
        auto append = [&](const std::vector<int>& v) {
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i) s += ',';
                s += std::to_string(v[i]);
            }
        };
        append(block());
        s += '|';
        append(complement());
        return s;
    }

    friend bool operator==(const Bipartition& a, const Bipartition& b) {
        return a.n_ == b.n_ && a.mask_ == b.mask_;
    }

private:
    Bipartition() = default;

    void validate() const {
        if (!(mask_ & 1u)) throw partition_error("canonical block must contain party 0");
        std::uint32_t full = (n_ >= 32) ? ~0u : ((1u << n_) - 1);
        if ((mask_ & ~full) != 0) throw partition_error("party index out of range");
        if (mask_ == full) throw partition_error("bipartition block must be a proper subset");
    }

    std::uint32_t mask_ = 0;
    int n_ = 0;
};

inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
    return r;
}

// Number of unordered bipartitions, via the piecewise counting formula.
// Kept as a cross-check against the constructive enumeration (both equal
// 2^{n-1} - 1).
inline std::uint64_t bipartition_count(int n) {
    if (n < 2) throw domain_error("bipartition count requires n >= 2");
    std::uint64_t total = 0;
    if (n % 2 == 1) {
        for (int m = 1; m <= (n - 1) / 2; ++m) total += binomial(n, m);
    } else {
        for (int m = 1; m <= (n - 2) / 2; ++m) total += binomial(n, m);
        total += binomial(n, n / 2) / 2;
    }
    return total;
}

// All canonical bipartitions of n parties, ordered by block size then
// lexicographically on the block index list. The order is stable and is part
// of the file-format contract.
inline std::vector<Bipartition> enumerate_bipartitions(int n, int cap = kDefaultPartyCap) {
    if (n < 2) throw domain_error("bipartition enumeration requires n >= 2");
    if (n > cap) throw resource_error("party count exceeds cap of " + std::to_string(cap));
    std::vector<Bipartition> out;
    out.reserve((1u << (n - 1)) - 1);
    std::uint32_t full = (1u << n) - 1;
    for (std::uint32_t m = 1; m < full; m += 2) out.push_back(Bipartition::from_mask(m, n));
    std::sort(out.begin(), out.end(), [](const Bipartition& a, const Bipartition& b) {
        if (a.block_size() != b.block_size()) return a.block_size() < b.block_size();
        return a.block() < b.block();
    });
    return out;
}

}  // namespace gqc
