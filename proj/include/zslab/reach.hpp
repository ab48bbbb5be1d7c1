#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "zslab/group.hpp"

namespace zslab {

/**
 * Boolean DP table reach(j, g) = "some subsequence of length exactly j of the
 * sequence fed in so far sums to g", for 0 <= j <= k.  Extension obeys
 * reach'(j, h) = reach(j, h) | reach(j-1, h - g) and never clears a set cell.
 */
class SumReachTable {
public:
    SumReachTable(std::shared_ptr<const GroupOps> ops, int k);

    /** Append one copy of g (mutating). */
    void extend_inplace(uint16_t g);
    /** Value-semantics extension: returns the table for S·g, leaving *this untouched. */
    SumReachTable extended(uint16_t g) const;

    bool reach(int j, uint16_t g) const {
        return (bits_[size_t(j) * words_ + (g >> 6)] >> (g & 63)) & 1;
    }
    /** reach(k, 0): a zero-sum subsequence of length exactly k exists. */
    bool zero_sum_at_k() const { return reach(k_, 0); }

    int k() const { return k_; }
    const GroupOps& ops() const { return *ops_; }

    bool operator==(const SumReachTable& o) const { return k_ == o.k_ && bits_ == o.bits_; }

private:
    std::shared_ptr<const GroupOps> ops_;
    int k_;
    uint32_t words_;
    std::vector<uint64_t> bits_; // (k_+1) rows of ceil(order/64) words

    void set(int j, uint16_t g) {
        bits_[size_t(j) * words_ + (g >> 6)] |= uint64_t(1) << (g & 63);
    }
};

/**
 * True iff some subsequence T | S with |T| = k and sum 0 exists; O(|S|·k·|G|).
 * k > |S| yields false; k < 1 is rejected.  When a witness pointer is given
 * and the answer is true, one such multiset T (with multiplicities bounded by
 * those of S) is stored there.
 */
bool has_zero_sum_subsequence(const ZSequence& S, long long k, ZSequence* witness = nullptr);

} // namespace zslab
