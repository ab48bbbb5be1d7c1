#include "zslab/reach.hpp"

#include <algorithm>

namespace zslab {

SumReachTable::SumReachTable(std::shared_ptr<const GroupOps> ops, int k)
    : ops_(std::move(ops)), k_(k), words_((ops_->order + 63) / 64) {
    if (k_ < 0) throw DomainError("subsequence length must be >= 0");
    bits_.assign(size_t(k_ + 1) * words_, 0);
    set(0, 0);
}

void SumReachTable::extend_inplace(uint16_t g) {
    // Top-down so row j-1 is still the pre-extension row when row j absorbs it.
    const uint32_t n = ops_->order;
    const uint16_t* addg = &ops_->add[size_t(g) * n];
    for (int j = k_; j >= 1; --j) {
        const uint64_t* prev = &bits_[size_t(j - 1) * words_];
        for (uint32_t w = 0; w < words_; ++w) {
            uint64_t word = prev[w];
            while (word) {
                uint32_t h = (w << 6) + static_cast<uint32_t>(__builtin_ctzll(word));
                word &= word - 1;
                set(j, addg[h]);
            }
        }
    }
}

SumReachTable SumReachTable::extended(uint16_t g) const {
    SumReachTable t(*this);
    t.extend_inplace(g);
    return t;
}

bool has_zero_sum_subsequence(const ZSequence& S, long long k, ZSequence* witness) {
    if (k < 1) throw DomainError("subsequence length must be >= 1");
    if (k > S.length()) return false;
    auto ops = make_group_ops(S.group());
    auto elems = S.expanded();
    const int kk = static_cast<int>(k);

    if (!witness) {
        SumReachTable t(ops, kk);
        for (uint16_t e : elems) {
            t.extend_inplace(e);
            if (t.zero_sum_at_k()) return true;
        }
        return false;
    }

    // Keep every prefix table so a witness can be walked out backwards.
    std::vector<SumReachTable> prefix;
    prefix.reserve(elems.size() + 1);
    prefix.emplace_back(ops, kk);
    for (uint16_t e : elems) prefix.push_back(prefix.back().extended(e));
    if (!prefix.back().zero_sum_at_k()) return false;

    ZSequence w(S.group());
    int j = kk;
    uint16_t h = 0;
    for (size_t i = elems.size(); i-- > 0;) {
        if (prefix[i].reach(j, h)) continue; // element i not needed
        w.add(elems[i]);
        h = ops->sub(h, elems[i]);
        --j;
        if (j == 0) break;
    }
    *witness = std::move(w);
    return true;
}

} // namespace zslab
