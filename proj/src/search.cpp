#include "zslab/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "zslab/error.hpp"
#include "zslab/reach.hpp"
#include "zslab/symmetry.hpp"

namespace zslab {

std::string to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::EXACT: return "EXACT";
        case SearchStatus::LOWER_BOUND_ONLY: return "LOWER_BOUND_ONLY";
        case SearchStatus::UNKNOWN: return "UNKNOWN";
        case SearchStatus::VACUOUS: return "VACUOUS";
    }
    return "UNKNOWN";
}

namespace {

using Clock = std::chrono::steady_clock;

constexpr long long kMaxSearchExponent = 255;

struct EngineShared {
    std::shared_ptr<const GroupOps> ops;
    SymmetryGroup sym;
    int k = 2;
    uint32_t max_mult = 1;
    bool enumerate_mode = false;
    long long target = 0;
    bool has_deadline = false;
    Clock::time_point deadline{};

    bool past_deadline() const { return has_deadline && Clock::now() >= deadline; }
};

struct BranchOutcome {
    long long best_len = 0;
    std::vector<uint16_t> best_M;
    std::vector<std::vector<uint16_t>> reps;
    long long orbit_count = 0;
    mpz_class raw_count = 0;
    long long nodes = 0;
    bool exhausted = false;
};

class BranchRunner {
public:
    BranchRunner(const EngineShared& sh, long long quota)
        : sh_(sh), ops_(*sh.ops), order_(sh.ops->order), quota_(quota) {}

    void run(const std::vector<uint16_t>& prefix) {
        M_.assign(order_, 0);
        supp_.clear();
        len_ = 0;
        reach_.clear();
        reach_.emplace_back(sh_.ops, sh_.k);
        for (uint16_t e : prefix) {
            reach_.push_back(reach_.back());
            reach_.back().extend_inplace(e);
            if (M_[e] == 0) supp_.push_back(e);
            M_[e]++;
            len_++;
        }
        if (!sh_.enumerate_mode && len_ > out_.best_len) {
            out_.best_len = len_;
            out_.best_M = M_;
        }
        if (sh_.enumerate_mode && len_ == sh_.target) {
            long long stab = 0;
            is_canonical_word(sh_.sym, M_, supp_, &stab);
            record(stab);
            return;
        }
        if (sh_.past_deadline()) {
            out_.exhausted = true;
            return;
        }
        dfs(prefix.empty() ? uint16_t{0} : prefix.back());
    }

    BranchOutcome take() { return std::move(out_); }

private:
    void record(long long stab) {
        out_.reps.push_back(M_);
        out_.orbit_count++;
        mpz_class total = mpz_class(static_cast<unsigned long>(sh_.sym.auts.size()));
        total *= static_cast<unsigned long>(order_);
        // Orbit-stabilizer: stab divides the symmetry group order.
        mpz_class q, r;
        mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), total.get_mpz_t(),
                       static_cast<unsigned long>(stab));
        if (r != 0) throw std::logic_error("stabilizer does not divide symmetry order");
        out_.raw_count += q;
    }

    void dfs(uint16_t first) {
        for (uint32_t e = first; e < order_; ++e) {
            ++out_.nodes;
            if (out_.nodes > quota_ ||
                ((out_.nodes & 1023) == 0 && sh_.past_deadline())) {
                out_.exhausted = true;
                return;
            }
            if (M_[e] >= sh_.max_mult) continue;
            // Capacity: max attainable length from here is nonincreasing in e,
            // so falling short justifies break, not continue.
            long long cap = 0;
            for (uint32_t g = e; g < order_; ++g)
                cap += static_cast<long long>(sh_.max_mult) - M_[g];
            if (sh_.enumerate_mode) {
                if (len_ + cap < sh_.target) break;
            } else {
                if (len_ + cap <= out_.best_len) break;
            }
            reach_.push_back(reach_.back());
            reach_.back().extend_inplace(static_cast<uint16_t>(e));
            if (reach_.back().zero_sum_at_k()) {
                reach_.pop_back();
                continue;
            }
            bool newsupp = (M_[e] == 0);
            if (newsupp) supp_.push_back(static_cast<uint16_t>(e));
            M_[e]++;
            long long stab = 0;
            if (!is_canonical_word(sh_.sym, M_, supp_, &stab)) {
                M_[e]--;
                if (newsupp) supp_.pop_back();
                reach_.pop_back();
                continue;
            }
            len_++;
            if (sh_.enumerate_mode) {
                if (len_ == sh_.target)
                    record(stab);
                else
                    dfs(static_cast<uint16_t>(e));
            } else {
                if (len_ > out_.best_len) {
                    out_.best_len = len_;
                    out_.best_M = M_;
                }
                dfs(static_cast<uint16_t>(e));
            }
            len_--;
            M_[e]--;
            if (newsupp) supp_.pop_back();
            reach_.pop_back();
            if (out_.exhausted) return;
        }
    }

    const EngineShared& sh_;
    const GroupOps& ops_;
    uint32_t order_;
    long long quota_;
    std::vector<uint16_t> M_;
    std::vector<uint16_t> supp_;
    long long len_ = 0;
    std::vector<SumReachTable> reach_;
    BranchOutcome out_;
};

struct EngineResult {
    long long best_len = 0;
    std::vector<uint16_t> best_M;
    std::vector<std::vector<uint16_t>> reps;
    long long orbit_count = 0;
    mpz_class raw_count = 0;
    long long nodes = 0;
    bool exhausted = false;
    bool sym_weakened = false;
};

ZSequence seq_from_mult(const AbelianGroup& A, const std::vector<uint16_t>& M) {
    ZSequence s(A);
    for (size_t e = 0; e < M.size(); ++e)
        if (M[e] > 0) s.add(static_cast<uint32_t>(e), M[e]);
    return s;
}

EngineResult run_engine(const AbelianGroup& A, long long k, uint32_t max_mult,
                        bool enumerate_mode, long long target,
                        const SearchBudget& budget) {
    if (k != A.exponent())
        throw DomainError("search requires k = exp(A); got k=" + std::to_string(k));
    if (k > kMaxSearchExponent)
        throw DomainError("group exponent too large for exact search");
    if (enumerate_mode && target < 0)
        throw DomainError("negative target length");

    EngineShared sh;
    sh.ops = make_group_ops(A);
    sh.sym = build_symmetry_group(sh.ops);
    sh.k = static_cast<int>(k);
    sh.max_mult = max_mult;
    sh.enumerate_mode = enumerate_mode;
    sh.target = target;
    if (budget.max_seconds < 1e9) {
        sh.has_deadline = true;
        sh.deadline = Clock::now() +
            std::chrono::duration_cast<Clock::duration>(
                std::chrono::duration<double>(std::max(0.0, budget.max_seconds)));
    }

    EngineResult res;
    res.sym_weakened = sh.sym.weakened;
    uint32_t order = sh.ops->order;

    // Root phase: lengths 0 and 1, plus the list of depth-2 branch prefixes.
    if (enumerate_mode && target == 0) {
        res.reps.push_back(std::vector<uint16_t>(order, 0));
        res.orbit_count = 1;
        res.raw_count = 1;
        return res;
    }

    std::vector<uint16_t> M(order, 0);
    std::vector<uint16_t> supp;
    SumReachTable root_table(sh.ops, sh.k);
    bool have_word0 = false;
    if (max_mult >= 1) {
        res.nodes++;
        SumReachTable t0 = root_table.extended(0);
        if (!t0.zero_sum_at_k()) {
            have_word0 = true;
            root_table = std::move(t0);
            if (!enumerate_mode && res.best_len < 1) {
                res.best_len = 1;
                res.best_M = M;
                res.best_M[0] = 1;
            }
            if (enumerate_mode && target == 1) {
                M[0] = 1;
                supp = {0};
                long long stab = 0;
                is_canonical_word(sh.sym, M, supp, &stab);
                res.reps.push_back(M);
                res.orbit_count = 1;
                res.raw_count = sh.sym.size() / static_cast<unsigned long>(stab);
                return res;
            }
        }
    }

    std::vector<std::vector<uint16_t>> branches;
    if (have_word0 && !(enumerate_mode && target < 2)) {
        M.assign(order, 0);
        M[0] = 1;
        supp = {0};
        for (uint32_t e2 = 0; e2 < order; ++e2) {
            res.nodes++;
            if (M[e2] >= max_mult) continue;
            SumReachTable t2 = root_table.extended(static_cast<uint16_t>(e2));
            if (t2.zero_sum_at_k()) continue;
            bool newsupp = (M[e2] == 0);
            if (newsupp) supp.push_back(static_cast<uint16_t>(e2));
            M[e2]++;
            bool canon = is_canonical_word(sh.sym, M, supp, nullptr);
            M[e2]--;
            if (newsupp) supp.pop_back();
            if (canon) branches.push_back({0, static_cast<uint16_t>(e2)});
        }
    }

    if (branches.empty()) return res;

    long long quota = budget.max_nodes / static_cast<long long>(branches.size());
    size_t width = static_cast<size_t>(std::max(1, budget.parallel_width));
    width = std::min(width, branches.size());

    std::vector<BranchOutcome> outcomes(branches.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= branches.size()) return;
            BranchRunner runner(sh, quota);
            runner.run(branches[i]);
            outcomes[i] = runner.take();
        }
    };
    if (width <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(width);
        for (size_t w = 0; w < width; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    // Merge in branch order so results never depend on scheduling.
    for (auto& oc : outcomes) {
        res.nodes += oc.nodes;
        res.exhausted = res.exhausted || oc.exhausted;
        if (enumerate_mode) {
            for (auto& rep : oc.reps) res.reps.push_back(std::move(rep));
            res.orbit_count += oc.orbit_count;
            res.raw_count += oc.raw_count;
        } else if (oc.best_len > res.best_len) {
            res.best_len = oc.best_len;
            res.best_M = std::move(oc.best_M);
        }
    }
    return res;
}

} // namespace

ExactResult max_zero_sum_free_length(const AbelianGroup& A, long long k,
                                     const SearchBudget& budget) {
    uint32_t max_mult = k >= 1 ? static_cast<uint32_t>(k - 1) : 0;
    EngineResult er = run_engine(A, k, max_mult, false, 0, budget);
    ExactResult out;
    out.value = er.best_len;
    out.status = er.exhausted ? SearchStatus::LOWER_BOUND_ONLY : SearchStatus::EXACT;
    out.witness = er.best_M.empty() ? ZSequence(A) : seq_from_mult(A, er.best_M);
    out.nodes_explored = er.nodes;
    return out;
}

ExactResult exact_s(const AbelianGroup& A, const SearchBudget& budget) {
    ExactResult r = max_zero_sum_free_length(A, A.exponent(), budget);
    r.value = *r.value + 1;
    return r;
}

ExactResult exact_g(const AbelianGroup& A, const SearchBudget& budget) {
    long long k = A.exponent();
    ExactResult out;
    if (!A.trivial()) {
        // When even the full group, as a set, has no zero-sum subsequence of
        // length exp(A), no squarefree sequence does, and the defining
        // property first holds vacuously at |A| + 1.
        ZSequence full(A);
        long long n = A.order_ll();
        for (long long e = 0; e < n; ++e) full.add(static_cast<uint32_t>(e));
        if (!has_zero_sum_subsequence(full, k)) {
            out.value = n + 1;
            out.status = SearchStatus::VACUOUS;
            out.witness = full;
            out.nodes_explored = 0;
            return out;
        }
    }
    EngineResult er = run_engine(A, k, 1, false, 0, budget);
    out.value = er.best_len + 1;
    out.status = er.exhausted ? SearchStatus::LOWER_BOUND_ONLY : SearchStatus::EXACT;
    out.witness = er.best_M.empty() ? ZSequence(A) : seq_from_mult(A, er.best_M);
    out.nodes_explored = er.nodes;
    return out;
}

ExtremalEnumeration enumerate_extremal(const AbelianGroup& A, long long k,
                                       long long length,
                                       const SearchBudget& budget) {
    EngineResult er = run_engine(A, k, k >= 1 ? static_cast<uint32_t>(k - 1) : 0,
                                 true, length, budget);
    ExtremalEnumeration out;
    out.orbit_reps.reserve(er.reps.size());
    for (const auto& M : er.reps) out.orbit_reps.push_back(seq_from_mult(A, M));
    out.orbit_count = er.orbit_count;
    out.raw_count = er.raw_count;
    out.nodes_explored = er.nodes;
    out.complete = !er.exhausted;
    out.symmetry_weakened = er.sym_weakened;
    return out;
}

} // namespace zslab
