#include "zslab/petrov.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "zslab/error.hpp"
#include "zslab/monomial.hpp"
#include "zslab/symmetry.hpp"

namespace zslab {
namespace {

using Clock = std::chrono::steady_clock;

constexpr uint64_t kSatCap = uint64_t(1) << 62;

uint64_t sat_add(uint64_t a, uint64_t b) {
    uint64_t s = a + b;
    return (s < a || s > kSatCap) ? kSatCap : s;
}

uint64_t sat_mul(uint64_t a, uint64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a > kSatCap / b) return kSatCap;
    return a * b;
}

bool is_prime_ll(long long v) {
    if (v < 2) return false;
    for (long long d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

// counts[v] = number of tuples over F for the coefficient slice [from, to)
// with sum_i a_i b_i = v; saturating.
std::vector<uint64_t> slice_counts(const GroupOps& ops,
                                   const std::vector<std::vector<uint16_t>>& coeff_mul,
                                   const std::vector<uint16_t>& F, size_t from,
                                   size_t to) {
    uint32_t order = ops.order;
    std::vector<uint64_t> cur(order, 0), next(order);
    cur[0] = 1;
    for (size_t i = from; i < to; ++i) {
        std::fill(next.begin(), next.end(), 0);
        const auto& mul = coeff_mul[i];
        for (uint16_t b : F) {
            uint16_t ab = mul[b];
            for (uint32_t v = 0; v < order; ++v) {
                if (cur[v] == 0) continue;
                uint32_t w = ops.add[static_cast<size_t>(v) * order + ab];
                next[w] = sat_add(next[w], cur[v]);
            }
        }
        cur.swap(next);
    }
    return cur;
}

uint64_t zero_tuple_count(const GroupOps& ops,
                          const std::vector<std::vector<uint16_t>>& coeff_mul,
                          const std::vector<uint16_t>& F) {
    size_t m = coeff_mul.size();
    size_t m1 = m / 2;
    auto t1 = slice_counts(ops, coeff_mul, F, 0, m1);
    auto t2 = slice_counts(ops, coeff_mul, F, m1, m);
    uint64_t total = 0;
    for (uint32_t v = 0; v < ops.order; ++v)
        total = sat_add(total, sat_mul(t1[v], t2[ops.neg[v]]));
    return total;
}

// Precompute, per coefficient, the multiplication table b -> a_i * b.
std::vector<std::vector<uint16_t>> coeff_tables(const GroupOps& ops,
                                                const std::vector<long long>& coeffs) {
    std::vector<std::vector<uint16_t>> out;
    out.reserve(coeffs.size());
    for (long long a : coeffs) {
        std::vector<uint16_t> t(ops.order);
        for (uint32_t b = 0; b < ops.order; ++b)
            t[b] = ops.smul(a, static_cast<uint16_t>(b));
        out.push_back(std::move(t));
    }
    return out;
}

} // namespace

PetrovInstance::PetrovInstance(long long p_, long long n_, std::vector<long long> coeffs_)
    : p(p_), n(n_), coeffs(std::move(coeffs_)) {
    if (!is_prime_ll(p)) throw DomainError("modulus must be prime");
    if (n < 1) throw DomainError("rank must be >= 1");
    if (coeffs.size() < 2) throw DomainError("need at least two coefficients");
    long long sum = 0;
    for (auto& a : coeffs) {
        a %= p;
        if (a < 0) a += p;
        sum = (sum + a) % p;
    }
    if (sum != 0) throw DomainError("coefficients must sum to 0 mod p");
}

AbelianGroup PetrovInstance::group() const {
    return AbelianGroup(std::vector<long long>(static_cast<size_t>(n), p));
}

bool PetrovInstance::all_coeffs_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](long long a) { return a == 0; });
}

bool PetrovInstance::all_coeffs_one() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](long long a) { return a == 1; });
}

PetrovVerifyResult petrov_verify(const PetrovInstance& inst,
                                 const std::vector<uint16_t>& F) {
    auto ops = make_group_ops(inst.group());
    std::vector<uint16_t> set = F;
    std::sort(set.begin(), set.end());
    if (std::adjacent_find(set.begin(), set.end()) != set.end())
        throw DomainError("set elements must be distinct");
    for (uint16_t e : set)
        if (e >= ops->order) throw DomainError("element index out of range");

    auto mul = coeff_tables(*ops, inst.coeffs);
    uint64_t total = zero_tuple_count(*ops, mul, set);
    PetrovVerifyResult out;
    if (total == set.size()) {
        out.property_holds = true;
        return out;
    }
    out.property_holds = false;

    // Recover one nonconstant zero tuple: suffix feasibility counts, then a
    // DFS that skips the all-constant completions.
    size_t m = mul.size();
    uint32_t order = ops->order;
    // suffix[i][t] = number of tuples (b_i..b_{m-1}) with sum_j a_j b_j = t.
    std::vector<std::vector<uint64_t>> suffix(m + 1);
    suffix[m].assign(order, 0);
    suffix[m][0] = 1;
    for (size_t i = m; i-- > 0;) {
        suffix[i].assign(order, 0);
        for (uint16_t b : set) {
            uint16_t ab = mul[i][b];
            for (uint32_t v = 0; v < order; ++v) {
                if (suffix[i + 1][v] == 0) continue;
                uint32_t w = ops->sum(static_cast<uint16_t>(v), ab);
                suffix[i][w] = sat_add(suffix[i][w], suffix[i + 1][v]);
            }
        }
    }
    std::vector<uint16_t> tuple(m);
    std::vector<uint16_t> chosen;
    std::function<bool(size_t, uint16_t, bool)> dfs = [&](size_t i, uint16_t u,
                                                          bool constant) -> bool {
        if (i == m) return !constant && u == 0;
        for (uint16_t b : set) {
            uint16_t nu = ops->sum(u, mul[i][b]);
            // Feasible iff some completion of the suffix sums to -nu.
            if (suffix[i + 1][ops->neg[nu]] == 0) continue;
            bool still_constant = constant && (i == 0 || b == tuple[0]);
            tuple[i] = b;
            if (dfs(i + 1, nu, still_constant)) return true;
        }
        return false;
    };
    bool found = dfs(0, 0, true);
    if (!found) throw std::logic_error("violation count positive but no tuple found");
    out.violating_tuple = tuple;
    return out;
}

ExactResult petrov_max_search(const PetrovInstance& inst, const SearchBudget& budget) {
    auto ops = make_group_ops(inst.group());
    SymmetryGroup sym = inst.all_coeffs_one() ? build_symmetry_group(ops)
                                              : build_scalar_symmetry(ops);
    auto mul = coeff_tables(*ops, inst.coeffs);
    uint32_t order = ops->order;

    bool has_deadline = budget.max_seconds < 1e9;
    Clock::time_point deadline{};
    if (has_deadline)
        deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                      std::chrono::duration<double>(
                                          std::max(0.0, budget.max_seconds)));

    std::vector<uint16_t> M(order, 0);
    std::vector<uint16_t> supp;
    std::vector<uint16_t> F;
    long long nodes = 0;
    bool exhausted = false;
    long long best = 0;
    std::vector<uint16_t> best_F;

    // feasibility: F + {x} keeps the property (zero tuple count stays trivial)
    auto feasible = [&](uint16_t x) {
        std::vector<uint16_t> trial = F;
        trial.push_back(x);
        return zero_tuple_count(*ops, mul, trial) ==
               static_cast<uint64_t>(trial.size());
    };

    std::function<void(uint16_t)> dfs = [&](uint16_t first) {
        for (uint32_t e = first; e < order; ++e) {
            ++nodes;
            if (nodes > budget.max_nodes ||
                ((nodes & 255) == 0 && has_deadline && Clock::now() >= deadline)) {
                exhausted = true;
                return;
            }
            if (M[e] >= 1) continue;
            if (static_cast<long long>(F.size()) + (order - e) <= best) break;
            if (!feasible(static_cast<uint16_t>(e))) continue;
            M[e] = 1;
            supp.push_back(static_cast<uint16_t>(e));
            if (!is_canonical_word(sym, M, supp, nullptr)) {
                M[e] = 0;
                supp.pop_back();
                continue;
            }
            F.push_back(static_cast<uint16_t>(e));
            if (static_cast<long long>(F.size()) > best) {
                best = static_cast<long long>(F.size());
                best_F = F;
            }
            dfs(static_cast<uint16_t>(e));
            F.pop_back();
            M[e] = 0;
            supp.pop_back();
            if (exhausted) return;
        }
    };
    dfs(0);

    ExactResult out;
    out.value = best;
    out.status = exhausted ? SearchStatus::LOWER_BOUND_ONLY : SearchStatus::EXACT;
    ZSequence w(inst.group());
    for (uint16_t e : best_F) w.add(e);
    out.witness = w;
    out.nodes_explored = nodes;
    return out;
}

BoundResult petrov_cardinality_bound(const PetrovInstance& inst,
                                     PetrovBoundRoute route) {
    if (inst.all_coeffs_zero())
        throw DomainError("cardinality bounds need a coefficient nonzero mod p");
    long long m = inst.m();
    BoundResult r;
    r.kind = BoundKind::UPPER;
    if (route == PetrovBoundRoute::EXACT_DIM) {
        long long k = (inst.n * (inst.p - 1)) / m;
        mpz_class dim = dim_exact(inst.n, inst.p, k);
        mpz_class v = to_mpz(m) * dim;
        r.value_int = v;
        r.value_real = HpReal::of(v);
        r.provenance.push_back(ProvenanceStep{
            "petrov_dim_bound",
            "|F| <= m * dim(n, p, floor(n (p-1) / m))",
            {{"p", std::to_string(inst.p)},
             {"n", std::to_string(inst.n)},
             {"m", std::to_string(m)},
             {"dim", dim.get_str()}},
            v.get_str()});
    } else {
        HpReal c = dim_bound_exponent(inst.p, m);
        HpReal val = HpReal::of(m) * dim_upper_bound(inst.n, inst.p, m);
        r.value_real = val;
        r.value_int = val.floor_z();
        r.provenance.push_back(ProvenanceStep{
            "petrov_closed_bound",
            "|F| <= m * p^(c n), c = 1 - (m-2)^2 / (2 m^2 ln p)",
            {{"p", std::to_string(inst.p)},
             {"n", std::to_string(inst.n)},
             {"m", std::to_string(m)},
             {"c", c.str(30)}},
            val.str(30)});
    }
    return r;
}

} // namespace zslab
