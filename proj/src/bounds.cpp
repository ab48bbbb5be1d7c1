#include "zslab/bounds.hpp"

#include <algorithm>

#include "zslab/error.hpp"

namespace zslab {

std::string to_string(BoundKind k) {
    switch (k) {
        case BoundKind::LOWER: return "LOWER";
        case BoundKind::UPPER: return "UPPER";
        case BoundKind::EXACT: return "EXACT";
    }
    return "UPPER";
}

std::string Assumption::render() const {
    return "PROPERTY_D(" + std::to_string(p) + "," + std::to_string(n) + ")";
}

namespace {

mpz_class pow_z(long long b, long long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(b),
                  static_cast<unsigned long>(e));
    return r;
}

bool is_prime_ll(long long v) {
    if (v < 2) return false;
    for (long long d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

std::vector<std::pair<long long, int>> factorize(long long v) {
    if (v < 1) throw DomainError("cannot factor a nonpositive integer");
    std::vector<std::pair<long long, int>> out;
    for (long long d = 2; d <= 1000000 && d * d <= v; ++d) {
        if (v % d == 0) {
            int e = 0;
            while (v % d == 0) {
                v /= d;
                ++e;
            }
            out.push_back({d, e});
        }
    }
    if (v > 1) {
        mpz_class rem(std::to_string(v));
        if (mpz_probab_prime_p(rem.get_mpz_t(), 40) == 0)
            throw DomainError("cannot factor " + std::to_string(v));
        out.push_back({v, 1});
    }
    return out;
}

void merge_conditions(std::vector<Assumption>& dst, const std::vector<Assumption>& src) {
    for (const auto& a : src)
        if (std::find(dst.begin(), dst.end(), a) == dst.end()) dst.push_back(a);
    std::sort(dst.begin(), dst.end());
}

ProvenanceStep make_step(std::string id, std::string statement,
                         std::vector<std::pair<std::string, std::string>> inputs,
                         std::string value) {
    return ProvenanceStep{std::move(id), std::move(statement), std::move(inputs),
                          std::move(value)};
}

BoundResult exact_result(const mpz_class& v, ProvenanceStep s) {
    BoundResult r;
    r.kind = BoundKind::EXACT;
    r.value_int = v;
    r.value_real = HpReal::of(v);
    r.provenance.push_back(std::move(s));
    return r;
}

} // namespace

BoundResult rank2_exact(long long n1, long long n2) {
    if (n1 < 1 || n2 < 2 || n2 % n1 != 0)
        throw DomainError("rank-two form needs 1 <= n1 | n2, n2 >= 2");
    mpz_class v = 2 * (to_mpz(n1) + to_mpz(n2)) - 3;
    return exact_result(
        v, make_step("rank_two_exact", "s(Z_n1 x Z_n2) = 2 n1 + 2 n2 - 3",
                     {{"n1", std::to_string(n1)}, {"n2", std::to_string(n2)}},
                     v.get_str()));
}

std::pair<BoundResult, BoundResult> harborth_bounds(long long k, long long n) {
    if (k < 2 || n < 1) throw DomainError("sandwich needs k >= 2, n >= 1");
    mpz_class lo = to_mpz(k - 1) * pow_z(2, n) + 1;
    mpz_class hi = to_mpz(k - 1) * pow_z(k, n) + 1;
    BoundResult lower;
    lower.kind = BoundKind::LOWER;
    lower.value_int = lo;
    lower.value_real = HpReal::of(lo);
    lower.provenance.push_back(make_step(
        "sandwich_lower", "s((Z_k)^n) >= (k-1) 2^n + 1",
        {{"k", std::to_string(k)}, {"n", std::to_string(n)}}, lo.get_str()));
    BoundResult upper;
    upper.kind = BoundKind::UPPER;
    upper.value_int = hi;
    upper.value_real = HpReal::of(hi);
    upper.provenance.push_back(make_step(
        "sandwich_upper", "s((Z_k)^n) <= (k-1) k^n + 1",
        {{"k", std::to_string(k)}, {"n", std::to_string(n)}}, hi.get_str()));
    return {lower, upper};
}

BoundResult har2_exact(long long a, long long n) {
    if (a < 0 || n < 1) throw DomainError("two-power form needs a >= 0, n >= 1");
    mpz_class v = (pow_z(2, a) - 1) * pow_z(2, n) + 1;
    return exact_result(
        v, make_step("two_power_exact", "s((Z_2^a)^n) = (2^a - 1) 2^n + 1",
                     {{"a", std::to_string(a)}, {"n", std::to_string(n)}},
                     v.get_str()));
}

BoundResult upper_egz_prime(long long p, long long n, const PropDRegistry& reg) {
    if (p < 3 || !is_prime_ll(p))
        throw DomainError("analytic prime bound needs an odd prime");
    if (n < 1) throw DomainError("rank must be >= 1");
    HpReal eps = (HpReal::of((p - 2) * (p - 2))) /
                 (HpReal::of(2 * p * p) * HpReal::of(p).ln());
    HpReal expo = (HpReal::of(1) - eps) * HpReal::of(n) + HpReal::of(1);
    HpReal val = HpReal::of(p - 1) * HpReal::pow(HpReal::of(p), expo) + HpReal::of(1);
    BoundResult r;
    r.kind = BoundKind::UPPER;
    r.value_real = val;
    r.value_int = val.floor_z();
    if (!reg.holds(p, n)) r.conditional_on.push_back(Assumption{p, n});
    r.provenance.push_back(make_step(
        "prime_upper",
        "s((Z_p)^n) <= (p-1) p^((1-eps) n + 1) + 1, eps = (p-2)^2 / (2 p^2 ln p)",
        {{"p", std::to_string(p)},
         {"n", std::to_string(n)},
         {"eps", eps.str(30)}},
        val.str(30)));
    return r;
}

BoundResult exp_upper_step(long long exp_quotient, const BoundResult& s_subgroup,
                           const BoundResult& s_quotient) {
    if (exp_quotient < 2) throw DomainError("quotient exponent must be >= 2");
    if (s_subgroup.kind == BoundKind::LOWER || s_quotient.kind == BoundKind::LOWER)
        throw KindError("quotient step needs upper or exact inputs");
    BoundResult r;
    r.kind = BoundKind::UPPER;
    r.value_int = to_mpz(exp_quotient) * (s_subgroup.value_int - 1) + s_quotient.value_int;
    r.value_real = HpReal::of(exp_quotient) * (s_subgroup.value_real - HpReal::of(1)) +
                   s_quotient.value_real;
    r.conditional_on = s_subgroup.conditional_on;
    merge_conditions(r.conditional_on, s_quotient.conditional_on);
    r.provenance = s_subgroup.provenance;
    r.provenance.insert(r.provenance.end(), s_quotient.provenance.begin(),
                        s_quotient.provenance.end());
    r.provenance.push_back(make_step(
        "quotient_step", "s(G) <= exp(G/H) (s(H) - 1) + s(G/H)",
        {{"exp_quotient", std::to_string(exp_quotient)},
         {"s_subgroup", s_subgroup.value_int.get_str()},
         {"s_quotient", s_quotient.value_int.get_str()}},
        r.value_int.get_str()));
    return r;
}

BoundResult ppower_bound(long long p, int r, long long n, const PropDRegistry& reg) {
    if (p < 3 || !is_prime_ll(p))
        throw DomainError("prime-power tower needs an odd prime (2-powers have an exact form)");
    if (r < 1 || n < 1) throw DomainError("tower height and rank must be >= 1");
    BoundResult base = (n == 1) ? rank2_exact(1, p) : upper_egz_prime(p, n, reg);
    BoundResult u = base;
    for (int j = 2; j <= r; ++j) {
        BoundResult next = exp_upper_step(p, u, base);
        // Rewrite the generic step id to name the tower recursion.
        next.provenance.back().id = "prime_power_recursion";
        next.provenance.back().statement =
            "s((Z_p^(j+1))^n) <= p (s((Z_p^j)^n) - 1) + s((Z_p)^n)";
        u = std::move(next);
    }
    HpReal d_eff = HpReal::pow(
        u.value_real * HpReal::of(p - 1) / HpReal::of(pow_z(p, r) - 1),
        HpReal::of(1) / HpReal::of(n));
    u.provenance.push_back(make_step(
        "effective_density", "d_eff = (U (p-1) / (p^r - 1))^(1/n)",
        {{"p", std::to_string(p)},
         {"r", std::to_string(r)},
         {"n", std::to_string(n)}},
        d_eff.str(30)));
    return u;
}

BoundResult egzupper_combine(
    const std::vector<long long>& invariant_factors,
    const std::map<std::pair<long long, int>, BoundResult>& prime_upper) {
    if (invariant_factors.empty())
        throw DomainError("combination needs at least one invariant factor");
    for (size_t i = 0; i < invariant_factors.size(); ++i) {
        if (invariant_factors[i] < 2)
            throw DomainError("invariant factors must be >= 2");
        if (i > 0 && invariant_factors[i] % invariant_factors[i - 1] != 0)
            throw DomainError("factors must form a divisibility chain");
    }
    int r = static_cast<int>(invariant_factors.size());
    auto primes = factorize(invariant_factors.back());

    BoundResult out;
    out.kind = BoundKind::UPPER;
    std::vector<mpz_class> c(static_cast<size_t>(r) + 1);
    c[0] = 0;
    for (int i = 1; i <= r; ++i) {
        mpz_class ci = 0;
        for (const auto& [p, e] : primes) {
            (void)e;
            auto it = prime_upper.find({p, i});
            if (it == prime_upper.end())
                throw MissingBound("missing UB(p=" + std::to_string(p) +
                                   ", i=" + std::to_string(i) + ")");
            const BoundResult& ub = it->second;
            if (ub.kind == BoundKind::LOWER)
                throw KindError("combination inputs must be upper or exact");
            mpz_class cpi;
            mpz_class num = ub.value_int - 1;
            mpz_class den = to_mpz(p - 1);
            mpz_cdiv_q(cpi.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            if (cpi > ci) ci = cpi;
            merge_conditions(out.conditional_on, ub.conditional_on);
            out.provenance.insert(out.provenance.end(), ub.provenance.begin(),
                                  ub.provenance.end());
        }
        c[static_cast<size_t>(i)] = ci;
    }

    mpz_class bound = 1 - c[static_cast<size_t>(r)];
    for (int i = 1; i <= r; ++i)
        bound += (c[static_cast<size_t>(r + 1 - i)] - c[static_cast<size_t>(r - i)]) *
                 to_mpz(invariant_factors[static_cast<size_t>(i - 1)]);
    out.value_int = bound;
    out.value_real = HpReal::of(bound);

    std::vector<std::pair<std::string, std::string>> inputs;
    std::string spec;
    for (int i = 0; i < r; ++i)
        spec += (i ? "x" : "") + std::to_string(invariant_factors[static_cast<size_t>(i)]);
    inputs.push_back({"factors", spec});
    for (int i = 1; i <= r; ++i)
        inputs.push_back({"c_" + std::to_string(i), c[static_cast<size_t>(i)].get_str()});
    out.provenance.push_back(make_step(
        "invariant_factor_combine",
        "s(G) <= sum_i (c_(r+1-i) - c_(r-i)) n_i - c_r + 1, "
        "c_i = max_p ceil((UB(p,i) - 1) / (p - 1))",
        std::move(inputs), bound.get_str()));
    return out;
}

BoundResult default_prime_base(long long p, int i, BasePolicy policy,
                               const PropDRegistry& reg) {
    if (i < 1) throw DomainError("rank index must be >= 1");
    if (policy == BasePolicy::BEST_KNOWN) {
        if (i == 1) return rank2_exact(1, p);
        if (i == 2) return rank2_exact(p, p);
    }
    if (p == 2) return har2_exact(1, i);
    return upper_egz_prime(p, i, reg);
}

BoundResult egzupper_default(const AbelianGroup& A, BasePolicy policy,
                             const PropDRegistry& reg) {
    if (A.trivial()) throw DomainError("combination needs a nontrivial group");
    const auto& facs = A.invariant_factors();
    int r = A.rank();
    std::map<std::pair<long long, int>, BoundResult> ub;
    for (const auto& [p, e] : factorize(A.exponent())) {
        (void)e;
        for (int i = 1; i <= r; ++i) ub.insert({{p, i}, default_prime_base(p, i, policy, reg)});
    }
    return egzupper_combine(facs, ub);
}

BoundResult composite_bound(long long m, long long k, long long n,
                            BasePolicy policy, const PropDRegistry& reg) {
    if (m < 1 || (m & (m - 1)) != 0)
        throw DomainError("even part must be a power of two (1 allowed)");
    if (k < 3 || k % 2 == 0) throw DomainError("odd part must be an odd integer >= 3");
    if (n < 1) throw DomainError("rank must be >= 1");

    BoundResult s_sub;
    if (m == 1) {
        s_sub = exact_result(1, make_step("trivial_group", "s(1) = 1", {}, "1"));
    } else {
        long long a = 0;
        for (long long t = m; t > 1; t >>= 1) ++a;
        s_sub = har2_exact(a, n);
    }
    AbelianGroup quotient(std::vector<long long>(static_cast<size_t>(n), k));
    BoundResult s_quot = egzupper_default(quotient, policy, reg);
    BoundResult out = exp_upper_step(k, s_sub, s_quot);
    out.provenance.push_back(make_step(
        "composite_chain", "s((Z_mk)^n) <= k (s((Z_m)^n) - 1) + s((Z_k)^n)",
        {{"m", std::to_string(m)},
         {"k", std::to_string(k)},
         {"n", std::to_string(n)}},
        out.value_int.get_str()));
    return out;
}

BoundResult maincor2_bound(long long n) {
    if (n < 1) throw DomainError("rank must be >= 1");
    HpReal val = HpReal::of(2) * HpReal::pow(HpReal::parse("2.765"), HpReal::of(n));
    BoundResult r;
    r.kind = BoundKind::UPPER;
    r.value_real = val;
    r.value_int = val.floor_z();
    r.provenance.push_back(make_step("capset_upper", "s((Z_3)^n) <= 2 * 2.765^n",
                                     {{"n", std::to_string(n)}}, val.str(30)));
    return r;
}

namespace {

BoundResult as_subgroup_lower(const BoundResult& sub_exact, const std::string& sub_spec) {
    BoundResult r;
    r.kind = BoundKind::LOWER;
    r.value_int = sub_exact.value_int;
    r.value_real = sub_exact.value_real;
    r.conditional_on = sub_exact.conditional_on;
    r.provenance = sub_exact.provenance;
    r.provenance.push_back(make_step(
        "subgroup_monotone", "s(A) >= s(H) for H <= A with exp(H) = exp(A)",
        {{"subgroup", sub_spec}}, sub_exact.value_int.get_str()));
    return r;
}

bool exponent_two_power(long long k, long long* a_out) {
    if (k < 2 || (k & (k - 1)) != 0) return false;
    long long a = 0;
    for (long long t = k; t > 1; t >>= 1) ++a;
    *a_out = a;
    return true;
}

} // namespace

std::vector<BoundResult> all_upper_candidates(const AbelianGroup& A,
                                              const PropDRegistry& reg) {
    std::vector<BoundResult> out;
    if (A.trivial()) {
        out.push_back(exact_result(1, make_step("trivial_group", "s(1) = 1", {}, "1")));
        return out;
    }
    const auto& facs = A.invariant_factors();
    long long k = A.exponent();
    int rank = A.rank();

    if (rank == 1) out.push_back(rank2_exact(1, facs[0]));
    if (rank == 2) out.push_back(rank2_exact(facs[0], facs[1]));

    if (A.is_homocyclic()) {
        long long a = 0;
        if (exponent_two_power(k, &a)) out.push_back(har2_exact(a, rank));
        out.push_back(harborth_bounds(k, rank).second);
        auto kfac = factorize(k);
        if (kfac.size() == 1 && kfac[0].first >= 3) {
            long long p = kfac[0].first;
            int e = kfac[0].second;
            if (e == 1)
                out.push_back(upper_egz_prime(p, rank, reg));
            else
                out.push_back(ppower_bound(p, e, rank, reg));
        }
        if (k == 3) out.push_back(maincor2_bound(rank));
        long long kodd = k;
        long long m2 = 1;
        while (kodd % 2 == 0) {
            kodd /= 2;
            m2 *= 2;
        }
        if (kodd >= 3) out.push_back(composite_bound(m2, kodd, rank, BasePolicy::BEST_KNOWN, reg));
    }
    out.push_back(egzupper_default(A, BasePolicy::BEST_KNOWN, reg));
    return out;
}

std::vector<BoundResult> all_lower_candidates(const AbelianGroup& A) {
    std::vector<BoundResult> out;
    if (A.trivial()) {
        out.push_back(exact_result(1, make_step("trivial_group", "s(1) = 1", {}, "1")));
        return out;
    }
    const auto& facs = A.invariant_factors();
    int rank = A.rank();
    if (A.is_homocyclic()) out.push_back(harborth_bounds(A.exponent(), rank).first);
    {
        AbelianGroup sub({facs.back()});
        out.push_back(as_subgroup_lower(rank2_exact(1, facs.back()), sub.to_spec()));
    }
    if (rank >= 2) {
        AbelianGroup sub({facs[static_cast<size_t>(rank) - 2], facs.back()});
        out.push_back(as_subgroup_lower(
            rank2_exact(facs[static_cast<size_t>(rank) - 2], facs.back()), sub.to_spec()));
    }
    return out;
}

BestBounds best_bounds(const AbelianGroup& A, const PropDRegistry& reg) {
    BestBounds out;
    if (A.trivial()) {
        BoundResult one =
            exact_result(1, make_step("trivial_group", "s(1) = 1", {}, "1"));
        out.lower = one;
        out.upper = one;
        out.exact = one;
        return out;
    }

    std::optional<BoundResult> exact;
    if (A.rank() == 1)
        exact = rank2_exact(1, A.invariant_factors()[0]);
    else if (A.rank() == 2)
        exact = rank2_exact(A.invariant_factors()[0], A.invariant_factors()[1]);
    long long a = 0;
    if (A.is_homocyclic() && exponent_two_power(A.exponent(), &a)) {
        BoundResult h2 = har2_exact(a, A.rank());
        if (exact && exact->value_int != h2.value_int)
            throw std::logic_error("exact forms disagree");
        if (!exact) exact = h2;
    }
    if (exact) {
        out.exact = exact;
        out.lower = *exact;
        out.upper = *exact;
        return out;
    }

    auto uppers = all_upper_candidates(A, reg);
    auto lowers = all_lower_candidates(A);

    const BoundResult* best_uncond = nullptr;
    const BoundResult* best_any = nullptr;
    for (const auto& u : uppers) {
        if (u.conditional_on.empty() &&
            (!best_uncond || u.value_int < best_uncond->value_int))
            best_uncond = &u;
        if (!best_any || u.value_int < best_any->value_int) best_any = &u;
    }
    const BoundResult* best_low = nullptr;
    for (const auto& l : lowers)
        if (!best_low || l.value_int > best_low->value_int) best_low = &l;

    if (!best_uncond || !best_low)
        throw std::logic_error("no applicable bound candidates");
    out.upper = *best_uncond;
    out.lower = *best_low;
    if (best_any && !best_any->conditional_on.empty() &&
        best_any->value_int < best_uncond->value_int)
        out.conditional_upper = *best_any;
    return out;
}

} // namespace zslab
