#include "zslab/tables.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

#include "zslab/bounds.hpp"
#include "zslab/monomial.hpp"
#include "zslab/petrov.hpp"
#include "zslab/property_d.hpp"
#include "zslab/search.hpp"

namespace zslab {
namespace {

void partitions_rec(long long remaining, long long max_part,
                    std::vector<long long>& cur,
                    std::vector<std::vector<long long>>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (long long part = std::min(remaining, max_part); part >= 1; --part) {
        cur.push_back(part);
        partitions_rec(remaining - part, part, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<long long>> partitions(long long e) {
    std::vector<std::vector<long long>> out;
    std::vector<long long> cur;
    partitions_rec(e, e, cur, out);
    return out;
}

long long ipow(long long b, long long e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

SearchBudget node_only(long long nodes) {
    SearchBudget b;
    b.max_nodes = nodes;
    b.max_seconds = 1e18; // node-limited only, for reproducible output
    b.parallel_width = 1;
    return b;
}

} // namespace

std::vector<AbelianGroup> abelian_groups_up_to(long long max_order) {
    std::vector<AbelianGroup> out;
    for (long long N = 2; N <= max_order; ++N) {
        // Factor N and take one exponent partition per prime.
        std::vector<std::pair<long long, long long>> fac;
        long long v = N;
        for (long long d = 2; d * d <= v; ++d) {
            if (v % d == 0) {
                long long e = 0;
                while (v % d == 0) {
                    v /= d;
                    ++e;
                }
                fac.push_back({d, e});
            }
        }
        if (v > 1) fac.push_back({v, 1});

        std::vector<std::vector<std::vector<long long>>> parts;
        for (const auto& [p, e] : fac) {
            (void)p;
            parts.push_back(partitions(e));
        }
        std::vector<size_t> idx(fac.size(), 0);
        std::vector<AbelianGroup> groups_of_n;
        while (true) {
            std::vector<long long> factors;
            for (size_t i = 0; i < fac.size(); ++i)
                for (long long part : parts[i][idx[i]])
                    factors.push_back(ipow(fac[i].first, part));
            groups_of_n.push_back(AbelianGroup(factors));
            size_t i = fac.size();
            bool done = true;
            while (i-- > 0) {
                if (++idx[i] < parts[i].size()) {
                    done = false;
                    break;
                }
                idx[i] = 0;
            }
            if (done) break;
        }
        std::sort(groups_of_n.begin(), groups_of_n.end(),
                  [](const AbelianGroup& a, const AbelianGroup& b) {
                      return a.invariant_factors() < b.invariant_factors();
                  });
        for (auto& g : groups_of_n) out.push_back(std::move(g));
    }
    return out;
}

int table_egz_small(std::ostream& os, long long node_budget) {
    os << "group\torder\texponent\ts_status\ts\ts_nodes\tg_status\tg\tg_nodes"
          "\tlower\tupper\texact_formula\tsandwich\n";
    int rc = 0;
    PropDRegistry reg;
    for (const AbelianGroup& A : abelian_groups_up_to(32)) {
        ExactResult s = exact_s(A, node_only(node_budget));
        ExactResult g = exact_g(A, node_only(node_budget));
        BestBounds bb = best_bounds(A, reg);
        std::string sandwich = "-";
        if (s.status == SearchStatus::EXACT) {
            bool ok = bb.lower.value_int <= to_mpz(*s.value) && to_mpz(*s.value) <= bb.upper.value_int;
            if (bb.exact) ok = ok && bb.exact->value_int == to_mpz(*s.value);
            sandwich = ok ? "OK" : "VIOLATION";
            if (!ok) rc = 2;
        } else {
            rc = 2;
        }
        if (g.status != SearchStatus::EXACT && g.status != SearchStatus::VACUOUS) rc = 2;
        os << A.to_spec() << '\t' << A.order_ll() << '\t' << A.exponent() << '\t'
           << to_string(s.status) << '\t' << *s.value << '\t' << s.nodes_explored << '\t'
           << to_string(g.status) << '\t' << *g.value << '\t' << g.nodes_explored << '\t'
           << bb.lower.value_int.get_str() << '\t' << bb.upper.value_int.get_str() << '\t'
           << (bb.exact ? bb.exact->value_int.get_str() : std::string("-")) << '\t'
           << sandwich << '\n';
    }
    return rc;
}

int table_dim_vs_bound(std::ostream& os) {
    os << "D\tn\tm\tk\tlog10_dim\tlog10_bound\tstatus\n";
    int rc = 0;
    const long long Ds[] = {2, 3, 5, 7, 11};
    const HpReal ln10 = HpReal::of(10).ln();
    for (long long D : Ds) {
        HpReal lnD = HpReal::of(D).ln();
        std::vector<HpReal> c;
        for (long long m = 3; m <= 10; ++m) c.push_back(dim_bound_exponent(D, m));
        DimSweep sweep(D);
        for (long long n = 1; n <= 2000; ++n) {
            sweep.advance();
            std::vector<long long> ks;
            for (long long m = 3; m <= 10; ++m) ks.push_back(n * (D - 1) / m);
            std::vector<mpz_class> dims = sweep.dims_at(ks);
            for (long long m = 3; m <= 10; ++m) {
                const mpz_class& dim = dims[static_cast<size_t>(m - 3)];
                HpReal ln_dim = HpReal::of(dim).ln();
                HpReal rhs = c[static_cast<size_t>(m - 3)] * HpReal::of(n) * lnD;
                HpReal diff = ln_dim - rhs; // <= 0 when the bound holds
                std::string status = "OK";
                if (diff > HpReal::of(0)) {
                    HpReal rel = diff / rhs;
                    if (rel.to_double() <= 1e-9) {
                        status = "NEAR_TIE";
                    } else {
                        status = "VIOLATION";
                        rc = 2;
                    }
                }
                char buf[64];
                std::snprintf(buf, sizeof buf, "%.12f", (ln_dim / ln10).to_double());
                std::string l10dim(buf);
                std::snprintf(buf, sizeof buf, "%.12f", (rhs / ln10).to_double());
                std::string l10rhs(buf);
                os << D << '\t' << n << '\t' << m << '\t' << ks[static_cast<size_t>(m - 3)]
                   << '\t' << l10dim << '\t' << l10rhs << '\t' << status << '\n';
            }
        }
    }
    return rc;
}

int table_petrov_caps(std::ostream& os, long long node_budget) {
    os << "p\tn\tm\tstatus\tmax\tnodes\tdim_bound\tclosed_bound\tconsistent\n";
    int rc = 0;
    const long long ps[] = {2, 3, 5, 7};
    for (long long p : ps) {
        for (long long n = 1; ipow(p, n) <= 81; ++n) {
            PetrovInstance inst(p, n, std::vector<long long>(static_cast<size_t>(p), 1));
            ExactResult r = petrov_max_search(inst, node_only(node_budget));
            BoundResult bd = petrov_cardinality_bound(inst, PetrovBoundRoute::EXACT_DIM);
            BoundResult bc = petrov_cardinality_bound(inst, PetrovBoundRoute::CLOSED_FORM);
            std::string consistent = "-";
            if (r.value) {
                bool ok = to_mpz(*r.value) <= bd.value_int && to_mpz(*r.value) <= bc.value_int;
                consistent = ok ? "OK" : "VIOLATION";
                if (!ok) rc = 2;
            }
            if (r.status != SearchStatus::EXACT) rc = 2;
            os << p << '\t' << n << '\t' << p << '\t' << to_string(r.status) << '\t'
               << *r.value << '\t' << r.nodes_explored << '\t' << bd.value_int.get_str()
               << '\t' << bc.value_int.get_str() << '\t' << consistent << '\n';
        }
    }
    return rc;
}

int table_propd_survey(std::ostream& os, long long node_budget) {
    os << "group\tstatus\ts\textremal_orbits\traw_count\tnodes\n";
    int rc = 0;
    std::vector<AbelianGroup> groups;
    for (long long m = 2; m <= 7; ++m) groups.push_back(AbelianGroup({m}));
    for (long long n = 2; n <= 4; ++n)
        groups.push_back(AbelianGroup(std::vector<long long>(static_cast<size_t>(n), 2)));
    groups.push_back(AbelianGroup({3, 3}));
    groups.push_back(AbelianGroup({4, 4}));
    for (const AbelianGroup& A : groups) {
        PropertyDReport rep = check_property_d(A, node_only(node_budget));
        if (rep.status == PropertyDStatus::UNKNOWN) rc = 2;
        os << A.to_spec() << '\t' << to_string(rep.status) << '\t'
           << (rep.s_value ? std::to_string(*rep.s_value) : std::string("-")) << '\t'
           << rep.extremal_orbits_checked << '\t' << rep.extremal_raw_count.get_str()
           << '\t' << rep.nodes_explored << '\n';
    }
    return rc;
}

} // namespace zslab
