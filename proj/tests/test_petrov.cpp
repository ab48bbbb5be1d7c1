#include "doctest.h"

#include <algorithm>
#include <random>

#include "zslab/monomial.hpp"
#include "zslab/petrov.hpp"

using namespace zslab;

namespace {

// Reference decision by full m-fold enumeration over F.
bool naive_property(const PetrovInstance& inst, const std::vector<uint16_t>& F) {
    if (F.empty()) return true;
    auto ops = make_group_ops(inst.group());
    size_t m = inst.coeffs.size();
    std::vector<size_t> idx(m, 0);
    while (true) {
        uint16_t s = 0;
        bool constant = true;
        for (size_t i = 0; i < m; ++i) {
            s = ops->sum(s, ops->smul(inst.coeffs[i], F[idx[i]]));
            if (idx[i] != idx[0]) constant = false;
        }
        if (s == 0 && !constant) return false;
        size_t pos = 0;
        while (pos < m && ++idx[pos] == F.size()) idx[pos++] = 0;
        if (pos == m) return true;
    }
}

} // namespace

TEST_CASE("instance validation") {
    CHECK_NOTHROW(PetrovInstance(3, 1, {1, 1, 1}));
    CHECK_NOTHROW(PetrovInstance(3, 2, {1, 2, 0}));
    CHECK_NOTHROW(PetrovInstance(5, 1, {7, 3, 0, 0, 0}));  // reduces mod 5, sum 10 = 0
    CHECK_THROWS_AS(PetrovInstance(4, 1, {1, 1, 2}), DomainError);   // p not prime
    CHECK_THROWS_AS(PetrovInstance(3, 0, {1, 1, 1}), DomainError);   // n < 1
    CHECK_THROWS_AS(PetrovInstance(3, 1, {1}), DomainError);         // m < 2
    CHECK_THROWS_AS(PetrovInstance(3, 1, {1, 1}), DomainError);      // sum not 0 mod p
    PetrovInstance reduced(3, 1, {4, 5, 0});
    CHECK(reduced.coeffs == std::vector<long long>{1, 2, 0});
    CHECK(PetrovInstance(3, 2, {1, 1, 1}).all_coeffs_one());
    CHECK_FALSE(PetrovInstance(3, 2, {1, 2, 0}).all_coeffs_one());
    CHECK(PetrovInstance(3, 1, {0, 0, 0}).all_coeffs_zero());
}

TEST_CASE("verification on hand-checked sets") {
    PetrovInstance inst(3, 1, {1, 1, 1});  // x + y + z = 0 over Z_3
    // {0, 1}: only constant solutions (0+0+0, 1+1+1)
    CHECK(petrov_verify(inst, {0, 1}).property_holds);
    // {0, 1, 2}: 0 + 1 + 2 = 0 is a nonconstant solution
    PetrovVerifyResult bad = petrov_verify(inst, {0, 1, 2});
    CHECK_FALSE(bad.property_holds);
    REQUIRE(bad.violating_tuple.has_value());
    auto tup = *bad.violating_tuple;
    REQUIRE(tup.size() == 3);
    CHECK((tup[0] + tup[1] + tup[2]) % 3 == 0);
    CHECK(!(tup[0] == tup[1] && tup[1] == tup[2]));
    for (uint16_t b : tup) CHECK(b <= 2);

    // the empty set and singletons hold trivially
    CHECK(petrov_verify(inst, {}).property_holds);
    CHECK(petrov_verify(inst, {2}).property_holds);

    // duplicate or out-of-range entries are rejected
    CHECK_THROWS_AS(petrov_verify(inst, {0, 0}), DomainError);
    CHECK_THROWS_AS(petrov_verify(inst, {0, 9}), DomainError);
}

TEST_CASE("all-zero coefficients make every multi-element set fail") {
    PetrovInstance inst(3, 1, {0, 0, 0});
    CHECK(petrov_verify(inst, {1}).property_holds);
    PetrovVerifyResult r = petrov_verify(inst, {0, 1});
    CHECK_FALSE(r.property_holds);
    REQUIRE(r.violating_tuple.has_value());
}

TEST_CASE("verification agrees with full enumeration") {
    std::mt19937_64 rng(2024);
    struct Cfg { long long p, n; std::vector<long long> coeffs; };
    const Cfg cfgs[] = {
        {3, 1, {1, 1, 1}},
        {3, 1, {1, 2, 0}},
        {3, 1, {2, 2, 2}},
        {3, 2, {1, 1, 1}},
        {3, 2, {1, 2, 0}},
        {5, 1, {1, 1, 1, 1, 1}},
        {5, 1, {1, 4, 0}},
        {2, 2, {1, 1}},
        {7, 1, {1, 2, 4}},
    };
    int checked = 0;
    for (const Cfg& cfg : cfgs) {
        PetrovInstance inst(cfg.p, cfg.n, cfg.coeffs);
        long long order = inst.group().order_ll();
        std::uniform_int_distribution<int> size_d(0, static_cast<int>(std::min<long long>(order, 6)));
        for (int trial = 0; trial < 140; ++trial) {
            std::vector<uint16_t> all(order);
            for (long long i = 0; i < order; ++i) all[i] = static_cast<uint16_t>(i);
            std::shuffle(all.begin(), all.end(), rng);
            all.resize(size_d(rng));
            std::sort(all.begin(), all.end());
            PetrovVerifyResult r = petrov_verify(inst, all);
            CHECK(r.property_holds == naive_property(inst, all));
            if (r.violating_tuple) {
                auto ops = make_group_ops(inst.group());
                uint16_t s = 0;
                bool constant = true;
                for (size_t i = 0; i < r.violating_tuple->size(); ++i) {
                    uint16_t b = (*r.violating_tuple)[i];
                    CHECK(std::binary_search(all.begin(), all.end(), b));
                    s = ops->sum(s, ops->smul(inst.coeffs[i], b));
                    if (b != (*r.violating_tuple)[0]) constant = false;
                }
                CHECK(s == 0);
                CHECK_FALSE(constant);
            }
            ++checked;
        }
    }
    CHECK(checked > 1000);
}

TEST_CASE("maximum set sizes at pinned instances") {
    auto max_of = [](long long p, long long n, std::vector<long long> coeffs) {
        ExactResult r = petrov_max_search(PetrovInstance(p, n, std::move(coeffs)));
        REQUIRE(r.status == SearchStatus::EXACT);
        return *r.value;
    };
    CHECK(max_of(3, 1, {1, 1, 1}) == 2);
    CHECK(max_of(3, 2, {1, 1, 1}) == 4);      // the cap-set bound in the plane
    CHECK(max_of(3, 1, {1, 2, 0}) == 1);
    CHECK(max_of(3, 1, {2, 2, 2}) == 2);
    CHECK(max_of(5, 1, {1, 1, 1, 1, 1}) == 2);
    CHECK(max_of(3, 2, {1, 2, 0}) == 1);
    CHECK(max_of(2, 1, {1, 1}) == 2);
    CHECK(max_of(2, 2, {1, 1}) == 4);
}

TEST_CASE("search witnesses verify and are maximal") {
    PetrovInstance inst(3, 2, {1, 1, 1});
    ExactResult r = petrov_max_search(inst);
    REQUIRE(r.status == SearchStatus::EXACT);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->length() == *r.value);
    CHECK(r.witness->squarefree());
    std::vector<uint16_t> F = r.witness->support();
    CHECK(petrov_verify(inst, F).property_holds);
}

TEST_CASE("all-zero coefficients cap the maximum at one") {
    ExactResult r = petrov_max_search(PetrovInstance(3, 1, {0, 0, 0}));
    REQUIRE(r.status == SearchStatus::EXACT);
    CHECK(*r.value == 1);
}

TEST_CASE("cardinality bounds at the pinned instance") {
    PetrovInstance inst(3, 2, {1, 1, 1});
    BoundResult dim_route = petrov_cardinality_bound(inst, PetrovBoundRoute::EXACT_DIM);
    CHECK(dim_route.kind == BoundKind::UPPER);
    CHECK(dim_route.value_int == 9);  // 3 * dim(2, 3, 2) = 3 * 3... the k here is floor(2*2/3) = 1 -> dim 3
    CHECK(dim_route.provenance.back().id == "petrov_dim_bound");

    BoundResult closed = petrov_cardinality_bound(inst, PetrovBoundRoute::CLOSED_FORM);
    CHECK(closed.kind == BoundKind::UPPER);
    CHECK(closed.value_int == 24);  // 3 * 3^(2c), c as in the analytic exponent
    CHECK(closed.provenance.back().id == "petrov_closed_bound");
    // the closed form dominates the dimension route
    CHECK(dim_route.value_real <= closed.value_real);

    CHECK_THROWS_AS(
        petrov_cardinality_bound(PetrovInstance(3, 1, {0, 0, 0}),
                                 PetrovBoundRoute::EXACT_DIM),
        DomainError);
}

TEST_CASE("bounds dominate the search maxima") {
    struct Cfg { long long p, n; std::vector<long long> coeffs; };
    const Cfg cfgs[] = {
        {3, 1, {1, 1, 1}},
        {3, 2, {1, 1, 1}},
        {5, 1, {1, 1, 1, 1, 1}},
        {3, 1, {1, 2, 0}},
    };
    for (const Cfg& cfg : cfgs) {
        PetrovInstance inst(cfg.p, cfg.n, cfg.coeffs);
        ExactResult r = petrov_max_search(inst);
        REQUIRE(r.status == SearchStatus::EXACT);
        mpz_class d = petrov_cardinality_bound(inst, PetrovBoundRoute::EXACT_DIM).value_int;
        mpz_class c = petrov_cardinality_bound(inst, PetrovBoundRoute::CLOSED_FORM).value_int;
        CHECK(to_mpz(*r.value) <= d);
        CHECK(to_mpz(*r.value) <= c);
    }
}

TEST_CASE("budget exhaustion reports a lower bound") {
    SearchBudget tiny;
    tiny.max_nodes = 3;
    ExactResult r = petrov_max_search(PetrovInstance(3, 3, {1, 1, 1}), tiny);
    CHECK(r.status == SearchStatus::LOWER_BOUND_ONLY);
    REQUIRE(r.value.has_value());
    CHECK(*r.value >= 1);
}
