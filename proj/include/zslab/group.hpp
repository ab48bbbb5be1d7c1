#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "zslab/error.hpp"

namespace zslab {

/** mpz from long long without relying on gmpxx long long overloads. */
inline mpz_class to_mpz(long long v) { return mpz_class(static_cast<long>(v)); }

/**
 * A finite abelian group in invariant-factor form: Z_{n_1} + ... + Z_{n_r}
 * with 1 < n_1 | n_2 | ... | n_r.  The trivial group is the empty factor
 * list (order 1, exponent 1).  Construction normalizes arbitrary cyclic
 * factor lists via prime-power regrouping, so any list of factors >= 2
 * yields the unique invariant chain of the same group.
 */
class AbelianGroup {
public:
    AbelianGroup() = default; // trivial group
    explicit AbelianGroup(std::vector<long long> cyclic_factors);

    const std::vector<long long>& invariant_factors() const { return factors_; }
    int rank() const { return static_cast<int>(factors_.size()); }
    long long exponent() const { return factors_.empty() ? 1 : factors_.back(); }
    const mpz_class& order() const { return order_; }
    bool trivial() const { return factors_.empty(); }

    /** Order as a machine integer; throws DomainError when it does not fit. */
    long long order_ll() const;

    /** True when all invariant factors are equal (the (Z_k)^n shape). */
    bool is_homocyclic() const;

    /** Canonical textual form, e.g. "3^2", "2x6"; "1" for the trivial group. */
    std::string to_spec() const;

    /** Coordinates (c_1..c_r), 0 <= c_i < n_i, of the element with the given
     *  mixed-radix index (first coordinate is the most significant digit). */
    std::vector<long long> coords_of(uint32_t index) const;
    uint32_t index_of(const std::vector<long long>& coords) const;

    bool operator==(const AbelianGroup& o) const { return factors_ == o.factors_; }

private:
    std::vector<long long> factors_;
    mpz_class order_ = 1;
};

/** Parse the grammar <int>(^<int>)?(x<int>(^<int>)?)*, e.g. "3^2", "2x4x4",
 *  "9".  "n^m" denotes m copies of the cyclic factor Z_n.  Factors < 2 are
 *  rejected; the result is normalized to invariant-factor form. */
AbelianGroup parse_group(const std::string& spec);

/**
 * Dense element-level operation tables for a small group (order capped so
 * that the quadratic addition table stays cheap).  Element indices are the
 * mixed-radix indices of AbelianGroup.  Immutable after construction.
 */
struct GroupOps {
    AbelianGroup group;
    uint32_t order = 1;
    std::vector<uint16_t> add;        // add[a * order + b] = a + b
    std::vector<uint16_t> neg;        // neg[a] = -a
    std::vector<long long> elem_ord;  // additive order of each element

    uint16_t sum(uint16_t a, uint16_t b) const { return add[size_t(a) * order + b]; }
    uint16_t sub(uint16_t a, uint16_t b) const { return add[size_t(a) * order + neg[b]]; }
    /** c * a for any integer c >= 0. */
    uint16_t smul(long long c, uint16_t a) const;
};

constexpr uint32_t kMaxEnumerableOrder = 2048;

/** Build dense tables; throws DomainError when |G| > kMaxEnumerableOrder. */
std::shared_ptr<const GroupOps> make_group_ops(const AbelianGroup& g);

/**
 * A finite multiset over an enumerable group: element index -> multiplicity.
 * This is the sequence object: length counts multiplicity, the sum is taken
 * in the group, and squarefree means every multiplicity equals one.
 */
class ZSequence {
public:
    explicit ZSequence(AbelianGroup g) : group_(std::move(g)) {}

    const AbelianGroup& group() const { return group_; }
    const std::map<uint32_t, uint32_t>& multiplicities() const { return mult_; }
    long long length() const { return length_; }
    bool squarefree() const;
    uint32_t multiplicity(uint32_t elem) const;

    void add(uint32_t elem, uint32_t count = 1);
    void remove(uint32_t elem, uint32_t count = 1);

    /** Element indices with multiplicity, expanded and sorted ascending. */
    std::vector<uint16_t> expanded() const;
    /** Support as sorted element indices. */
    std::vector<uint16_t> support() const;
    /** Sum of the sequence as an element index (coordinate arithmetic). */
    uint32_t sum_index() const;

    bool operator==(const ZSequence& o) const {
        return group_ == o.group_ && mult_ == o.mult_;
    }

private:
    AbelianGroup group_;
    std::map<uint32_t, uint32_t> mult_;
    long long length_ = 0;
};

/** Convenience: build a sequence from element indices. */
ZSequence make_sequence(const AbelianGroup& g, const std::vector<uint32_t>& elems);

} // namespace zslab
