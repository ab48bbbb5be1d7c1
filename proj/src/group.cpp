#include "zslab/group.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

namespace zslab {

namespace {

std::map<long long, std::vector<long long>> prime_power_split(long long n) {
    // n >= 2 -> map prime -> exponent (single entry per prime for one factor)
    std::map<long long, std::vector<long long>> out;
    long long m = n;
    for (long long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            long long e = 0;
            while (m % p == 0) { m /= p; ++e; }
            out[p].push_back(e);
        }
    }
    if (m > 1) out[m].push_back(1);
    return out;
}

long long ipow_ll(long long b, long long e) {
    long long r = 1;
    for (long long i = 0; i < e; ++i) {
        if (r > (1LL << 62) / b) throw DomainError("cyclic factor overflows 63 bits");
        r *= b;
    }
    return r;
}

} // namespace

AbelianGroup::AbelianGroup(std::vector<long long> cyclic_factors) {
    for (long long f : cyclic_factors) {
        if (f < 2) throw DomainError("cyclic factors must be >= 2");
    }
    // Regroup prime powers: per prime, the sorted (descending) exponent list.
    std::map<long long, std::vector<long long>> per_prime;
    for (long long f : cyclic_factors) {
        for (auto& [p, es] : prime_power_split(f)) {
            for (long long e : es) per_prime[p].push_back(e);
        }
    }
    size_t r = 0;
    for (auto& [p, es] : per_prime) {
        std::sort(es.begin(), es.end(), std::greater<>());
        r = std::max(r, es.size());
    }
    // Invariant factor j from the top: product over primes of p^(j-th largest exponent).
    std::vector<long long> chain;
    for (size_t j = 0; j < r; ++j) {
        long long f = 1;
        for (auto& [p, es] : per_prime) {
            if (j < es.size()) f *= ipow_ll(p, es[j]);
        }
        chain.push_back(f);
    }
    std::reverse(chain.begin(), chain.end()); // ascending: n_1 | ... | n_r
    factors_ = std::move(chain);
    order_ = 1;
    for (long long f : factors_) order_ *= static_cast<long>(f);
    for (size_t i = 0; i + 1 < factors_.size(); ++i) {
        if (factors_[i + 1] % factors_[i] != 0)
            throw DomainError("internal: normalization did not yield a divisibility chain");
    }
}

long long AbelianGroup::order_ll() const {
    if (!order_.fits_slong_p()) throw DomainError("group order exceeds machine range");
    return order_.get_si();
}

bool AbelianGroup::is_homocyclic() const {
    for (long long f : factors_)
        if (f != factors_.front()) return false;
    return true;
}

std::string AbelianGroup::to_spec() const {
    if (factors_.empty()) return "1";
    std::string out;
    size_t i = 0;
    while (i < factors_.size()) {
        size_t j = i;
        while (j < factors_.size() && factors_[j] == factors_[i]) ++j;
        if (!out.empty()) out += "x";
        out += std::to_string(factors_[i]);
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

std::vector<long long> AbelianGroup::coords_of(uint32_t index) const {
    std::vector<long long> c(factors_.size(), 0);
    long long rem = index;
    for (size_t i = factors_.size(); i-- > 0;) {
        c[i] = rem % factors_[i];
        rem /= factors_[i];
    }
    if (rem != 0) throw DomainError("element index out of range");
    return c;
}

uint32_t AbelianGroup::index_of(const std::vector<long long>& coords) const {
    if (coords.size() != factors_.size())
        throw DomainError("coordinate count does not match group rank");
    long long idx = 0;
    for (size_t i = 0; i < factors_.size(); ++i) {
        long long c = coords[i] % factors_[i];
        if (c < 0) c += factors_[i];
        idx = idx * factors_[i] + c;
    }
    return static_cast<uint32_t>(idx);
}

AbelianGroup parse_group(const std::string& spec) {
    if (spec.empty()) throw ParseError("empty group spec");
    std::vector<long long> factors;
    size_t pos = 0;
    auto read_int = [&](const char* what) -> long long {
        size_t start = pos;
        while (pos < spec.size() && std::isdigit(static_cast<unsigned char>(spec[pos]))) ++pos;
        if (pos == start) throw ParseError(std::string("expected ") + what + " in group spec at position " + std::to_string(start));
        if (pos - start > 18) throw ParseError("integer too large in group spec");
        return std::stoll(spec.substr(start, pos - start));
    };
    while (true) {
        long long base = read_int("factor");
        long long count = 1;
        if (pos < spec.size() && spec[pos] == '^') {
            ++pos;
            count = read_int("exponent");
            if (count < 1) throw ParseError("factor multiplicity must be >= 1");
        }
        if (base < 2) throw ParseError("cyclic factors must be >= 2");
        if (count > 64) throw ParseError("factor multiplicity too large");
        for (long long i = 0; i < count; ++i) factors.push_back(base);
        if (pos == spec.size()) break;
        if (spec[pos] != 'x') throw ParseError("unexpected character in group spec at position " + std::to_string(pos));
        ++pos;
    }
    if (factors.size() > 64) throw ParseError("too many cyclic factors");
    try {
        return AbelianGroup(std::move(factors));
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

uint16_t GroupOps::smul(long long c, uint16_t a) const {
    auto coords = group.coords_of(a);
    const auto& fs = group.invariant_factors();
    for (size_t i = 0; i < coords.size(); ++i) {
        coords[i] = (coords[i] % fs[i]) * (c % fs[i]) % fs[i];
        if (coords[i] < 0) coords[i] += fs[i];
    }
    return static_cast<uint16_t>(group.index_of(coords));
}

std::shared_ptr<const GroupOps> make_group_ops(const AbelianGroup& g) {
    mpz_class cap = kMaxEnumerableOrder;
    if (g.order() > cap)
        throw DomainError("element-level operations require group order <= " +
                          std::to_string(kMaxEnumerableOrder) + " (got " + g.order().get_str() + ")");
    auto ops = std::make_shared<GroupOps>();
    ops->group = g;
    ops->order = static_cast<uint32_t>(g.order_ll());
    const auto& fs = g.invariant_factors();
    const size_t r = fs.size();
    const uint32_t n = ops->order;

    std::vector<std::vector<long long>> coords(n);
    for (uint32_t e = 0; e < n; ++e) coords[e] = g.coords_of(e);

    ops->add.resize(size_t(n) * n);
    ops->neg.resize(n);
    ops->elem_ord.resize(n);
    std::vector<long long> tmp(r);
    for (uint32_t a = 0; a < n; ++a) {
        for (uint32_t b = 0; b < n; ++b) {
            for (size_t i = 0; i < r; ++i) {
                tmp[i] = coords[a][i] + coords[b][i];
                if (tmp[i] >= fs[i]) tmp[i] -= fs[i];
            }
            ops->add[size_t(a) * n + b] = static_cast<uint16_t>(g.index_of(tmp));
        }
        for (size_t i = 0; i < r; ++i) tmp[i] = (fs[i] - coords[a][i]) % fs[i];
        ops->neg[a] = static_cast<uint16_t>(g.index_of(tmp));
        long long o = 1;
        for (size_t i = 0; i < r; ++i) {
            long long ci = coords[a][i];
            long long oi = fs[i] / std::gcd(fs[i], ci == 0 ? fs[i] : ci);
            o = std::lcm(o, oi);
        }
        ops->elem_ord[a] = o;
    }
    return ops;
}

bool ZSequence::squarefree() const {
    for (auto& [e, m] : mult_)
        if (m != 1) return false;
    return true;
}

uint32_t ZSequence::multiplicity(uint32_t elem) const {
    auto it = mult_.find(elem);
    return it == mult_.end() ? 0 : it->second;
}

void ZSequence::add(uint32_t elem, uint32_t count) {
    if (count == 0) return;
    mpz_class cap = elem;
    if (cap >= group_.order()) throw DomainError("element index out of range for group");
    mult_[elem] += count;
    length_ += count;
}

void ZSequence::remove(uint32_t elem, uint32_t count) {
    auto it = mult_.find(elem);
    if (it == mult_.end() || it->second < count)
        throw DomainError("removing more copies than present");
    it->second -= count;
    length_ -= count;
    if (it->second == 0) mult_.erase(it);
}

std::vector<uint16_t> ZSequence::expanded() const {
    std::vector<uint16_t> out;
    out.reserve(static_cast<size_t>(length_));
    for (auto& [e, m] : mult_)
        for (uint32_t i = 0; i < m; ++i) out.push_back(static_cast<uint16_t>(e));
    return out;
}

std::vector<uint16_t> ZSequence::support() const {
    std::vector<uint16_t> out;
    out.reserve(mult_.size());
    for (auto& [e, m] : mult_) out.push_back(static_cast<uint16_t>(e));
    return out;
}

uint32_t ZSequence::sum_index() const {
    const auto& fs = group_.invariant_factors();
    std::vector<long long> acc(fs.size(), 0);
    for (auto& [e, m] : mult_) {
        auto c = group_.coords_of(e);
        for (size_t i = 0; i < fs.size(); ++i)
            acc[i] = (acc[i] + c[i] * (m % fs[i])) % fs[i];
    }
    return group_.index_of(acc);
}

ZSequence make_sequence(const AbelianGroup& g, const std::vector<uint32_t>& elems) {
    ZSequence s(g);
    for (uint32_t e : elems) s.add(e);
    return s;
}

} // namespace zslab
