#include "zslab/symmetry.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>

#include "zslab/error.hpp"

namespace zslab {
namespace {

bool is_prime_ll(long long v) {
    if (v < 2) return false;
    for (long long d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

// All u in [1, n) with gcd(u, n) = 1.
std::vector<long long> units_mod(long long n) {
    std::vector<long long> out;
    for (long long u = 1; u < n; ++u)
        if (std::gcd(u, n) == 1) out.push_back(u);
    if (n == 1) out.push_back(0); // the unique (zero) scalar on the trivial group
    return out;
}

// Number of invertible n x n matrices over Z_p, saturating above `cap`.
size_t gl_size_capped(long long p, int n, size_t cap) {
    mpz_class total = 1;
    mpz_class pn;
    mpz_ui_pow_ui(pn.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(n));
    mpz_class pi = 1;
    for (int i = 0; i < n; ++i) {
        total *= (pn - pi);
        pi *= static_cast<long>(p);
        if (total > static_cast<unsigned long>(cap) * 4) return cap + 1;
    }
    if (!total.fits_ulong_p()) return cap + 1;
    size_t s = total.get_ui();
    return s;
}

struct GlBuilder {
    const GroupOps& ops;
    long long p;
    int n;
    uint32_t order;
    std::vector<uint16_t> basis;              // e_1..e_n as element indices
    std::vector<char> in_span;                // current span indicator
    std::vector<uint16_t> span_elems;         // elements of current span, in insertion order
    std::vector<uint16_t> images;             // chosen images so far
    std::vector<std::vector<uint16_t>>* out;
    size_t cap;
    bool overflow = false;

    void run() {
        in_span.assign(order, 0);
        in_span[0] = 1;
        span_elems = {0};
        rec(0);
    }

    void rec(int depth) {
        if (overflow) return;
        if (depth == n) {
            emit();
            return;
        }
        size_t span_before = span_elems.size();
        for (uint32_t y = 1; y < order; ++y) {
            if (in_span[y]) continue;
            images.push_back(static_cast<uint16_t>(y));
            // Extend span by all c*y + s, c in [1, p).
            uint16_t cy = 0;
            for (long long c = 1; c < p; ++c) {
                cy = ops.add[static_cast<size_t>(cy) * order + y];
                for (size_t i = 0; i < span_before; ++i) {
                    uint16_t v = ops.add[static_cast<size_t>(span_elems[i]) * order + cy];
                    if (!in_span[v]) {
                        in_span[v] = 1;
                        span_elems.push_back(v);
                    }
                }
            }
            rec(depth + 1);
            while (span_elems.size() > span_before) {
                in_span[span_elems.back()] = 0;
                span_elems.pop_back();
            }
            images.pop_back();
            if (overflow) return;
        }
    }

    void emit() {
        if (out->size() >= cap) {
            overflow = true;
            return;
        }
        // perm[x] = sum_i c_i * images[i], with c_i the coordinates of x.
        // Precompute c*images[i] for c in [0, p).
        std::vector<std::vector<uint16_t>> mult(n, std::vector<uint16_t>(static_cast<size_t>(p), 0));
        for (int i = 0; i < n; ++i)
            for (long long c = 1; c < p; ++c)
                mult[i][static_cast<size_t>(c)] =
                    ops.add[static_cast<size_t>(mult[i][static_cast<size_t>(c - 1)]) * order + images[static_cast<size_t>(i)]];
        std::vector<uint16_t> perm(order);
        for (uint32_t x = 0; x < order; ++x) {
            auto coords = ops.group.coords_of(x);
            uint16_t v = 0;
            for (int i = 0; i < n; ++i)
                v = ops.add[static_cast<size_t>(v) * order + mult[static_cast<size_t>(i)][static_cast<size_t>(coords[static_cast<size_t>(i)])]];
            perm[x] = v;
        }
        out->push_back(std::move(perm));
    }
};

// Direct enumeration of Aut(G) by generator images for small non-elementary
// groups.  Generators are the standard coordinate generators e_i of order
// n_i; candidate images must have order exactly n_i, and after each choice
// the subgroup generated by the images so far must have full size
// n_1 * ... * n_j (necessary for injectivity on the standard subgroup, and
// sufficient for bijectivity once j = r).
struct AutBuilder {
    const GroupOps& ops;
    uint32_t order;
    std::vector<long long> facs;
    std::vector<uint16_t> gens;
    std::vector<uint16_t> images;
    std::vector<char> in_sub;
    std::vector<uint16_t> sub_elems;
    std::vector<std::vector<uint16_t>>* out;
    size_t cap;
    bool overflow = false;

    void run() {
        in_sub.assign(order, 0);
        in_sub[0] = 1;
        sub_elems = {0};
        rec(0, 1);
    }

    void rec(size_t depth, long long expected) {
        if (overflow) return;
        if (depth == facs.size()) {
            emit();
            return;
        }
        long long ni = facs[depth];
        long long new_expected = expected * ni;
        size_t sub_before = sub_elems.size();
        for (uint32_t y = 0; y < order; ++y) {
            if (ops.elem_ord[y] != ni) continue;
            // Close the subgroup under adding multiples of y.
            uint16_t cy = 0;
            for (long long c = 1; c < ni; ++c) {
                cy = ops.add[static_cast<size_t>(cy) * order + y];
                for (size_t i = 0; i < sub_before; ++i) {
                    uint16_t v = ops.add[static_cast<size_t>(sub_elems[i]) * order + cy];
                    if (!in_sub[v]) {
                        in_sub[v] = 1;
                        sub_elems.push_back(v);
                    }
                }
            }
            if (static_cast<long long>(sub_elems.size()) == new_expected) {
                images.push_back(static_cast<uint16_t>(y));
                rec(depth + 1, new_expected);
                images.pop_back();
            }
            while (sub_elems.size() > sub_before) {
                in_sub[sub_elems.back()] = 0;
                sub_elems.pop_back();
            }
            if (overflow) return;
        }
    }

    void emit() {
        if (out->size() >= cap) {
            overflow = true;
            return;
        }
        size_t r = facs.size();
        std::vector<std::vector<uint16_t>> mult(r);
        for (size_t i = 0; i < r; ++i) {
            mult[i].assign(static_cast<size_t>(facs[i]), 0);
            for (long long c = 1; c < facs[i]; ++c)
                mult[i][static_cast<size_t>(c)] =
                    ops.add[static_cast<size_t>(mult[i][static_cast<size_t>(c - 1)]) * order + images[i]];
        }
        std::vector<uint16_t> perm(order);
        for (uint32_t x = 0; x < order; ++x) {
            auto coords = ops.group.coords_of(x);
            uint16_t v = 0;
            for (size_t i = 0; i < r; ++i)
                v = ops.add[static_cast<size_t>(v) * order + mult[i][static_cast<size_t>(coords[i])]];
            perm[x] = v;
        }
        out->push_back(std::move(perm));
    }
};

std::vector<uint16_t> scalar_map(const GroupOps& ops, long long u) {
    uint32_t order = ops.order;
    std::vector<uint16_t> perm(order);
    for (uint32_t x = 0; x < order; ++x) perm[x] = ops.smul(u, static_cast<uint16_t>(x));
    return perm;
}

std::vector<std::vector<uint16_t>> invert_all(const std::vector<std::vector<uint16_t>>& auts,
                                              uint32_t order) {
    std::vector<std::vector<uint16_t>> inv(auts.size());
    for (size_t a = 0; a < auts.size(); ++a) {
        inv[a].assign(order, 0);
        for (uint32_t x = 0; x < order; ++x) inv[a][auts[a][x]] = static_cast<uint16_t>(x);
    }
    return inv;
}

} // namespace

SymmetryGroup build_symmetry_group(std::shared_ptr<const GroupOps> ops, size_t aut_cap) {
    SymmetryGroup sym;
    sym.ops = ops;
    const auto& facs = ops->group.invariant_factors();
    uint32_t order = ops->order;

    if (facs.empty()) {
        sym.auts = {{0}};
        sym.aut_inv = {{0}};
        return sym;
    }

    bool elementary_prime = is_prime_ll(facs[0]);
    for (long long f : facs)
        if (f != facs[0]) elementary_prime = false;

    if (elementary_prime) {
        long long p = facs[0];
        int n = static_cast<int>(facs.size());
        if (gl_size_capped(p, n, aut_cap) <= aut_cap) {
            GlBuilder b{*ops, p, n, order, {}, {}, {}, {}, &sym.auts, aut_cap};
            b.run();
            if (!b.overflow) {
                sym.aut_inv = invert_all(sym.auts, order);
                return sym;
            }
            sym.auts.clear();
        }
    } else if (order <= 64) {
        AutBuilder b{*ops, order, facs, {}, {}, {}, {}, &sym.auts, aut_cap};
        b.run();
        if (!b.overflow) {
            sym.aut_inv = invert_all(sym.auts, order);
            return sym;
        }
        sym.auts.clear();
    }

    // Weakened fallback: coordinate-wise unit multiplications if they fit,
    // else scalar unit multiplications.
    sym.weakened = true;
    size_t diag_count = 1;
    bool diag_fits = true;
    for (long long f : facs) {
        size_t phi = units_mod(f).size();
        if (diag_count > aut_cap / std::max<size_t>(phi, 1)) {
            diag_fits = false;
            break;
        }
        diag_count *= phi;
    }
    if (diag_fits && diag_count <= aut_cap) {
        std::vector<std::vector<long long>> unit_lists;
        unit_lists.reserve(facs.size());
        for (long long f : facs) unit_lists.push_back(units_mod(f));
        std::vector<size_t> idx(facs.size(), 0);
        size_t r = facs.size();
        while (true) {
            std::vector<uint16_t> perm(order);
            for (uint32_t x = 0; x < order; ++x) {
                auto coords = ops->group.coords_of(x);
                std::vector<long long> cc(r);
                for (size_t i = 0; i < r; ++i)
                    cc[i] = (coords[i] * unit_lists[i][idx[i]]) % facs[i];
                perm[x] = static_cast<uint16_t>(ops->group.index_of(cc));
            }
            sym.auts.push_back(std::move(perm));
            size_t i = r;
            while (i > 0) {
                --i;
                if (++idx[i] < unit_lists[i].size()) break;
                idx[i] = 0;
                if (i == 0) {
                    sym.aut_inv = invert_all(sym.auts, order);
                    return sym;
                }
            }
        }
    }
    for (long long u : units_mod(facs.back())) sym.auts.push_back(scalar_map(*ops, u));
    if (sym.auts.empty()) sym.auts.push_back(scalar_map(*ops, 1));
    sym.aut_inv = invert_all(sym.auts, order);
    return sym;
}

SymmetryGroup build_scalar_symmetry(std::shared_ptr<const GroupOps> ops) {
    SymmetryGroup sym;
    sym.ops = ops;
    uint32_t order = ops->order;
    if (order == 1) {
        sym.auts = {{0}};
        sym.aut_inv = {{0}};
        return sym;
    }
    for (long long u : units_mod(ops->group.exponent())) sym.auts.push_back(scalar_map(*ops, u));
    sym.weakened = true;
    sym.aut_inv = invert_all(sym.auts, order);
    return sym;
}

bool is_canonical_word(const SymmetryGroup& sym,
                       const std::vector<uint16_t>& M,
                       const std::vector<uint16_t>& supp,
                       long long* stab_out) {
    const GroupOps& ops = *sym.ops;
    uint32_t order = ops.order;
    if (supp.empty()) {
        if (stab_out) *stab_out = static_cast<long long>(sym.auts.size()) * order;
        return true;
    }
    // A word is written nondecreasing, so the least word in the orbit starts
    // with element 0; and among words starting with 0 the one with the larger
    // multiplicity of 0 is smaller.
    uint16_t m0 = M[0];
    if (m0 == 0) return false;
    for (uint16_t g : supp)
        if (M[g] > m0) return false;

    long long stab = 0;
    for (size_t a = 0; a < sym.auts.size(); ++a) {
        const uint16_t* ai = sym.aut_inv[a].data();
        for (uint16_t g : supp) {
            if (M[g] != m0) continue; // image word differs (is larger) at h = 0
            // Image multiplicities: M'[h] = M[ai[h] + g].
            uint32_t h = 1;
            for (; h < order; ++h) {
                uint16_t v = M[ops.add[static_cast<size_t>(ai[h]) * order + g]];
                if (v != M[h]) {
                    if (v > M[h]) return false;
                    break;
                }
            }
            if (h == order) ++stab;
        }
    }
    if (stab_out) *stab_out = stab;
    return true;
}

ZSequence canonical_form(const SymmetryGroup& sym, const ZSequence& S) {
    const GroupOps& ops = *sym.ops;
    uint32_t order = ops.order;
    if (S.length() == 0) return S;
    std::vector<uint32_t> M(order, 0);
    std::vector<uint16_t> supp;
    for (const auto& [e, m] : S.multiplicities()) {
        M[e] = m;
        supp.push_back(static_cast<uint16_t>(e));
    }
    std::vector<uint32_t> best;
    std::vector<uint32_t> cand(order);
    for (size_t a = 0; a < sym.auts.size(); ++a) {
        const uint16_t* ai = sym.aut_inv[a].data();
        for (uint16_t g : supp) {
            for (uint32_t h = 0; h < order; ++h)
                cand[h] = M[ops.add[static_cast<size_t>(ai[h]) * order + g]];
            if (best.empty()) {
                best = cand;
                continue;
            }
            // Smaller word: at the first differing element, larger multiplicity.
            for (uint32_t h = 0; h < order; ++h) {
                if (cand[h] != best[h]) {
                    if (cand[h] > best[h]) best = cand;
                    break;
                }
            }
        }
    }
    ZSequence out(S.group());
    for (uint32_t h = 0; h < order; ++h)
        if (best[h] > 0) out.add(h, best[h]);
    return out;
}

ZSequence canonical_form(const ZSequence& S) {
    auto ops = make_group_ops(S.group());
    SymmetryGroup sym = build_symmetry_group(ops);
    return canonical_form(sym, S);
}

ZSequence apply_symmetry(const SymmetryGroup& sym, const ZSequence& S,
                         size_t aut_index, uint16_t t) {
    const GroupOps& ops = *sym.ops;
    const auto& perm = sym.auts.at(aut_index);
    ZSequence out(S.group());
    for (const auto& [e, m] : S.multiplicities())
        out.add(ops.add[static_cast<size_t>(perm[e]) * ops.order + t], m);
    return out;
}

} // namespace zslab
