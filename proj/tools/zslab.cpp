#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "zslab/bounds.hpp"
#include "zslab/error.hpp"
#include "zslab/group.hpp"
#include "zslab/json_io.hpp"
#include "zslab/monomial.hpp"
#include "zslab/petrov.hpp"
#include "zslab/property_d.hpp"
#include "zslab/search.hpp"
#include "zslab/tables.hpp"

namespace {

using namespace zslab;

long long env_nodes_or(long long fallback) {
    if (const char* env = std::getenv("ZSLAB_BUDGET_NODES")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return fallback;
}

std::string coords_str(const AbelianGroup& A, uint16_t index) {
    std::string out = "(";
    auto cs = A.coords_of(index);
    for (size_t i = 0; i < cs.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(cs[i]);
    }
    return out + ")";
}

std::string witness_str(const ZSequence& S) {
    std::string out;
    auto elems = S.expanded();
    size_t shown = std::min<size_t>(elems.size(), 64);
    for (size_t i = 0; i < shown; ++i) {
        if (i) out += " ";
        out += coords_str(S.group(), elems[i]);
    }
    if (shown < elems.size()) out += " ...";
    return out;
}

struct ExactOpts {
    std::string group;
    long long nodes = 0;
    double seconds = 60.0;
    int threads = 1;
    long long seed = 0;
    bool json = false;
    bool tsv = false;
};

void add_budget_flags(CLI::App* cmd, ExactOpts& o) {
    cmd->add_option("--budget-nodes", o.nodes, "search node budget");
    cmd->add_option("--budget-seconds", o.seconds, "wall clock budget in seconds");
    cmd->add_option("--threads", o.threads, "parallel branch workers (results identical)");
    cmd->add_option("--seed", o.seed, "reserved; accepted for interface stability");
}

SearchBudget budget_of(const ExactOpts& o) {
    SearchBudget b;
    b.max_nodes = o.nodes;
    b.max_seconds = o.seconds;
    b.parallel_width = o.threads;
    return b;
}

int run_exact(const std::string& quantity, const ExactOpts& o) {
    AbelianGroup A = parse_group(o.group);
    ExactResult r = quantity == "s" ? exact_s(A, budget_of(o)) : exact_g(A, budget_of(o));
    if (o.json) {
        std::cout << exact_result_json(A, quantity, r).dump(2) << "\n";
    } else if (o.tsv) {
        std::cout << "group\tquantity\tvalue\tstatus\tnodes\n"
                  << A.to_spec() << '\t' << quantity << '\t' << *r.value << '\t'
                  << to_string(r.status) << '\t' << r.nodes_explored << "\n";
    } else {
        const char* rel = r.status == SearchStatus::LOWER_BOUND_ONLY ? ">=" : "=";
        std::cout << quantity << "(" << A.to_spec() << ") " << rel << " " << *r.value
                  << " (" << to_string(r.status) << ")\n";
        if (r.witness && r.witness->length() > 0)
            std::cout << "witness, length " << r.witness->length() << ": "
                      << witness_str(*r.witness) << "\n";
        std::cout << "nodes explored: " << r.nodes_explored << "\n";
    }
    return (r.status == SearchStatus::EXACT || r.status == SearchStatus::VACUOUS) ? 0 : 2;
}

int run_propd(const ExactOpts& o) {
    AbelianGroup A = parse_group(o.group);
    PropertyDReport rep = check_property_d(A, budget_of(o));
    if (o.json) {
        std::cout << property_d_json(rep).dump(2) << "\n";
    } else if (o.tsv) {
        std::cout << "group\tstatus\ts\textremal_orbits\traw_count\tnodes\n"
                  << A.to_spec() << '\t' << to_string(rep.status) << '\t'
                  << (rep.s_value ? std::to_string(*rep.s_value) : std::string("-")) << '\t'
                  << rep.extremal_orbits_checked << '\t' << rep.extremal_raw_count.get_str()
                  << '\t' << rep.nodes_explored << "\n";
    } else {
        std::cout << "extremal multiplicity-divisibility on " << A.to_spec() << ": "
                  << to_string(rep.status) << "\n";
        if (rep.s_value)
            std::cout << "s = " << *rep.s_value << ", extremal orbits: "
                      << rep.extremal_orbits_checked << ", sequences: "
                      << rep.extremal_raw_count.get_str() << "\n";
        if (rep.counterexample)
            std::cout << "counterexample: " << witness_str(*rep.counterexample) << "\n";
        std::cout << "nodes explored: " << rep.nodes_explored << "\n";
    }
    return rep.status == PropertyDStatus::UNKNOWN ? 2 : 0;
}

struct DimOpts {
    long long n = 0, D = 0, k = 0;
    bool json = false, tsv = false;
};

int run_dim(const DimOpts& o) {
    mpz_class d = dim_exact(o.n, o.D, o.k);
    if (o.json) {
        Json j;
        j["n"] = o.n;
        j["D"] = o.D;
        j["k"] = o.k;
        j["dim"] = d.get_str();
        std::cout << j.dump(2) << "\n";
    } else if (o.tsv) {
        std::cout << "n\tD\tk\tdim\n"
                  << o.n << '\t' << o.D << '\t' << o.k << '\t' << d.get_str() << "\n";
    } else {
        std::cout << "dim(n=" << o.n << ", D=" << o.D << ", k=" << o.k
                  << ") = " << d.get_str() << "\n";
    }
    return 0;
}

struct PetrovOpts {
    long long p = 0, n = 0;
    std::vector<long long> coeffs;
    std::string verify_file;
    bool search = false;
    ExactOpts budget;
    bool json = false, tsv = false;
};

int run_petrov(const PetrovOpts& o) {
    PetrovInstance inst(o.p, o.n, o.coeffs);
    if (!o.verify_file.empty()) {
        std::ifstream in(o.verify_file);
        if (!in) throw ParseError("cannot open " + o.verify_file);
        Json j = Json::parse(in, nullptr, true);
        std::vector<uint16_t> F = set_from_json(inst.group(), j);
        PetrovVerifyResult r = petrov_verify(inst, F);
        if (o.json) {
            Json out;
            out["p"] = o.p;
            out["n"] = o.n;
            out["coeffs"] = o.coeffs;
            out["set_size"] = F.size();
            out["property_holds"] = r.property_holds;
            if (r.violating_tuple) {
                Json tup = Json::array();
                for (uint16_t b : *r.violating_tuple) {
                    Json cs = Json::array();
                    for (long long c : inst.group().coords_of(b)) cs.push_back(c);
                    tup.push_back(cs);
                }
                out["violating_tuple"] = tup;
            } else {
                out["violating_tuple"] = nullptr;
            }
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "property " << (r.property_holds ? "holds" : "violated")
                      << " for the given set (|F| = " << F.size() << ")\n";
            if (r.violating_tuple) {
                std::cout << "violating tuple:";
                for (uint16_t b : *r.violating_tuple)
                    std::cout << " " << coords_str(inst.group(), b);
                std::cout << "\n";
            }
        }
        return 0;
    }
    // search mode
    ExactResult r = petrov_max_search(inst, budget_of(o.budget));
    BoundResult bd = petrov_cardinality_bound(inst, PetrovBoundRoute::EXACT_DIM);
    BoundResult bc = petrov_cardinality_bound(inst, PetrovBoundRoute::CLOSED_FORM);
    if (o.json) {
        Json j;
        j["p"] = o.p;
        j["n"] = o.n;
        j["coeffs"] = o.coeffs;
        j["value"] = *r.value;
        j["status"] = to_string(r.status);
        j["witness"] = r.witness ? sequence_json(*r.witness) : Json(nullptr);
        j["nodes"] = r.nodes_explored;
        j["bound_dim"] = bound_result_json(bd);
        j["bound_closed"] = bound_result_json(bc);
        std::cout << j.dump(2) << "\n";
    } else if (o.tsv) {
        std::cout << "p\tn\tm\tvalue\tstatus\tnodes\tdim_bound\tclosed_bound\n"
                  << o.p << '\t' << o.n << '\t' << inst.m() << '\t' << *r.value << '\t'
                  << to_string(r.status) << '\t' << r.nodes_explored << '\t'
                  << bd.value_int.get_str() << '\t' << bc.value_int.get_str() << "\n";
    } else {
        const char* rel = r.status == SearchStatus::LOWER_BOUND_ONLY ? ">=" : "=";
        std::cout << "max |F| " << rel << " " << *r.value << " (" << to_string(r.status)
                  << "), nodes " << r.nodes_explored << "\n";
        if (r.witness && r.witness->length() > 0)
            std::cout << "witness: " << witness_str(*r.witness) << "\n";
        std::cout << "cardinality bounds: " << bd.value_int.get_str() << " (dimension), "
                  << bc.value_int.get_str() << " (closed form)\n";
    }
    return r.status == SearchStatus::EXACT ? 0 : 2;
}

struct BoundOpts {
    std::string group;
    bool assume_propd = false;
    bool json = false, tsv = false;
};

int run_bound(const BoundOpts& o) {
    AbelianGroup A = parse_group(o.group);
    PropDRegistry reg;
    reg.set_assume_all(o.assume_propd);
    BestBounds bb = best_bounds(A, reg);
    if (o.json) {
        Json j = best_bounds_json(A, bb);
        j["assume_propd"] = o.assume_propd;
        std::cout << j.dump(2) << "\n";
    } else if (o.tsv) {
        std::cout << "group\tlower\tupper\tconditional_upper\texact\n"
                  << A.to_spec() << '\t' << bb.lower.value_int.get_str() << '\t'
                  << bb.upper.value_int.get_str() << '\t'
                  << (bb.conditional_upper ? bb.conditional_upper->value_int.get_str()
                                           : std::string("-"))
                  << '\t'
                  << (bb.exact ? bb.exact->value_int.get_str() : std::string("-")) << "\n";
    } else {
        std::cout << "bounds for " << A.to_spec() << ":\n";
        if (bb.exact)
            std::cout << "  exact " << bb.exact->value_int.get_str() << " ["
                      << bb.exact->provenance.back().id << "]\n";
        std::cout << "  lower " << bb.lower.value_int.get_str() << " ["
                  << bb.lower.provenance.back().id << "]\n";
        std::cout << "  upper " << bb.upper.value_int.get_str() << " ["
                  << bb.upper.provenance.back().id << "]\n";
        if (bb.conditional_upper) {
            std::cout << "  conditional upper "
                      << bb.conditional_upper->value_int.get_str() << " assuming";
            for (const auto& a : bb.conditional_upper->conditional_on)
                std::cout << " " << a.render();
            std::cout << "\n";
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"zero-sum constants, extremal structure, and certified bounds "
                 "over finite abelian groups"};
    app.require_subcommand(1);
    long long default_nodes = env_nodes_or(10000000);

    ExactOpts s_opts, g_opts, propd_opts;
    s_opts.nodes = g_opts.nodes = propd_opts.nodes = default_nodes;
    propd_opts.seconds = 600.0;

    CLI::App* cmd_s = app.add_subcommand("s", "exact zero-sum constant s(A)");
    cmd_s->add_option("--group", s_opts.group, "group, e.g. 3^2 or 2x4")->required();
    add_budget_flags(cmd_s, s_opts);
    cmd_s->add_flag("--json", s_opts.json, "JSON output");
    cmd_s->add_flag("--tsv", s_opts.tsv, "TSV output");

    CLI::App* cmd_g = app.add_subcommand("g", "squarefree analogue g(A)");
    cmd_g->add_option("--group", g_opts.group, "group, e.g. 3^2")->required();
    add_budget_flags(cmd_g, g_opts);
    cmd_g->add_flag("--json", g_opts.json, "JSON output");
    cmd_g->add_flag("--tsv", g_opts.tsv, "TSV output");

    CLI::App* cmd_propd =
        app.add_subcommand("propd", "extremal multiplicity-divisibility check");
    cmd_propd->add_option("--group", propd_opts.group, "homocyclic group, e.g. 2^4")
        ->required();
    add_budget_flags(cmd_propd, propd_opts);
    cmd_propd->add_flag("--json", propd_opts.json, "JSON output");
    cmd_propd->add_flag("--tsv", propd_opts.tsv, "TSV output");

    DimOpts dim_opts;
    CLI::App* cmd_dim = app.add_subcommand("dim", "exact bounded-degree monomial count");
    cmd_dim->add_option("-n", dim_opts.n, "variables")->required();
    cmd_dim->add_option("-D", dim_opts.D, "exponent cap (exponents in [0,D))")->required();
    cmd_dim->add_option("-k", dim_opts.k, "total degree threshold")->required();
    cmd_dim->add_flag("--json", dim_opts.json, "JSON output");
    cmd_dim->add_flag("--tsv", dim_opts.tsv, "TSV output");

    PetrovOpts pet_opts;
    pet_opts.budget.nodes = default_nodes;
    CLI::App* cmd_pet = app.add_subcommand(
        "petrov", "coefficient-pattern sets: verify a set or search the maximum");
    cmd_pet->add_option("-p", pet_opts.p, "prime modulus")->required();
    cmd_pet->add_option("-n", pet_opts.n, "rank of (Z_p)^n")->required();
    cmd_pet->add_option("--coeffs", pet_opts.coeffs, "coefficients a_1,...,a_m")
        ->required()
        ->delimiter(',');
    cmd_pet->add_option("--verify", pet_opts.verify_file,
                        "JSON file with the set to verify");
    cmd_pet->add_flag("--search", pet_opts.search, "search for the maximum set size");
    add_budget_flags(cmd_pet, pet_opts.budget);
    cmd_pet->add_flag("--json", pet_opts.json, "JSON output");
    cmd_pet->add_flag("--tsv", pet_opts.tsv, "TSV output");

    BoundOpts bound_opts;
    CLI::App* cmd_bound = app.add_subcommand("bound", "certified bound interval for s(A)");
    cmd_bound->add_option("--group", bound_opts.group, "group")->required();
    cmd_bound->add_flag("--assume-propd", bound_opts.assume_propd,
                        "treat every divisibility hypothesis as available");
    cmd_bound->add_flag("--json", bound_opts.json, "JSON output");
    cmd_bound->add_flag("--tsv", bound_opts.tsv, "TSV output");

    std::string table_name;
    long long table_nodes = -1;
    CLI::App* cmd_table = app.add_subcommand("table", "reference tables (TSV)");
    cmd_table
        ->add_option("name", table_name,
                     "egz-small | dim-vs-bound | petrov-caps | propd-survey")
        ->required();
    cmd_table->add_option("--budget-nodes", table_nodes, "search node budget per row");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(cmd_s)) return run_exact("s", s_opts);
        if (app.got_subcommand(cmd_g)) return run_exact("g", g_opts);
        if (app.got_subcommand(cmd_propd)) return run_propd(propd_opts);
        if (app.got_subcommand(cmd_dim)) return run_dim(dim_opts);
        if (app.got_subcommand(cmd_pet)) {
            if (pet_opts.verify_file.empty() && !pet_opts.search)
                throw ParseError("petrov needs --verify FILE or --search");
            return run_petrov(pet_opts);
        }
        if (app.got_subcommand(cmd_bound)) return run_bound(bound_opts);
        if (app.got_subcommand(cmd_table)) {
            if (table_name == "egz-small")
                return table_egz_small(std::cout, table_nodes > 0 ? table_nodes
                                                                  : env_nodes_or(20000));
            if (table_name == "dim-vs-bound") return table_dim_vs_bound(std::cout);
            if (table_name == "petrov-caps")
                return table_petrov_caps(std::cout, table_nodes > 0 ? table_nodes
                                                                    : env_nodes_or(200000));
            if (table_name == "propd-survey")
                return table_propd_survey(std::cout, table_nodes > 0
                                                         ? table_nodes
                                                         : env_nodes_or(10000000));
            throw ParseError("unknown table: " + table_name);
        }
        return 1;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 1;
    } catch (const MissingBound& e) {
        std::cerr << "missing bound: " << e.what() << "\n";
        return 1;
    } catch (const KindError& e) {
        std::cerr << "kind error: " << e.what() << "\n";
        return 1;
    } catch (const Json::parse_error& e) {
        std::cerr << "json error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
