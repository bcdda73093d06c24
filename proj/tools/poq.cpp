// poq: command-line surface over the poset/quotient library. Subcommands
// read and write the JSON wire formats documented in the README; exit code
// 0 on success, 1 on input or validation errors, 2 when an internal
// cross-check or an implication of the verification experiment fails.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "poq/congruence.hpp"
#include "poq/enumerate.hpp"
#include "poq/experiment.hpp"
#include "poq/families.hpp"
#include "poq/invariants.hpp"
#include "poq/json_io.hpp"
#include "poq/lattice.hpp"
#include "poq/quotient.hpp"

namespace {

using poq::Json;

Json read_json_file(const std::string& path) {
    std::istream* in = &std::cin;
    std::ifstream file;
    if (path != "-") {
        file.open(path);
        if (!file) poq::fail(poq::ErrorKind::BadIndex, "cannot open " + path);
        in = &file;
    }
    return Json::parse(*in);
}

void write_output(const Json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream f(out_path);
        if (!f) poq::fail(poq::ErrorKind::BadIndex, "cannot open " + out_path);
        f << j.dump(2) << "\n";
    }
}

Json witness_to_json(const poq::Witness& w) {
    Json j;
    j["kind"] = w.kind;
    j["elements"] = w.elements;
    j["explanation"] = w.explanation;
    return j;
}

Json verdict_to_json(const poq::Verdict& v) {
    Json j;
    if (!v.applicable) {
        j["holds"] = nullptr;
        j["not_applicable_reason"] = v.not_applicable_reason;
        return j;
    }
    j["holds"] = v.holds;
    if (v.witness) j["witness"] = witness_to_json(*v.witness);
    return j;
}

Json report_to_json(const poq::CongruenceReport& r) {
    Json j;
    for (poq::Kind k : poq::kAllKinds) j[poq::kind_name(k)] = verdict_to_json(r[k]);
    return j;
}

Json quotient_result_to_json(const poq::QuotientResult& q) {
    Json j;
    j["quotient"] = poq::poset_to_json(q.quotient);
    j["class_map"] = q.class_map;
    j["needed_transitive_closure"] = q.needed_transitive_closure;
    j["needed_collapse"] = q.needed_collapse;
    return j;
}

Json completion_to_json(const poq::Completion& c) {
    Json j;
    j["poset"] = poq::poset_to_json(c.lattice);
    j["embed"] = c.embed;
    Json sets = Json::array();
    for (const auto& s : c.closed_sets) sets.push_back(s.members());
    j["closed_sets"] = std::move(sets);
    return j;
}

std::string dot_format(const poq::Poset& p) {
    std::ostringstream os;
    os << "digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n";
    for (int i = 0; i < p.n; ++i) os << "  n" << i << " [label=\"" << p.labels[i] << "\"];\n";
    for (auto [a, b] : poq::covers(p)) os << "  n" << a << " -> n" << b << ";\n";
    os << "}\n";
    return os.str();
}

struct GenerateResult {
    poq::Poset poset;
    std::optional<poq::Partition> partition;
};

GenerateResult run_generate(const std::string& family, const std::vector<int>& params,
                            const std::string& orientation, const std::vector<int>& cosets_j,
                            const std::vector<int>& cosets_k) {
    namespace fam = poq::families;
    auto need = [&](size_t k) {
        if (params.size() != k)
            poq::fail(poq::ErrorKind::BadIndex, family + " needs " + std::to_string(k) + " parameter(s)");
    };
    GenerateResult g;
    if (family == "chain") {
        need(1);
        g.poset = fam::chain(params[0]);
    } else if (family == "antichain") {
        need(1);
        g.poset = fam::antichain(params[0]);
    } else if (family == "boolean") {
        need(1);
        g.poset = fam::boolean_lattice(params[0]);
    } else if (family == "young") {
        need(2);
        g.poset = fam::young_lattice(params[0], params[1]);
    } else if (family == "weak-a") {
        need(1);
        g.poset = fam::weak_bruhat_A(params[0]);
    } else if (family == "weak-b") {
        need(1);
        g.poset = fam::weak_bruhat_B(params[0]);
    } else if (family == "strong-a") {
        need(1);
        g.poset = fam::strong_bruhat_A(params[0]);
    } else if (family == "tamari") {
        need(1);
        g.poset = fam::tamari(params[0]);
    } else if (family == "graph") {
        need(1);
        auto [q, orbits] = fam::graph_poset(params[0]);
        g.poset = q;
        g.partition = orbits;  // orbit partition on the source boolean lattice
    } else if (family == "cambrian") {
        need(1);
        int n = params[0];
        std::vector<bool> dirs;
        std::string o = orientation.empty() ? std::string(std::max(0, n - 2), 'a') : orientation;
        for (char c : o) dirs.push_back(c == 'a');
        g.poset = fam::weak_bruhat_A(n);
        g.partition = fam::cambrian_partition(n, dirs);
    } else if (family == "simion") {
        need(1);
        g.poset = fam::weak_bruhat_B(params[0]);
        g.partition = fam::simion_partition(params[0]);
    } else if (family == "psi-kernel") {
        need(1);
        g.poset = fam::weak_bruhat_A(params[0]);
        g.partition = fam::psi_kernel(params[0]);
    } else if (family == "double-coset") {
        need(1);
        g.poset = fam::strong_bruhat_A(params[0]);
        g.partition = fam::double_coset_partition(params[0], cosets_j, cosets_k);
    } else {
        poq::fail(poq::ErrorKind::BadIndex, "unknown family: " + family);
    }
    return g;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite poset congruences, quotients, completions and invariants"};
    app.require_subcommand(1);

    std::string out_path;
    app.add_option("-o,--out", out_path, "write the main JSON output to this file");

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "run every congruence checker on (poset, partition)");
    std::string cls_poset, cls_part;
    classify_cmd->add_option("poset", cls_poset, "poset JSON file")->required();
    classify_cmd->add_option("partition", cls_part, "partition JSON file")->required();

    // quotient
    auto* quot_cmd = app.add_subcommand("quotient", "quotient poset (strict or closure mode)");
    std::string q_poset, q_part, q_mode = "closure";
    quot_cmd->add_option("poset", q_poset)->required();
    quot_cmd->add_option("partition", q_part)->required();
    quot_cmd->add_option("--mode", q_mode, "strict|closure")->check(CLI::IsMember({"strict", "closure"}));

    // universal-quotient
    auto* uq_cmd = app.add_subcommand("universal-quotient", "universal quotient of any equivalence relation");
    std::string uq_poset, uq_part;
    uq_cmd->add_option("poset", uq_poset)->required();
    uq_cmd->add_option("partition", uq_part)->required();

    // orbit
    auto* orbit_cmd = app.add_subcommand("orbit", "orbit partition of a permutation group and its quotient");
    std::string orb_poset, orb_group;
    orbit_cmd->add_option("poset", orb_poset)->required();
    orbit_cmd->add_option("group", orb_group, "JSON {\"degree\": n, \"generators\": [[...]]}")->required();

    // complete
    auto* complete_cmd = app.add_subcommand("complete", "Dedekind-MacNeille completion and the ideal-generated sublattice");
    std::string comp_poset;
    complete_cmd->add_option("poset", comp_poset)->required();

    // lattice-congruences
    auto* lc_cmd = app.add_subcommand("lattice-congruences", "enumerate all lattice congruences");
    std::string lc_poset;
    int lc_cap = poq::kLatticeCongruenceEnumCap;
    lc_cmd->add_option("poset", lc_poset)->required();
    lc_cmd->add_option("--cap", lc_cap, "size cap for enumeration");

    // invariants
    auto* inv_cmd = app.add_subcommand("invariants", "Moebius vector, characteristic polynomial, rank data, Peck report");
    std::string inv_poset;
    inv_cmd->add_option("poset", inv_poset)->required();

    // generate
    auto* gen_cmd = app.add_subcommand("generate", "emit a family poset (and its canonical partition)");
    std::string family, orientation, partition_out;
    std::vector<int> params, cosets_j, cosets_k;
    gen_cmd->add_option("family", family,
                        "chain|antichain|boolean|young|weak-a|weak-b|strong-a|tamari|graph|"
                        "cambrian|simion|psi-kernel|double-coset")
        ->required();
    gen_cmd->add_option("params", params, "integer parameters");
    gen_cmd->add_option("--orientation", orientation, "cambrian: one of a|d per diagram edge");
    gen_cmd->add_option("--coset-j", cosets_j, "double-coset: left generator indices (1-based)");
    gen_cmd->add_option("--coset-k", cosets_k, "double-coset: right generator indices (1-based)");
    gen_cmd->add_option("--partition-out", partition_out, "write the canonical partition JSON here");

    // verify-matrix
    auto* vm_cmd = app.add_subcommand("verify-matrix", "exhaustive implication-diagram experiment");
    int vm_n = 4;
    unsigned vm_seed = 0;
    vm_cmd->add_option("--n", vm_n, "maximum poset size (hard cap 5)");
    vm_cmd->add_option("--seed", vm_seed, "shuffles the counterexample search order only");

    // dot
    auto* dot_cmd = app.add_subcommand("dot", "emit the Hasse diagram in DOT format");
    std::string dot_poset;
    dot_cmd->add_option("poset", dot_poset)->required();

    // let -o after a subcommand reach the global option
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*classify_cmd) {
            poq::Poset p = poq::poset_from_json(read_json_file(cls_poset));
            poq::Partition t = poq::partition_from_json(read_json_file(cls_part), p.n);
            write_output(report_to_json(poq::classify(p, t)), out_path);
        } else if (*quot_cmd) {
            poq::Poset p = poq::poset_from_json(read_json_file(q_poset));
            poq::Partition t = poq::partition_from_json(read_json_file(q_part), p.n);
            auto mode = q_mode == "strict" ? poq::QuotientMode::Strict : poq::QuotientMode::Closure;
            write_output(quotient_result_to_json(poq::quotient_poset(p, t, mode)), out_path);
        } else if (*uq_cmd) {
            poq::Poset p = poq::poset_from_json(read_json_file(uq_poset));
            poq::Partition t = poq::partition_from_json(read_json_file(uq_part), p.n);
            write_output(quotient_result_to_json(poq::universal_quotient(p, t)), out_path);
        } else if (*orbit_cmd) {
            poq::Poset p = poq::poset_from_json(read_json_file(orb_poset));
            Json gj = read_json_file(orb_group);
            poq::PermutationGroup g;
            g.degree = gj.at("degree").get<int>();
            for (const auto& e : gj.at("generators")) g.generators.push_back(e.get<std::vector<int>>());
            poq::Partition t = poq::orbit_partition(p, g);
            auto q = poq::quotient_poset(p, t, poq::QuotientMode::Strict);
            Json j;
            j["partition"] = poq::partition_to_json(t);
            j["quotient"] = poq::poset_to_json(q.quotient);
            j["class_map"] = q.class_map;
            write_output(j, out_path);
        } else if (*complete_cmd) {
            poq::Poset p = poq::poset_from_json(read_json_file(comp_poset));
            Json j;
            j["dm"] = completion_to_json(poq::dm_completion(p));
            j["m0"] = completion_to_json(poq::m0_sublattice(p));
            write_output(j, out_path);
        } else if (*lc_cmd) {
            poq::Poset p = poq::poset_from_json(read_json_file(lc_poset));
            auto con = poq::enumerate_lattice_congruences(p, lc_cap);
            Json j;
            j["count"] = con.congruences.size();
            Json list = Json::array();
            for (const auto& t : con.congruences) list.push_back(poq::partition_to_json(t));
            j["congruences"] = std::move(list);
            write_output(j, out_path);
        } else if (*inv_cmd) {
            poq::Poset p = poq::poset_from_json(read_json_file(inv_poset));
            Json j;
            j["n"] = p.n;
            auto sp = poq::structural_predicates(p);
            Json sj;
            sj["is_lattice"] = sp.is_lattice;
            sj["is_directed"] = sp.is_directed;
            sj["is_connected"] = sp.is_connected;
            sj["is_total"] = sp.is_total;
            sj["has_min"] = sp.has_min;
            sj["has_max"] = sp.has_max;
            j["structural"] = std::move(sj);
            auto g = poq::grading(p);
            j["graded"] = g.is_graded;
            j["rank_sizes"] = g.is_graded ? Json(g.rank_sizes) : Json();
            if (poq::minimum(p) != -1) {
                j["mobius"] = poq::mobius(p);
                j["char_poly"] = g.is_graded ? Json(poq::char_poly(p).coefficients) : Json();
            } else {
                j["mobius"] = nullptr;
                j["char_poly"] = nullptr;
            }
            auto comps = poq::components(p);
            bool connected = p.n == 0 || *std::max_element(comps.begin(), comps.end()) == 0;
            if (g.is_graded && connected) {
                auto pr = poq::peck_report(p);
                Json pj;
                pj["rank_symmetric"] = pr.rank_symmetric;
                pj["rank_unimodal"] = pr.rank_unimodal;
                pj["strongly_sperner"] = pr.strongly_sperner;
                pj["is_peck"] = pr.is_peck;
                pj["unitary_certificate"] =
                    pr.unitary_certificate ? Json(*pr.unitary_certificate) : Json();
                j["peck"] = std::move(pj);
            } else {
                j["peck"] = nullptr;
            }
            write_output(j, out_path);
        } else if (*gen_cmd) {
            auto g = run_generate(family, params, orientation, cosets_j, cosets_k);
            if (g.partition && !partition_out.empty()) {
                std::ofstream f(partition_out);
                if (!f) poq::fail(poq::ErrorKind::BadIndex, "cannot open " + partition_out);
                f << poq::partition_to_json(*g.partition).dump(2) << "\n";
            }
            write_output(poq::poset_to_json(g.poset), out_path);
        } else if (*vm_cmd) {
            auto r = poq::verify_matrix(vm_n, vm_seed);
            for (const auto& a : r.arrows_checked)
                std::cerr << "arrow " << a.from << " -> " << a.to
                          << (a.side_condition.empty() ? "" : " [" + a.side_condition + "]")
                          << ": " << a.violations << " violations / " << a.premise_cases
                          << " premise cases\n";
            int separated = 0;
            for (const auto& s : r.non_arrows) separated += s.counterexample_found;
            std::cerr << "non-arrows separated: " << separated << " / " << r.non_arrows.size()
                      << " (unseparated pairs are reported as not separated at this scale)\n";
            write_output(matrix_result_to_json(r), out_path);
            if (r.total_violations() > 0) return 2;
        } else if (*dot_cmd) {
            poq::Poset p = poq::poset_from_json(read_json_file(dot_poset));
            if (out_path.empty()) {
                std::cout << dot_format(p);
            } else {
                std::ofstream f(out_path);
                f << dot_format(p);
            }
        }
    } catch (const poq::Error& e) {
        std::cerr << "error [" << poq::error_kind_name(e.kind) << "]: " << e.what() << "\n";
        return e.kind == poq::ErrorKind::InternalCheckFailure ? 2 : 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "JSON error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
