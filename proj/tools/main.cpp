#include "quandle/analysis.hpp"
#include "quandle/export.hpp"
#include "quandle/link_family.hpp"
#include "quandle/parser.hpp"
#include "quandle/verify.hpp"
#include "quandle/winker.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>

namespace {

using namespace quandle;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBudget = 2;
constexpr int kExitVerification = 3;

struct BudgetFlags {
    int max_elements = 0; // 0: use default / environment
    long long max_steps = 0;

    EnumerationBudget resolve() const {
        EnumerationBudget budget;
        if (const char* env = std::getenv("QUANDLE_MAX_ELEMENTS")) {
            try {
                budget.max_elements = std::stoi(env);
            } catch (const std::exception&) {
                // ignore unusable environment values
            }
        }
        if (max_elements > 0) budget.max_elements = max_elements;
        if (max_steps > 0) budget.max_steps = max_steps;
        return budget;
    }
};

void add_budget_flags(CLI::App* cmd, BudgetFlags& flags) {
    cmd->add_option("--max-elements", flags.max_elements,
                    "Abort enumeration beyond this many elements");
    cmd->add_option("--max-steps", flags.max_steps, "Abort enumeration beyond this many steps");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
    out << content;
}

std::string components_brackets(const std::vector<long long>& sizes) {
    std::string out = "[";
    for (size_t i = 0; i < sizes.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(sizes[i]);
    }
    out += "]";
    return out;
}

std::string components_bars(const std::vector<long long>& sizes) {
    std::string out;
    for (size_t i = 0; i < sizes.size(); ++i) {
        if (i > 0) out += "|";
        out += std::to_string(sizes[i]);
    }
    return out;
}

struct ExportFlags {
    std::string json_path;
    std::string dot_path;
};

void add_export_flags(CLI::App* cmd, ExportFlags& flags) {
    cmd->add_option("--json", flags.json_path, "Write the enumerated table as JSON");
    cmd->add_option("--dot", flags.dot_path, "Write the Cayley graph in DOT format");
}

int report_enumeration(const Presentation& p, const EnumerationResult& res,
                       const ExportFlags& exports) {
    if (!res.finite()) {
        std::cerr << "budget exceeded: elements=" << res.elements_reached
                  << " steps=" << res.steps_used << "\n";
        return kExitBudget;
    }
    const CayleyTable& t = *res.table;
    std::cout << "size=" << t.size() << " components=" << components_brackets(components(t).sizes)
              << "\n";
    if (!exports.json_path.empty()) {
        write_file(exports.json_path, table_to_json(t, p.generators));
    }
    if (!exports.dot_path.empty()) {
        write_file(exports.dot_path, table_to_dot(t, p.generators));
    }
    return kExitOk;
}

int cmd_enumerate(const std::string& path, const BudgetFlags& budget, const ExportFlags& exports) {
    const Presentation p = parse_presentation(read_file(path));
    return report_enumeration(p, enumerate(p, budget.resolve()), exports);
}

int cmd_pd(const std::string& code, const BudgetFlags& budget, const ExportFlags& exports) {
    const Presentation p = wirtinger_presentation(parse_pd(code));
    return report_enumeration(p, enumerate(p, budget.resolve()), exports);
}

int cmd_family(int k, int p, int q, bool raw, bool reduced, bool verify,
               const BudgetFlags& budget, const ExportFlags& exports) {
    const FamilyParams fp = normalize_params(k, p, q);
    if (fp.k == 0) {
        std::cerr << "warning: k = 0 after normalization sits at the edge of the family; "
                     "finiteness is checked empirically by the enumeration\n";
    }
    const int d = fp.twist_defect();
    std::cout << "family k=" << fp.k << " p=" << fp.p << " q=" << fp.q << " d=" << d << " ("
              << (d % 2 == 0 ? "even" : "odd") << ")\n";

    const bool both = raw && reduced;
    const Presentation main_pres = raw && !reduced ? raw_presentation(fp)
                                                   : reduced_presentation(fp);
    const EnumerationResult res = enumerate(main_pres, budget.resolve());
    if (!res.finite()) {
        std::cerr << "budget exceeded: elements=" << res.elements_reached
                  << " steps=" << res.steps_used << "\n";
        return kExitBudget;
    }
    const CayleyTable& t = *res.table;
    const std::vector<long long> comp_sizes = components(t).sizes;
    std::cout << "size=" << t.size() << " components=" << components_brackets(comp_sizes) << "\n";

    const long long formula = expected_cardinality(fp);
    const std::vector<long long> expected_comps = expected_components(fp);
    const bool match = t.size() == formula && comp_sizes == expected_comps;
    std::cout << "formula=" << formula
              << " components_expected=" << components_brackets(expected_comps)
              << " match=" << (match ? "yes" : "no") << "\n";

    if (!exports.json_path.empty()) {
        write_file(exports.json_path, table_to_json(t, main_pres.generators));
    }
    if (!exports.dot_path.empty()) {
        write_file(exports.dot_path, table_to_dot(t, main_pres.generators));
    }

    bool all_ok = true;
    if (both) {
        const EnumerationResult raw_res = enumerate(raw_presentation(fp), budget.resolve());
        if (!raw_res.finite()) {
            std::cerr << "budget exceeded while enumerating the raw presentation\n";
            return kExitBudget;
        }
        const IsoResult iso = is_isomorphic(*raw_res.table, t);
        std::cout << "raw_size=" << raw_res.table->size()
                  << " raw_isomorphic_to_reduced=" << (iso.isomorphic ? "yes" : "no") << "\n";
        all_ok = all_ok && iso.isomorphic;
    }

    if (verify) {
        const VerificationReport rels = verify_relations(t, lemma_relation_suite(fp));
        std::cout << "verify: relations "
                  << (rels.checks.size() - static_cast<size_t>(rels.failure_count())) << "/"
                  << rels.checks.size() << " passed";
        if (const CheckResult* failure = rels.first_failure()) {
            std::cout << " (first failure: " << failure->name << " at " << failure->witness
                      << ")";
        }
        std::cout << "\n";
        all_ok = all_ok && rels.all_passed();

        if (t.size() <= 200) {
            const VerificationReport axioms = check_axioms(full_op_table(t));
            std::cout << "verify: axioms " << (axioms.all_passed() ? "passed" : "FAILED") << "\n";
            all_ok = all_ok && axioms.all_passed();
        } else {
            std::cout << "verify: axioms skipped (size > 200)\n";
        }
        all_ok = all_ok && match;
    }

    if (verify || both) {
        return all_ok ? kExitOk : kExitVerification;
    }
    return kExitOk;
}

struct SweepRow {
    FamilyParams fp;
    bool budget_hit = false;
    int size = 0;
    std::vector<long long> comp_sizes;
    long long formula = 0;
    bool match = false;
    long long ms = 0;
};

int cmd_sweep(int q_max, int k_min, int k_max, const std::string& csv_path,
              const BudgetFlags& budget) {
    std::vector<FamilyParams> cases;
    for (int q = 2; q <= q_max; ++q) {
        for (int p = 1; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            for (int k = k_min; k <= k_max; ++k) {
                cases.push_back(FamilyParams{k, p, q});
            }
        }
    }

    // The enumerations are independent; run them in parallel and emit
    // rows in parameter order.
    std::vector<SweepRow> rows(cases.size());
    const EnumerationBudget run_budget = budget.resolve();
    std::atomic<size_t> cursor{0};
    auto worker = [&] {
        for (size_t i = cursor.fetch_add(1); i < cases.size(); i = cursor.fetch_add(1)) {
            SweepRow& row = rows[i];
            row.fp = cases[i];
            const auto start = std::chrono::steady_clock::now();
            const EnumerationResult res = enumerate(reduced_presentation(row.fp), run_budget);
            row.ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
            if (!res.finite()) {
                row.budget_hit = true;
                continue;
            }
            row.size = res.table->size();
            row.comp_sizes = components(*res.table).sizes;
            row.formula = expected_cardinality(row.fp);
            row.match = row.size == row.formula && row.comp_sizes == expected_components(row.fp);
        }
    };
    unsigned thread_count = std::min<unsigned>(std::thread::hardware_concurrency(), 8);
    if (thread_count < 2 || cases.size() < 2) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < thread_count; ++i) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    std::ostringstream csv;
    csv << "k,p,q,d,size,components,formula_size,match,ms\n";
    bool all_match = true;
    for (const SweepRow& row : rows) {
        if (row.budget_hit) {
            std::cerr << "budget exceeded at k=" << row.fp.k << " p=" << row.fp.p
                      << " q=" << row.fp.q << "\n";
            return kExitBudget;
        }
        all_match = all_match && row.match;
        csv << row.fp.k << "," << row.fp.p << "," << row.fp.q << "," << row.fp.twist_defect()
            << "," << row.size << "," << components_bars(row.comp_sizes) << "," << row.formula
            << "," << (row.match ? "yes" : "no") << "," << row.ms << "\n";
    }
    if (csv_path.empty()) {
        std::cout << csv.str();
    } else {
        write_file(csv_path, csv.str());
        std::cout << (all_match ? "sweep: all rows match\n" : "sweep: MISMATCH found\n");
    }
    return all_match ? kExitOk : kExitVerification;
}

int cmd_iso(const std::string& path_a, const std::string& path_b, const BudgetFlags& budget) {
    const Presentation pa = parse_presentation(read_file(path_a));
    const Presentation pb = parse_presentation(read_file(path_b));
    const EnumerationResult ra = enumerate(pa, budget.resolve());
    const EnumerationResult rb = enumerate(pb, budget.resolve());
    if (!ra.finite() || !rb.finite()) {
        std::cerr << "budget exceeded\n";
        return kExitBudget;
    }
    const IsoResult iso = is_isomorphic(*ra.table, *rb.table);
    if (iso.isomorphic) {
        std::cout << "isomorphic: yes\n";
        std::cout << "generator images:";
        for (size_t j = 0; j < pa.generators.size(); ++j) {
            std::cout << " " << pa.generators[j].name << "->" << iso.generator_images[j];
        }
        std::cout << "\n";
    } else {
        std::cout << "isomorphic: no (" << iso.reason << ")\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite involutory quandle enumerator"};
    app.require_subcommand(1);

    BudgetFlags budget;
    ExportFlags exports;

    std::string pres_path;
    CLI::App* enumerate_cmd = app.add_subcommand("enumerate", "Enumerate a presentation file");
    enumerate_cmd->add_option("file", pres_path, "Presentation file")->required();
    add_budget_flags(enumerate_cmd, budget);
    add_export_flags(enumerate_cmd, exports);

    int fam_k = 0, fam_p = 0, fam_q = 0;
    bool fam_raw = false, fam_reduced = false, fam_verify = false;
    CLI::App* family_cmd = app.add_subcommand(
        "family", "Enumerate the two-bridge-link-with-axis quandle for (k, p, q)");
    family_cmd->add_option("k", fam_k, "Signed half-twist count")->required();
    family_cmd->add_option("p", fam_p, "Tangle numerator")->required();
    family_cmd->add_option("q", fam_q, "Tangle denominator")->required();
    family_cmd->add_flag("--raw", fam_raw, "Use the diagram presentation");
    family_cmd->add_flag("--reduced", fam_reduced,
                         "Use the reduced presentation (default; with --raw, compare both)");
    family_cmd->add_flag("--verify", fam_verify,
                         "Check the relation suite, axioms and counting formulas");
    add_budget_flags(family_cmd, budget);
    add_export_flags(family_cmd, exports);

    int sweep_q_max = 0, sweep_k_min = -2, sweep_k_max = 3;
    std::string sweep_csv;
    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "Batch-verify the counting formulas over a parameter range");
    sweep_cmd->add_option("--q-max", sweep_q_max, "Largest q (inclusive)")->required();
    sweep_cmd->add_option("--k-min", sweep_k_min, "Smallest k (default -2)");
    sweep_cmd->add_option("--k-max", sweep_k_max, "Largest k (default 3)");
    sweep_cmd->add_option("--csv", sweep_csv, "Write rows to this CSV file");
    add_budget_flags(sweep_cmd, budget);

    std::string iso_a, iso_b;
    CLI::App* iso_cmd = app.add_subcommand("iso", "Decide isomorphism of two presented quandles");
    iso_cmd->add_option("fileA", iso_a, "First presentation file")->required();
    iso_cmd->add_option("fileB", iso_b, "Second presentation file")->required();
    add_budget_flags(iso_cmd, budget);

    std::string pd_code;
    CLI::App* pd_cmd = app.add_subcommand("pd", "Enumerate from a planar diagram code");
    pd_cmd->add_option("code", pd_code, "Comma-separated X(i,j,k,l) crossings")->required();
    add_budget_flags(pd_cmd, budget);
    add_export_flags(pd_cmd, exports);

    CLI11_PARSE(app, argc, argv);

    try {
        if (enumerate_cmd->parsed()) {
            return cmd_enumerate(pres_path, budget, exports);
        }
        if (family_cmd->parsed()) {
            return cmd_family(fam_k, fam_p, fam_q, fam_raw, fam_reduced, fam_verify, budget,
                              exports);
        }
        if (sweep_cmd->parsed()) {
            return cmd_sweep(sweep_q_max, sweep_k_min, sweep_k_max, sweep_csv, budget);
        }
        if (iso_cmd->parsed()) {
            return cmd_iso(iso_a, iso_b, budget);
        }
        if (pd_cmd->parsed()) {
            return cmd_pd(pd_code, budget, exports);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
