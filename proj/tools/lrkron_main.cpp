#include "lrkron/closed_form.hpp"
#include "lrkron/complement.hpp"
#include "lrkron/json_io.hpp"
#include "lrkron/lr_engine.hpp"
#include "lrkron/sweep.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace lrkron;

struct Inputs {
    std::string lambda_text, mu_text, nu_text;
    int n = 3;
    Partition lambda, mu, nu;          // as given
    Partition lambda_red, mu_red;      // after equivalence reduction
    bool reduced_changed = false;

    void resolve(bool with_nu) {
        lambda = parse_partition(lambda_text);
        mu = parse_partition(mu_text);
        if (with_nu) nu = parse_partition(nu_text);
        if (n < 2) throw std::invalid_argument("rank must be at least 2");
        lambda_red = reduce_sun(lambda, n);
        mu_red = reduce_sun(mu, n);
        reduced_changed = lambda_red != lambda || mu_red != mu;
    }
};

std::string eta_set_text(const std::vector<EtaLabels>& labels) {
    std::string s = "η∈{";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) s += ',';
        s += labels[i].to_string();
    }
    s += '}';
    return s;
}

void print_pattern_text(const ComplementaryPattern& p, std::ostream& os) {
    for (int level = p.group_size; level >= 1; --level) {
        const auto& row = p.level(level);
        os << "  U(" << level << "): ";
        if (!row) {
            os << "unconstrained\n";
            continue;
        }
        os << '[';
        for (std::size_t i = 0; i < row->size(); ++i) {
            if (i) os << ',';
            os << (*row)[i];
        }
        os << "]\n";
    }
}

int cmd_decompose(const Inputs& in, const std::string& format, bool with_labels) {
    Decomposition d = decompose(in.lambda_red, in.mu_red, in.n);
    if (format == "json") {
        std::cout << to_json(d).dump(2) << '\n';
        return 0;
    }
    std::cout << in.lambda_red.to_string() << " x " << in.mu_red.to_string()
              << "  (n = " << in.n << ")";
    if (in.reduced_changed)
        std::cout << "  [reduced from " << in.lambda.to_string() << " x " << in.mu.to_string() << "]";
    std::cout << '\n';
    for (const auto& t : d.terms) {
        std::cout << t.nu.to_string() << "  " << t.multiplicity;
        if (with_labels && !t.labels.empty()) std::cout << "  " << eta_set_text(t.labels);
        std::cout << '\n';
    }
    return 0;
}

int formula_multiplicity(const Inputs& in) {
    if (in.n == 3)
        return su3_multiplicity(partition_to_dynkin(in.lambda_red),
                                partition_to_dynkin(in.mu_red), in.nu);
    if (in.n == 4) return su4_multiplicity(in.lambda_red, in.mu_red, in.nu);
    throw std::invalid_argument("closed-form multiplicity is available for n = 3 and n = 4 only");
}

int cmd_multiplicity(const Inputs& in, const std::string& method, bool strict) {
    if (in.nu.boxes() != in.lambda_red.boxes() + in.mu_red.boxes())
        throw std::invalid_argument("box count mismatch: " + in.nu.to_string() + " has " +
                                    std::to_string(in.nu.boxes()) + " boxes, " +
                                    in.lambda_red.to_string() + " x " + in.mu_red.to_string() +
                                    " supplies " +
                                    std::to_string(in.lambda_red.boxes() + in.mu_red.boxes()));
    if (method == "oracle") {
        std::cout << lr_coefficient(in.lambda_red, in.mu_red, in.nu, in.n) << '\n';
        return 0;
    }
    if (method == "formula") {
        std::cout << formula_multiplicity(in) << '\n';
        return 0;
    }
    int formula = formula_multiplicity(in);
    int oracle = lr_coefficient(in.lambda_red, in.mu_red, in.nu, in.n);
    bool agree = formula == oracle;
    std::cout << "formula: " << formula << '\n'
              << "oracle: " << oracle << '\n'
              << "agree: " << (agree ? "yes" : "no") << '\n';
    return (!agree && strict) ? 1 : 0;
}

int cmd_labels(const Inputs& in, const std::string& format) {
    if (in.n != 3 && in.n != 4)
        throw std::invalid_argument("complement labels are available for n = 3 and n = 4 only");
    if (lr_coefficient(in.lambda_red, in.mu_red, in.nu, in.n) == 0)
        throw std::invalid_argument(in.nu.to_string() + " does not occur in " +
                                    in.lambda_red.to_string() + " x " + in.mu_red.to_string());

    std::vector<ComplementaryPattern> patterns;
    if (in.n == 3) {
        Su3Dynkin a = partition_to_dynkin(in.lambda_red);
        Su3Dynkin b = partition_to_dynkin(in.mu_red);
        for (const auto& eta : su3_eta_labels(a, b, in.nu))
            patterns.push_back(coupled_pattern_su3(a, b, in.nu, eta.values[0]));
    } else {
        for (const auto& eta : su4_eta_labels(in.lambda_red, in.mu_red, in.nu))
            patterns.push_back(coupled_pattern_su4(in.lambda_red, in.mu_red, in.nu, eta));
    }

    if (format == "json") {
        Json j = Json::array();
        for (const auto& p : patterns) j.push_back(to_json(p));
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    for (const auto& p : patterns) {
        std::cout << "eta = " << p.eta.to_string() << '\n';
        print_pattern_text(p, std::cout);
    }
    return 0;
}

int cmd_validate(SweepConfig cfg) {
    const char* env = std::getenv("LRKRON_THREADS");
    if (env) {
        int threads = std::atoi(env);
        if (threads >= 1) cfg.parallelism = threads;
    }
    SweepStats stats = run_sweep(cfg);
    if (cfg.output_path.empty())
        for (const auto& rec : stats.records) std::cout << to_json(rec).dump() << '\n';
    std::cout << "pairs=" << stats.pairs << " terms=" << stats.terms
              << " multiplicity_mismatches=" << stats.multiplicity_mismatches
              << " multiset_mismatches=" << stats.multiset_mismatches
              << " label_mismatches=" << stats.label_mismatches
              << " betweenness_failures=" << stats.betweenness_failures
              << " dimension_failures=" << stats.dimension_failures
              << " discarded=" << stats.discarded_tuples << '\n';
    std::cout << "total_mismatches=" << stats.total_mismatches() << '\n';
    std::cerr << "elapsed: " << stats.seconds << "s\n";
    return (cfg.strict && stats.total_mismatches() > 0) ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kronecker products of SU(n) irreps via the Littlewood rule, "
                 "with canonical outer-multiplicity labels"};
    app.require_subcommand(1);
    int status = 0;

    Inputs in;
    std::string format = "table";
    std::string method = "both";
    bool with_labels = false;
    bool strict = false;
    SweepConfig cfg;
    std::string group_name = "both";

    auto* dec = app.add_subcommand("decompose", "Decompose [lambda] x [mu]");
    dec->add_option("--lambda", in.lambda_text, "first factor, e.g. [3,1]")->required();
    dec->add_option("--mu", in.mu_text, "second factor")->required();
    dec->add_option("--n", in.n, "rank of SU(n)")->required();
    dec->add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}));
    dec->add_flag("--labels", with_labels, "attach eta label sets (n = 3 or 4)");
    dec->callback([&] {
        in.resolve(false);
        status = cmd_decompose(in, format, with_labels);
    });

    auto* mult = app.add_subcommand("multiplicity", "Multiplicity of [nu] in [lambda] x [mu]");
    mult->add_option("--lambda", in.lambda_text)->required();
    mult->add_option("--mu", in.mu_text)->required();
    mult->add_option("--nu", in.nu_text)->required();
    mult->add_option("--n", in.n)->required();
    mult->add_option("--method", method, "formula, oracle or both")
        ->check(CLI::IsMember({"formula", "oracle", "both"}));
    mult->add_flag("--strict", strict, "exit 1 when formula and oracle disagree");
    mult->callback([&] {
        in.resolve(true);
        status = cmd_multiplicity(in, method, strict);
    });

    auto* lab = app.add_subcommand("labels", "Complementary-group patterns labeling each occurrence");
    lab->add_option("--lambda", in.lambda_text)->required();
    lab->add_option("--mu", in.mu_text)->required();
    lab->add_option("--nu", in.nu_text)->required();
    lab->add_option("--n", in.n)->required();
    lab->add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}));
    lab->callback([&] {
        in.resolve(true);
        status = cmd_labels(in, format);
    });

    auto* val = app.add_subcommand("validate", "Sweep closed-form results against the filling oracle");
    val->add_option("--group", group_name, "su3, su4 or both")
        ->check(CLI::IsMember({"su3", "su4", "both"}));
    val->add_option("--max-boxes", cfg.max_boxes, "total box budget for factor pairs")->required();
    val->add_flag("--strict", cfg.strict, "exit 1 when any mismatch is found");
    val->add_option("--output", cfg.output_path, "JSON-lines report file");
    val->add_option("--jobs", cfg.parallelism, "worker count (LRKRON_THREADS overrides)");
    val->callback([&] {
        cfg.group = group_name == "su3"   ? SweepGroup::Su3
                    : group_name == "su4" ? SweepGroup::Su4
                                          : SweepGroup::Both;
        status = cmd_validate(cfg);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const io_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return status;
}
