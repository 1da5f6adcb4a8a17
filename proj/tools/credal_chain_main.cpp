#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "credal/chain_spec.hpp"
#include "credal/errors.hpp"
#include "credal/report.hpp"

namespace {

std::vector<long> parse_steps(const std::string& text) {
    std::vector<long> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        long v = 0;
        try {
            v = std::stol(item, &pos);
        } catch (...) {
            pos = 0;
        }
        if (item.empty() || pos != item.size() || v < 0)
            throw std::invalid_argument(
                "--steps must be a comma-separated list of non-negative integers");
        out.push_back(v);
    }
    return out;
}

credal::ProfileChoice parse_profile(const std::string& text) {
    credal::ProfileChoice choice;
    if (text == "self") {
        choice.source = credal::ProfileChoice::Source::self;
        return choice;
    }
    if (text == "perturbed") {
        choice.source = credal::ProfileChoice::Source::perturbed;
        return choice;
    }
    const auto bad = [] {
        return std::invalid_argument("--profile must be self, perturbed, or r=K:rho=V");
    };
    if (text.rfind("r=", 0) != 0) throw bad();
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw bad();
    const std::string r_part = text.substr(2, colon - 2);
    const std::string rho_part = text.substr(colon + 1);
    if (rho_part.rfind("rho=", 0) != 0) throw bad();
    const std::string rho_text = rho_part.substr(4);
    long r = 0;
    double rho = 0.0;
    try {
        std::size_t pos = 0;
        r = std::stol(r_part, &pos);
        if (pos != r_part.size()) throw bad();
        pos = 0;
        rho = std::stod(rho_text, &pos);
        if (pos != rho_text.size()) throw bad();
    } catch (const std::invalid_argument&) {
        throw bad();
    } catch (const std::out_of_range&) {
        throw bad();
    }
    if (r < 1) throw std::invalid_argument("--profile step count must be at least 1");
    if (!(rho >= 0.0 && rho <= 1.0))
        throw std::invalid_argument("--profile coefficient must lie in [0, 1]");
    choice.source = credal::ProfileChoice::Source::user;
    choice.user_profile = credal::ErgodicityProfile{r, rho, credal::Exactness::exact};
    return choice;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

struct Options {
    std::string command;
    std::string file_a;
    std::string file_b;
    std::string steps_text;
    std::string profile_text = "perturbed";
    std::string csv_path;
    std::string json_path;
    std::string target;
    double eps = 0.0;
};

int run(const Options& opt) {
    const std::vector<long> steps = parse_steps(opt.steps_text);
    credal::ReportTable table;
    int code = 0;

    if (opt.command == "analyze") {
        const credal::ChainSpec chain = credal::parse_chain_spec(opt.file_a);
        table = credal::cmd_analyze(chain, steps, "analysis: " + opt.file_a);
    } else if (opt.command == "compare") {
        const credal::ChainSpec a = credal::parse_chain_spec(opt.file_a);
        const credal::ChainSpec b = credal::parse_chain_spec(opt.file_b);
        table = credal::cmd_compare(a, b, steps, parse_profile(opt.profile_text),
                                    "comparison: " + opt.file_a + " vs " + opt.file_b);
    } else if (opt.command == "contaminate") {
        const credal::ChainSpec chain = credal::parse_chain_spec(opt.file_a);
        std::ostringstream title;
        title << "contamination: " << opt.file_a << " (eps=" << opt.eps << ")";
        table = credal::cmd_contaminate(chain, opt.eps, steps, title.str());
    } else {
        const credal::ReproduceResult r = credal::cmd_reproduce(opt.target);
        table = r.table;
        if (!r.all_passed) {
            std::cerr << "reproduction FAILED\n";
            code = 1;
        }
    }

    std::cout << credal::render_text(table);
    if (!opt.csv_path.empty()) write_file(opt.csv_path, credal::render_csv(table));
    if (!opt.json_path.empty()) write_file(opt.json_path, credal::render_json(table));
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"credal-chain: imprecise Markov chain analysis"};
    app.require_subcommand(1);
    Options opt;

    auto add_output_options = [&](CLI::App* cmd) {
        cmd->add_option("--csv", opt.csv_path, "also write the table as CSV to this path");
        cmd->add_option("--json", opt.json_path, "also write the table as JSON to this path");
    };

    CLI::App* analyze =
        app.add_subcommand("analyze", "ergodicity, imprecision, and n-step bounds of a chain");
    analyze->add_option("file", opt.file_a, "chain spec JSON file")->required();
    analyze->add_option("--steps", opt.steps_text,
                        "comma-separated step counts (default 1,2,3)");
    add_output_options(analyze);

    CLI::App* compare =
        app.add_subcommand("compare", "measured distances and perturbation bounds");
    compare->add_option("first", opt.file_a, "chain spec JSON file")->required();
    compare->add_option("second", opt.file_b, "chain spec JSON file")->required();
    compare->add_option("--steps", opt.steps_text,
                        "comma-separated step counts (default 1,2,3)");
    compare->add_option("--profile", opt.profile_text,
                        "contraction profile for the bounds: self, perturbed, or r=K:rho=V");
    add_output_options(compare);

    CLI::App* contaminate =
        app.add_subcommand("contaminate", "contamination effects and bounds");
    contaminate->add_option("file", opt.file_a, "chain spec JSON file")->required();
    contaminate->add_option("--eps", opt.eps, "contamination weight in (0, 1)")->required();
    contaminate->add_option("--steps", opt.steps_text,
                            "comma-separated step counts (default 1,2,3)");
    add_output_options(contaminate);

    CLI::App* reproduce =
        app.add_subcommand("reproduce", "recompute a bundled worked example");
    reproduce->add_option("which", opt.target, "example1 or example52")->required();
    add_output_options(reproduce);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    }

    if (analyze->parsed())
        opt.command = "analyze";
    else if (compare->parsed())
        opt.command = "compare";
    else if (contaminate->parsed())
        opt.command = "contaminate";
    else if (reproduce->parsed())
        opt.command = "reproduce";

    try {
        return run(opt);
    } catch (const credal::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const credal::validation_error& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 3;
    } catch (const credal::unsupported_error& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
