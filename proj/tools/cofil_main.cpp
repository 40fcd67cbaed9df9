// Command-line front end: parses a filtration file and runs one of the
// subcommands, printing a JSON report to stdout.
//
// Exit status: 0 success, 1 usage/parse/library error, 2 property
// violation (e.g. no subfiltration exists, a verify check fails).

#include "cofil/errors.hpp"
#include "cofil/cofiltration.hpp"
#include "cofil/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw cofil::Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string pick_default_grade(const cofil::Poset& poset) {
    std::vector<cofil::GradeIdx> maxima = poset.maximal_elements();
    if (maxima.size() != 1)
        throw cofil::Error("the poset has no unique maximum; pass --grade");
    return poset.id_of(maxima.front());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"order-minimal spanning trees, cofiltrations, and upper-set "
                 "precovers of multiparameter filtrations"};
    app.require_subcommand(1);

    std::string input;
    std::string coeff = "z";
    std::string grade;
    int span_dim = 2;
    std::uint64_t budget = cofil::kDefaultSearchBudget;

    auto add_common = [&](CLI::App* cmd, bool with_coeff = true) {
        cmd->add_option("input", input, "filtration file")->required();
        if (with_coeff)
            cmd->add_option("--coeff", coeff, "coefficient ring: z, q, or zp:<p>")
                ->capture_default_str();
    };

    CLI::App* cmd_tree = app.add_subcommand("tree", "order-minimal spanning tree at one grade");
    add_common(cmd_tree);
    cmd_tree->add_option("--grade", grade, "grade id (default: the unique maximum)");

    CLI::App* cmd_cof = app.add_subcommand(
        "cofiltration", "order-minimal trees at every grade + monotonicity check");
    add_common(cmd_cof);

    CLI::App* cmd_sub = app.add_subcommand(
        "subfiltration", "search for a nested family of spanning trees");
    add_common(cmd_sub, false);
    cmd_sub->add_option("--budget", budget, "search budget (branch nodes)")
        ->capture_default_str();

    CLI::App* cmd_pre = app.add_subcommand(
        "precover", "upper-set summands and the epimorphism rank table");
    add_common(cmd_pre);

    CLI::App* cmd_span = app.add_subcommand(
        "span-n", "greedy n-spanning complex with exact verification");
    add_common(cmd_span, false);
    cmd_span->add_option("--n", span_dim, "dimension n >= 1")->capture_default_str();
    cmd_span->add_option("--grade", grade, "restrict to one frame (default: total complex)");

    CLI::App* cmd_hom = app.add_subcommand("homology", "homology table from the normal-form oracle");
    add_common(cmd_hom);
    cmd_hom->add_option("--grade", grade, "restrict to one grade");

    CLI::App* cmd_verify = app.add_subcommand("verify", "run the entire invariant suite");
    add_common(cmd_verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        cofil::FiltrationDocument doc = cofil::parse_filtration(read_file(input));
        cofil::Ring ring = cofil::Ring::parse(coeff);

        cofil::CliReport report;
        if (cmd_tree->parsed()) {
            std::string g = grade.empty() ? pick_default_grade(doc.filtration.poset()) : grade;
            report = cofil::tree_report(doc, g, ring);
        } else if (cmd_cof->parsed()) {
            report = cofil::cofiltration_report(doc, ring);
        } else if (cmd_sub->parsed()) {
            report = cofil::subfiltration_report(doc, budget);
        } else if (cmd_pre->parsed()) {
            report = cofil::precover_report(doc, ring);
        } else if (cmd_span->parsed()) {
            std::optional<std::string> g;
            if (!grade.empty()) g = grade;
            report = cofil::span_report(doc, span_dim, g);
        } else if (cmd_hom->parsed()) {
            std::optional<std::string> g;
            if (!grade.empty()) g = grade;
            report = cofil::homology_report(doc, ring, g);
        } else if (cmd_verify->parsed()) {
            report = cofil::verify_report(doc, ring);
        }

        std::cout << report.json;
        return report.property_ok ? 0 : 2;
    } catch (const cofil::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
