#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "schubert_lr/cli.hpp"

namespace {

bool read_input(const std::string& path, std::string& text)
{
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
        return true;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        return false;
    }
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    return true;
}

} // namespace

int main(int argc, char** argv)
{
    namespace cli = schubert_lr::cli;

    CLI::App app{"Intersection numbers of Grassmannian Schubert problems in partial flag manifolds"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string alpha_text;
    int threads = 1;
    int floor = 0;
    std::string file;
    std::string permutation;

    app.add_option("--alpha", alpha_text, "Cut set override, e.g. {1,2,3}");
    app.add_option("--threads", threads, "Worker threads (output does not depend on it)")->check(CLI::Range(1, 256));

    auto add_file = [&](CLI::App* sub) { sub->add_option("file", file, "Problem file, or - for stdin")->required(); };

    auto* count = app.add_subcommand("count", "Print the intersection number");
    add_file(count);
    auto* enumerate = app.add_subcommand("enumerate", "List every filtered tableau");
    add_file(enumerate);
    auto* verify = app.add_subcommand("verify", "Compare the tableau count with the Schubert polynomial oracle");
    add_file(verify);
    auto* valley = app.add_subcommand("valley", "Coefficient of the Schubert class of a valley permutation");
    valley->add_option("w", permutation, "One-line permutation, e.g. 531246 or 10,2,...")->required();
    add_file(valley);
    auto* floor_opt = valley->add_option("--floor", floor, "Floor of the valley (default: the largest cut)");
    auto* monk = app.add_subcommand("monk", "Compare Monk chain counting with iterated Monk multiplication");
    add_file(monk);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? cli::kSuccess : cli::kInvalidInput;
    }

    cli::CommandOptions opts;
    opts.threads = threads;
    if (floor_opt->count() > 0) {
        opts.floor = floor;
    }
    if (!alpha_text.empty()) {
        try {
            opts.alpha = schubert_lr::parse_cut_set(alpha_text);
        } catch (const std::exception& e) {
            std::cerr << "error: --alpha: " << e.what() << '\n';
            return cli::kInvalidInput;
        }
    }

    std::string text;
    if (!read_input(file, text)) {
        std::cerr << "error: cannot read " << file << '\n';
        return cli::kInvalidInput;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    const auto result = cli::run_command(name, text, opts, permutation);
    std::cout << result.out;
    std::cerr << result.err;
    std::cout.flush();
    return result.exit_code;
}
