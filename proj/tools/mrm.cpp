#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "mrm/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"systematic encoder for multiplicity codes over GF(p^t)"};
    app.require_subcommand(1);

    mrm::cli::CodeSpec spec;
    std::string in_path, out_path;
    bool systematic = false, fast = false, monomial = false;

    auto add_spec = [&spec](CLI::App* sub) {
        sub->add_option("--p", spec.p, "prime characteristic")->required();
        sub->add_option("--t", spec.t, "extension degree (default 1)");
        sub->add_option("--m", spec.m, "number of variables (default 1)");
        sub->add_option("--s", spec.s, "derivative order (default 1)");
        sub->add_option("--d", spec.d, "degree bound")->required();
    };

    CLI::App* cmd_params = app.add_subcommand("params", "print derived code parameters");
    add_spec(cmd_params);

    CLI::App* cmd_encode = app.add_subcommand("encode", "encode a message file");
    add_spec(cmd_encode);
    cmd_encode->add_option("--in", in_path, "message file (one symbol per line)")->required();
    cmd_encode->add_option("--out", out_path, "codeword file (default stdout)");
    cmd_encode->add_flag("--systematic", systematic, "systematic encoding (default)");
    cmd_encode->add_flag("--fast", fast, "systematic encoding, component-based path");
    cmd_encode->add_flag("--monomial", monomial, "message read as monomial coefficients");

    CLI::App* cmd_extract = app.add_subcommand("extract", "read the message back off a codeword");
    add_spec(cmd_extract);
    cmd_extract->add_option("--in", in_path, "codeword file")->required();
    cmd_extract->add_option("--out", out_path, "message file (default stdout)");

    CLI::App* cmd_decompose = app.add_subcommand("decompose",
                                                 "split a polynomial into its components");
    add_spec(cmd_decompose);
    cmd_decompose->add_option("--in", in_path, "polynomial file (coeff:e1,...,em terms)")
        ->required();
    cmd_decompose->add_option("--out", out_path, "listing file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return mrm::cli::kExitBadParams;
    }

    if (cmd_params->parsed()) return mrm::cli::run_params(spec, std::cout, std::cerr);
    if (cmd_encode->parsed()) {
        if (static_cast<int>(systematic) + static_cast<int>(fast) + static_cast<int>(monomial) >
            1) {
            std::cerr << "error: pick one of --systematic, --fast, --monomial\n";
            return mrm::cli::kExitBadParams;
        }
        auto mode = mrm::cli::EncodeMode::Systematic;
        if (fast) mode = mrm::cli::EncodeMode::Fast;
        if (monomial) mode = mrm::cli::EncodeMode::Monomial;
        return mrm::cli::run_encode(spec, in_path, out_path, mode, std::cerr);
    }
    if (cmd_extract->parsed()) return mrm::cli::run_extract(spec, in_path, out_path, std::cerr);
    if (cmd_decompose->parsed())
        return mrm::cli::run_decompose(spec, in_path, out_path, std::cerr);
    return mrm::cli::kExitBadParams;
}
