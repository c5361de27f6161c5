#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tangles/cnf.hpp"
#include "tangles/errors.hpp"
#include "tangles/feasibility.hpp"
#include "tangles/heightmin.hpp"
#include "tangles/instances.hpp"
#include "tangles/list_io.hpp"
#include "tangles/nae_formula.hpp"
#include "tangles/oracle.hpp"
#include "tangles/render.hpp"

namespace {

using namespace tangles;

// "-" means stdin / stdout throughout.

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in) throw InvalidInputError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

SwapList load_list(const std::string& path) {
    std::istringstream in(slurp(path));
    return parse_list(in);
}

Tangle load_tangle(const std::string& path) {
    std::istringstream in(slurp(path));
    return parse_tangle(in);
}

void emit(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw InvalidInputError("cannot write '" + path + "'");
    out << content;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact feasibility and minimum-height solver for wire tangles"};
    app.require_subcommand(1);

    SolveOptions solve_options;
    std::uint64_t seed = 0;
    app.add_option("--max-table", solve_options.max_table_entries,
                   "Cap on solver table entries / search states");
    app.add_option("--seed", seed,
                   "Reserved for scripted harnesses; solver output never depends on it");

    int exit_code = 0;

    // feasible <list> [--method ...]
    auto* feasible_cmd = app.add_subcommand("feasible", "Decide whether a list is realizable");
    std::string feasible_path;
    std::string feasible_method = "auto";
    feasible_cmd->add_option("list", feasible_path, "List file, - for stdin")->required();
    feasible_cmd->add_option("--method", feasible_method, "auto|dp|fpt|simple|odd|rich-even|oracle")
        ->check(CLI::IsMember({"auto", "dp", "fpt", "simple", "odd", "rich-even", "oracle"}));
    feasible_cmd->callback([&] {
        const SwapList list = load_list(feasible_path);
        bool feasible = false;
        if (feasible_method == "auto")
            feasible = feasible_auto(list, solve_options);
        else if (feasible_method == "dp")
            feasible = feasible_dp(list, solve_options);
        else if (feasible_method == "fpt")
            feasible = feasible_fpt(list, solve_options);
        else if (feasible_method == "simple")
            feasible = feasible_simple(list);
        else if (feasible_method == "odd")
            feasible = feasible_odd(list);
        else if (feasible_method == "rich-even")
            feasible = feasible_rich_even(list);
        else
            feasible = oracle_feasible(list);
        std::cout << (feasible ? "feasible" : "infeasible") << "\n";
        exit_code = feasible ? 0 : 1;
    });

    // minheight <list> [--method ...] [--emit <file>]
    auto* minheight_cmd = app.add_subcommand("minheight", "Minimum height of a realizing tangle");
    std::string minheight_path;
    std::string minheight_method = "dp";
    std::string emit_path;
    minheight_cmd->add_option("list", minheight_path, "List file, - for stdin")->required();
    minheight_cmd->add_option("--method", minheight_method, "dp|bfs|oracle")
        ->check(CLI::IsMember({"dp", "bfs", "oracle"}));
    minheight_cmd->add_option("--emit", emit_path, "Write a witness tangle here");
    minheight_cmd->callback([&] {
        const SwapList list = load_list(minheight_path);
        std::optional<std::uint64_t> height;
        std::optional<Tangle> witness;
        if (minheight_method == "dp") {
            MinHeightResult result = min_height_dp(list, solve_options);
            height = result.height;
            witness = std::move(result.witness);
        } else if (minheight_method == "bfs") {
            witness = min_height_bfs(list, solve_options);
            if (witness) height = static_cast<std::uint64_t>(witness->height());
        } else {
            if (!emit_path.empty())
                throw InvalidInputError("the oracle computes heights only; --emit needs dp or bfs");
            height = oracle_min_height(list);
        }
        if (!height) {
            std::cout << "infeasible\n";
            exit_code = 1;
            return;
        }
        std::cout << *height << "\n";
        if (!emit_path.empty()) emit(emit_path, write_tangle(*witness));
    });

    // gen loop|complete|hypercube|reduce
    auto* gen_cmd = app.add_subcommand("gen", "Generate instance families");
    gen_cmd->require_subcommand(1);
    std::string gen_out = "-";
    int gen_size = 0;
    std::string reduce_path;
    bool reduce_wire_map = false;

    auto* gen_loop = gen_cmd->add_subcommand("loop", "Loop family with optimum height 3n-4");
    gen_loop->add_option("n", gen_size, "Wire count, at least 3")->required();
    gen_loop->add_option("-o,--output", gen_out, "Output file, - for stdout");
    gen_loop->callback([&] { emit(gen_out, write_list(loop_list(gen_size))); });

    auto* gen_complete = gen_cmd->add_subcommand("complete", "Every pair swaps once");
    gen_complete->add_option("n", gen_size, "Wire count")->required();
    gen_complete->add_option("-o,--output", gen_out, "Output file, - for stdout");
    gen_complete->callback([&] { emit(gen_out, write_list(complete_list(gen_size))); });

    auto* gen_hypercube = gen_cmd->add_subcommand("hypercube", "Even family on 2^m wires");
    gen_hypercube->add_option("m", gen_size, "Dimension, at least 1")->required();
    gen_hypercube->add_option("-o,--output", gen_out, "Output file, - for stdout");
    gen_hypercube->callback([&] {
        std::string text = "# wires carry labels 0..2^m-1; wire w has label w-1\n";
        text += write_list(hypercube_list(gen_size));
        emit(gen_out, text);
    });

    auto* gen_reduce = gen_cmd->add_subcommand("reduce", "Hardness instance from a NAE-3-SAT formula");
    gen_reduce->add_option("formula", reduce_path, "Formula file (p nae3sat), - for stdin")->required();
    gen_reduce->add_option("-o,--output", gen_out, "Output file, - for stdout");
    gen_reduce->add_flag("--wire-map", reduce_wire_map, "Prefix the list with wire role comments");
    gen_reduce->callback([&] {
        std::istringstream in(slurp(reduce_path));
        const NaeFormula normalized = normalize_nae(parse_nae_formula(in));
        auto [list, map] = reduce_to_list(normalized);
        std::string text;
        if (reduce_wire_map)
            for (const auto& [role, wire] : map.roles())
                text += "# wire " + std::to_string(wire) + " = " + role + "\n";
        text += write_list(list);
        emit(gen_out, text);
    });

    // render <tanglefile> --format svg|ascii -o <file>
    auto* render_cmd = app.add_subcommand("render", "Draw a tangle");
    std::string render_path;
    std::string render_format;
    std::string render_out = "-";
    render_cmd->add_option("tangle", render_path, "Tangle file, - for stdin")->required();
    render_cmd->add_option("--format", render_format, "svg or ascii")
        ->required()
        ->check(CLI::IsMember({"svg", "ascii"}));
    render_cmd->add_option("-o,--output", render_out, "Output file, - for stdout");
    render_cmd->callback([&] {
        const Tangle t = load_tangle(render_path);
        emit(render_out, render_format == "svg" ? render_svg(t) : render_ascii(t));
    });

    // export-cnf <list> --height <h> -o <file>
    auto* cnf_cmd = app.add_subcommand("export-cnf", "DIMACS formula for bounded-height realization");
    std::string cnf_path;
    std::string cnf_out = "-";
    std::uint64_t cnf_height = 0;
    CnfOptions cnf_options;
    cnf_cmd->add_option("list", cnf_path, "List file, - for stdin")->required();
    cnf_cmd->add_option("--height", cnf_height, "Layer budget, at least 1")->required();
    cnf_cmd->add_option("-o,--output", cnf_out, "Output file, - for stdout");
    cnf_cmd->add_option("--max-clauses", cnf_options.max_clauses, "Clause cap");
    cnf_cmd->callback([&] {
        const SwapList list = load_list(cnf_path);
        std::ostringstream buffer;
        const CnfStats stats = export_cnf(list, cnf_height, buffer, cnf_options);
        emit(cnf_out, buffer.str());
        std::cerr << stats.variables << " variables, " << stats.clauses << " clauses\n";
    });

    // validate <tanglefile> <list>
    auto* validate_cmd = app.add_subcommand("validate", "Check a tangle against a list");
    std::string validate_tangle_path;
    std::string validate_list_path;
    validate_cmd->add_option("tangle", validate_tangle_path, "Tangle file, - for stdin")->required();
    validate_cmd->add_option("list", validate_list_path, "List file")->required();
    validate_cmd->callback([&] {
        const Tangle t = load_tangle(validate_tangle_path);
        const SwapList list = load_list(validate_list_path);
        const TangleValidation result = validate_tangle(t, list, t.first());
        std::cout << (result.ok ? "valid" : to_string(result.reason)) << "\n";
        exit_code = result.ok ? 0 : 1;
    });

    // oracle feasible|minheight <list>
    auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force reference answers (tiny instances)");
    oracle_cmd->require_subcommand(1);
    std::string oracle_path;
    auto* oracle_feas = oracle_cmd->add_subcommand("feasible", "Reference feasibility");
    oracle_feas->add_option("list", oracle_path, "List file, - for stdin")->required();
    oracle_feas->callback([&] {
        const bool feasible = oracle_feasible(load_list(oracle_path));
        std::cout << (feasible ? "feasible" : "infeasible") << "\n";
        exit_code = feasible ? 0 : 1;
    });
    auto* oracle_height = oracle_cmd->add_subcommand("minheight", "Reference minimum height");
    oracle_height->add_option("list", oracle_path, "List file, - for stdin")->required();
    oracle_height->callback([&] {
        const auto height = oracle_min_height(load_list(oracle_path));
        if (height)
            std::cout << *height << "\n";
        else {
            std::cout << "infeasible\n";
            exit_code = 1;
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& error) {
        const int code = app.exit(error);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 2;
    }
    return exit_code;
}
