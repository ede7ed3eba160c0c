#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "pdyn/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exact dynamics of commuting plane endomorphisms"};
    app.require_subcommand(1);
    int order = 1, iterate_cap = 6;
    long degree_cap = pdyn::kDisjointCap;
    unsigned long seed = 0;
    std::string json_path;
    bool timing = false;
    app.add_option("--cyclotomic", order, "field Q(zeta_N); 'w' in input is zeta_N")->check(CLI::PositiveNumber);
    app.add_option("--degree-cap", degree_cap, "degree cap for iterates")->check(CLI::PositiveNumber);
    app.add_option("--iterate-cap", iterate_cap, "default orbit bound")->check(CLI::PositiveNumber);
    app.add_option("--json", json_path, "also write the report here");
    app.add_option("--seed", seed, "ordering seed for search");
    app.add_flag("--timing", timing, "include wall time");

    std::map<std::string, pdyn::Args> values;
    std::map<std::string, std::map<std::string, std::string>> buffers;
    for (const auto& [cmd, opts] : pdyn::command_table()) {
        auto* sub = app.add_subcommand(cmd);
        for (std::string o : opts) {
            bool optional = o.back() == '?';
            if (optional) o.pop_back();
            auto* opt = sub->add_option("--" + o, buffers[cmd][o]);
            if (!optional) opt->required();
        }
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    auto* sub = app.get_subcommands().front();
    pdyn::Args args;
    for (const auto& [k, v] : buffers[sub->get_name()])
        if (sub->count("--" + k) > 0) args[k] = v;

    pdyn::Session session;
    session.cyclotomic_order = order;
    session.degree_cap = degree_cap;
    session.iterate_cap = iterate_cap;
    session.seed = seed;
    session.timing = timing;
    auto result = pdyn::run(sub->get_name(), args, session);
    std::string text = result.report.to_json(timing);
    std::cout << text;
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        out << text;
        if (!out) {
            std::cerr << "cannot write " << json_path << "\n";
            return 2;
        }
    }
    return result.exit_code;
}
