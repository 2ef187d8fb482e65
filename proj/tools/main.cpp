#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tenring/report.hpp"

namespace {

using namespace tenring;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw Error("cannot write '" + out_path + "'");
    out << text;
}

WorkbenchConfig default_config() {
    // TENRING_CONFIG can point at a JSON file with config defaults; command
    // line flags still override it.
    if (const char* path = std::getenv("TENRING_CONFIG")) {
        std::ifstream in(path);
        if (in) {
            nlohmann::json j;
            in >> j;
            return WorkbenchConfig::from_json(j);
        }
    }
    return WorkbenchConfig{};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for tensor rings of nilpotent bimodules"};
    // --h is a preset parameter, so help lives on --help only.
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);

    WorkbenchConfig cfg;
    try {
        cfg = default_config();
    } catch (const std::exception& e) {
        std::cerr << "error: bad TENRING_CONFIG: " << e.what() << "\n";
        return 2;
    }

    // --- preset ---
    auto* preset = app.add_subcommand("preset", "emit a definition file");
    std::string preset_name, preset_out;
    std::size_t pn = 3, ph = 2, pi = 1, pj = 3;
    std::uint32_t prime = cfg.p;
    preset->add_option("name", preset_name, "nakayama | triangular | morita-zero")
        ->required();
    preset->add_option("--n", pn, "number of vertices (nakayama)");
    preset->add_option("--h", ph, "radical truncation exponent (nakayama)");
    preset->add_option("--i", pi, "source vertex of the bimodule (nakayama)");
    preset->add_option("--j", pj, "target vertex of the bimodule (nakayama)");
    preset->add_option("--p", prime, "field characteristic");
    preset->add_option("-o,--out", preset_out, "output path (default stdout)");

    // --- check ---
    auto* check = app.add_subcommand("check", "run a task against a definition");
    std::string check_file;
    std::vector<std::string> task_words;
    check->add_option("file", check_file, "definition file")->required();
    check->add_option("task", task_words,
                      "task words, e.g. 'condition-t' or 'verify theorem-a'; "
                      "defaults to the file's task list");
    check->add_option("--samples", cfg.samples, "sample count for verifiers");
    check->add_option("--seed", cfg.seed, "PRNG seed");
    check->add_option("--window", cfg.window, "acyclicity window");
    check->add_option("--degree", cfg.degree_bound, "Tor/Ext degree bound");
    check->add_option("--depth", cfg.resolution_depth, "resolution depth bound");
    check->add_option("--nil-bound", cfg.nil_bound, "nilpotency search bound");
    check->add_option("--format", cfg.format, "text | structured");
    check->add_flag("--timing", cfg.include_timing, "include timings in output");

    // --- render ---
    auto* render = app.add_subcommand("render", "render a structured report");
    std::string render_file;
    render->add_option("file", render_file, "structured report")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (preset->parsed()) {
            FieldSpec f(prime);
            DefinitionFile d;
            if (preset_name == "nakayama")
                d = preset_nakayama(pn, ph, pi, pj, f);
            else if (preset_name == "triangular")
                d = preset_triangular(f);
            else if (preset_name == "morita-zero")
                d = preset_morita_zero(f);
            else
                throw Error("unknown preset '" + preset_name + "'");
            for (const auto& w : d.doc["warnings"])
                std::cerr << "warning: " << w.get<std::string>() << "\n";
            emit(render_definition(d), preset_out);
            return 0;
        }
        if (check->parsed()) {
            cfg.validate();
            DefinitionFile d = parse_definition(slurp(check_file));
            cfg.p = d.doc["field"]["p"].get<std::uint32_t>();
            BuiltDefinition built = build_definition(d, cfg);
            std::vector<std::string> tasks;
            if (!task_words.empty()) {
                std::string joined;
                for (const auto& w : task_words)
                    joined += (joined.empty() ? "" : " ") + w;
                tasks.push_back(joined);
            } else {
                for (const auto& t : d.doc.value("tasks", nlohmann::json::array()))
                    tasks.push_back(t.get<std::string>());
            }
            Report rep;
            rep.config = cfg;
            for (const auto& t : tasks) rep.tasks.push_back(run_task(built, t, cfg));
            nlohmann::json structured = rep.to_json();
            if (cfg.format == "structured")
                std::cout << structured.dump(2) << "\n";
            else
                std::cout << render_report(structured);
            return rep.exit_code();
        }
        if (render->parsed()) {
            std::cout << render_report(nlohmann::json::parse(slurp(render_file)));
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
