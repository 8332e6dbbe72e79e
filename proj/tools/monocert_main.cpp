#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "monocert/errors.hpp"
#include "monocert/run.hpp"

namespace {

void add_common_flags(CLI::App* sub, mono::run::RunConfig& cfg, std::string& out_path) {
    sub->add_option("--budget", cfg.budget, "word-search budget")->capture_default_str();
    sub->add_option("--precision", cfg.precision,
                    "starting bit precision for certified signs")
        ->capture_default_str();
    sub->add_option("--cache-dir", cfg.cache_dir, "report cache directory");
    sub->add_flag("--verify-cache", cfg.verify_cache,
                  "replay witnesses when reading cached reports");
    sub->add_option("--out", out_path, "write the report to this file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "monocert: exact monodromy data and density certification for cyclic covers "
        "branched along hyperplane arrangements"};
    app.require_subcommand(1);

    mono::run::RunConfig cfg;
    std::string out_path;

    CLI::App* pham =
        app.add_subcommand("pham", "Milnor-lattice characters with reflection constants");
    pham->add_option("--n", cfg.n, "ambient projective dimension")->required();
    pham->add_option("--r", cfg.r, "covering degree")->required();
    add_common_flags(pham, cfg, out_path);

    CLI::App* curve = app.add_subcommand(
        "curve-rep", "explicit braid-group matrices on the curve eigenspace");
    curve->add_option("--m", cfg.m, "number of branch points")->required();
    curve->add_option("--r", cfg.r, "covering degree")->required();
    curve->add_option("--i", cfg.i, "character index")->required();
    curve->add_option("--wedge", cfg.wedge, "also emit this exterior power");
    add_common_flags(curve, cfg, out_path);

    CLI::App* inv = app.add_subcommand(
        "invariants", "closed-form signatures, Hodge numbers, expected group");
    inv->add_option("--n", cfg.n, "ambient projective dimension")->required();
    inv->add_option("--m", cfg.m, "number of branch hyperplanes")->required();
    inv->add_option("--r", cfg.r, "covering degree")->required();
    inv->add_option("--i", cfg.i, "character index")->required();
    add_common_flags(inv, cfg, out_path);

    CLI::App* cert = app.add_subcommand("certify", "density certificate for one tuple");
    cert->add_option("--n", cfg.n, "ambient projective dimension")->required();
    cert->add_option("--m", cfg.m, "number of branch hyperplanes")->required();
    cert->add_option("--r", cfg.r, "covering degree")->required();
    cert->add_option("--i", cfg.i, "character index")->required();
    add_common_flags(cert, cfg, out_path);

    CLI::App* sweep = app.add_subcommand("sweep", "certify every valid tuple up to --m-max");
    sweep->add_option("--n", cfg.n, "ambient projective dimension")->required();
    sweep->add_option("--m-max", cfg.m_max, "largest number of branch hyperplanes")->required();
    add_common_flags(sweep, cfg, out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 64;
    }
    cfg.subcommand = app.get_subcommands().front()->get_name();

    try {
        mono::run::RunResult result = mono::run::execute(cfg);
        if (out_path.empty()) {
            std::cout << result.text;
        } else {
            std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
            if (!out) {
                std::cerr << "error: cannot open output file " << out_path << std::endl;
                return 64;
            }
            out << result.text;
        }
        return result.exit_code;
    } catch (const mono::BadParameters& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 64;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << std::endl;
        return 70;
    }
}
