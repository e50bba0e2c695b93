#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "artgallery/artgallery.hpp"

using namespace artgallery;

namespace {

enum Exit { Ok = 0, VerifyFailed = 1, InputError = 2, Infeasible = 3 };

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw ParseError("cannot write " + path);
}

Rational epsilon_from(const std::string& text) {
    Rational e = text.empty() ? default_epsilon() : parse_rational(text);
    if (!(e > 0)) throw ParseError("epsilon must be positive");
    return e;
}

CnfFormula formula_of(const std::variant<CubicalComplex, CnfFormula>& input) {
    if (const auto* k = std::get_if<CubicalComplex>(&input)) return dnf_to_minimal_cnf(complex_to_dnf(*k));
    return std::get<CnfFormula>(input);
}

CoverageMode mode_from(const std::string& m) {
    if (m == "witness") return CoverageMode::Witness;
    if (m == "exact") return CoverageMode::Exact;
    if (m == "boundary") return CoverageMode::Boundary;
    throw ParseError("unknown coverage mode " + m);
}

}  // namespace

int run(int argc, char** argv) {
    CLI::App app{"Compile cubical complexes and CNF formulas into art galleries and verify them."};
    app.require_subcommand(1);

    std::string input, output, eps_text, complex_path, mode_text = "witness";
    std::uint64_t seed = 1;
    int on_samples = 20, off_samples = 100, genus = 0;
    bool orientable = false, nonorientable = false, no_highlight = false;
    double stroke = 0.05;

    auto* compile_cmd = app.add_subcommand("compile", "complex or CNF file to gallery file");
    compile_cmd->add_option("input", input, "complex or CNF file")->required();
    compile_cmd->add_option("-o,--output", output, "gallery file (default stdout)");
    compile_cmd->add_option("--epsilon", eps_text, "clearance parameter (default $ARTGALLERY_EPSILON or 1/16)");

    auto* surface_cmd = app.add_subcommand("compile-surface", "gallery for a closed surface of given genus");
    surface_cmd->add_option("--genus", genus, "genus n >= 2")->required();
    auto* o_flag = surface_cmd->add_flag("--orientable", orientable, "connected sum of tori");
    auto* no_flag = surface_cmd->add_flag("--nonorientable", nonorientable, "connected sum of projective planes");
    o_flag->excludes(no_flag);
    surface_cmd->add_option("-o,--output", output, "gallery file (default stdout)");
    surface_cmd->add_option("--epsilon", eps_text, "clearance parameter");

    auto* verify_cmd = app.add_subcommand("verify", "check a gallery against its formula and write a report");
    verify_cmd->add_option("gallery", input, "gallery file")->required();
    verify_cmd->add_option("--complex", complex_path, "source complex; enables sampling on its faces");
    verify_cmd->add_option("--seed", seed, "random seed");
    verify_cmd->add_option("--on", on_samples, "samples per maximal face (or satisfying grid points)")->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--off", off_samples, "samples off the solution set")->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--mode", mode_text, "witness, boundary or exact");
    verify_cmd->add_option("-o,--output", output, "report file (default stdout)");

    auto* classify_cmd = app.add_subcommand("classify", "surface type of a formula's solution set");
    classify_cmd->add_option("input", input, "gallery, CNF or complex file")->required();

    auto* render_cmd = app.add_subcommand("render", "SVG drawing of a gallery");
    render_cmd->add_option("gallery", input, "gallery file")->required();
    render_cmd->add_option("-o,--output", output, "SVG file (default stdout)");
    render_cmd->add_option("--stroke-width", stroke, "stroke width")->check(CLI::PositiveNumber);
    render_cmd->add_flag("--no-highlight", no_highlight, "do not highlight guard segments");

    auto* stats_cmd = app.add_subcommand("stats", "vertex and guard counts of a gallery");
    stats_cmd->add_option("gallery", input, "gallery file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? Ok : InputError;
    }

    try {
        if (*compile_cmd) {
            auto f = formula_of(read_input(read_file(input)));
            write_output(output, write_gallery(compile(f, epsilon_from(eps_text))));
        } else if (*surface_cmd) {
            if (orientable == nonorientable) throw ParseError("pass exactly one of --orientable, --nonorientable");
            write_output(output, write_gallery(compile_surface(genus, orientable, epsilon_from(eps_text))));
        } else if (*verify_cmd) {
            Gallery g = read_gallery(read_file(input));
            CoverageMode mode = mode_from(mode_text);
            SampleReport rep = complex_path.empty()
                                   ? verify_formula_grid(g, on_samples, off_samples, seed, mode)
                                   : sample_solution_space(g, read_complex(read_file(complex_path)), on_samples,
                                                           off_samples, seed, mode);
            write_output(output, write_report(rep));
            if (!rep.ok()) return VerifyFailed;
        } else if (*classify_cmd) {
            std::string text = read_file(input);
            if (text.rfind("artgallery-complex", 0) == 0) {
                std::cout << describe(classify_surface(cell_complex_of(read_complex(text)))) << "\n";
            } else {
                CnfFormula f = text.rfind("artgallery-gallery", 0) == 0 ? read_gallery(text).formula : read_cnf(text);
                std::cout << describe(classify_surface(build_cell_complex(f))) << "\n";
            }
        } else if (*render_cmd) {
            RenderOptions opt;
            opt.stroke_width = stroke;
            opt.highlight_segments = !no_highlight;
            write_output(output, render_svg(read_gallery(read_file(input)), opt));
        } else if (*stats_cmd) {
            Gallery g = read_gallery(read_file(input));
            std::cout << "vertices " << vertex_count(g) << "\n";
            std::cout << "guards " << g.k() << "\n";
            std::cout << "variables " << g.formula.n << "\n";
            std::cout << "clauses " << g.formula.clauses.size() << "\n";
            std::cout << "copy_gadgets " << g.copy_gadgets.size() << "\n";
            std::cout << "epsilon " << to_string(g.epsilon) << "\n";
        }
    } catch (const InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << "\nhint: retry with a smaller --epsilon\n";
        return Infeasible;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return InputError;
    }
    return Ok;
}

int main(int argc, char** argv) { return run(argc, argv); }
