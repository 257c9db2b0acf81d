#include "plsurf/commands.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

// Reads a file argument; an empty path or "-" reads standard input.
bool read_input(const std::string& path, std::string& text, std::string& err)
{
    if (path.empty() || path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
        return true;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        err = "error: cannot open " + path + "\n";
        return false;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
    return true;
}

int emit(const plsurf::CommandResult& r)
{
    std::cout << r.out << std::flush;
    std::cerr << r.err << std::flush;
    return r.exit_code;
}

} // namespace

int main(int argc, char** argv)
{
    using namespace plsurf;

    CLI::App app{"Thin homotopy of piecewise-linear surfaces: signatures and decisions"};
    app.require_subcommand(1);

    unsigned threads = 1;
    auto* threads_opt = app.add_option("--threads", threads, "Worker threads (default: $PLSURF_THREADS or 1)")
                            ->check(CLI::Range(1u, 1024u));

    std::string in_path, y_path;
    std::size_t level = 4;
    int weight = 6;

    auto* reduce = app.add_subcommand("path-reduce", "Minimal word of a path document");
    reduce->add_option("input", in_path, "Path document (default: stdin)");

    auto* psig = app.add_subcommand("path-sig", "Truncated signature of a path");
    psig->add_option("input", in_path, "Path document (default: stdin)");
    psig->add_option("--level", level, "Truncation level")->capture_default_str();

    auto* ssig = app.add_subcommand("surface-sig", "Boundary signature and abelian current of a kite word");
    ssig->add_option("input", in_path, "Kite-word document (default: stdin)");
    ssig->add_option("--level", level, "Truncation level of the boundary signature")->capture_default_str();
    ssig->add_option("--weight", weight, "Maximal weight of the current")->capture_default_str();

    std::size_t te_level = 4;
    auto* thin = app.add_subcommand("thin-equiv", "Decide thin equivalence of two kite words");
    thin->add_option("x", in_path, "First kite-word document (\"-\" for stdin)")->required();
    thin->add_option("y", y_path, "Second kite-word document; the identity when omitted");
    thin->add_option("--level", te_level, "Signature excerpt level")->capture_default_str();
    thin->add_option("--weight", weight, "Signature excerpt weight")->capture_default_str();

    auto* tri = app.add_subcommand("triangulate", "Compatible triangulation of edges/polygons or of a kite word");
    tri->add_option("input", in_path, "Document (default: stdin)");

    std::string example;
    auto* gen = app.add_subcommand("gen-example", "Print a fixture kite word");
    gen->add_option("name", example, "fold, peiffer, tetrahedron, antipodal, random_null(SEED), random_nonnull(SEED)")
        ->required();

    SelfcheckOptions sc;
    auto* self = app.add_subcommand("selfcheck", "Run the algebraic self-check suites");
    self->add_option("--dual-weight", sc.dual_weight, "Largest weight of the dual-basis suite")->capture_default_str();
    self->add_option("--level", sc.level, "Quotient level of the curvature and Peiffer suites")->capture_default_str();
    self->add_option("--samples", sc.samples, "Random samples per Peiffer axiom")->capture_default_str();
    self->add_option("--seed", sc.seed, "Random seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    if (threads_opt->count() == 0) {
        if (const char* env = std::getenv("PLSURF_THREADS"); env && *env) {
            std::string v = env;
            if (v.size() > 4 || v.find_first_not_of("0123456789") != std::string::npos || std::stoul(v) < 1 ||
                std::stoul(v) > 1024) {
                std::cerr << "error: PLSURF_THREADS must be an integer in [1, 1024]\n";
                return kExitInput;
            }
            threads = static_cast<unsigned>(std::stoul(v));
        }
    }
    Exec exec{threads};
    std::string text, err;
    auto input = [&](const std::string& path) {
        if (!read_input(path, text, err)) {
            std::cerr << err;
            return false;
        }
        return true;
    };

    if (*reduce)
        return input(in_path) ? emit(cmd_path_reduce(text)) : kExitInput;
    if (*psig)
        return input(in_path) ? emit(cmd_path_sig(text, level)) : kExitInput;
    if (*ssig)
        return input(in_path) ? emit(cmd_surface_sig(text, level, weight, exec)) : kExitInput;
    if (*thin) {
        if (in_path == "-" && y_path == "-") {
            std::cerr << "error: only one input can come from stdin\n";
            return kExitInput;
        }
        if (!input(in_path))
            return kExitInput;
        std::string x_text = text;
        std::optional<std::string> y_text;
        if (!y_path.empty()) {
            if (!input(y_path))
                return kExitInput;
            y_text = text;
        }
        return emit(cmd_thin_equiv(x_text, y_text, te_level, weight, exec));
    }
    if (*tri)
        return input(in_path) ? emit(cmd_triangulate(text, exec)) : kExitInput;
    if (*gen)
        return emit(cmd_gen_example(example));
    if (*self)
        return emit(cmd_selfcheck(sc, exec));
    return kExitInput;
}
