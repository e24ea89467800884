#include "fordcf/cli.hpp"

#include "fordcf/continued_fraction.hpp"
#include "fordcf/real_spec.hpp"
#include "fordcf/report_json.hpp"
#include "fordcf/svg.hpp"
#include "fordcf/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <thread>

namespace fordcf {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInconsistent = 2;

struct RenderOptions {
    std::string window;
    std::size_t max_den = 20;
    std::size_t width = 800;
    std::vector<std::string> highlight;
    std::string output = "-";
};

void add_render_options(CLI::App* cmd, RenderOptions& opts) {
    cmd->add_option("--window", opts.window, "Window LO..HI (default 0..1)");
    cmd->add_option("--max-den", opts.max_den, "Largest denominator in the Ford field")
        ->capture_default_str();
    cmd->add_option("--width", opts.width, "Width in pixels (>= 64)")->capture_default_str();
    cmd->add_option("--highlight", opts.highlight, "Bases to highlight in the field");
    cmd->add_option("-o,--output", opts.output, "Output file, '-' for standard output")
        ->capture_default_str();
}

RenderSpec to_spec(const RenderOptions& opts) {
    RenderSpec spec;
    if (!opts.window.empty()) {
        std::tie(spec.lo, spec.hi) = parse_window(opts.window);
    }
    spec.max_den = opts.max_den;
    spec.width_px = opts.width;
    for (const std::string& h : opts.highlight) {
        spec.highlight.push_back(parse_rational(h));
    }
    return spec;
}

void emit(const std::string& document, const std::string& path, std::ostream& out) {
    if (path == "-") {
        out << document;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw std::invalid_argument("cannot open '" + path + "' for writing");
    }
    file << document;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Continued fractions, Ford circles and best approximations of the second kind",
                 "fordcf"};
    app.require_subcommand(1);
    app.footer(std::string("<real-spec>: ") + std::string(kRealSpecGrammar) +
               "\nArguments starting with '-' need '--' before them or --opt=value.");

    std::string real_arg;
    std::string x_arg;
    std::size_t terms = 10;
    bool exhaustive = false;

    auto* cf_cmd = app.add_subcommand("cf", "Print the continued fraction expansion");
    cf_cmd->add_option("real", real_arg, "<real-spec>")->required();
    cf_cmd->add_option("-n,--terms", terms, "Partial quotients shown for infinite expansions")
        ->capture_default_str();

    std::size_t count = 10;
    auto* conv_cmd = app.add_subcommand("convergents", "Print convergents A_n/B_n");
    conv_cmd->add_option("real", real_arg, "<real-spec>")->required();
    conv_cmd->add_option("-n,--count", count, "Number of convergents")->capture_default_str();

    auto* check_cmd = app.add_subcommand("check", "Evaluate the five equivalent statements");
    check_cmd->add_option("x", x_arg, "<a>/<b>")->required();
    check_cmd->add_option("real", real_arg, "<real-spec>")->required();
    check_cmd->add_flag("--exhaustive", exhaustive, "Scan all candidate numerators");

    std::size_t max_den_x = 5;
    std::size_t max_den_alpha = 5;
    std::string window = "0..1";
    std::size_t threads = std::max(1u, std::thread::hardware_concurrency());
    auto* verify_cmd = app.add_subcommand("verify", "Sweep all rational pairs in a window");
    verify_cmd->add_option("--max-den-x", max_den_x)->required();
    verify_cmd->add_option("--max-den-alpha", max_den_alpha)->required();
    verify_cmd->add_option("--window", window, "LO..HI")->capture_default_str();
    verify_cmd->add_option("--threads", threads, "Worker threads");
    verify_cmd->add_flag("--exhaustive", exhaustive, "Scan all candidate numerators");

    RenderOptions ropts;
    std::size_t depth = 4;
    auto* render_cmd = app.add_subcommand("render", "Write an SVG figure");
    render_cmd->require_subcommand(1);
    auto* field_cmd = render_cmd->add_subcommand("field", "Ford circles in a window");
    add_render_options(field_cmd, ropts);
    auto* chain_cmd = render_cmd->add_subcommand("chain", "Continued fraction chain of a real");
    chain_cmd->add_option("real", real_arg, "<real-spec>")->required();
    chain_cmd->add_option("--depth", depth, "Chain circles to draw")->capture_default_str();
    add_render_options(chain_cmd, ropts);
    auto* witness_cmd = render_cmd->add_subcommand("witness", "Tangent witness for x and alpha");
    witness_cmd->add_option("x", x_arg, "<a>/<b>")->required();
    witness_cmd->add_option("real", real_arg, "<real-spec>")->required();
    add_render_options(witness_cmd, ropts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    CandidateMode mode = exhaustive ? CandidateMode::Exhaustive : CandidateMode::Pruned;
    try {
        if (*cf_cmd) {
            out << cf_of_real(parse_real_spec(real_arg)).to_string(terms) << '\n';
            return kExitOk;
        }
        if (*conv_cmd) {
            ContinuedFraction cf = cf_of_real(parse_real_spec(real_arg));
            for (const Convergent& c : convergents(cf, count)) {
                out << c.index << ' ' << c.A.get_str() << '/' << c.B.get_str() << '\n';
            }
            return kExitOk;
        }
        if (*check_cmd) {
            TheoremUReport report =
                theorem_u_check(parse_rational(x_arg), parse_real_spec(real_arg), mode);
            out << to_json(report).dump(2) << '\n';
            return report.consistent ? kExitOk : kExitInconsistent;
        }
        if (*verify_cmd) {
            SweepParams params;
            params.max_den_x = max_den_x;
            params.max_den_alpha = max_den_alpha;
            std::tie(params.lo, params.hi) = parse_window(window);
            params.mode = mode;
            params.threads = threads;
            SweepReport report = verify_sweep(params);
            out << to_json(report).dump(2) << '\n';
            return report.inconsistencies.empty() ? kExitOk : kExitInconsistent;
        }
        if (*field_cmd) {
            emit(render_ford_field(to_spec(ropts)), ropts.output, out);
            return kExitOk;
        }
        if (*chain_cmd) {
            emit(render_chain(parse_real_spec(real_arg), depth, to_spec(ropts)), ropts.output,
                 out);
            return kExitOk;
        }
        if (*witness_cmd) {
            Rational x = parse_rational(x_arg);
            RealNumber alpha = parse_real_spec(real_arg);
            RenderSpec spec = to_spec(ropts);
            if (ropts.window.empty()) {
                // Fit the unit-aligned window around x and its witness.
                auto y = statement_v_witness(x, alpha);
                Rational far = y ? *y : x;
                spec.lo = Rational(floor(std::min(x, far)));
                spec.hi = Rational(ceil(std::max(x, far)));
                if (spec.lo == spec.hi) spec.hi += Rational(1);
            }
            emit(render_statement_v(x, alpha, spec), ropts.output, out);
            return kExitOk;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace fordcf
