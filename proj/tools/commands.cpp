#include "commands.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "cosetq/bounds.hpp"
#include "cosetq/cwgf.hpp"
#include "cosetq/errors.hpp"
#include "cosetq/search.hpp"
#include "cosetq/verify.hpp"

namespace cosetq::cli {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw error("cannot open '" + path + "' for writing");
    return out;
}

std::vector<Rational> grid_from_arg(const std::string& arg) {
    return arg.empty() ? default_lambda_grid() : parse_lambda_grid(arg);
}

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) parts.push_back(item);
    }
    return parts;
}

void write_checks_csv(std::ostream& out, const std::vector<SuiteReport>& reports) {
    out << "suite,check,pass,slack,detail\n";
    for (const auto& rep : reports) {
        for (const auto& c : rep.checks) {
            std::string detail = c.detail;
            for (char& ch : detail)
                if (ch == ',') ch = ';';
            out << rep.suite << ',' << c.name << ',' << (c.pass ? 1 : 0) << ','
                << format_g12(c.slack) << ',' << detail << '\n';
        }
    }
}

}  // namespace

int cmd_cwgf(const CwgfArgs& args, std::ostream& log) {
    CodeFile file = load_code_file(args.code_path);
    LinearCode code = file.span();
    CosetWeightDistribution dist = coset_weight_distribution(code, args.limit);
    log << "length " << code.length() << ", dimension " << code.dimension() << ", "
        << dist.total().get_str() << " cosets\n";
    log << "weights:";
    for (int j = 0; j <= dist.n; ++j)
        if (dist.counts[j] != 0) log << ' ' << j << ':' << dist.counts[j].get_str();
    log << '\n';
    if (!args.out.empty()) {
        auto out = open_out(args.out);
        write_distribution_csv(out, dist);
        log << "distribution written to " << args.out << '\n';
    }
    if (!args.q_out.empty()) {
        auto out = open_out(args.q_out);
        write_q_curve_csv(out, dist, grid_from_arg(args.lambda_grid));
        log << "Q curve written to " << args.q_out << '\n';
    }
    return 0;
}

int cmd_bounds(const BoundsArgs& args, std::ostream& log) {
    if (!(args.delta_min > 0 && args.delta_min <= args.delta_max && args.delta_max <= 0.5))
        throw domain_error("need 0 < delta-min <= delta-max <= 0.5");
    if (!(args.delta_step > 0)) throw domain_error("delta-step must be positive");

    std::vector<BoundCurve> curves;
    auto names = args.curves.empty() ? bound_catalog() : split_csv(args.curves);
    for (const auto& name : names) curves.push_back({name, args.w, {}});

    std::vector<double> grid;
    for (double d = args.delta_min; d <= args.delta_max + 1e-12; d += args.delta_step)
        grid.push_back(std::min(d, 0.5));

    if (!args.out.empty()) {
        auto out = open_out(args.out);
        write_bound_table_csv(out, curves, grid, args.shortened, args.w);
        log << "bound table (" << grid.size() << " rows) written to " << args.out << '\n';
    } else {
        write_bound_table_csv(log, curves, grid, args.shortened, args.w);
    }
    return 0;
}

int cmd_verify(const VerifyArgs& args, std::ostream& log) {
    SuiteOptions opt;
    opt.w = args.w;
    opt.n = args.n;
    opt.samples = args.samples;
    opt.seed = args.seed;
    opt.enum_limit = args.limit;
    if (!args.lambda_grid.empty()) opt.lambda_grid = parse_lambda_grid(args.lambda_grid);

    std::vector<SuiteReport> reports;
    if (args.suite.empty()) {
        for (const auto& name : suite_names()) reports.push_back(run_suite(name, opt));
    } else {
        reports.push_back(run_suite(args.suite, opt));
    }

    bool all_ok = true;
    for (const auto& rep : reports) {
        for (const auto& c : rep.checks) {
            log << (c.pass ? "[PASS] " : "[FAIL] ") << rep.suite << ": " << c.name;
            if (c.slack != 0) log << " (slack " << format_g12(c.slack) << ')';
            if (!c.detail.empty()) log << " -- " << c.detail;
            log << '\n';
            all_ok = all_ok && c.pass;
        }
    }
    if (!args.out.empty()) {
        auto out = open_out(args.out);
        write_checks_csv(out, reports);
        log << "results written to " << args.out << '\n';
    }
    log << (all_ok ? "all checks passed\n" : "CHECKS FAILED\n");
    return all_ok ? 0 : 1;
}

int cmd_search(const SearchArgs& args, std::ostream& log) {
    SearchConfig cfg;
    cfg.n = args.n;
    cfg.w = args.w;
    if (args.mode == "exhaustive") {
        cfg.mode = SearchMode::exhaustive;
    } else if (args.mode == "random") {
        cfg.mode = SearchMode::random_sample;
    } else {
        throw domain_error("mode must be 'exhaustive' or 'random', got '" + args.mode + "'");
    }
    cfg.sample_count = args.samples;
    cfg.seed = args.seed;
    if (!args.lambda_grid.empty()) cfg.lambda_grid = parse_lambda_grid(args.lambda_grid);
    cfg.limits.max_spans = args.max_spans;
    cfg.limits.enum_limit = args.limit;

    SearchResult res = conjecture_check(cfg);
    log << "tested " << res.codes_tested << " codes (n = " << args.n << ", w = " << args.w << ", "
        << args.mode << ")\n";
    log << "max ratio " << format_g12(res.max_ratio)
        << (res.max_is_exactly_one ? " (exactly 1)" : "") << ", verdict: " << res.verdict << '\n';

    if (!args.witness.empty()) {
        auto out = open_out(args.witness);
        write_witness_file(out, res.witness);
        log << "witness written to " << args.witness << '\n';
    }
    if (!args.out.empty()) {
        auto out = open_out(args.out);
        out << "n,w,mode,codes_tested,max_ratio,exactly_one,verdict\n";
        out << args.n << ',' << args.w << ',' << args.mode << ',' << res.codes_tested << ','
            << format_g12(res.max_ratio) << ',' << (res.max_is_exactly_one ? 1 : 0) << ','
            << res.verdict << '\n';
        log << "summary written to " << args.out << '\n';
    }
    return res.verdict == "confirmed" ? 0 : 1;
}

int cmd_figure1(const Figure1Args& args, std::ostream& log) {
    if (args.points < 1) throw domain_error("points must be positive");
    auto out = open_out(args.out);
    out << "rho,ball_our_w3,ball_iceland_w3,delta,rate_our_w3,rate_iceland_w3\n";
    for (int i = 1; i <= args.points; ++i) {
        double delta = 0.5 * i / (args.points + 1);
        double rho = rho_of_delta(delta).rho;
        double ball_our = ball_exponent_bound(3, rho, BallVariant::w3).value;
        double ball_is = ball_exponent_is_w3(rho);
        double rate_our = evaluate_bound({"new_w3", 3, {}}, delta);
        double rate_is = evaluate_bound({"is_w3", 3, {}}, delta);
        out << format_g12(rho) << ',' << format_g12(ball_our) << ',' << format_g12(ball_is) << ','
            << format_g12(delta) << ',' << format_g12(rate_our) << ',' << format_g12(rate_is)
            << '\n';
    }
    log << args.points << " rows written to " << args.out << '\n';
    return 0;
}

}  // namespace cosetq::cli
