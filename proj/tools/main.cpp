#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "cosetq/errors.hpp"

int main(int argc, char** argv) {
    using namespace cosetq::cli;

    CLI::App app{"exact coset-weight generating functions and sparse-code rate bounds"};
    app.require_subcommand(1);

    CwgfArgs cwgf;
    auto* c_cwgf = app.add_subcommand("cwgf", "coset weight distribution of a code file");
    c_cwgf->add_option("--code", cwgf.code_path, "code file: 'n k' header, then k rows of 0/1")
        ->required();
    c_cwgf->add_option("--out", cwgf.out, "distribution CSV path");
    c_cwgf->add_option("--q-out", cwgf.q_out, "Q(lambda) curve CSV path");
    c_cwgf->add_option("--lambda-grid", cwgf.lambda_grid, "a:b:step, default 0.05:1:0.05");
    c_cwgf->add_option("--limit", cwgf.limit, "enumeration length cap");

    BoundsArgs bounds;
    auto* c_bounds = app.add_subcommand("bounds", "rate-versus-distance bound table");
    c_bounds->add_option("--w", bounds.w, "parity-check row weight");
    c_bounds->add_option("--curves", bounds.curves, "comma-separated curve names, default all");
    c_bounds->add_option("--delta-min", bounds.delta_min, "first relative distance");
    c_bounds->add_option("--delta-max", bounds.delta_max, "last relative distance");
    c_bounds->add_option("--delta-step", bounds.delta_step, "grid step");
    c_bounds->add_flag("--shortened", bounds.shortened, "apply the shortening transform");
    c_bounds->add_option("--out", bounds.out, "CSV path, default stdout");

    VerifyArgs verify;
    auto* c_verify = app.add_subcommand("verify", "run a verification suite");
    c_verify->add_option("--suite", verify.suite,
                         "identities, lemmas, ball, localfactor or theorem; default all");
    c_verify->add_option("--w", verify.w, "generator weight cap");
    c_verify->add_option("--n", verify.n, "length ceiling, 0 = suite default");
    c_verify->add_option("--samples", verify.samples, "random sample count, 0 = suite default");
    c_verify->add_option("--seed", verify.seed, "random seed");
    c_verify->add_option("--lambda-grid", verify.lambda_grid, "a:b:step");
    c_verify->add_option("--limit", verify.limit, "enumeration length cap");
    c_verify->add_option("--out", verify.out, "per-check results CSV path");

    SearchArgs search;
    auto* c_search = app.add_subcommand("search", "extremal-ratio search over covered spans");
    c_search->add_option("--w", search.w, "generator weight cap");
    c_search->add_option("--n", search.n, "code length (w must divide n)");
    c_search->add_option("--mode", search.mode, "exhaustive or random");
    c_search->add_option("--samples", search.samples, "sample count for random mode");
    c_search->add_option("--seed", search.seed, "random seed");
    c_search->add_option("--lambda-grid", search.lambda_grid, "a:b:step");
    c_search->add_option("--max-spans", search.max_spans, "enumeration budget");
    c_search->add_option("--limit", search.limit, "enumeration length cap");
    c_search->add_option("--out", search.out, "summary CSV path");
    c_search->add_option("--witness", search.witness, "write the extremal code here");

    Figure1Args figure1;
    auto* c_figure1 = app.add_subcommand("figure1", "exponent and rate comparison table, w = 3");
    c_figure1->add_option("--out", figure1.out, "CSV path");
    c_figure1->add_option("--points", figure1.points, "number of grid rows");

    int rc = 0;
    c_cwgf->callback([&] { rc = cmd_cwgf(cwgf, std::cout); });
    c_bounds->callback([&] { rc = cmd_bounds(bounds, std::cout); });
    c_verify->callback([&] { rc = cmd_verify(verify, std::cout); });
    c_search->callback([&] { rc = cmd_search(search, std::cout); });
    c_figure1->callback([&] { rc = cmd_figure1(figure1, std::cout); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const cosetq::parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const cosetq::domain_error& e) {  // includes catalog_error
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const cosetq::precondition_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const cosetq::dimension_mismatch& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const cosetq::certificate_error& e) {
        std::cerr << "verification failed: " << e.what() << '\n';
        return 1;
    } catch (const cosetq::resource_limit_error& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return 3;
    } catch (const cosetq::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return rc;
}
