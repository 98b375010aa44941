#include "lgcy/cli.hpp"

#include "CLI11.hpp"

#include <iostream>

int main(int argc, char** argv) {
    using namespace lgcy;
    CLI::App app{"Both sides of the LG/CY correspondence for weighted complete intersections"};
    app.require_subcommand(1);

    Command cmd;
    std::string format = "text";
    std::string side;
    std::uint64_t prime = 0;
    std::uint64_t verify_prime = 0;
    int qs_bound = 0;
    unsigned jobs = 0;

    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--prime", prime, "working prime for rank computations");
    app.add_option("--verify-prime", verify_prime, "verification prime");
    app.add_option("--qs-bound", qs_bound, "degree bound for the quasi-smoothness search")->check(CLI::PositiveNumber);
    app.add_option("--jobs", jobs, "worker threads (default: all cores)")->check(CLI::PositiveNumber);
    app.add_option("--side", side, "restrict sectors/bundles to one side")->check(CLI::IsMember({"cy", "lg"}));
    app.add_flag("--exact", cmd.exact, "compute ranks over Q instead of two primes");

    const std::pair<const char*, const char*> verbs[] = {
        {"validate", "check the model's hypotheses"},
        {"sectors", "list sectors with fixed loci and ages"},
        {"cy", "Chen-Ruan Hodge numbers of [X_W/G]"},
        {"lg", "bigraded hybrid LG state space"},
        {"bundles", "Chen-Ruan cohomology of the two bundles"},
        {"pair", "dot diagrams and the pairing certificate"},
        {"verify", "check the correspondence"},
        {"report", "Euler characteristic, symmetry and Thom-shift summaries"},
    };
    for (const auto& [name, help] : verbs) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->fallthrough();
        sub->add_option("input", cmd.input, "model document")->required();
        sub->callback([&cmd, name = std::string(name)] { cmd.verb = *parse_verb(name); });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_code::parse_error;
    }

    cmd.format = format == "json" ? Format::json : Format::text;
    if (prime != 0) cmd.prime = prime;
    if (verify_prime != 0) cmd.verify_prime = verify_prime;
    if (qs_bound != 0) cmd.qs_bound = qs_bound;
    if (jobs != 0) cmd.jobs = jobs;
    if (!side.empty()) cmd.side = side == "cy" ? Side::cy : Side::lg;
    return run(cmd, std::cout, std::cerr);
}
