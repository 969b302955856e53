#include "cli.hpp"

#include <stepup/chi.hpp>
#include <stepup/dump.hpp>
#include <stepup/errors.hpp>
#include <stepup/exact.hpp>
#include <stepup/sigma.hpp>
#include <stepup/sources.hpp>
#include <stepup/verify.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>
#include <sstream>

namespace stepup::cli {

namespace {

std::string format_fixed(double value, int digits)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, digits);
    return std::string(buf, res.ptr);
}

std::vector<int> parse_int_list(const std::string& text)
{
    std::vector<int> values;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string item = text.substr(pos, comma - pos);
        int v = 0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size())
            throw ParameterError("bad list entry '" + item + "'");
        values.push_back(v);
        pos = comma + 1;
    }
    return values;
}

DumpFormat parse_format(const std::string& f)
{
    return f == "json" ? DumpFormat::json : DumpFormat::csv;
}

} // namespace

std::string growth_table(const std::vector<int>& bit_lengths)
{
    std::ostringstream out;
    out << "n,N,t,m,sigma_palette,chi_palette,bound,ratio\n";
    for (const int n : bit_lengths) {
        if (n < 2 || n > 64)
            throw ParameterError("growth: bit lengths must lie in [2, 64]");
        const SigmaParams params = select_params(static_cast<std::uint64_t>(n));
        const std::uint64_t sigma = sigma_palette(params);
        // Every gamma pair occurs with both orientations once n >= 2.
        const std::uint64_t chi = 2 * sigma;
        const double ln_N = n * std::log(2.0);
        const double ratio = static_cast<double>(chi) / std::exp(std::sqrt(std::log(ln_N)));
        out << n << ',' << to_string(static_cast<u128>(1) << n) << ',' << params.t << ',' << params.m << ','
            << sigma << ',' << chi << ',' << to_string(2 * params.palette_bound()) << ',' << format_fixed(ratio, 6)
            << '\n';
    }
    return out.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"stepup: explicit (5,3)-colorings of complete 3-graphs"};
    app.require_subcommand(1);

    std::uint64_t n = 0;
    auto* params_cmd = app.add_subcommand("params", "Print sigma parameters for K_n");
    params_cmd->add_option("--n", n, "Number of vertices")->required();

    std::string kind;
    std::string out_path;
    std::string format = "csv";
    unsigned workers = 0;
    auto* gen_cmd = app.add_subcommand("generate", "Write a full coloring dump");
    gen_cmd->add_option("--kind", kind)->required()->check(CLI::IsMember({"sigma", "chi"}));
    gen_cmd->add_option("--n", n, "Vertex count (N for chi)")->required();
    gen_cmd->add_option("--out", out_path)->required();
    gen_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    gen_cmd->add_option("--workers", workers);

    std::string in_path;
    int p = 0;
    int q = 0;
    std::uint64_t sample = 0;
    std::uint64_t seed = 0;
    auto* ver_cmd = app.add_subcommand("verify", "Check the (p,q) property");
    auto* in_opt = ver_cmd->add_option("--in", in_path, "Coloring dump");
    auto* kind_opt = ver_cmd->add_option("--kind", kind)->check(CLI::IsMember({"sigma", "chi"}));
    auto* vn_opt = ver_cmd->add_option("--n", n);
    ver_cmd->add_option("--p", p)->required();
    ver_cmd->add_option("--q", q)->required();
    auto* sample_opt = ver_cmd->add_option("--sample", sample, "Number of random p-subsets");
    auto* seed_opt = ver_cmd->add_option("--seed", seed);
    ver_cmd->add_option("--workers", workers);
    in_opt->excludes(kind_opt)->excludes(vn_opt);
    kind_opt->needs(vn_opt);
    sample_opt->needs(seed_opt);

    std::string n_list;
    auto* growth_cmd = app.add_subcommand("growth", "Palette growth table (CSV)");
    growth_cmd->add_option("--n-list", n_list, "Comma-separated bit lengths n (N = 2^n)");

    int k = 0;
    std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();
    double max_seconds = std::numeric_limits<double>::infinity();
    std::string cert_path = "certificate.csv";
    int exact_n = 0;
    auto* exact_cmd = app.add_subcommand("exact", "Exact minimum colors for tiny n");
    exact_cmd->add_option("--n", exact_n)->required();
    exact_cmd->add_option("--k", k)->required();
    exact_cmd->add_option("--p", p)->required();
    exact_cmd->add_option("--q", q)->required();
    exact_cmd->add_option("--max-nodes", max_nodes);
    exact_cmd->add_option("--max-seconds", max_seconds);
    exact_cmd->add_option("--out", cert_path, "Certificate dump path");
    exact_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (params_cmd->parsed()) {
            const SigmaParams sp = select_params(n);
            out << "t=" << sp.t << " m=" << sp.m << " nprime=" << sp.n_prime << " bound=" << to_string(sp.palette_bound())
                << '\n';
            return exit_ok;
        }
        if (gen_cmd->parsed()) {
            const ColoringDump dump = kind == "sigma" ? make_sigma_dump(n, workers) : make_chi_dump(n, workers);
            write_dump(dump, out_path, parse_format(format));
            out << "wrote " << dump.edge_colors.size() << " edges, palette " << dump.palette_size() << " to " << out_path
                << '\n';
            return exit_ok;
        }
        if (ver_cmd->parsed()) {
            if (in_opt->count() == 0 && kind_opt->count() == 0) {
                err << "verify: give --in PATH or --kind K --n N\n";
                return exit_usage;
            }
            VerifyMode mode = Exhaustive{};
            if (sample_opt->count() != 0)
                mode = Sampled{sample, seed};
            VerifyReport report;
            if (in_opt->count() != 0) {
                ColoringDump dump = read_dump(in_path);
                const TableSource src(dump.k, dump.vertices, std::move(dump.edge_colors));
                report = verify_pq(src, p, q, mode, workers);
            } else if (kind == "sigma") {
                report = verify_pq(SigmaSource(select_params(n)), p, q, mode, workers);
            } else {
                report = verify_pq(ChiSource(n), p, q, mode, workers);
            }
            out << report.to_json() << '\n';
            return report.passed() ? exit_ok : exit_verify_failed;
        }
        if (growth_cmd->parsed()) {
            out << growth_table(parse_int_list(n_list));
            return exit_ok;
        }
        if (exact_cmd->parsed()) {
            SearchBudget budget;
            budget.max_nodes = max_nodes;
            budget.max_seconds = max_seconds;
            const ExactResult r = exact_min_colors(exact_n, k, p, q, budget);
            out << "status=" << (r.status == ExactStatus::exact ? "exact" : "lower_bound") << " value=" << r.value
                << " nodes=" << r.nodes_expanded << '\n';
            if (r.certificate) {
                const ColoringDump dump =
                    make_table_dump("certificate", k, static_cast<std::uint64_t>(exact_n), *r.certificate);
                write_dump(dump, cert_path, parse_format(format));
                out << "certificate=" << cert_path << '\n';
            }
            return exit_ok;
        }
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return exit_io;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

} // namespace stepup::cli
