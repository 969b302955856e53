#include "cli.hpp"

#include <json.hpp>

#include <doctest.h>

#include <fstream>
#include <sstream>

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = stepup::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::size_t count_lines(const std::string& s)
{
    return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

} // namespace

TEST_CASE("params prints one key=value line")
{
    CHECK(run({"params", "--n", "6"}).out == "t=1 m=6 nprime=6 bound=144\n");
    CHECK(run({"params", "--n", "2"}).out == "t=1 m=2 nprime=2 bound=16\n");
    const auto big = run({"params", "--n", "1000000000000"});
    CHECK(big.code == 0);
    CHECK(big.out == "t=12 m=59 nprime=1119487075980 bound=58401488896\n");
    CHECK(run({"params", "--n", "18446744073709551615"}).code == 2);
    CHECK(run({"params", "--n", "1"}).code == 2);
    CHECK(run({"params"}).code == 2);
    CHECK(run({}).code == 2);
}

TEST_CASE("generate writes deterministic dumps")
{
    REQUIRE(run({"generate", "--kind", "sigma", "--n", "6", "--out", "cli_sigma6.csv"}).code == 0);
    CHECK(count_lines(slurp("cli_sigma6.csv")) == 16);
    REQUIRE(run({"generate", "--kind", "chi", "--n", "16", "--out", "cli_chi16.csv", "--workers", "1"}).code == 0);
    CHECK(count_lines(slurp("cli_chi16.csv")) == 561);
    const std::string first = slurp("cli_chi16.csv") + slurp("cli_chi16.csv.palette.json");
    REQUIRE(run({"generate", "--kind", "chi", "--n", "16", "--out", "cli_chi16.csv", "--workers", "3"}).code == 0);
    CHECK(slurp("cli_chi16.csv") + slurp("cli_chi16.csv.palette.json") == first);

    REQUIRE(run({"generate", "--kind", "chi", "--n", "16", "--out", "cli_chi16.json", "--format", "json"}).code == 0);
    const auto doc = nlohmann::json::parse(slurp("cli_chi16.json"));
    CHECK(doc["edges"].size() == 560);
    CHECK(doc["palette_size"] == 12);

    CHECK(run({"generate", "--kind", "chi", "--n", "5000", "--out", "x.csv"}).code == 2);
    CHECK(run({"generate", "--kind", "sigma", "--n", "6", "--out", "/nonexistent/x.csv"}).code == 3);
    CHECK(run({"generate", "--kind", "tau", "--n", "6", "--out", "x.csv"}).code == 2);
}

TEST_CASE("verify from construction and from file")
{
    const auto chi = run({"verify", "--kind", "chi", "--n", "32", "--p", "5", "--q", "3"});
    CHECK(chi.code == 0);
    const auto report = nlohmann::json::parse(chi.out);
    CHECK(report["verdict"] == "pass");
    CHECK(report["checked"] == 201376);

    const auto sigma = run({"verify", "--kind", "sigma", "--n", "100", "--p", "3", "--q", "2"});
    CHECK(sigma.code == 0);

    REQUIRE(run({"generate", "--kind", "chi", "--n", "32", "--out", "cli_chi32.csv"}).code == 0);
    const auto from_file = run({"verify", "--in", "cli_chi32.csv", "--p", "5", "--q", "3"});
    CHECK(from_file.code == 0);
    CHECK(from_file.out == chi.out);

    {
        std::ofstream out("cli_constant.csv");
        out << "u,v,w,color_id\n";
        for (int w = 3; w <= 6; ++w)
            for (int v = 2; v < w; ++v)
                for (int u = 1; u < v; ++u)
                    out << u << ',' << v << ',' << w << ",0\n";
    }
    const auto constant = run({"verify", "--in", "cli_constant.csv", "--p", "5", "--q", "3"});
    CHECK(constant.code == 1);
    CHECK(nlohmann::json::parse(constant.out)["verdict"] == "fail");

    {
        std::ofstream out("cli_broken.csv");
        out << "u,v,w,color_id\n1,2,3,0\n1,2,3,0\n";
    }
    CHECK(run({"verify", "--in", "cli_broken.csv", "--p", "3", "--q", "1"}).code == 2);
    CHECK(run({"verify", "--in", "cli_missing.csv", "--p", "3", "--q", "1"}).code == 3);
    CHECK(run({"verify", "--p", "5", "--q", "3"}).code == 2);
    // --sample needs --seed.
    CHECK(run({"verify", "--kind", "chi", "--n", "64", "--p", "5", "--q", "3", "--sample", "10"}).code == 2);
}

TEST_CASE("sampled verify is reproducible across worker counts")
{
    const auto a = run({"verify", "--kind", "chi", "--n", "1024", "--p", "5", "--q", "3", "--sample", "5000",
        "--seed", "17", "--workers", "1"});
    const auto b = run({"verify", "--kind", "chi", "--n", "1024", "--p", "5", "--q", "3", "--sample", "5000",
        "--seed", "17", "--workers", "4"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(nlohmann::json::parse(a.out)["checked"] == 5000);
}

TEST_CASE("growth table")
{
    const auto g = run({"growth", "--n-list", "4"});
    CHECK(g.code == 0);
    CHECK(g.out == "n,N,t,m,sigma_palette,chi_palette,bound,ratio\n4,16,1,4,6,12,128,4.371317\n");
    const auto empty = run({"growth", "--n-list", ""});
    CHECK(empty.code == 0);
    CHECK(empty.out == "n,N,t,m,sigma_palette,chi_palette,bound,ratio\n");
    CHECK(run({"growth", "--n-list", "4,x"}).code == 2);
    CHECK(run({"growth", "--n-list", "65"}).code == 2);
}

TEST_CASE("exact prints a result and writes the certificate")
{
    const auto r = run({"exact", "--n", "5", "--k", "3", "--p", "5", "--q", "3", "--out", "cli_cert.csv"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("status=exact value=3 nodes=", 0) == 0);
    CHECK(run({"verify", "--in", "cli_cert.csv", "--p", "5", "--q", "3"}).code == 0);

    const auto t = run({"exact", "--n", "8", "--k", "3", "--p", "5", "--q", "3", "--max-seconds", "1", "--out",
        "cli_cert8.csv"});
    CHECK(t.code == 0);
    CHECK((t.out.rfind("status=exact", 0) == 0 || t.out.rfind("status=lower_bound", 0) == 0));
    CHECK(run({"exact", "--n", "9", "--k", "3", "--p", "5", "--q", "3"}).code == 2);
}
