#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include "doctest.h"
#include "zetatail/distribution.hpp"

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string temp_path(const std::string& tag) {
    static int counter = 0;
    const auto dir = std::filesystem::temp_directory_path();
    return (dir / ("ztcli_" + std::to_string(::getpid()) + "_" + tag + "_" +
                   std::to_string(counter++) + ".txt"))
        .string();
}

RunResult run_cli(const std::string& args) {
    RunResult r;
    const std::string out = temp_path("out"), err = temp_path("err");
    const std::string cmd =
        std::string("\"") + ZT_CLI_PATH + "\" " + args + " > \"" + out + "\" 2> \"" + err + "\"";
    const int status = std::system(cmd.c_str());
    r.code = status == -1 ? -1 : (WIFEXITED(status) ? WEXITSTATUS(status) : -1);
    r.out = slurp(out);
    r.err = slurp(err);
    std::filesystem::remove(out);
    std::filesystem::remove(err);
    return r;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == sep) {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    fields.push_back(cur);
    return fields;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

// data rows only: skips '#' metadata and the header row that follows them
std::vector<std::vector<std::string>> data_rows(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    bool header_skipped = false;
    for (const auto& line : lines_of(text)) {
        if (line.empty()) continue;
        if (line[0] == '#') continue;
        if (!header_skipped) {
            header_skipped = true;
            continue;
        }
        rows.push_back(split(line, '\t'));
    }
    return rows;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("eval tabulates the zeta tail family") {
    const auto r = run_cli("eval zeta-tail --a 0 --x 1..5");
    REQUIRE(r.code == 0);
    CHECK(r.out.find("# family=zeta-tail params=a=0") != std::string::npos);
    CHECK(r.out.find("x\tpmf\tcdf\thazard\tmean\tvariance") != std::string::npos);
    const auto rows = data_rows(r.out);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0][0] == "1");
    CHECK(std::fabs(std::stod(rows[0][1]) - 0.644934) < 1e-6);
    double pmf_sum = 0;
    for (const auto& row : rows) pmf_sum += std::stod(row[1]);
    CHECK(std::fabs(pmf_sum - std::stod(rows[4][2])) < 1e-9);
}

TEST_CASE("eval geometric point mass") {
    const auto r = run_cli("eval geometric0 --p 0.857142857 --x 0");
    REQUIRE(r.code == 0);
    const auto rows = data_rows(r.out);
    REQUIRE(rows.size() == 1);
    CHECK(std::fabs(std::stod(rows[0][1]) - 6.0 / 7.0) < 1e-8);
}

TEST_CASE("eval divergent moments print inf") {
    const auto r = run_cli("eval quadratic0 --c 1 --x 0..3");
    REQUIRE(r.code == 0);
    const auto rows = data_rows(r.out);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0][4] == "inf");
    CHECK(rows[0][5] == "inf");
}

TEST_CASE("eval rejects bad input") {
    const auto bad_param = run_cli("eval geometric0 --p 1.5 --x 0..3");
    CHECK(bad_param.code == 2);
    CHECK(bad_param.err.find("0 < p < 1") != std::string::npos);
    const auto missing = run_cli("eval zeta-tail --x 1..5");
    CHECK(missing.code == 2);
    CHECK(missing.err.find("--a") != std::string::npos);
    CHECK(run_cli("eval no-such-family --a 1").code == 2);
    CHECK(run_cli("eval zeta-tail --a 1 --x 5..2").code == 2);
    CHECK(run_cli("eval").code == 2);
}

TEST_CASE("fit reproduces the published geometric row") {
    const auto r = run_cli("fit --region yeongcheon --family geometric0");
    REQUIRE(r.code == 0);
    CHECK(r.out.find("# dataset=yeongcheon n=384") != std::string::npos);
    const auto rows = data_rows(r.out);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0][0] == "geometric0");
    CHECK(std::fabs(std::stod(rows[0][3]) - 369.46) < 0.02);
    CHECK(rows[0][7] == "*");
    CHECK(rows[0][8] == "*");
}

TEST_CASE("fit stars the zeta tail on the heaviest region") {
    const auto r = run_cli("fit --region daegu --all-families");
    REQUIRE(r.code == 0);
    const auto rows = data_rows(r.out);
    REQUIRE(rows.size() == 4);
    bool found = false;
    for (const auto& row : rows) {
        if (row[0] == "zeta-tail0") {
            found = true;
            CHECK(row[7] == "*");
            CHECK(row[8] == "*");
            CHECK(std::fabs(std::stod(row[3]) - 502.38) < 0.05);
        } else {
            CHECK(row[7] == "");
            CHECK(row[8] == "");
        }
    }
    CHECK(found);
}

TEST_CASE("fit reads csv histograms") {
    const std::string good = temp_path("csv");
    {
        std::ofstream f(good);
        f << "count,frequency\n0,300\n1,60\n2,20\n3,4\n";
    }
    const auto ok = run_cli("fit --csv \"" + good + "\" --family geometric0 --family zeta-tail0");
    CHECK(ok.code == 0);
    CHECK(data_rows(ok.out).size() == 2);
    std::filesystem::remove(good);

    const std::string bad = temp_path("csv");
    {
        std::ofstream f(bad);
        f << "count,frequency\n0,300\noops,60\n";
    }
    const auto broken = run_cli("fit --csv \"" + bad + "\"");
    CHECK(broken.code == 3);
    CHECK(broken.err.find("line 3") != std::string::npos);
    std::filesystem::remove(bad);
}

TEST_CASE("fit input errors") {
    CHECK(run_cli("fit").code == 2);
    const auto r = run_cli("fit --region atlantis");
    CHECK(r.code == 3);
    CHECK(r.err.find("atlantis") != std::string::npos);
    CHECK(run_cli("fit --region daegu --family zeta-tail").code == 2);
}

TEST_CASE("figure one starts at the known anchor") {
    const auto r = run_cli("figures 1 --grid-max 1 --grid-step 0.5");
    REQUIRE(r.code == 0);
    const auto rows = data_rows(r.out);
    REQUIRE(rows.size() == 3);
    CHECK(std::fabs(std::stod(rows[0][1]) - 1.6789) < 1e-4);
}

TEST_CASE("figure two starts at the known anchor") {
    const auto r = run_cli("figures 2 --grid-max 0.5 --grid-step 0.5");
    REQUIRE(r.code == 0);
    const auto rows = data_rows(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(std::fabs(std::stod(rows[0][1]) - 1.2899) < 1e-4);
}

TEST_CASE("figure three hazards decrease toward their limits") {
    const auto r = run_cli("figures 3");
    REQUIRE(r.code == 0);
    const auto rows = data_rows(r.out);
    REQUIRE(rows.size() == 21);
    const double limits[3] = {1.25, 2.0, 5.0};
    for (int col = 1; col <= 3; ++col) {
        double prev = 1e300;
        for (const auto& row : rows) {
            const double h = std::stod(row[col]);
            CHECK(h < prev);
            CHECK(h > limits[col - 1]);
            prev = h;
        }
    }
    CHECK(run_cli("figures 4").code == 2);
}

TEST_CASE("sampling is deterministic per seed") {
    const std::string f1 = temp_path("s1"), f2 = temp_path("s2"), f3 = temp_path("s3");
    CHECK(run_cli("sample zeta-tail0 --a 0.5 --n 500 --seed 9 --out \"" + f1 + "\"").code == 0);
    CHECK(run_cli("sample zeta-tail0 --a 0.5 --n 500 --seed 9 --out \"" + f2 + "\"").code == 0);
    CHECK(run_cli("sample zeta-tail0 --a 0.5 --n 500 --seed 10 --out \"" + f3 + "\"").code == 0);
    const std::string c1 = slurp(f1);
    CHECK(c1 == slurp(f2));
    CHECK(c1 != slurp(f3));
    CHECK(c1.find("seed=9") != std::string::npos);
    int variates = 0;
    bool in_data = false;
    for (const auto& line : lines_of(c1)) {
        if (line == "variate") {
            in_data = true;
            continue;
        }
        if (!in_data || line.empty() || line[0] == '#') continue;
        ++variates;
        CHECK(std::stol(line) >= 0);
    }
    CHECK(variates == 500);
    for (const auto& p : {f1, f2, f3}) std::filesystem::remove(p);
}

TEST_CASE("sampling handles an empty request") {
    const auto r = run_cli("sample geometric0 --p 0.4 --n 0");
    REQUIRE(r.code == 0);
    CHECK(r.out.find("# summary rows=0") != std::string::npos);
    CHECK(data_rows(r.out).empty());
}

TEST_CASE("large sample mean lands in the CLT band") {
    const std::string path = temp_path("big");
    const auto r = run_cli("sample zeta-tail0 --a 0 --n 1000000 --seed 2026 --out \"" + path + "\"");
    REQUIRE(r.code == 0);
    double mean_hat = NAN;
    for (const auto& line : lines_of(slurp(path))) {
        const auto pos = line.find(" mean=");
        if (line.rfind("# summary", 0) == 0 && pos != std::string::npos)
            mean_hat = std::stod(line.substr(pos + 6));
    }
    std::filesystem::remove(path);
    REQUIRE(std::isfinite(mean_hat));
    const auto spec = zetatail::DistributionSpec::zeta_tail0(0.0);
    const double sigma = std::sqrt(zetatail::variance(spec) / 1e6);
    CHECK(std::fabs(mean_hat - zetatail::mean(spec)) < 3 * sigma);
}

TEST_CASE("versatility table") {
    const auto r = run_cli("versatility");
    REQUIRE(r.code == 0);
    const auto rows = data_rows(r.out);
    REQUIRE(rows.size() == 5);
    double zt0_v = NAN, avg = NAN;
    for (const auto& row : rows)
        if (row[0] == "zeta-tail0") zt0_v = std::stod(row[2]);
    for (const auto& line : lines_of(r.out)) {
        const std::string prefix = "# geometric0_average_v=";
        if (line.rfind(prefix, 0) == 0) avg = std::stod(line.substr(prefix.size()));
    }
    REQUIRE(std::isfinite(zt0_v));
    REQUIRE(std::isfinite(avg));
    CHECK(std::fabs(avg - 1.7850) < 0.01785);
    CHECK(std::fabs(zt0_v - 0.2983774747) < 1e-4);
}

}  // TEST_SUITE
