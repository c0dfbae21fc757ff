#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hyposhift/rational.hpp"

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

namespace {

namespace fs = std::filesystem;
using hyposhift::parse_rational;

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

const std::string& cli_path() {
    static const std::string path = [] {
        if (const char* env = std::getenv("HYPOSHIFT_CLI")) return std::string(env);
        // the cli binary sits next to this test binary
        return (fs::read_symlink("/proc/self/exe").parent_path() / "hyposhift").string();
    }();
    return path;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

fs::path scratch_file(const std::string& tag) {
    static int counter = 0;
    return fs::temp_directory_path() /
           ("hyposhift_test_" + std::to_string(::getpid()) + "_" + tag + "_" +
            std::to_string(counter++));
}

RunResult run(const std::string& args, const std::string& env_prefix = "") {
    fs::path out_path = scratch_file("out");
    fs::path err_path = scratch_file("err");
    std::string cmd = env_prefix + (env_prefix.empty() ? "" : " ") + "'" + cli_path() + "' " +
                      args + " >'" + out_path.string() + "' 2>'" + err_path.string() + "'";
    int raw = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    fs::remove(out_path);
    fs::remove(err_path);
    return r;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    for (;;) {
        auto comma = line.find(',', pos);
        if (comma == std::string::npos) {
            out.push_back(line.substr(pos));
            return out;
        }
        out.push_back(line.substr(pos, comma - pos));
        pos = comma + 1;
    }
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

const std::string kKappaSweep =
    "sweep --family kappa --sweep kappa2 --from 17/20 --to 19/20 --step 1/100 "
    "--test original:k=1 --test power:k=1,h=2";

}  // namespace

TEST_CASE("det-hilbert prints exact fractions") {
    auto r = run("det-hilbert --k 1 --x 1 --h 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1/12\n");

    auto oracle = run("det-hilbert --k 2 --x 1 --h 1 --oracle");
    CHECK(oracle.exit_code == 0);
    CHECK(oracle.out == "1/2160 MATCH\n");

    auto dec = run("det-hilbert --k 1 --x 1 --h 1 --decimal 6");
    CHECK(dec.exit_code == 0);
    CHECK(dec.out == "1/12 0.083333\n");
}

TEST_CASE("det-hilbert rejects bad input") {
    CHECK(run("det-hilbert --k 1 --x 0 --h 1").exit_code == 1);
    CHECK(run("det-hilbert --k 0 --x 1 --h 1").exit_code == 1);
    CHECK(run("det-hilbert --k 1 --h 1").exit_code == 1);
    auto decimal_input = run("det-hilbert --k 1 --x 0.5 --h 1");
    CHECK(decimal_input.exit_code == 1);
    CHECK(contains(decimal_input.err, "decimal input is rejected"));
    CHECK(run("det-hilbert --k 1 --x 1 --h 1 --bogus").exit_code == 1);
    CHECK(run("").exit_code == 1);
}

TEST_CASE("classify kappa") {
    auto r = run("classify --family kappa --kappa2 9025/10257 --k 2 --h 9");
    CHECK(r.exit_code == 0);
    auto ls = lines_of(r.out);
    REQUIRE(ls.size() == 2);
    CHECK(contains(ls[0], "original: H2 fails"));
    CHECK(contains(ls[0], "threshold2 = 9/13"));
    CHECK(contains(ls[1], "power: H2 holds"));
    CHECK(contains(ls[1], "threshold2 = 9025/10257"));

    auto dec = run("classify --family kappa --kappa2 1/2 --k 2 --h 9 --decimal 6");
    CHECK(contains(dec.out, "9/13 (0.692308)"));
    CHECK(contains(dec.out, "9025/10257 (0.879887)"));

    CHECK(run("classify --family kappa --kappa2 1 --k 1 --h 1").exit_code == 1);
    CHECK(run("classify --family kappa --k 1").exit_code == 1);
}

TEST_CASE("classify kappa pair test under --a2") {
    auto r = run("classify --family kappa --kappa2 3/5 --a2 1/4");
    CHECK(r.exit_code == 0);
    auto ls = lines_of(r.out);
    REQUIRE(ls.size() == 2);
    CHECK(contains(ls[0], "original: H2 fails"));
    CHECK(contains(ls[0], "45/76"));
    CHECK(contains(ls[1], "power21: H2 holds"));
    CHECK(contains(ls[1], "900/1439"));

    CHECK(run("classify --family kappa --kappa2 3/5 --a2 1/4 --k 2").exit_code == 1);
}

TEST_CASE("classify s1") {
    auto r = run("classify --family s1 --x2 3/4 --y2 1/2 --a2 1/2");
    CHECK(r.exit_code == 0);
    auto ls = lines_of(r.out);
    REQUIRE(ls.size() == 2);
    CHECK(contains(ls[0], "h1: H1 holds"));
    CHECK(contains(ls[1], "h2: Hinf holds"));
    CHECK(contains(ls[1], "threshold2 = 1/2"));
    CHECK(contains(ls[1], "every power"));

    CHECK(run("classify --family s1 --x2 3/4").exit_code == 1);
    CHECK(run("classify --family s1 --x2 1/4 --y2 1 --a2 1/2").exit_code == 1);
}

TEST_CASE("classify classA") {
    auto r = run("classify --family classA --p 1/6 --q 1/3 --y2 1/2 --a2 1/2 --k inf");
    CHECK(r.exit_code == 0);
    auto ls = lines_of(r.out);
    REQUIRE(ls.size() == 1);
    CHECK(contains(ls[0], "k=inf: Hinf fails"));
    CHECK(contains(ls[0], "threshold2 = 1/3"));

    auto all = run("classify --family classA --p 1/6 --q 1/3 --y2 1/2 --a2 1/2");
    auto all_lines = lines_of(all.out);
    REQUIRE(all_lines.size() == 3);
    CHECK(contains(all_lines[0], "k=1: H1 holds"));
    CHECK(contains(all_lines[1], "k=2: H2 holds"));
    CHECK(contains(all_lines[2], "k=inf: Hinf fails"));

    CHECK(run("classify --family classA --p 1/6 --q 1/3 --y2 1/2 --a2 1/2 --k 3").exit_code == 1);
    CHECK(run("classify --family nonesuch --kappa2 1/2").exit_code == 1);
}

TEST_CASE("sweep csv flips at the exact thresholds") {
    auto r = run(kKappaSweep);
    CHECK(r.exit_code == 0);
    auto ls = lines_of(r.out);
    REQUIRE(ls.size() == 12);
    CHECK(ls[0] == "kappa2,original_k1_holds,original_k1_thr2,power_k1_h2_holds,power_k1_h2_thr2");
    // 20/23 ~ 0.8696: the original flips between 0.86 and 0.87
    CHECK(split_csv(ls[1]) ==
          std::vector<std::string>{"17/20", "true", "20/23", "true", "63/68"});
    CHECK(split_csv(ls[2])[0] == "43/50");
    CHECK(split_csv(ls[2])[1] == "true");
    CHECK(split_csv(ls[3])[0] == "87/100");
    CHECK(split_csv(ls[3])[1] == "false");
    // 63/68 ~ 0.9265: the power flips between 0.92 and 0.93
    CHECK(split_csv(ls[8])[0] == "23/25");
    CHECK(split_csv(ls[8])[3] == "true");
    CHECK(split_csv(ls[9])[0] == "93/100");
    CHECK(split_csv(ls[9])[3] == "false");
    // every row keeps the exact threshold columns
    for (std::size_t i = 1; i < ls.size(); ++i) {
        auto cells = split_csv(ls[i]);
        REQUIRE(cells.size() == 5);
        CHECK(cells[2] == "20/23");
        CHECK(cells[4] == "63/68");
    }
}

TEST_CASE("sweep with equal endpoints emits one row") {
    auto r = run("sweep --sweep a2 --from 1/2 --to 1/2 --threshold h2 --threshold h2_21");
    CHECK(r.exit_code == 0);
    auto ls = lines_of(r.out);
    REQUIRE(ls.size() == 2);
    CHECK(ls[0] == "a2,h2_sq,h2_21_sq");
    CHECK(ls[1] == "1/2,9/13,450/611");
}

TEST_CASE("sweep json carries the same fields") {
    auto r = run(kKappaSweep + " --format json");
    CHECK(r.exit_code == 0);
    auto arr = nlohmann::json::parse(r.out);
    REQUIRE(arr.is_array());
    REQUIRE(arr.size() == 11);
    CHECK(arr[0]["kappa2"] == "17/20");
    CHECK(arr[0]["original_k1_holds"] == true);
    CHECK(arr[0]["original_k1_thr2"] == "20/23");
    CHECK(arr[2]["original_k1_holds"] == false);
    CHECK(arr[10]["power_k1_h2_holds"] == false);
    CHECK(arr[10]["power_k1_h2_thr2"] == "63/68");
}

TEST_CASE("sweep output is deterministic under threading") {
    std::string cmd =
        "sweep --sweep a2 --from 1/100 --to 1/2 --step 1/100 --threshold h2 --threshold h2_21";
    auto serial = run(cmd, "HYPOSHIFT_THREADS=1");
    auto four = run(cmd, "HYPOSHIFT_THREADS=4");
    auto eight = run(cmd, "HYPOSHIFT_THREADS=8");
    CHECK(serial.exit_code == 0);
    CHECK(serial.out == four.out);
    CHECK(serial.out == eight.out);
    auto ls = lines_of(serial.out);
    REQUIRE(ls.size() == 51);
    // strict dominance of the power threshold on every row
    for (std::size_t i = 1; i < ls.size(); ++i) {
        auto cells = split_csv(ls[i]);
        REQUIRE(cells.size() == 3);
        auto h2 = parse_rational(cells[1]);
        auto h2_21 = parse_rational(cells[2]);
        REQUIRE(h2.has_value());
        REQUIRE(h2_21.has_value());
        CHECK(*h2 < *h2_21);
    }
    CHECK(run(cmd, "HYPOSHIFT_THREADS=zero").exit_code == 1);
}

TEST_CASE("sweep writes to a file") {
    fs::path out_path = scratch_file("csv");
    auto r = run("sweep --sweep a2 --from 1/4 --to 1/4 --threshold m1 --q 1/3 --out '" +
                 out_path.string() + "'");
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    auto ls = lines_of(slurp(out_path));
    fs::remove(out_path);
    REQUIRE(ls.size() == 2);
    CHECK(ls[0] == "a2,m1_sq");
    // m1^2(1/4, 1/3) = (2/9) / (1/144 + 2/9)
    CHECK(ls[1] == "1/4,32/33");
}

TEST_CASE("sweep config composes with flags") {
    fs::path cfg_path = scratch_file("cfg");
    {
        std::ofstream cfg(cfg_path);
        cfg << "# kappa sweep across both flips\n"
            << "family = kappa\n"
            << "sweep = kappa2\n"
            << "from = 17/20\n"
            << "to = 19/20    # inclusive\n"
            << "step = 1/100\n"
            << "test = original:k=1\n"
            << "test = power:k=1,h=2\n";
    }
    auto from_config = run("sweep --config '" + cfg_path.string() + "'");
    auto from_flags = run(kKappaSweep);
    CHECK(from_config.exit_code == 0);
    CHECK(from_config.out == from_flags.out);
    CHECK(from_config.err.empty());

    auto overridden = run("sweep --config '" + cfg_path.string() + "' --from 9/10");
    fs::remove(cfg_path);
    CHECK(overridden.exit_code == 0);
    CHECK(contains(overridden.err,
                   "note: --from 9/10 from the command line overrides config value 17/20"));
    auto ls = lines_of(overridden.out);
    REQUIRE(ls.size() == 7);
    CHECK(split_csv(ls[1])[0] == "9/10");
}

TEST_CASE("sweep rejects malformed requests") {
    CHECK(run("sweep --sweep a2 --from 1/2 --to 1/4 --step 1/100 --threshold h2").exit_code == 1);
    CHECK(run("sweep --sweep a2 --from 1/4 --to 1/2 --step 0 --threshold h2").exit_code == 1);
    CHECK(run("sweep --sweep a2 --from 1/4 --to 1/2 --threshold h2").exit_code == 1);
    CHECK(run("sweep --sweep a2 --from 1/4 --to 1/2 --step 1/100").exit_code == 1);
    CHECK(run("sweep --sweep nope --from 1/4 --to 1/2 --step 1/100 --threshold h2").exit_code ==
          1);
    CHECK(run("sweep --sweep a2 --from 1/4 --to 1/2 --step 1/100 --threshold nope").exit_code ==
          1);
    CHECK(run("sweep --family kappa --sweep a2 --from 1/4 --to 1/2 --step 1/100 "
              "--test original:k=1")
              .exit_code == 1);
    CHECK(run("sweep --sweep kappa2 --kappa2 1/2 --from 1/4 --to 1/2 --step 1/100 "
              "--family kappa --test original:k=1")
              .exit_code == 1);
    CHECK(run("sweep --sweep kappa2 --from 1/4 --to 1/2 --step 1/100 --test original:k=1")
              .exit_code == 1);
    CHECK(run("sweep --family s1 --sweep kappa2 --from 1/4 --to 1/2 --step 1/100 "
              "--test original:k=1")
              .exit_code == 1);
    CHECK(run("sweep --family kappa --sweep kappa2 --from 1/4 --to 1/2 --step 1/100 "
              "--test original:k=1,junk=2")
              .exit_code == 1);
    CHECK(run("sweep --config /nonexistent --sweep a2 --from 1/4 --to 1/2 --step 1/100 "
              "--threshold h2")
              .exit_code == 1);
}

TEST_CASE("verify filters by group") {
    auto r = run("verify --only hilbert");
    CHECK(r.exit_code == 0);
    auto ls = lines_of(r.out);
    REQUIRE(ls.size() == 5);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(contains(ls[i], "PASS hilbert/"));
    }
    CHECK(ls[4] == "4/4 checks passed");

    CHECK(run("verify --only nonesuch").exit_code == 1);
}

