#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

namespace {

namespace fs = std::filesystem;

struct RunOut {
    int exit_code = -1;
    std::string out;
    std::string err;
};

const fs::path& work_dir() {
    static const fs::path dir = [] {
        fs::path p = fs::temp_directory_path() / ("kerov-cli-" + std::to_string(getpid()));
        fs::create_directories(p);
        return p;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

RunOut run(const std::string& args) {
    const char* bin = std::getenv("KEROV_LAB_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "KEROV_LAB_BIN must point at the kerov-lab binary");
    const fs::path out = work_dir() / "stdout.txt";
    const fs::path err = work_dir() / "stderr.txt";
    const std::string cmd =
        "\"" + std::string(bin) + "\" " + args + " >" + out.string() + " 2>" + err.string();
    const int status = std::system(cmd.c_str());
    RunOut r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

std::string write_input(const char* name, const std::string& content) {
    const fs::path p = work_dir() / name;
    std::ofstream f(p, std::ios::binary);
    f << content;
    return p.string();
}

}  // namespace

TEST_CASE("help and version exit zero") {
    CHECK(run("--help").exit_code == 0);
    CHECK(run("--version").exit_code == 0);
    CHECK(run("simulate --help").exit_code == 0);
}

TEST_CASE("bad invocations exit 2") {
    CHECK(run("").exit_code == 2);                          // missing subcommand
    CHECK(run("simulate --no-such-flag").exit_code == 2);   // unknown flag
    CHECK(run("simulate --n banana").exit_code == 2);       // unparsable value
    CHECK(run("simulate --trials 0").exit_code == 2);       // invalid config
    CHECK(run("simulate --ensemble wishart --n 20").exit_code == 2);  // alpha missing
    CHECK(run("simulate --ensemble marchenko").exit_code == 2);
    CHECK(run("shape --kind wigner").exit_code == 2);
    CHECK(run("shape --kind vkls --from 2 --to 1").exit_code == 2);
    CHECK(run("moments --k-max 11").exit_code == 2);
    CHECK(run("moments --alpha 0.5").exit_code == 2);
}

TEST_CASE("simulate is byte-identical across runs and job counts") {
    const std::string base = "simulate --n 30 --trials 3 --seed 7 --k-max 2";
    const auto a = run(base + " --jobs 1");
    const auto b = run(base + " --jobs 1");
    const auto c = run(base + " --jobs 8");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
    CHECK(a.out.rfind("# kerov-lab v", 0) == 0);
    // progress and timing stay on stderr
    CHECK(a.err.find("trial") != std::string::npos);
    CHECK(a.out.find("ms") == std::string::npos);
}

TEST_CASE("simulate writes json with the three top-level keys") {
    const auto r = run("simulate --n 24 --trials 2 --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"meta\"") != std::string::npos);
    CHECK(r.out.find("\"records\"") != std::string::npos);
    CHECK(r.out.find("\"summary\"") != std::string::npos);
}

TEST_CASE("simulate --out writes the file and keeps stdout clean") {
    const fs::path target = work_dir() / "run.csv";
    const auto r = run("simulate --n 24 --trials 2 --out " + target.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    CHECK(slurp(target).rfind("# kerov-lab v", 0) == 0);
}

TEST_CASE("shape emits the classic values") {
    const auto r = run("shape --kind vkls --from -2 --to 2 --step 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\n0,1.2732395447351628\n") != std::string::npos);  // 4/pi
    const auto w = run("shape --kind wishart --alpha 2.25 --step 0.5");
    CHECK(w.exit_code == 0);
    CHECK(w.out.find("\n0.25,2\n") != std::string::npos);   // exact support rows
    CHECK(w.out.find("\n6.25,4\n") != std::string::npos);
}

TEST_CASE("shape with step larger than the range keeps the two endpoints") {
    const auto r = run("shape --kind vkls --from 0.5 --to 1 --step 5");
    CHECK(r.exit_code == 0);
    std::istringstream is(r.out);
    std::string line;
    int data_rows = 0;
    while (std::getline(is, line))
        if (!line.empty() && line[0] != '#' && line != "x,w") ++data_rows;
    CHECK(data_rows == 2);
}

TEST_CASE("moments reports exact-equal identities") {
    const auto r = run("moments --k-max 6");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("MISMATCH") == std::string::npos);
    CHECK(r.out.find("EXACT-EQUAL") != std::string::npos);
    CHECK(r.out.find("alpha^2 + 2*alpha") != std::string::npos);
    CHECK(r.out.find("# G residual alpha=1 ") != std::string::npos);
}

TEST_CASE("diagram breakpoints, padding, and violations") {
    const auto ok = run("diagram " + write_input("good.txt", "3 1\n2\n"));
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("center=2") != std::string::npos);
    CHECK(ok.out.find("\n1,1\n2,2\n3,1\n") != std::string::npos);

    const auto single = run("diagram " + write_input("single.txt", "5\n\n"));
    CHECK(single.exit_code == 0);
    CHECK(single.out.find("center=5") != std::string::npos);
    CHECK(single.out.find("\n4,1\n5,0\n6,1\n") != std::string::npos);

    CHECK(run("diagram " + write_input("bad.txt", "3 1\n4\n")).exit_code == 5);
    CHECK(run("diagram " + write_input("garbage.txt", "3 one\n2\n")).exit_code == 2);
    CHECK(run("diagram " + write_input("empty.txt", "\n\n")).exit_code == 2);
    CHECK(run("diagram /no/such/file.txt").exit_code == 2);
}

TEST_CASE("diagram tolerance flag scales with the spectral radius") {
    // y pokes 1e-7 above x_1 = 100: inside 1e-8 * radius with the default tol
    const auto ok = run("diagram " + write_input("slack.txt", "100 1\n100.0000001\n"));
    CHECK(ok.exit_code == 0);
    // shrinking the tolerance makes the same file fail
    const auto bad =
        run("diagram --tol 1e-12 " + write_input("slack2.txt", "100 1\n100.0000001\n"));
    CHECK(bad.exit_code == 5);
}
