#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "sigloc/cli.hpp"
#include "sigloc/io.hpp"

using namespace sigloc;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "sigloc");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class TempFile {
public:
    explicit TempFile(const std::string& contents) {
        static int counter = 0;
        path_ = fs::temp_directory_path() / ("sigloc_test_" + std::to_string(::getpid()) + "_" +
                                             std::to_string(counter++) + ".json");
        std::ofstream(path_) << contents;
    }
    ~TempFile() { std::error_code ec; fs::remove(path_, ec); }
    std::string path() const { return path_.string(); }

private:
    fs::path path_;
};

std::string export_entry(const std::string& name) {
    return serialize_manifold(find_catalog_entry(name)->data);
}

}  // namespace

TEST_CASE("verify accepts the diagonal sphere product") {
    TempFile file(export_entry("s2xs2_diagonal"));
    const auto result = run_cli({"verify", file.path()});
    CHECK(result.code == cli::kExitOk);
    CHECK(result.out.find("vanishing verified: true") != std::string::npos);
}

TEST_CASE("signature reports the constant and rigidity") {
    TempFile file(export_entry("cp2_linear"));
    const auto result = run_cli({"signature", file.path(), "--mode", "symbolic"});
    CHECK(result.code == cli::kExitOk);
    CHECK(result.out.find("signature: 1") != std::string::npos);
    CHECK(result.out.find("rigid: true") != std::string::npos);
}

TEST_CASE("prime prints the refusal witness and still exits zero") {
    TempFile file(export_entry("cp2_linear"));
    const auto result = run_cli({"prime", file.path()});
    CHECK(result.code == cli::kExitOk);
    CHECK(result.out.find("prime: false") != std::string::npos);
    CHECK(result.out.find("witness: 1 2") != std::string::npos);
}

TEST_CASE("signature at xi on a non-prime action is a failed check") {
    TempFile file(export_entry("cp2_linear"));
    const auto result = run_cli({"signature", file.path(), "--mode", "xi"});
    CHECK(result.code == cli::kExitCheckFailed);
}

TEST_CASE("non-rigid data makes the signature command fail") {
    const std::string lone = R"({
      "name": "lone", "dim": 2, "spin": false,
      "components": [
        {"name": "p", "dim": 0, "generators": [], "fundamental": [{"exponents": [], "value": "1"}],
         "tangent_roots": [], "normal": [{"weight": 1, "c1": []}]}
      ]
    })";
    TempFile file(lone);
    const auto result = run_cli({"signature", file.path()});
    CHECK(result.code == cli::kExitCheckFailed);
    CHECK(result.out.find("rigid: false") != std::string::npos);
}

TEST_CASE("usage and input errors exit with code two") {
    CHECK(run_cli({"signature", "/definitely/missing.json"}).code == cli::kExitUsage);
    CHECK(run_cli({"frobnicate"}).code == cli::kExitUsage);
    CHECK(run_cli({}).code == cli::kExitUsage);
    TempFile garbage("{not json");
    CHECK(run_cli({"signature", garbage.path()}).code == cli::kExitUsage);
    TempFile zero_weight(R"({
      "name": "bad", "dim": 2, "spin": false,
      "components": [
        {"name": "p", "dim": 0, "generators": [], "fundamental": [{"exponents": [], "value": "1"}],
         "tangent_roots": [], "normal": [{"weight": 0, "c1": []}]}
      ]
    })");
    const auto result = run_cli({"validate", zero_weight.path()});
    CHECK(result.code == cli::kExitUsage);
    CHECK(result.out.find("weight must be nonzero") != std::string::npos);
}

TEST_CASE("validate succeeds on a clean file") {
    TempFile file(export_entry("free_action"));
    const auto result = run_cli({"validate", file.path()});
    CHECK(result.code == cli::kExitOk);
    CHECK(result.out.rfind("ok:", 0) == 0);
}

TEST_CASE("twisted series over json matches the library") {
    TempFile file(export_entry("s2xs2_diagonal"));
    const auto result = run_cli({"twisted", file.path(), "--q-order", "2", "--format", "json"});
    CHECK(result.code == cli::kExitOk);
    const auto parsed = nlohmann::json::parse(result.out);
    CHECK(parsed["q_order"] == 2);
    REQUIRE(parsed["coefficients"].size() == 3);
    for (const auto& c : parsed["coefficients"]) {
        CHECK(c["value"] == "0");
        CHECK(c["constant"] == true);
    }
}

TEST_CASE("catalog list, run, and export") {
    CHECK(run_cli({"catalog", "list"}).out.find("s2xs2_diagonal") != std::string::npos);
    CHECK(run_cli({"catalog", "run"}).code == cli::kExitOk);
    CHECK(run_cli({"catalog", "run", "cp1_rotation"}).code == cli::kExitOk);
    CHECK(run_cli({"catalog", "run", "nonexistent"}).code == cli::kExitUsage);

    const auto exported = run_cli({"catalog", "export", "s2xs2_diagonal"});
    CHECK(exported.code == cli::kExitOk);
    TempFile file(exported.out);
    CHECK(run_cli({"verify", file.path()}).code == cli::kExitOk);
}

TEST_CASE("json and text reports carry identical values") {
    TempFile file(export_entry("cp2_with_fixed_cp1"));
    const auto text = run_cli({"signature", file.path()});
    const auto json_result = run_cli({"signature", file.path(), "--format", "json"});
    const auto parsed = nlohmann::json::parse(json_result.out);
    CHECK(parsed["signature"] == "1");
    CHECK(text.out.find("signature: 1") != std::string::npos);
    CHECK(parsed["contributions"][0]["value"] == "(-4*g)/(1 - 2*g + g^2)");
}
