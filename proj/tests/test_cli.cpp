#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "mdscodex/cli.hpp"
#include "mdscodex/serialize.hpp"

using namespace mdscodex;

namespace {

struct CliResult {
    int status;
    std::string out;
    std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int status = run_cli(args, out, err);
    return {status, out.str(), err.str()};
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("/tmp/mdscodex_test_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("cli: fourier check on the Germain instance") {
    CliResult r = cli({"fourier", "check", "--p", "5", "--char", "11"});
    CHECK(r.status == 0);
    Json j = Json::parse(r.out);
    CHECK(j.at("holds") == true);
    CHECK(j.at("submatrices_checked") == 251);
    CHECK(j.at("witness").is_null());
}

TEST_CASE("cli: fourier check failure carries a machine-readable witness") {
    CliResult r = cli({"fourier", "check", "--p", "7", "--char", "2", "--degree", "6"});
    CHECK(r.status == 1);
    Json j = Json::parse(r.out);
    CHECK(j.at("holds") == false);
    CHECK(j.at("witness").at("rows").size() >= 3);
    CHECK(j.at("witness").at("determinant").empty());  // exact zero in canonical form
}

TEST_CASE("cli: chebotarev reports are byte-identical across worker counts") {
    CliResult a = cli({"fourier", "check", "--p", "7", "--char", "2", "--degree", "6", "--jobs", "1"});
    CliResult b = cli({"fourier", "check", "--p", "7", "--char", "2", "--degree", "6", "--jobs", "4"});
    CHECK(a.out == b.out);
    CliResult c = cli({"fourier", "check", "--p", "5", "--char", "16", "--jobs", "3"});
    CHECK(c.status == 2);  // 16 is not prime: usage error
}

TEST_CASE("cli: enum emits one code per line") {
    CliResult r = cli({"code", "enum", "--p", "5", "--char", "11", "--r", "3"});
    CHECK(r.status == 0);
    int lines = 0;
    std::stringstream stream(r.out);
    std::string line;
    while (std::getline(stream, line)) {
        CHECK(Json::parse(line).at("n") == 5);
        ++lines;
    }
    CHECK(lines == 10);

    CliResult limited = cli({"code", "enum", "--p", "5", "--char", "11", "--r", "3", "--limit", "4"});
    int limited_lines = 0;
    std::stringstream ls(limited.out);
    while (std::getline(ls, line)) ++limited_lines;
    CHECK(limited_lines == 4);
}

TEST_CASE("cli: code build, distance, mds, encode round trip through a file") {
    TempFile file("code.json");
    CliResult build = cli({"code", "build", "--p", "5", "--char", "11", "--omega", "4", "--rows", "0,1,2",
                           "--out", file.path});
    REQUIRE(build.status == 0);
    Json direct = Json::parse(build.out);
    std::ifstream in(file.path);
    Json stored;
    in >> stored;
    CHECK(direct == stored);

    CliResult distance = cli({"code", "distance", file.path});
    CHECK(distance.status == 0);
    CHECK(Json::parse(distance.out).at("distance") == 3);

    CliResult mds = cli({"code", "mds", file.path});
    CHECK(mds.status == 0);
    CHECK(Json::parse(mds.out).at("mds") == true);

    CliResult encoded = cli({"code", "encode", file.path, "--message", "1,0,0"});
    CHECK(encoded.status == 0);
    Json word = Json::parse(encoded.out).at("codeword");
    CHECK(word.size() == 5);
    for (const auto& symbol : word) CHECK(symbol == Json::array({1}));

    CliResult budget = cli({"code", "distance", file.path, "--budget", "1"});
    CHECK(budget.status == 2);
}

TEST_CASE("cli: dual of the dual restores the original rows") {
    TempFile file("dual_in.json");
    TempFile dual1("dual_mid.json");
    TempFile dual2("dual_out.json");
    REQUIRE(cli({"code", "build", "--p", "11", "--char", "23", "--omega", "2", "--rows",
                 "0,1,2,3,4,5,6", "--out", file.path})
                .status == 0);
    CliResult first = cli({"code", "dual", file.path, "--out", dual1.path});
    REQUIRE(first.status == 0);
    CHECK(Json::parse(first.out).at("provenance").at("unit-rows") == Json::array({1, 2, 3, 4}));
    CliResult second = cli({"code", "dual", dual1.path, "--out", dual2.path});
    REQUIRE(second.status == 0);
    CHECK(Json::parse(second.out).at("provenance").at("unit-rows") ==
          Json::array({0, 1, 2, 3, 4, 5, 6}));
}

TEST_CASE("cli: decode pipeline over GF(23)") {
    TempFile code_file("decode_code.json");
    TempFile pair_file("decode_pair.json");
    REQUIRE(cli({"code", "build", "--p", "11", "--char", "23", "--omega", "2", "--rows",
                 "0,1,2,3,4,5,6", "--out", code_file.path})
                .status == 0);

    CliResult built = cli({"decode", "ecp-build", code_file.path, "--out", pair_file.path});
    REQUIRE(built.status == 0);
    Json pair = Json::parse(built.out);
    CHECK(pair.at("t") == 2);
    CHECK(pair.at("u_rows") == Json::array({0, 1, 2}));
    CHECK(pair.at("conditions").at("all") == true);

    // codeword of (1,0,...,0) is row 0 = all ones; corrupt positions 4 and 9
    CliResult run = cli({"decode", "run", pair_file.path, "--received", "1,1,1,1,8,1,1,1,1,20,1"});
    REQUIRE(run.status == 0);
    Json result = Json::parse(run.out);
    CHECK(result.at("status") == "corrected");
    CHECK(result.at("error_positions") == Json::array({4, 9}));

    CliResult clean = cli({"decode", "run", code_file.path, "--received", "1,1,1,1,1,1,1,1,1,1,1"});
    CHECK(clean.status == 0);
    CHECK(Json::parse(clean.out).at("status") == "no-error");

    CliResult exhaust1 = cli({"decode", "exhaust", pair_file.path, "--max-weight", "1", "--jobs", "1"});
    CliResult exhaust2 = cli({"decode", "exhaust", pair_file.path, "--max-weight", "1", "--jobs", "3"});
    CHECK(exhaust1.status == 0);
    CHECK(exhaust1.out == exhaust2.out);
    CHECK(Json::parse(exhaust1.out).at("failures") == 0);

    CliResult sim1 = cli({"--seed", "9", "decode", "simulate", pair_file.path, "--trials", "50"});
    CliResult sim2 = cli({"--seed", "9", "decode", "simulate", pair_file.path, "--trials", "50"});
    CHECK(sim1.status == 0);
    CHECK(sim1.out == sim2.out);
    CliResult sim3 = cli({"--seed", "10", "decode", "simulate", pair_file.path, "--trials", "50"});
    CHECK(sim3.out != sim1.out);
}

TEST_CASE("cli: scan lists the guaranteed pairs") {
    CliResult r = cli({"fourier", "scan", "--p-max", "5", "--q-max", "11"});
    CHECK(r.status == 0);
    Json j = Json::parse(r.out);
    bool found = false;
    for (const auto& entry : j) {
        if (entry.at("p") == 5 && entry.at("q") == 11) {
            CHECK(entry.at("guarantee") == "germain");
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("cli: isaacs subcommand") {
    CliResult r = cli({"fourier", "isaacs", "--char", "2", "--p", "7", "--poly", "1,1,0,1"});
    CHECK(r.status == 0);
    Json j = Json::parse(r.out);
    CHECK(j.at("t") == 3);
    CHECK(j.at("deg_h") == 3);
    CHECK(j.at("violates") == true);
}

TEST_CASE("cli: field subcommands") {
    CliResult cyc = cli({"field", "make", "--cyclotomic", "7"});
    CHECK(cyc.status == 0);
    Json j = Json::parse(cyc.out);
    CHECK(j.at("char") == 0);
    CHECK(j.at("degree") == 6);
    CHECK(j.at("modulus") == Json::array({1, 1, 1, 1, 1, 1, 1}));

    CliResult root = cli({"field", "root", "--char", "23", "--p", "11"});
    CHECK(root.status == 0);
    CHECK(Json::parse(root.out).at("omega") == Json::array({2}));

    CliResult order = cli({"field", "order", "--char", "11", "--element", "2"});
    CHECK(order.status == 0);
    CHECK(Json::parse(order.out).at("order") == 10);
}

TEST_CASE("cli: idem subcommands") {
    CliResult build = cli({"idem", "build", "--char", "11", "--n", "5", "--omega", "4"});
    CHECK(build.status == 0);
    Json j = Json::parse(build.out);
    CHECK(j.at("members").size() == 5);

    TempFile file("idem_code.json");
    CliResult code = cli({"idem", "code", "--char", "11", "--n", "5", "--omega", "4", "--indices",
                          "0,1,2", "--out", file.path});
    CHECK(code.status == 0);
    CHECK(Json::parse(code.out).at("provenance").contains("idempotent-indices"));

    CliResult distance = cli({"code", "distance", file.path});
    CHECK(distance.status == 0);
    CHECK(Json::parse(distance.out).at("distance") == 3);

    // idempotent codes share the row space of their unit-derived twins, so
    // the decoder accepts them directly
    CliResult run = cli({"decode", "run", file.path, "--received", "9,9,9,9,9"});
    CHECK(run.status == 0);
    CHECK(Json::parse(run.out).at("status") == "no-error");
}

TEST_CASE("cli: human mode and usage errors") {
    CliResult human = cli({"--human", "fourier", "check", "--p", "5", "--char", "11"});
    CHECK(human.status == 0);
    CHECK(human.out == "chebotarev: holds (251 submatrices checked)\n");

    CliResult unknown = cli({"frobnicate"});
    CHECK(unknown.status == 2);

    CliResult missing = cli({"code", "distance", "/tmp/mdscodex_no_such_file.json"});
    CHECK(missing.status == 2);

    CliResult help = cli({"--help"});
    CHECK(help.status == 0);
    CHECK(help.out.find("mdscodex") != std::string::npos);
}

TEST_CASE("serialization round trips") {
    // rational coefficients ride as num/den strings
    const FieldSpec& q5 = field_make_cyclotomic(5);
    FieldElement x = q5.one() / q5.from_integer(5) + q5.generator_x();
    Json jx = element_to_json(x);
    CHECK(jx[0] == "1/5");
    CHECK(element_from_json(q5, jx) == x);

    // codes rebuild from provenance and must match entrywise
    const FieldSpec& gf23 = field_make(23, 1);
    FourierMatrix f = fourier_build(gf23, 11, gf23.from_integer(2));
    LinearCode code = unit_code_build(f, {0, 2, 4, 6, 8, 10});
    min_distance(code);
    LinearCode reloaded = code_from_json(code_to_json(code));
    CHECK(reloaded.generator() == code.generator());
    CHECK(reloaded.check() == code.check());
    CHECK(reloaded.cached_distance() == code.cached_distance());

    // a tampered generator entry is rejected on load
    Json tampered = code_to_json(code);
    tampered["generator"][0][1] = Json::array({5});
    CHECK_THROWS_AS(code_from_json(tampered), std::runtime_error);

    // pairs re-verify all four conditions on load
    ErrorCorrectingPair pair = ecp_build(f, 0, 2, 6);
    ErrorCorrectingPair reloaded_pair = pair_from_json(pair_to_json(pair));
    CHECK(reloaded_pair.t == pair.t);
    CHECK(reloaded_pair.u_rows == pair.u_rows);
    CHECK(reloaded_pair.u_basis == pair.u_basis);
    CHECK(ecp_verify(reloaded_pair).all());

    // fields round trip through their JSON spec
    CHECK(&field_from_json(field_to_json(field_make(3, 6))) == &field_make(3, 6));
    CHECK(&field_from_json(field_to_json(q5)) == &q5);
    CHECK(&field_from_json(field_to_json(gf23)) == &gf23);
}

TEST_CASE("cli: cyclotomic rational codes end to end") {
    TempFile file("q7_code.json");
    CliResult build = cli({"code", "build", "--p", "7", "--char", "0", "--rows", "1,2,5,6", "--out",
                           file.path});
    REQUIRE(build.status == 0);
    Json j = Json::parse(build.out);
    CHECK(j.at("field").at("char") == 0);
    CHECK(j.at("k") == 4);

    CliResult distance = cli({"code", "distance", file.path});
    CHECK(distance.status == 0);
    CHECK(Json::parse(distance.out).at("distance") == 4);  // (7,4,4)
}
