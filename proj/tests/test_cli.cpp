#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct CmdResult {
    int status = -1;
    std::string out;
};

CmdResult run_cli(const std::string& args) {
    std::string cmd = std::string(COBCALC_BIN) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CmdResult result;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) result.out.append(buf, n);
    int rc = pclose(pipe);
    result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return result;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("partitions listing") {
    CmdResult r = run_cli("partitions 4");
    CHECK(r.status == 0);
    CHECK(r.out == "[4]\n[3,1]\n[2,2]\n[2,1,1]\n[1,1,1,1]\n");

    CmdResult j = run_cli("partitions 4 --format json");
    CHECK(j.status == 0);
    CHECK(j.out == "[[4],[3,1],[2,2],[2,1,1],[1,1,1,1]]\n");
}

TEST_CASE("class construction") {
    CmdResult r = run_cli("class cp:2 --format json");
    CHECK(r.status == 0);
    CHECK(r.out == "{\"coeffs\":{\"[1,1]\":\"9/1\",\"[2]\":\"3/1\"},\"dim\":2}\n");

    CmdResult flags = run_cli(
        "class pbundle --base-c1sq 152 --base-c2 100 --c2e 248 --rank 2 --format json");
    CHECK(flags.status == 0);
    CHECK(flags.out ==
          "{\"coeffs\":{\"[1,1,1]\":\"-1072/1\",\"[2,1]\":\"504/1\",\"[3]\":\"200/1\"},"
          "\"dim\":3}\n");

    CmdResult spec = run_cli("class pbundle:152,100,248,2 --format json");
    CHECK(spec.status == 0);
    CHECK(spec.out == flags.out);

    CmdResult surface = run_cli("class surface:152,100 --format json");
    CHECK(surface.status == 0);
    CHECK(surface.out == "{\"coeffs\":{\"[1,1]\":\"152/1\",\"[2]\":\"100/1\"},\"dim\":2}\n");
}

TEST_CASE("class file round-trip") {
    CmdResult emitted = run_cli("class abelian:-1,3 --format json");
    CHECK(emitted.status == 0);
    std::string path = "/tmp/cobcalc_test_class.json";
    {
        std::ofstream out(path);
        out << emitted.out;
    }
    CmdResult reread = run_cli("class file:" + path + " --format json");
    CHECK(reread.status == 0);
    CHECK(reread.out == emitted.out);
}

TEST_CASE("product and s-number") {
    CmdResult p = run_cli("product cp:1 cp:2 --format json");
    CHECK(p.status == 0);
    CHECK(p.out ==
          "{\"coeffs\":{\"[1,1,1]\":\"54/1\",\"[2,1]\":\"24/1\",\"[3]\":\"6/1\"},\"dim\":3}\n");

    CmdResult s = run_cli("s-number abelian:-1,2");
    CHECK(s.status == 0);
    CHECK(s.out == "8\n");

    CmdResult s2 = run_cli("s-number cp:2 --format json");
    CHECK(s2.status == 0);
    CHECK(s2.out == "{\"dim\":2,\"value\":\"3/1\"}\n");
}

TEST_CASE("genus evaluations") {
    CmdResult chi = run_cli("genus chi-y --class cp:2");
    CHECK(chi.status == 0);
    CHECK(chi.out == "1 - y + y^2\n");

    CmdResult todd = run_cli("genus todd --class cp:4");
    CHECK(todd.status == 0);
    CHECK(todd.out == "1\n");

    CmdResult sig = run_cli("genus signature --class cp:2");
    CHECK(sig.status == 0);
    CHECK(sig.out == "1\n");

    CmdResult euler = run_cli("genus euler --class cp:3");
    CHECK(euler.status == 0);
    CHECK(euler.out == "4\n");

    CmdResult pont = run_cli("genus pontryagin --class cp:4 --format json");
    CHECK(pont.status == 0);
    CHECK(pont.out == "{\"[1,1]\":\"25/1\",\"[2]\":\"10/1\"}\n");

    CmdResult odd = run_cli("genus pontryagin --class cp:3");
    CHECK(odd.status == 2);
}

TEST_CASE("verify theorem") {
    CmdResult r = run_cli("verify theorem --kind do --dim 4");
    CHECK(r.status == 0);
    CHECK(r.out.find("PASS") == 0);
    CHECK(r.out.find("annihilator_dim=3") != std::string::npos);

    CmdResult j = run_cli("verify theorem --kind betti --dim 4 --format json");
    CHECK(j.status == 0);
    auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["equal"] == true);
    CHECK(parsed["kind"] == "betti");
    CHECK(parsed["annihilator_dim"] == 3);
}

TEST_CASE("verify generators and all") {
    CmdResult gen = run_cli("verify generators --kind do --max-dim 5");
    CHECK(gen.status == 0);
    CHECK(gen.out.find("PASS") != std::string::npos);
    CHECK(gen.out.find("s_2") != std::string::npos);

    CmdResult all = run_cli("verify all --max-dim 5");
    CHECK(all.status == 0);
    CHECK(all.out.find("PASS generators sequence=beta") != std::string::npos);
    CHECK(all.out.find("PASS generators sequence=gamma") != std::string::npos);
    CHECK(all.out.find("ALL PASS") != std::string::npos);

    CmdResult jobs = run_cli("verify all --max-dim 5 --jobs 3");
    CHECK(jobs.status == 0);
    CHECK(jobs.out == all.out);
}

TEST_CASE("demo unbounded") {
    CmdResult r = run_cli("demo unbounded --functional c1^4 --degrees 1,2,4,8");
    CHECK(r.status == 0);
    CHECK(r.out.find("unbounded") != std::string::npos);
    CHECK(r.out.find("d=8") != std::string::npos);

    CmdResult json_out =
        run_cli("demo unbounded --functional c1^4 --degrees 1,2 --format json");
    CHECK(json_out.status == 0);
    auto parsed = nlohmann::json::parse(json_out.out);
    CHECK(parsed["rejected"] == false);
    CHECK(parsed["witness"] == nlohmann::json::parse("[4]"));
    CHECK(parsed["base_value"] == "81/1");

    CmdResult rejected = run_cli("demo unbounded --functional chi_0 --dim 4 --degrees 1,2");
    CHECK(rejected.status == 1);
    CHECK(rejected.out.find("REJECTED") != std::string::npos);
    CHECK(rejected.out.find("chi_0") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("bogus").status == 2);
    CHECK(run_cli("class").status == 2);
    CHECK(run_cli("class cp:abc").status == 2);
    CHECK(run_cli("class surface:1").status == 2);
    CHECK(run_cli("class pbundle:1,2,3,1").status == 2);   // rank < 2
    CHECK(run_cli("class cp:-3").status == 2);
    CHECK(run_cli("s-number cp:0").status == 2);           // s-number needs dim >= 1
    CHECK(run_cli("class surface:1/0,2").status == 2);
    CHECK(run_cli("verify theorem --kind nope --dim 4").status == 2);
    CHECK(run_cli("verify theorem --kind do").status == 2);
    CHECK(run_cli("demo unbounded --functional chi_0 --degrees 1").status == 2);  // no --dim
    CHECK(run_cli("demo unbounded --functional c1^4 --degrees 0,2").status == 2);
    CHECK(run_cli("class cp:2 --format yaml").status == 2);
    CHECK(run_cli("class file:/nonexistent.json").status == 2);
    CHECK(run_cli("class cp:1000").status == 2);        // desk-scale cap
    CHECK(run_cli("partitions 5000").status == 2);
    CHECK(run_cli("product cp:11 cp:11").status == 2);  // transition degree cap
}

TEST_CASE("output goes to a file when requested") {
    std::string path = "/tmp/cobcalc_test_output.json";
    std::remove(path.c_str());
    CmdResult r = run_cli("class cp:1 --format json --output " + path);
    CHECK(r.status == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::string contents((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
    CHECK(contents == "{\"coeffs\":{\"[1]\":\"2/1\"},\"dim\":1}\n");
}

TEST_CASE("identical requests produce identical bytes") {
    for (const std::string& args :
         {std::string("class pbundle:3,5,7,4 --format json"),
          std::string("verify theorem --kind d --dim 5 --format json"),
          std::string("genus chi-y --class abelian:-2,3 --format json")}) {
        CmdResult a = run_cli(args);
        CmdResult b = run_cli(args);
        CHECK(a.status == b.status);
        CHECK(a.out == b.out);
    }
}

}  // TEST_SUITE
