#include "commands.hpp"

#include "ramsey/coloring_json.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = ramsey::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name)
{
    const fs::path dir = fs::temp_directory_path() / "ramsey_cli_tests";
    fs::create_directories(dir);
    return dir / name;
}

void write(const fs::path& p, const std::string& text)
{
    std::ofstream(p) << text;
}

} // namespace

TEST_SUITE("cli")
{
    TEST_CASE("eval")
    {
        const Run r = run({"--canonical", "eval", "thm_p_i", "--k", "6"});
        CHECK(r.code == 0);
        const auto j = ramsey::parse_json_text(r.out);
        CHECK(j.at("status") == "ok");
        CHECK(j.at("result").at("value") == 14);
        CHECK_FALSE(j.contains("timing"));
        CHECK(run({"eval", "thm_p_i", "--k", "6"}).out.find("wall_ms") != std::string::npos);
    }

    TEST_CASE("exit codes")
    {
        CHECK(run({"eval", "thm_p_i", "--k", "5"}).code == 2);
        CHECK(run({"eval", "no_such_id"}).code == 2);
        CHECK(run({"search", "--targets", "P3,P3", "--range", "10:12"}).code == 3);
        CHECK(run({"search", "--targets", "P3,X", "--range", "2:4"}).code == 2);
        CHECK(run({"bogus"}).code == 2);
        const Run pre = run({"--canonical", "eval", "thm_p_i", "--k", "5"});
        const auto j = ramsey::parse_json_text(pre.out);
        CHECK(j.at("status") == "error");
        CHECK(j.at("error").at("type") == "precondition_failed");
    }

    TEST_CASE("witness then verify")
    {
        const fs::path file = scratch("q.json");
        const Run w = run({"witness", "thm_q", "--n0", "10", "--n1", "4", "--n2", "6", "-o", file.string()});
        CHECK(w.code == 0);
        const Run v = run({"verify", file.string()});
        CHECK(v.code == 0);
        CHECK(v.out.find("\"passed\"") != std::string::npos);
        const Run bad = run({"verify", file.string(), "--targets", "C10,P3,P6"});
        CHECK(bad.code == 4);
    }

    TEST_CASE("malformed input reports a line")
    {
        const fs::path file = scratch("bad.json");
        write(file, "{\n  \"host\": [1,\n");
        const Run r = run({"verify", file.string()});
        CHECK(r.code == 2);
        CHECK(r.err.find("line") != std::string::npos);
        const fs::path cnf = scratch("bad.cnf");
        write(cnf, "c host K2\nc k 2\np cnf 2 1\n1 x 0\n");
        const fs::path model = scratch("m.txt");
        write(model, "v 1 0\n");
        CHECK(run({"decode-model", "--cnf", cnf.string(), "--model", model.string()}).code == 2);
    }

    TEST_CASE("cnf export and decode")
    {
        const fs::path cnf = scratch("k4.cnf");
        const Run e = run({"--canonical", "export-cnf", "--host", "K4", "--targets", "2K2,2K2", "-o", cnf.string()});
        CHECK(e.code == 0);
        const auto j = ramsey::parse_json_text(e.out);
        CHECK(j.at("result").at("satisfiable") == true);
        const fs::path model = scratch("k4.model");
        std::ostringstream lits;
        lits << "v";
        for (const auto& l : j.at("result").at("model")) {
            lits << " " << l.get<int>();
        }
        lits << " 0\n";
        write(model, lits.str());
        const Run d = run({"decode-model", "--cnf", cnf.string(), "--model", model.string()});
        CHECK(d.code == 0);
        CHECK(d.out.find("\"passed\"") != std::string::npos);
    }

    TEST_CASE("canonical output is byte-identical")
    {
        const std::vector<std::vector<std::string>> commands = {
            {"--canonical", "eval", "thm_Z", "--t", "4", "--n", "3"},
            {"--canonical", "witness", "thm_h1", "--n", "8", "--k", "2"},
            {"--canonical", "search", "--targets", "P4,P4", "--range", "2:6", "--jobs", "2"},
            {"--canonical", "bsearch", "--targets", "2K2,2K2", "--range", "1:4"},
            {"--canonical", "table", "--json"},
        };
        for (const auto& c : commands) {
            CAPTURE(c[1]);
            const Run a = run(c);
            const Run b = run(c);
            CHECK(a.code == 0);
            CHECK(a.out == b.out);
        }
    }
}
