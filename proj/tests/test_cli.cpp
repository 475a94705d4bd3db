#include "cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = knotlab::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, Jones) {
    const Outcome r = run({"jones", "--pd", "X[4,2,5,1] X[2,6,3,5] X[6,4,1,3]"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "t + t^3 - t^4\n");
    EXPECT_TRUE(r.err.empty());
    const Outcome e = run({"jones", "--method", "enumerate", "--pd", "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"});
    EXPECT_EQ(e.out, "-t^-4 + t^-3 + t^-1\n");
}

TEST(Cli, ReadsFiles) {
    const std::string path = ::testing::TempDir() + "knotlab_cli_form.txt";
    {
        std::ofstream f(path);
        f << "0 2\n1 0\n";
    }
    const Outcome r = run({"alexander", "--seifert-file", path});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "2 - 5t + 2t^2\n");
    EXPECT_EQ(run({"signature", "--seifert-file", path}).out, "0\n");
    std::remove(path.c_str());
    EXPECT_EQ(run({"alexander", "--seifert-file", path}).code, 2);
}

TEST(Cli, SequivDecisions) {
    const Outcome yes = run({"sequiv", "--seifert", "[[0,1],[2,0]]", "--ell", "3", "--band", "first"});
    EXPECT_EQ(yes.code, 0);
    EXPECT_NE(yes.out.find("first-S-equivalent: T = [[1,-1],[0,1]]"), std::string::npos);

    const Outcome no = run({"sequiv", "--seifert", "[[0,2],[1,-3]]", "--ell", "3", "--band", "first"});
    EXPECT_EQ(no.code, 0);
    EXPECT_NE(no.out.find("not first-S-equivalent: a22 ≠ 0"), std::string::npos);

    const Outcome oracle = run({"sequiv", "--seifert", "[[0,2],[1,0]]", "--ell", "2", "--oracle-bound", "3"});
    EXPECT_NE(oracle.out.find("oracle (bound 3): no congruence found"), std::string::npos);
}

TEST(Cli, Lambda) {
    EXPECT_EQ(run({"lambda", "--n", "0", "--m", "0", "--p", "3", "--emit", "seifert"}).out, "[[0,2],[1,0]]\n");
    EXPECT_EQ(run({"lambda", "--n", "0", "--m", "0", "--p", "3", "--emit", "alexander"}).out, "2 - 5t + 2t^2\n");
    EXPECT_EQ(run({"lambda", "--n", "6", "--m", "0", "--p", "3"}).out, "2 - t + t^2 - 2t^3 + t^4 - t^5 + t^6\n");
    const Outcome pd = run({"lambda", "--n", "0", "--m", "0", "--p", "3", "--emit", "pd"});
    EXPECT_EQ(knotlab::PlanarDiagram::parse(pd.out).crossing_count(), 12u);

    const Outcome j = run({"lambda", "--n", "0", "--m", "-6", "--p", "3", "--emit", "jones", "--json"});
    const auto doc = knotlab::cli::Json::parse(j.out);
    EXPECT_EQ(doc["paper_check"], "MATCH");
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"bogus"}).code, 2);
    EXPECT_EQ(run({"jones"}).code, 2);
    EXPECT_EQ(run({"jones", "--pd", "X[1,1,2,2]", "--pd-file", "x"}).code, 2);
    EXPECT_EQ(run({"sequiv", "--seifert", "[[0,2],[1,0]]"}).code, 2);
    EXPECT_EQ(run({"sequiv", "--seifert", "[[0,2],[1,0]]", "--ell", "1", "--band", "third"}).code, 2);
    EXPECT_EQ(run({"report"}).code, 2);

    const Outcome bad_matrix = run({"alexander", "--seifert", "[[0,1],[1,0]]"});
    EXPECT_EQ(bad_matrix.code, 1);
    EXPECT_TRUE(bad_matrix.out.empty());
    EXPECT_NE(bad_matrix.err.find("det(M - M^T)"), std::string::npos);
    EXPECT_EQ(run({"jones", "--pd", "X[1,2,3,4]"}).code, 1);
    EXPECT_EQ(run({"lambda", "--n", "1", "--m", "0", "--p", "3"}).code, 1);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, CrossingCapEnvironment) {
    const std::vector<std::string> big{"lambda", "--n", "0", "--m", "0", "--p", "9", "--emit", "pd"};
    ::unsetenv("KNOTLAB_CROSSING_CAP");
    EXPECT_EQ(run(big).code, 1);
    ::setenv("KNOTLAB_CROSSING_CAP", "40", 1);
    EXPECT_EQ(run(big).code, 0);
    ::setenv("KNOTLAB_CROSSING_CAP", "4", 1);
    EXPECT_EQ(run(big).code, 1);  // cannot lower the cap below the default
    EXPECT_EQ(run({"jones", "--pd", "X[1,1,2,2]"}).code, 0);
    ::setenv("KNOTLAB_CROSSING_CAP", "lots", 1);
    EXPECT_EQ(run(big).code, 2);
    ::unsetenv("KNOTLAB_CROSSING_CAP");
}

TEST(Cli, JsonShapeAndRoundTrip) {
    for (const std::vector<std::string>& args : std::vector<std::vector<std::string>>{
             {"jones", "--pd", "X[4,2,5,1] X[2,6,3,5] X[6,4,1,3]", "--json"},
             {"alexander", "--seifert", "[[0,2],[1,0]]", "--json"},
             {"signature", "--seifert", "[[-1,1],[0,-1]]", "--json"},
             {"sequiv", "--seifert", "[[0,1],[2,0]]", "--ell", "6", "--json"},
             {"lambda", "--n", "0", "--m", "0", "--p", "3", "--json"},
         }) {
        const Outcome r = run(args);
        ASSERT_EQ(r.code, 0) << r.err;
        const auto doc = knotlab::cli::Json::parse(r.out);
        std::vector<std::string> keys;
        for (const auto& [k, v] : doc.items()) keys.push_back(k);
        EXPECT_EQ(keys, (std::vector<std::string>{"command", "input", "result", "paper_check"}));
        EXPECT_EQ(doc["command"], args.front());
        EXPECT_EQ(doc.dump(2) + "\n", r.out);
    }
}

TEST(Cli, Deterministic) {
    const std::vector<std::string> args{"lambda", "--n", "-6", "--m", "0", "--p", "3", "--json"};
    EXPECT_EQ(run(args).out, run(args).out);
    EXPECT_EQ(run({"report", "--paper"}).out, run({"report", "--paper"}).out);
}

TEST(Cli, PaperReport) {
    const Outcome r = run({"report", "--paper"});
    EXPECT_EQ(r.code, 0) << r.out;
    std::istringstream lines(r.out);
    std::string line;
    int mismatches = 0, known = 0, matches = 0;
    while (std::getline(lines, line)) {
        if (line.rfind("MISMATCH (known discrepancy)", 0) == 0) {
            ++known;
            EXPECT_NE(line.find("lambda(0,-6,3)"), std::string::npos);
            EXPECT_NE(line.find("[[0,2],[1,-3]]"), std::string::npos);
            EXPECT_NE(line.find("[[0,2],[1,3]]"), std::string::npos);
        } else if (line.rfind("MISMATCH", 0) == 0) {
            ++mismatches;
        } else if (line.rfind("MATCH", 0) == 0) {
            ++matches;
        }
    }
    EXPECT_EQ(mismatches, 0);
    EXPECT_EQ(known, 1);
    EXPECT_GT(matches, 20);

    const auto doc = knotlab::cli::Json::parse(run({"report", "--paper", "--json"}).out);
    EXPECT_EQ(doc["paper_check"], "MATCH");
    EXPECT_EQ(doc["result"]["lines"].size(), static_cast<std::size_t>(matches + known));
}
