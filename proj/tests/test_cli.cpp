// Copyright 2026 the cfp authors
// SPDX-License-Identifier: Apache-2.0
#include "cfp/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cfp/io.hpp"
#include "doctest.h"
#include "fixtures.hpp"

namespace {

int run_cli(std::vector<std::string> args, std::string* out_text = nullptr,
            std::string* err_text = nullptr) {
    std::ostringstream out, err;
    args.insert(args.begin(), "cfp");
    int code = cfp::cli::run(args, out, err);
    if (out_text) *out_text = out.str();
    if (err_text) *err_text = err.str();
    return code;
}

struct TempFile {
    std::filesystem::path path;

    TempFile(const std::string& name, const std::string& content)
        : path(std::filesystem::temp_directory_path() / name) {
        std::ofstream out(path);
        out << content;
    }
    ~TempFile() {
        std::error_code ec;
        std::filesystem::remove(path, ec);
    }
    std::string str() const { return path.string(); }
};

TempFile table1_file(const std::string& name) {
    return TempFile(name, cfp::io::write_instance(testfix::table1()));
}

}  // namespace

TEST_CASE("solve prints the report and the canonical optimum") {
    TempFile inst = table1_file("cfp_cli_solve.cfp");
    std::string out;
    CHECK(run_cli({"solve", "--objective", "f1", inst.str()}, &out) == 0);
    CHECK(out ==
          "n1 21\n"
          "e 7\n"
          "v 1\n"
          "f1 8\n"
          "efficacy 7/11\n"
          "cells 3\n"
          "machines 0 0 0 1 1\n"
          "parts 0 1 0 1 1 2 0\n");

    CHECK(run_cli({"solve", "--objective", "efficacy", inst.str()}, &out) == 0);
    CHECK(out ==
          "n1 21\n"
          "e 4\n"
          "v 5\n"
          "f1 9\n"
          "efficacy 17/26\n"
          "cells 2\n"
          "machines 0 1 1 1 1\n"
          "parts 1 1 1 1 1 0 0\n");

    std::string heuristic_out;
    CHECK(run_cli({"solve", "--objective", "f1", "--method", "heuristic", "--seed", "5",
                   inst.str()},
                  &heuristic_out) == 0);
    std::string again;
    CHECK(run_cli({"solve", "--objective", "f1", "--method", "heuristic", "--seed", "5",
                   inst.str()},
                  &again) == 0);
    CHECK(heuristic_out == again);
}

TEST_CASE("solve output is identical across thread counts") {
    TempFile inst = table1_file("cfp_cli_threads.cfp");
    std::string one, four;
    CHECK(run_cli({"solve", "--objective", "efficacy", "--threads", "1", inst.str()},
                  &one) == 0);
    CHECK(run_cli({"solve", "--objective", "efficacy", "--threads", "4", inst.str()},
                  &four) == 0);
    CHECK(one == four);
}

TEST_CASE("decide answers with the exit code") {
    TempFile inst = table1_file("cfp_cli_decide.cfp");
    std::string out;
    CHECK(run_cli({"decide", "--objective", "f1", "--threshold", "8", inst.str()}, &out) == 0);
    CHECK(out == "yes\n");
    CHECK(run_cli({"decide", "--objective", "f1", "--threshold", "7", inst.str()}, &out) == 1);
    CHECK(out == "no\n");
    CHECK(run_cli({"decide", "--objective", "efficacy", "--threshold", "17/26", inst.str()},
                  &out) == 0);
    CHECK(out == "yes\n");
    CHECK(run_cli({"decide", "--objective", "efficacy", "--threshold", "0.7", inst.str()},
                  &out) == 1);
    CHECK(out == "no\n");

    CHECK(run_cli({"decide", "--objective", "f1", "--threshold", "8", "--via-reduction",
                   inst.str()},
                  &out) == 0);
    CHECK(out == "yes\n");
    CHECK(run_cli({"decide", "--objective", "f1", "--threshold", "7", "--via-reduction",
                   inst.str()},
                  &out) == 1);
    CHECK(run_cli({"decide", "--objective", "efficacy", "--threshold", "1/2",
                   "--via-reduction", inst.str()}) == 64);
    CHECK(run_cli({"decide", "--objective", "f1", "--threshold", "15/2", "--via-reduction",
                   inst.str()}) == 64);
}

TEST_CASE("verify reports either the objective values or the violations") {
    TempFile inst = table1_file("cfp_cli_verify.cfp");
    TempFile good("cfp_cli_verify_good.sol", "cells 3\nmachines 2 0 1 0 0\n"
                                             "parts 0 0 0 1 1 2 2\n");
    std::string out;
    CHECK(run_cli({"verify", inst.str(), good.str()}, &out) == 0);
    CHECK(out ==
          "n1 21\n"
          "e 10\n"
          "v 2\n"
          "f1 12\n"
          "efficacy 11/23\n");

    TempFile wild("cfp_cli_verify_wild.sol", "cells 1\nmachines 99 99 99 99 99\n"
                                             "parts 99 99 99 99 99 99 99\n");
    CHECK(run_cli({"verify", inst.str(), wild.str()}, &out) == 1);
    CHECK(out.starts_with("violation:"));

    TempFile short_sol("cfp_cli_verify_short.sol", "cells 1\nmachines 0\nparts 0\n");
    CHECK(run_cli({"verify", inst.str(), short_sol.str()}) == 65);
}

TEST_CASE("reduce prints the extension and the transformed threshold") {
    TempFile inst = table1_file("cfp_cli_reduce.cfp");
    std::string out;
    CHECK(run_cli({"reduce", "--c", "12", inst.str()}, &out) == 0);
    CHECK(out.starts_with("# cell-bound: 6\n40 42\n"));
    CHECK(out.ends_with("threshold: 617/623\n"));

    CHECK(run_cli({"reduce", "--merged", inst.str()}, &out) == 0);
    CHECK(out.starts_with("# row-weights: 1 1 1 1 1 35\n"));
    CHECK(out.find("# col-weights: 1 1 1 1 1 1 1 35\n") != std::string::npos);
    CHECK(out.find("# cell-bound: 6\n") != std::string::npos);
    CHECK(out.find("\n6 8\n") != std::string::npos);
    CHECK(out.find("threshold:") == std::string::npos);

    // the merged extension parses back as a plain instance
    std::size_t header = out.find("6 8\n");
    CHECK(cfp::io::parse_instance(out.substr(header)).m() == 6);
}

TEST_CASE("convert translates both directions") {
    TempFile inst("cfp_cli_conv.cfp", "2 3\n1 0 1\n0 1 1\n");
    std::string edges;
    CHECK(run_cli({"convert", "--to", "bgep", inst.str()}, &edges) == 0);
    CHECK(edges == "2 3 4\n0 0\n0 2\n1 1\n1 2\n");
    TempFile graph("cfp_cli_conv.bgep", edges);
    std::string back;
    CHECK(run_cli({"convert", "--to", "cfp", graph.str()}, &back) == 0);
    CHECK(back == "2 3\n1 0 1\n0 1 1\n");
    CHECK(run_cli({"convert", "--to", "dot", inst.str()}) == 64);
}

TEST_CASE("gen is deterministic and feeds the other subcommands") {
    std::string a, b;
    CHECK(run_cli({"gen", "-m", "4", "-p", "6", "--seed", "9"}, &a) == 0);
    CHECK(run_cli({"gen", "-m", "4", "-p", "6", "--seed", "9"}, &b) == 0);
    CHECK(a == b);
    CHECK(cfp::io::parse_instance(a).m() == 4);

    CHECK(run_cli({"gen", "-m", "2", "-p", "2", "--density", "1"}, &a) == 0);
    CHECK(a == "2 2\n1 1\n1 1\n");
    CHECK(run_cli({"gen", "-m", "2", "-p", "2", "--density", "3/2"}) == 64);

    TempFile inst("cfp_cli_gen_pipe.cfp", a);
    std::string solved;
    CHECK(run_cli({"solve", "--objective", "efficacy", inst.str()}, &solved) == 0);
    CHECK(solved.find("efficacy 1/1\n") != std::string::npos);
}

TEST_CASE("failure modes map to distinct exit codes") {
    std::string out, err;
    CHECK(run_cli({"frobnicate"}, &out, &err) == 64);
    CHECK(!err.empty());
    CHECK(run_cli({}) == 64);
    CHECK(run_cli({"solve", "--objective", "f1"}) == 64);          // missing file
    CHECK(run_cli({"solve", "--objective", "nope", "x"}) == 64);   // before reading x
    CHECK(run_cli({"solve", "--objective", "f1", "/nonexistent/x.cfp"}) == 65);

    TempFile bad("cfp_cli_bad.cfp", "2 2\n1 0\n");
    CHECK(run_cli({"solve", "--objective", "f1", bad.str()}, &out, &err) == 65);
    CHECK(err.find("line") != std::string::npos);

    std::string rows = "13 2\n";
    for (int i = 0; i < 13; ++i) rows += "1 1\n";
    TempFile tall("cfp_cli_tall.cfp", rows);
    CHECK(run_cli({"solve", "--objective", "f1", "--method", "oracle", tall.str()}) == 70);
    CHECK(run_cli({"solve", "--objective", "f1", tall.str()}) == 0);  // merging copes

    TempFile zero("cfp_cli_zero.cfp", "2 2\n0 0\n0 0\n");
    CHECK(run_cli({"solve", "--objective", "efficacy", zero.str()}) == 2);

    CHECK(run_cli({"--help"}, &out) == 0);
    CHECK(out.find("solve") != std::string::npos);
    CHECK(run_cli({"--help-all"}, &out) == 0);
    CHECK(out.find("--via-reduction") != std::string::npos);
}
