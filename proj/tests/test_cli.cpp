#include <catch2/catch_amalgamated.hpp>
#include <hgwiener/hgwiener.hpp>

#include "test_support.hpp"

using test_support::run_cli;
using test_support::write_temp;

TEST_CASE("gen writes the exact file format") {
  const auto r = run_cli("gen tight-path --n 13 --k 4");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "13 4\n1 2 3 4\n2 3 4 5\n5 6 7 8\n6 7 8 9\n9 10 11 12\n10 11 12 13\n");

  const auto fano = run_cli("gen fano");
  CHECK(fano.exit_code == 0);
  CHECK(fano.out == hgwiener::to_text(hgwiener::fano()));
}

TEST_CASE("gen -o writes the same bytes to a file") {
  const std::string path = write_temp("");
  const auto r = run_cli("gen offset-tight-path --n 12 --k 4 --x 2 -o " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == hgwiener::to_text(hgwiener::offset_tight_path(12, 4, 2)));
}

TEST_CASE("bound prints the closed-form maximum") {
  CHECK(run_cli("bound --n 13 --k 4").out == "185\n");
  CHECK(run_cli("bound --n 6 --k 3").out == "24\n");
  CHECK(run_cli("bound --n 13 --k 4").exit_code == 0);
}

TEST_CASE("wiener reads files and stdin") {
  const std::string text = hgwiener::to_text(hgwiener::tight_path(5, 3));
  CHECK(run_cli("wiener -", text).out == "14\n");
  const std::string path = write_temp(text);
  CHECK(run_cli("wiener " + path).out == "14\n");
  // disconnected input is a domain error
  const auto bad = run_cli("wiener -", "6 3\n1 2 3\n4 5 6\n");
  CHECK(bad.exit_code == 1);
}

TEST_CASE("dist prints distances and unreachable") {
  const std::string path =
      write_temp(hgwiener::to_text(hgwiener::tight_path(13, 4)));
  CHECK(run_cli("dist " + path + " 1 13").out == "6\n");
  CHECK(run_cli("dist " + path + " 4 4").out == "0\n");
  const std::string iso = write_temp("4 3\n1 2 3\n");
  const auto r = run_cli("dist " + iso + " 1 4");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "unreachable\n");
  CHECK(run_cli("dist " + iso + " 1 9").exit_code == 1);
}

TEST_CASE("gen piped into wiener matches bound for extremal families") {
  for (const auto& [n, k] : {std::pair{13, 4}, {5, 3}, {9, 4}, {7, 2}}) {
    const auto text = run_cli("gen tight-path --n " + std::to_string(n) +
                              " --k " + std::to_string(k));
    REQUIRE(text.exit_code == 0);
    const auto w = run_cli("wiener -", text.out);
    const auto b = run_cli("bound --n " + std::to_string(n) + " --k " +
                           std::to_string(k));
    CHECK(w.out == b.out);
  }
  for (const auto& [n, k, x] : {std::tuple{12, 4, 1}, {6, 3, 2}, {8, 2, 1}}) {
    const auto text = run_cli("gen offset-tight-path --n " + std::to_string(n) +
                              " --k " + std::to_string(k) + " --x " +
                              std::to_string(x));
    REQUIRE(text.exit_code == 0);
    CHECK(run_cli("wiener -", text.out).out ==
          run_cli("bound --n " + std::to_string(n) + " --k " +
                  std::to_string(k))
              .out);
  }
}

TEST_CASE("identities sweeps the grid") {
  const auto full = run_cli("identities");
  CHECK(full.exit_code == 0);
  CHECK(full.out == "OK 1848\n");
  const auto small = run_cli("identities --s-max 3 --k-max 4");
  CHECK(small.out == "OK 80\n");
}

TEST_CASE("verify reports and exit codes") {
  const auto r = run_cli("verify --n 4 --k 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("max_wiener: 10") != std::string::npos);
  CHECK(r.out.find("theorem_match: true") != std::string::npos);
  CHECK(r.out.find("claim_violations: 0") != std::string::npos);
  CHECK(r.out.find("lemma_violations: 0") != std::string::npos);
  // byte-identical across repeated runs and job counts
  const auto again = run_cli("verify --n 4 --k 2");
  CHECK(again.out == r.out);
  CHECK(run_cli("verify --n 4 --k 2 --jobs 3").out == r.out);
  // a sweep that cannot connect anything fails honestly
  CHECK(run_cli("verify --n 6 --k 3 --max-edges 2").exit_code == 1);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("bound --n 13").exit_code == 2);
  CHECK(run_cli("gen nosuch --n 5 --k 3").exit_code == 2);
  CHECK(run_cli("gen tight-path --k 3").exit_code == 2);
  CHECK(run_cli("gen tight-path --n 5 --k 3 --x 1").exit_code == 2);
  CHECK(run_cli("gen offset-tight-path --n 12 --k 4").exit_code == 2);
  CHECK(run_cli("gen fano --n 7").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
}

TEST_CASE("domain errors exit with code 1") {
  CHECK(run_cli("gen tight-path --n 12 --k 4").exit_code == 1);
  CHECK(run_cli("gen offset-tight-path --n 13 --k 4 --x 1").exit_code == 1);
  CHECK(run_cli("gen dense-star --n 5 --k 2").exit_code == 1);
  CHECK(run_cli("bound --n 1 --k 2").exit_code == 1);
  CHECK(run_cli("wiener /nonexistent/file").exit_code == 1);
  CHECK(run_cli("verify --n 7 --k 3").exit_code == 1);  // needs an edge bound
}
