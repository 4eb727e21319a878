#include <doctest.h>

#include <filesystem>

#include "aclat/text_format.hpp"
#include "cli_cases.hpp"

using namespace aclat;
using aclat::testing::run_cli;

namespace {

const std::string kData = ACLAT_TEST_DATA_DIR;
const std::filesystem::path kGolden = ACLAT_GOLDEN_DIR;

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("every verb matches its golden output") {
  for (const auto& c : aclat::testing::cli_cases()) {
    CAPTURE(c.golden);
    auto r = run_cli(c.args, kData);
    CHECK(r.exit_code == c.exit_code);
    CHECK(r.err.empty());
    CHECK(r.out == read_file(kGolden / (c.golden + ".out")));
  }
}

TEST_CASE("domain errors exit 1 with the error name first") {
  auto r = run_cli({"embed-demo", "--oracle", "finite:3", "--n", "5"}, kData);
  CHECK(r.exit_code == 1);
  CHECK(first_line(r.err) == "DensityViolation");

  r = run_cli({"analyze", "@/m3.lattice"}, kData);
  CHECK(r.exit_code == 1);
  CHECK(first_line(r.err) == "NotDistributive");
  CHECK(r.out.empty());

  r = run_cli({"analyze", "@/missing.lattice"}, kData);
  CHECK(r.exit_code == 1);
  CHECK(first_line(r.err) == "IoError");
}

TEST_CASE("parse errors exit 2") {
  auto r = run_cli({"frobnicate"}, kData);
  CHECK(r.exit_code == 2);
  CHECK(first_line(r.err) == "ParseError");

  r = run_cli({"analyze", "@/c3.lattice", "--bogus"}, kData);
  CHECK(r.exit_code == 2);

  r = run_cli({"analyze", "@/c3_jump.fn"}, kData);
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("line 1") != std::string::npos);

  r = run_cli({"embed-demo", "--oracle", "surreal", "--n", "3"}, kData);
  CHECK(r.exit_code == 2);
}

TEST_CASE("caps surface instead of truncating") {
  auto r = run_cli({"--max-elements", "3", "dual", "@/n.poset"}, kData);
  CHECK(r.exit_code == 1);
  CHECK(first_line(r.err) == "CapExceeded");
}

TEST_CASE("verb variants") {
  auto r = run_cli({"dual", "@/n.poset", "--format", "text"}, kData);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("elements:") != std::string::npos);

  r = run_cli({"roundtrip", "@/b4.lattice"}, kData);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("checked: yes") != std::string::npos);

  r = run_cli({"check-function", "@/c3.lattice", "@/c3_join_m.fn"}, kData);
  CHECK(r.out.find("compatible: yes") != std::string::npos);
  CHECK(r.out.find("polynomial: yes") != std::string::npos);

  r = run_cli({"check-function", "@/c3.lattice", "@/c3_swap.fn"}, kData);
  CHECK(r.out.find("compatible: yes") != std::string::npos);
  CHECK(r.out.find("polynomial: no") != std::string::npos);

  r = run_cli({"product", "@/chain2.poset", "@/antichain2.poset", "--format", "dot"}, kData);
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("digraph", 0) == 0);

  r = run_cli({"export-dot", "@/chain2.poset", "--format", "text"}, kData);
  CHECK(r.out.rfind("poset", 0) == 0);
}

TEST_CASE("export-dot writes identical files") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto a = dir / "aclat_test_a.dot", b = dir / "aclat_test_b.dot";
  CHECK(run_cli({"export-dot", "@/n_downsets.lattice", "--output", a.string()}, kData).exit_code == 0);
  CHECK(run_cli({"export-dot", "@/n_downsets.lattice", "--output", b.string()}, kData).exit_code == 0);
  CHECK(read_file(a) == read_file(b));
  CHECK(read_file(a).rfind("digraph \"E(N)\"", 0) == 0);
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}
