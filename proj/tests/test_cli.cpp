#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "sphpatch/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct RunOut {
  int code;
  std::string out, err;
};

RunOut run(std::vector<std::string> args) {
  std::ostringstream o, e;
  int code = sphpatch::cli::run(args, o, e);
  return {code, o.str(), e.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("sphpatch_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::string write_layout(const fs::path& dir, const std::string& body) {
  fs::path p = dir / "layout.txt";
  std::ofstream(p) << body;
  return p.string();
}

}  // namespace

TEST_CASE("capacitance command") {
  auto r = run({"--nquad", "160", "--nmodes", "16", "capacitance", "--kappa", "inf", "--kappa", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("0.63") != std::string::npos);
  CHECK(r.out.find("0.27") != std::string::npos);
}

TEST_CASE("records format") {
  auto r = run({"--format", "records", "--nquad", "160", "--nmodes", "16", "capacitance",
                "--kappa", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("record kappa=2 C=") != std::string::npos);
}

TEST_CASE("byte-identical reruns") {
  std::vector<std::string> args = {"--nquad", "160", "--nmodes", "16", "sn-oracle",
                                   "--angles", "0.3", "--nmax", "120", "--neigs", "3"};
  auto a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("config errors exit 2 without output") {
  auto r = run({"capacitance"});  // missing required --kappa
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find("kind=config") != std::string::npos);

  auto bad = run({"nonsense"});
  CHECK(bad.code == 2);
  CHECK(bad.out.empty());
}

TEST_CASE("malformed layout file exits 2 with no partial output") {
  TempDir tmp;
  std::string path = write_layout(tmp.path, "epsilon 0.1\nxyz 0 0 1 1.0 oops\n");
  auto r = run({"mfrt", "--layout", path});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find("kind=config") != std::string::npos);
}

TEST_CASE("numerical failures exit 3 with a diagnostic record") {
  // homogenization bracket leaves its validity range
  auto r = run({"homog", "--kappa", "inf", "--eps", "2.0", "--fraction", "0.9", "--b1", "-3.0"});
  CHECK(r.code == 3);
  CHECK(r.out.find("diagnostic kind=numerical") != std::string::npos);
}

TEST_CASE("layout commands") {
  TempDir tmp;
  std::string path =
      write_layout(tmp.path, "epsilon 0.1\nxyz 0 0 1 1.0 inf\nxyz 0 0 -1 1.0 2.5\n");
  auto r = run({"--nquad", "160", "--nmodes", "16", "mfrt", "--layout", path, "--eps", "0.05",
                "--eps", "0.1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("U0") != std::string::npos);

  auto s = run({"--nquad", "160", "--nmodes", "16", "splitting", "--layout", path, "--target",
                "1"});
  CHECK(s.code == 0);
  CHECK(s.out.find("sum_deviation") != std::string::npos);

  auto l = run({"--nquad", "160", "--nmodes", "16", "lambda0", "--layout", path});
  CHECK(l.code == 0);

  std::string sdn_path =
      write_layout(tmp.path, "epsilon 0.1\nxyz 0 0 1 1.0 0\nxyz 0 0 -1 1.0 inf\n");
  auto d = run({"--nquad", "160", "--nmodes", "16", "sdn", "--layout", sdn_path, "--branches",
                "2", "--eps", "0.1"});
  CHECK(d.code == 0);
  CHECK(d.out.find("sdn") != std::string::npos);

  auto sn = run({"--nquad", "160", "--nmodes", "16", "sn", "--layout", sdn_path, "--branches",
                 "2", "--near-resonant", "--kprime", "0", "--zero-bulk", "2"});
  CHECK(sn.code == 0);
  CHECK(sn.out.find("near-resonant") != std::string::npos);
  CHECK(sn.out.find("leading order only") != std::string::npos);
}

TEST_CASE("spectrum cache round trip is bit exact") {
  TempDir tmp;
  std::vector<std::string> args = {"--cache-dir", tmp.path.string(), "--nquad", "160",
                                   "--nmodes", "16", "capacitance", "--kappa", "3.7"};
  auto first = run(args);
  CHECK(first.code == 0);
  bool found = false;
  for (const auto& entry : fs::directory_iterator(tmp.path)) found |= entry.is_regular_file();
  CHECK(found);
  auto second = run(args);  // now served from the cache
  CHECK(second.out == first.out);
}

TEST_CASE("homog command and help") {
  auto r = run({"homog", "--kappa", "inf", "--eps", "0.05", "--fraction", "0.02"});
  CHECK(r.code == 0);
  CHECK(r.out.find("k_eff") != std::string::npos);
  auto h = run({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("sn-oracle") != std::string::npos);
}
