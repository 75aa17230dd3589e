// Exercises the zs binary end to end: byte-stable output, exit codes,
// cache behavior. Takes the binary's path as argv[1].
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct RunResult {
  std::string out;
  int code = -1;
};

RunResult run(const std::string& cmd) {
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {};
  std::string out;
  char buf[4096];
  size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  RunResult r;
  r.out = out;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

int failures = 0;

void check(bool ok, const std::string& name, const std::string& detail = "") {
  if (ok) {
    std::cout << "ok: " << name << "\n";
  } else {
    std::cout << "FAIL: " << name;
    if (!detail.empty()) std::cout << "\n  " << detail;
    std::cout << "\n";
    ++failures;
  }
}

void check_eq(const std::string& got, const std::string& want,
              const std::string& name) {
  check(got == want, name, "got:\n" + got + "want:\n" + want);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_tests <zs-binary>\n";
    return 2;
  }
  const std::string zs = std::string("'") + argv[1] + "'";
  const fs::path tmp =
      fs::temp_directory_path() / ("zs-cli-" + std::to_string(::getpid()));
  fs::create_directories(tmp);
  const std::string cache = " --cache-dir '" + tmp.string() + "'";

  const std::string maximal3 = "2^3,-3^2\n1^3,-3\n";
  const std::string atoms3 =
      "2^3,-3^2\n1^3,-3\n2^2,-1,-3\n1^2,-2\n2,1,-3\n1,-1\n2,-2\n3,-3\n0\n";

  {
    RunResult r = run(zs + " maximal --n 3" + cache);
    check(r.code == 0, "maximal exit code");
    check_eq(r.out, maximal3, "maximal n=3 bytes");
  }
  {
    RunResult r = run(zs + " atoms --n 3" + cache);
    check(r.code == 0, "atoms exit code");
    check_eq(r.out, atoms3, "atoms n=3 bytes");
  }
  {
    RunResult r = run(zs + " atoms --n 1 --format json" + cache);
    check_eq(r.out,
             "{\"schema\":1,\"n\":1,\"count\":2,\"atoms\":"
             "[{\"pos\":[[1,1]],\"neg\":[[-1,1]],\"zero\":0},"
             "{\"pos\":[],\"neg\":[],\"zero\":1}]}\n",
             "atoms n=1 json");
  }
  {
    RunResult r = run(zs + " maximal --n 1 --format json" + cache);
    check_eq(r.out,
             "{\"schema\":1,\"n\":1,\"count\":1,\"members\":[\"1,-1\"]}\n",
             "maximal n=1 json");
  }
  {
    RunResult r = run(zs + " poset --n 1" + cache);
    check_eq(r.out,
             "digraph poset_n1 {\n"
             "  rankdir=TB;\n"
             "  node [shape=box];\n"
             "  { rank=same; \"1,-1\"; }\n"
             "  { rank=same; \"0\"; }\n"
             "  \"1,-1\" -> \"0\";\n"
             "}\n",
             "poset n=1 dot");
  }
  {
    RunResult a = run(zs + " poset --n 3" + cache);
    RunResult b = run(zs + " poset --n 3" + cache);
    check(a.code == 0 && a.out == b.out && a.out.size() > 100,
          "poset n=3 output is deterministic");
    RunResult j = run(zs + " poset --n 3 --format json" + cache);
    check(j.code == 0 && j.out.find("\"edges\":[[0,2]") != std::string::npos,
          "poset n=3 json lists edges", j.out);
  }
  {
    RunResult r = run(zs + " bounds --seq '4^2,3,-1^2,-9'");
    check_eq(r.out,
             "seq: 4^2,3,-1^2,-9\n"
             "len_pos: 3\n"
             "len_neg: 3\n"
             "lambert_pos: 9\n"
             "lambert_neg: 4\n"
             "hw_pos: 4 5\n"
             "hw_pos_min: 4\n"
             "hw_neg: 5 4\n"
             "hw_neg_min: 4\n"
             "main_pos: 3\n"
             "main_neg: 3\n"
             "refined_pos: -\n"
             "refined_neg: 3\n"
             "tight_pos: true\n"
             "tight_neg: true\n",
             "bounds report text");
  }
  {
    RunResult r = run(zs + " bounds --seq '4^2,3,-1^2,-9' --format json");
    check_eq(
        r.out,
        "{\"seq\":\"4^2,3,-1^2,-9\",\"len_pos\":3,\"len_neg\":3,"
        "\"lambert_pos\":9,\"lambert_neg\":4,\"hw_pos\":[4,5],"
        "\"hw_pos_min\":4,\"hw_neg\":[5,4],\"hw_neg_min\":4,"
        "\"main_pos\":3,\"main_neg\":3,\"refined_pos\":null,"
        "\"refined_neg\":3,\"tight_pos\":true,\"tight_neg\":true}\n",
        "bounds report json");
  }
  {
    RunResult r = run(zs + " bounds --n 3" + cache);
    check(r.code == 0, "bounds csv exit code");
    check(r.out.rfind("seq,len_pos,len_neg,lambert_pos,lambert_neg,", 0) == 0,
          "bounds csv header");
    int lines = 0;
    for (char c : r.out) lines += c == '\n';
    check(lines == 9, "bounds csv has 8 rows plus a header");
    check(r.out.find("\"2,1,-3\",2,1,3,2,3,2,3,1,,1,false,true\n") !=
              std::string::npos,
          "bounds csv row values", r.out);
  }
  {
    RunResult r = run(zs + " compare --n 3" + cache);
    check_eq(r.out,
             "n=3 scanned=8\n"
             "pos: in-class=6 strict=0 tie=6 out-of-class=2\n"
             "neg: in-class=5 strict=0 tie=5 out-of-class=3\n"
             "tight: pos=5 neg=6 both=5\n",
             "compare n=3 text");
  }
  {
    RunResult r = run(zs + " verify --n 2" + cache);
    check(r.code == 0, "verify n=2 exit code");
    check_eq(
        r.out,
        "[PASS] atom enumeration matches the exhaustive search (n=2)\n"
        "[PASS] every derivation step stays inside the atom set\n"
        "[PASS] bounds dominance scan\n"
        "[PASS] derivation closure of the maximal atoms recovers every atom\n"
        "[PASS] maximal atoms against the diagonal family\n"
        "note: one-step closure of the maximal atoms covers 3 of 4 atoms\n"
        "ok\n",
        "verify n=2 output");
  }
  {
    RunResult r = run(zs + " maximal --n 6 --check-diagonal" + cache);
    check_eq(r.out,
             "5^6,-6^5\n4^5,-5^4\n3^5,-5^3\n1^6,-6\n2^5,-5^2\n3^4,-4^3\n"
             "4^2,3,1,-6^2\n5,3,2^2,-6^2\n"
             "# not in the diagonal family (2):\n"
             "4^2,3,1,-6^2\n5,3,2^2,-6^2\n",
             "maximal n=6 diagonal check");
    RunResult ok4 = run(zs + " maximal --n 4 --check-diagonal" + cache);
    check(ok4.out.find("# all maximal atoms lie in the diagonal family\n") !=
              std::string::npos,
          "maximal n=4 diagonal check");
  }

  // exit codes
  {
    RunResult r = run(zs + " bounds --seq '2,2' 2>&1");
    check(r.code == 2 && r.out.find("not zero") != std::string::npos,
          "nonzero sum is a usage error", r.out);
    check(run(zs + " bounds --seq 'abc' 2>/dev/null").code == 2,
          "malformed sequence is a usage error");
    check(run(zs + " bounds --seq '0' 2>/dev/null").code == 2,
          "zero term is a usage error");
    check(run(zs + " bounds --seq '1,-1' --n 2 2>/dev/null").code == 2,
          "seq and n together is a usage error");
    check(run(zs + " bounds --seq '1,-1' --format csv 2>/dev/null").code == 2,
          "csv needs bulk mode");
    check(run(zs + " atoms --n 0 2>/dev/null").code == 2,
          "n below the window range");
    check(run(zs + " atoms --n 99 2>/dev/null").code == 2,
          "n above the window range");
    check(run(zs + " verify --n 7 2>/dev/null").code == 2,
          "verify range stops at 6");
    check(run(zs + " 2>/dev/null").code == 2, "a subcommand is required");
    check(run(zs + " atoms --n 2 --format yaml 2>/dev/null").code == 2,
          "unknown format");
    check(run(zs + " frobnicate 2>/dev/null").code == 2,
          "unknown subcommand");
    check(run(zs + " --help").code == 0, "help exits zero");
    check(run(zs + " atoms --help").code == 0, "subcommand help exits zero");
  }

  // cache behavior
  {
    fs::path cold_dir = tmp / "cold";
    std::string cdir = " --cache-dir '" + cold_dir.string() + "'";
    RunResult cold = run(zs + " atoms --n 4 --format json" + cdir);
    check(fs::exists(cold_dir / "atoms-n4.v1.json"),
          "cache file appears under the expected name");
    RunResult warm = run(zs + " atoms --n 4 --format json" + cdir);
    check(cold.code == 0 && warm.code == 0 && cold.out == warm.out,
          "cold and warm cache output is identical");
    check(cold.out == slurp(cold_dir / "atoms-n4.v1.json"),
          "cache file holds the json document");

    // a damaged cache entry is silently recomputed and replaced
    std::ofstream(cold_dir / "atoms-n4.v1.json") << "garbage";
    RunResult again = run(zs + " atoms --n 4 --format json" + cdir);
    check(again.code == 0 && again.out == cold.out,
          "damaged cache entry is recomputed");
    check(slurp(cold_dir / "atoms-n4.v1.json") == cold.out,
          "damaged cache entry is rewritten");
  }
  {
    fs::path env_dir = tmp / "env";
    RunResult r = run("ZS_CACHE_DIR='" + env_dir.string() + "' " + zs +
                      " atoms --n 2 >/dev/null && echo done");
    check(r.out == "done\n" && fs::exists(env_dir / "atoms-n2.v1.json"),
          "ZS_CACHE_DIR selects the cache directory");
    fs::path flag_dir = tmp / "flag";
    run("ZS_CACHE_DIR='" + env_dir.string() + "' " + zs +
        " atoms --n 3 --cache-dir '" + flag_dir.string() + "' >/dev/null");
    check(fs::exists(flag_dir / "atoms-n3.v1.json") &&
              !fs::exists(env_dir / "atoms-n3.v1.json"),
          "--cache-dir wins over ZS_CACHE_DIR");
  }
  {
    fs::path out_file = tmp / "m3.txt";
    RunResult r =
        run(zs + " maximal --n 3 --out '" + out_file.string() + "'" + cache);
    check(r.code == 0 && r.out.empty() && slurp(out_file) == maximal3,
          "--out writes the file instead of stdout");
  }

  fs::remove_all(tmp);
  if (failures == 0) {
    std::cout << "all cli checks passed\n";
    return 0;
  }
  std::cout << failures << " cli check(s) failed\n";
  return 1;
}
