#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include <zerosum/bounds.hpp>
#include <zerosum/derivation.hpp>
#include <zerosum/enumeration.hpp>
#include <zerosum/io.hpp>
#include <zerosum/sequence.hpp>
#include <zerosum/version.hpp>

namespace {

namespace fs = std::filesystem;
using zerosum::AtomSet;
using zerosum::BoundReport;
using zerosum::DerivationPoset;
using zerosum::MaximalSet;
using zerosum::ZSeq;

fs::path cache_file(const fs::path& dir, int n) {
  return dir / ("atoms-n" + std::to_string(n) + ".v" +
                std::to_string(zerosum::kEngineVersion) + ".json");
}

AtomSet load_or_enumerate(int n, int jobs, const fs::path& cache_dir) {
  const fs::path path = cache_file(cache_dir, n);
  if (fs::exists(path)) {
    try {
      return zerosum::load_atoms(path);
    } catch (const std::exception&) {
      // A stale or damaged cache entry is recomputed, not reported.
    }
  }
  zerosum::EnumerateOptions opts;
  opts.jobs = jobs;
  AtomSet atoms = zerosum::enumerate_atoms(n, opts);
  try {
    zerosum::save_atoms(atoms, path);
  } catch (const std::exception& e) {
    std::cerr << "warning: cannot write cache: " << e.what() << "\n";
  }
  return atoms;
}

std::vector<ZSeq> display_sorted(std::vector<ZSeq> v) {
  std::sort(v.begin(), v.end(), zerosum::display_less);
  return v;
}

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty())
    std::cout << content;
  else
    zerosum::write_file_atomic(out_path, content);
}

std::string atoms_text(const AtomSet& atoms) {
  std::string out;
  for (const ZSeq& s : display_sorted(atoms.atoms)) out += render(s) + "\n";
  return out;
}

std::string bound_report_text(const BoundReport& r) {
  auto list = [](const std::vector<long long>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) s += " ";
      s += std::to_string(v[i]);
    }
    return s;
  };
  auto opt = [](const std::optional<long long>& v) {
    return v ? std::to_string(*v) : std::string("-");
  };
  std::string out;
  out += "seq: " + render(r.seq) + "\n";
  out += "len_pos: " + std::to_string(r.len_pos) + "\n";
  out += "len_neg: " + std::to_string(r.len_neg) + "\n";
  out += "lambert_pos: " + std::to_string(r.lambert_pos) + "\n";
  out += "lambert_neg: " + std::to_string(r.lambert_neg) + "\n";
  out += "hw_pos: " + list(r.hw_pos) + "\n";
  out += "hw_pos_min: " + std::to_string(r.hw_pos_min) + "\n";
  out += "hw_neg: " + list(r.hw_neg) + "\n";
  out += "hw_neg_min: " + std::to_string(r.hw_neg_min) + "\n";
  out += "main_pos: " + std::to_string(r.main_pos) + "\n";
  out += "main_neg: " + std::to_string(r.main_neg) + "\n";
  out += "refined_pos: " + opt(r.refined_pos) + "\n";
  out += "refined_neg: " + opt(r.refined_neg) + "\n";
  out += "tight_pos: " + std::string(r.tight_pos ? "true" : "false") + "\n";
  out += "tight_neg: " + std::string(r.tight_neg ? "true" : "false") + "\n";
  return out;
}

std::string bound_report_json(const BoundReport& r) {
  nlohmann::ordered_json doc;
  doc["seq"] = render(r.seq);
  doc["len_pos"] = r.len_pos;
  doc["len_neg"] = r.len_neg;
  doc["lambert_pos"] = r.lambert_pos;
  doc["lambert_neg"] = r.lambert_neg;
  doc["hw_pos"] = r.hw_pos;
  doc["hw_pos_min"] = r.hw_pos_min;
  doc["hw_neg"] = r.hw_neg;
  doc["hw_neg_min"] = r.hw_neg_min;
  doc["main_pos"] = r.main_pos;
  doc["main_neg"] = r.main_neg;
  if (r.refined_pos)
    doc["refined_pos"] = *r.refined_pos;
  else
    doc["refined_pos"] = nullptr;
  if (r.refined_neg)
    doc["refined_neg"] = *r.refined_neg;
  else
    doc["refined_neg"] = nullptr;
  doc["tight_pos"] = r.tight_pos;
  doc["tight_neg"] = r.tight_neg;
  return doc.dump() + "\n";
}

std::string maximal_json(const MaximalSet& m) {
  nlohmann::ordered_json members = nlohmann::ordered_json::array();
  for (const ZSeq& s : m.members) members.push_back(render(s));
  nlohmann::ordered_json doc = {{"schema", zerosum::kSchemaVersion},
                                {"n", m.n},
                                {"count", m.members.size()},
                                {"members", members}};
  return doc.dump() + "\n";
}

std::vector<ZSeq> diagonal_misses(const MaximalSet& m) {
  std::vector<ZSeq> diag = zerosum::diagonal_family(m.n);
  std::vector<ZSeq> missing;
  for (const ZSeq& s : m.members)
    if (!std::binary_search(diag.begin(), diag.end(), s)) missing.push_back(s);
  return missing;
}

int run_verify(int n, int jobs, const fs::path& cache_dir) {
  std::ostringstream out;
  bool all = true;
  auto report = [&](bool ok, const std::string& name,
                    const std::string& detail) {
    out << (ok ? "[PASS] " : "[FAIL] ") << name;
    if (!ok && !detail.empty()) out << ": " << detail;
    out << "\n";
    all = all && ok;
  };

  AtomSet atoms = load_or_enumerate(n, jobs, cache_dir);

  const int k = std::min(n, 4);
  {
    bool ok = false;
    std::string detail;
    try {
      AtomSet fast = k == n ? atoms : load_or_enumerate(k, jobs, cache_dir);
      AtomSet brute = zerosum::brute_force_atoms(k);
      ok = fast.atoms == brute.atoms;
      if (!ok) detail = "atom sets differ";
    } catch (const std::exception& e) {
      detail = e.what();
    }
    report(ok,
           "atom enumeration matches the exhaustive search (n=" +
               std::to_string(k) + ")",
           detail);
  }

  DerivationPoset poset;
  bool have_poset = false;
  {
    bool ok = false;
    std::string detail;
    try {
      poset = zerosum::build_poset(atoms);
      have_poset = true;
      ok = true;
    } catch (const std::exception& e) {
      detail = e.what();
    }
    report(ok, "every derivation step stays inside the atom set", detail);
  }

  {
    bool ok = false;
    std::string detail;
    try {
      zerosum::dominance_scan(atoms);
      ok = true;
    } catch (const std::exception& e) {
      detail = e.what();
    }
    report(ok, "bounds dominance scan", detail);
  }

  MaximalSet maximal;
  {
    bool ok = false;
    std::string detail;
    if (have_poset) {
      maximal = zerosum::maximal_elements(poset);
      std::set<ZSeq> closed = zerosum::close_under_derivation(
          {maximal.members.begin(), maximal.members.end()}, n);
      std::set<ZSeq> full(atoms.atoms.begin(), atoms.atoms.end());
      ok = closed == full;
      if (!ok)
        detail = "closure reaches " + std::to_string(closed.size()) + " of " +
                 std::to_string(full.size()) + " atoms";
    } else {
      detail = "skipped, the poset could not be built";
    }
    report(ok, "derivation closure of the maximal atoms recovers every atom",
           detail);
  }

  {
    bool ok = false;
    std::string detail;
    if (have_poset) {
      std::set<ZSeq> expected;
      if (n == 6) {
        expected.insert(zerosum::canon(zerosum::parse_seq("5,3,2^2,-6^2")));
        expected.insert(zerosum::canon(zerosum::parse_seq("4^2,3,1,-6^2")));
      }
      std::vector<ZSeq> missing = diagonal_misses(maximal);
      std::set<ZSeq> got(missing.begin(), missing.end());
      ok = got == expected;
      if (!ok) {
        detail = "unexpected difference:";
        for (const ZSeq& s : missing) detail += " " + render(s);
        if (missing.empty()) detail += " (none)";
      }
    } else {
      detail = "skipped, the poset could not be built";
    }
    report(ok, "maximal atoms against the diagonal family", detail);
  }

  if (have_poset) {
    std::set<ZSeq> one = zerosum::one_step_closure(
        {maximal.members.begin(), maximal.members.end()}, n);
    out << "note: one-step closure of the maximal atoms covers " << one.size()
        << " of " << atoms.atoms.size() << " atoms\n";
  }

  out << (all ? "ok" : "FAILED") << "\n";
  std::cout << out.str();
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zero-sum sequence toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "zs 1.0.0");

  int n = 0;
  std::string seq_text;
  std::string format;
  std::string out_path;
  std::string cache_dir_flag;
  bool check_diagonal = false;
  unsigned hc = std::thread::hardware_concurrency();
  int jobs = hc ? static_cast<int>(hc) : 1;

  auto add_common = [&](CLI::App* cmd, bool wants_n) {
    if (wants_n)
      cmd->add_option("-n,--n", n, "half width of the value window")
          ->required()
          ->check(CLI::Range(1, zerosum::kMaxEnumerationN));
    cmd->add_option("--out", out_path, "write the output to this file");
    cmd->add_option("--cache-dir", cache_dir_flag,
                    "atom cache directory (default ./.zscache, or "
                    "ZS_CACHE_DIR)");
    cmd->add_option("--jobs", jobs, "worker threads for enumeration")
        ->check(CLI::Range(1, 256));
  };

  CLI::App* atoms_cmd = app.add_subcommand(
      "atoms", "list the minimal zero-sum sequences over [-n, n]");
  add_common(atoms_cmd, true);
  atoms_cmd->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* poset_cmd = app.add_subcommand(
      "poset", "emit the derivation order on the minimal sequences");
  add_common(poset_cmd, true);
  poset_cmd->add_option("--format", format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));

  CLI::App* maximal_cmd = app.add_subcommand(
      "maximal", "list the maximal elements of the derivation order");
  add_common(maximal_cmd, true);
  maximal_cmd->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  maximal_cmd->add_flag("--check-diagonal", check_diagonal,
                        "also report members outside the diagonal family");

  CLI::App* bounds_cmd = app.add_subcommand(
      "bounds", "evaluate the length bounds for one sequence or a whole n");
  {
    CLI::Option_group* input = bounds_cmd->add_option_group("input");
    input->add_option("--seq", seq_text, "sequence, e.g. \"4^2,3,-1^2,-9\"");
    input->add_option("-n,--n", n, "evaluate every atom for this n")
        ->check(CLI::Range(1, zerosum::kMaxEnumerationN));
    input->require_option(1);
  }
  bounds_cmd->add_option("--out", out_path, "write the output to this file");
  bounds_cmd->add_option("--cache-dir", cache_dir_flag,
                         "atom cache directory (default ./.zscache, or "
                         "ZS_CACHE_DIR)");
  bounds_cmd->add_option("--jobs", jobs, "worker threads for enumeration")
      ->check(CLI::Range(1, 256));
  bounds_cmd->add_option("--format", format,
                         "text or json for --seq, csv for --n")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  CLI::App* compare_cmd = app.add_subcommand(
      "compare", "summarize how the bound families compare across all atoms");
  add_common(compare_cmd, true);

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "cross-check the engine's invariants for one n");
  verify_cmd->add_option("-n,--n", n, "half width of the value window")
      ->required()
      ->check(CLI::Range(1, 6));
  verify_cmd->add_option("--cache-dir", cache_dir_flag,
                         "atom cache directory (default ./.zscache, or "
                         "ZS_CACHE_DIR)");
  verify_cmd->add_option("--jobs", jobs, "worker threads for enumeration")
      ->check(CLI::Range(1, 256));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  fs::path cache_dir = "./.zscache";
  if (const char* env = std::getenv("ZS_CACHE_DIR"); env && *env)
    cache_dir = env;
  if (!cache_dir_flag.empty()) cache_dir = cache_dir_flag;

  try {
    if (atoms_cmd->parsed()) {
      if (format.empty()) format = "text";
      AtomSet atoms = load_or_enumerate(n, jobs, cache_dir);
      emit(format == "json" ? zerosum::atom_set_json(atoms)
                            : atoms_text(atoms),
           out_path);
    } else if (poset_cmd->parsed()) {
      if (format.empty()) format = "dot";
      AtomSet atoms = load_or_enumerate(n, jobs, cache_dir);
      DerivationPoset poset = zerosum::build_poset(atoms);
      emit(format == "json" ? zerosum::poset_json(poset)
                            : zerosum::export_dot(poset),
           out_path);
    } else if (maximal_cmd->parsed()) {
      if (format.empty()) format = "text";
      if (check_diagonal && format != "text")
        throw std::invalid_argument("--check-diagonal needs --format text");
      AtomSet atoms = load_or_enumerate(n, jobs, cache_dir);
      MaximalSet m = zerosum::maximal_elements(zerosum::build_poset(atoms));
      if (format == "json") {
        emit(maximal_json(m), out_path);
      } else {
        std::string out;
        for (const ZSeq& s : m.members) out += render(s) + "\n";
        if (check_diagonal) {
          std::vector<ZSeq> missing = diagonal_misses(m);
          if (missing.empty()) {
            out += "# all maximal atoms lie in the diagonal family\n";
          } else {
            out += "# not in the diagonal family (" +
                   std::to_string(missing.size()) + "):\n";
            for (const ZSeq& s : missing) out += render(s) + "\n";
          }
        }
        emit(out, out_path);
      }
    } else if (bounds_cmd->parsed()) {
      if (!seq_text.empty() || bounds_cmd->count("--seq")) {
        if (format.empty()) format = "text";
        if (format == "csv")
          throw std::invalid_argument("csv output is for bulk mode (--n)");
        BoundReport r = zerosum::bound_report(zerosum::parse_seq(seq_text));
        emit(format == "json" ? bound_report_json(r) : bound_report_text(r),
             out_path);
      } else {
        if (format.empty()) format = "csv";
        if (format != "csv")
          throw std::invalid_argument("bulk bounds output is csv only");
        AtomSet atoms = load_or_enumerate(n, jobs, cache_dir);
        emit(zerosum::bounds_csv(atoms), out_path);
      }
    } else if (compare_cmd->parsed()) {
      AtomSet atoms = load_or_enumerate(n, jobs, cache_dir);
      emit(zerosum::to_text(zerosum::dominance_scan(atoms)), out_path);
    } else if (verify_cmd->parsed()) {
      return run_verify(n, jobs, cache_dir);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
