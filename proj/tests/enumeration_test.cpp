#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <vector>

#include <zerosum/enumeration.hpp>
#include <zerosum/io.hpp>
#include <zerosum/sequence.hpp>

using namespace zerosum;

namespace {

std::filesystem::path temp_dir() {
  auto dir = std::filesystem::temp_directory_path() /
             ("zs-test-" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("bounded partitions come out largest-first") {
  using parts = std::vector<std::vector<int>>;
  CHECK(bounded_partitions(3, 3, 3) ==
        parts{{3}, {2, 1}, {1, 1, 1}});
  CHECK(bounded_partitions(4, 2, 2) == parts{{2, 2}});
  CHECK(bounded_partitions(4, 2, 3) == parts{{2, 2}, {2, 1, 1}});
  CHECK(bounded_partitions(1, 1, 1) == parts{{1}});
  CHECK(bounded_partitions(5, 2, 2) == parts{});
  CHECK_THROWS_AS(bounded_partitions(0, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(bounded_partitions(1, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(bounded_partitions(1, 1, 0), std::invalid_argument);
}

TEST_CASE("atom counts for small windows") {
  const long long expected[] = {2, 4, 9, 20, 53, 109, 284};
  for (int n = 1; n <= 7; ++n) {
    AtomSet atoms = enumerate_atoms(n);
    CHECK(atoms.n == n);
    CHECK(atoms.atoms.size() == static_cast<size_t>(expected[n - 1]));
    CHECK_NOTHROW(validate_atom_set(atoms));
  }
  CHECK_THROWS_AS(enumerate_atoms(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_atoms(kMaxEnumerationN + 1),
                  std::invalid_argument);
}

TEST_CASE("enumeration agrees with the exhaustive search") {
  for (int n = 1; n <= 4; ++n)
    CHECK(enumerate_atoms(n).atoms == brute_force_atoms(n).atoms);
  CHECK_THROWS_AS(brute_force_atoms(5), std::invalid_argument);
}

TEST_CASE("the candidate prune does not change the result") {
  for (int n = 1; n <= 4; ++n) {
    EnumerateOptions with, without;
    with.prune = true;
    without.prune = false;
    CHECK(enumerate_atoms(n, with).atoms == enumerate_atoms(n, without).atoms);
    CHECK(enumerate_atoms(n, with).provenance.pruned);
    CHECK_FALSE(enumerate_atoms(n, without).provenance.pruned);
  }
}

TEST_CASE("worker count does not change the result") {
  EnumerateOptions one, four;
  one.jobs = 1;
  four.jobs = 4;
  CHECK(enumerate_atoms(5, one).atoms == enumerate_atoms(5, four).atoms);
}

TEST_CASE("membership lookups") {
  AtomSet atoms = enumerate_atoms(3);
  CHECK(atoms.contains(parse_seq("2^3,-3^2")));
  CHECK(atoms.contains(parse_seq("0")));
  // only canonical representatives are stored
  CHECK_FALSE(atoms.contains(parse_seq("3^2,-2^3")));
  CHECK_FALSE(atoms.contains(parse_seq("1^4,-4")));
}

TEST_CASE("atom set json shape") {
  CHECK(atom_set_json(enumerate_atoms(1)) ==
        "{\"schema\":1,\"n\":1,\"count\":2,\"atoms\":"
        "[{\"pos\":[[1,1]],\"neg\":[[-1,1]],\"zero\":0},"
        "{\"pos\":[],\"neg\":[],\"zero\":1}]}\n");
}

TEST_CASE("atom sets survive a save and load round trip") {
  auto dir = temp_dir();
  auto path = dir / "atoms-roundtrip.json";
  AtomSet atoms = enumerate_atoms(4);
  save_atoms(atoms, path);
  AtomSet loaded = load_atoms(path);
  CHECK(loaded.n == atoms.n);
  CHECK(loaded.atoms == atoms.atoms);
  std::filesystem::remove_all(dir);
}

TEST_CASE("loading rejects damaged files") {
  auto dir = temp_dir();
  CHECK_THROWS_AS(load_atoms(dir / "missing.json"), std::runtime_error);

  auto bad = dir / "bad.json";
  write_file_atomic(bad, "this is not json\n");
  CHECK_THROWS_AS(load_atoms(bad), std::runtime_error);

  write_file_atomic(bad, "{\"schema\":99,\"n\":1,\"count\":0,\"atoms\":[]}");
  CHECK_THROWS_AS(load_atoms(bad), std::runtime_error);

  // count disagreeing with the payload
  write_file_atomic(bad,
                    "{\"schema\":1,\"n\":1,\"count\":3,\"atoms\":"
                    "[{\"pos\":[],\"neg\":[],\"zero\":1}]}");
  CHECK_THROWS_AS(load_atoms(bad), std::runtime_error);

  // structurally valid json, but the pair atom for n=1 is missing
  write_file_atomic(bad,
                    "{\"schema\":1,\"n\":1,\"count\":1,\"atoms\":"
                    "[{\"pos\":[],\"neg\":[],\"zero\":1}]}");
  CHECK_THROWS_AS(load_atoms(bad), std::runtime_error);
  std::filesystem::remove_all(dir);
}

TEST_CASE("atom set validation catches corruption") {
  AtomSet atoms = enumerate_atoms(2);
  CHECK_NOTHROW(validate_atom_set(atoms));

  AtomSet missing_zero = atoms;
  std::erase(missing_zero.atoms, parse_seq("0"));
  CHECK_THROWS_AS(validate_atom_set(missing_zero), std::runtime_error);

  AtomSet with_noncanonical = atoms;
  with_noncanonical.atoms.push_back(parse_seq("2,-1^2"));
  CHECK_THROWS_AS(validate_atom_set(with_noncanonical), std::runtime_error);

  AtomSet unsorted = atoms;
  std::swap(unsorted.atoms.front(), unsorted.atoms.back());
  CHECK_THROWS_AS(validate_atom_set(unsorted), std::runtime_error);

  AtomSet out_of_range = atoms;
  out_of_range.n = 0;
  CHECK_THROWS_AS(validate_atom_set(out_of_range), std::runtime_error);
}
