#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "app.h"
#include "bfile.h"
#include "cache.h"
#include "records.h"
#include "subsum/binary.h"
#include "subsum/subsum.h"

namespace fs = std::filesystem;
using namespace subsum;
using namespace subsum::cli;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  args.insert(args.begin(), "subsum");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("subsum-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter_++));
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  const fs::path& path() const { return path_; }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

void reset_memos() {
  clear_subsum_caches();
  clear_binary_caches();
}

}  // namespace

TEST(Compute, NumRecord) {
  const auto r = run({"--no-cache", "compute", "num", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"object\":\"num\",\"n\":3,\"family\":\"all\",\"coeffs\":[\"3\",\"2\",\"4\",\"2\",\"3\"]}\n");
}

TEST(Compute, OtherObjects) {
  EXPECT_EQ(run({"--no-cache", "compute", "c-row", "6"}).out,
            "{\"object\":\"c-row\",\"n\":6,\"family\":\"all\",\"c\":[\"3\",\"1\"]}\n");
  EXPECT_EQ(run({"--no-cache", "compute", "den", "3"}).out,
            "{\"object\":\"den\",\"n\":3,\"family\":\"all\",\"exponents\":{\"1\":2,\"2\":1,\"3\":1}}\n");
  EXPECT_EQ(run({"--no-cache", "compute", "num-b", "4"}).out,
            "{\"object\":\"num-b\",\"n\":4,\"family\":\"binary\",\"coeffs\":[\"4\",\"10\",\"18\",\"18\",\"20\",\"18\",\"18\","
            "\"10\",\"4\"]}\n");
  const auto naive = Record::parse(run({"--no-cache", "compute", "num-star", "3", "--strategy", "naive"}).out);
  const auto partdp = Record::parse(run({"--no-cache", "compute", "num-star", "3", "--strategy", "partdp"}).out);
  EXPECT_EQ(naive["strategy"], "naive");
  EXPECT_EQ(naive["coeffs"], partdp["coeffs"]);
}

TEST(Compute, CsvOutput) {
  const auto r = run({"--no-cache", "compute", "num", "2", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "object,n,family,field,index,value\n"
            "num,2,all,coeffs,0,2\n"
            "num,2,all,coeffs,1,2\n"
            "num,2,all,coeffs,2,2\n");
  EXPECT_EQ(csv_escape("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_escape("say \"x\""), "\"say \"\"x\"\"\"");
  EXPECT_EQ(csv_escape("plain"), "plain");
}

TEST(Eval, Points) {
  EXPECT_EQ(run({"--no-cache", "eval", "3", "minus1"}).out,
            "{\"object\":\"eval\",\"n\":3,\"family\":\"all\",\"point\":\"minus1\",\"value\":\"6\"}\n");
  EXPECT_EQ(run({"--no-cache", "eval", "4", "one"}).out,
            "{\"object\":\"eval\",\"n\":4,\"family\":\"all\",\"point\":\"one\",\"value\":\"152\"}\n");
  EXPECT_EQ(run({"--no-cache", "eval", "3", "zeta:4"}).out,
            "{\"object\":\"eval\",\"n\":3,\"family\":\"all\",\"point\":\"zeta:4\",\"modulus\":4,\"residue\":[\"2\",\"0\"],"
            "\"abs2\":\"4\"}\n");
  EXPECT_EQ(run({"--no-cache", "eval", "3", "zeta:5", "--abs2"}).code, kExitUsage);
  EXPECT_EQ(run({"--no-cache", "eval", "3", "zeta:0"}).code, kExitUsage);
}

TEST(Check, ExitCodes) {
  EXPECT_EQ(run({"--no-cache", "check", "THM_NUM_MINUS1", "1", "8"}).code, kExitOk);
  const auto stated = run({"--no-cache", "check", "PROP_NUM_AT_1_AS_STATED", "2", "4", "--no-timing"});
  EXPECT_EQ(stated.code, kExitGatingFailure);
  EXPECT_NE(stated.out.find("\"computed\":\"152\",\"expected\":\"40\""), std::string::npos);
  // a failing conjecture is reported but only gates with --strict
  EXPECT_EQ(run({"--no-cache", "check", "BIN_SHAPE_CONJ", "4", "5"}).code, kExitOk);
  EXPECT_EQ(run({"--no-cache", "check", "BIN_SHAPE_CONJ", "4", "5", "--strict"}).code, kExitGatingFailure);
  EXPECT_EQ(run({"--no-cache", "check", "NOPE"}).code, kExitUsage);
  EXPECT_EQ(run({"--no-cache", "check", "PROP_QG", "1", "3"}).code, kExitUsage);
  EXPECT_EQ(run({"--no-cache", "compute", "c-row", "5", "--family", "odd"}).code, kExitUsage);
  EXPECT_EQ(run({"--no-cache", "compute"}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(Check, SuiteAndList) {
  const auto r = run({"--no-cache", "check", "power-sums,THM_NUM_MINUS1", "1", "3", "--no-timing", "-j", "2"});
  EXPECT_EQ(r.code, kExitOk);
  std::size_t lines = 0;
  for (char c : r.out) lines += (c == '\n');
  EXPECT_EQ(lines, 4u * 3u);
  EXPECT_EQ(r.out.find("elapsed_ms"), std::string::npos);
}

TEST(Cache, RoundTripGivesIdenticalOutput) {
  TempDir dir;
  reset_memos();
  const auto first = run({"--cache-dir", dir.path().string(), "compute", "num", "14"});
  ASSERT_EQ(first.code, 0);
  EXPECT_FALSE(fs::is_empty(dir.path()));
  reset_memos();
  const auto second = run({"--cache-dir", dir.path().string(), "compute", "num", "14"});
  EXPECT_EQ(first.out, second.out);
  reset_memos();
  EXPECT_EQ(run({"--no-cache", "compute", "num", "14"}).out, first.out);
}

TEST(Cache, ServesStoredEntries) {
  TempDir dir;
  DiskStore store(dir.path());
  const CacheKey key{"num", "all", 3, "partdp"};
  EXPECT_EQ(store.load(key), std::nullopt);
  store.save(key, DensePoly{9, 9});
  EXPECT_EQ(store.load(key), (DensePoly{9, 9}));
  EXPECT_EQ(store.load(CacheKey{"num", "all", 4, "partdp"}), std::nullopt);
  // a valid entry is trusted, which shows loads really bypass the computation
  reset_memos();
  EXPECT_NE(run({"--cache-dir", dir.path().string(), "compute", "num", "3"}).out.find("[\"9\",\"9\"]"),
            std::string::npos);
  reset_memos();
}

TEST(Cache, CorruptOrForeignEntriesAreIgnored) {
  TempDir dir;
  DiskStore store(dir.path());
  const CacheKey key{"num", "all", 3, "partdp"};
  const auto path = store.path_for(key);

  store.save(key, DensePoly{9, 9});
  {
    std::ifstream in(path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    const auto at = text.find("\"9\"");
    text.replace(at, 3, "\"8\"");
    std::ofstream(path) << text;
  }
  EXPECT_EQ(store.load(key), std::nullopt);  // hash mismatch

  store.save(key, DensePoly{9, 9});
  {
    auto doc = Record::parse(std::ifstream(path));
    doc["version"] = "subsum-cache-0";
    std::ofstream(path) << doc.dump();
  }
  EXPECT_EQ(store.load(key), std::nullopt);

  std::ofstream(path) << "{not json";
  EXPECT_EQ(store.load(key), std::nullopt);

  reset_memos();
  EXPECT_EQ(run({"--cache-dir", dir.path().string(), "compute", "num", "3"}).out,
            "{\"object\":\"num\",\"n\":3,\"family\":\"all\",\"coeffs\":[\"3\",\"2\",\"4\",\"2\",\"3\"]}\n");
  // and the bad file was replaced with a good one
  reset_memos();
  EXPECT_EQ(store.load(key), (DensePoly{3, 2, 4, 2, 3}));
}

TEST(Cache, Sha256) {
  EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(BFile, Parse) {
  std::istringstream in("# comment\n\n1 1\n2   3\n10 -4\n");
  const auto rows = parse_bfile(in);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[2].first, 10);
  EXPECT_EQ(rows[2].second, -4);
  std::istringstream bad("1 1\n2 x\n");
  try {
    parse_bfile(bad);
    FAIL() << "expected a parse error";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("2"), std::string::npos);
  }
}

TEST(BFile, Sequences) {
  EXPECT_TRUE(known_sequence("s"));
  EXPECT_FALSE(known_sequence("zeta"));
  const auto s = sequence_terms("s", 6);
  EXPECT_EQ(s[0], std::nullopt);
  EXPECT_EQ(*s[4], 7);
  const auto b = sequence_terms("B", 6);
  EXPECT_EQ(*b[6], 6);
  const auto sig = sequence_terms("sigma1-sum", 4);
  EXPECT_EQ(*sig[4], 1 + 3 + 4 + 7);
}

TEST(BFile, CheckCommand) {
  TempDir dir;
  const auto good = dir.path() / "good.txt";
  std::ofstream(good) << "1 1\n2 3\n3 3\n4 7\n";
  EXPECT_EQ(run({"--no-cache", "check", "--bfile", good.string(), "--sequence", "s"}).code, kExitOk);
  const auto bad = dir.path() / "bad.txt";
  std::ofstream(bad) << "1 1\n2 4\n";
  EXPECT_EQ(run({"--no-cache", "check", "--bfile", bad.string(), "--sequence", "s"}).code, kExitGatingFailure);
  EXPECT_EQ(run({"--no-cache", "check", "--bfile", (dir.path() / "missing").string(), "--sequence", "s"}).code,
            kExitUsage);
  EXPECT_EQ(run({"--no-cache", "check", "--bfile", good.string(), "--sequence", "nope"}).code, kExitUsage);
}

TEST(BlackBox, ProcessExitCodes) {
  auto status = [](const std::string& args) {
    const std::string cmd = std::string(SUBSUM_BIN) + " --no-cache " + args + " > /dev/null 2>&1";
    const int raw = std::system(cmd.c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  EXPECT_EQ(status("compute num 3"), 0);
  EXPECT_EQ(status("check PROP_NUM_AT_1_AS_STATED 2 4"), 1);
  EXPECT_EQ(status("check ODD_MINUS1_CONJ 1 20"), 0);
  EXPECT_EQ(status("compute frobnicate 3"), 2);
  EXPECT_EQ(status("--bogus"), 2);
}
