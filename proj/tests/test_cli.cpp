#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <string>

#include "clgenus/cbi.hpp"
#include "clgenus/genus.hpp"
#include "clgenus/json_io.hpp"
#include "clgenus/reduce.hpp"
#include "clgenus/word.hpp"
#include "test_util.hpp"

using namespace clgenus;
using testutil::run_command;

namespace {

const std::string kBin = CLGENUS_BIN_PATH;

std::string quoted(const std::string& s) { return "'" + s + "'"; }

}  // namespace

TEST_CASE("cl command") {
  auto r = run_command(kBin + " cl abAB");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "cl = 1\n");

  r = run_command(kBin + " --json cl " + quoted("ab + BA"));
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("result").get<int>() == 0);
  CHECK(j.at("command") == "cl");

  r = run_command(kBin + " --json cl abAB --decide 0");
  CHECK(json::parse(r.out).at("result").get<bool>() == false);
  r = run_command(kBin + " --json cl abAB --decide 1");
  CHECK(json::parse(r.out).at("result").get<bool>() == true);
}

TEST_CASE("cl certificate round-trips through JSON") {
  const auto r = run_command(kBin + " --json cl abABabAB --certificate");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  const json cert = j.at("certificate");
  const Chain c = Chain::parse("abABabAB");
  CHECK(verify_certificate(c, pairing_map_from_json(cert), cert.at("genus").get<int>()));
  CHECK(cert.at("genus").get<int>() == j.at("result").get<int>());
}

TEST_CASE("cl factorization round-trips through JSON") {
  const auto r = run_command(kBin + " --json cl abABabABabAB --factorize");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  const CommutatorFactorization f = factorization_from_json(j.at("certificate"));
  CHECK(f.pairs.size() == 2);
  CHECK(factorization_product(f) == Word::parse("abABabABabAB"));
}

TEST_CASE("cbi command and witness round-trip") {
  auto r = run_command(kBin + " cbi ababab aaabbb");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "d_cbi = 1\n");

  r = run_command(kBin + " --json cbi ababab aaabbb --witness --oracle --lower-bound");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("result").at("distance").get<int>() == 1);
  CHECK(j.at("result").at("oracle").get<int>() == 1);
  CHECK(j.at("result").at("lowerBound").get<long>() <= 1);
  const InterchangeSequence seq = sequence_from_json(j.at("certificate"));
  CHECK(seq.moves.size() == 1);
  CHECK(verify_sequence(Word::parse("ababab"), Word::parse("aaabbb"), seq));
}

TEST_CASE("reduce three-partition with a solution") {
  const std::string path = "/tmp/clgenus_test_3p.json";
  {
    std::ofstream out(path);
    out << R"({"n":1,"N":12,"a":[4,4,4],"solution":[[0,1,2]]})";
  }
  const auto r = run_command(kBin + " --json reduce three-partition " + path);
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("result").at("v") == "aabccccdbccccdbccccdb");
  CHECK(j.at("result").at("w") == "accccccccccccdddabbbb");
  CHECK(j.at("result").at("k").get<int>() == 3);
  const InterchangeSequence seq = sequence_from_json(j.at("certificate"));
  CHECK(verify_sequence(Word::parse(j.at("result").at("v").get<std::string>()),
                        Word::parse(j.at("result").at("w").get<std::string>()), seq));
  std::remove(path.c_str());
}

TEST_CASE("reduce ebp, binary and single-cl") {
  const std::string path = "/tmp/clgenus_test_misc.json";
  {
    std::ofstream out(path);
    out << R"({"sizes":[1,2],"N":1,"B":3})";
  }
  auto r = run_command(kBin + " --json reduce ebp " + path);
  REQUIRE(r.exit_code == 0);
  CHECK(json::parse(r.out).at("result").at("chain") == "abAB + abbABB + bbbaBBBA");

  {
    std::ofstream out(path);
    out << R"({"v":"ab"})";
  }
  r = run_command(kBin + " --json reduce binary " + path);
  REQUIRE(r.exit_code == 0);
  CHECK(json::parse(r.out).at("result").at("v").get<std::string>().size() == 153);

  {
    std::ofstream out(path);
    out << R"({"v":"ab","w":"ba"})";
  }
  r = run_command(kBin + " --json reduce single-cl " + path);
  REQUIRE(r.exit_code == 0);
  const json words = json::parse(r.out).at("result").at("words");
  REQUIRE(words.size() == 2);
  CHECK(words[0] == "abAB");
  CHECK(words[1] == "abBA");
  std::remove(path.c_str());
}

TEST_CASE("verify-nu-lemma is deterministic and green") {
  const auto first = run_command(kBin + " verify-nu-lemma");
  CHECK(first.exit_code == 0);
  const json j = json::parse(first.out);
  CHECK(j.at("maxDelta").get<int>() == 6);
  CHECK(j.at("deltaSixCcCuts").get<long>() == 0);
  CHECK(j.at("casesChecked").get<long>() == 69632);

  const auto second = run_command(kBin + " verify-nu-lemma");
  CHECK(second.out == first.out);  // byte-identical
}

TEST_CASE("oracle-cbi command") {
  auto r = run_command(kBin + " --json oracle-cbi ababab aaabbb");
  CHECK(json::parse(r.out).at("result").get<int>() == 1);

  r = run_command(kBin + " --json oracle-cbi ababab aaabbb --cap 0");
  CHECK(json::parse(r.out).at("result") == "exceeded");
}

TEST_CASE("exit codes") {
  CHECK(run_command(kBin + " cl " + quoted("ab$")).exit_code == 2);
  CHECK(run_command(kBin + " cl ab").exit_code == 3);
  CHECK(run_command(kBin + " cbi ab aab").exit_code == 4);
  const std::string v48(std::string(8, 'a') + std::string(8, 'b') + std::string(8, 'a') +
                        std::string(8, 'b') + std::string(8, 'a') + std::string(8, 'b'));
  const std::string w48(std::string(24, 'a') + std::string(24, 'b'));
  CHECK(run_command(kBin + " cbi " + v48 + " " + w48).exit_code == 5);
  CHECK(run_command(kBin + " oracle-cbi aaaaaaabbbbbbb bbbbbbbaaaaaaa").exit_code == 5);

  const std::string path = "/tmp/clgenus_test_bad.json";
  {
    std::ofstream out(path);
    out << R"({"n":1,"N":12,"a":[3,4,5]})";
  }
  CHECK(run_command(kBin + " reduce three-partition " + path).exit_code == 6);
  std::remove(path.c_str());

  CHECK(run_command(kBin + " cl abAB --threads 2").exit_code == 0);
}
