// clgenus: exact commutator length and cyclic block interchange distance.
//
// Subcommands: cl, cbi, reduce, verify-nu-lemma, oracle-cbi. Machine output
// via --json; every printed certificate is re-verified first. Exit codes:
//   0 ok, 1 internal error, 2 parse/input error, 3 not a boundary,
//   4 not related, 5 size guard, 6 invalid instance/solution,
//   7 nu-lemma violation.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "clgenus/cbi.hpp"
#include "clgenus/certify.hpp"
#include "clgenus/fi.hpp"
#include "clgenus/genus.hpp"
#include "clgenus/json_io.hpp"
#include "clgenus/reduce.hpp"
#include "clgenus/word.hpp"

namespace {

using clgenus::json;

int default_threads() {
  if (const char* env = std::getenv("CLGENUS_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

struct Options {
  bool json_output = false;
  int threads = default_threads();
  std::size_t max_length = 64;
};

class Timer {
 public:
  long long elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit(const Options& opt, const json& report, const std::string& human) {
  if (opt.json_output)
    std::cout << report.dump(2) << "\n";
  else
    std::cout << human;
}

json read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw clgenus::parse_error("cannot open instance file: " + path, 0);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw clgenus::parse_error(std::string("instance file is not valid JSON: ") + e.what(), 0);
  }
}

int run_cl(const Options& opt, const std::string& chain_text, bool with_certificate,
           bool with_factorization, std::optional<int> decide) {
  Timer timer;
  clgenus::SearchOptions search{opt.threads, std::nullopt, opt.max_length};
  const clgenus::Chain chain = clgenus::Chain::parse(chain_text);
  if (!clgenus::is_boundary(chain)) throw clgenus::not_boundary_error("chain is not a boundary");

  json report{{"command", "cl"}, {"inputs", {{"chain", chain_text}}}};
  std::string human;

  if (decide) {
    const bool yes = clgenus::cl_at_most(chain, *decide, search);
    report["result"] = yes;
    human = std::string("cl <= ") + std::to_string(*decide) + ": " + (yes ? "yes" : "no") + "\n";
  } else {
    const clgenus::GenusCertificate cert = clgenus::cl_chain(chain, search);
    report["result"] = cert.genus;
    human = "cl = " + std::to_string(cert.genus) + "\n";
    if (with_certificate) {
      if (!clgenus::verify_certificate(chain, cert.pairing, cert.genus))
        throw std::logic_error("search produced a certificate that fails verification");
      report["certificate"] = clgenus::certificate_json(cert);
      human += "certificate: " + clgenus::certificate_json(cert).dump() + "\n";
    }
    if (with_factorization) {
      if (chain_text.find('+') != std::string::npos)
        throw clgenus::parse_error("--factorize takes a single word, not a chain", 0);
      const clgenus::Word w = clgenus::Word::parse(chain_text);
      const clgenus::CommutatorFactorization f = clgenus::factorize(w, search);
      if (!(clgenus::factorization_product(f) == clgenus::free_reduce(w)))
        throw std::logic_error("factorization failed reconstruction");
      report["certificate"] = clgenus::factorization_json(f);
      human += "factorization: " + clgenus::factorization_json(f).dump() + "\n";
    }
  }
  report["elapsedMillis"] = timer.elapsed_ms();
  emit(opt, report, human);
  return 0;
}

int run_cbi(const Options& opt, const std::string& v_text, const std::string& w_text,
            bool with_witness, bool with_oracle, bool with_lower_bound) {
  Timer timer;
  clgenus::SearchOptions search{opt.threads, std::nullopt, opt.max_length};
  const clgenus::Word v = clgenus::Word::parse(v_text);
  const clgenus::Word w = clgenus::Word::parse(w_text);

  const int distance = clgenus::d_cbi(v, w, search);
  json report{{"command", "cbi"}, {"inputs", {{"v", v_text}, {"w", w_text}}}};
  std::string human = "d_cbi = " + std::to_string(distance) + "\n";
  json result{{"distance", distance}};

  if (with_witness) {
    const clgenus::InterchangeSequence seq = clgenus::extract_sequence(v, w, search);
    if (!clgenus::verify_sequence(v, w, seq) ||
        static_cast<int>(seq.moves.size()) != distance)
      throw std::logic_error("extracted witness failed verification");
    report["certificate"] = clgenus::sequence_json(seq);
    human += "witness: " + clgenus::sequence_json(seq).dump() + "\n";
  }
  if (with_oracle) {
    const auto oracle = clgenus::oracle_bfs(v, w);
    if (!oracle || *oracle != distance)
      throw std::logic_error("BFS oracle disagrees with the orbit search");
    result["oracle"] = *oracle;
    human += "oracle = " + std::to_string(*oracle) + "\n";
  }
  if (with_lower_bound) {
    const long bound = clgenus::nu_lower_bound(v, w);
    result["lowerBound"] = bound;
    human += "nu lower bound = " + std::to_string(bound) + "\n";
  }

  report["result"] = (with_oracle || with_lower_bound) ? result : json(distance);
  report["elapsedMillis"] = timer.elapsed_ms();
  emit(opt, report, human);
  return 0;
}

int run_reduce(const Options& opt, const std::string& kind, const std::string& path) {
  Timer timer;
  const json instance = read_instance_file(path);
  json report{{"command", "reduce"}, {"inputs", {{"kind", kind}, {"file", path}}}};
  json output;
  std::string human;

  if (kind == "three-partition") {
    const clgenus::ThreePartitionInstance inst = clgenus::three_partition_from_json(instance);
    const clgenus::CbiInstance enc = clgenus::encode_3p(inst);
    output = clgenus::cbi_instance_json(enc);
    human = "v = " + enc.v.str() + "\nw = " + enc.w.str() + "\nk = " + std::to_string(enc.k) +
            "\n";
    if (instance.contains("solution")) {
      const auto triples = clgenus::three_partition_solution_from_json(instance.at("solution"));
      const clgenus::InterchangeSequence seq = clgenus::decode_3p_solution(inst, triples);
      if (!clgenus::verify_sequence(enc.v, enc.w, seq))
        throw std::logic_error("decoded witness failed verification");
      report["certificate"] = clgenus::sequence_json(seq);
      human += "witness verified (" + std::to_string(seq.moves.size()) + " moves)\n";
    }
  } else if (kind == "ebp") {
    const clgenus::Chain chain = clgenus::encode_ebp(clgenus::ebp_from_json(instance));
    output = json{{"chain", chain.str()}, {"k", 0}};
    human = "chain = " + chain.str() + "\nk = 0\n";
  } else if (kind == "binary") {
    const clgenus::Word v = clgenus::Word::parse(instance.at("v").get<std::string>());
    output["v"] = clgenus::lambda_encode(v).str();
    if (instance.contains("w"))
      output["w"] =
          clgenus::lambda_encode(clgenus::Word::parse(instance.at("w").get<std::string>())).str();
    if (instance.contains("k")) output["k"] = instance.at("k");
    human = "lambda(v) = " + output["v"].get<std::string>() + "\n";
    if (output.contains("w")) human += "lambda(w) = " + output["w"].get<std::string>() + "\n";
  } else if (kind == "single-cl") {
    const clgenus::Word v = clgenus::Word::parse(instance.at("v").get<std::string>());
    const clgenus::Word w = clgenus::Word::parse(instance.at("w").get<std::string>());
    json words = json::array();
    for (const clgenus::Word& u : clgenus::cbi_to_cl_single(v, w)) words.push_back(u.str());
    output = json{{"words", words}};
    if (instance.contains("k")) output["k"] = instance.at("k");
    human = "words = " + words.dump() + "\n";
  } else {
    throw clgenus::parse_error("unknown reduction kind: " + kind, 0);
  }

  report["result"] = output;
  report["elapsedMillis"] = timer.elapsed_ms();
  emit(opt, report, human);
  return 0;
}

// Byte-identical across runs (no timing field), so it prints the bare report
// in both output modes.
int run_verify_nu_lemma() {
  const clgenus::NuDeltaReport r = clgenus::exhaustive_delta_check();
  const json report{{"maxDelta", r.max_delta},
                    {"deltaSixCcCuts", r.delta_six_cc_cuts},
                    {"casesChecked", r.cases_checked}};
  std::cout << report.dump() << "\n";
  return (r.max_delta <= 6 && r.delta_six_cc_cuts == 0) ? 0 : 7;
}

int run_oracle(const Options& opt, const std::string& v_text, const std::string& w_text,
               std::optional<int> cap) {
  Timer timer;
  const clgenus::Word v = clgenus::Word::parse(v_text);
  const clgenus::Word w = clgenus::Word::parse(w_text);
  const auto d = clgenus::oracle_bfs(v, w, cap);
  json report{{"command", "oracle-cbi"}, {"inputs", {{"v", v_text}, {"w", w_text}}}};
  std::string human;
  if (d) {
    report["result"] = *d;
    human = "d_cbi = " + std::to_string(*d) + "\n";
  } else {
    report["result"] = "exceeded";
    human = "exceeded cap\n";
  }
  report["elapsedMillis"] = timer.elapsed_ms();
  emit(opt, report, human);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact commutator length and cyclic block interchange toolkit"};
  app.require_subcommand(1);
  app.fallthrough(true);  // global flags may follow the subcommand arguments

  Options opt;
  app.add_flag("--json", opt.json_output, "machine-readable JSON on stdout");
  app.add_option("--threads", opt.threads, "search worker threads (env CLGENUS_THREADS)")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-length", opt.max_length, "length guard for exact cl search")
      ->capture_default_str();

  std::string chain_text, v_text, w_text, kind, instance_path;
  bool with_certificate = false, with_factorization = false;
  bool with_witness = false, with_oracle = false, with_lower_bound = false;
  std::optional<int> decide, cap;

  CLI::App* cl = app.add_subcommand("cl", "commutator length of a chain");
  cl->add_option("chain", chain_text, "chain text, terms joined by ' + '")->required();
  cl->add_flag("--certificate", with_certificate, "emit the Bardakov pairing");
  cl->add_flag("--factorize", with_factorization, "emit an explicit commutator factorization");
  cl->add_option("--decide", decide, "decide cl <= K instead of computing cl");

  CLI::App* cbi = app.add_subcommand("cbi", "cyclic block interchange distance");
  cbi->add_option("v", v_text)->required();
  cbi->add_option("w", w_text)->required();
  cbi->add_flag("--witness", with_witness, "emit an optimal move sequence");
  cbi->add_flag("--oracle", with_oracle, "cross-check against the BFS oracle");
  cbi->add_flag("--lower-bound", with_lower_bound, "nu lower bound ({a,b,c,d} words)");

  CLI::App* reduce = app.add_subcommand("reduce", "run a reduction encoder");
  reduce->add_option("kind", kind, "three-partition | ebp | binary | single-cl")->required();
  reduce->add_option("instance", instance_path, "instance JSON file")->required();

  app.add_subcommand("verify-nu-lemma", "exhaustively check the per-move nu bounds");

  CLI::App* oracle = app.add_subcommand("oracle-cbi", "BFS distance oracle (desk scale)");
  oracle->add_option("v", v_text)->required();
  oracle->add_option("w", w_text)->required();
  oracle->add_option("--cap", cap, "report 'exceeded' beyond this distance");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("cl"))
      return run_cl(opt, chain_text, with_certificate, with_factorization, decide);
    if (app.got_subcommand("cbi"))
      return run_cbi(opt, v_text, w_text, with_witness, with_oracle, with_lower_bound);
    if (app.got_subcommand("reduce")) return run_reduce(opt, kind, instance_path);
    if (app.got_subcommand("verify-nu-lemma")) return run_verify_nu_lemma();
    if (app.got_subcommand("oracle-cbi")) return run_oracle(opt, v_text, w_text, cap);
  } catch (const clgenus::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const clgenus::not_boundary_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const clgenus::not_related_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const clgenus::size_guard_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const clgenus::invalid_instance_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 6;
  } catch (const clgenus::not_a_solution_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 6;
  } catch (const clgenus::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
