// Command-line front end: invariants, polynomials, decomposition, catalog
// listing, and the verification sweep over closed braids.
//
// Exit codes: 0 on success (and when a sweep fully passes), 1 when a sweep
// reports failures, 2 on usage or engine errors.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "braidpoly/braid_word.hpp"
#include "braidpoly/catalog.hpp"
#include "braidpoly/errors.hpp"
#include "braidpoly/homfly.hpp"
#include "braidpoly/link_analysis.hpp"
#include "braidpoly/normalized.hpp"
#include "braidpoly/verify.hpp"
#include "json.hpp"

namespace {

using braidpoly::BraidWord;
using ordered_json = nlohmann::ordered_json;

int run_invariants(const std::string& word_text) {
  const BraidWord w = braidpoly::parse_braid(word_text);
  std::cout << braidpoly::to_json_text(braidpoly::link_profile(w)) << '\n';
  return 0;
}

int run_homfly(const std::string& word_text, const std::string& format) {
  const BraidWord w = braidpoly::parse_braid(word_text);
  const braidpoly::LaurentPoly2 P = braidpoly::homfly(w);
  if (format == "json") {
    std::cout << braidpoly::to_json_text(P) << '\n';
  } else {
    std::cout << braidpoly::to_text(P) << '\n';
  }
  return 0;
}

int run_normalized(const std::string& word_text,
                   const std::string& profile_override) {
  const BraidWord w = braidpoly::parse_braid(word_text);
  braidpoly::LinkProfile profile;
  if (!profile_override.empty()) {
    const ordered_json fields = ordered_json::parse(profile_override);
    profile = braidpoly::knot_profile(fields.at("genus").get<int>(),
                                      fields.at("s").get<int>(),
                                      fields.at("p").get<int>(), w.strands);
  } else {
    profile = braidpoly::link_profile(w);
  }
  const braidpoly::LaurentPoly2 P = braidpoly::homfly(w);
  const braidpoly::HGrid grid = braidpoly::normalize(P, profile);
  const braidpoly::TheoremReport report = braidpoly::check_theorem_main(grid);

  ordered_json out;
  out["grid"] = ordered_json::parse(braidpoly::to_json_text(grid));
  out["theorem"] = ordered_json::parse(braidpoly::to_json_text(report));
  std::cout << out.dump() << '\n';
  return 0;
}

int run_decompose(const std::string& word_text) {
  const BraidWord w = braidpoly::parse_braid(word_text);
  std::cout << braidpoly::to_json_text(braidpoly::decompose(w)) << '\n';
  return 0;
}

int run_specialization(const std::string& word_text, const std::string& which) {
  const BraidWord w = braidpoly::parse_braid(word_text);
  if (which == "conway") {
    std::cout << braidpoly::to_text(braidpoly::conway(w), "z", 1) << '\n';
  } else if (which == "jones") {
    std::cout << braidpoly::to_text(braidpoly::jones(w)) << '\n';
  } else {
    std::cout << braidpoly::to_text(braidpoly::alexander(w)) << '\n';
  }
  return 0;
}

int run_verify(const braidpoly::SweepOptions& options,
               const std::string& out_path) {
  const braidpoly::SweepReport report = braidpoly::verify_sweep(options);
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw braidpoly::Error("cannot open output file: " + out_path);
    for (const std::string& line : report.jsonl) out << line << '\n';
  }
  std::cout << braidpoly::human_summary(report);
  return report.all_pass() ? 0 : 1;
}

int run_catalog(int strands, int max_length) {
  for (const BraidWord& w :
       braidpoly::enumerate_positive_words(strands, max_length)) {
    std::cout << braidpoly::to_text(w) << '\n';
  }
  return 0;
}

// Builds the option tree and dispatches. Constructing SweepOptions reads
// BRAIDPOLY_NODE_CAP and can itself throw, so the caller wraps everything.
int run_cli(int argc, char** argv) {
  CLI::App app{
      "HOMFLY polynomials, normalized coefficient grids, and verification "
      "sweeps for closed braids.\nBraid words are written \"<strands>: "
      "<letters>\", e.g. \"2: 1 1 1\" or \"4: s2 s1 s3 s2 -1\"."};
  app.require_subcommand(1);

  std::string word_text;
  std::string format = "text";
  std::string profile_override;

  auto* inv = app.add_subcommand("invariants",
                                 "Link profile of the closure (JSON)");
  inv->add_option("word", word_text, "braid word")->required();

  auto* hom = app.add_subcommand("homfly", "HOMFLY polynomial of the closure");
  hom->add_option("word", word_text, "braid word")->required();
  hom->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  auto* nrm = app.add_subcommand(
      "normalized", "Normalized coefficient grid and theorem report (JSON)");
  nrm->add_option("word", word_text, "braid word")->required();
  nrm->add_option("--profile-override", profile_override,
                  "knot profile as {\"genus\":G,\"s\":S,\"p\":P} for "
                  "non-positive words");

  auto* dec = app.add_subcommand("decompose",
                                 "Split/connected-sum decomposition (JSON)");
  dec->add_option("word", word_text, "braid word")->required();

  auto* jon = app.add_subcommand("jones", "Jones polynomial in t");
  jon->add_option("word", word_text, "braid word")->required();
  auto* con = app.add_subcommand("conway", "Conway polynomial in z");
  con->add_option("word", word_text, "braid word")->required();
  auto* alx = app.add_subcommand("alexander",
                                 "Symmetrized Alexander polynomial in t");
  alx->add_option("word", word_text, "braid word")->required();

  braidpoly::SweepOptions sweep;
  std::string out_path;
  auto* ver = app.add_subcommand("verify", "Run the verification sweep");
  ver->add_option("--strands", sweep.max_strands, "maximum strand count")
      ->capture_default_str();
  ver->add_option("--max-length", sweep.max_length, "maximum word length")
      ->capture_default_str();
  ver->add_option("--families", sweep.families,
                  "comma-separated subset of all_positive_words, torus_2k, "
                  "hopf_sums, named_examples")
      ->delimiter(',');
  ver->add_option("--jobs", sweep.jobs, "worker threads")
      ->capture_default_str();
  ver->add_option("--out", out_path, "write the JSON-lines report here");

  int cat_strands = 4;
  int cat_length = 10;
  auto* cat = app.add_subcommand("catalog",
                                 "List the deduplicated positive-word catalog");
  cat->add_option("--strands", cat_strands, "maximum strand count")
      ->capture_default_str();
  cat->add_option("--max-length", cat_length, "maximum word length")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (inv->parsed()) return run_invariants(word_text);
  if (hom->parsed()) return run_homfly(word_text, format);
  if (nrm->parsed()) return run_normalized(word_text, profile_override);
  if (dec->parsed()) return run_decompose(word_text);
  if (jon->parsed()) return run_specialization(word_text, "jones");
  if (con->parsed()) return run_specialization(word_text, "conway");
  if (alx->parsed()) return run_specialization(word_text, "alexander");
  if (ver->parsed()) return run_verify(sweep, out_path);
  if (cat->parsed()) return run_catalog(cat_strands, cat_length);
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
