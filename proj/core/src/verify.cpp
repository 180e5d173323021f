#include "braidpoly/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "braidpoly/catalog.hpp"
#include "braidpoly/errors.hpp"
#include "braidpoly/link_analysis.hpp"
#include "braidpoly/normalized.hpp"
#include "braidpoly/oracles.hpp"
#include "json_build.hpp"

namespace braidpoly {
namespace {

using detail::ordered_json;

// Oracles are exponential in the crossing count; 14 keeps them instant.
constexpr std::size_t kOracleMaxLetters = 14;
// One word in kMemoSampleModulus is re-run with the memo disabled (~5%).
constexpr std::uint64_t kMemoSampleModulus = 20;

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

struct Entry {
  std::string name;  // empty for enumerated words
  BraidWord word;
};

// Per-word result, aggregated sequentially after all workers finish so the
// counters and report order never depend on scheduling.
struct WordOutcome {
  bool informational = false;
  bool is_knot = false;
  bool error = false;
  bool theorem_fail = false;
  bool corollary_fail = false;
  bool oracle_fail = false;
  bool grid_p_fail = false;
  bool memo_checked = false;
  bool memo_fail = false;
  std::string key;
  std::string json;
};

std::vector<Entry> build_catalog(const SweepOptions& options) {
  std::vector<std::string> families = options.families;
  if (families.empty()) families.emplace_back("all_positive_words");
  bool want_enumeration = false;
  bool want_named = false;
  bool want_torus = false;
  bool want_hopf = false;
  for (const std::string& f : families) {
    if (f == "all_positive_words") {
      want_enumeration = true;
    } else if (f == "named_examples") {
      want_named = true;
    } else if (f == "torus_2k") {
      want_torus = true;
    } else if (f == "hopf_sums") {
      want_hopf = true;
    } else {
      throw ParseError("unknown family: " + f);
    }
  }

  // Keyed map gives canonical-key deduplication and the report order in one
  // step. A named word that collides with an enumerated one keeps the
  // enumerated representative and gains the name.
  std::map<std::string, Entry> by_key;
  if (want_enumeration) {
    for (BraidWord& w :
         enumerate_positive_words(options.max_strands, options.max_length)) {
      std::string key = canonical_key(w);
      by_key.emplace(std::move(key), Entry{"", std::move(w)});
    }
  }
  if (want_named || want_torus || want_hopf) {
    for (auto& [name, w] : named_examples()) {
      const bool is_torus = name.rfind("T_2_", 0) == 0;
      const bool is_hopf = name.rfind("H_", 0) == 0;
      if (!(want_named || (want_torus && is_torus) || (want_hopf && is_hopf)))
        continue;
      auto [it, inserted] = by_key.emplace(canonical_key(w), Entry{name, w});
      if (!inserted && it->second.name.empty()) it->second.name = name;
    }
  }

  std::vector<Entry> catalog;
  catalog.reserve(by_key.size());
  for (auto& [key, e] : by_key) catalog.push_back(std::move(e));
  return catalog;
}

ordered_json conway_json(const ConwayReport& r, bool pass) {
  ordered_json j;
  j["genus"] = r.genus;
  j["prime"] = r.prime;
  j["a_top"] = r.a_top.str();
  j["a_next"] = r.a_next.str();
  j["lower"] = r.lower.str();
  j["upper"] = r.upper.str();
  j["top_ok"] = r.top_ok;
  j["next_vacuous"] = r.next_vacuous;
  j["next_in_bounds"] = r.next_in_bounds;
  j["pass"] = pass;
  return j;
}

ordered_json jones_json(const JonesReport& r, bool pass) {
  ordered_json j;
  j["genus"] = r.genus;
  j["prime"] = r.prime;
  j["c0"] = r.c0.str();
  j["c1"] = r.c1.str();
  j["c2"] = r.c2.str();
  j["c3"] = r.c3.str();
  j["h_1_dm2"] = r.h_1_dm2.str();
  j["mindeg_is_genus"] = r.mindeg_is_genus;
  j["c0_ok"] = r.c0_ok;
  j["c1_ok"] = r.c1_ok;
  j["c2_ok"] = r.c2_ok;
  j["bound_ok"] = r.bound_ok;
  j["identity_ok"] = r.identity_ok;
  j["pass"] = pass;
  return j;
}

WordOutcome process_word(const Entry& entry, const SweepOptions& options,
                         HomflyCache& cache) {
  WordOutcome out;
  out.key = canonical_key(entry.word);
  out.informational = !is_positive(entry.word);

  ordered_json j;
  j["key"] = out.key;
  j["name"] = entry.name;
  j["word"] = to_text(entry.word);
  j["informational"] = out.informational;
  j["status"] = "ok";

  try {
    const BraidWord& w = entry.word;

    LinkProfile profile;
    if (out.informational) {
      // Non-positive study braid: the Euler-characteristic formula does not
      // apply, so derive the genus from the Alexander span (positive braid
      // closures and their study variants here are fibered) and treat the
      // knot as non-split and prime.
      if (closure_components(w) != 1)
        throw NotAKnot("derived profile requires a knot closure");
      const HalfLaurent A = alexander(w, cache, options.limits);
      if (A.is_zero())
        throw Error("Alexander polynomial vanished; cannot derive a genus");
      const int span = A.max_exp() - A.min_exp();
      if (span % 4 != 0) throw Error("Alexander span is not divisible by 4");
      profile = knot_profile(span / 4, 1, 1, w.strands);
      j["profile_source"] = "alexander_span";
    } else {
      profile = link_profile(w, options.limits.node_cap);
    }
    out.is_knot = profile.components == 1;
    j["profile"] = detail::profile_json(profile);

    const LaurentPoly2 P = homfly(w, cache, options.limits);
    j["homfly"] = detail::poly_json(P);

    const HGrid grid = normalize(P, profile);
    j["grid"] = detail::grid_json(grid);

    const TheoremReport theorem = check_theorem_main(grid);
    j["theorem"] = detail::theorem_json(theorem);
    if (!out.informational && !theorem.all_pass) out.theorem_fail = true;

    const bool grid_p_match = grid.h(1, profile.d - 1) == Int(profile.prime);
    j["grid_p_match"] = grid_p_match;
    if (!out.informational && !grid_p_match) out.grid_p_fail = true;

    if (out.is_knot && !out.informational) {
      const ConwayReport cr = conway_report(w, profile, cache, options.limits);
      const bool conway_pass =
          cr.top_ok && (cr.next_vacuous || cr.next_in_bounds);
      j["conway"] = conway_json(cr, conway_pass);

      const JonesReport jr = jones_report(w, grid, cache, options.limits);
      const bool jones_pass = jr.mindeg_is_genus && jr.c0_ok && jr.c1_ok &&
                              jr.c2_ok && jr.bound_ok && jr.identity_ok;
      j["jones"] = jones_json(jr, jones_pass);

      const LspaceScreen ls = lspace_screen(w, cache, options.limits);
      ordered_json lj;
      lj["jones_ok"] = ls.jones_ok;
      lj["h_ok"] = ls.h_ok;
      lj["alexander_form_ok"] = ls.alexander_form_ok;
      j["lspace"] = std::move(lj);

      if (!conway_pass || !jones_pass) out.corollary_fail = true;
    }

    {
      ordered_json oj;
      if (out.is_knot && w.letters.size() <= kOracleMaxLetters) {
        const HalfLaurent engine_jones = jones(w, cache, options.limits);
        const HalfLaurent oracle_jones = bracket_jones(w);
        const HalfLaurent engine_alex = alexander(w, cache, options.limits);
        const HalfLaurent oracle_alex = burau_alexander(w);
        const bool jones_match = engine_jones == oracle_jones;
        const bool alexander_match = engine_alex == oracle_alex;
        oj["checked"] = true;
        oj["jones_match"] = jones_match;
        oj["alexander_match"] = alexander_match;
        if (!jones_match) {
          oj["engine_jones"] = to_text(engine_jones);
          oj["bracket_jones"] = to_text(oracle_jones);
        }
        if (!alexander_match) {
          oj["engine_alexander"] = to_text(engine_alex);
          oj["burau_alexander"] = to_text(oracle_alex);
        }
        if (!jones_match || !alexander_match) out.oracle_fail = true;
      } else {
        oj["checked"] = false;
      }
      j["oracle"] = std::move(oj);
    }

    {
      ordered_json mj;
      if (options.memo_subsample &&
          fnv1a(out.key) % kMemoSampleModulus == 0) {
        out.memo_checked = true;
        HomflyCache cold(options.limits.memo_cap, /*enabled=*/false);
        const bool match = homfly(w, cold, options.limits) == P;
        mj["checked"] = true;
        mj["match"] = match;
        if (!match) out.memo_fail = true;
      } else {
        mj["checked"] = false;
      }
      j["memo"] = std::move(mj);
    }
  } catch (const std::exception& e) {
    out.error = true;
    j["status"] = "error";
    j["error"] = e.what();
  }

  out.json = j.dump();
  return out;
}

}  // namespace

SweepReport verify_sweep(const SweepOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Entry> catalog = build_catalog(options);

  HomflyCache cache(options.limits.memo_cap);
  std::vector<WordOutcome> outcomes(catalog.size());
  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < catalog.size(); ++i)
      outcomes[i] = process_word(catalog[i], options, cache);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= catalog.size()) return;
        outcomes[i] = process_word(catalog[i], options, cache);
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }

  SweepReport report;
  report.words = outcomes.size();
  for (WordOutcome& o : outcomes) {
    bool failed = false;
    if (o.is_knot) ++report.knots;
    if (o.informational) ++report.informational;
    if (o.theorem_fail) ++report.theorem_failures, failed = true;
    if (o.corollary_fail) ++report.corollary_failures, failed = true;
    if (o.oracle_fail) ++report.oracle_failures, failed = true;
    if (o.grid_p_fail) ++report.grid_p_mismatches, failed = true;
    if (o.memo_checked) ++report.memo_checks;
    if (o.memo_fail) ++report.memo_failures, failed = true;
    if (o.error) ++report.errors, failed = true;
    if (failed) report.failure_keys.push_back(o.key);
    report.jsonl.push_back(std::move(o.json));
  }
  report.memo_entries = cache.size();
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

std::string human_summary(const SweepReport& report) {
  std::ostringstream os;
  os << "words:              " << report.words << '\n'
     << "knots:              " << report.knots << '\n'
     << "informational:      " << report.informational << '\n'
     << "theorem failures:   " << report.theorem_failures << '\n'
     << "corollary failures: " << report.corollary_failures << '\n'
     << "oracle failures:    " << report.oracle_failures << '\n'
     << "grid p mismatches:  " << report.grid_p_mismatches << '\n'
     << "memo checks:        " << report.memo_checks << " (failures: "
     << report.memo_failures << ")\n"
     << "errors:             " << report.errors << '\n'
     << "memo entries:       " << report.memo_entries << '\n'
     << "wall seconds:       " << std::fixed << std::setprecision(2)
     << report.wall_seconds << '\n';
  if (!report.failure_keys.empty()) {
    os << "failing words:\n";
    std::size_t shown = 0;
    for (const std::string& key : report.failure_keys) {
      if (++shown > 20) {
        os << "  ... " << report.failure_keys.size() - 20 << " more\n";
        break;
      }
      os << "  " << key << '\n';
    }
  }
  os << "result:             " << (report.all_pass() ? "PASS" : "FAIL")
     << '\n';
  return os.str();
}

}  // namespace braidpoly
