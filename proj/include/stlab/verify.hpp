#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace stlab {

enum class Verdict { Pass, Fail, Unknown };

struct Instance {
    std::string params;   // human-readable parameter binding, e.g. "n=9"
    Verdict verdict = Verdict::Unknown;
    std::string witness;  // certificate text, or graph6 counterexample on fail
};

struct Report {
    std::string claim;    // e.g. "thm:turan-kp3"
    std::string params;   // the requested grid
    std::vector<Instance> instances;
    bool relaxed = false; // hypotheses below threshold: verdicts observational
    double wall_seconds = 0.0;

    Verdict aggregate() const;
    std::string to_json() const;  // schema "stlab/1"
    std::string to_csv() const;   // one line per instance
};

// k·P3 Turán theorem: scan max edges for n in [n_lo, n_hi] ⊆ [1..9] against
// the piecewise formula and extremal lists. k in {2, 3}.
Report verify_turan_kp3(int k, int n_lo, int n_hi);

// Stability theorem, sampled: graphs with e > (k-3/2)n either contain k·P3
// or embed in a listed host.
Report verify_stability(int k, int n, int sample_count, std::uint64_t seed, bool relaxed = false);

// §2 spectral lemmas via exact certificates over the stated grids.
Report verify_q_lemmas(int h_lo, int h_hi, bool relaxed = false);

// Main theorem case (iii) at k=2 by host reduction: q(F_{n,2}) beats the
// three attachment hosts for each n in range.
Report verify_spectral_kp3(int n_lo, int n_hi);

// Merris / edge-degree / size-order bounds dominate q on exhaustive small n
// plus seeded random graphs.
Report verify_merris_and_bounds(int n_exhaustive, int trials, std::uint64_t seed);

// §3 lemma, exhaustive: every 2·P3-free class with n in [n_lo, n_hi] ⊆ [6..9]
// gets at least one host label.
Report verify_2p3_classification(int n_lo, int n_hi);

}  // namespace stlab
