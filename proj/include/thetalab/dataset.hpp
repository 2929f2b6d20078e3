#pragma once

// Dataset ingestion and validation, plus the on-disk cache of Dirichlet
// coefficient vectors.
//
// A dataset is a JSON file {"curves": [record, ...]} where each record has
//   label          string, unique
//   genus          1 or 2
//   conductor      integer (number or string)
//   h, f           integer coefficient arrays, ascending degree
//   real_period    decimal string with >= 15 significant digits
//   torsion_q      integer >= 1               (|A(Q)_tors|)
//   torsion_f      optional integer >= 1      (|A(F)_tors| when known)
//   bad_euler      object: prime -> coefficient array (1, c1, ...),
//                  keys exactly the primes dividing the conductor
//   sha_analytic   optional integer
//   twist_conductor optional object: q -> conductor of the twisted
//                  functional equation when the default rule fails
//
// Validation is strict and error messages name the offending label and
// field; in particular the prime support of the model discriminant must
// equal the prime support of the conductor, which is exactly the condition
// under which naive point counting at primes away from the conductor is
// legitimate.

#include <stdexcept>
#include <string>
#include <vector>

#include "thetalab/curves.hpp"

namespace thetalab {

/// Errors attributable to user input (bad files, unknown labels, malformed
/// options) as opposed to internal numeric failures.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

struct Dataset {
    std::vector<CurveData> curves;

    bool has(const std::string& label) const;
    /// Lookup by label; throws InputError naming the label when absent.
    const CurveData& by_label(const std::string& label) const;
};

/// Parse and validate a JSON dataset from a file; throws InputError on any
/// problem, with the path, label, and field named.
Dataset load_dataset(const std::string& path);

/// Parse and validate from an in-memory string (origin only labels errors).
Dataset parse_dataset(const std::string& json_text, const std::string& origin = "<memory>");

/// On-disk cache of coefficient vectors, keyed by (label, model hash, M).
/// A cached vector with M' >= M serves a request for M.  An empty directory
/// string disables caching (every request recomputes).
class CoeffCache {
public:
    explicit CoeffCache(std::string dir);

    /// Resolution order: THETALAB_CACHE, then XDG_CACHE_HOME/thetalab,
    /// then HOME/.cache/thetalab, then ./.thetalab-cache.
    static std::string default_dir();

    /// a_1..a_M as a 1-based vector of size M+1 (index 0 unused, zero).
    std::vector<long long> get(const CurveData& curve, size_t M);

    struct Status {
        std::string dir;
        size_t files = 0;
        size_t bytes = 0;
    };
    Status status() const;
    /// Remove all cache files; returns the number removed.
    size_t clear();

    const std::string& dir() const { return dir_; }
    size_t hits = 0, misses = 0;

private:
    std::string dir_;
};

}  // namespace thetalab
