#pragma once

// Batch verification tables and rendering: one row per curve for a fixed
// (p, q), with the factored conductor, torsion, the exact normalized
// L-values, the congruence order, and the integrality flag.  Emitters:
// aligned text, CSV (identical numeric content), and a LaTeX fragment.
// Per-row failures are quarantined into the row, never abort the table.

#include <string>
#include <utility>
#include <vector>

#include "thetalab/dataset.hpp"
#include "thetalab/verify.hpp"

namespace thetalab {

enum class TableFormat { Text, Csv, Latex };

struct TableOptions {
    std::vector<std::pair<unsigned, unsigned>> pairs;  ///< (p, q) layers to run
    std::vector<std::string> labels;                   ///< subset filter; empty = whole dataset
    VerifyOptions verify;
};

struct TableRow {
    std::string label;
    bool ok = false;       ///< verification ran to completion
    std::string error;     ///< quarantined failure when !ok
    VerificationReport report;
};

struct TableResult {
    unsigned p = 0, q = 0;
    unsigned long generator = 0;
    std::vector<TableRow> rows;  ///< dataset order
};

/// Run every requested (p, q) layer over the selected curves.  `cache` may
/// be null (coefficients recomputed per row).
std::vector<TableResult> run_table(const Dataset& dataset, const TableOptions& options,
                                   CoeffCache* cache = nullptr);

/// Render one layer.  Text and CSV carry identical cell content; LaTeX is a
/// tabular fragment with the same cells translated to math notation.
std::string render_table(const TableResult& result, TableFormat format);

/// Human-readable multi-line report for a single verification.
std::string render_report_text(const VerificationReport& report);

/// Machine-readable JSON for a single verification.
std::string render_report_json(const VerificationReport& report);

}  // namespace thetalab
