#include "thetalab/tables.hpp"

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

namespace thetalab {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string ord_str(const std::optional<long>& ord) {
    if (!ord) return "-";
    if (*ord == kValInfinity) return "inf";
    return std::to_string(*ord);
}

std::string theta_flag(const VerificationReport& r) {
    if (!r.theta_ok) return "-";
    if (r.integral_at_p) return "Y";
    return "N(min v" + std::to_string(r.p) + " = " + std::to_string(r.theta.min_vp()) + ")";
}

std::string markers(const VerificationReport& r) {
    std::string out;
    if (!(r.hyp_good_at_q && r.hyp_p_torsion && r.hyp_p_coprime_f)) out += "[H]";
    const bool ord_fails = r.congruence_ord && *r.congruence_ord != kValInfinity && *r.congruence_ord < 1;
    if (r.theta_ok && (!r.integral_at_p || ord_fails)) out += "[C]";
    return out;
}

struct Cells {
    std::string label, cond, tors, ltriv, lpsi, ord, theta, flags, note;
};

Cells row_cells(const TableRow& row) {
    Cells c;
    c.label = row.label;
    if (!row.ok) {
        c.cond = c.tors = c.ltriv = c.lpsi = c.ord = c.theta = c.flags = "?";
        c.note = row.error;
        return c;
    }
    const VerificationReport& r = row.report;
    c.cond = r.conductor_factored;
    c.tors = r.torsion_factored;
    c.note = "";
    c.flags = markers(r);
    c.ord = ord_str(r.congruence_ord);
    c.theta = theta_flag(r);
    c.ltriv = r.values.empty() || !r.values[0].recognized_ok
                  ? "?"
                  : factored_str(r.values[0].recognized.to_rational());
    c.lpsi = r.values.size() < 2 || !r.values[1].recognized_ok ? "?" : r.values[1].recognized.str();
    if (!r.theta_ok && !r.theta_failure.empty()) c.note = r.theta_failure;
    return c;
}

std::vector<std::string> header_cells() {
    return {"label", "conductor", "torsion", "L(triv)", "L(psi)", "ord", "integral", "flags", "note"};
}

std::vector<std::string> as_list(const Cells& c) {
    return {c.label, c.cond, c.tors, c.ltriv, c.lpsi, c.ord, c.theta, c.flags, c.note};
}

/// Translate the lab's plain notation into LaTeX math: z -> \zeta,
/// s -> \sigma, ^e -> ^{e}, * -> \cdot (dropped before a parenthesis or a
/// symbol, where juxtaposition reads better).
std::string latex_math(const std::string& s) {
    std::string out;
    for (size_t i = 0; i < s.size(); ++i) {
        const char ch = s[i];
        if (ch == 'z') {
            out += "\\zeta";
        } else if (ch == 's') {
            out += "\\sigma";
        } else if (ch == '*') {
            const char next = i + 1 < s.size() ? s[i + 1] : '\0';
            if (next == '(' || next == 'z' || next == 's') {
                // implicit multiplication
            } else {
                out += "\\cdot ";
            }
        } else if (ch == '^') {
            out += "^{";
            size_t j = i + 1;
            if (j < s.size() && s[j] == '-') { out += '-'; ++j; }
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) { out += s[j]; ++j; }
            out += "}";
            i = j - 1;
        } else {
            out += ch;
        }
    }
    return out;
}

std::string latex_escape_text(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '_': out += "\\_"; break;
            case '^': out += "\\^{}"; break;
            case '%': out += "\\%"; break;
            case '&': out += "\\&"; break;
            case '#': out += "\\#"; break;
            default: out += ch;
        }
    }
    return out;
}

}  // namespace

std::vector<TableResult> run_table(const Dataset& dataset, const TableOptions& options, CoeffCache* cache) {
    if (options.pairs.empty()) throw InputError("run_table: no (p, q) pairs requested");

    std::vector<const CurveData*> selection;
    if (options.labels.empty()) {
        for (const CurveData& c : dataset.curves) selection.push_back(&c);
    } else {
        for (const std::string& label : options.labels) selection.push_back(&dataset.by_label(label));
    }

    VerifyOptions vopts = options.verify;
    if (cache) {
        vopts.coefficients = [cache](const CurveData& curve, size_t M) { return cache->get(curve, M); };
    }

    std::vector<TableResult> out;
    for (const auto& [p, q] : options.pairs) {
        TableResult layer;
        layer.p = p;
        layer.q = q;
        layer.generator = make_setup(p, q, options.verify.generator).gen;
        for (const CurveData* curve : selection) {
            TableRow row;
            row.label = curve->label;
            try {
                row.report = verify_pair(*curve, p, q, vopts);
                row.ok = true;
            } catch (const std::exception& e) {
                row.ok = false;
                row.error = e.what();
            }
            layer.rows.push_back(std::move(row));
        }
        out.push_back(std::move(layer));
    }
    return out;
}

std::string render_table(const TableResult& result, TableFormat format) {
    std::vector<Cells> rows;
    rows.reserve(result.rows.size());
    for (const TableRow& row : result.rows) {
        Cells c = row_cells(row);
        rows.push_back(std::move(c));
    }

    std::ostringstream out;
    if (format == TableFormat::Csv) {
        auto emit = [&](const std::vector<std::string>& cells) {
            for (size_t i = 0; i < cells.size(); ++i) {
                if (i) out << ",";
                std::string cell = cells[i];
                if (cell.find(',') != std::string::npos || cell.find('"') != std::string::npos) {
                    std::string quoted = "\"";
                    for (char ch : cell) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
                    quoted += "\"";
                    cell = quoted;
                }
                out << cell;
            }
            out << "\n";
        };
        std::vector<std::string> head = header_cells();
        head.insert(head.begin(), "q");
        head.insert(head.begin(), "p");
        emit(head);
        for (const Cells& c : rows) {
            std::vector<std::string> line = as_list(c);
            line.insert(line.begin(), std::to_string(result.q));
            line.insert(line.begin(), std::to_string(result.p));
            emit(line);
        }
        return out.str();
    }

    if (format == TableFormat::Latex) {
        out << "% layer p = " << result.p << ", q = " << result.q << ", generator " << result.generator << "\n";
        out << "\\begin{tabular}{lllllllll}\n";
        const auto head = header_cells();
        for (size_t i = 0; i < head.size(); ++i) out << (i ? " & " : "") << "\\textbf{" << head[i] << "}";
        out << " \\\\\n\\hline\n";
        for (const Cells& c : rows) {
            const std::vector<std::string> line = as_list(c);
            for (size_t i = 0; i < line.size(); ++i) {
                out << (i ? " & " : "");
                if (i == 0 || i == 8) out << latex_escape_text(line[i]);       // label, note: text
                else if (i == 6 || i == 7) out << latex_escape_text(line[i]);  // flags: text
                else if (line[i] == "?" || line[i] == "-" || line[i].empty()) out << latex_escape_text(line[i]);
                else out << "$" << latex_math(line[i]) << "$";
            }
            out << " \\\\\n";
        }
        out << "\\end{tabular}\n";
        return out.str();
    }

    // Text: caption, aligned columns.
    out << "# p = " << result.p << ", q = " << result.q << ", generator = " << result.generator
        << "   (z = primitive " << result.p << "-th root of unity, s = Galois generator)\n";
    std::vector<std::vector<std::string>> grid;
    grid.push_back(header_cells());
    for (const Cells& c : rows) grid.push_back(as_list(c));
    std::vector<size_t> width(grid[0].size(), 0);
    for (const auto& line : grid)
        for (size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
    for (size_t li = 0; li < grid.size(); ++li) {
        const auto& line = grid[li];
        for (size_t i = 0; i < line.size(); ++i) {
            out << line[i];
            if (i + 1 < line.size()) out << std::string(width[i] - line[i].size() + 2, ' ');
        }
        out << "\n";
        if (li == 0) {
            size_t total = 0;
            for (size_t i = 0; i < width.size(); ++i) total += width[i] + (i + 1 < width.size() ? 2 : 0);
            out << std::string(total, '-') << "\n";
        }
    }
    return out.str();
}

std::string render_report_text(const VerificationReport& r) {
    std::ostringstream out;
    out << "curve " << r.label << "   (p, q) = (" << r.p << ", " << r.q << ")   generator " << r.generator << "\n";
    out << "conductor " << r.conductor_factored << " | torsion order " << r.torsion_factored << "\n";
    out << "hypotheses: good reduction at q: " << (r.hyp_good_at_q ? "yes" : "NO")
        << " | p coprime to torsion: " << (r.hyp_p_torsion ? "yes" : "NO")
        << (r.torsion_from_f ? " (torsion over F)" : " (torsion over Q)")
        << " | p coprime to character conductor: " << (r.hyp_p_coprime_f ? "yes" : "NO") << "\n";
    out << "normalized L-values:\n";
    for (const NormalizedLValue& v : r.values) {
        out << "  j = " << v.j << ": ";
        if (v.recognized_ok) {
            if (v.j == 0) {
                const Rational x = v.recognized.to_rational();
                out << rational_str(x) << " = " << factored_str(x);
            } else {
                out << v.recognized.str();
            }
            out << "   (residual " << v.residual.str(3) << ")";
        } else {
            out << "unrecognized; numeric value " << v.value.str(20);
        }
        out << "\n";
    }
    if (r.theta_ok) {
        out << "Theta = " << r.theta.str() << "\n";
        out << "  integral at p: " << (r.integral_at_p ? "yes" : "NO (min v_p = " + std::to_string(r.theta.min_vp()) + ")")
            << "\n";
        out << "  relaxed (p^d scaling): " << (r.relaxed_integral ? "yes" : "NO") << "\n";
        out << "  equivariance: " << (r.equivariance_ok ? "yes" : "NO") << "\n";
        out << "  congruence ord: " << ord_str(r.congruence_ord) << "\n";
    } else {
        out << "Theta: not assembled (" << r.theta_failure << ")\n";
    }
    if (r.inverse_sum_ok.has_value()) {
        out << "inverse sums: criterion " << (*r.inverse_sum_ok ? "satisfied" : "FAILS");
        if (r.inverse_s1) out << "; S_1 = " << rational_str(*r.inverse_s1) << " = " << factored_str(*r.inverse_s1);
        out << "\n";
    }
    if (r.sha_note) out << "sha: " << *r.sha_note << "\n";
    for (const std::string& n : r.notes) out << "note: " << n << "\n";
    out << "diagnostics: terms " << r.terms_used << ", max |w|-1 defect " << std::scientific
        << std::setprecision(2) << r.max_root_number_defect << ", max err estimate " << r.max_err_estimate
        << "\n";
    return out.str();
}

std::string render_report_json(const VerificationReport& r) {
    ordered_json j;
    j["label"] = r.label;
    j["p"] = r.p;
    j["q"] = r.q;
    j["generator"] = r.generator;
    j["conductor_factored"] = r.conductor_factored;
    j["torsion_factored"] = r.torsion_factored;
    j["hypotheses"] = {{"good_at_q", r.hyp_good_at_q},
                       {"p_coprime_torsion", r.hyp_p_torsion},
                       {"torsion_from_f", r.torsion_from_f},
                       {"p_coprime_character_conductor", r.hyp_p_coprime_f}};
    ordered_json values = ordered_json::array();
    for (const NormalizedLValue& v : r.values) {
        ordered_json jv;
        jv["j"] = v.j;
        jv["re"] = v.value.re.str(24);
        jv["im"] = v.value.im.str(24);
        jv["recognized_ok"] = v.recognized_ok;
        if (v.recognized_ok) {
            jv["recognized"] = v.recognized.str();
            ordered_json coeffs = ordered_json::array();
            for (const Rational& c : v.recognized.coeffs()) coeffs.push_back(rational_str(c));
            jv["coeffs"] = coeffs;
            jv["residual"] = v.residual.str(3);
        }
        values.push_back(jv);
    }
    j["values"] = values;
    j["theta_ok"] = r.theta_ok;
    if (r.theta_ok) {
        ordered_json coeffs = ordered_json::array();
        for (const Rational& c : r.theta.coeffs()) coeffs.push_back(rational_str(c));
        j["theta"] = {{"str", r.theta.str()},
                      {"coeffs", coeffs},
                      {"integral_at_p", r.integral_at_p},
                      {"relaxed_integral", r.relaxed_integral},
                      {"min_vp", r.theta.min_vp() == kValInfinity ? ordered_json("inf") : ordered_json(r.theta.min_vp())}};
        ordered_json sv = ordered_json::array();
        for (const Rational& s : r.s_values) sv.push_back(rational_str(s));
        j["s_values"] = sv;
    } else {
        j["theta_failure"] = r.theta_failure;
    }
    j["equivariance_ok"] = r.equivariance_ok;
    if (r.congruence_ord) {
        j["congruence_ord"] = *r.congruence_ord == kValInfinity ? ordered_json("inf") : ordered_json(*r.congruence_ord);
    } else {
        j["congruence_ord"] = nullptr;
    }
    if (r.inverse_sum_ok.has_value()) {
        ordered_json inv;
        inv["ok"] = *r.inverse_sum_ok;
        if (r.inverse_s1) inv["s1"] = rational_str(*r.inverse_s1);
        ordered_json sv = ordered_json::array();
        for (const Rational& s : r.inverse_s_values) sv.push_back(rational_str(s));
        inv["s_values"] = sv;
        j["inverse_sums"] = inv;
    } else {
        j["inverse_sums"] = nullptr;
    }
    if (r.sha_note) j["sha_note"] = *r.sha_note;
    j["notes"] = r.notes;
    {
        std::ostringstream defect, err;
        defect << std::scientific << std::setprecision(3) << r.max_root_number_defect;
        err << std::scientific << std::setprecision(3) << r.max_err_estimate;
        j["diagnostics"] = {{"terms_used", r.terms_used},
                            {"max_root_number_defect", defect.str()},
                            {"max_err_estimate", err.str()}};
    }
    return j.dump(2) + "\n";
}

}  // namespace thetalab
