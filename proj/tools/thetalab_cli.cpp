// thetalab — command-line front end of the verification laboratory.
//
// Subcommands:
//   verify      full pipeline for one curve and one (p, q)
//   table       batch verification over (p, q) layers
//   lvalue      one twisted L-value with diagnostics
//   eulerfactor Euler factor of a curve at a prime
//   recognize   cyclotomic recognition of a tuple of embeddings read from a file
//   period      stored real period (+ AGM recomputation for genus 1)
//   cache       coefficient-cache maintenance (status | clear)
//
// Exit codes: 0 = ran to completion (negative verification verdicts are
// data, not errors), 1 = input problem, 2 = internal numeric failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "thetalab/characters.hpp"
#include "thetalab/curves.hpp"
#include "thetalab/dataset.hpp"
#include "thetalab/lfunc.hpp"
#include "thetalab/recognition.hpp"
#include "thetalab/tables.hpp"
#include "thetalab/verify.hpp"

using namespace thetalab;

namespace {

struct GlobalOpts {
    std::string dataset_path;
    std::string cache_dir;
    bool no_cache = false;
    long bits = kDefaultPrec;
    int digits = 12;
    std::string denominator_bound = "100000000";
    double tol = 1e-8;
};

std::string default_dataset_path() {
    if (const char* env = std::getenv("THETALAB_DATA")) return std::string(env) + "/curves.json";
    return "data/curves.json";
}

Dataset load(const GlobalOpts& g) { return load_dataset(g.dataset_path); }

VerifyOptions make_verify_options(const GlobalOpts& g, std::optional<unsigned long> generator,
                                  size_t cutoff_override, CoeffCache* cache) {
    VerifyOptions v;
    v.precision_bits = static_cast<mpfr_prec_t>(g.bits);
    v.target_digits = g.digits;
    v.denominator_bound = mpz_class(g.denominator_bound);
    v.tolerance = g.tol;
    v.generator = generator;
    v.cutoff_override = cutoff_override;
    if (cache) {
        v.coefficients = [cache](const CurveData& curve, size_t M) { return cache->get(curve, M); };
    }
    return v;
}

std::vector<std::pair<unsigned, unsigned>> parse_pairs(const std::string& text) {
    std::vector<std::pair<unsigned, unsigned>> pairs;
    std::stringstream ss(text);
    std::string chunk;
    while (std::getline(ss, chunk, ',')) {
        const size_t colon = chunk.find(':');
        if (colon == std::string::npos) {
            throw InputError("--pairs entries must look like p:q, got '" + chunk + "'");
        }
        try {
            const unsigned p = static_cast<unsigned>(std::stoul(chunk.substr(0, colon)));
            const unsigned q = static_cast<unsigned>(std::stoul(chunk.substr(colon + 1)));
            pairs.emplace_back(p, q);
        } catch (const InputError&) {
            throw;
        } catch (const std::exception&) {
            throw InputError("--pairs entries must look like p:q, got '" + chunk + "'");
        }
    }
    if (pairs.empty()) throw InputError("--pairs is empty");
    return pairs;
}

TableFormat parse_format(const std::string& f) {
    if (f == "text") return TableFormat::Text;
    if (f == "csv") return TableFormat::Csv;
    if (f == "latex") return TableFormat::Latex;
    throw InputError("unknown --format '" + f + "' (expected text, csv, or latex)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"thetalab: equivariant L-value verification laboratory"};
    app.require_subcommand(1);

    GlobalOpts g;
    g.dataset_path = default_dataset_path();
    app.add_option("--dataset", g.dataset_path, "dataset JSON file")->capture_default_str();
    app.add_option("--cache-dir", g.cache_dir, "coefficient cache directory (default: resolved per environment)");
    app.add_flag("--no-cache", g.no_cache, "disable the coefficient cache");
    app.add_option("--bits", g.bits, "working precision in bits")->capture_default_str();
    app.add_option("--digits", g.digits, "target decimal digits for the L-value series")->capture_default_str();
    app.add_option("--denominator-bound", g.denominator_bound, "rationalization denominator bound")
        ->capture_default_str();
    app.add_option("--tol", g.tol, "recognition tolerance")->capture_default_str();

    // --- verify ------------------------------------------------------------
    auto* cmd_verify = app.add_subcommand("verify", "verify one curve at one (p, q)");
    std::string v_label;
    unsigned v_p = 0, v_q = 0;
    unsigned long v_gen = 0;
    bool v_json = false;
    size_t v_cutoff = 0;
    cmd_verify->add_option("label", v_label, "curve label")->required();
    cmd_verify->add_option("--p", v_p, "order of the characters (odd prime)")->required();
    cmd_verify->add_option("--q", v_q, "conductor of the characters (prime, q = 1 mod p)")->required();
    cmd_verify->add_option("--generator", v_gen, "character convention: generator of (Z/q)^*");
    cmd_verify->add_option("--cutoff", v_cutoff, "override the series cutoff M");
    cmd_verify->add_flag("--json", v_json, "emit a JSON report");

    // --- table ---------------------------------------------------------------
    auto* cmd_table = app.add_subcommand("table", "batch verification table");
    std::string t_pairs, t_labels, t_format = "text";
    cmd_table->add_option("--pairs", t_pairs, "comma-separated p:q layers, e.g. 3:7,5:11")->required();
    cmd_table->add_option("--labels", t_labels, "comma-separated label subset (default: whole dataset)");
    cmd_table->add_option("--format", t_format, "text | csv | latex")->capture_default_str();

    // --- lvalue ---------------------------------------------------------------
    auto* cmd_lvalue = app.add_subcommand("lvalue", "one twisted L-value with diagnostics");
    std::string l_label;
    unsigned l_p = 0, l_q = 0, l_j = 1;
    unsigned long l_gen = 0;
    size_t l_cutoff = 0;
    cmd_lvalue->add_option("label", l_label, "curve label")->required();
    cmd_lvalue->add_option("--p", l_p, "order of the characters")->required();
    cmd_lvalue->add_option("--q", l_q, "conductor of the characters")->required();
    cmd_lvalue->add_option("--j", l_j, "character index (0 = untwisted series)")->capture_default_str();
    cmd_lvalue->add_option("--generator", l_gen, "character convention: generator of (Z/q)^*");
    cmd_lvalue->add_option("--cutoff", l_cutoff, "override the series cutoff M");

    // --- eulerfactor ------------------------------------------------------------
    auto* cmd_euler = app.add_subcommand("eulerfactor", "Euler factor at a prime");
    std::string e_label;
    unsigned long e_ell = 0;
    cmd_euler->add_option("label", e_label, "curve label")->required();
    cmd_euler->add_option("--ell", e_ell, "prime")->required();

    // --- recognize ---------------------------------------------------------------
    auto* cmd_recognize = app.add_subcommand("recognize", "recognize a conjugate tuple from a file");
    std::string r_file;
    unsigned r_p = 0;
    cmd_recognize->add_option("--values-file", r_file, "file with p-1 lines 're im'")->required();
    cmd_recognize->add_option("--p", r_p, "odd prime p")->required();

    // --- period ---------------------------------------------------------------
    auto* cmd_period = app.add_subcommand("period", "stored real period (genus 1: AGM cross-check)");
    std::string p_label;
    cmd_period->add_option("label", p_label, "curve label")->required();

    // --- cache ---------------------------------------------------------------
    auto* cmd_cache = app.add_subcommand("cache", "coefficient cache maintenance");
    std::string c_action;
    cmd_cache->add_option("action", c_action, "status | clear")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        const std::string cache_dir = g.no_cache ? "" : (g.cache_dir.empty() ? CoeffCache::default_dir() : g.cache_dir);
        CoeffCache cache(cache_dir);
        CoeffCache* cache_ptr = cache_dir.empty() ? nullptr : &cache;

        if (*cmd_verify) {
            const Dataset ds = load(g);
            const CurveData& curve = ds.by_label(v_label);
            std::optional<unsigned long> gen;
            if (cmd_verify->count("--generator")) gen = v_gen;
            const VerifyOptions opts = make_verify_options(g, gen, v_cutoff, cache_ptr);
            const VerificationReport rep = verify_pair(curve, v_p, v_q, opts);
            std::cout << (v_json ? render_report_json(rep) : render_report_text(rep));
            return 0;
        }

        if (*cmd_table) {
            const Dataset ds = load(g);
            TableOptions topts;
            topts.pairs = parse_pairs(t_pairs);
            if (!t_labels.empty()) {
                std::stringstream ss(t_labels);
                std::string label;
                while (std::getline(ss, label, ',')) {
                    if (!label.empty()) topts.labels.push_back(label);
                }
            }
            topts.verify = make_verify_options(g, std::nullopt, 0, cache_ptr);
            const TableFormat format = parse_format(t_format);
            const auto results = run_table(ds, topts, cache_ptr);
            for (size_t i = 0; i < results.size(); ++i) {
                if (i) std::cout << "\n";
                std::cout << render_table(results[i], format);
            }
            return 0;
        }

        if (*cmd_lvalue) {
            const Dataset ds = load(g);
            const CurveData& curve = ds.by_label(l_label);
            std::optional<unsigned long> gen;
            if (cmd_lvalue->count("--generator")) gen = l_gen;
            const FieldSetup setup = make_setup(l_p, l_q, gen);
            const int d = curve.genus;
            const mpz_class n_eff = l_j == 0 ? curve.conductor : twisted_conductor(curve, l_q);
            const size_t M = l_cutoff ? l_cutoff : afe_cutoff(n_eff, d, g.digits);
            CoeffCache direct("");
            std::vector<long long> coeffs = cache_ptr ? cache_ptr->get(curve, M) : direct.get(curve, M);
            TwistedLSpec spec;
            spec.d = d;
            spec.N = n_eff;
            spec.coeffs = &coeffs;
            spec.precision_bits = static_cast<mpfr_prec_t>(g.bits);
            spec.target_digits = g.digits;
            spec.cutoff_override = M;
            std::optional<DirichletCharacter> psi;
            if (l_j != 0) {
                psi.emplace(setup, l_j % l_p);
                spec.psi = &*psi;
            }
            const LValueResult res = lvalue_s1(spec);
            std::cout << "curve " << curve.label << ", ";
            if (l_j == 0) std::cout << "untwisted series";
            else std::cout << "character j = " << l_j << " of conductor " << l_q << " (generator " << setup.gen << ")";
            std::cout << "\nconductor used: " << n_eff.get_str() << "\n";
            std::cout << "L(1)         = " << res.value.str(24) << "\n";
            std::cout << "root number  = " << res.root_number.str(24) << "\n";
            std::cout << "|w| defect   = " << abs(abs(res.root_number) - Real(1L, 64)).str(3) << "\n";
            std::cout << "err estimate = " << res.err_estimate.str(3) << "\n";
            std::cout << "terms used   = " << res.terms_used << "\n";
            return 0;
        }

        if (*cmd_euler) {
            const Dataset ds = load(g);
            const CurveData& curve = ds.by_label(e_label);
            const EulerFactor ef = euler_factor(curve, e_ell);
            std::cout << "P_" << e_ell << "(T) = " << ef.str() << "\n";
            std::cout << "P_" << e_ell << "(1) = " << ef.at_one() << "\n";
            return 0;
        }

        if (*cmd_recognize) {
            std::ifstream in(r_file);
            if (!in) throw InputError("cannot open values file '" + r_file + "'");
            std::vector<Complex> tuple;
            std::string line;
            while (std::getline(in, line)) {
                if (line.empty() || line[0] == '#') continue;
                std::istringstream ls(line);
                std::string re_s, im_s;
                if (!(ls >> re_s >> im_s)) throw InputError("values file line '" + line + "' is not 're im'");
                const mpfr_prec_t prec = static_cast<mpfr_prec_t>(g.bits);
                tuple.emplace_back(Real(re_s, prec), Real(im_s, prec));
            }
            if (r_p < 3 || tuple.size() != r_p - 1) {
                throw InputError("expected p-1 = " + std::to_string(r_p ? r_p - 1 : 0) + " lines, got " +
                                 std::to_string(tuple.size()));
            }
            const Real tol(g.tol, static_cast<mpfr_prec_t>(g.bits));
            const TupleRecognition rec = conjugate_tuple_solve(tuple, r_p, mpz_class(g.denominator_bound), tol);
            if (rec.ok) {
                std::cout << "recognized: " << rec.element.str() << "\n";
                std::cout << "residual:   " << rec.residual.str(3) << "\n";
                std::cout << "ord at the prime above p: "
                          << (rec.element.is_zero() ? "inf" : std::to_string(rec.element.ord_frakp())) << "\n";
            } else {
                std::cout << "recognition failed: " << rec.failure << "\n";
            }
            return 0;
        }

        if (*cmd_period) {
            const Dataset ds = load(g);
            const CurveData& curve = ds.by_label(p_label);
            const mpfr_prec_t prec = static_cast<mpfr_prec_t>(g.bits);
            std::cout << "stored real period: " << curve.period(prec).str(24) << "\n";
            if (curve.genus == 1) {
                const Real agm = elliptic_real_period_agm(curve, prec);
                std::cout << "AGM recomputation:  " << agm.str(24) << "\n";
                std::cout << "difference:         " << abs(agm - curve.period(prec)).str(3) << "\n";
            }
            return 0;
        }

        if (*cmd_cache) {
            if (c_action == "status") {
                const CoeffCache::Status st = cache.status();
                std::cout << "cache directory: " << (st.dir.empty() ? "(disabled)" : st.dir) << "\n";
                std::cout << "files: " << st.files << "\n";
                std::cout << "bytes: " << st.bytes << "\n";
            } else if (c_action == "clear") {
                const size_t removed = cache.clear();
                std::cout << "removed " << removed << " cache files\n";
            } else {
                throw InputError("cache action must be 'status' or 'clear', got '" + c_action + "'");
            }
            return 0;
        }

        throw InputError("no subcommand selected");
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 2;
    }
}
