#include "thetalab/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace thetalab {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

mpz_class parse_mpz(const json& j, const std::string& where) {
    try {
        if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
        if (j.is_string()) return mpz_class(j.get<std::string>());
    } catch (const std::exception&) {
        throw InputError(where + ": not a valid integer");
    }
    throw InputError(where + ": expected an integer or an integer string");
}

std::vector<long> parse_coeffs(const json& j, const std::string& where, size_t max_len) {
    if (!j.is_array()) throw InputError(where + ": expected an array of integers");
    std::vector<long> out;
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw InputError(where + ": entries must be integers");
        out.push_back(e.get<long>());
    }
    if (out.size() > max_len) {
        throw InputError(where + ": degree too large (at most " + std::to_string(max_len - 1) + ")");
    }
    return out;
}

/// Prime factors of n > 0 by trial division (the conductors and
/// discriminants in scope are small or smooth; a leftover cofactor is
/// accepted as prime only if it passes a primality test).
std::set<unsigned long> prime_support(mpz_class n, const std::string& where) {
    std::set<unsigned long> out;
    if (n < 0) n = -n;
    if (n == 0) throw InputError(where + ": value is zero");
    for (unsigned long p = 2; p <= 1000000UL && mpz_cmp_ui(n.get_mpz_t(), 1) > 0; p += (p == 2 ? 1 : 2)) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            out.insert(p);
            while (mpz_divisible_ui_p(n.get_mpz_t(), p)) mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        }
    }
    if (mpz_cmp_ui(n.get_mpz_t(), 1) > 0) {
        if (!mpz_probab_prime_p(n.get_mpz_t(), 40)) {
            throw InputError(where + ": cofactor " + n.get_str() + " is neither small nor prime");
        }
        if (!mpz_fits_ulong_p(n.get_mpz_t())) {
            throw InputError(where + ": prime factor " + n.get_str() + " is too large");
        }
        out.insert(mpz_get_ui(n.get_mpz_t()));
    }
    return out;
}

size_t significant_digits(const std::string& s) {
    size_t count = 0;
    bool in_mantissa = true;
    bool seen_nonzero = false;
    for (char c : s) {
        if (c == 'e' || c == 'E') { in_mantissa = false; continue; }
        if (!in_mantissa) continue;
        if (c >= '0' && c <= '9') {
            if (c != '0') seen_nonzero = true;
            if (seen_nonzero) ++count;
        }
    }
    return count;
}

CurveData parse_curve(const json& j, const std::string& origin) {
    if (!j.is_object()) throw InputError(origin + ": curve record is not an object");
    if (!j.contains("label") || !j["label"].is_string() || j["label"].get<std::string>().empty()) {
        throw InputError(origin + ": curve record lacks a nonempty string 'label'");
    }
    CurveData c;
    c.label = j["label"].get<std::string>();
    const std::string where = origin + ", curve '" + c.label + "'";

    if (!j.contains("genus") || !j["genus"].is_number_integer()) throw InputError(where + ": missing integer 'genus'");
    c.genus = j["genus"].get<int>();
    if (c.genus != 1 && c.genus != 2) throw InputError(where + ": genus must be 1 or 2");

    if (!j.contains("conductor")) throw InputError(where + ": missing 'conductor'");
    c.conductor = parse_mpz(j["conductor"], where + ", field 'conductor'");
    if (c.conductor <= 0) throw InputError(where + ": conductor must be positive");

    if (!j.contains("h") || !j.contains("f")) throw InputError(where + ": missing model coefficients 'h'/'f'");
    c.h = parse_coeffs(j["h"], where + ", field 'h'", static_cast<size_t>(c.genus) + 2);
    c.f = parse_coeffs(j["f"], where + ", field 'f'", 2 * static_cast<size_t>(c.genus) + 3);
    if (std::all_of(c.f.begin(), c.f.end(), [](long x) { return x == 0; })) {
        throw InputError(where + ": 'f' must be nonzero");
    }

    if (!j.contains("real_period") || !j["real_period"].is_string()) {
        throw InputError(where + ": missing 'real_period' (decimal string)");
    }
    c.real_period = j["real_period"].get<std::string>();
    if (significant_digits(c.real_period) < 15) {
        throw InputError(where + ": 'real_period' must carry at least 15 significant digits");
    }
    try {
        Real probe(c.real_period, 64);
        if (!(probe > 0L)) throw InputError(where + ": 'real_period' must be positive");
    } catch (const InputError&) {
        throw;
    } catch (const std::exception&) {
        throw InputError(where + ": 'real_period' is not a parsable decimal");
    }

    if (!j.contains("torsion_q") || !j["torsion_q"].is_number_integer()) {
        throw InputError(where + ": missing integer 'torsion_q'");
    }
    const long long tq = j["torsion_q"].get<long long>();
    if (tq < 1) throw InputError(where + ": 'torsion_q' must be >= 1");
    c.torsion_q = static_cast<unsigned long>(tq);

    if (j.contains("torsion_f")) {
        if (!j["torsion_f"].is_number_integer() || j["torsion_f"].get<long long>() < 1) {
            throw InputError(where + ": 'torsion_f' must be an integer >= 1");
        }
        c.torsion_f = static_cast<unsigned long>(j["torsion_f"].get<long long>());
    }

    if (j.contains("sha_analytic")) c.sha_analytic = parse_mpz(j["sha_analytic"], where + ", field 'sha_analytic'");

    const std::set<unsigned long> cond_primes = prime_support(c.conductor, where + ", conductor");

    if (!j.contains("bad_euler") || !j["bad_euler"].is_object()) {
        throw InputError(where + ": missing object 'bad_euler'");
    }
    std::set<unsigned long> bad_keys;
    for (const auto& [key, val] : j["bad_euler"].items()) {
        unsigned long ell = 0;
        try {
            ell = std::stoul(key);
        } catch (const std::exception&) {
            throw InputError(where + ": bad_euler key '" + key + "' is not a prime");
        }
        const std::vector<long> coeffs = parse_coeffs(val, where + ", bad_euler[" + key + "]",
                                                      2 * static_cast<size_t>(c.genus) + 1);
        if (coeffs.empty() || coeffs[0] != 1) {
            throw InputError(where + ": bad_euler[" + key + "] must start with constant term 1");
        }
        c.bad_euler[ell] = coeffs;
        bad_keys.insert(ell);
    }
    if (bad_keys != cond_primes) {
        std::ostringstream msg;
        msg << where << ": bad_euler keys {";
        for (unsigned long k : bad_keys) msg << k << " ";
        msg << "} must be exactly the primes dividing the conductor {";
        for (unsigned long k : cond_primes) msg << k << " ";
        msg << "}";
        throw InputError(msg.str());
    }

    if (j.contains("twist_conductor")) {
        if (!j["twist_conductor"].is_object()) throw InputError(where + ": 'twist_conductor' must be an object");
        for (const auto& [key, val] : j["twist_conductor"].items()) {
            unsigned long qq = 0;
            try {
                qq = std::stoul(key);
            } catch (const std::exception&) {
                throw InputError(where + ": twist_conductor key '" + key + "' is not a prime");
            }
            mpz_class n = parse_mpz(val, where + ", twist_conductor[" + key + "]");
            if (n <= 0) throw InputError(where + ": twist_conductor[" + key + "] must be positive");
            c.twist_conductor[qq] = n;
        }
    }

    // The counting machinery treats every prime away from the conductor as a
    // prime of good reduction of the model, which is only legitimate when
    // the model discriminant has the same prime support as the conductor.
    mpz_class disc;
    try {
        disc = model_discriminant(c);
    } catch (const std::exception& e) {
        throw InputError(where + ": model discriminant could not be computed: " + e.what());
    }
    if (disc == 0) throw InputError(where + ": model is singular (discriminant 0)");
    const std::set<unsigned long> disc_primes = prime_support(disc, where + ", discriminant");
    if (disc_primes != cond_primes) {
        std::ostringstream msg;
        msg << where << ": prime support of the model discriminant {";
        for (unsigned long k : disc_primes) msg << k << " ";
        msg << "} differs from the conductor's {";
        for (unsigned long k : cond_primes) msg << k << " ";
        msg << "}; store a model that is smooth away from the conductor";
        throw InputError(msg.str());
    }

    return c;
}

}  // namespace

bool Dataset::has(const std::string& label) const {
    return std::any_of(curves.begin(), curves.end(), [&](const CurveData& c) { return c.label == label; });
}

const CurveData& Dataset::by_label(const std::string& label) const {
    for (const CurveData& c : curves)
        if (c.label == label) return c;
    std::ostringstream msg;
    msg << "unknown curve label '" << label << "'; dataset has " << curves.size() << " curves";
    if (!curves.empty()) {
        msg << " (first few:";
        for (size_t i = 0; i < std::min<size_t>(3, curves.size()); ++i) msg << " " << curves[i].label;
        msg << ")";
    }
    throw InputError(msg.str());
}

Dataset parse_dataset(const std::string& json_text, const std::string& origin) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const std::exception& e) {
        throw InputError(origin + ": JSON parse error: " + e.what());
    }
    if (!root.is_object() || !root.contains("curves") || !root["curves"].is_array()) {
        throw InputError(origin + ": expected an object with an array field 'curves'");
    }
    Dataset ds;
    std::set<std::string> seen;
    for (const auto& rec : root["curves"]) {
        CurveData c = parse_curve(rec, origin);
        if (!seen.insert(c.label).second) {
            throw InputError(origin + ": duplicate label '" + c.label + "'");
        }
        ds.curves.push_back(std::move(c));
    }
    return ds;
}

Dataset load_dataset(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open dataset file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_dataset(buf.str(), path);
}

// ---------------------------------------------------------------------------
// Coefficient cache
// ---------------------------------------------------------------------------

namespace {
constexpr char kMagic[8] = {'T', 'L', 'A', 'B', 'C', 'O', 'E', 'F'};

std::string sanitize(const std::string& s) {
    std::string out;
    for (char c : s) out += (std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '-') ? c : '_';
    return out;
}
}  // namespace

CoeffCache::CoeffCache(std::string dir) : dir_(std::move(dir)) {
    if (!dir_.empty()) {
        std::error_code ec;
        fs::create_directories(dir_, ec);
        if (ec) throw InputError("cannot create cache directory '" + dir_ + "': " + ec.message());
    }
}

std::string CoeffCache::default_dir() {
    if (const char* env = std::getenv("THETALAB_CACHE")) return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME")) return std::string(xdg) + "/thetalab";
    if (const char* home = std::getenv("HOME")) return std::string(home) + "/.cache/thetalab";
    return ".thetalab-cache";
}

std::vector<long long> CoeffCache::get(const CurveData& curve, size_t M) {
    if (dir_.empty()) {
        ++misses;
        return dirichlet_coeffs(curve, M).a;
    }
    const std::string key = sanitize(curve.label) + "." + curve.model_hash() + ".";

    // Any cached vector with M' >= M serves the request.
    std::error_code ec;
    for (fs::directory_iterator it(dir_, ec), end; !ec && it != end; it.increment(ec)) {
        const std::string name = it->path().filename().string();
        if (name.rfind(key, 0) != 0 || name.size() <= key.size()) continue;
        const std::string suffix = name.substr(key.size());
        if (suffix.size() < 6 || suffix.substr(suffix.size() - 5) != ".coef") continue;
        size_t cached_m = 0;
        try {
            cached_m = std::stoull(suffix.substr(0, suffix.size() - 5));
        } catch (const std::exception&) {
            continue;
        }
        if (cached_m < M) continue;
        std::ifstream in(it->path(), std::ios::binary);
        if (!in) continue;
        char magic[8];
        uint64_t stored_m = 0;
        in.read(magic, 8);
        in.read(reinterpret_cast<char*>(&stored_m), 8);
        if (!in || std::memcmp(magic, kMagic, 8) != 0 || stored_m != cached_m) continue;
        std::vector<long long> a(M + 1, 0);
        bool good = true;
        for (size_t n = 1; n <= M; ++n) {
            int64_t v = 0;
            in.read(reinterpret_cast<char*>(&v), 8);
            if (!in) { good = false; break; }
            a[n] = v;
        }
        if (!good) continue;
        ++hits;
        return a;
    }

    ++misses;
    std::vector<long long> a = dirichlet_coeffs(curve, M).a;
    const fs::path tmp = fs::path(dir_) / (key + std::to_string(M) + ".coef.tmp");
    const fs::path final_path = fs::path(dir_) / (key + std::to_string(M) + ".coef");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (out) {
            out.write(kMagic, 8);
            const uint64_t m64 = M;
            out.write(reinterpret_cast<const char*>(&m64), 8);
            for (size_t n = 1; n <= M; ++n) {
                const int64_t v = a[n];
                out.write(reinterpret_cast<const char*>(&v), 8);
            }
        }
    }
    fs::rename(tmp, final_path, ec);
    if (ec) fs::remove(tmp, ec);
    // Drop smaller vectors for the same model; the new one covers them.
    for (fs::directory_iterator it(dir_, ec), end; !ec && it != end; it.increment(ec)) {
        const std::string name = it->path().filename().string();
        if (name.rfind(key, 0) != 0 || name == final_path.filename().string()) continue;
        if (name.size() > 5 && name.substr(name.size() - 5) == ".coef") {
            std::error_code rm;
            fs::remove(it->path(), rm);
        }
    }
    return a;
}

CoeffCache::Status CoeffCache::status() const {
    Status st;
    st.dir = dir_;
    if (dir_.empty()) return st;
    std::error_code ec;
    for (fs::directory_iterator it(dir_, ec), end; !ec && it != end; it.increment(ec)) {
        if (!it->is_regular_file(ec)) continue;
        ++st.files;
        st.bytes += static_cast<size_t>(it->file_size(ec));
    }
    return st;
}

size_t CoeffCache::clear() {
    if (dir_.empty()) return 0;
    size_t removed = 0;
    std::error_code ec;
    for (fs::directory_iterator it(dir_, ec), end; !ec && it != end; it.increment(ec)) {
        const std::string name = it->path().filename().string();
        if (name.size() > 5 && name.substr(name.size() - 5) == ".coef") {
            std::error_code rm;
            if (fs::remove(it->path(), rm) && !rm) ++removed;
        }
    }
    return removed;
}

}  // namespace thetalab
