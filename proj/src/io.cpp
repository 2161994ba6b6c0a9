#include "gmfq/io.hpp"

#include "gmfq/arith.hpp"
#include "gmfq/errors.hpp"

#include <json.hpp>

#include <cctype>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

namespace gmfq {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::string iso_utc_now() {
    std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string trimmed(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(trimmed(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    fields.push_back(trimmed(cur));
    return fields;
}

long long parse_ll(const std::string& s, const std::string& where) {
    try {
        size_t used = 0;
        const long long v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw DataError(where + ": '" + s + "' is not an integer");
    }
}

long long require_int(const json& v, const std::string& field) {
    if (!v.is_number_integer())
        throw DataError("curve file: " + field + " must be an integer");
    return v.get<long long>();
}

} // namespace

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

CurveSpec load_curve(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("curve file not found: " + path);

    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw DataError("curve file " + path + ": " + e.what());
    }
    if (!doc.is_object()) throw DataError("curve file " + path + ": top level must be an object");

    static const std::vector<std::string> known{"label", "a_invariants", "bad_primes",
                                               "cm_discriminant", "ap_overrides"};
    for (const auto& [key, value] : doc.items()) {
        (void)value;
        bool ok = false;
        for (const auto& k : known) ok = ok || k == key;
        if (!ok) throw DataError("curve file: unknown field '" + key + "'");
    }

    if (!doc.contains("a_invariants"))
        throw DataError("curve file: missing required field 'a_invariants'");
    const json& ai = doc["a_invariants"];
    if (!ai.is_array() || ai.size() != 5)
        throw DataError("curve file: a_invariants must be an array of 5 integers");
    long long a[5];
    for (size_t i = 0; i < 5; ++i)
        a[i] = require_int(ai[i], "a_invariants[" + std::to_string(i) + "]");

    std::string label;
    if (doc.contains("label")) {
        if (!doc["label"].is_string()) throw DataError("curve file: label must be a string");
        label = doc["label"].get<std::string>();
    }

    std::optional<std::vector<long long>> bad;
    if (doc.contains("bad_primes")) {
        if (!doc["bad_primes"].is_array())
            throw DataError("curve file: bad_primes must be an array of integers");
        std::vector<long long> v;
        for (size_t i = 0; i < doc["bad_primes"].size(); ++i)
            v.push_back(require_int(doc["bad_primes"][i], "bad_primes[" + std::to_string(i) + "]"));
        bad = std::move(v);
    }

    std::optional<long long> cm;
    if (doc.contains("cm_discriminant"))
        cm = require_int(doc["cm_discriminant"], "cm_discriminant");

    std::map<long long, long long> overrides;
    if (doc.contains("ap_overrides")) {
        if (!doc["ap_overrides"].is_object())
            throw DataError("curve file: ap_overrides must be an object of prime -> integer");
        for (const auto& [key, value] : doc["ap_overrides"].items()) {
            const long long p = parse_ll(key, "curve file: ap_overrides key");
            if (!is_prime(p))
                throw DataError("curve file: ap_overrides key " + key + " is not prime");
            overrides[p] = require_int(value, "ap_overrides[" + key + "]");
        }
    }

    return CurveSpec{EllipticCurve(a[0], a[1], a[2], a[3], a[4], label, std::move(bad), cm),
                     std::move(overrides)};
}

std::map<long long, long long> import_ap_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("a_p file not found: " + path);

    std::map<long long, long long> out;
    std::string line;
    long long lineno = 0;
    bool header_seen = false;
    long long last_p = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trimmed(line);
        if (t.empty() || t[0] == '#') continue;
        const std::string where = path + " line " + std::to_string(lineno);
        if (!header_seen) {
            if (t != "p,ap") throw DataError(where + ": expected header 'p,ap'");
            header_seen = true;
            continue;
        }
        const auto fields = split_csv(t);
        if (fields.size() != 2) throw DataError(where + ": expected two fields 'p,ap'");
        const long long p = parse_ll(fields[0], where);
        const long long a = parse_ll(fields[1], where);
        if (!is_prime(p)) throw DataError(where + ": " + std::to_string(p) + " is not prime");
        if (out.count(p)) throw DataError(where + ": duplicate prime " + std::to_string(p));
        if (p <= last_p)
            throw DataError(where + ": primes must ascend (" + std::to_string(p) +
                            " after " + std::to_string(last_p) + ")");
        if (static_cast<__int128>(a) * a > static_cast<__int128>(4) * p)
            throw DataError(where + ": Hasse bound violated (|" + std::to_string(a) +
                            "| > 2 sqrt " + std::to_string(p) + ")");
        out[p] = a;
        last_p = p;
    }
    if (!header_seen) throw DataError(path + ": missing header 'p,ap'");
    return out;
}

void write_ap_csv(std::ostream& os, const ApTable& table) {
    os << "p,ap\n";
    for (size_t i = 0; i < table.primes.size(); ++i)
        os << table.primes[i] << ',' << table.ap[i] << '\n';
}

void write_coeff_cache(std::ostream& os, const CoefficientTable& table,
                       const std::string& label) {
    if (!table.dense()) {
        std::ostringstream msg;
        msg << "coefficient cache needs b(n) at every n <= " << table.bound()
            << "; supply a_p overrides for bad prime";
        const auto& missing = table.missing_bad_primes();
        if (missing.size() > 1) msg << 's';
        for (size_t i = 0; i < missing.size(); ++i) msg << (i ? ", " : " ") << missing[i];
        throw DataError(msg.str());
    }
    os << "# gmfq-coeffs v1\n";
    os << "# label: " << label << '\n';
    os << "# bound: " << table.bound() << '\n';
    os << "# bad_primes:";
    for (size_t i = 0; i < table.bad_primes().size(); ++i)
        os << (i ? "," : " ") << table.bad_primes()[i];
    os << '\n';
    os << "n,b,c_num,c_den\n";
    for (long long n = 1; n <= table.bound(); ++n) {
        const Rational c = table.c(n);
        os << n << ',' << table.b(n) << ',' << num_str(c) << ',' << den_str(c) << '\n';
    }
}

CoefficientCacheFile read_coeff_cache(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cache file not found: " + path);

    auto next_line = [&](const char* what) {
        std::string line;
        if (!std::getline(in, line)) throw DataError(path + ": truncated before " + what);
        return line;
    };

    if (next_line("version") != "# gmfq-coeffs v1")
        throw DataError(path + ": not a gmfq-coeffs v1 cache");
    std::string label_line = next_line("label");
    if (label_line.rfind("# label: ", 0) != 0)
        throw DataError(path + ": malformed label header");
    const std::string label = label_line.substr(9);

    std::string bound_line = next_line("bound");
    if (bound_line.rfind("# bound: ", 0) != 0)
        throw DataError(path + ": malformed bound header");
    const long long bound = parse_ll(bound_line.substr(9), path + " bound header");
    if (bound < 1) throw DataError(path + ": bound must be >= 1");

    std::string bad_line = next_line("bad_primes");
    if (bad_line.rfind("# bad_primes:", 0) != 0)
        throw DataError(path + ": malformed bad_primes header");
    std::vector<long long> bad;
    const std::string bad_list = trimmed(bad_line.substr(13));
    if (!bad_list.empty())
        for (const auto& f : split_csv(bad_list))
            bad.push_back(parse_ll(f, path + " bad_primes header"));

    if (next_line("column header") != "n,b,c_num,c_den")
        throw DataError(path + ": expected column header 'n,b,c_num,c_den'");

    // First pass: collect the rows, pick the prime b values out.
    struct Row {
        long long n, b;
        std::string c_num, c_den;
    };
    std::vector<Row> rows;
    rows.reserve(static_cast<size_t>(bound));
    std::map<long long, long long> ap_entries;
    for (long long n = 1; n <= bound; ++n) {
        const std::string where = path + " row " + std::to_string(n);
        const auto fields = split_csv(next_line("data row"));
        if (fields.size() != 4) throw DataError(where + ": expected 4 fields");
        Row row{parse_ll(fields[0], where), parse_ll(fields[1], where), fields[2], fields[3]};
        if (row.n != n)
            throw DataError(where + ": rows must be dense ascending (found n = " +
                            std::to_string(row.n) + ")");
        if (is_prime(n)) ap_entries[n] = row.b;
        rows.push_back(std::move(row));
    }

    // Rebuild from the prime data alone, then insist every stored row agrees:
    // a cache that fails this was edited or corrupted.
    CoefficientCacheFile out{label, CoefficientTable::from_ap(ap_entries, bad, bound)};
    for (const auto& row : rows) {
        const std::string where = path + " row " + std::to_string(row.n);
        if (out.table.b(row.n) != row.b)
            throw DataError(where + ": b value inconsistent with prime data");
        const Rational c = out.table.c(row.n);
        if (num_str(c) != row.c_num || den_str(c) != row.c_den)
            throw DataError(where + ": c value inconsistent with prime data");
    }
    return out;
}

void write_density_csv(std::ostream& os, const DensityReport& report, bool with_timestamp) {
    if (with_timestamp) os << "# generated-at: " << iso_utc_now() << '\n';
    os << "predicate_id,x,count,pi_x,ratio,theoretical,deviation\n";
    for (const auto& row : report.rows) {
        os << report.predicate_id << ',' << row.x << ',' << row.count << ',' << row.pi_x << ','
           << format_double(row.ratio) << ',' << format_double(row.theoretical) << ','
           << format_double(row.deviation) << '\n';
    }
}

void write_integrality_json(std::ostream& os, const IntegralityResult& result,
                            const std::string& label, bool with_timestamp) {
    ordered_json doc;
    doc["label"] = label;
    doc["x"] = result.x;
    doc["candidate_bound"] = result.candidate_bound;
    doc["candidate_primes"] = candidate_primes();
    ordered_json nz = ordered_json::array();
    for (const auto& [p, c] : result.nonzero_integral)
        nz.push_back({p, c.get_num().get_si(), c.get_den().get_si()});
    doc["nonzero_integral"] = std::move(nz);
    doc["zero_set"] = result.zero_set;
    if (with_timestamp) doc["generated_at"] = iso_utc_now();
    os << doc.dump(2) << '\n';
}

void convert_report(std::istream& in, std::ostream& out, const std::string& format) {
    if (format != "csv" && format != "json")
        throw std::invalid_argument("report format must be 'csv' or 'json'");

    std::string line;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    long long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trimmed(line);
        if (t.empty() || t[0] == '#') continue;
        auto fields = split_csv(t);
        if (header.empty()) {
            header = std::move(fields);
            continue;
        }
        if (fields.size() != header.size())
            throw DataError("report line " + std::to_string(lineno) + ": expected " +
                            std::to_string(header.size()) + " fields, got " +
                            std::to_string(fields.size()));
        rows.push_back(std::move(fields));
    }
    if (header.empty()) throw DataError("report input has no header row");

    if (format == "csv") {
        for (size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
        out << '\n';
        for (const auto& row : rows) {
            for (size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
            out << '\n';
        }
        return;
    }

    // JSON: array of row objects keyed by the header, numeric fields typed.
    ordered_json arr = ordered_json::array();
    for (const auto& row : rows) {
        ordered_json obj;
        for (size_t i = 0; i < header.size(); ++i) {
            const std::string& v = row[i];
            try {
                size_t used = 0;
                const long long n = std::stoll(v, &used);
                if (used == v.size()) {
                    obj[header[i]] = n;
                    continue;
                }
            } catch (const std::exception&) {
            }
            try {
                size_t used = 0;
                const double d = std::stod(v, &used);
                if (used == v.size()) {
                    obj[header[i]] = d;
                    continue;
                }
            } catch (const std::exception&) {
            }
            obj[header[i]] = v;
        }
        arr.push_back(std::move(obj));
    }
    out << arr.dump(2) << '\n';
}

} // namespace gmfq
