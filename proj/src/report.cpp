#include "orbizeta/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace orbizeta {

using nlohmann::ordered_json;

bool VerificationReport::all_match() const
{
    if (error || rows.empty()) return false;
    return std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.match; });
}

namespace {

ordered_json big_to_json(const BigInt& v)
{
    if (v.fits_slong_p()) return static_cast<long>(v.get_si());
    return v.get_str();
}

BigInt big_from_json(const ordered_json& j)
{
    if (j.is_number_integer()) return BigInt(std::to_string(j.get<long long>()));
    if (j.is_string()) {
        BigInt v;
        if (v.set_str(j.get<std::string>(), 10) != 0) throw std::invalid_argument("bad integer string in report");
        return v;
    }
    throw std::invalid_argument("expected an integer in report");
}

ordered_json poly_to_json(const UPoly& p)
{
    ordered_json a = ordered_json::array();
    for (const auto& c : p) a.push_back(big_to_json(c));
    return a;
}

UPoly poly_from_json(const ordered_json& j)
{
    UPoly p;
    for (const auto& c : j) p.push_back(big_from_json(c));
    return p;
}

std::string emit_json(const std::vector<VerificationReport>& reports)
{
    ordered_json out = ordered_json::array();
    for (const auto& rep : reports) {
        ordered_json jr;
        jr["model"] = rep.model;
        jr["q"] = big_to_json(rep.q);
        ordered_json rows = ordered_json::array();
        for (const auto& row : rep.rows) {
            ordered_json o;
            o["r"] = row.r;
            o["n_coarse"] = big_to_json(row.n_coarse);
            o["n_orb"] = big_to_json(row.n_orb);
            o["n_resolution"] = big_to_json(row.n_resolution);
            o["match"] = row.match;
            rows.push_back(std::move(o));
        }
        jr["rows"] = std::move(rows);
        jr["zeta"] = {{"num", poly_to_json(rep.zeta_num)}, {"den", poly_to_json(rep.zeta_den)}};
        if (rep.error) jr["error"] = *rep.error;
        out.push_back(std::move(jr));
    }
    return out.dump(2);
}

std::string emit_csv(const std::vector<VerificationReport>& reports)
{
    std::ostringstream os;
    os << "model,q,r,n_coarse,n_orb,n_resolution,match\n";
    for (const auto& rep : reports)
        for (const auto& row : rep.rows)
            os << rep.model << ',' << rep.q.get_str() << ',' << row.r << ',' << row.n_coarse.get_str() << ','
               << row.n_orb.get_str() << ',' << row.n_resolution.get_str() << ',' << (row.match ? "true" : "false")
               << '\n';
    return os.str();
}

std::string emit_text(const std::vector<VerificationReport>& reports, bool with_timing)
{
    std::ostringstream os;
    std::size_t passed = 0;
    for (const auto& rep : reports) {
        const bool ok = rep.all_match();
        passed += ok;
        os << (ok ? "PASS" : "FAIL") << "  " << rep.model << "  q=" << rep.q.get_str();
        if (rep.e != 1) os << " (e=" << rep.e << ")";
        if (rep.R) os << "  R=" << rep.R;
        if (with_timing) os << "  " << std::fixed << std::setprecision(3) << rep.seconds << "s";
        os << '\n';

        const std::vector<std::string> head{"r", "n_coarse", "n_orb", "n_resolution", "match", "engine"};
        std::vector<std::vector<std::string>> cells{head};
        for (const auto& row : rep.rows)
            cells.push_back({std::to_string(row.r), row.n_coarse.get_str(), row.n_orb.get_str(),
                             row.n_resolution.get_str(), row.match ? "yes" : "NO", row.engine});
        std::vector<std::size_t> width(head.size(), 0);
        for (const auto& line : cells)
            for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
        if (!rep.rows.empty())
            for (const auto& line : cells) {
                os << "   ";
                for (std::size_t i = 0; i < line.size(); ++i) {
                    os << ' ' << std::setw(static_cast<int>(width[i])) << line[i];
                }
                os << '\n';
            }
        if (!rep.zeta_text.empty()) os << "    zeta: " << rep.zeta_text << '\n';
        for (const auto& note : rep.notes) os << "    note: " << note << '\n';
        if (rep.error) os << "    error: " << *rep.error << '\n';
    }
    os << passed << "/" << reports.size() << " items passed\n";
    return os.str();
}

}  // namespace

std::string emit_report(const std::vector<VerificationReport>& reports, ReportFormat format, bool with_timing)
{
    switch (format) {
    case ReportFormat::Json: return emit_json(reports);
    case ReportFormat::Csv: return emit_csv(reports);
    case ReportFormat::Text: break;
    }
    return emit_text(reports, with_timing);
}

std::vector<VerificationReport> parse_report_json(const std::string& text)
{
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw std::invalid_argument(std::string("report JSON: ") + ex.what());
    }
    if (!j.is_array()) throw std::invalid_argument("report JSON must be an array");
    std::vector<VerificationReport> out;
    try {
        for (const auto& jr : j) {
            VerificationReport rep;
            rep.model = jr.at("model").get<std::string>();
            rep.q = big_from_json(jr.at("q"));
            for (const auto& o : jr.at("rows")) {
                ReportRow row;
                row.r = o.at("r").get<int>();
                row.n_coarse = big_from_json(o.at("n_coarse"));
                row.n_orb = big_from_json(o.at("n_orb"));
                row.n_resolution = big_from_json(o.at("n_resolution"));
                row.match = o.at("match").get<bool>();
                rep.rows.push_back(std::move(row));
            }
            rep.zeta_num = poly_from_json(jr.at("zeta").at("num"));
            rep.zeta_den = poly_from_json(jr.at("zeta").at("den"));
            if (jr.contains("error")) rep.error = jr.at("error").get<std::string>();
            out.push_back(std::move(rep));
        }
    } catch (const nlohmann::json::exception& ex) {
        throw std::invalid_argument(std::string("report JSON: ") + ex.what());
    }
    return out;
}

bool same_report_data(const VerificationReport& a, const VerificationReport& b)
{
    if (a.model != b.model || a.q != b.q || a.zeta_num != b.zeta_num || a.zeta_den != b.zeta_den
        || a.error != b.error || a.rows.size() != b.rows.size())
        return false;
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        const auto &x = a.rows[i], &y = b.rows[i];
        if (x.r != y.r || x.n_coarse != y.n_coarse || x.n_orb != y.n_orb || x.n_resolution != y.n_resolution
            || x.match != y.match)
            return false;
    }
    return true;
}

void sort_reports(std::vector<VerificationReport>& reports)
{
    for (auto& rep : reports)
        std::stable_sort(rep.rows.begin(), rep.rows.end(), [](const auto& a, const auto& b) { return a.r < b.r; });
    std::stable_sort(reports.begin(), reports.end(), [](const auto& a, const auto& b) {
        if (a.model != b.model) return a.model < b.model;
        return a.q < b.q;
    });
}

}  // namespace orbizeta
