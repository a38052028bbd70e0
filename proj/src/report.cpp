#include "qchow/report.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "qchow/hilb.hpp"

namespace qchow {

namespace {

std::string file_stem(std::size_t index, const std::string& label) {
    std::string s = std::to_string(index) + "-";
    for (char ch : label) s += std::isalnum(static_cast<unsigned char>(ch)) ? ch : '_';
    return s + ".cert";
}

std::optional<std::string> path_of(const CertificatePaths& paths, std::size_t i, std::size_t j) {
    if (i < paths.size() && j < paths[i].size()) return paths[i][j];
    return std::nullopt;
}

std::string weights_string(const std::vector<LinearForm>& ws) {
    std::string s;
    for (std::size_t k = 0; k < ws.size(); ++k) s += (k ? ", " : "") + ws[k].to_string();
    return s;
}

std::string form_label(char prefix, const FormMonomial& m) {
    return prefix + std::to_string(monomial_index(m) + 1);
}

}  // namespace

CertificatePaths write_certificates(const std::vector<Verdict>& verdicts, const std::string& dir) {
    namespace fs = std::filesystem;
    CertificatePaths paths(verdicts.size());
    for (std::size_t i = 0; i < verdicts.size(); ++i) {
        const auto& v = verdicts[i];
        paths[i].resize(v.rows.size());
        for (std::size_t j = 0; j < v.rows.size(); ++j) {
            const auto& cert = v.rows[j].certificate;
            if (!cert) continue;
            fs::path p = fs::path(dir) / v.id / file_stem(j, v.rows[j].label);
            fs::create_directories(p.parent_path());
            std::ofstream out(p);
            out << cert->to_line() << '\n';
            if (!out) throw std::runtime_error("cannot write " + p.string());
            paths[i][j] = p.string();
        }
    }
    return paths;
}

std::string report_json(const std::vector<Verdict>& verdicts, const CertificatePaths& paths) {
    using nlohmann::ordered_json;
    ordered_json doc;
    doc["version"] = kReportVersion;
    doc["scenarios"] = ordered_json::array();
    for (std::size_t i = 0; i < verdicts.size(); ++i) {
        const auto& v = verdicts[i];
        ordered_json s;
        s["id"] = v.id;
        s["pass"] = v.pass();
        s["rows"] = ordered_json::array();
        for (std::size_t j = 0; j < v.rows.size(); ++j) {
            const auto& r = v.rows[j];
            ordered_json row;
            row["label"] = r.label;
            row["value"] = r.value;
            row["target"] = r.target;
            row["member"] = r.member;
            row["expected_negative"] = r.expected_negative;
            auto p = path_of(paths, i, j);
            row["certificate"] = p ? ordered_json(*p) : ordered_json(nullptr);
            s["rows"].push_back(std::move(row));
        }
        s["integrity"] = v.integrity_ok ? "ok" : "error";
        if (!v.integrity_ok) s["integrity_message"] = v.integrity_message;
        if (!v.notes.empty()) s["notes"] = v.notes;
        s["seconds"] = v.seconds;
        doc["scenarios"].push_back(std::move(s));
    }
    return doc.dump(2) + "\n";
}

std::string report_markdown(const std::vector<Verdict>& verdicts, const CertificatePaths& paths) {
    std::ostringstream out;
    out << "# Verification report\n";
    for (std::size_t i = 0; i < verdicts.size(); ++i) {
        const auto& v = verdicts[i];
        out << "\n## " << v.id << ": " << (v.pass() ? "pass" : "FAIL");
        out << " (" << v.seconds << " s)\n\n";
        if (!v.integrity_ok) out << "Integrity error: " << v.integrity_message << "\n\n";
        for (const auto& n : v.notes) out << "Note: " << n << "\n\n";
        out << "| label | member | expected | target | certificate | value |\n";
        out << "|---|---|---|---|---|---|\n";
        for (std::size_t j = 0; j < v.rows.size(); ++j) {
            const auto& r = v.rows[j];
            auto p = path_of(paths, i, j);
            out << "| " << r.label << " | " << (r.member ? "yes" : "no") << " | "
                << (r.expected_negative ? "no" : "yes") << " | " << r.target << " | " << (p ? *p : "") << " | `"
                << r.value << "` |\n";
        }
    }
    return out.str();
}

int exit_code(const std::vector<Verdict>& verdicts) {
    int code = 0;
    for (const auto& v : verdicts) {
        if (!v.integrity_ok) return 2;
        if (!v.pass()) code = 1;
    }
    return code;
}

const std::vector<std::string>& dump_ids() {
    static const std::vector<std::string> ids{"pw2",     "pw4",       "hilb2",      "hilb3",      "hilb3-blowup",
                                              "hilb2w2", "binodal-D", "trinodal-Z", "strata"};
    return ids;
}

std::vector<std::string> dump_table(const std::string& id) {
    std::vector<std::string> rows;
    if (id == "pw2" || id == "pw4") {
        int d = id == "pw2" ? 2 : 4;
        char prefix = d == 2 ? 'Q' : 'F';
        for (const auto& m : monomials(d))
            rows.push_back(form_label(prefix, m) + " | " + m.to_string() + " | h = " +
                           hyperplane_restriction(m).to_string() + " | tangent: " +
                           weights_string(proj_tangent_weights(d, m)));
    } else if (id == "hilb2" || id == "hilb3") {
        for (const auto& p : hilb_fixed_points(id == "hilb2" ? 2 : 3)) {
            auto t = monomial_tangent_weights(p);
            rows.push_back(p.label + " | " + p.ideal_string() + " | ctop = " + t.product().to_string());
        }
    } else if (id == "hilb3-blowup") {
        for (const auto& h : htilde_fixed_points())
            rows.push_back(h.label() + " | " + h.base->ideal_string() + " | extra " + h.extra_int().get_str() +
                           " | tangent: " + weights_string(h.tangent()));
    } else if (id == "hilb2w2") {
        for (const auto& p : hilb2w2_fixed_data()) {
            auto t = monomial_tangent_weights(p.ideal);
            rows.push_back(p.label + " | " + p.ideal.ideal_string() + " | image " + form_label('F', p.image) +
                           " | tau = " + p.tau.to_string() + " | ctop = " + t.product().to_string());
        }
    } else if (id == "binodal-D") {
        for (const auto& p : hilb_fixed_points(2))
            for (const auto& m : fiber_monomials_double(p))
                rows.push_back("(" + p.label + "," + m.to_string() + ") | image " + form_label('F', m));
    } else if (id == "trinodal-Z") {
        for (const auto& h : htilde_fixed_points())
            for (const auto& m : fiber_monomials_trinodal(h))
                rows.push_back("(" + h.label() + "," + m.to_string() + ") | type " +
                               std::to_string(static_cast<int>(trinodal_type(h))) + " | image " + form_label('F', m));
    } else if (id == "strata") {
        auto parts = weighted_partitions(4);
        std::stable_sort(parts.begin(), parts.end(),
                         [](const auto& a, const auto& b) { return codim(a, 4) < codim(b, 4); });
        for (const auto& wp : parts) rows.push_back(wp.label() + " | codim " + std::to_string(codim(wp, 4)));
    } else {
        throw std::invalid_argument("unknown table: " + id);
    }
    return rows;
}

}  // namespace qchow
