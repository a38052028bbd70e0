#include <algorithm>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "qchow/errors.hpp"
#include "qchow/report.hpp"
#include "qchow/zideal.hpp"

namespace {

int run_verify(std::vector<std::string> names, unsigned jobs, const std::string& report, const std::string& cert_dir,
               const std::string& format) {
    const auto& known = qchow::scenario_ids();
    if (std::find(names.begin(), names.end(), "all") != names.end()) names = known;
    for (const auto& n : names) {
        if (std::find(known.begin(), known.end(), n) == known.end()) {
            std::cerr << "unknown scenario: " << n << "\n";
            return 2;
        }
    }
    auto verdicts = qchow::run_scenarios(names, {std::max(1u, jobs)});
    qchow::CertificatePaths paths;
    if (!cert_dir.empty()) paths = qchow::write_certificates(verdicts, cert_dir);
    std::string text = format == "md" ? qchow::report_markdown(verdicts, paths) : qchow::report_json(verdicts, paths);
    if (report.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(report);
        out << text;
        if (!out) {
            std::cerr << "cannot write report " << report << "\n";
            return 2;
        }
    }
    for (const auto& v : verdicts) {
        std::cerr << (v.pass() ? "pass " : "FAIL ") << v.id << " (" << v.rows.size() << " rows, " << v.seconds << " s)";
        if (!v.integrity_ok) std::cerr << " integrity error: " << v.integrity_message;
        std::cerr << "\n";
    }
    return qchow::exit_code(verdicts);
}

int run_check_cert(const std::vector<std::string>& files) {
    int code = 0;
    for (const auto& f : files) {
        std::ifstream in(f);
        if (!in) {
            std::cerr << "cannot read " << f << "\n";
            return 2;
        }
        std::string line;
        int lineno = 0, checked = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            ++checked;
            bool ok = false;
            try {
                ok = qchow::check_certificate_line(line);
            } catch (const std::exception& e) {
                std::cerr << f << ":" << lineno << ": " << e.what() << "\n";
                return 2;
            }
            if (!ok) {
                std::cout << "FAIL " << f << ":" << lineno << "\n";
                code = 1;
            }
        }
        if (checked == 0) {
            std::cerr << f << ": no certificate lines\n";
            return 2;
        }
        if (code == 0) std::cout << "ok " << f << "\n";
    }
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact localization and ideal-membership checks for plane quartics"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "Run verification scenarios");
    std::vector<std::string> names;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    std::string report, cert_dir, format = "json";
    verify->add_option("scenarios", names, "all, or scenario ids")->required();
    verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    verify->add_option("--report", report, "Report path (default: standard output)");
    verify->add_option("--cert", cert_dir, "Directory for certificate files");
    verify->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "md"}));

    auto* dump = app.add_subcommand("dump", "Print a fixed-point table");
    dump->alias("fixed-points");
    std::string table;
    dump->add_option("table", table, "Table id")->required()->check(CLI::IsMember(qchow::dump_ids()));

    auto* check = app.add_subcommand("check-cert", "Re-verify certificate files");
    std::vector<std::string> files;
    check->add_option("files", files, "Certificate files")->required()->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*verify) return run_verify(names, jobs, report, cert_dir, format);
        if (*dump) {
            for (const auto& row : qchow::dump_table(table)) std::cout << row << "\n";
            return 0;
        }
        if (*check) return run_check_cert(files);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
