#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "liebial/instance.hpp"

using namespace liebial;

namespace {

Report runMode(const Quadruple& q, const std::string& mode) {
    if (mode == "transitive")
        return verify_transitive(q);
    if (mode == "coboundary")
        return verify_coboundary(q);
    if (mode == "matched-pair")
        return check_matched_pair(q);
    if (mode == "hamiltonian-tau")
        return check_hamiltonian_tau(q);
    throw InstanceError("unknown mode: " + mode);
}

void writeOut(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw InstanceError("cannot write output file: " + path);
    out << text;
}

std::vector<std::tuple<int, int, Rational>> parseR0(const std::string& entries) {
    std::vector<std::tuple<int, int, Rational>> out;
    size_t start = 0;
    while (start <= entries.size()) {
        size_t end = entries.find(';', start);
        std::string entry =
            entries.substr(start, end == std::string::npos ? std::string::npos : end - start);
        if (!entry.empty()) {
            size_t c1 = entry.find(',');
            size_t c2 = entry.find(',', c1 + 1);
            if (c1 == std::string::npos || c2 == std::string::npos)
                throw InstanceError("r0 entry must be 'a,b,rational': " + entry);
            try {
                out.emplace_back(std::stoi(entry.substr(0, c1)),
                                 std::stoi(entry.substr(c1 + 1, c2 - c1 - 1)),
                                 Rational(entry.substr(c2 + 1)));
            } catch (const std::exception&) {
                throw InstanceError("r0 entry must be 'a,b,rational': " + entry);
            }
        }
        if (end == std::string::npos)
            break;
        start = end + 1;
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verifier for transitive Lie bialgebroid structures"};
    app.require_subcommand(1);

    std::string verifyFile, verifyMode, format = "text", outPath;
    bool withOracle = false;
    CLI::App* verify = app.add_subcommand("verify", "Check the structure conditions");
    verify->add_option("file", verifyFile, "instance file")->required();
    verify->add_option("--mode", verifyMode,
                       "transitive | coboundary | matched-pair | hamiltonian-tau "
                       "(default: the instance's mode field)");
    verify->add_flag("--oracle", withOracle,
                     "also run the independent d_*^2 = 0 generator check");
    verify->add_option("--format", format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--out", outPath, "write the report here instead of stdout");

    std::string gaugeFile, r0Spec, gaugeOut;
    CLI::App* gauge = app.add_subcommand(
        "gauge", "Shift tau by a constant bivector and the cobracket by its coboundary");
    gauge->add_option("file", gaugeFile, "instance file")->required();
    gauge->add_option("--r0", r0Spec, "semicolon-separated entries a,b,rational")
        ->required();
    gauge->add_option("--out", gaugeOut, "write the gauged instance here")->required();

    std::string dstarFile, sectionExpr;
    CLI::App* dstar = app.add_subcommand("dstar", "Apply the dual differential to a section");
    dstar->add_option("file", dstarFile, "instance file")->required();
    dstar->add_option("--section", sectionExpr,
                      "section in the printed-multivector grammar")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) {
            InstanceFile f = loadInstance(verifyFile);
            Quadruple q = buildQuadruple(f);
            ReportDocument doc;
            doc.digest = instanceDigest(f);
            doc.mode = verifyMode.empty() ? f.mode : verifyMode;
            doc.report = runMode(q, doc.mode);
            if (withOracle)
                doc.oracle = check_master(q);
            writeOut(outPath, format == "json" ? renderJson(doc) : renderText(doc));
            return doc.pass() ? 0 : 1;
        }
        if (gauge->parsed()) {
            InstanceFile f = loadInstance(gaugeFile);
            writeOut(gaugeOut, serializeInstance(gaugeInstance(f, parseR0(r0Spec))));
            return 0;
        }
        if (dstar->parsed()) {
            InstanceFile f = loadInstance(dstarFile);
            Quadruple q = buildQuadruple(f);
            Multivector s = parseSection(sectionExpr, q.ctx);
            std::cout << printMultivector(d_star(q, s)) << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
