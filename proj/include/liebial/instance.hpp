#pragma once

#include <optional>

#include "liebial/dual.hpp"

namespace liebial {

struct InstanceError : std::runtime_error {
    explicit InstanceError(const std::string& msg) : std::runtime_error(msg) {}
};

/// On-disk description of a Quadruple: JSON with schema 1 and blocks
/// manifold/algebra/cobracket/pi/theta/tau/mode.  All indices are 0-based;
/// antisymmetric blocks list the i < j (a < b) entry only.
struct InstanceFile {
    int schema = 1;
    int n = 0;
    std::vector<std::string> coords;
    int k = 0;
    std::vector<std::string> basis;
    std::vector<std::tuple<int, int, int, Rational>> brackets;   // [e_a,e_b] = c e_d
    std::vector<std::tuple<int, int, int, Rational>> cobracket;  // delta(e_a) ∋ c e_b^e_c
    std::vector<std::tuple<int, int, std::string>> pi;           // dx_i ^ dx_j duals
    std::vector<std::tuple<int, int, std::string>> theta;        // d/dx_i (x) e_a
    std::vector<std::tuple<int, int, std::string>> tau;          // e_a ^ e_b
    std::string mode = "transitive";
};

InstanceFile parseInstance(const std::string& text);
InstanceFile loadInstance(const std::string& path);
/// Canonical serialized form; parseInstance(serializeInstance(f)) round-trips.
std::string serializeInstance(const InstanceFile& f);

/// Validates index ranges and expressions and builds the quadruple.
Quadruple buildQuadruple(const InstanceFile& f);

/// The gauge shift applied at the file level: tau gains r0, the cobracket
/// gains the coboundary of r0.  Entries of r0 are (a, b, coefficient), a < b.
InstanceFile gaugeInstance(const InstanceFile& f,
                           const std::vector<std::tuple<int, int, Rational>>& r0);

/// FNV-1a 64-bit digest of the canonical serialized form, in hex.
std::string instanceDigest(const InstanceFile& f);

/// A verification run bundled for rendering: the mode that ran, the main
/// report, and the optional square-zero oracle report.
struct ReportDocument {
    std::string digest;
    std::string mode;
    Report report;
    std::optional<Report> oracle;

    bool pass() const;
};

std::string renderText(const ReportDocument& doc);
std::string renderJson(const ReportDocument& doc);

/// Parses a section in the printed-multivector grammar: terms separated by
/// " + ", each either a scalar expression, a wedge of generators joined by
/// '^' (generator = @coord or an algebra basis name), or
/// "(scalar)*gen^gen...".
Multivector parseSection(const std::string& text, const ContextPtr& ctx);

}  // namespace liebial
