#include "liebial/instance.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace liebial {

namespace {

using Json = nlohmann::ordered_json;

Rational parseRational(const std::string& s) {
    try {
        return Rational(s);
    } catch (const std::exception&) {
        throw InstanceError("invalid rational literal: '" + s + "'");
    }
}

std::vector<std::tuple<int, int, int, Rational>> readTriples(const Json& j,
                                                             const std::string& block) {
    std::vector<std::tuple<int, int, int, Rational>> out;
    if (!j.contains(block))
        return out;
    for (const auto& row : j.at(block)) {
        if (!row.is_array() || row.size() != 4)
            throw InstanceError(block + " entries must be [i, j, k, \"rational\"]");
        out.emplace_back(row[0].get<int>(), row[1].get<int>(), row[2].get<int>(),
                         parseRational(row[3].get<std::string>()));
    }
    return out;
}

std::vector<std::tuple<int, int, std::string>> readExprPairs(const Json& j,
                                                             const std::string& block) {
    std::vector<std::tuple<int, int, std::string>> out;
    if (!j.contains(block))
        return out;
    for (const auto& row : j.at(block)) {
        if (!row.is_array() || row.size() != 3)
            throw InstanceError(block + " entries must be [i, j, \"expression\"]");
        out.emplace_back(row[0].get<int>(), row[1].get<int>(), row[2].get<std::string>());
    }
    return out;
}

void requireRange(int idx, int bound, const std::string& what) {
    if (idx < 0 || idx >= bound)
        throw InstanceError(what + " index " + std::to_string(idx) + " out of range [0, " +
                            std::to_string(bound) + ")");
}

uint64_t fnv1a(const std::string& data) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace

InstanceFile parseInstance(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InstanceError(std::string("JSON parse error: ") + e.what());
    }
    InstanceFile f;
    try {
        f.schema = j.value("schema", 0);
        if (f.schema != 1)
            throw InstanceError("unsupported schema version");
        const Json& man = j.at("manifold");
        f.n = man.at("dim").get<int>();
        f.coords = man.value("coords", std::vector<std::string>{});
        const Json& alg = j.at("algebra");
        f.k = alg.at("dim").get<int>();
        f.basis = alg.value("basis", std::vector<std::string>{});
        f.brackets = readTriples(alg, "brackets");
        f.cobracket = readTriples(j, "cobracket");
        f.pi = readExprPairs(j, "pi");
        f.theta = readExprPairs(j, "theta");
        f.tau = readExprPairs(j, "tau");
        f.mode = j.value("mode", "transitive");
    } catch (const nlohmann::json::exception& e) {
        throw InstanceError(std::string("malformed instance: ") + e.what());
    }
    if (static_cast<int>(f.coords.size()) != f.n)
        throw InstanceError("manifold.coords must list exactly dim names");
    if (static_cast<int>(f.basis.size()) != f.k)
        throw InstanceError("algebra.basis must list exactly dim names");
    return f;
}

InstanceFile loadInstance(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InstanceError("cannot open instance file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parseInstance(ss.str());
}

std::string serializeInstance(const InstanceFile& f) {
    Json j;
    j["schema"] = f.schema;
    j["manifold"] = {{"dim", f.n}, {"coords", f.coords}};
    Json brackets = Json::array();
    for (const auto& [a, b, d, c] : f.brackets)
        brackets.push_back({a, b, d, printRational(c)});
    j["algebra"] = {{"dim", f.k}, {"basis", f.basis}, {"brackets", brackets}};
    Json cob = Json::array();
    for (const auto& [a, b, c, v] : f.cobracket)
        cob.push_back({a, b, c, printRational(v)});
    j["cobracket"] = cob;
    auto exprBlock = [](const std::vector<std::tuple<int, int, std::string>>& rows) {
        Json arr = Json::array();
        for (const auto& [i, jdx, e] : rows)
            arr.push_back({i, jdx, e});
        return arr;
    };
    j["pi"] = exprBlock(f.pi);
    j["theta"] = exprBlock(f.theta);
    j["tau"] = exprBlock(f.tau);
    j["mode"] = f.mode;
    return j.dump(2) + "\n";
}

Quadruple buildQuadruple(const InstanceFile& f) {
    LieAlgebraData L;
    L.k = f.k;
    L.basisNames = f.basis;
    for (const auto& [a, b, d, c] : f.brackets) {
        requireRange(a, f.k, "bracket");
        requireRange(b, f.k, "bracket");
        requireRange(d, f.k, "bracket");
        if (a >= b)
            throw InstanceError("bracket entries must have a < b");
        L.c[{a, b}][d] += c;
    }
    if (!checkJacobi(L))
        throw InstanceError("structure constants violate the Jacobi identity");
    ContextPtr ctx = makeContext(f.n, f.coords, L);
    Quadruple q = Quadruple::zero(ctx);
    for (const auto& [a, b, c, v] : f.cobracket) {
        requireRange(a, f.k, "cobracket");
        requireRange(b, f.k, "cobracket");
        requireRange(c, f.k, "cobracket");
        if (b >= c)
            throw InstanceError("cobracket entries must have b < c");
        q.delta.d[a][{b, c}] += v;
    }
    auto parseExpr = [&](const std::string& text, const std::string& block) {
        try {
            return parseScalar(text, f.n, f.coords);
        } catch (const ParseError& e) {
            throw InstanceError(block + " expression '" + text + "': " + e.what() +
                                " (position " + std::to_string(e.position) + ")");
        }
    };
    for (const auto& [i, jdx, e] : f.pi) {
        requireRange(i, f.n, "pi");
        requireRange(jdx, f.n, "pi");
        if (i >= jdx)
            throw InstanceError("pi entries must have i < j");
        q.pi.add({i, jdx}, {}, parseExpr(e, "pi"));
    }
    for (const auto& [i, a, e] : f.theta) {
        requireRange(i, f.n, "theta");
        requireRange(a, f.k, "theta");
        q.theta.comp[i][a] = q.theta.comp[i][a] + parseExpr(e, "theta");
    }
    for (const auto& [a, b, e] : f.tau) {
        requireRange(a, f.k, "tau");
        requireRange(b, f.k, "tau");
        if (a >= b)
            throw InstanceError("tau entries must have a < b");
        q.tau.add({a, b}, parseExpr(e, "tau"));
    }
    return q;
}

InstanceFile gaugeInstance(const InstanceFile& f,
                           const std::vector<std::tuple<int, int, Rational>>& r0) {
    Quadruple q = buildQuadruple(f);
    AlgMultivector r(f.n, 2);
    for (const auto& [a, b, c] : r0) {
        requireRange(a, f.k, "r0");
        requireRange(b, f.k, "r0");
        if (a >= b)
            throw InstanceError("r0 entries must have a < b");
        r.add({a, b}, ScalarFn::constant(f.n, c));
    }
    Quadruple g = gauge_transform(q, r);
    InstanceFile out = f;
    out.tau.clear();
    for (int a = 0; a < f.k; ++a)
        for (int b = a + 1; b < f.k; ++b) {
            ScalarFn c = g.tau.coeff({a, b});
            if (!c.isZero())
                out.tau.emplace_back(a, b, printScalar(c, f.coords));
        }
    out.cobracket.clear();
    for (const auto& [a, m] : g.delta.d)
        for (const auto& [bc, v] : m)
            if (v != 0)
                out.cobracket.emplace_back(a, bc.first, bc.second, v);
    return out;
}

std::string instanceDigest(const InstanceFile& f) {
    std::ostringstream out;
    out << std::hex << fnv1a(serializeInstance(f));
    return out.str();
}

bool ReportDocument::pass() const {
    return report.pass() && (!oracle || oracle->pass());
}

std::string renderText(const ReportDocument& doc) {
    std::ostringstream out;
    out << doc.report.title << " (mode: " << doc.mode << ", instance " << doc.digest << ")\n";
    auto renderReport = [&](const Report& rep) {
        for (const auto& c : rep.conditions) {
            out << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.id << ": " << c.ref;
            if (!c.pass)
                out << "\n         residual: " << c.residual;
            out << "\n";
        }
        for (const auto& note : rep.notes)
            out << "  note: " << note << "\n";
    };
    renderReport(doc.report);
    if (doc.oracle) {
        out << doc.oracle->title << "\n";
        renderReport(*doc.oracle);
    }
    out << (doc.pass() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

std::string renderJson(const ReportDocument& doc) {
    Json j;
    j["schema"] = 1;
    j["instance"] = doc.digest;
    j["mode"] = doc.mode;
    auto reportJson = [](const Report& rep) {
        Json r;
        r["title"] = rep.title;
        Json conds = Json::array();
        for (const auto& c : rep.conditions)
            conds.push_back({{"id", c.id},
                             {"ref", c.ref},
                             {"pass", c.pass},
                             {"residual", c.residual}});
        r["conditions"] = conds;
        r["notes"] = rep.notes;
        r["pass"] = rep.pass();
        return r;
    };
    j["report"] = reportJson(doc.report);
    if (doc.oracle)
        j["oracle"] = reportJson(*doc.oracle);
    j["pass"] = doc.pass();
    return j.dump(2) + "\n";
}

namespace {

std::vector<std::string> splitTopLevelPlus(const std::string& text) {
    std::vector<std::string> parts;
    int depth = 0;
    size_t start = 0;
    for (size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '(')
            ++depth;
        else if (c == ')')
            --depth;
        else if (depth == 0 && c == '+' && i > 0 && i + 1 < text.size() &&
                 text[i - 1] == ' ' && text[i + 1] == ' ') {
            parts.push_back(text.substr(start, i - 1 - start));
            start = i + 2;
        }
    }
    parts.push_back(text.substr(start));
    return parts;
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    size_t b = s.find_last_not_of(" \t");
    return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

std::vector<std::string> splitOn(const std::string& s, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    for (size_t i = 0; i <= s.size(); ++i)
        if (i == s.size() || s[i] == sep) {
            out.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    return out;
}

/// Resolves a generator token; returns false if it is not one.
bool resolveGenerator(const std::string& tok, const ContextPtr& ctx, bool& isBase, int& idx) {
    if (!tok.empty() && tok[0] == '@') {
        std::string name = tok.substr(1);
        for (int i = 0; i < ctx->n; ++i)
            if (ctx->coords[i] == name) {
                isBase = true;
                idx = i;
                return true;
            }
        throw InstanceError("unknown coordinate in generator: " + tok);
    }
    for (int a = 0; a < ctx->k(); ++a)
        if (ctx->L.basisNames[a] == tok) {
            isBase = false;
            idx = a;
            return true;
        }
    return false;
}

}  // namespace

Multivector parseSection(const std::string& text, const ContextPtr& ctx) {
    Multivector result(ctx);
    for (const std::string& raw : splitTopLevelPlus(text)) {
        std::string term = trim(raw);
        if (term.empty())
            throw InstanceError("empty term in section expression");
        ScalarFn coeff = ScalarFn::constant(ctx->n, 1);
        std::string gens = term;
        if (term[0] == '(') {
            int depth = 0;
            size_t close = std::string::npos;
            for (size_t i = 0; i < term.size(); ++i) {
                if (term[i] == '(')
                    ++depth;
                else if (term[i] == ')' && --depth == 0) {
                    close = i;
                    break;
                }
            }
            if (close != std::string::npos) {
                std::string rest = trim(term.substr(close + 1));
                if (rest.empty()) {
                    gens = "";
                    coeff = parseScalar(term.substr(1, close - 1), ctx->n, ctx->coords);
                } else if (rest[0] == '*') {
                    coeff = parseScalar(term.substr(1, close - 1), ctx->n, ctx->coords);
                    gens = trim(rest.substr(1));
                }
            }
        }
        std::vector<int> base, alg;
        bool isGenList = !gens.empty();
        std::vector<std::pair<bool, int>> factors;
        if (isGenList) {
            for (const std::string& tok : splitOn(gens, '^')) {
                bool isBase = false;
                int idx = -1;
                if (!resolveGenerator(tok, ctx, isBase, idx)) {
                    isGenList = false;
                    break;
                }
                factors.emplace_back(isBase, idx);
            }
        }
        if (!gens.empty() && !isGenList) {
            // whole term is a scalar expression
            try {
                result.add({}, {}, parseScalar(term, ctx->n, ctx->coords));
            } catch (const ParseError& e) {
                throw InstanceError("section term '" + term + "': " + e.what());
            }
            continue;
        }
        for (const auto& [isBase, idx] : factors)
            (isBase ? base : alg).push_back(idx);
        result.add(std::move(base), std::move(alg), coeff);
    }
    return result;
}

}  // namespace liebial
