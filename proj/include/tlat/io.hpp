#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tlat/error.hpp"
#include "tlat/gibbs_context.hpp"
#include "tlat/gp_feasibility.hpp"
#include "tlat/pl_curve.hpp"
#include "tlat/prob_vector.hpp"
#include "tlat/qubit.hpp"
#include "tlat/rational.hpp"

namespace tlat {

/// Insertion-ordered JSON keeps emitted documents byte-stable.
using Json = nlohmann::ordered_json;

/// Rationals cross the JSON boundary as strings ("3/20", "1/2") so that no
/// value is ever squeezed through a double.  Bloch coordinates are genuine
/// binary64 and are emitted as JSON numbers that round-trip bitwise.

inline Json rational_array(const std::vector<Rational>& v) {
    Json arr = Json::array();
    for (const Rational& r : v) arr.push_back(to_string(r));
    return arr;
}

inline Json rational_array(const ProbVector& p) { return rational_array(p.entries()); }

inline Json bloch_array(const QubitState& s) { return Json::array({s.x, s.y, s.z}); }

inline Json curve_json(const PLCurve& c) {
    Json arr = Json::array();
    for (const CurvePoint& pt : c.points())
        arr.push_back(Json{{"x", to_string(pt.x)}, {"y", to_string(pt.y)}});
    return arr;
}

inline Json index_array(const std::vector<std::size_t>& order) {
    Json arr = Json::array();
    for (std::size_t i : order) arr.push_back(i);
    return arr;
}

inline Json matrix_json(const std::vector<std::vector<Rational>>& rows) {
    Json arr = Json::array();
    for (const auto& row : rows) arr.push_back(rational_array(row));
    return arr;
}

/// On-disk state document.  `kind` selects the representation; the context
/// block is optional and can be overridden by CLI flags.
struct StateFile {
    std::optional<ProbVector> classical;
    std::optional<QubitState> qubit;
    std::optional<GibbsContext> classical_context;
    std::optional<QubitGibbs> qubit_context;
};

namespace detail {

inline Rational parse_rational_field(const Json& j, const char* where) {
    require(j.is_string(), "invalid-state-file",
            std::string(where) + " must be a rational string like \"3/20\"");
    return parse_rational(j.get<std::string>());
}

inline std::vector<Rational> parse_rational_list(const Json& j, const char* where) {
    require(j.is_array() && !j.empty(), "invalid-state-file",
            std::string(where) + " must be a non-empty array of rational strings");
    std::vector<Rational> out;
    for (const Json& e : j) out.push_back(parse_rational_field(e, where));
    return out;
}

inline GibbsContext parse_classical_context(const Json& ctx) {
    if (ctx.contains("gamma"))
        return GibbsContext::from_gamma(
            ProbVector::validated(parse_rational_list(ctx.at("gamma"), "context.gamma")));
    require(ctx.contains("beta") && ctx.contains("energies"), "invalid-state-file",
            "classical context needs either \"gamma\" or \"beta\" plus \"energies\"");
    const Json& beta = ctx.at("beta");
    require(!(beta.is_string() && beta.get<std::string>() == "inf"), "unsupported-context",
            "zero-temperature classical contexts have a degenerate thermal state");
    return GibbsContext::from_beta_energies(
        parse_rational_field(beta, "context.beta"),
        parse_rational_list(ctx.at("energies"), "context.energies"));
}

inline QubitGibbs parse_qubit_context(const Json& ctx) {
    require(ctx.contains("zeta") && ctx.at("zeta").is_number(), "invalid-state-file",
            "qubit context needs a numeric \"zeta\"");
    return QubitGibbs::from_zeta(ctx.at("zeta").get<double>());
}

}  // namespace detail

inline StateFile parse_state_file(const Json& doc) {
    require(doc.is_object() && doc.contains("kind") && doc.at("kind").is_string(),
            "invalid-state-file", "state documents are objects with a \"kind\" field");
    std::string kind = doc.at("kind").get<std::string>();
    StateFile out;
    if (kind == "classical") {
        require(doc.contains("entries"), "invalid-state-file",
                "classical states carry an \"entries\" array");
        out.classical =
            ProbVector::validated(detail::parse_rational_list(doc.at("entries"), "entries"));
        if (doc.contains("context"))
            out.classical_context = detail::parse_classical_context(doc.at("context"));
    } else if (kind == "qubit") {
        require(doc.contains("bloch") && doc.at("bloch").is_array() && doc.at("bloch").size() == 3,
                "invalid-state-file", "qubit states carry a three-entry \"bloch\" array");
        const Json& b = doc.at("bloch");
        for (const Json& c : b)
            require(c.is_number(), "invalid-state-file", "bloch coordinates must be numbers");
        out.qubit = QubitState::from_bloch(b[0].get<double>(), b[1].get<double>(),
                                           b[2].get<double>());
        if (doc.contains("context")) out.qubit_context = detail::parse_qubit_context(doc.at("context"));
    } else {
        throw DomainError("invalid-state-file", "unknown kind: '" + kind + "'");
    }
    return out;
}

inline StateFile load_state_file(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "file-error", "cannot open '" + path + "'");
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError("invalid-state-file", "'" + path + "': " + e.what());
    }
    return parse_state_file(doc);
}

inline Json state_file_json(const ProbVector& p, const GibbsContext* ctx = nullptr) {
    Json doc;
    doc["kind"] = "classical";
    doc["entries"] = rational_array(p);
    if (ctx) doc["context"] = Json{{"gamma", rational_array(ctx->gamma())}};
    return doc;
}

inline Json state_file_json(const QubitState& s, const QubitGibbs* g = nullptr) {
    Json doc;
    doc["kind"] = "qubit";
    doc["bloch"] = bloch_array(s);
    if (g) doc["context"] = Json{{"zeta", g->zeta()}};
    return doc;
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    require(out.good(), "file-error", "cannot write '" + path + "'");
    out << text;
}

}  // namespace tlat
