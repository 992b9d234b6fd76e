#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tlat/candidates.hpp"
#include "tlat/counterexamples.hpp"
#include "tlat/erasure.hpp"
#include "tlat/gp_feasibility.hpp"
#include "tlat/io.hpp"
#include "tlat/majorization.hpp"
#include "tlat/monotones.hpp"
#include "tlat/qubit.hpp"
#include "tlat/sampling.hpp"
#include "tlat/svg.hpp"
#include "tlat/thermo.hpp"

namespace tlat::cli {

namespace detail {

inline std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        out.push_back(text.substr(start, comma == std::string::npos ? comma : comma - start));
        if (comma == std::string::npos) return out;
        start = comma + 1;
    }
}

inline std::vector<Rational> parse_rational_csv(const std::string& text, const char* what) {
    require(!text.empty(), "invalid-argument", std::string(what) + " must be non-empty");
    std::vector<Rational> out;
    for (const std::string& tok : split_csv(text)) out.push_back(parse_rational(tok));
    return out;
}

inline double parse_double_token(const std::string& tok, const char* what) {
    if (tok == "inf") return std::numeric_limits<double>::infinity();
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(tok, &used);
    } catch (const std::exception&) {
        throw DomainError("invalid-argument", std::string(what) + ": cannot parse '" + tok + "'");
    }
    require(used == tok.size(), "invalid-argument",
            std::string(what) + ": cannot parse '" + tok + "'");
    return value;
}

/// Context flags of one subcommand.  Each subcommand owns its own instance;
/// explicit flags beat context blocks in the input files, and when both
/// files carry a block the two must agree.
struct ContextFlags {
    std::string gamma, gamma0, beta, energies;
    double zeta = 0.0;
    CLI::Option* gamma_opt = nullptr;
    CLI::Option* gamma0_opt = nullptr;
    CLI::Option* beta_opt = nullptr;
    CLI::Option* energies_opt = nullptr;
    CLI::Option* zeta_opt = nullptr;

    static bool given(const CLI::Option* o) { return o != nullptr && o->count() > 0; }
};

inline void add_classical_flags(CLI::App* sub, ContextFlags& f) {
    f.gamma_opt = sub->add_option("--gamma", f.gamma, "thermal weights, comma-separated rationals");
    f.gamma0_opt = sub->add_option("--gamma0", f.gamma0, "two-level shorthand: gamma = (g0, 1-g0)");
    f.beta_opt = sub->add_option("--beta", f.beta, "inverse temperature, rational");
    f.energies_opt =
        sub->add_option("--energies", f.energies, "energy levels, comma-separated rationals");
}

inline void add_qubit_flags(CLI::App* sub, ContextFlags& f) {
    f.zeta_opt = sub->add_option("--zeta", f.zeta, "reference polarization in [0, 1]");
    f.beta_opt = sub->add_option("--beta", f.beta, "inverse temperature, decimal or inf");
    f.energies_opt = sub->add_option("--energies", f.energies, "two energy levels, decimals");
}

inline GibbsContext classical_context(const ContextFlags& f,
                                      const std::vector<const StateFile*>& files, std::size_t d) {
    if (ContextFlags::given(f.gamma0_opt)) {
        require(d == 2, "invalid-context", "--gamma0 is a two-level shorthand");
        Rational g0 = parse_rational(f.gamma0);
        return GibbsContext::from_gamma(ProbVector::validated({g0, 1 - g0}));
    }
    if (ContextFlags::given(f.gamma_opt))
        return GibbsContext::from_gamma(
            ProbVector::validated(parse_rational_csv(f.gamma, "--gamma")));
    if (ContextFlags::given(f.beta_opt) || ContextFlags::given(f.energies_opt)) {
        require(ContextFlags::given(f.beta_opt) && ContextFlags::given(f.energies_opt),
                "invalid-context", "--beta and --energies go together");
        return GibbsContext::from_beta_energies(parse_rational(f.beta),
                                                parse_rational_csv(f.energies, "--energies"));
    }
    const GibbsContext* found = nullptr;
    for (const StateFile* sf : files) {
        if (sf == nullptr || !sf->classical_context) continue;
        if (found != nullptr)
            require(found->gamma().entries() == sf->classical_context->gamma().entries(),
                    "context-mismatch", "the input files carry different thermal contexts");
        else
            found = &*sf->classical_context;
    }
    return found != nullptr ? *found : GibbsContext::infinite_temperature(d);
}

inline QubitGibbs qubit_context(const ContextFlags& f,
                                const std::vector<const StateFile*>& files) {
    if (ContextFlags::given(f.zeta_opt)) return QubitGibbs::from_zeta(f.zeta);
    if (ContextFlags::given(f.beta_opt) || ContextFlags::given(f.energies_opt)) {
        require(ContextFlags::given(f.beta_opt) && ContextFlags::given(f.energies_opt),
                "invalid-context", "--beta and --energies go together");
        std::vector<std::string> toks = split_csv(f.energies);
        require(toks.size() == 2, "invalid-context", "qubit contexts take exactly two energies");
        double e0 = parse_double_token(toks[0], "--energies");
        double e1 = parse_double_token(toks[1], "--energies");
        return QubitGibbs::from_beta_energy(parse_double_token(f.beta, "--beta"), e1 - e0);
    }
    const QubitGibbs* found = nullptr;
    for (const StateFile* sf : files) {
        if (sf == nullptr || !sf->qubit_context) continue;
        if (found != nullptr)
            require(found->zeta() == sf->qubit_context->zeta(), "context-mismatch",
                    "the input files carry different reference polarizations");
        else
            found = &*sf->qubit_context;
    }
    require(found != nullptr, "missing-context",
            "qubit commands need --zeta, --beta with --energies, or a context block");
    return *found;
}

inline const ProbVector& classical_state(const StateFile& sf, const std::string& path) {
    require(sf.classical.has_value(), "kind-mismatch",
            "'" + path + "' does not hold a classical state");
    return *sf.classical;
}

inline const QubitState& qubit_state(const StateFile& sf, const std::string& path) {
    require(sf.qubit.has_value(), "kind-mismatch", "'" + path + "' does not hold a qubit state");
    return *sf.qubit;
}

inline void emit(std::ostream& out, const Json& doc) { out << doc.dump() << '\n'; }

inline const char* verdict_word(LatticeVerdict v) {
    return v == LatticeVerdict::unique ? "unique" : "none";
}

inline Json states_json(const std::vector<ProbVector>& states) {
    Json arr = Json::array();
    for (const ProbVector& s : states) arr.push_back(rational_array(s));
    return arr;
}

inline Json orderings_json(const std::vector<std::vector<std::size_t>>& orderings) {
    Json arr = Json::array();
    for (const std::vector<std::size_t>& o : orderings) arr.push_back(index_array(o));
    return arr;
}

inline Json costs_json(const std::vector<MonotoneCost>& costs) {
    Json arr = Json::array();
    for (const MonotoneCost& c : costs) {
        Json row;
        row["monotone"] = c.monotone.name();
        row["at_p"] = c.at_p;
        row["at_q"] = c.at_q;
        row["at_optima"] = Json(c.at_optima);
        arr.push_back(std::move(row));
    }
    return arr;
}

// ---- sweep suites ------------------------------------------------------

inline Json sweep_oracle_agreement(std::uint64_t n, std::size_t d, std::uint64_t seed) {
    require(d >= 2 && d <= 8, "parameter-range", "oracle agreement runs at 2 <= d <= 8");
    Sampler sampler(seed);
    std::uint64_t agree = 0, disagree = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
        GibbsContext ctx = GibbsContext::from_gamma(sampler.thermal_spectrum(d));
        ProbVector p = sampler.distribution(d);
        ProbVector q = sampler.distribution(d);
        bool curves = thermo_majorizes(p, q, ctx);
        bool lp = gp_transition(p, q, ctx).feasible;
        (curves == lp ? agree : disagree) += 1;
    }
    Json doc;
    doc["suite"] = "oracle-agreement";
    doc["seed"] = seed;
    doc["n"] = n;
    doc["d"] = d;
    doc["agree"] = agree;
    doc["disagree"] = disagree;
    return doc;
}

inline Json sweep_lattice_axioms(std::uint64_t n, std::size_t d, std::uint64_t seed) {
    require(d >= 2, "parameter-range", "lattice axioms need d >= 2");
    Sampler sampler(seed);
    auto eq = [](const ProbVector& a, const ProbVector& b) { return a.entries() == b.entries(); };
    std::uint64_t violations = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
        ProbVector p = sampler.distribution(d);
        ProbVector q = sampler.distribution(d);
        ProbVector r = sampler.distribution(d);
        ProbVector cp = canonicalize(p).representative;
        bool ok = eq(meet(p, q), meet(q, p)) && eq(join(p, q), join(q, p)) &&
                  eq(meet(p, meet(q, r)), meet(meet(p, q), r)) &&
                  eq(join(p, join(q, r)), join(join(p, q), r)) &&
                  eq(meet(p, join(p, q)), cp) && eq(join(p, meet(p, q)), cp) &&
                  eq(meet(p, p), cp) && eq(join(p, p), cp) && majorizes(join(p, q), p) &&
                  majorizes(p, meet(p, q));
        if (!ok) violations += 1;
    }
    Json doc;
    doc["suite"] = "lattice-axioms";
    doc["seed"] = seed;
    doc["n"] = n;
    doc["d"] = d;
    doc["checked"] = n;
    doc["violations"] = violations;
    return doc;
}

/// At infinite temperature the Shannon checks are theorems and the counter
/// should stay at zero.  With --gamma the sweep probes the free-energy
/// analogue on shared-ordering pairs and reports whatever it finds; the
/// inequality is not asserted anywhere.
inline Json sweep_supermodularity(std::uint64_t n, std::size_t d, std::uint64_t seed,
                                  const std::optional<GibbsContext>& ctx) {
    Sampler sampler(seed);
    std::uint64_t checked = 0, violations = 0;
    const double tol = 1e-12;
    if (!ctx.has_value()) {
        for (std::uint64_t i = 0; i < n; ++i) {
            ProbVector p = sampler.distribution(d);
            ProbVector q = sampler.distribution(d);
            double hp = shannon_entropy(p), hq = shannon_entropy(q);
            double hm = shannon_entropy(meet(p, q)), hj = shannon_entropy(join(p, q));
            checked += 1;
            // supermodularity and subadditivity of the gain, as one predicate
            if (hm + hj < hp + hq - tol || hm > hp + hq + tol) violations += 1;
        }
    } else {
        std::vector<std::size_t> sigma(ctx->dimension());
        for (std::size_t k = 0; k < sigma.size(); ++k) sigma[k] = k;
        auto on_order = [&]() {
            ProbVector raw = sampler.distribution(ctx->dimension());
            std::vector<Rational> ratios(raw.size());
            for (std::size_t i = 0; i < raw.size(); ++i)
                ratios[i] = Rational(raw[i] / ctx->gamma()[i]);
            std::sort(ratios.begin(), ratios.end(), std::greater<>());
            std::vector<Rational> w(raw.size());
            for (std::size_t k = 0; k < raw.size(); ++k)
                w[sigma[k]] = Rational(ratios[k] * ctx->gamma()[sigma[k]]);
            return ProbVector::normalized(std::move(w));
        };
        for (std::uint64_t i = 0; i < n; ++i) {
            std::shuffle(sigma.begin(), sigma.end(), sampler.engine());
            ProbVector p = on_order();
            ProbVector q = on_order();
            ProbVector m = same_beta_meet(p, q, *ctx);
            ProbVector j = same_beta_join(p, q, *ctx);
            double dp = relative_entropy(p, *ctx), dq = relative_entropy(q, *ctx);
            double dm = relative_entropy(m, *ctx), dj = relative_entropy(j, *ctx);
            checked += 1;
            // divergences shrink downward, so the analogue reads dm + dj <= dp + dq
            if (dm + dj > dp + dq + tol) violations += 1;
        }
    }
    Json doc;
    doc["suite"] = "supermodularity";
    doc["seed"] = seed;
    doc["n"] = n;
    doc["d"] = ctx.has_value() ? ctx->dimension() : d;
    doc["mode"] = ctx.has_value() ? "free-energy" : "shannon";
    doc["checked"] = checked;
    doc["violations"] = violations;
    return doc;
}

inline void emit_flat(std::ostream& out, const Json& doc, const std::string& format) {
    if (format == "csv") {
        std::string header, row;
        for (const auto& [key, value] : doc.items()) {
            if (!header.empty()) {
                header += ',';
                row += ',';
            }
            header += key;
            row += value.is_string() ? value.get<std::string>() : value.dump();
        }
        out << header << '\n' << row << '\n';
        return;
    }
    emit(out, doc);
}

}  // namespace detail

/// Runs one subcommand against `out`/`err` and returns the process exit
/// status: 0 on success, 1 for domain failures (reported as an error JSON
/// object on `out`), 2 for command-line misuse.
inline int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"thermodynamic ordering of classical distributions and qubit states"};
    app.name("tlat");
    app.require_subcommand(1);

    // exactly one subcommand parses per invocation, so the path and scalar
    // storage is shared; option handles are per subcommand
    std::string path_a, path_b, svg_path;
    std::deque<detail::ContextFlags> flag_sets;
    std::string side = "join";
    std::string ce_kind = "two-level", ce_gamma0 = "3/4", ce_gamma;
    std::string curve_format = "csv", sweep_format = "json", suite;
    std::size_t grid = 1001;
    std::uint64_t sweep_n = 1000;
    std::size_t sweep_d = 4;
    std::uint64_t seed = 42;
    if (const char* env = std::getenv("TLAT_SEED")) seed = std::strtoull(env, nullptr, 10);

    auto classical_pair = [&](CLI::App* sub) {
        sub->add_option("p", path_a, "classical state file")->required();
        sub->add_option("q", path_b, "classical state file")->required();
        detail::ContextFlags* f = &flag_sets.emplace_back();
        detail::add_classical_flags(sub, *f);
        return f;
    };
    auto qubit_pair = [&](CLI::App* sub) {
        sub->add_option("a", path_a, "qubit state file")->required();
        sub->add_option("b", path_b, "qubit state file")->required();
        detail::ContextFlags* f = &flag_sets.emplace_back();
        detail::add_qubit_flags(sub, *f);
        return f;
    };

    CLI::App* majorize_cmd =
        app.add_subcommand("majorize", "does the first state majorize the second");
    majorize_cmd->add_option("p", path_a, "classical state file")->required();
    majorize_cmd->add_option("q", path_b, "classical state file")->required();
    majorize_cmd->callback([&] {
        StateFile fa = load_state_file(path_a), fb = load_state_file(path_b);
        Json doc;
        doc["majorizes"] = majorizes(detail::classical_state(fa, path_a),
                                     detail::classical_state(fb, path_b));
        detail::emit(out, doc);
    });

    CLI::App* meet_cmd = app.add_subcommand("meet", "greatest lower bound under majorization");
    meet_cmd->add_option("p", path_a, "classical state file")->required();
    meet_cmd->add_option("q", path_b, "classical state file")->required();
    meet_cmd->callback([&] {
        StateFile fa = load_state_file(path_a), fb = load_state_file(path_b);
        Json doc;
        doc["meet"] = rational_array(
            meet(detail::classical_state(fa, path_a), detail::classical_state(fb, path_b)));
        detail::emit(out, doc);
    });

    CLI::App* join_cmd = app.add_subcommand("join", "least upper bound under majorization");
    join_cmd->add_option("p", path_a, "classical state file")->required();
    join_cmd->add_option("q", path_b, "classical state file")->required();
    join_cmd->callback([&] {
        StateFile fa = load_state_file(path_a), fb = load_state_file(path_b);
        JoinResult jr = join_with_stats(detail::classical_state(fa, path_a),
                                        detail::classical_state(fb, path_b));
        Json doc;
        doc["join"] = rational_array(jr.value);
        doc["iterations"] = jr.iterations;
        detail::emit(out, doc);
    });

    CLI::App* thermo_cmd =
        app.add_subcommand("thermo-check", "thermal ordering in both directions");
    detail::ContextFlags* thermo_flags = classical_pair(thermo_cmd);
    thermo_cmd->callback([&, thermo_flags] {
        StateFile fa = load_state_file(path_a), fb = load_state_file(path_b);
        const ProbVector& p = detail::classical_state(fa, path_a);
        const ProbVector& q = detail::classical_state(fb, path_b);
        GibbsContext ctx = detail::classical_context(*thermo_flags, {&fa, &fb}, p.size());
        Json doc;
        doc["forward"] = thermo_majorizes(p, q, ctx);
        doc["backward"] = thermo_majorizes(q, p, ctx);
        detail::emit(out, doc);
    });

    CLI::App* order_cmd =
        app.add_subcommand("beta-order", "sorting permutation of the rescaled occupations");
    order_cmd->add_option("p", path_a, "classical state file")->required();
    detail::ContextFlags* order_flags = &flag_sets.emplace_back();
    detail::add_classical_flags(order_cmd, *order_flags);
    order_cmd->callback([&, order_flags] {
        StateFile fa = load_state_file(path_a);
        const ProbVector& p = detail::classical_state(fa, path_a);
        GibbsContext ctx = detail::classical_context(*order_flags, {&fa}, p.size());
        Json doc;
        doc["order"] = index_array(beta_order(p, ctx).order);
        doc["rescaled"] = rational_array(gibbs_rescale(p, ctx));
        detail::emit(out, doc);
    });

    CLI::App* curve_cmd = app.add_subcommand("curve", "thermal ordering curve breakpoints");
    curve_cmd->add_option("p", path_a, "classical state file")->required();
    detail::ContextFlags* curve_flags = &flag_sets.emplace_back();
    detail::add_classical_flags(curve_cmd, *curve_flags);
    curve_cmd->add_option("--format", curve_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    curve_cmd->add_option("--svg", svg_path, "write an SVG rendering to this path");
    curve_cmd->callback([&, curve_flags] {
        StateFile fa = load_state_file(path_a);
        const ProbVector& p = detail::classical_state(fa, path_a);
        GibbsContext ctx = detail::classical_context(*curve_flags, {&fa}, p.size());
        PLCurve curve = thermo_curve(p, ctx);
        if (!svg_path.empty()) write_text_file(svg_path, curve_svg({curve}));
        if (curve_format == "json") {
            Json doc;
            doc["curve"] = curve_json(curve);
            detail::emit(out, doc);
        } else {
            out << "x,y\n";
            for (const CurvePoint& pt : curve.points())
                out << to_string(pt.x) << ',' << to_string(pt.y) << '\n';
        }
    });

    CLI::App* cand_cmd =
        app.add_subcommand("candidates", "minimal upper or maximal lower bounds");
    detail::ContextFlags* cand_flags = classical_pair(cand_cmd);
    cand_cmd->add_option("--side", side, "join or meet")
        ->required()
        ->check(CLI::IsMember({"join", "meet"}));
    cand_cmd->callback([&, cand_flags] {
        StateFile fa = load_state_file(path_a), fb = load_state_file(path_b);
        const ProbVector& p = detail::classical_state(fa, path_a);
        const ProbVector& q = detail::classical_state(fb, path_b);
        GibbsContext ctx = detail::classical_context(*cand_flags, {&fa, &fb}, p.size());
        LatticeAnalysis an =
            side == "join" ? join_candidates(p, q, ctx) : meet_candidates(p, q, ctx);
        Json doc;
        doc["side"] = side;
        doc["verdict"] = detail::verdict_word(an.verdict);
        doc["candidates"] = detail::states_json(an.candidates);
        doc["orderings"] = detail::orderings_json(an.orderings);
        detail::emit(out, doc);
    });

    CLI::App* ce_cmd =
        app.add_subcommand("counterexample", "pairs witnessing the broken thermal lattice");
    ce_cmd->add_option("--kind", ce_kind, "two-level, no-meet, or d-level")
        ->check(CLI::IsMember({"two-level", "no-meet", "d-level"}));
    ce_cmd->add_option("--gamma0", ce_gamma0, "two-level thermal ground weight");
    ce_cmd->add_option("--gamma", ce_gamma, "thermal weights for the d-level family");
    ce_cmd->callback([&] {
        StatePair pair = [&] {
            if (ce_kind == "two-level") return two_level_no_join(parse_rational(ce_gamma0));
            if (ce_kind == "no-meet") return two_level_no_meet(parse_rational(ce_gamma0));
            require(!ce_gamma.empty(), "invalid-context",
                    "d-level counterexamples need --gamma");
            return top_levels_no_join(GibbsContext::from_gamma(
                ProbVector::validated(detail::parse_rational_csv(ce_gamma, "--gamma"))));
        }();
        Json doc;
        doc["kind"] = ce_kind;
        doc["gamma"] = rational_array(pair.context.gamma());
        doc["p"] = rational_array(pair.p);
        doc["q"] = rational_array(pair.q);
        detail::emit(out, doc);
    });

    CLI::App* lp_cmd =
        app.add_subcommand("lp-check", "transition feasibility by exact linear programming");
    detail::ContextFlags* lp_flags = classical_pair(lp_cmd);
    lp_cmd->callback([&, lp_flags] {
        StateFile fa = load_state_file(path_a), fb = load_state_file(path_b);
        const ProbVector& p = detail::classical_state(fa, path_a);
        const ProbVector& q = detail::classical_state(fb, path_b);
        GibbsContext ctx = detail::classical_context(*lp_flags, {&fa, &fb}, p.size());
        TransitionWitness w = gp_transition(p, q, ctx);
        Json doc;
        doc["feasible"] = w.feasible;
        doc["matrix"] = w.feasible ? matrix_json(w.matrix) : Json();
        detail::emit(out, doc);
    });

    CLI::App* qexists_cmd =
        app.add_subcommand("qubit-exists", "qubit transition existence in both directions");
    detail::ContextFlags* qexists_flags = qubit_pair(qexists_cmd);
    qexists_cmd->callback([&, qexists_flags] {
        StateFile fa = load_state_file(path_a), fb = load_state_file(path_b);
        const QubitState& a = detail::qubit_state(fa, path_a);
        const QubitState& b = detail::qubit_state(fb, path_b);
        QubitGibbs g = detail::qubit_context(*qexists_flags, {&fa, &fb});
        Json doc;
        doc["forward"] = gp_exists(a, b, g);
        doc["backward"] = gp_exists(b, a, g);
        detail::emit(out, doc);
    });

    CLI::App* qcone_cmd = app.add_subcommand("qubit-cone", "reachable set of a qubit state");
    qcone_cmd->add_option("a", path_a, "qubit state file")->required();
    detail::ContextFlags* qcone_flags = &flag_sets.emplace_back();
    detail::add_qubit_flags(qcone_cmd, *qcone_flags);
    qcone_cmd->add_option("--svg", svg_path, "write an SVG rendering to this path");
    qcone_cmd->callback([&, qcone_flags] {
        StateFile fa = load_state_file(path_a);
        const QubitState& a = detail::qubit_state(fa, path_a);
        QubitGibbs g = detail::qubit_context(*qcone_flags, {&fa});
        QubitCone cone = future_cone(a, g);
        if (!svg_path.empty()) write_text_file(svg_path, cone_svg(a, g));
        Json doc;
        doc["ground"] = cone.ground;
        if (cone.ground) {
            doc["disk"] = Json{{"radius", cone.radius_a}, {"center", cone.center_a}};
            doc["min_z"] = cone.min_z;
        } else {
            doc["disks"] =
                Json::array({Json{{"radius", cone.radius_a}, {"center", cone.center_a}},
                             Json{{"radius", cone.radius_b}, {"center", cone.center_b}}});
        }
        detail::emit(out, doc);
    });

    CLI::App* qjoin_cmd =
        app.add_subcommand("qubit-join", "least upper bound on the symmetry axis");
    detail::ContextFlags* qjoin_flags = qubit_pair(qjoin_cmd);
    qjoin_cmd->callback([&, qjoin_flags] {
        StateFile fa = load_state_file(path_a), fb = load_state_file(path_b);
        QubitGibbs g = detail::qubit_context(*qjoin_flags, {&fa, &fb});
        Json doc;
        doc["join"] = bloch_array(
            qubit_join(detail::qubit_state(fa, path_a), detail::qubit_state(fb, path_b), g));
        detail::emit(out, doc);
    });

    CLI::App* qmeet_cmd =
        app.add_subcommand("qubit-meet", "greatest lower bound on the symmetry axis");
    detail::ContextFlags* qmeet_flags = qubit_pair(qmeet_cmd);
    qmeet_cmd->callback([&, qmeet_flags] {
        StateFile fa = load_state_file(path_a), fb = load_state_file(path_b);
        QubitGibbs g = detail::qubit_context(*qmeet_flags, {&fa, &fb});
        Json doc;
        doc["meet"] = bloch_array(
            qubit_meet(detail::qubit_state(fa, path_a), detail::qubit_state(fb, path_b), g));
        detail::emit(out, doc);
    });

    CLI::App* au_cmd =
        app.add_subcommand("au-check", "grid cross-check of the interpolation criterion");
    detail::ContextFlags* au_flags = qubit_pair(au_cmd);
    au_cmd->add_option("--grid", grid, "number of interpolation samples")
        ->check(CLI::Range(std::size_t{2}, std::size_t{100000000}));
    au_cmd->callback([&, au_flags] {
        StateFile fa = load_state_file(path_a), fb = load_state_file(path_b);
        const QubitState& a = detail::qubit_state(fa, path_a);
        const QubitState& b = detail::qubit_state(fb, path_b);
        QubitGibbs g = detail::qubit_context(*au_flags, {&fa, &fb});
        Json doc;
        doc["grid"] = grid;
        doc["forward"] = au_oracle(a, b, g, grid);
        doc["backward"] = au_oracle(b, a, g, grid);
        detail::emit(out, doc);
    });

    auto erasure_callback = [&](const detail::ContextFlags& f, bool erase_side) {
        StateFile fa = load_state_file(path_a), fb = load_state_file(path_b);
        Json doc;
        if (fa.classical.has_value() && fb.classical.has_value()) {
            const ProbVector& p = *fa.classical;
            const ProbVector& q = *fb.classical;
            GibbsContext ctx = detail::classical_context(f, {&fa, &fb}, p.size());
            ClassicalErasureReport rep =
                erase_side ? erase_history(p, q, ctx) : create_futures(p, q, ctx);
            doc["verdict"] = rep.verdict == LatticeVerdict::unique ? "unique-optimum"
                                                                   : "multiple-candidates";
            doc["optima"] = detail::states_json(rep.optima);
            doc["orderings"] = detail::orderings_json(rep.orderings);
            doc["costs"] = detail::costs_json(rep.costs);
        } else if (fa.qubit.has_value() && fb.qubit.has_value()) {
            QubitGibbs g = detail::qubit_context(f, {&fa, &fb});
            QubitErasureReport rep = erase_side ? erase_history(*fa.qubit, *fb.qubit, g)
                                                : create_futures(*fa.qubit, *fb.qubit, g);
            doc["optimal"] = bloch_array(rep.optimal);
            doc["costs"] = detail::costs_json(rep.costs);
        } else {
            throw DomainError("kind-mismatch", "the two input files hold different state kinds");
        }
        detail::emit(out, doc);
    };

    CLI::App* erase_cmd =
        app.add_subcommand("erase", "cheapest state every common past can reach");
    erase_cmd->add_option("p", path_a, "state file")->required();
    erase_cmd->add_option("q", path_b, "state file")->required();
    detail::ContextFlags* erase_flags = &flag_sets.emplace_back();
    detail::add_classical_flags(erase_cmd, *erase_flags);
    erase_flags->zeta_opt =
        erase_cmd->add_option("--zeta", erase_flags->zeta, "reference polarization in [0, 1]");
    erase_cmd->callback([&, erase_flags] { erasure_callback(*erase_flags, true); });

    CLI::App* create_cmd =
        app.add_subcommand("create", "cheapest state that reaches both inputs");
    create_cmd->add_option("p", path_a, "state file")->required();
    create_cmd->add_option("q", path_b, "state file")->required();
    detail::ContextFlags* create_flags = &flag_sets.emplace_back();
    detail::add_classical_flags(create_cmd, *create_flags);
    create_flags->zeta_opt =
        create_cmd->add_option("--zeta", create_flags->zeta, "reference polarization in [0, 1]");
    create_cmd->callback([&, create_flags] { erasure_callback(*create_flags, false); });

    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "randomized cross-validation and inequality sweeps");
    sweep_cmd->add_option("--suite", suite, "oracle-agreement, lattice-axioms, supermodularity")
        ->required()
        ->check(CLI::IsMember({"oracle-agreement", "lattice-axioms", "supermodularity"}));
    sweep_cmd->add_option("--n", sweep_n, "number of sampled trials");
    sweep_cmd->add_option("--d", sweep_d, "dimension of the sampled states");
    sweep_cmd->add_option("--seed", seed, "RNG seed; TLAT_SEED sets the default");
    sweep_cmd->add_option("--format", sweep_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    std::string sweep_gamma;
    CLI::Option* sweep_gamma_opt = sweep_cmd->add_option(
        "--gamma", sweep_gamma, "thermal weights; switches supermodularity to free energy");
    sweep_cmd->callback([&] {
        Json doc;
        if (suite == "oracle-agreement") {
            doc = detail::sweep_oracle_agreement(sweep_n, sweep_d, seed);
        } else if (suite == "lattice-axioms") {
            doc = detail::sweep_lattice_axioms(sweep_n, sweep_d, seed);
        } else {
            std::optional<GibbsContext> ctx;
            if (sweep_gamma_opt->count() > 0)
                ctx = GibbsContext::from_gamma(
                    ProbVector::validated(detail::parse_rational_csv(sweep_gamma, "--gamma")));
            doc = detail::sweep_supermodularity(sweep_n, sweep_d, seed, ctx);
        }
        detail::emit_flat(out, doc, sweep_format);
    });

    try {
        // CLI11 consumes the vector back to front
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const DomainError& e) {
        Json doc;
        doc["error"] = Json{{"code", e.code()}, {"message", e.what()}};
        detail::emit(out, doc);
        return 1;
    } catch (const std::exception& e) {
        Json doc;
        doc["error"] = Json{{"code", "internal-error"}, {"message", e.what()}};
        detail::emit(out, doc);
        return 1;
    }
    return 0;
}

}  // namespace tlat::cli
