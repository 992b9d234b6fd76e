#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "tlat/gp_feasibility.hpp"
#include "tlat/majorization.hpp"
#include "tlat/sampling.hpp"
#include "tlat/thermo.hpp"

using namespace tlat;

namespace {

// Exact verification that the witness is column stochastic, fixes gamma, and
// maps p to q.
void check_witness(const std::vector<std::vector<Rational>>& m, const ProbVector& p,
                   const ProbVector& q, const GibbsContext& ctx) {
    const std::size_t d = p.size();
    REQUIRE(m.size() == d);
    for (std::size_t j = 0; j < d; ++j) {
        Rational col = 0;
        for (std::size_t i = 0; i < d; ++i) {
            REQUIRE(m[i].size() == d);
            CHECK(m[i][j] >= 0);
            col += m[i][j];
        }
        CHECK(col == 1);
    }
    for (std::size_t i = 0; i < d; ++i) {
        Rational mp = 0, mg = 0;
        for (std::size_t j = 0; j < d; ++j) {
            mp += m[i][j] * p[j];
            mg += m[i][j] * ctx.gamma()[j];
        }
        CHECK(mp == q[i]);
        CHECK(mg == ctx.gamma()[i]);
    }
}

}  // namespace

TEST_CASE("matrix search matches classical majorization") {
    Sampler sampler(421);
    int found = 0;
    for (int trial = 0; trial < 250; ++trial) {
        std::size_t d = 2 + sampler.uniform_index(5);
        ProbVector p = sampler.distribution(d);
        ProbVector q = sampler.distribution(d);
        TransitionWitness w = bistochastic_transition(p, q);
        CHECK(w.feasible == majorizes(p, q));
        if (w.feasible) {
            ++found;
            check_witness(w.matrix, p, q, GibbsContext::infinite_temperature(d));
        }
    }
    // mixing toward uniform is common enough that witnesses must appear
    CHECK(found > 10);
}

TEST_CASE("matrix search matches the thermal curve test") {
    Sampler sampler(422);
    int found = 0;
    for (int trial = 0; trial < 250; ++trial) {
        std::size_t d = 2 + sampler.uniform_index(4);
        GibbsContext ctx = GibbsContext::from_gamma(sampler.thermal_spectrum(d));
        ProbVector p = sampler.distribution(d);
        ProbVector q = sampler.distribution(d);
        TransitionWitness w = gp_transition(p, q, ctx);
        CHECK(w.feasible == thermo_majorizes(p, q, ctx));
        if (w.feasible) {
            ++found;
            check_witness(w.matrix, p, q, ctx);
        }
    }
    CHECK(found > 10);
}

TEST_CASE("everything reaches the reference state") {
    Sampler sampler(423);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t d = 2 + sampler.uniform_index(5);
        GibbsContext ctx = GibbsContext::from_gamma(sampler.thermal_spectrum(d));
        ProbVector p = sampler.distribution_with_zeros(d);
        TransitionWitness w = gp_transition(p, ctx.gamma(), ctx);
        REQUIRE(w.feasible);
        check_witness(w.matrix, p, ctx.gamma(), ctx);
    }
}

TEST_CASE("incomparable two-level pair has no transition either way") {
    GibbsContext ctx = GibbsContext::from_gamma(PV({"3/4", "1/4"}));
    ProbVector p = PV({"7/8", "1/8"});
    ProbVector q = PV({"2/3", "1/3"});
    CHECK_FALSE(gp_transition(p, q, ctx).feasible);
    CHECK_FALSE(gp_transition(q, p, ctx).feasible);

    // both reach their confluence points
    CHECK(gp_transition(p, ctx.gamma(), ctx).feasible);
    CHECK(gp_transition(q, ctx.gamma(), ctx).feasible);
}

TEST_CASE("reference pair reaches meet and comes from join") {
    ProbVector p = PV({"0.6", "0.15", "0.15", "0.1"});
    ProbVector q = PV({"0.5", "0.25", "0.2", "0.05"});
    ProbVector low = meet(p, q);
    ProbVector high = join(p, q);
    for (const ProbVector& s : {p, q}) {
        TransitionWitness down = bistochastic_transition(s, low);
        REQUIRE(down.feasible);
        check_witness(down.matrix, s, low, GibbsContext::infinite_temperature(4));
        TransitionWitness up = bistochastic_transition(high, s);
        REQUIRE(up.feasible);
        check_witness(up.matrix, high, s, GibbsContext::infinite_temperature(4));
    }
}

TEST_CASE("dimension guard") {
    ProbVector big = ProbVector::uniform(9);
    CHECK_THROWS_AS(bistochastic_transition(big, big), DomainError);
}
