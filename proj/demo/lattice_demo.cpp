// Walkthrough of the classical ordering lattice on a 4-level pair that is
// incomparable: neither distribution can be reached from the other, yet the
// lattice supplies a sharpest common past and a dullest common future.
#include <cstdio>

#include "tlat/majorization.hpp"

using namespace tlat;

int main() {
    ProbVector p = ProbVector::validated(
        {Rational(3, 5), Rational(3, 20), Rational(3, 20), Rational(1, 10)});
    ProbVector q = ProbVector::validated(
        {Rational(1, 2), Rational(1, 4), Rational(1, 5), Rational(1, 20)});

    std::printf("p            = %s\n", to_string(p).c_str());
    std::printf("q            = %s\n", to_string(q).c_str());
    std::printf("p majorizes q: %s\n", majorizes(p, q) ? "yes" : "no");
    std::printf("q majorizes p: %s\n", majorizes(q, p) ? "yes" : "no");

    JoinResult j = join_with_stats(p, q);
    std::printf("meet (common reachable state)   = %s\n", to_string(meet(p, q)).c_str());
    std::printf("join (least common predecessor) = %s (flattening passes: %zu)\n",
                to_string(j.value).c_str(), j.iterations);
    return 0;
}
