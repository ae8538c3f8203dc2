#include "diraccmp/problem.hpp"

namespace diraccmp {

ProblemSolution solve_problem(const DiracProblem& p, const SolverConfig& config) {
    ProblemSolution out;
    if (p.dimension == 1) {
        if (p.S)
            throw std::invalid_argument(
                "solve_problem: explicit scalar coupling requires dimension > 1");
        auto st = solve_ground_1d(p.V, p.mode, p.mass, p.parity, config);
        out.E = st.E;
        out.state1d = std::move(st);
        return out;
    }
    if (!p.channel)
        throw std::invalid_argument("solve_problem: dimension > 1 needs a channel");
    if (p.channel->d != p.dimension)
        throw std::invalid_argument("solve_problem: channel dimension mismatch");
    auto st = p.S ? solve_ground_radial(p.V, *p.S, p.mass, *p.channel, config)
                  : solve_ground_radial(p.V, p.mode, p.mass, *p.channel, config);
    out.E = st.E;
    out.state_radial = std::move(st);
    return out;
}

}  // namespace diraccmp
