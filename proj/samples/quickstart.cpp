// Resolves a germ given on the command line (default: two infinitely near triple points)
// and prints the main invariants.

#include <iostream>

#include "resdouble/resdouble.hpp"

int main(int argc, char** argv) {
    using namespace resdouble;
    const std::string f = argc > 1 ? argv[1] : "y*(y-x^2)*(y+x^2)";
    try {
        const auto trace = canonical_resolution_trace(parse_poly(f));
        const auto r = run_pipeline(trace.weighted, json{{"poly", f}});

        std::cout << "branch curve " << f << ": " << r.data.n() << " blowups\n";
        for (int i = 0; i < r.data.n(); ++i)
            std::cout << "  q" << i + 1 << "  mu=" << r.data.mu[i] << "  F^2=" << r.curves[i].F_sq
                      << "  p_a=" << r.curves[i].pa << (r.data.eps[i] ? "  branched" : "") << "\n";
        std::cout << "fundamental cycle self-intersection " << r.Z.self_intersection << ", p_a " << r.Z.pa << "\n";
        std::cout << "(-1)-curves contracted: " << r.minimal.contracted.size() << "\n";
        if (r.classification.rdp.kind == RdpResult::Kind::Label)
            std::cout << "rational double point " << r.classification.rdp.label << "\n";
        std::cout << "adjoint conditions c = " << r.adjoint.c << "\n";
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
}
