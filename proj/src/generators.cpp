#include "elps/generators.hpp"

#include <random>
#include <sstream>
#include <vector>

namespace elps {

std::string generate_scholarship(std::size_t n, std::uint64_t /*seed*/) {
    std::ostringstream out;
    for (std::size_t i = 1; i <= n; ++i) {
        std::string suffix;
        if (n > 1) {
            if (i == 1)
                suffix = "_mike";
            else if (i == 2)
                suffix = "_mark";
            else
                suffix = "_s" + std::to_string(i);
        }
        out << "eligible" << suffix << " :- highGPA" << suffix << ".\n";
        out << "ineligible" << suffix << " :- lowGPA" << suffix << ".\n";
        out << ":- eligible" << suffix << ", ineligible" << suffix << ".\n";
        out << "interview" << suffix << " :- not eligible" << suffix << ", not ineligible"
            << suffix << ".\n";
        out << "lowGPA" << suffix << " | highGPA" << suffix << ".\n";
    }
    return out.str();
}

namespace {

// mt19937_64 output mapped by hand: the standard distributions are not
// bit-stable across library implementations.
class Sampler {
  public:
    explicit Sampler(std::uint64_t seed) : gen_(seed) {}

    std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(gen_() % n); }

    bool chance(double p) {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53 < p;
    }

  private:
    std::mt19937_64 gen_;
};

}  // namespace

std::string generate_random(const RandomProgramParams& params) {
    Sampler rng(params.seed);
    std::ostringstream out;
    for (std::size_t r = 0; r < params.n_rules; ++r) {
        std::size_t head_size = rng.below(params.max_head + 1);
        std::vector<char> used(params.n_atoms, 0);
        std::ostringstream rule;
        bool first = true;
        for (std::size_t h = 0; h < head_size && params.n_atoms > 0; ++h) {
            std::size_t atom = rng.below(params.n_atoms);
            if (used[atom])
                continue;  // no duplicate atoms within a head
            used[atom] = 1;
            rule << (first ? "" : " | ") << "a" << atom;
            first = false;
        }
        std::size_t body_size = rng.below(params.max_body + 1);
        for (std::size_t b = 0; b < body_size && params.n_atoms > 0; ++b) {
            rule << (b == 0 ? " :- " : ", ");
            bool epistemic = rng.chance(params.p_epistemic);
            bool outer = rng.chance(params.p_neg);
            bool inner = epistemic && rng.chance(params.p_neg);
            if (outer)
                rule << "~";
            if (epistemic)
                rule << "not ";
            if (inner)
                rule << "~";
            rule << "a" << rng.below(params.n_atoms);
        }
        out << rule.str() << ".\n";
    }
    return out.str();
}

}  // namespace elps
