#pragma once

#include <string_view>

#include "acstark/params.hpp"

namespace acstark {

enum class Regime { Markovian, SuppressedExponential, Oscillatory, Crossover };

std::string_view to_string(Regime r);

// Box boundaries in (Q, R, RQ²). The defaults put the figure parameter sets in
// the boxes the analysis assigns them to.
struct RegimeThresholds {
    double markov_q_max = 0.1;       // Markovian: Q <= this
    double markov_r_min = 10.0;      //            and R >= this
    double suppressed_q_min = 10.0;  // SuppressedExponential: Q >= this
    double suppressed_rq2_min = 10.0;  //                      and RQ² >= this
    double oscillatory_q_min = 3.0;  // Oscillatory: Q >= this
    double oscillatory_rq2_min = 0.1;  //           and RQ² in [min, max]
    double oscillatory_rq2_max = 10.0;
};

struct RegimeLabel {
    Regime label = Regime::Crossover;
    double q = 0.0;
    double r = 0.0;
    double rq2 = 0.0;
    double rq3 = 0.0;
};

// Pure function of (Q, R). Boxes are tested in the order Markovian,
// SuppressedExponential, Oscillatory; anything else is Crossover.
RegimeLabel classify_regime(const DimensionlessParams& d, const RegimeThresholds& th = {});

}  // namespace acstark
