#include "acstark/regime.hpp"

namespace acstark {

std::string_view to_string(Regime r) {
    switch (r) {
        case Regime::Markovian: return "Markovian";
        case Regime::SuppressedExponential: return "SuppressedExponential";
        case Regime::Oscillatory: return "Oscillatory";
        case Regime::Crossover: return "Crossover";
    }
    return "Crossover";
}

RegimeLabel classify_regime(const DimensionlessParams& d, const RegimeThresholds& th) {
    validate(d);
    RegimeLabel out{Regime::Crossover, d.q, d.r, d.rq2(), d.rq3()};
    if (d.q <= th.markov_q_max && d.r >= th.markov_r_min) {
        out.label = Regime::Markovian;
    } else if (d.q >= th.suppressed_q_min && out.rq2 >= th.suppressed_rq2_min) {
        out.label = Regime::SuppressedExponential;
    } else if (d.q >= th.oscillatory_q_min && out.rq2 >= th.oscillatory_rq2_min &&
               out.rq2 <= th.oscillatory_rq2_max) {
        out.label = Regime::Oscillatory;
    }
    return out;
}

}  // namespace acstark
