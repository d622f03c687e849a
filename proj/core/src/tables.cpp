#include "eprsim/tables.hpp"

#include <sstream>

namespace eprsim::dense {

std::string preparation_table_csv(int n, const HadamardMatrix& h) {
    std::ostringstream out;
    out << "index,k,sign,j,gates\n";
    for (int flat = 1; flat <= 4 * n * n; ++flat) {
        const BellLabel label = BellLabel::from_flat(flat, n);
        const auto composed = compose_encoder(n, h, label);
        out << flat << ',' << label.k << ',' << (label.sign > 0 ? '+' : '-') << ','
            << label.j << ',' << composed.gate_word << '\n';
    }
    return out.str();
}

std::string preparation_table_csv(int n) {
    return preparation_table_csv(n, default_hadamard(2 * n));
}

std::string measurement_table_csv(int n, const HadamardMatrix& h) {
    const BsmContext ctx(n, h);
    std::ostringstream out;
    out << "index,k,sign,j,outcome_alice,outcome_bob,renamed\n";
    for (int flat = 1; flat <= 4 * n * n; ++flat) {
        const BellLabel label = BellLabel::from_flat(flat, n);
        const BsmOutcome outcome = ctx.expected_outcome(label);
        out << flat << ',' << label.k << ',' << (label.sign > 0 ? '+' : '-') << ','
            << label.j << ',' << outcome.alice.value << ',' << outcome.bob.value << ','
            << outcome.renamed << '\n';
    }
    return out.str();
}

std::string measurement_table_csv(int n) {
    return measurement_table_csv(n, default_hadamard(2 * n));
}

} // namespace eprsim::dense
