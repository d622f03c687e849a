#pragma once

#include <string>

#include "eprsim/bsm.hpp"

namespace eprsim::dense {

/// CSV rendering of Alice's preparation table: one row per Bell state with
/// the basic-gate word that prepares it from |psi_1>.
/// Header: index,k,sign,j,gates
std::string preparation_table_csv(int n, const HadamardMatrix& h);
std::string preparation_table_csv(int n);

/// CSV rendering of Bob's measurement table: the product ket each Bell state
/// collapses to under U_(N) (H x I) PCS and its renamed strip.
/// Header: index,k,sign,j,outcome_alice,outcome_bob,renamed
std::string measurement_table_csv(int n, const HadamardMatrix& h);
std::string measurement_table_csv(int n);

} // namespace eprsim::dense
