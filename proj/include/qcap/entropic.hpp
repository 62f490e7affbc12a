#pragma once

#include "qcap/channel.hpp"
#include "qcap/qmatrix.hpp"

namespace qcap {

/// The three terms of the constrained-rate objective for one ensemble, plus
/// the rate they combine to and the entanglement cost of running it.
/// rate = term_avg_input_entropy + term_avg_output_entropy - term_joint_entropy,
/// entanglement_cost = term_avg_input_entropy = sum_i p_i H(rho_i).
struct TradeoffEvaluation {
  double rate = 0.0;                    // bits per channel use
  double entanglement_cost = 0.0;       // ebits per channel use
  double term_avg_input_entropy = 0.0;  // sum_i p_i H(rho_i)
  double term_avg_output_entropy = 0.0; // H(N(sum_i p_i rho_i))
  double term_joint_entropy = 0.0;      // sum_i p_i H((N (x) I)(phi_i))
};

/// Holevo quantity H(sum p_i sigma_i) - sum p_i H(sigma_i), in bits.
double holevo_chi(const Ensemble& ens);

/// Holevo quantity of the pushed-forward ensemble {N(sigma_i), p_i}.
double channel_chi(const KrausChannel& ch, const Ensemble& ens);

/// H(rho) + H(N(rho)) - H((N (x) I)(phi_rho)) with the canonical purification.
double quantum_mutual_information(const KrausChannel& ch, const DensityMatrix& rho);

/// All terms of the constrained-rate objective at the given ensemble.
TradeoffEvaluation tradeoff_objective(const KrausChannel& ch, const Ensemble& ens);

/// Average input entropy sum_i p_i H(rho_i), in ebits.
double ensemble_cost(const Ensemble& ens);

}  // namespace qcap
