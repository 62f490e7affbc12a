#include "qcap/entropic.hpp"

#include <stdexcept>

namespace qcap {

double holevo_chi(const Ensemble& ens) {
  double avg_state_entropy = 0.0;
  for (std::size_t i = 0; i < ens.size(); ++i) {
    avg_state_entropy += ens.probs()[i] * von_neumann_entropy(ens.states()[i]);
  }
  return von_neumann_entropy(ens.average()) - avg_state_entropy;
}

double channel_chi(const KrausChannel& ch, const Ensemble& ens) {
  if (ens.dim() != ch.dim_in) {
    throw std::invalid_argument("ensemble dimension does not match channel input");
  }
  std::vector<DensityMatrix> outputs;
  outputs.reserve(ens.size());
  for (const auto& s : ens.states()) {
    outputs.push_back(apply(ch, s));
  }
  return holevo_chi(Ensemble(std::move(outputs), ens.probs()));
}

double quantum_mutual_information(const KrausChannel& ch, const DensityMatrix& rho) {
  if (rho.dim() != ch.dim_in) {
    throw std::invalid_argument("state dimension does not match channel input");
  }
  const double input = von_neumann_entropy(rho);
  const double output = von_neumann_entropy(apply(ch, rho));
  const double joint = von_neumann_entropy(apply_extended(ch, purify(rho)).state());
  return input + output - joint;
}

TradeoffEvaluation tradeoff_objective(const KrausChannel& ch, const Ensemble& ens) {
  if (ens.dim() != ch.dim_in) {
    throw std::invalid_argument("ensemble dimension does not match channel input");
  }
  TradeoffEvaluation eval;
  for (std::size_t i = 0; i < ens.size(); ++i) {
    const double p = ens.probs()[i];
    eval.term_avg_input_entropy += p * von_neumann_entropy(ens.states()[i]);
    eval.term_joint_entropy +=
        p * von_neumann_entropy(apply_extended(ch, purify(ens.states()[i])).state());
  }
  eval.term_avg_output_entropy = von_neumann_entropy(apply(ch, ens.average()));
  eval.rate = eval.term_avg_input_entropy + eval.term_avg_output_entropy - eval.term_joint_entropy;
  eval.entanglement_cost = eval.term_avg_input_entropy;
  return eval;
}

double ensemble_cost(const Ensemble& ens) {
  double cost = 0.0;
  for (std::size_t i = 0; i < ens.size(); ++i) {
    cost += ens.probs()[i] * von_neumann_entropy(ens.states()[i]);
  }
  return cost;
}

}  // namespace qcap
