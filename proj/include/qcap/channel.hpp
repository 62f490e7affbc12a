#pragma once

#include "qcap/qmatrix.hpp"

#include <string>
#include <vector>

namespace qcap {

/// Completely positive trace-preserving map given by Kraus operators A_i,
/// each dim_out x dim_in, with sum_i A_i^dag A_i = I on the input space.
/// Plain data so that diagnostics can inspect non-trace-preserving families;
/// everything downstream assumes a channel that passes validate().
struct KrausChannel {
  Eigen::Index dim_in = 0;
  Eigen::Index dim_out = 0;
  std::vector<ComplexMatrix> kraus;
  std::string name;
};

struct ChannelValidation {
  double max_deviation = 0.0;  // max entrywise |sum A^dag A - I|
  bool pass = false;
};

/// Entrywise deviation of sum_i A_i^dag A_i from the identity, pass at 1e-9.
/// Throws std::invalid_argument on shape mismatches.
ChannelValidation validate(const KrausChannel& ch);

/// Builds and validates; throws std::invalid_argument if not trace preserving.
KrausChannel make_kraus_channel(std::string name, Eigen::Index dim_in, Eigen::Index dim_out,
                                std::vector<ComplexMatrix> kraus);

/// sum_i A_i rho A_i^dag.
DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho);

/// (N (x) I)(s): Kraus operators A_i (x) I act on the first subsystem.
BipartiteState apply_extended(const KrausChannel& ch, const BipartiteState& s);

/// (N (x) I)(|Phi><Phi|) for the normalized maximally entangled |Phi| on
/// dim_in x dim_in. Channels are equal iff their Choi matrices are.
BipartiteState choi_matrix(const KrausChannel& ch);

enum class StandardChannel { identity, depolarizing, dephasing, amplitude_damping, erasure };

/// Standard channel families:
///   identity          - single Kraus I, param ignored
///   depolarizing      - rho -> (1-p) rho + p I/dim
///   dephasing         - rho -> (1-p) rho + p diag(rho); p=1 kills coherences
///   amplitude_damping - qubit decay |1> -> |0> with probability param
///   erasure           - rho -> (1-p) rho (+) p |flag><flag|, output dim+1
KrausChannel make_standard(StandardChannel kind, Eigen::Index dim, double param);

/// Shorthand grammar "name[:param][:dim]", dim defaulting to 2; identity
/// takes no param ("identity:3" is a qutrit identity).
KrausChannel parse_channel_shorthand(const std::string& text);

/// Channel spec JSON: {"name", "dim_in", "dim_out", "kraus": [[[ [re,im], ...]]]}.
KrausChannel channel_from_json_text(const std::string& text);
KrausChannel load_channel_file(const std::string& path);
std::string channel_to_json_text(const KrausChannel& ch);

/// Accepts either a readable file path or a shorthand string.
KrausChannel resolve_channel(const std::string& source);

}  // namespace qcap
