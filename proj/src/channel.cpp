#include "qcap/channel.hpp"

#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace qcap {

namespace {

void check_shapes(const KrausChannel& ch) {
  if (ch.kraus.empty()) {
    throw std::invalid_argument("channel needs at least one Kraus operator");
  }
  if (ch.dim_in < 1 || ch.dim_out < 1) {
    throw std::invalid_argument("channel dimensions must be positive");
  }
  for (const auto& a : ch.kraus) {
    if (a.rows() != ch.dim_out || a.cols() != ch.dim_in) {
      std::ostringstream msg;
      msg << "Kraus operator shape " << a.rows() << "x" << a.cols() << " does not match "
          << ch.dim_out << "x" << ch.dim_in;
      throw std::invalid_argument(msg.str());
    }
  }
}

}  // namespace

ChannelValidation validate(const KrausChannel& ch) {
  check_shapes(ch);
  ComplexMatrix acc = ComplexMatrix::Zero(ch.dim_in, ch.dim_in);
  for (const auto& a : ch.kraus) {
    acc += a.adjoint() * a;
  }
  acc -= ComplexMatrix::Identity(ch.dim_in, ch.dim_in);
  ChannelValidation report;
  report.max_deviation = acc.cwiseAbs().maxCoeff();
  report.pass = report.max_deviation <= 1e-9;
  return report;
}

KrausChannel make_kraus_channel(std::string name, Eigen::Index dim_in, Eigen::Index dim_out,
                                std::vector<ComplexMatrix> kraus) {
  KrausChannel ch{dim_in, dim_out, std::move(kraus), std::move(name)};
  const auto report = validate(ch);
  if (!report.pass) {
    std::ostringstream msg;
    msg << "channel '" << ch.name << "' is not trace preserving: deviation "
        << report.max_deviation;
    throw std::invalid_argument(msg.str());
  }
  return ch;
}

DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho) {
  if (rho.dim() != ch.dim_in) {
    throw std::invalid_argument("state dimension does not match channel input");
  }
  ComplexMatrix out = ComplexMatrix::Zero(ch.dim_out, ch.dim_out);
  for (const auto& a : ch.kraus) {
    out += a * rho.matrix() * a.adjoint();
  }
  return DensityMatrix::from_psd(std::move(out));
}

BipartiteState apply_extended(const KrausChannel& ch, const BipartiteState& s) {
  if (s.dim_a() != ch.dim_in) {
    throw std::invalid_argument("bipartite state side A does not match channel input");
  }
  const Eigen::Index db = s.dim_b();
  const ComplexMatrix eye = ComplexMatrix::Identity(db, db);
  ComplexMatrix out = ComplexMatrix::Zero(ch.dim_out * db, ch.dim_out * db);
  for (const auto& a : ch.kraus) {
    const ComplexMatrix ext = kron(a, eye);
    out += ext * s.state().matrix() * ext.adjoint();
  }
  return BipartiteState(ch.dim_out, db, DensityMatrix::from_psd(std::move(out)));
}

BipartiteState choi_matrix(const KrausChannel& ch) {
  const Eigen::Index d = ch.dim_in;
  ComplexVector phi = ComplexVector::Zero(d * d);
  const double w = 1.0 / std::sqrt(static_cast<double>(d));
  for (Eigen::Index i = 0; i < d; ++i) {
    phi[i * d + i] = w;
  }
  return apply_extended(ch, BipartiteState(d, d, std::move(phi)));
}

KrausChannel make_standard(StandardChannel kind, Eigen::Index dim, double param) {
  if (dim < 2) {
    throw std::invalid_argument("standard channels need dim >= 2");
  }
  const ComplexMatrix eye = ComplexMatrix::Identity(dim, dim);
  switch (kind) {
    case StandardChannel::identity: {
      return make_kraus_channel("identity", dim, dim, {eye});
    }
    case StandardChannel::depolarizing: {
      if (param < 0.0 || param > 1.0) {
        throw std::invalid_argument("depolarizing parameter must be in [0,1]");
      }
      // (1-p) rho + p I/d written through the d^2 Heisenberg-Weyl unitaries
      // X^j Z^k, whose uniform twirl is the constant map rho -> I/d.
      const double p = param;
      const Complex omega = std::exp(Complex(0.0, 2.0 * std::numbers::pi / dim));
      ComplexMatrix shift = ComplexMatrix::Zero(dim, dim);
      for (Eigen::Index i = 0; i < dim; ++i) shift((i + 1) % dim, i) = 1.0;
      ComplexMatrix clock = ComplexMatrix::Zero(dim, dim);
      for (Eigen::Index i = 0; i < dim; ++i) clock(i, i) = std::pow(omega, static_cast<double>(i));
      std::vector<ComplexMatrix> kraus;
      kraus.reserve(dim * dim);
      const double w_id = std::sqrt(1.0 - p + p / (dim * dim));
      const double w_rest = std::sqrt(p / (dim * dim));
      ComplexMatrix xj = eye;
      for (Eigen::Index j = 0; j < dim; ++j) {
        ComplexMatrix xjzk = xj;
        for (Eigen::Index k = 0; k < dim; ++k) {
          const double w = (j == 0 && k == 0) ? w_id : w_rest;
          if (w > 0.0) kraus.push_back(w * xjzk);
          xjzk = xjzk * clock;
        }
        xj = shift * xj;
      }
      return make_kraus_channel("depolarizing", dim, dim, std::move(kraus));
    }
    case StandardChannel::dephasing: {
      if (param < 0.0 || param > 1.0) {
        throw std::invalid_argument("dephasing parameter must be in [0,1]");
      }
      std::vector<ComplexMatrix> kraus;
      if (param < 1.0) kraus.push_back(std::sqrt(1.0 - param) * eye);
      for (Eigen::Index i = 0; i < dim; ++i) {
        ComplexMatrix proj = ComplexMatrix::Zero(dim, dim);
        proj(i, i) = std::sqrt(param);
        if (param > 0.0) kraus.push_back(std::move(proj));
      }
      return make_kraus_channel("dephasing", dim, dim, std::move(kraus));
    }
    case StandardChannel::amplitude_damping: {
      if (dim != 2) {
        throw std::invalid_argument("amplitude damping is defined for dim 2");
      }
      if (param < 0.0 || param > 1.0) {
        throw std::invalid_argument("amplitude damping parameter must be in [0,1]");
      }
      ComplexMatrix a0 = ComplexMatrix::Zero(2, 2);
      a0(0, 0) = 1.0;
      a0(1, 1) = std::sqrt(1.0 - param);
      ComplexMatrix a1 = ComplexMatrix::Zero(2, 2);
      a1(0, 1) = std::sqrt(param);
      return make_kraus_channel("amplitude_damping", 2, 2, {std::move(a0), std::move(a1)});
    }
    case StandardChannel::erasure: {
      if (param < 0.0 || param > 1.0) {
        throw std::invalid_argument("erasure parameter must be in [0,1]");
      }
      // Output space is dim+1; the extra basis vector flags the erasure.
      std::vector<ComplexMatrix> kraus;
      ComplexMatrix embed = ComplexMatrix::Zero(dim + 1, dim);
      embed.topRows(dim) = std::sqrt(1.0 - param) * eye;
      if (param < 1.0) kraus.push_back(std::move(embed));
      for (Eigen::Index k = 0; k < dim; ++k) {
        ComplexMatrix flag = ComplexMatrix::Zero(dim + 1, dim);
        flag(dim, k) = std::sqrt(param);
        if (param > 0.0) kraus.push_back(std::move(flag));
      }
      return make_kraus_channel("erasure", dim, dim + 1, std::move(kraus));
    }
  }
  throw std::invalid_argument("unknown standard channel kind");
}

namespace {

const char* kShorthandFamilies[] = {"identity", "depolarizing", "dephasing", "amplitude_damping",
                                    "erasure"};

StandardChannel family_from_name(const std::string& name) {
  if (name == "identity") return StandardChannel::identity;
  if (name == "depolarizing") return StandardChannel::depolarizing;
  if (name == "dephasing") return StandardChannel::dephasing;
  if (name == "amplitude_damping") return StandardChannel::amplitude_damping;
  if (name == "erasure") return StandardChannel::erasure;
  std::ostringstream msg;
  msg << "unknown channel family '" << name << "'; supported:";
  for (const char* f : kShorthandFamilies) msg << " " << f;
  throw std::invalid_argument(msg.str());
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream stream(text);
  while (std::getline(stream, item, sep)) parts.push_back(item);
  return parts;
}

double parse_real(const std::string& s) {
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) throw std::invalid_argument("malformed number '" + s + "'");
  return v;
}

Eigen::Index parse_dim(const std::string& s) {
  std::size_t used = 0;
  const long v = std::stol(s, &used);
  if (used != s.size() || v < 1) throw std::invalid_argument("malformed dimension '" + s + "'");
  return static_cast<Eigen::Index>(v);
}

}  // namespace

KrausChannel parse_channel_shorthand(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.empty()) throw std::invalid_argument("empty channel shorthand");
  const StandardChannel kind = family_from_name(parts[0]);
  Eigen::Index dim = 2;
  double param = 0.0;
  if (kind == StandardChannel::identity) {
    if (parts.size() > 2) throw std::invalid_argument("identity shorthand is identity[:dim]");
    if (parts.size() == 2) dim = parse_dim(parts[1]);
  } else {
    if (parts.size() < 2 || parts.size() > 3) {
      throw std::invalid_argument("shorthand is " + parts[0] + ":param[:dim]");
    }
    param = parse_real(parts[1]);
    if (parts.size() == 3) dim = parse_dim(parts[2]);
  }
  return make_standard(kind, dim, param);
}

KrausChannel channel_from_json_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("channel spec is not valid JSON: ") + e.what());
  }
  try {
    const auto name = doc.at("name").get<std::string>();
    const auto dim_in = doc.at("dim_in").get<Eigen::Index>();
    const auto dim_out = doc.at("dim_out").get<Eigen::Index>();
    std::vector<ComplexMatrix> kraus;
    for (const auto& op : doc.at("kraus")) {
      ComplexMatrix a(dim_out, dim_in);
      if (static_cast<Eigen::Index>(op.size()) != dim_out) {
        throw std::invalid_argument("Kraus operator row count does not match dim_out");
      }
      for (Eigen::Index r = 0; r < dim_out; ++r) {
        const auto& row = op.at(r);
        if (static_cast<Eigen::Index>(row.size()) != dim_in) {
          throw std::invalid_argument("Kraus operator column count does not match dim_in");
        }
        for (Eigen::Index c = 0; c < dim_in; ++c) {
          const auto& entry = row.at(c);
          a(r, c) = Complex(entry.at(0).get<double>(), entry.at(1).get<double>());
        }
      }
      kraus.push_back(std::move(a));
    }
    return make_kraus_channel(name, dim_in, dim_out, std::move(kraus));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("channel spec is missing fields: ") + e.what());
  }
}

KrausChannel load_channel_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read channel file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return channel_from_json_text(buf.str());
}

std::string channel_to_json_text(const KrausChannel& ch) {
  nlohmann::json doc;
  doc["name"] = ch.name;
  doc["dim_in"] = ch.dim_in;
  doc["dim_out"] = ch.dim_out;
  auto& ops = doc["kraus"] = nlohmann::json::array();
  for (const auto& a : ch.kraus) {
    nlohmann::json op = nlohmann::json::array();
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (Eigen::Index c = 0; c < a.cols(); ++c) {
        row.push_back({a(r, c).real(), a(r, c).imag()});
      }
      op.push_back(std::move(row));
    }
    ops.push_back(std::move(op));
  }
  return doc.dump(2);
}

KrausChannel resolve_channel(const std::string& source) {
  std::error_code ec;
  if (std::filesystem::exists(source, ec)) {
    return load_channel_file(source);
  }
  return parse_channel_shorthand(source);
}

}  // namespace qcap
