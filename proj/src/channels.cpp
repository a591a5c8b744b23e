#include "radpair/channels.hpp"

#include <cmath>

#include "radpair/hamiltonian.hpp"
#include "radpair/operators.hpp"

namespace radpair {

namespace {

Matrix projector_dephasing_op(const Vector& v) {
  const auto n = v.size();
  return (identity(n) - 2.0 * v * v.adjoint()) / std::sqrt(2.0);
}

}  // namespace

ChannelSet shelving_projectors(const ModelSpec& m) {
  const auto st = singlet_triplet_states();
  const int nuc = 1 << m.nucleus_count();
  const int shelf_s = m.spin_dim();
  const int shelf_t = m.spin_dim() + 1;

  struct Target {
    const Vector* state;
    int shelf;
    const char* name;
  };
  const Target targets[] = {{&st.singlet, shelf_s, "S"},
                            {&st.t0, shelf_t, "T0"},
                            {&st.t_plus, shelf_t, "T+"},
                            {&st.t_minus, shelf_t, "T-"}};

  ChannelSet out;
  out.reserve(static_cast<std::size_t>(4 * nuc));
  for (int n = 0; n < nuc; ++n) {
    const Vector nuclear = Vector::Unit(nuc, n);
    for (const auto& target : targets) {
      const Vector v = kron(nuclear, *target.state);
      Matrix op = Matrix::Zero(m.total_dim(), m.total_dim());
      op.row(target.shelf).head(m.spin_dim()) = v.adjoint();
      out.push_back({std::move(op), m.k, std::string("P_") + target.name + ",n" + std::to_string(n)});
    }
  }
  return out;
}

ChannelSet generic_noise_channels(const ModelSpec& m) {
  const auto dims = m.slot_dims();
  const char* axis_names[] = {"x", "y", "z"};
  ChannelSet out;
  for (int e = 0; e < 2; ++e) {
    const auto slot = static_cast<std::size_t>(e == 0 ? m.electron1_slot() : m.electron2_slot());
    for (int a = 0; a < 3; ++a) {
      out.push_back({extend_to_shelves(embed(pauli(kAxes[a]), slot, dims)), m.gamma_noise,
                     std::string("sigma_") + axis_names[a] + "^e" + std::to_string(e + 1)});
    }
  }
  return out;
}

ChannelSet dephasing_channels(const ModelSpec& m, const Vec3& b) {
  const auto sub = subsystem_hamiltonians(m, b);
  ChannelSet out;

  Eigen::SelfAdjointEigenSolver<Matrix> remote(sub.remote);
  for (Eigen::Index i = 0; i < remote.eigenvectors().cols(); ++i) {
    const Matrix z = projector_dephasing_op(remote.eigenvectors().col(i));
    out.push_back({extend_to_shelves(kron(identity(sub.coupled.rows()), z)), m.gamma_z,
                   "Z_e2," + std::to_string(i)});
  }

  Eigen::SelfAdjointEigenSolver<Matrix> coupled(sub.coupled);
  for (Eigen::Index i = 0; i < coupled.eigenvectors().cols(); ++i) {
    const Matrix z = projector_dephasing_op(coupled.eigenvectors().col(i));
    out.push_back({extend_to_shelves(kron(z, identity(2))), m.gamma_z, "Z_ne1," + std::to_string(i)});
  }
  return out;
}

ChannelSet build_channels(const ModelSpec& m, const Vec3& static_b, const ChannelFlags& flags) {
  ChannelSet out;
  if (flags.decay) out = shelving_projectors(m);
  if (flags.generic_noise && m.gamma_noise > 0.0) {
    auto noise = generic_noise_channels(m);
    out.insert(out.end(), noise.begin(), noise.end());
  }
  if (flags.dephasing && m.gamma_z > 0.0) {
    auto deph = dephasing_channels(m, static_b);
    out.insert(out.end(), deph.begin(), deph.end());
  }
  return out;
}

}  // namespace radpair
