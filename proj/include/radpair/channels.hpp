#pragma once

#include <string>
#include <vector>

#include "radpair/model.hpp"

namespace radpair {

// One Lindblad jump operator on the full (spin + shelves) space.
struct Channel {
  Matrix op;
  double rate = 0.0;
  std::string label;
};

using ChannelSet = std::vector<Channel>;

struct ChannelFlags {
  bool decay = true;
  bool generic_noise = false;
  bool dephasing = false;
};

// |S><s, n| and |T><t_j, n| for every nuclear basis state n, all at rate k.
ChannelSet shelving_projectors(const ModelSpec& m);

// sigma_{x,y,z} on each electron, zero on the shelves, all at rate gamma_noise.
ChannelSet generic_noise_channels(const ModelSpec& m);

// Z_i = (I - 2|l_i><l_i|) / sqrt(2) over the eigenvectors of the free-electron
// Zeeman term (2 operators) and of the nuclei x electron-1 block (2^(n+1)
// operators), built from the static field b; rate gamma_z.
ChannelSet dephasing_channels(const ModelSpec& m, const Vec3& b);

ChannelSet build_channels(const ModelSpec& m, const Vec3& static_b, const ChannelFlags& flags);

}  // namespace radpair
