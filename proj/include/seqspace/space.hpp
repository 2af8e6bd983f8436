#pragma once

#include <optional>

#include "seqspace/finite_vector.hpp"
#include "seqspace/modular.hpp"
#include "seqspace/weights.hpp"

namespace seqspace {

// Tagged union selecting the norm semantics. Orlicz, Marcinkiewicz, Lorentz
// and weak-Lorentz norms are rearrangement-invariant; Nakano and flow
// families are not unless their data is constant.
class SpaceDescriptor {
public:
  enum class Kind { nakano, orlicz, musielak_flow, marcinkiewicz, lorentz_d1, weak_lorentz };

  static SpaceDescriptor nakano(ExponentSequence e);
  static SpaceDescriptor orlicz(OrliczFunction f);
  static SpaceDescriptor musielak_flow(OrliczFunction base, ScaleSequence scales);
  static SpaceDescriptor marcinkiewicz(Weight w);
  static SpaceDescriptor lorentz_d1(Weight w);
  static SpaceDescriptor weak_lorentz(Weight v);

  Kind kind() const { return kind_; }
  bool symmetric() const;

  const ExponentSequence& exponents() const;
  const OrliczFunction& function() const;
  const ScaleSequence& scales() const;
  const Weight& weight() const;

  // The Musielak space realizing the norm (nakano/orlicz/flow kinds only).
  const MusielakSpace& musielak() const;

private:
  SpaceDescriptor() = default;
  Kind kind_ = Kind::orlicz;
  std::optional<MusielakSpace> musielak_;
  std::optional<Weight> weight_;
};

double space_norm(const SpaceDescriptor& space, const FiniteVector& x, double tol = 1e-12);

}  // namespace seqspace
