#include "seqspace/space.hpp"

#include <stdexcept>

#include "seqspace/rearrangement.hpp"

namespace seqspace {

SpaceDescriptor SpaceDescriptor::nakano(ExponentSequence e) {
  SpaceDescriptor s;
  s.kind_ = Kind::nakano;
  s.musielak_ = MusielakSpace::nakano(std::move(e));
  return s;
}

SpaceDescriptor SpaceDescriptor::orlicz(OrliczFunction f) {
  SpaceDescriptor s;
  s.kind_ = Kind::orlicz;
  s.musielak_ = MusielakSpace::orlicz(std::move(f));
  return s;
}

SpaceDescriptor SpaceDescriptor::musielak_flow(OrliczFunction base, ScaleSequence scales) {
  SpaceDescriptor s;
  s.kind_ = Kind::musielak_flow;
  s.musielak_ = MusielakSpace::flow_family(std::move(base), std::move(scales));
  return s;
}

SpaceDescriptor SpaceDescriptor::marcinkiewicz(Weight w) {
  SpaceDescriptor s;
  s.kind_ = Kind::marcinkiewicz;
  s.weight_ = std::move(w);
  return s;
}

SpaceDescriptor SpaceDescriptor::lorentz_d1(Weight w) {
  SpaceDescriptor s;
  s.kind_ = Kind::lorentz_d1;
  s.weight_ = std::move(w);
  return s;
}

SpaceDescriptor SpaceDescriptor::weak_lorentz(Weight v) {
  SpaceDescriptor s;
  s.kind_ = Kind::weak_lorentz;
  s.weight_ = std::move(v);
  return s;
}

bool SpaceDescriptor::symmetric() const {
  switch (kind_) {
    case Kind::orlicz:
    case Kind::marcinkiewicz:
    case Kind::lorentz_d1:
    case Kind::weak_lorentz:
      return true;
    case Kind::nakano:
      return musielak_->exponents().is_constant();
    case Kind::musielak_flow:
      return musielak_->scales().is_constant();
  }
  return false;
}

const ExponentSequence& SpaceDescriptor::exponents() const {
  if (kind_ != Kind::nakano) throw std::logic_error("not a Nakano descriptor");
  return musielak_->exponents();
}

const OrliczFunction& SpaceDescriptor::function() const {
  if (kind_ != Kind::orlicz && kind_ != Kind::musielak_flow)
    throw std::logic_error("descriptor has no Orlicz function");
  return musielak_->function();
}

const ScaleSequence& SpaceDescriptor::scales() const {
  if (kind_ != Kind::musielak_flow) throw std::logic_error("not a flow descriptor");
  return musielak_->scales();
}

const Weight& SpaceDescriptor::weight() const {
  if (!weight_) throw std::logic_error("descriptor has no weight");
  return *weight_;
}

const MusielakSpace& SpaceDescriptor::musielak() const {
  if (!musielak_) throw std::logic_error("descriptor has no modular structure");
  return *musielak_;
}

double space_norm(const SpaceDescriptor& space, const FiniteVector& x, double tol) {
  switch (space.kind()) {
    case SpaceDescriptor::Kind::nakano:
    case SpaceDescriptor::Kind::orlicz:
    case SpaceDescriptor::Kind::musielak_flow:
      return luxemburg_norm(space.musielak(), x, tol);
    case SpaceDescriptor::Kind::marcinkiewicz:
      return marcinkiewicz_norm(space.weight(), x);
    case SpaceDescriptor::Kind::lorentz_d1:
      return lorentz_d1_norm(space.weight(), x);
    case SpaceDescriptor::Kind::weak_lorentz:
      return weak_lorentz_norm(space.weight(), x);
  }
  throw std::logic_error("unknown space kind");
}

}  // namespace seqspace
