#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "quintic/hypersurface.hpp"

namespace quintic {

using InputList = std::vector<std::pair<std::string, std::string>>;

/// Exact residual and triviality report attached to every emitted point.
template <class K>
struct Certificate {
  std::string construction;
  InputList inputs;
  Point4<K> point;
  K residual;
  TrivialityReport triviality;
  std::vector<std::string> notes;
};

/// Packs a point whose residual has already been computed. A nonzero residual
/// means a construction is broken, so it is never returned as a result.
template <class K>
Certificate<K> certify(std::string construction, InputList inputs, Point4<K> point, K residual,
                       TrivialityReport triviality, std::vector<std::string> notes = {}) {
  if (!residual.is_zero()) {
    throw std::logic_error(construction + ": constructed point has nonzero residual " +
                           FieldTraits<K>::to_string(residual));
  }
  return Certificate<K>{std::move(construction), std::move(inputs), std::move(point), std::move(residual),
                        triviality, std::move(notes)};
}

template <class K>
Certificate<K> certify_quintic(std::string construction, InputList inputs, const QuinticCoeffs& f, Point4<K> point,
                               std::vector<std::string> notes = {}) {
  K res = residual(f, point);
  auto tr = classify(f, point);
  return certify(std::move(construction), std::move(inputs), std::move(point), std::move(res), tr, std::move(notes));
}

}  // namespace quintic
