#pragma once

#include "certbounds/interval.hpp"

namespace certbounds {

/// Forward-mode first-derivative number: a value together with one
/// directional derivative. Instantiated with double for point derivatives
/// and with Interval for certified derivative enclosures.
template <class T>
struct Dual {
  T v{};
  T d{};
};

}  // namespace certbounds
