/*
  Maximum s -> d flow on an undirected network when every unit must stop at
  node t. The value is min(F(t,T)/2, F(s,t), F(t,d)), where T is a virtual
  node tied to s and d with non-binding capacity. The realization ties T to s
  and d with capacity equal to that value, pushes max flow t -> T, and flips
  the paths that end through s so they run s -> t.
*/
#pragma once

#include "sfc/maxflow.hpp"
#include "sfc/network.hpp"

namespace sfc {

struct MustStopBounds {
  Rational via_to_virtual_half{0};  // F(t,T) / 2
  Rational source_to_via{0};        // F(s,t)
  Rational via_to_destination{0};   // F(t,d)
};

// Flow toward t (commodity s -> t) and away from t (commodity t -> d).
struct MustStopRealization {
  FlowAssignment inbound;
  FlowAssignment outbound;
};

struct MustStopResult {
  Rational value{0};
  MustStopBounds bounds;
  MustStopRealization realization;
};

// Bounds and value only (realization left empty). Throws InputError unless
// the network is undirected and s, t, d are pairwise distinct.
MustStopResult must_stop_value(const Network& net, NodeId s, NodeId t, NodeId d);

// Throws std::logic_error if the realized amount differs from value.
MustStopRealization must_stop_realize(const Network& net, NodeId s, NodeId t, NodeId d,
                                      const Rational& value);

// Value plus realization.
MustStopResult must_stop(const Network& net, NodeId s, NodeId t, NodeId d);

}  // namespace sfc
