// Brute-force many-body reference for the hopping chain.  States are bitmasks
// (bit n = site n occupied) over the full 2^L space, with the standard
// fermionic sign convention: creation and annihilation at site n pick up the
// parity of the occupied sites below n.  Exponential in the chain length by
// construction — this module exists to check the correlation-matrix routes,
// not to scale.

#pragma once

#include <cstdint>

#include "schedule.hpp"
#include "xx_chain.hpp"

namespace zeno {

// Hard cap on the chain length for many-body construction (2^14 basis states).
inline constexpr std::int64_t kMaxManyBodySites = 14;

// Dense many-body Hamiltonian of the chain on the full occupation basis.
// Conserves particle number; bond terms accumulate exactly as in the one-body
// hopping matrix.
Matrix fock_hamiltonian(const ChainConfig& cfg);

// Runs the protocol on a many-body state that starts as the given occupation
// bitmask and records the monitored-site occupation per cycle.  The
// measurement window contributes the pointer phase once per particle on the
// monitored site.
ZenoTrace fock_simulate(const ChainConfig& cfg, const MeasurementConfig& meas,
                        const ZenoSchedule& sched, std::uint32_t initial_occupation);

// Same protocol restricted to one particle, evolved as a bare wavefunction on
// the sites.  Cheap independent cross-check for single-particle initial
// states.
ZenoTrace single_particle_simulate(const ChainConfig& cfg, const MeasurementConfig& meas,
                                   const ZenoSchedule& sched, std::int64_t start_site);

namespace detail {

// Implementation knob for the consistency harness: `phase_sign` scales the
// pointer phase exponent and is -1 for the physical protocol.  Flipping it to
// +1 yields a deliberately wrong oracle that agreement checks must flag.
ZenoTrace fock_simulate_signed(const ChainConfig& cfg, const MeasurementConfig& meas,
                               const ZenoSchedule& sched, std::uint32_t initial_occupation,
                               double phase_sign);

}  // namespace detail

}  // namespace zeno
