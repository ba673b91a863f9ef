#pragma once

#include <cstdint>
#include <ostream>

namespace w1plus {

// Bundled invariant suites: randomized BB-triple identities and bounds, the
// psi / Hoelder grids, binomial closed-form comparisons, and a fault-injection
// negative control. Returns 0 when every suite passes.
int selftest(std::uint64_t seed, std::ostream& log);

} // namespace w1plus
