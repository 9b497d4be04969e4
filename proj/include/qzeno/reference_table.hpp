// reference_table.hpp — committed extended-precision w(z) reference values

#pragma once

#include <span>

namespace qzeno::sf {

struct WRef {
    double zr, zi; // argument
    double wr, wi; // w(z)
};

// Table generated by tools/gen_faddeeva_fixture.py (mpmath, 50 digits).
std::span<const WRef> faddeeva_reference();

} // namespace qzeno::sf
