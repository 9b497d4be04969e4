#include "qzeno/reference_table.hpp"

#include <iterator>

namespace qzeno::sf {

namespace {
constexpr WRef kTable[] = {
#include "faddeeva_reference.inc"
};
}

std::span<const WRef> faddeeva_reference()
{
    return {kTable, std::size(kTable)};
}

} // namespace qzeno::sf
