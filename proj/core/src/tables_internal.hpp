#pragma once

#include "tubealg/tube.hpp"

namespace tubealg::detail {

TubePresentation fib_tables();
TubePresentation yang_lee_tables();
// as_printed keeps the one coefficient that contradicts the charges.
TubePresentation rep_s3_tables(bool as_printed);

}  // namespace tubealg::detail
