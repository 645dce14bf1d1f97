#pragma once

#include "ghwlrc/constructions.hpp"
#include "ghwlrc/linear_code.hpp"

#include <vector>

namespace fixtures {

inline ghwlrc::LinearCode code(unsigned q, const std::vector<std::vector<unsigned>>& rows)
{
    return ghwlrc::LinearCode::from_generator(ghwlrc::Matrix::from_rows(ghwlrc::field_of_order(q), rows));
}

// {0000, 1100, 0011, 1111}
inline ghwlrc::LinearCode self_dual_4_2() { return code(2, {{1, 1, 0, 0}, {0, 0, 1, 1}}); }

inline ghwlrc::LinearCode repetition3() { return code(2, {{1, 1, 1}}); }

inline ghwlrc::LinearCode parity3() { return code(2, {{1, 0, 1}, {0, 1, 1}}); }

inline ghwlrc::LinearCode tb_12_6_3() { return ghwlrc::tamo_barg(13, 12, 6, 3).code; }

inline ghwlrc::LinearCode rs_7_6_3() { return ghwlrc::reed_solomon(7, 6, 3).code; }

} // namespace fixtures
