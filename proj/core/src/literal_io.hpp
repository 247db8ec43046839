#pragma once

#include "dyadic/affine2.hpp"
#include "text_cursor.hpp"

namespace dyadic::detail {

// `(x,y)` at the cursor.
Vec2 read_point(Cursor& cur);

}  // namespace dyadic::detail
