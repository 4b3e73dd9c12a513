#pragma once

#include <cstdint>
#include <vector>

namespace resetkit {

using State = std::uint32_t;
using Letter = std::uint32_t;

/// A finite sequence of letter indices; the empty word is valid.
using Word = std::vector<Letter>;

}  // namespace resetkit
