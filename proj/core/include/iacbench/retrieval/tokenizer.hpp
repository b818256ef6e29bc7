#pragma once

#include <functional>
#include <string>
#include <string_view>

namespace iacbench::retrieval {

// Token counting hook. The default is the documented deterministic
// approximation (word runs plus individual punctuation); a provider-specific
// tokenizer can be swapped in.
using Tokenizer = std::function<std::size_t(std::string_view)>;

Tokenizer default_tokenizer();

} // namespace iacbench::retrieval
