#include "iacbench/retrieval/tokenizer.hpp"

#include "iacbench/common/text.hpp"

namespace iacbench::retrieval {

Tokenizer default_tokenizer() {
    return [](std::string_view s) { return text::approx_token_count(s); };
}

} // namespace iacbench::retrieval
