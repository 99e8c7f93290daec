#pragma once

#include <string>
#include <vector>

namespace compresso {

/// A whitespace-tokenized sentence. Tokens are surface strings.
using TokenSeq = std::vector<std::string>;

/// Split on runs of spaces/tabs. Never produces empty tokens.
TokenSeq split_tokens(const std::string& line);

std::string join_tokens(const TokenSeq& tokens);

}  // namespace compresso
