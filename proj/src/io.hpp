#pragma once

#include <functional>
#include <string>
#include <vector>

#include "text.hpp"

namespace compresso {

/// All lines of a UTF-8 text file, without trailing newlines.
std::vector<std::string> read_lines(const std::string& path);

/// One tokenized sentence per non-empty line.
std::vector<TokenSeq> read_corpus(const std::string& path);

/// Write via temp file + rename so readers never observe a partial file.
void atomic_write_file(const std::string& path, const std::string& contents);

/// Apply fn(i) for i in [0, n) over `jobs` threads; results land at index i,
/// so the output is independent of the thread count.
void parallel_for(size_t n, int jobs, const std::function<void(size_t)>& fn);

}  // namespace compresso
