#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "pbm/block_space.hpp"
#include "pbm/codes.hpp"

namespace pbm {

/**
 * Space files are line oriented; '#' starts a comment.
 *
 *     m 5
 *     blocks 1 1
 *     order 1<2
 *
 * `m` and `blocks` are required, `order` may repeat and is optional (an
 * antichain when absent). An order token may chain several elements, as in
 * 1<2<3. Parse failures throw Errc::Parse naming the line.
 */
BlockSpace parse_space(std::string_view text);
BlockSpace load_space(const std::filesystem::path& path);
/// Canonical form: the cover relations on one order line.
std::string format_space(const BlockSpace& space);

/**
 * Code files start with `explicit` (one codeword per following line) or
 * `linear` (generator rows, expanded to their span on load).
 */
Code parse_code(const BlockSpace& space, std::string_view text);
Code load_code(const BlockSpace& space, const std::filesystem::path& path);
/// Explicit form, codewords in sorted order.
std::string format_code(const Code& code);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace pbm
