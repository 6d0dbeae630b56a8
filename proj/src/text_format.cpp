#include "pbm/text_format.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace pbm {

namespace {

struct Line {
    int number;
    std::string text;
};

std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> out;
    std::istringstream in{std::string(text)};
    std::string raw;
    for (int number = 1; std::getline(in, raw); ++number) {
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        const auto first = raw.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = raw.find_last_not_of(" \t\r");
        out.push_back({number, raw.substr(first, last - first + 1)});
    }
    return out;
}

[[noreturn]] void fail(int line, const std::string& what) {
    throw Error(Errc::Parse, "line " + std::to_string(line) + ": " + what);
}

int parse_int(std::string_view token, int line) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || token.empty())
        fail(line, "expected an integer, got '" + std::string(token) + "'");
    return value;
}

std::pair<std::string, std::string> split_keyword(const std::string& text) {
    const auto space = text.find_first_of(" \t");
    if (space == std::string::npos) return {text, ""};
    return {text.substr(0, space), text.substr(text.find_first_not_of(" \t", space))};
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::Parse, "cannot read '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

BlockSpace parse_space(std::string_view text) {
    std::optional<int> m;
    std::optional<std::vector<int>> blocks;
    std::vector<std::pair<int, int>> below;
    int order_line = 0;
    for (const auto& [number, content] : content_lines(text)) {
        const auto [key, rest] = split_keyword(content);
        std::istringstream args(rest);
        std::string token;
        if (key == "m") {
            if (m) fail(number, "modulus given twice");
            if (!(args >> token)) fail(number, "missing modulus");
            m = parse_int(token, number);
            if (args >> token) fail(number, "unexpected '" + token + "'");
        } else if (key == "blocks") {
            if (blocks) fail(number, "blocks given twice");
            blocks.emplace();
            while (args >> token) blocks->push_back(parse_int(token, number));
            if (blocks->empty()) fail(number, "no block lengths");
        } else if (key == "order") {
            order_line = number;
            while (args >> token) {
                std::vector<int> elems;
                std::size_t start = 0;
                for (std::size_t lt; (lt = token.find('<', start)) != std::string::npos; start = lt + 1)
                    elems.push_back(parse_int(std::string_view(token).substr(start, lt - start), number));
                elems.push_back(parse_int(std::string_view(token).substr(start), number));
                if (elems.size() < 2) fail(number, "expected i<j, got '" + token + "'");
                for (std::size_t i = 0; i + 1 < elems.size(); ++i) below.emplace_back(elems[i], elems[i + 1]);
            }
        } else {
            fail(number, "unknown keyword '" + key + "'");
        }
    }
    if (!m) throw Error(Errc::Parse, "missing 'm' line");
    if (!blocks) throw Error(Errc::Parse, "missing 'blocks' line");
    if (*m < 2) throw Error(Errc::Parse, "modulus must be at least 2");
    const int n = static_cast<int>(blocks->size());
    try {
        return BlockSpace(*m, Pomset::make(n, *m / 2, below), *blocks);
    } catch (const Error& e) {
        if (order_line > 0 && (e.code() == Errc::CycleDetected || e.code() == Errc::IndexOutOfRange))
            fail(order_line, e.what());
        throw Error(Errc::Parse, e.what());
    }
}

BlockSpace load_space(const std::filesystem::path& path) { return parse_space(read_text_file(path)); }

std::string format_space(const BlockSpace& space) {
    std::string out = "m " + std::to_string(space.modulus()) + "\nblocks";
    for (int k : space.block_lengths()) out += " " + std::to_string(k);
    out += "\n";
    const auto covers = space.pomset().cover_relations();
    if (!covers.empty()) {
        out += "order";
        for (auto [i, j] : covers) out += " " + std::to_string(i) + "<" + std::to_string(j);
        out += "\n";
    }
    return out;
}

Code parse_code(const BlockSpace& space, std::string_view text) {
    const auto lines = content_lines(text);
    if (lines.empty()) throw Error(Errc::Parse, "empty code file");
    const std::string& header = lines.front().text;
    if (header != "explicit" && header != "linear")
        fail(lines.front().number, "expected 'explicit' or 'linear', got '" + header + "'");
    std::vector<BlockVector> rows;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        try {
            rows.push_back(space.parse_vector(lines[i].text));
        } catch (const Error& e) {
            fail(lines[i].number, e.what());
        }
    }
    if (header == "linear") return Code::span(space, rows);
    if (rows.empty()) fail(lines.front().number, "explicit code without codewords");
    return Code::from_words(space, std::move(rows));
}

Code load_code(const BlockSpace& space, const std::filesystem::path& path) { return parse_code(space, read_text_file(path)); }

std::string format_code(const Code& code) {
    std::string out = "explicit\n";
    for (const auto& w : code.words()) out += code.space().format(w) + "\n";
    return out;
}

}  // namespace pbm
