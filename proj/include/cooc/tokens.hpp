#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cooc/errors.hpp"
#include "cooc/gadgets.hpp"

namespace cooc {

enum class input_mode { byte, token };

// Interns token text to dense ids in first-seen order.
class interner {
public:
    token_id id_of(std::string_view text) {
        auto it = ids_.find(std::string(text));
        if (it != ids_.end()) return it->second;
        token_id id = static_cast<token_id>(names_.size());
        names_.emplace_back(text);
        ids_.emplace(names_.back(), id);
        return id;
    }

    const std::string& name_of(token_id id) const { return names_[id]; }
    const std::vector<std::string>& names() const { return names_; }

private:
    std::unordered_map<std::string, token_id> ids_;
    std::vector<std::string> names_;
};

// byte mode: every byte is a token (id = byte value).
// token mode: whitespace-separated tokens interned through `dict`.
inline std::vector<token_id> tokenize(std::string_view content, input_mode mode,
                                      interner& dict) {
    std::vector<token_id> out;
    if (mode == input_mode::byte) {
        out.reserve(content.size());
        for (unsigned char b : content) out.push_back(b);
        return out;
    }
    std::size_t i = 0;
    while (i < content.size()) {
        while (i < content.size() && std::isspace(static_cast<unsigned char>(content[i]))) ++i;
        std::size_t begin = i;
        while (i < content.size() && !std::isspace(static_cast<unsigned char>(content[i]))) ++i;
        if (i > begin) out.push_back(dict.id_of(content.substr(begin, i - begin)));
    }
    return out;
}

// Inline query spec: in token mode, whitespace-separated members; in byte
// mode, each byte of the spec is a member.
inline std::vector<token_id> parse_query_spec(std::string_view spec, input_mode mode,
                                              interner& dict) {
    if (mode == input_mode::byte) {
        std::vector<token_id> out;
        for (unsigned char b : spec) out.push_back(b);
        return out;
    }
    return tokenize(spec, input_mode::token, dict);
}

// Query file: one token per line, UTF-8; blank lines ignored; duplicates
// collapse later in query_profile. In byte mode each line must be a single
// byte.
inline std::vector<token_id> parse_query_file_content(std::string_view content,
                                                      input_mode mode, interner& dict) {
    std::vector<token_id> out;
    std::size_t pos = 0;
    while (pos <= content.size()) {
        std::size_t eol = content.find('\n', pos);
        std::string_view line = content.substr(
            pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (!line.empty()) {
            if (mode == input_mode::byte) {
                if (line.size() != 1)
                    throw invalid_query_error("byte-mode query line is not a single byte: '" +
                                              std::string(line) + "'");
                out.push_back(static_cast<unsigned char>(line[0]));
            } else {
                out.push_back(dict.id_of(line));
            }
        }
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    return out;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw io_error("read failure on " + path);
    return std::move(ss).str();
}

inline void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open " + path + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw io_error("write failure on " + path);
}

// Token-mode rendering of a generated instance, 16 tokens per line.
inline std::string format_token_file(const token_string& ts) {
    std::string out;
    for (std::size_t i = 0; i < ts.tokens.size(); ++i) {
        out += ts.names[ts.tokens[i]];
        out += (i % 16 == 15 || i + 1 == ts.tokens.size()) ? '\n' : ' ';
    }
    return out;
}

} // namespace cooc
