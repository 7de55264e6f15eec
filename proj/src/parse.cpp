#include "ctlcs/parse.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ctlcs {

IntSeq parse_sequence(const std::string& text, bool force_ints) {
    std::string norm = text;
    std::replace(norm.begin(), norm.end(), ',', ' ');

    std::vector<std::string> tokens;
    std::istringstream is(norm);
    for (std::string tok; is >> tok;) tokens.push_back(tok);

    if (tokens.empty()) return {};

    if (!force_ints && tokens.size() == 1) {
        const std::string& t = tokens[0];
        if (t.size() > 1 &&
            std::all_of(t.begin(), t.end(), [](char c) { return c == '0' || c == '1'; })) {
            IntSeq out;
            for (char c : t) out.push_back(c - '0');
            return out;
        }
    }

    IntSeq out;
    for (const std::string& tok : tokens) {
        std::size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(tok, &pos);
        } catch (const std::exception&) {
            throw ParseError("malformed integer token: '" + tok + "'");
        }
        if (pos != tok.size())
            throw ParseError("malformed integer token: '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

bool is_binary(const IntSeq& s) {
    return std::all_of(s.begin(), s.end(), [](auto v) { return v == 0 || v == 1; });
}

std::string format_sequence(const IntSeq& s, const std::string& sep) {
    std::ostringstream os;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) os << sep;
        os << s[i];
    }
    return os.str();
}

}  // namespace ctlcs
