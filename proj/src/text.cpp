#include "wordalg/text.hpp"

#include <algorithm>
#include <cctype>

namespace wordalg {

namespace {

std::size_t skip_spaces(const std::string& s, std::size_t pos) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    return pos;
}

std::string trimmed(const std::string& s, std::size_t* offset) {
    std::size_t b = skip_spaces(s, 0);
    std::size_t e = s.size();
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    if (offset) *offset = b;
    return s.substr(b, e - b);
}

Word parse_word_at(const std::string& body, std::size_t base) {
    if (body == "~") return Word();
    if (body.empty()) throw parse_error("empty word spelling; use ~ for the empty word", base);
    std::vector<Letter> ls;
    if (body.find(',') != std::string::npos) {
        std::size_t start = 0;
        while (start <= body.size()) {
            std::size_t comma = body.find(',', start);
            std::size_t end = comma == std::string::npos ? body.size() : comma;
            std::string tok = body.substr(start, end - start);
            std::size_t toff = 0;
            tok = trimmed(tok, &toff);
            if (tok.empty()) throw parse_error("empty letter token", base + start);
            try {
                ls.emplace_back(tok);
            } catch (const std::invalid_argument& e) {
                throw parse_error(e.what(), base + start + toff);
            }
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    } else {
        for (std::size_t k = 0; k < body.size(); ++k) {
            try {
                ls.emplace_back(std::string(1, body[k]));
            } catch (const std::invalid_argument& e) {
                throw parse_error(e.what(), base + k);
            }
        }
    }
    return Word(std::move(ls));
}

}  // namespace

std::string render(const Word& w) {
    if (w.empty()) return "~";
    bool multi = std::any_of(w.letters().begin(), w.letters().end(),
                             [](const Letter& l) { return l.symbol().size() > 1; });
    std::string out;
    for (std::size_t k = 0; k < w.length(); ++k) {
        if (multi && k > 0) out += ",";
        out += w.letters()[k].symbol();
    }
    return out;
}

std::string render(const Phrase& p) {
    if (p.empty()) return "1";
    std::string out = "(";
    for (std::size_t k = 0; k < p.word_count(); ++k) {
        if (k > 0) out += "|";
        out += render(p.words()[k]);
    }
    return out + ")";
}

Word parse_word(const std::string& text) {
    std::size_t off = 0;
    std::string body = trimmed(text, &off);
    return parse_word_at(body, off);
}

Phrase parse_phrase(const std::string& text) {
    std::size_t off = 0;
    std::string body = trimmed(text, &off);
    if (body.empty()) throw parse_error("empty phrase spelling; use 1 for the empty phrase", 0);
    if (body == "1") return Phrase();
    if (body.front() != '(') return Phrase::single(parse_word_at(body, off));
    if (body.back() != ')') throw parse_error("missing closing ')'", off + body.size());
    std::string inner = body.substr(1, body.size() - 2);
    std::vector<Word> ws;
    std::size_t start = 0;
    while (true) {
        std::size_t bar = inner.find('|', start);
        std::size_t end = bar == std::string::npos ? inner.size() : bar;
        std::string seg = inner.substr(start, end - start);
        std::size_t soff = 0;
        seg = trimmed(seg, &soff);
        if (seg.empty())
            throw parse_error("empty word between '|'; use ~ for the empty word",
                              off + 1 + start);
        ws.push_back(parse_word_at(seg, off + 1 + start + soff));
        if (bar == std::string::npos) break;
        start = bar + 1;
    }
    return Phrase(std::move(ws));
}

std::vector<Letter> parse_alphabet(const std::string& text) {
    Word w = parse_word(text);
    return w.letters();
}

}  // namespace wordalg
