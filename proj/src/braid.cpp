#include "framix/braid.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace framix {

void BraidWord::validate() const {
    if (n < 1) throw std::invalid_argument("braid needs at least one strand");
    for (int l : letters)
        if (l == 0 || std::abs(l) >= n) throw std::invalid_argument("braid letter out of range: " + std::to_string(l));
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) {
    if (a.n != b.n) throw std::invalid_argument("braid strand count mismatch");
    BraidWord r = a;
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    return r;
}

void FramedBraidWord::validate() const {
    word.validate();
    if (d < 1) throw std::invalid_argument("framing modulus must be positive");
    if (static_cast<int>(framings.size()) != word.n) throw std::invalid_argument("framing vector length mismatch");
    for (int f : framings)
        if (f < 0 || f >= d) throw std::invalid_argument("framing not reduced mod d");
}

std::string FramedBraidWord::str() const { return emit_braid(*this); }

ClosureComponents closure_components(const BraidWord& b) {
    ClosureComponents out;
    out.label.assign(b.n, -1);
    for (const auto& cyc : b.permutation().cycles()) {
        for (int s : cyc) out.label[s] = out.count;
        ++out.count;
    }
    return out;
}

std::vector<int> mixed_crossings(const BraidWord& b) {
    ClosureComponents cc = closure_components(b);
    // thread strand identities through the word: pos[p] = strand currently at p
    std::vector<int> pos(b.n);
    for (int p = 0; p < b.n; ++p) pos[p] = p;
    std::vector<int> out;
    for (size_t i = 0; i < b.letters.size(); ++i) {
        int k = std::abs(b.letters[i]) - 1;
        if (cc.label[pos[k]] != cc.label[pos[k + 1]]) out.push_back(static_cast<int>(i));
        std::swap(pos[k], pos[k + 1]);
    }
    return out;
}

BraidWord conjugate(const BraidWord& b, int letter) {
    if (letter == 0 || std::abs(letter) >= b.n) throw std::invalid_argument("conjugating letter out of range");
    BraidWord r = b;
    r.letters.insert(r.letters.begin(), letter);
    r.letters.push_back(-letter);
    return r;
}

BraidWord stabilize(const BraidWord& b, int sign) {
    BraidWord r;
    r.n = b.n + 1;
    r.letters = b.letters;
    r.letters.push_back(sign >= 0 ? b.n : -b.n);
    return r;
}

BraidWord destabilize(const BraidWord& b) {
    if (b.n < 2 || b.letters.empty()) throw std::invalid_argument("cannot destabilize");
    int top = b.n - 1;
    if (std::abs(b.letters.back()) != top) throw std::invalid_argument("last letter is not the top generator");
    int uses = 0;
    for (int l : b.letters)
        if (std::abs(l) == top) ++uses;
    if (uses != 1) throw std::invalid_argument("top generator occurs more than once");
    BraidWord r;
    r.n = b.n - 1;
    r.letters.assign(b.letters.begin(), b.letters.end() - 1);
    return r;
}

FramedBraidWord stabilize(const FramedBraidWord& b, int sign) {
    FramedBraidWord r;
    r.word = stabilize(b.word, sign);
    r.framings = b.framings;
    r.framings.push_back(0);
    r.d = b.d;
    return r;
}

FramedBraidWord conjugate(const FramedBraidWord& b, int letter) {
    FramedBraidWord r = b;
    r.word = conjugate(b.word, letter);
    // g^-1 t^a g moves the framing through the permutation of the letter pair;
    // conjugating by a single sigma_k swaps framing slots k-1, k.
    int k = std::abs(letter) - 1;
    std::swap(r.framings[k], r.framings[k + 1]);
    return r;
}

namespace {

[[noreturn]] void parse_fail(size_t tok_index, const std::string& tok, const std::string& what) {
    throw std::invalid_argument("braid parse error at token " + std::to_string(tok_index + 1) + " ('" + tok + "'): " + what);
}

long int_of(const std::string& s, size_t tok_index, const std::string& tok) {
    try {
        size_t used = 0;
        long v = std::stol(s, &used);
        if (used != s.size()) parse_fail(tok_index, tok, "trailing characters in number");
        return v;
    } catch (const std::invalid_argument&) {
        parse_fail(tok_index, tok, "expected a number");
    } catch (const std::out_of_range&) {
        parse_fail(tok_index, tok, "number out of range");
    }
}

}  // namespace

FramedBraidWord parse_braid(const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    int n = -1, d = 1;
    struct STok { int letter; };
    struct TTok { int strand; long amount; };
    std::vector<std::pair<bool, std::pair<STok, TTok>>> toks;  // true = s-token
    int max_index = 0;
    size_t ti = 0;
    bool d_seen = false;
    for (; in >> tok; ++ti) {
        if (tok.size() >= 2 && tok[0] == 'B' && std::isdigit(static_cast<unsigned char>(tok[1]))) {
            if (n != -1) parse_fail(ti, tok, "duplicate strand header");
            n = static_cast<int>(int_of(tok.substr(1), ti, tok));
            if (n < 1) parse_fail(ti, tok, "strand count must be positive");
        } else if (tok.rfind("d=", 0) == 0) {
            if (d_seen) parse_fail(ti, tok, "duplicate modulus header");
            d_seen = true;
            d = static_cast<int>(int_of(tok.substr(2), ti, tok));
            if (d < 1) parse_fail(ti, tok, "modulus must be positive");
        } else if (tok[0] == 's') {
            auto caret = tok.find('^');
            int k = static_cast<int>(int_of(tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1), ti, tok));
            if (k < 1) parse_fail(ti, tok, "generator index must be positive");
            int sign = 1;
            if (caret != std::string::npos) {
                if (tok.substr(caret) != "^-1") parse_fail(ti, tok, "only exponent ^-1 is allowed on s-tokens");
                sign = -1;
            }
            max_index = std::max(max_index, k + 1);
            toks.push_back({true, {{sign * k}, {}}});
        } else if (tok[0] == 't') {
            auto caret = tok.find('^');
            if (caret == std::string::npos) parse_fail(ti, tok, "t-token requires an exponent");
            int i = static_cast<int>(int_of(tok.substr(1, caret - 1), ti, tok));
            if (i < 1) parse_fail(ti, tok, "strand index must be positive");
            long a = int_of(tok.substr(caret + 1), ti, tok);
            max_index = std::max(max_index, i);
            toks.push_back({false, {{}, {i, a}}});
        } else {
            parse_fail(ti, tok, "unknown token");
        }
    }
    if (n == -1) n = std::max(max_index, 1);
    FramedBraidWord out;
    out.word.n = n;
    out.d = d;
    out.framings.assign(n, 0);
    Permutation p(n);
    ti = 0;
    for (const auto& [is_s, payload] : toks) {
        ++ti;
        if (is_s) {
            int letter = payload.first.letter;
            if (std::abs(letter) >= n) parse_fail(ti - 1, "s" + std::to_string(std::abs(letter)), "index out of range for strand count");
            out.word.letters.push_back(letter);
            p.right_swap(std::abs(letter) - 1);
        } else {
            int i = payload.second.strand;
            long a = payload.second.amount;
            if (i > n) parse_fail(ti - 1, "t" + std::to_string(i), "index out of range for strand count");
            if (d == 1) parse_fail(ti - 1, "t" + std::to_string(i), "framing token with modulus 1");
            // prefix * t_i^a = t_{prefix(i)}^a * prefix: collect to the top
            int slot = p(i - 1);
            out.framings[slot] = static_cast<int>((((out.framings[slot] + a) % d) + d) % d);
        }
    }
    out.validate();
    return out;
}

std::string emit_braid(const FramedBraidWord& b) {
    std::ostringstream out;
    out << "B" << b.word.n;
    if (b.d != 1) out << " d=" << b.d;
    for (int i = 0; i < b.word.n; ++i)
        if (b.framings[i] != 0) out << " t" << (i + 1) << "^" << b.framings[i];
    for (int l : b.word.letters) {
        out << " s" << std::abs(l);
        if (l < 0) out << "^-1";
    }
    return out.str();
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

}  // namespace

std::vector<LinkRecord> parse_catalog(const std::string& content) {
    std::vector<LinkRecord> out;
    std::istringstream in(content);
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& what) {
        throw std::invalid_argument("catalog line " + std::to_string(lineno) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto fields = split(t, '|');
        if (fields.size() < 3) fail("expected at least name|n|letters");
        LinkRecord rec;
        rec.name = trim(fields[0]);
        if (rec.name.empty()) fail("empty name");
        for (const auto& r : out)
            if (r.name == rec.name) fail("duplicate name '" + rec.name + "'");
        try {
            rec.braid.word.n = static_cast<int>(std::stol(trim(fields[1])));
            std::istringstream ls(fields[2]);
            int l;
            while (ls >> l) rec.braid.word.letters.push_back(l);
            if (!ls.eof()) fail("bad letter list");
            rec.braid.framings.assign(rec.braid.word.n, 0);
            rec.braid.d = 1;
            if (fields.size() >= 4 && !trim(fields[3]).empty()) {
                auto fr = split(trim(fields[3]), ',');
                if (static_cast<int>(fr.size()) != rec.braid.word.n) fail("framing vector length mismatch");
                int maxf = 0;
                for (size_t i = 0; i < fr.size(); ++i) {
                    rec.braid.framings[i] = static_cast<int>(std::stol(trim(fr[i])));
                    maxf = std::max(maxf, rec.braid.framings[i]);
                }
                rec.braid.d = maxf + 1;  // minimal modulus; callers re-reduce as needed
            }
            if (fields.size() >= 5 && !trim(fields[4]).empty()) {
                for (const auto& fx : split(fields[4], ';')) {
                    std::string f = trim(fx);
                    if (f.empty()) continue;
                    auto eq = f.find('=');
                    if (eq == std::string::npos) fail("fixture without '='");
                    rec.fixtures[trim(f.substr(0, eq))] = trim(f.substr(eq + 1));
                }
            }
            rec.braid.validate();
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        }
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<LinkRecord> load_catalog(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open catalog file: " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_catalog(buf.str());
}

}  // namespace framix
