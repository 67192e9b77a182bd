// Copyright 2026 The majex Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "majex/circuit_text.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "majex/errors.hpp"

namespace majex {
namespace {

struct Token {
    std::string_view text;
    int column;
};

// Splits a line into whitespace-separated tokens, with "->" always a token
// of its own. Stops at '#'.
std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        const char ch = line[i];
        if (ch == '#') {
            break;
        }
        if (ch == ' ' || ch == '\t' || ch == '\r') {
            ++i;
            continue;
        }
        if (line.compare(i, 2, "->") == 0) {
            out.push_back({line.substr(i, 2), static_cast<int>(i) + 1});
            i += 2;
            continue;
        }
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r' && line[j] != '#' &&
               line.compare(j, 2, "->") != 0) {
            ++j;
        }
        out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
        i = j;
    }
    return out;
}

std::optional<GateKind> gate_kind(std::string_view word) {
    for (GateKind k : {GateKind::X, GateKind::Y, GateKind::Z, GateKind::H, GateKind::S, GateKind::Sdg, GateKind::CX}) {
        if (mnemonic(k) == word) {
            return k;
        }
    }
    return std::nullopt;
}

class LineParser {
  public:
    LineParser(int line, std::vector<Token> tokens) : line_(line), tokens_(std::move(tokens)) {
    }

    [[noreturn]] void fail(const Token &t, const std::string &msg) const {
        throw ParseError(line_, t.column, msg);
    }

    const Token &head() const {
        return tokens_.front();
    }

    void expect_count(std::size_t n, const char *form) const {
        if (tokens_.size() < n) {
            const Token &last = tokens_.back();
            throw ParseError(line_, last.column + static_cast<int>(last.text.size()),
                             std::string("expected `") + form + "`");
        }
        if (tokens_.size() > n) {
            fail(tokens_[n], "unexpected token '" + std::string(tokens_[n].text) + "'");
        }
    }

    int integer(std::size_t k) const {
        const Token &t = tokens_.at(k);
        int v = 0;
        const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc() || ptr != t.text.data() + t.text.size() || v < 0) {
            fail(t, "expected a non-negative integer, got '" + std::string(t.text) + "'");
        }
        return v;
    }

    int index(std::size_t k, int limit, const char *what) const {
        const int v = integer(k);
        if (v >= limit) {
            fail(tokens_[k], std::string(what) + " index " + std::to_string(v) + " out of range (register size " +
                                 std::to_string(limit) + ")");
        }
        return v;
    }

    const Token &token(std::size_t k) const {
        return tokens_.at(k);
    }
    std::size_t size() const {
        return tokens_.size();
    }

  private:
    int line_;
    std::vector<Token> tokens_;
};

}  // namespace

Circuit parse_circuit(std::string_view text) {
    std::optional<int> qubits;
    std::optional<int> cbits;
    std::vector<Instruction> body;
    int nq = 0;
    int nc = 0;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        const std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        auto tokens = tokenize(line);
        if (tokens.empty()) {
            if (eol == text.size()) {
                break;
            }
            continue;
        }
        LineParser p(line_no, std::move(tokens));
        const std::string_view word = p.head().text;

        if (word == "qubits") {
            if (qubits) {
                p.fail(p.head(), "duplicate `qubits` declaration");
            }
            p.expect_count(2, "qubits N");
            nq = p.integer(1);
            if (nq < 1) {
                p.fail(p.token(1), "`qubits` must be at least 1");
            }
            qubits = nq;
        } else if (word == "cbits") {
            if (!qubits) {
                p.fail(p.head(), "`cbits` before `qubits`");
            }
            if (cbits) {
                p.fail(p.head(), "duplicate `cbits` declaration");
            }
            if (!body.empty()) {
                p.fail(p.head(), "`cbits` after the first instruction");
            }
            p.expect_count(2, "cbits M");
            nc = p.integer(1);
            cbits = nc;
        } else {
            if (!qubits) {
                p.fail(p.head(), "missing `qubits N` declaration before the first instruction");
            }
            if (word == "measure") {
                if (p.size() >= 3 && p.token(2).text != "->") {
                    p.fail(p.token(2), "expected '->', got '" + std::string(p.token(2).text) + "'");
                }
                p.expect_count(4, "measure Q -> C");
                const int q = p.index(1, nq, "qubit");
                const int c = p.index(3, nc, "classical bit");
                body.emplace_back(Measure{q, c});
            } else if (word == "reset") {
                p.expect_count(2, "reset Q");
                body.emplace_back(Reset{p.index(1, nq, "qubit")});
            } else if (word == "barrier") {
                p.expect_count(1, "barrier");
                body.emplace_back(Barrier{});
            } else if (const auto kind = gate_kind(word)) {
                if (*kind == GateKind::CX) {
                    p.expect_count(3, "cx QC QT");
                    const int c = p.index(1, nq, "qubit");
                    const int t = p.index(2, nq, "qubit");
                    if (c == t) {
                        p.fail(p.token(2), "cx control and target must differ");
                    }
                    body.emplace_back(Gate::cx(c, t));
                } else {
                    p.expect_count(2, "<gate> Q");
                    body.emplace_back(Gate::single(*kind, p.index(1, nq, "qubit")));
                }
            } else {
                p.fail(p.head(), "unknown statement '" + std::string(word) + "'");
            }
        }
        if (eol == text.size()) {
            break;
        }
    }
    if (!qubits) {
        throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing `qubits N` declaration");
    }
    Circuit c(nq, nc);
    for (auto &inst : body) {
        c.append(std::move(inst));
    }
    return c;
}

std::string print_circuit(const Circuit &circuit) {
    std::ostringstream out;
    out << "qubits " << circuit.num_qubits() << "\n";
    out << "cbits " << circuit.num_cbits() << "\n";
    for (const auto &inst : circuit.instructions()) {
        if (const auto *g = std::get_if<Gate>(&inst)) {
            out << mnemonic(g->kind) << " " << g->operands[0];
            if (g->kind == GateKind::CX) {
                out << " " << g->operands[1];
            }
        } else if (const auto *m = std::get_if<Measure>(&inst)) {
            out << "measure " << m->qubit << " -> " << m->cbit;
        } else if (const auto *r = std::get_if<Reset>(&inst)) {
            out << "reset " << r->qubit;
        } else {
            out << "barrier";
        }
        out << "\n";
    }
    return out.str();
}

Circuit load_circuit(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open circuit file " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_circuit(buf.str());
}

}  // namespace majex
