#include "refco/machine.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>
#include <stdexcept>

namespace refco {

Machine decode(int id) {
    if (id < 0 || id > 255)
        throw std::domain_error("machine id out of range [0,255]: " +
                                std::to_string(id));
    Machine m{};
    // Entry (q, i) occupies bits (7 - 4q - 2i, 6 - 4q - 2i): delta high, phi low.
    for (int q = 0; q < 2; ++q) {
        for (int i = 0; i < 2; ++i) {
            int shift = 6 - 4 * q - 2 * i;
            m.delta[q][i] = state_from_bit((id >> (shift + 1)) & 1);
            m.phi[q][i] = symbol_from_bit((id >> shift) & 1);
        }
    }
    return m;
}

int encode(const Machine& m) {
    int id = 0;
    for (int q = 0; q < 2; ++q) {
        for (int i = 0; i < 2; ++i) {
            int shift = 6 - 4 * q - 2 * i;
            id |= bit_of(m.delta[q][i]) << (shift + 1);
            id |= bit_of(m.phi[q][i]) << shift;
        }
    }
    return id;
}

Machine complement(const Machine& m) {
    Machine r{};
    for (int q = 0; q < 2; ++q) {
        for (int i = 0; i < 2; ++i) {
            r.delta[q][i] = m.delta[q][i ^ 1];
            r.phi[q][i] = complement(m.phi[q][i ^ 1]);
        }
    }
    return r;
}

Machine mirror(const Machine& m) {
    Machine r{};
    for (int q = 0; q < 2; ++q) {
        for (int i = 0; i < 2; ++i) {
            r.delta[q][i] = mirror(m.delta[q ^ 1][i]);
            r.phi[q][i] = m.phi[q ^ 1][i];
        }
    }
    return r;
}

Machine transpose(const Machine& m) {
    Machine r{};
    // The entry at (q, i) moves to (state-of-i, symbol-of-q); its transition
    // result becomes an output and its output becomes a transition result.
    for (int q = 0; q < 2; ++q) {
        for (int i = 0; i < 2; ++i) {
            r.delta[i][q] = as_state(m.phi[q][i]);
            r.phi[i][q] = as_symbol(m.delta[q][i]);
        }
    }
    return r;
}

std::vector<int> equivalence_class(int id) {
    const Machine m = decode(id);
    std::set<int> orbit{id, encode(complement(m)), encode(mirror(m)),
                        encode(complement(mirror(m)))};
    return {orbit.begin(), orbit.end()};
}

int canonical(int id) { return equivalence_class(id).front(); }

std::vector<int> canonical_ids() {
    std::vector<int> out;
    for (int id = 0; id < 256; ++id)
        if (canonical(id) == id) out.push_back(id);
    return out;
}

MachineClass classify(const Machine& m) {
    const bool const0 = m.phi[0][0] == m.phi[0][1];
    const bool const1 = m.phi[1][0] == m.phi[1][1];
    if (!const0 || !const1) return MachineClass::message_propagating;
    if (m.phi[0][0] != m.phi[1][0]) return MachineClass::state_reporting;
    return MachineClass::constant_non_reporting;
}

std::string_view to_string(MachineClass c) {
    switch (c) {
        case MachineClass::state_reporting: return "state-reporting";
        case MachineClass::message_propagating: return "message-propagating";
        case MachineClass::constant_non_reporting:
            return "constant-non-reporting";
    }
    return "unknown";
}

std::string to_binary_string(int id) {
    if (id < 0 || id > 255)
        throw std::domain_error("machine id out of range [0,255]: " +
                                std::to_string(id));
    std::string s(8, '0');
    for (int b = 0; b < 8; ++b)
        if (id & (1 << (7 - b))) s[b] = '1';
    return s;
}

std::string transition_table(int id) {
    const Machine m = decode(id);
    std::ostringstream os;
    os << "machine " << id << " (" << to_binary_string(id) << ") "
       << to_string(classify(m)) << "\n";
    os << "  state input -> next output\n";
    for (int q = 0; q < 2; ++q) {
        for (int i = 0; i < 2; ++i) {
            os << "  S" << q << "    " << i << "     -> S"
               << bit_of(m.delta[q][i]) << "   " << bit_of(m.phi[q][i])
               << "\n";
        }
    }
    return os.str();
}

namespace {

bool is_binary8(std::string_view s) {
    return s.size() == 8 &&
           std::all_of(s.begin(), s.end(),
                       [](char c) { return c == '0' || c == '1'; });
}

// Extracts "S<q> <i> -> S<d> <o>" rows from table text; all four (q, i)
// pairs must appear exactly once.
int parse_table(std::string_view text) {
    std::array<std::array<int, 2>, 2> dst{{{-1, -1}, {-1, -1}}};
    std::array<std::array<int, 2>, 2> out{{{-1, -1}, {-1, -1}}};
    const std::string s(text);
    for (std::size_t pos = 0; (pos = s.find("S", pos)) != std::string::npos;
         ++pos) {
        // Candidate row: S<q> <ws> <i> <ws> -> <ws> S<d> <ws> <o>
        std::istringstream is(s.substr(pos));
        char c0, c1;
        int q, i, d, o;
        std::string arrow, sd;
        is >> c0 >> q >> i >> arrow >> sd >> o;
        if (!is || c0 != 'S' || arrow != "->" || sd.size() != 2 ||
            sd[0] != 'S')
            continue;
        c1 = sd[1];
        if (q < 0 || q > 1 || i < 0 || i > 1 || (c1 != '0' && c1 != '1') ||
            o < 0 || o > 1)
            continue;
        d = c1 - '0';
        if (dst[q][i] != -1)
            throw std::domain_error("duplicate transition row in table");
        dst[q][i] = d;
        out[q][i] = o;
    }
    Machine m{};
    for (int q = 0; q < 2; ++q) {
        for (int i = 0; i < 2; ++i) {
            if (dst[q][i] == -1)
                throw std::domain_error("incomplete transition table");
            m.delta[q][i] = state_from_bit(dst[q][i]);
            m.phi[q][i] = symbol_from_bit(out[q][i]);
        }
    }
    return encode(m);
}

}  // namespace

int parse_machine(std::string_view text) {
    // Trim surrounding whitespace.
    auto b = text.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos)
        throw std::domain_error("empty machine specifier");
    auto e = text.find_last_not_of(" \t\r\n");
    std::string_view t = text.substr(b, e - b + 1);

    if (is_binary8(t)) {
        int id = 0;
        for (char c : t) id = id * 2 + (c - '0');
        return id;
    }
    if (!t.empty() &&
        std::all_of(t.begin(), t.end(),
                    [](unsigned char c) { return std::isdigit(c); })) {
        int id = -1;
        auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), id);
        if (ec != std::errc{} || p != t.data() + t.size() || id > 255)
            throw std::domain_error("bad machine id: " + std::string(t));
        return id;
    }
    if (t.find("->") != std::string_view::npos) return parse_table(t);
    throw std::domain_error("unrecognized machine specifier: " +
                            std::string(t));
}

}  // namespace refco
