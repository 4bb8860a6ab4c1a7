#include "bflab/boolfun.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace bflab {

namespace {

void check_n(int n) {
    if (n < 0 || n > kMaxPositions)
        throw std::invalid_argument("position count must be in [0, 24], got " + std::to_string(n));
}

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

InputWord::InputWord(int n_, Word bits_) : n(n_), bits(bits_) {
    check_n(n);
    if (bits & ~full_mask(n))
        throw std::invalid_argument("input word has bits above position " + std::to_string(n));
}

std::string InputWord::str() const {
    std::string s(static_cast<size_t>(n), '0');
    for (int pos = 1; pos <= n; ++pos)
        if (get(pos)) s[pos - 1] = '1';
    return s;
}

InputWord InputWord::parse(const std::string& text) {
    check_n(static_cast<int>(text.size()));
    Word bits = 0;
    for (size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1')
            bits |= Word{1} << i;
        else if (text[i] != '0')
            throw std::invalid_argument("input word may only contain 0 and 1");
    }
    return InputWord(static_cast<int>(text.size()), bits);
}

int Block::size() const { return std::popcount(mask); }

std::vector<int> Block::positions() const {
    std::vector<int> out;
    for (Word m = mask; m; m &= m - 1)
        out.push_back(std::countr_zero(m) + 1);
    return out;
}

Certificate::Certificate(int n_, Word assigned_, Word values_)
    : n(n_), assigned(assigned_), values(values_ & assigned_) {
    check_n(n);
    if (assigned & ~full_mask(n))
        throw std::invalid_argument("certificate assigns a position above " + std::to_string(n));
}

int Certificate::length() const { return std::popcount(assigned); }

Certificate Certificate::with(int pos, bool value) const {
    Certificate c = *this;
    Word m = position_bit(pos);
    c.assigned |= m;
    c.values = value ? (c.values | m) : (c.values & ~m);
    return c;
}

Certificate Certificate::without(int pos) const {
    Certificate c = *this;
    Word m = position_bit(pos);
    c.assigned &= ~m;
    c.values &= ~m;
    return c;
}

Certificate Certificate::merged(const Certificate& other) const {
    if (n != other.n) throw std::invalid_argument("certificate dimension mismatch");
    if (!compatible(other)) throw std::invalid_argument("merging incompatible assignments");
    return Certificate(n, assigned | other.assigned, values | other.values);
}

std::string Certificate::str() const {
    std::string s(static_cast<size_t>(n), '*');
    for (int pos = 1; pos <= n; ++pos)
        if (assigns(pos)) s[pos - 1] = value_at(pos) ? '1' : '0';
    return s;
}

Certificate Certificate::parse(const std::string& text) {
    check_n(static_cast<int>(text.size()));
    Certificate c(static_cast<int>(text.size()), 0, 0);
    for (size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
            case '*': break;
            case '0': c.assigned |= Word{1} << i; break;
            case '1':
                c.assigned |= Word{1} << i;
                c.values |= Word{1} << i;
                break;
            default:
                throw std::invalid_argument("certificate may only contain 0, 1 and *");
        }
    }
    return c;
}

BooleanFunction::BooleanFunction(int n) : n_(n) {
    check_n(n);
    words_.assign((table_size() + 63) / 64, 0);
}

bool BooleanFunction::evaluate(const InputWord& x) const {
    if (x.n != n_)
        throw std::invalid_argument("input has " + std::to_string(x.n) + " positions, function expects " +
                                    std::to_string(n_));
    return bit(x.bits);
}

bool BooleanFunction::is_constant() const {
    bool v = bit(0);
    std::uint64_t expect = v ? ~std::uint64_t{0} : 0;
    std::uint64_t sz = table_size();
    for (size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t w = words_[i];
        std::uint64_t mask = ~std::uint64_t{0};
        if (sz < 64) mask = (std::uint64_t{1} << sz) - 1;
        if ((w & mask) != (expect & mask)) return false;
    }
    return true;
}

bool BooleanFunction::has_value(bool z) const {
    return !is_constant() || constant_value() == z;
}

BooleanFunction BooleanFunction::negated() const {
    BooleanFunction g(n_);
    std::uint64_t sz = table_size();
    for (size_t i = 0; i < words_.size(); ++i) g.words_[i] = ~words_[i];
    if (sz < 64) g.words_[0] &= (std::uint64_t{1} << sz) - 1;
    return g;
}

BooleanFunction BooleanFunction::shifted(Word shift) const {
    BooleanFunction g(n_);
    for (Word i = 0; i < table_size(); ++i) g.set_bit(i, bit(i ^ shift));
    return g;
}

std::string BooleanFunction::to_hex() const {
    std::uint64_t digits = (table_size() + 3) / 4;
    std::string s(digits, '0');
    static const char* kHex = "0123456789abcdef";
    for (std::uint64_t d = 0; d < digits; ++d) {
        int nibble = 0;
        for (int b = 0; b < 4; ++b) {
            std::uint64_t idx = d * 4 + b;
            if (idx < table_size() && bit(static_cast<Word>(idx))) nibble |= 1 << b;
        }
        s[digits - 1 - d] = kHex[nibble];
    }
    return s;
}

BooleanFunction BooleanFunction::from_hex(const std::string& hex, int n) {
    check_n(n);
    BooleanFunction f(n);
    std::uint64_t digits = (f.table_size() + 3) / 4;
    if (hex.size() != digits)
        throw std::invalid_argument("expected " + std::to_string(digits) + " hex digits for n=" +
                                    std::to_string(n) + ", got " + std::to_string(hex.size()));
    for (std::uint64_t i = 0; i < digits; ++i) {
        int v = hex_digit(hex[i]);
        if (v < 0) throw std::invalid_argument("non-hex character in truth table");
        std::uint64_t d = digits - 1 - i;
        for (int b = 0; b < 4; ++b) {
            std::uint64_t idx = d * 4 + b;
            if (v & (1 << b)) {
                if (idx >= f.table_size())
                    throw std::invalid_argument("truth table sets bits beyond 2^n");
                f.set_bit(static_cast<Word>(idx), true);
            }
        }
    }
    return f;
}

BooleanFunction BooleanFunction::from_table_bits(int n, std::uint64_t bits) {
    check_n(n);
    if (n > 6) throw std::invalid_argument("from_table_bits supports n <= 6");
    BooleanFunction f(n);
    if (f.table_size() < 64 && (bits >> f.table_size()))
        throw std::invalid_argument("truth table sets bits beyond 2^n");
    f.words_[0] = bits;
    return f;
}

std::uint64_t BooleanFunction::table_bits() const {
    if (n_ > 6) throw std::invalid_argument("table_bits supports n <= 6");
    return words_[0];
}

InputWord flip(const InputWord& x, const Block& s) {
    if (s.mask & ~full_mask(x.n))
        throw std::invalid_argument("block contains a position above " + std::to_string(x.n));
    return InputWord(x.n, x.bits ^ s.mask);
}

bool satisfies(const InputWord& x, const Certificate& c) {
    if (x.n != c.n) throw std::invalid_argument("dimension mismatch between input and certificate");
    return (x.bits & c.assigned) == c.values;
}

std::pair<BooleanFunction, std::vector<int>> restrict_function(const BooleanFunction& f,
                                                               const Certificate& assignment) {
    if (assignment.n != f.n()) throw std::invalid_argument("assignment dimension mismatch");
    std::vector<int> kept;
    for (int pos = 1; pos <= f.n(); ++pos)
        if (!assignment.assigns(pos)) kept.push_back(pos);

    BooleanFunction g(static_cast<int>(kept.size()));
    for (Word i = 0; i < g.table_size(); ++i) {
        Word orig = assignment.values;
        for (size_t j = 0; j < kept.size(); ++j)
            if ((i >> j) & 1) orig |= position_bit(kept[j]);
        g.set_bit(i, f.bit(orig));
    }
    return {g, kept};
}

bool subcube_constant(const BooleanFunction& f, const Certificate& assignment, bool& value) {
    if (assignment.n != f.n()) throw std::invalid_argument("assignment dimension mismatch");
    Word free = full_mask(f.n()) & ~assignment.assigned;
    value = f.bit(assignment.values);
    for (Word sub = 0;;) {
        if (f.bit(assignment.values | sub) != value) return false;
        if (sub == free) break;
        sub = (sub - free) & free;
    }
    return true;
}

bool is_certificate(const BooleanFunction& f, const Certificate& c, bool z) {
    bool v;
    return subcube_constant(f, c, v) && v == z;
}

bool is_one_certificate(const BooleanFunction& f, const Certificate& c) {
    return is_certificate(f, c, true);
}

Certificate minimize_certificate(const BooleanFunction& f, const Certificate& c) {
    bool z;
    if (!subcube_constant(f, c, z))
        throw std::invalid_argument("minimize_certificate: not a certificate of f");
    Certificate cur = c;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int pos = f.n(); pos >= 1; --pos) {
            if (!cur.assigns(pos)) continue;
            if (is_certificate(f, cur.without(pos), z)) {
                cur = cur.without(pos);
                changed = true;
                break;
            }
        }
    }
    return cur;
}

bool is_minimal_certificate(const BooleanFunction& f, const Certificate& c) {
    bool z;
    if (!subcube_constant(f, c, z)) return false;
    for (int pos = 1; pos <= f.n(); ++pos)
        if (c.assigns(pos) && is_certificate(f, c.without(pos), z)) return false;
    return true;
}

}  // namespace bflab
