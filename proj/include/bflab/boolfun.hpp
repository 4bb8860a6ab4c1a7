#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bflab/errors.hpp"

namespace bflab {

/// Input positions are 1-based, matching the usual x_1..x_n notation.
/// Position j lives in bit j-1 of a Word, so the truth-table index of an
/// input is simply its Word value: index = sum over j of x_j * 2^(j-1).
using Word = std::uint32_t;

constexpr int kMaxPositions = 24;

inline Word position_bit(int pos) { return Word{1} << (pos - 1); }
inline Word full_mask(int n) { return n >= 32 ? ~Word{0} : (Word{1} << n) - 1; }

/// An n-bit input word x_1..x_n.
struct InputWord {
    int n = 0;
    Word bits = 0;

    InputWord() = default;
    InputWord(int n_, Word bits_);

    bool get(int pos) const { return (bits >> (pos - 1)) & 1; }

    /// Bit string x_1..x_n, position 1 leftmost.
    std::string str() const;
    static InputWord parse(const std::string& text);

    friend bool operator==(const InputWord&, const InputWord&) = default;
};

/// A set of input positions, kept as a bitmask.
struct Block {
    Word mask = 0;

    Block() = default;
    explicit Block(Word m) : mask(m) {}

    int size() const;
    bool contains(int pos) const { return (mask >> (pos - 1)) & 1; }
    bool disjoint(const Block& other) const { return (mask & other.mask) == 0; }

    /// Ascending list of member positions.
    std::vector<int> positions() const;

    friend bool operator==(const Block&, const Block&) = default;
};

/// A partial assignment c : S -> {0,1}.  `values` bits outside `assigned`
/// are kept at zero (normalized storage).  The text form uses the alphabet
/// {0,1,*} with position 1 leftmost, so certificates can be written the
/// same way they appear in matrix notation, e.g. "0*1100".
struct Certificate {
    int n = 0;
    Word assigned = 0;
    Word values = 0;

    Certificate() = default;
    Certificate(int n_, Word assigned_, Word values_);

    int length() const;
    bool empty() const { return assigned == 0; }
    bool assigns(int pos) const { return (assigned >> (pos - 1)) & 1; }
    bool value_at(int pos) const { return (values >> (pos - 1)) & 1; }

    /// Positions this certificate sets to 1 (resp. 0).
    Word ones() const { return values; }
    Word zeros() const { return assigned & ~values; }

    Certificate with(int pos, bool value) const;
    Certificate without(int pos) const;

    /// True if the two assignments agree wherever both assign.
    bool compatible(const Certificate& other) const {
        return ((values ^ other.values) & assigned & other.assigned) == 0;
    }
    /// Union of two compatible assignments.
    Certificate merged(const Certificate& other) const;

    std::string str() const;
    static Certificate parse(const std::string& text);

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Dense bit-packed truth table of f : {0,1}^n -> {0,1}, n <= 24.
class BooleanFunction {
public:
    BooleanFunction() : BooleanFunction(0) {}
    explicit BooleanFunction(int n);

    int n() const { return n_; }
    std::uint64_t table_size() const { return std::uint64_t{1} << n_; }

    bool bit(Word index) const {
        return (words_[index >> 6] >> (index & 63)) & 1;
    }
    void set_bit(Word index, bool value) {
        std::uint64_t m = std::uint64_t{1} << (index & 63);
        if (value)
            words_[index >> 6] |= m;
        else
            words_[index >> 6] &= ~m;
    }

    bool evaluate(const InputWord& x) const;

    bool is_constant() const;
    bool constant_value() const { return bit(0); }
    bool has_value(bool z) const;

    BooleanFunction negated() const;
    /// g(x) = f(x xor shift); reindexes inputs so that `shift` becomes all-0.
    BooleanFunction shifted(Word shift) const;

    /// Hex form: ceil(2^n/4) lowercase digits, most significant nibble first,
    /// table bits packed LSB-first.  OR_2 -> "e", AND_2 -> "8".
    std::string to_hex() const;
    static BooleanFunction from_hex(const std::string& hex, int n);

    /// Truth table as an integer, for n <= 6 (used by exhaustive sweeps).
    static BooleanFunction from_table_bits(int n, std::uint64_t bits);
    std::uint64_t table_bits() const;

    friend bool operator==(const BooleanFunction&, const BooleanFunction&) = default;

private:
    int n_;
    std::vector<std::uint64_t> words_;
};

/// f(x) for a raw table index.
inline bool evaluate(const BooleanFunction& f, const InputWord& x) { return f.evaluate(x); }

/// x with every position of S complemented; involution.
InputWord flip(const InputWord& x, const Block& s);

/// True iff x agrees with c on every assigned position.
bool satisfies(const InputWord& x, const Certificate& c);

/// The subfunction on the unassigned positions of `assignment`, with the
/// surviving positions renumbered in ascending original order.  Second
/// member maps new position (1-based) to original position.
std::pair<BooleanFunction, std::vector<int>> restrict_function(const BooleanFunction& f,
                                                               const Certificate& assignment);

/// Scan of the subcube selected by `assignment`: true iff f is constant
/// there (early exit on the first mismatch).  `value` receives the constant.
bool subcube_constant(const BooleanFunction& f, const Certificate& assignment, bool& value);

/// True iff f restricted by c is identically 1 (resp. 0).
bool is_one_certificate(const BooleanFunction& f, const Certificate& c);
bool is_certificate(const BooleanFunction& f, const Certificate& c, bool z);

/// Greedily removes positions from c while it remains a certificate of the
/// same value; the highest-index removable position is dropped first and
/// the scan restarts, so the result is deterministic.  Throws
/// std::invalid_argument if c is not a certificate of f at all.
Certificate minimize_certificate(const BooleanFunction& f, const Certificate& c);

/// True iff no single assigned position can be dropped from c.
bool is_minimal_certificate(const BooleanFunction& f, const Certificate& c);

}  // namespace bflab
