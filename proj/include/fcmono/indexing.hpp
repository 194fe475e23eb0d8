#ifndef FCMONO_INDEXING_HPP
#define FCMONO_INDEXING_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fcmono {

// Element of {0,1}^m indexing the local solutions and matrix rows.
// Bit 1 is least significant in position(), so the enumeration runs
// (0,...,0), (1,0,...,0), (0,1,...,0), (1,1,...,0), ..., (1,...,1).
class BinaryIndex {
public:
    BinaryIndex() : m_(0), bits_(0) {}
    BinaryIndex(int m, std::uint32_t bits) : m_(m), bits_(bits) {
        if (m < 0 || m > 20) throw std::invalid_argument("BinaryIndex: bad m");
        if (bits >> m) throw std::invalid_argument("BinaryIndex: bits out of range");
    }
    explicit BinaryIndex(const std::vector<int>& b) : m_((int)b.size()), bits_(0) {
        for (int k = 0; k < m_; ++k) {
            if (b[k] != 0 && b[k] != 1) throw std::invalid_argument("BinaryIndex: entries must be 0/1");
            bits_ |= std::uint32_t(b[k]) << k;
        }
    }

    static BinaryIndex zero(int m) { return BinaryIndex(m, 0); }
    static BinaryIndex ones(int m) { return BinaryIndex(m, (std::uint32_t(1) << m) - 1); }
    static BinaryIndex unit(int m, int k) {  // e_k, 1-based k
        if (k < 1 || k > m) throw std::invalid_argument("BinaryIndex::unit: k out of range");
        return BinaryIndex(m, std::uint32_t(1) << (k - 1));
    }
    static BinaryIndex from_position(int m, int pos) { return BinaryIndex(m, std::uint32_t(pos)); }

    int m() const { return m_; }
    int bit(int k) const { return (bits_ >> (k - 1)) & 1; }  // i_k, 1-based
    int position() const { return (int)bits_; }
    int weight() const {
        int w = 0;
        for (int k = 0; k < m_; ++k) w += (bits_ >> k) & 1;
        return w;
    }

    bool operator==(const BinaryIndex& o) const { return m_ == o.m_ && bits_ == o.bits_; }
    bool operator!=(const BinaryIndex& o) const { return !(*this == o); }

    // "i1 i2 ... im" as a bit string, i1 first.
    std::string to_string() const {
        std::string s;
        for (int k = 1; k <= m_; ++k) s += char('0' + bit(k));
        return s;
    }

    std::uint32_t raw() const { return bits_; }

private:
    int m_;
    std::uint32_t bits_;
};

inline void check_same_m(const BinaryIndex& a, const BinaryIndex& b) {
    if (a.m() != b.m()) throw std::invalid_argument("BinaryIndex: mixed m");
}

inline int position(const BinaryIndex& I) { return I.position(); }
inline int weight(const BinaryIndex& I) { return I.weight(); }

// J <= I componentwise.
inline bool leq(const BinaryIndex& J, const BinaryIndex& I) {
    check_same_m(J, I);
    return (J.raw() & ~I.raw()) == 0;
}

// Componentwise product I.I' (meet in the subset lattice).
inline BinaryIndex meet(const BinaryIndex& I, const BinaryIndex& J) {
    check_same_m(I, J);
    return BinaryIndex(I.m(), I.raw() & J.raw());
}

inline std::vector<BinaryIndex> all_indices(int m) {
    std::vector<BinaryIndex> v;
    v.reserve(std::size_t(1) << m);
    for (int p = 0; p < (1 << m); ++p) v.push_back(BinaryIndex::from_position(m, p));
    return v;
}

// All J <= I, in position order.
inline std::vector<BinaryIndex> lower_set(const BinaryIndex& I) {
    std::vector<BinaryIndex> v;
    // enumerate submasks
    std::uint32_t mask = I.raw();
    std::uint32_t sub = 0;
    while (true) {
        v.push_back(BinaryIndex(I.m(), sub));
        if (sub == mask) break;
        sub = (sub - mask) & mask;
    }
    return v;
}

}  // namespace fcmono

#endif
