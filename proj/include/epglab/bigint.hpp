#ifndef EPGLAB_BIGINT_HPP
#define EPGLAB_BIGINT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace epglab {

// Unsigned big integer, base 1e9 limbs. Only what automorphism-group orders
// need: multiply by a machine word, compare, print.
class BigUint {
public:
    BigUint() : limbs_{0} {}
    explicit BigUint(std::uint64_t v);

    BigUint& operator*=(std::uint64_t v);
    bool operator==(const BigUint& o) const { return limbs_ == o.limbs_; }
    bool operator!=(const BigUint& o) const { return !(*this == o); }

    bool fits_u64() const;
    std::uint64_t as_u64() const; // valid only when fits_u64()
    std::string to_string() const;

private:
    std::vector<std::uint32_t> limbs_; // little-endian, base 1e9
};

} // namespace epglab

#endif
