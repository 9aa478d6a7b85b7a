#include "epglab/bigint.hpp"

namespace epglab {

namespace {
constexpr std::uint64_t kBase = 1000000000ULL;
}

BigUint::BigUint(std::uint64_t v) {
    do {
        limbs_.push_back(static_cast<std::uint32_t>(v % kBase));
        v /= kBase;
    } while (v != 0);
}

BigUint& BigUint::operator*=(std::uint64_t v) {
    if (v == 0) {
        limbs_.assign(1, 0);
        return *this;
    }
    if (v >= kBase) { // split into base-1e9 digits: x*v = ((x*hi)*base) + x*lo
        BigUint lo = *this;
        lo *= v % kBase;
        *this *= v / kBase; // recursion terminates: v/kBase < v
        limbs_.insert(limbs_.begin(), 0); // times base
        std::uint64_t carry = 0;
        if (limbs_.size() < lo.limbs_.size())
            limbs_.resize(lo.limbs_.size(), 0);
        for (size_t i = 0; i < limbs_.size(); ++i) {
            std::uint64_t s = carry + limbs_[i] + (i < lo.limbs_.size() ? lo.limbs_[i] : 0);
            limbs_[i] = static_cast<std::uint32_t>(s % kBase);
            carry = s / kBase;
        }
        if (carry)
            limbs_.push_back(static_cast<std::uint32_t>(carry));
        while (limbs_.size() > 1 && limbs_.back() == 0)
            limbs_.pop_back();
        return *this;
    }
    std::uint64_t carry = 0;
    for (auto& limb : limbs_) {
        std::uint64_t cur = static_cast<std::uint64_t>(limb) * v + carry;
        limb = static_cast<std::uint32_t>(cur % kBase);
        carry = cur / kBase;
    }
    while (carry) {
        limbs_.push_back(static_cast<std::uint32_t>(carry % kBase));
        carry /= kBase;
    }
    return *this;
}

bool BigUint::fits_u64() const {
    if (limbs_.size() > 3)
        return false;
    unsigned __int128 v = 0;
    for (size_t i = limbs_.size(); i-- > 0;)
        v = v * kBase + limbs_[i];
    return v <= static_cast<unsigned __int128>(~0ULL);
}

std::uint64_t BigUint::as_u64() const {
    std::uint64_t v = 0;
    for (size_t i = limbs_.size(); i-- > 0;)
        v = v * kBase + limbs_[i];
    return v;
}

std::string BigUint::to_string() const {
    std::string out = std::to_string(limbs_.back());
    for (size_t i = limbs_.size() - 1; i-- > 0;) {
        std::string part = std::to_string(limbs_[i]);
        out += std::string(9 - part.size(), '0') + part;
    }
    return out;
}

} // namespace epglab
