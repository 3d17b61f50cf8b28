#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>

namespace hasse {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

// for (auto i = first_bit(bs); i != Bitset::npos; i = bs.find_next(i)) ...
inline Bitset::size_type first_bit(const Bitset& bs) { return bs.find_first(); }

}  // namespace hasse
